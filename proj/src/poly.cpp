#include "mcat/poly.hpp"

#include <utility>

#include "mcat/error.hpp"

namespace mcat {

WeightPoly::WeightPoly(long constant) {
  if (constant != 0) terms_[{}] = constant;
}

WeightPoly::WeightPoly(const Integer& constant) {
  if (constant != 0) terms_[{}] = constant;
}

WeightPoly WeightPoly::monomial(int a, int b, int c, const Integer& coeff) {
  if (a < 0 || b < 0 || c < 0) fail(ErrorCode::internal, "negative exponent in monomial");
  WeightPoly p;
  if (coeff != 0) p.terms_[{a, b, c}] = coeff;
  return p;
}

Integer WeightPoly::coefficient(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

void WeightPoly::add_term(const Exponent& e, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

WeightPoly& WeightPoly::operator+=(const WeightPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

WeightPoly& WeightPoly::operator-=(const WeightPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, -c);
  return *this;
}

WeightPoly operator*(const WeightPoly& lhs, const WeightPoly& rhs) {
  WeightPoly out;
  for (const auto& [e1, c1] : lhs.terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      out.add_term({e1.a + e2.a, e1.b + e2.b, e1.c + e2.c}, c1 * c2);
    }
  }
  return out;
}

WeightPoly& WeightPoly::operator*=(const WeightPoly& other) { return *this = *this * other; }

WeightPoly& WeightPoly::operator*=(const Integer& scalar) {
  if (scalar == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, c] : terms_) c *= scalar;
  return *this;
}

WeightPoly WeightPoly::operator-() const {
  WeightPoly out = *this;
  for (auto& [e, c] : out.terms_) c = -c;
  return out;
}

namespace {

Rational power(const Rational& x, int k) {
  Rational out = 1;
  for (int i = 0; i < k; ++i) out *= x;
  return out;
}

}  // namespace

Rational WeightPoly::eval(const Rational& alpha, const Rational& beta, const Rational& q) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) sum += power(alpha, e.a) * power(beta, e.b) * power(q, e.c) * c;
  return sum;
}

WeightPoly WeightPoly::specialize_to_one(bool alpha, bool beta, bool q) const {
  WeightPoly out;
  for (const auto& [e, c] : terms_) {
    out.add_term({alpha ? 0 : e.a, beta ? 0 : e.b, q ? 0 : e.c}, c);
  }
  return out;
}

WeightPoly WeightPoly::q_slice(int c) const {
  WeightPoly out;
  for (const auto& [e, coeff] : terms_) {
    if (e.c == c) out.add_term({e.a, e.b, 0}, coeff);
  }
  return out;
}

WeightPoly WeightPoly::shifted(int a, int b, int c) const {
  WeightPoly out;
  for (const auto& [e, coeff] : terms_) {
    Exponent s{e.a + a, e.b + b, e.c + c};
    if (s.a < 0 || s.b < 0 || s.c < 0) fail(ErrorCode::internal, "shift produced a negative exponent");
    out.terms_.emplace(s, coeff);
  }
  return out;
}

std::optional<WeightPoly> WeightPoly::divide_exact(const WeightPoly& divisor) const {
  if (divisor.is_zero()) return std::nullopt;
  const auto& [lead_e, lead_c] = *divisor.terms_.rbegin();
  WeightPoly rem = *this;
  WeightPoly quotient;
  // Lex leading terms strictly decrease, so this terminates.
  while (!rem.is_zero()) {
    const auto [e, c] = *rem.terms_.rbegin();
    Exponent qe{e.a - lead_e.a, e.b - lead_e.b, e.c - lead_e.c};
    if (qe.a < 0 || qe.b < 0 || qe.c < 0) return std::nullopt;
    if (!mpz_divisible_p(c.get_mpz_t(), lead_c.get_mpz_t())) return std::nullopt;
    Integer qc = c / lead_c;
    WeightPoly term = monomial(qe.a, qe.b, qe.c, qc);
    quotient += term;
    rem -= term * divisor;
  }
  return quotient;
}

const Exponent& WeightPoly::leading_exponent() const {
  if (terms_.empty()) fail(ErrorCode::internal, "leading exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

bool WeightPoly::all_coefficients_nonnegative() const {
  for (const auto& [e, c] : terms_) {
    if (c < 0) return false;
  }
  return true;
}

std::string WeightPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out += "-";
    } else {
      out += c < 0 ? " - " : " + ";
    }
    first = false;
    std::string mono;
    auto var = [&](const char* name, int k) {
      if (k == 0) return;
      if (!mono.empty()) mono += "*";
      mono += name;
      if (k > 1) mono += "^" + std::to_string(k);
    };
    var("a", e.a);
    var("b", e.b);
    var("q", e.c);
    if (mono.empty()) {
      out += mag.get_str();
    } else if (mag == 1) {
      out += mono;
    } else {
      out += mag.get_str() + "*" + mono;
    }
  }
  return out;
}

WeightPoly bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  for (const auto& row : m) {
    if (row.size() != n) fail(ErrorCode::invalid_argument, "determinant of a non-square matrix");
  }
  if (n == 0) return WeightPoly(1);
  bool negate = false;
  WeightPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return WeightPoly();
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        WeightPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = num.divide_exact(prev);
        if (!q) fail(ErrorCode::internal, "Bareiss step left a remainder");
        m[i][j] = std::move(*q);
      }
      m[i][k] = WeightPoly();
    }
    prev = m[k][k];
  }
  WeightPoly det = m[n - 1][n - 1];
  return negate ? -det : det;
}

}  // namespace mcat
