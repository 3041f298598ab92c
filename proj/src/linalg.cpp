#include "mcat/linalg.hpp"

#include <cstdint>

#include "mcat/error.hpp"

namespace mcat {

std::optional<std::vector<Rational>> solve_rational(RationalMatrix a, std::vector<Rational> b) {
  const std::size_t n = a.rows();
  if (a.cols() != n || b.size() != n) fail(ErrorCode::invalid_argument, "solve_rational: shape mismatch");
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return std::nullopt;
    if (p != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(b[k], b[p]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / a(k, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        if (a(k, j) != 0) a(i, j) -= f * a(k, j);
      }
      b[i] -= f * b[k];
      a(i, k) = 0;
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Rational s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      if (a(i, j) != 0) s -= a(i, j) * x[j];
    }
    x[i] = s / a(i, i);
  }
  return x;
}

std::optional<Rational> rational_reconstruction(const Integer& u, const Integer& m) {
  if (m <= 1) return std::nullopt;
  Integer bound = sqrt(Integer(m / 2));
  Integer r0 = m, r1 = u % m;
  if (r1 < 0) r1 += m;
  Integer t0 = 0, t1 = 1;
  while (r1 > bound) {
    Integer q = r0 / r1;
    Integer r2 = r0 - q * r1;
    Integer t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (t1 == 0 || abs(t1) > bound) return std::nullopt;
  if (t1 < 0) {
    t1 = -t1;
    r1 = -r1;
  }
  Integer g = gcd(r1, t1);
  if (g != 1) return std::nullopt;
  return Rational(r1, t1);
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Montgomery arithmetic modulo an odd p < 2^62.
class MontField {
 public:
  explicit MontField(u64 p) : p_(p) {
    u64 inv = p;  // Newton iteration for p^{-1} mod 2^64
    for (int i = 0; i < 6; ++i) inv *= 2 - p * inv;
    neg_inv_ = ~inv + 1;
    const u128 r = (static_cast<u128>(1) << 64) % p;
    r2_ = static_cast<u64>((r * r) % p);
  }

  u64 prime() const { return p_; }

  u64 redc(u128 t) const {
    const u64 m = static_cast<u64>(t) * neg_inv_;
    u64 out = static_cast<u64>((t + static_cast<u128>(m) * p_) >> 64);
    return out >= p_ ? out - p_ : out;
  }
  u64 mul(u64 a, u64 b) const { return redc(static_cast<u128>(a) * b); }
  u64 add(u64 a, u64 b) const {
    u64 s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p_ - b; }
  u64 to_mont(u64 a) const { return mul(a % p_, r2_); }
  u64 from_mont(u64 a) const { return redc(a); }

  u64 to_mont(const Integer& z) const {
    Integer r = z % Integer(static_cast<unsigned long>(p_));
    if (r < 0) r += static_cast<unsigned long>(p_);
    return to_mont(static_cast<u64>(r.get_ui()));
  }

  u64 inverse(u64 a) const {
    u64 result = to_mont(1);
    u64 base = a;
    for (u64 e = p_ - 2; e > 0; e >>= 1) {
      if (e & 1) result = mul(result, base);
      base = mul(base, base);
    }
    return result;
  }

 private:
  u64 p_;
  u64 neg_inv_ = 0;
  u64 r2_ = 0;
};

// Dense LU of a square matrix modulo p, with row pivoting.
struct ModularLU {
  std::size_t n = 0;
  std::vector<u64> lu;           // Montgomery form, unit-lower L below the diagonal
  std::vector<std::size_t> perm;  // row i of PA is row perm[i] of A
  std::vector<u64> inv_diag;

  bool factor(const SparseIntegerMatrix& a, const MontField& f) {
    n = a.size();
    lu.assign(n * n, 0);
    perm.resize(n);
    inv_diag.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
      perm[i] = i;
      for (const auto& [j, v] : a[i]) lu[i * n + j] = f.to_mont(v);
    }
    for (std::size_t k = 0; k < n; ++k) {
      std::size_t p = k;
      while (p < n && lu[p * n + k] == 0) ++p;
      if (p == n) return false;
      if (p != k) {
        for (std::size_t j = 0; j < n; ++j) std::swap(lu[k * n + j], lu[p * n + j]);
        std::swap(perm[k], perm[p]);
      }
      const u64 inv = f.inverse(lu[k * n + k]);
      inv_diag[k] = inv;
      const u64* pivot_row = &lu[k * n];
      for (std::size_t i = k + 1; i < n; ++i) {
        u64* row = &lu[i * n];
        if (row[k] == 0) continue;
        const u64 factor = f.mul(row[k], inv);
        row[k] = factor;
        for (std::size_t j = k + 1; j < n; ++j) {
          if (pivot_row[j] != 0) row[j] = f.sub(row[j], f.mul(factor, pivot_row[j]));
        }
      }
    }
    return true;
  }

  // b in Montgomery form, indexed like the original rows; returns x in Montgomery form.
  std::vector<u64> solve(const std::vector<u64>& b, const MontField& f) const {
    std::vector<u64> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      u64 s = b[perm[i]];
      const u64* row = &lu[i * n];
      for (std::size_t j = 0; j < i; ++j) {
        if (row[j] != 0) s = f.sub(s, f.mul(row[j], y[j]));
      }
      y[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      u64 s = y[i];
      const u64* row = &lu[i * n];
      for (std::size_t j = i + 1; j < n; ++j) {
        if (row[j] != 0) s = f.sub(s, f.mul(row[j], y[j]));
      }
      y[i] = f.mul(s, inv_diag[i]);
    }
    return y;
  }
};

u64 lifting_prime(int index) {
  static const std::vector<u64> primes = [] {
    std::vector<u64> out;
    Integer z = Integer(1) << 62;
    for (int i = 0; i < 8; ++i) {
      Integer prev = z - 1;
      // Largest primes below 2^62, in decreasing order.
      while (mpz_probab_prime_p(prev.get_mpz_t(), 30) == 0) prev -= 1;
      out.push_back(static_cast<u64>(prev.get_ui()));
      z = prev;
    }
    return out;
  }();
  return primes.at(static_cast<std::size_t>(index));
}

std::optional<std::vector<Rational>> reconstruct_all(const std::vector<Integer>& x, const Integer& modulus) {
  std::vector<Rational> out;
  out.reserve(x.size());
  for (const auto& xi : x) {
    auto r = rational_reconstruction(xi, modulus);
    if (!r) return std::nullopt;
    out.push_back(std::move(*r));
  }
  return out;
}

}  // namespace

std::optional<std::vector<Rational>> solve_padic(
    const SparseIntegerMatrix& a, const std::vector<Integer>& b,
    const std::function<bool(const std::vector<Rational>&)>& accept) {
  const std::size_t n = a.size();
  if (b.size() != n) fail(ErrorCode::invalid_argument, "solve_padic: shape mismatch");
  for (const auto& row : a) {
    for (const auto& [j, v] : row) {
      if (j >= n) fail(ErrorCode::invalid_argument, "solve_padic: column index out of range");
    }
  }
  if (n == 0) return std::vector<Rational>{};

  constexpr int kPrimeAttempts = 4;
  for (int attempt = 0; attempt < kPrimeAttempts; ++attempt) {
    const MontField field(lifting_prime(attempt));
    ModularLU lu;
    if (!lu.factor(a, field)) continue;

    const Integer p(static_cast<unsigned long>(field.prime()));
    std::vector<Integer> residual = b;
    std::vector<Integer> x(n, 0);
    Integer modulus = 1;
    std::vector<u64> rhs(n);
    // A certified solution has bounded height, so this cap only stops
    // runaway lifting when `accept` keeps rejecting.
    constexpr int kMaxSteps = 4000;
    for (int step = 0; step < kMaxSteps; ++step) {
      for (std::size_t i = 0; i < n; ++i) rhs[i] = field.to_mont(residual[i]);
      const auto digit_m = lu.solve(rhs, field);
      std::vector<Integer> digit(n);
      for (std::size_t i = 0; i < n; ++i) {
        digit[i] = static_cast<unsigned long>(field.from_mont(digit_m[i]));
        if (digit[i] != 0) x[i] += digit[i] * modulus;
      }
      modulus *= p;
      for (std::size_t i = 0; i < n; ++i) {
        Integer s = residual[i];
        for (const auto& [j, v] : a[i]) {
          if (digit[j] != 0) s -= v * digit[j];
        }
        // Exact by construction of the digit.
        mpz_divexact(residual[i].get_mpz_t(), s.get_mpz_t(), p.get_mpz_t());
      }
      if (auto candidate = reconstruct_all(x, modulus)) {
        if (accept(*candidate)) return candidate;
      }
    }
    fail(ErrorCode::internal, "p-adic lifting did not converge to an accepted solution");
  }
  return std::nullopt;
}

}  // namespace mcat
