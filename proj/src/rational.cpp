#include "mcat/rational.hpp"

#include "mcat/error.hpp"

namespace mcat {

namespace {

bool valid_integer_text(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer parse_integer(std::string_view s) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  return Integer(std::string(s), 10);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const auto num_text = text.substr(0, slash);
  if (!valid_integer_text(num_text)) {
    fail(ErrorCode::invalid_argument, "not a rational number: '" + std::string(text) + "'");
  }
  Rational value(parse_integer(num_text));
  if (slash != std::string_view::npos) {
    const auto den_text = text.substr(slash + 1);
    if (!valid_integer_text(den_text) || den_text.front() == '-' || den_text.front() == '+') {
      fail(ErrorCode::invalid_argument, "not a rational number: '" + std::string(text) + "'");
    }
    Integer den = parse_integer(den_text);
    if (den == 0) fail(ErrorCode::invalid_argument, "zero denominator in '" + std::string(text) + "'");
    value = Rational(value.get_num(), den);
    value.canonicalize();
  }
  return value;
}

std::string to_string(const Rational& value) { return value.get_str(); }

std::string to_string(const Integer& value) { return value.get_str(); }

Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

Integer factorial(int n) {
  if (n < 0) fail(ErrorCode::invalid_argument, "factorial of a negative number");
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

}  // namespace mcat
