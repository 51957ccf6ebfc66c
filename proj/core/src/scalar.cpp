#include "gw/scalar.hpp"

#include <cctype>
#include <stdexcept>

namespace gw {

namespace {

bool is_integer_literal(std::string_view s, bool allow_sign) {
  if (allow_sign && !s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Scalar parse_scalar(std::string_view text) {
  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  if (!is_integer_literal(num, true)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  mpz_class p(std::string(num.front() == '+' ? num.substr(1) : num));
  mpz_class q = 1;
  if (slash != std::string_view::npos) {
    const auto den = text.substr(slash + 1);
    if (!is_integer_literal(den, false)) {
      throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
    }
    q = mpz_class(std::string(den));
    if (q == 0) throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  Scalar r(p, q);
  r.canonicalize();
  return r;
}

std::string to_string(const Scalar& value) { return value.get_str(); }

Scalar factorial(int n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return Scalar(f);
}

Scalar binomial(long top, int k) {
  if (k < 0) return 0;
  mpz_class num = 1;
  for (int i = 0; i < k; ++i) num *= (top - i);
  Scalar r(num, factorial(k).get_num());
  r.canonicalize();
  return r;
}

}  // namespace gw
