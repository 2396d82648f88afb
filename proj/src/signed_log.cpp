#include "luttff/signed_log.hpp"

namespace luttff {

SignedLog SignedLog::from_value(double v) {
  if (v == 0.0) return exact_zero();
  return {std::log(std::fabs(v)), v > 0.0 ? 1 : -1, false};
}

SignedLog& SignedLog::operator*=(const SignedLog& other) {
  if (zero || other.zero) {
    *this = exact_zero();
    return *this;
  }
  log_abs += other.log_abs;
  sign *= other.sign;
  return *this;
}

SignedLog log_rising(double a, int n) {
  SignedLog out;
  for (int j = 0; j < n; ++j) {
    const double factor = a + j;
    if (factor == 0.0) return SignedLog::exact_zero();
    out.log_abs += std::log(std::fabs(factor));
    if (factor < 0.0) out.sign = -out.sign;
  }
  return out;
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

}  // namespace luttff
