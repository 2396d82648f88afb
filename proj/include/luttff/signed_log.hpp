#pragma once

#include <cmath>

namespace luttff {

// Real number stored as log|value| plus sign. Gamma-function products over
// two dozen particle-hole momenta overflow doubles long before the final
// formfactor does, so all factor accumulation happens in this form.
struct SignedLog {
  double log_abs = 0.0;
  int sign = 1;  // +1 or -1; ignored when zero is set
  bool zero = false;

  static SignedLog one() { return {}; }
  static SignedLog exact_zero() { return {0.0, 1, true}; }
  static SignedLog from_value(double v);

  SignedLog& operator*=(const SignedLog& other);
  friend SignedLog operator*(SignedLog a, const SignedLog& b) {
    a *= b;
    return a;
  }

  double value() const { return zero ? 0.0 : sign * std::exp(log_abs); }
};

// Rising factorial a (a+1) ... (a+n-1) for integer n >= 0, evaluated in
// log-space with sign tracking. This is the pole-free continuation of
// Gamma(a+n)/Gamma(a): when a is a non-positive integer inside the window
// the product vanishes exactly and the result carries the zero flag.
SignedLog log_rising(double a, int n);

// log(n!)
double log_factorial(int n);

}  // namespace luttff
