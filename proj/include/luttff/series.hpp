#pragma once

#include <complex>
#include <cstdint>

#include "luttff/states.hpp"

namespace luttff {

// One level of the moduli sum rule: the exhaustive sum over all p(m) states
// against the closed Gamma ratio.
struct SumRuleReport {
  int level = 0;
  double enumerated_sum = 0.0;
  double closed_form = 0.0;
  double rel_err = 0.0;
  std::int64_t state_count = 0;
};

// Partial reconstruction of the chiral correlator from the formfactor
// series at damped argument z = r e^{i theta}, |z| < 1, together with a
// rigorous bound on the discarded tail.
struct SeriesEvaluation {
  std::complex<double> argument;
  int truncation = 0;
  std::complex<double> partial_sum;
  std::complex<double> closed_form;
  double tail_bound = 0.0;
};

// Coefficient of z^m in (1-z)^{-a^2}: Gamma(a^2+m)/(Gamma(m+1) Gamma(a^2)).
// Satisfies c_{m+1}/c_m = (a^2+m)/(m+1); c_m = 0 for m >= 1 at a = 0.
double level_sum_closed(int m, double a);

// Sum over enumerate_level(m) of |F(p_i, q_i)|^2, Kahan-compensated in the
// canonical state order, reported against the closed form.
SumRuleReport level_sum_enumerated(int m, double a,
                                   int cap = kDefaultEnumerationCap);

// (1-z)^{-a^2}, principal branch. Throws on z = 1.
std::complex<double> chiral_correlator(std::complex<double> z, double a);

// partial_sum = sum_{m<=M} [enumerated level sum] z^m and
// tail_bound >= |sum_{m>M} c_m z^m| via the coefficient recurrence.
// Refuses r >= 1: the undamped series converges only conditionally, so the
// identity is asserted where the absolute bound exists.
SeriesEvaluation reconstruct_correlator(double r, double theta, double a,
                                        int truncation,
                                        int cap = kDefaultEnumerationCap);

}  // namespace luttff
