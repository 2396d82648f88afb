#include "luttff/series.hpp"

#include <cmath>

#include "luttff/errors.hpp"
#include "luttff/formfactor.hpp"
#include "luttff/parallel.hpp"

namespace luttff {

double level_sum_closed(int m, double a) {
  if (m < 0) throw domain_error("level_sum_closed: level must be >= 0");
  const double a2 = a * a;
  double c = 1.0;
  for (int j = 0; j < m; ++j) c *= (a2 + j) / (j + 1.0);
  return c;
}

SumRuleReport level_sum_enumerated(int m, double a, int cap) {
  const auto states = enumerate_level(m, cap);
  const VertexWeight weight{a};
  const auto terms = parallel_values(states.size(), [&](std::size_t i) {
    const FormFactorValue f = formfactor(states[i], weight);
    if (f.zero) return 0.0;
    return std::exp(2.0 * f.log_magnitude);
  });
  SumRuleReport report;
  report.level = m;
  report.state_count = static_cast<std::int64_t>(states.size());
  report.enumerated_sum = kahan_sum(terms);
  report.closed_form = level_sum_closed(m, a);
  report.rel_err =
      report.closed_form == 0.0
          ? std::fabs(report.enumerated_sum)
          : std::fabs(report.enumerated_sum - report.closed_form) /
                std::fabs(report.closed_form);
  return report;
}

std::complex<double> chiral_correlator(std::complex<double> z, double a) {
  if (std::abs(z) > 1.0 + 1e-12)
    throw domain_error("chiral_correlator: |z| must be <= 1");
  if (z == std::complex<double>(1.0, 0.0))
    throw domain_error("chiral_correlator: singular at z = 1");
  if (a == 0.0) return {1.0, 0.0};
  return std::pow(std::complex<double>(1.0, 0.0) - z,
                  std::complex<double>(-a * a, 0.0));
}

SeriesEvaluation reconstruct_correlator(double r, double theta, double a,
                                        int truncation, int cap) {
  if (!(r > 0.0 && r < 1.0))
    throw domain_error(
        "reconstruct_correlator: requires 0 < r < 1 (the undamped series is "
        "only conditionally convergent)");
  if (truncation < 0)
    throw domain_error("reconstruct_correlator: truncation must be >= 0");

  SeriesEvaluation eval;
  eval.argument = std::polar(r, theta);
  eval.truncation = truncation;
  eval.closed_form = chiral_correlator(eval.argument, a);

  std::complex<double> zm{1.0, 0.0};
  std::complex<double> partial{0.0, 0.0};
  for (int m = 0; m <= truncation; ++m) {
    partial += level_sum_enumerated(m, a, cap).enumerated_sum * zm;
    zm *= eval.argument;
  }
  eval.partial_sum = partial;

  // |sum_{m>M} c_m z^m| <= sum_{m>M} c_m r^m. Terms are accumulated through
  // the coefficient recurrence until they drop below 1e-16 past the ratio
  // peak; the remainder is closed off geometrically.
  const double a2 = a * a;
  double coeff = level_sum_closed(truncation, a);
  double term = coeff * std::pow(r, truncation);
  double tail = 0.0;
  int m = truncation;
  double ratio = 0.0;
  while (true) {
    ratio = r * (a2 + m) / (m + 1.0);
    term *= ratio;
    ++m;
    if (term == 0.0) break;
    tail += term;
    if (ratio < 1.0 && term < 1e-16) break;
    if (m > 100000000)
      throw resource_error("reconstruct_correlator: tail bound stalled");
  }
  if (term > 0.0 && ratio < 1.0) {
    const double next_ratio = r * (a2 + m) / (m + 1.0);
    const double q = std::max(ratio, next_ratio);
    if (q < 1.0) tail += term * q / (1.0 - q);
  }
  eval.tail_bound = tail;
  return eval;
}

}  // namespace luttff
