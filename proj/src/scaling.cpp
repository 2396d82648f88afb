#include "luttff/scaling.hpp"

#include <Eigen/Dense>
#include <cmath>

#include "luttff/errors.hpp"

namespace luttff {

double exponent(OperatorKind kind, int m, double xi) {
  if (!(xi > 0.0)) throw domain_error("exponent: xi must be > 0");
  if (m < 0) throw domain_error("exponent: harmonic must be >= 0");
  switch (kind) {
    case OperatorKind::boson:
      return xi / 2.0 + 2.0 * m * m / xi;
    case OperatorKind::fermion:
      return xi / 2.0 + (2 * m + 1) * (2 * m + 1) / (2.0 * xi);
    case OperatorKind::density:
      if (m == 0)
        throw domain_error("exponent: density m = 0 is the gradient term");
      return 2.0 * m * m / xi;
  }
  throw domain_error("exponent: unknown operator kind");
}

double chord_distance(double x, double length) {
  return length * std::sin(M_PI * x / length);
}

double evaluate_correlator(const CorrelatorModel& model, double x,
                           double length) {
  if (!(x > 0.0) || !(x < length))
    throw domain_error("evaluate_correlator: x must lie in (0, L)");
  const double chord = chord_distance(x, length);
  double value = model.constant_offset;
  for (const Harmonic& h : model.harmonics) {
    const double osc = (model.kind == OperatorKind::fermion)
                           ? std::sin(h.wavenumber * x)
                           : std::cos(h.wavenumber * x);
    value += h.amplitude * osc / std::pow(chord, h.exponent);
  }
  if (model.uniform_term) {
    value += model.uniform_term->sign_convention *
             model.uniform_term->coefficient / (chord * chord);
  }
  return value;
}

CorrelatorModel make_model(OperatorKind kind, double xi, double p_fermi,
                           const std::vector<int>& harmonics) {
  CorrelatorModel model;
  model.kind = kind;
  for (int m : harmonics) {
    Harmonic h;
    h.m = m;
    h.exponent = exponent(kind, m, xi);
    h.wavenumber = (kind == OperatorKind::fermion) ? (2 * m + 1) * p_fermi
                                                   : 2.0 * m * p_fermi;
    model.harmonics.push_back(h);
  }
  if (kind == OperatorKind::density) model.uniform_term = UniformTerm{};
  return model;
}

CorrelatorModel xx_transverse_model(double xi, double p_fermi) {
  CorrelatorModel model;
  model.kind = OperatorKind::boson;
  Harmonic h;
  h.m = 0;
  h.exponent = exponent(OperatorKind::boson, 0, xi);
  h.wavenumber = 2.0 * p_fermi;  // staggered lattice convention
  model.harmonics.push_back(h);
  return model;
}

CorrelatorModel xx_density_model(double xi, double p_fermi) {
  return make_model(OperatorKind::density, xi, p_fermi, {1});
}

double relation_sign(OperatorKind kind, int m) {
  const double alternating = (m % 2 == 0) ? 1.0 : -1.0;
  switch (kind) {
    case OperatorKind::boson:
      return alternating / (m == 0 ? 1.0 : 2.0);
    case OperatorKind::fermion:
      return alternating / 2.0;
    case OperatorKind::density:
      return 0.5;
  }
  throw domain_error("relation_sign: unknown operator kind");
}

double prefactor_from_formfactor(const ScalingRelation& rel) {
  const double e = exponent(rel.kind, rel.m, rel.xi);
  const double scale =
      relation_sign(rel.kind, rel.m) * std::pow(2.0 / rel.length, e);
  const double prefactor = rel.formfactor_sq / scale;
  if (rel.formfactor_sq < 0.0)
    throw inconsistency_error(
        "prefactor_from_formfactor: negative squared formfactor");
  return prefactor;
}

double formfactor_from_prefactor(const ScalingRelation& rel) {
  const double e = exponent(rel.kind, rel.m, rel.xi);
  const double ff_sq = relation_sign(rel.kind, rel.m) *
                       std::pow(2.0 / rel.length, e) * rel.prefactor;
  if (ff_sq < 0.0)
    throw inconsistency_error(
        "formfactor_from_prefactor: relation implies a negative square; "
        "prefactor sign does not match the bookkeeping");
  return ff_sq;
}

FitReport fit_prefactors(const std::vector<std::pair<double, double>>& samples,
                         const CorrelatorModel& shape, double length,
                         double x_min, double x_max, bool fit_offset) {
  std::vector<std::pair<double, double>> window;
  for (const auto& s : samples)
    if (s.first >= x_min && s.first <= x_max) window.push_back(s);

  const int n_harmonics = static_cast<int>(shape.harmonics.size());
  const int n_free =
      n_harmonics + (shape.uniform_term ? 1 : 0) + (fit_offset ? 1 : 0);
  if (n_free == 0) throw fit_error("fit_prefactors: no free amplitudes");
  if (static_cast<int>(window.size()) < 3 * n_free)
    throw fit_error("fit_prefactors: need at least three samples per free "
                    "amplitude inside the window");

  Eigen::MatrixXd design(window.size(), n_free);
  Eigen::VectorXd target(window.size());
  for (std::size_t row = 0; row < window.size(); ++row) {
    const double x = window[row].first;
    const double chord = chord_distance(x, length);
    int col = 0;
    for (const Harmonic& h : shape.harmonics) {
      const double osc = (shape.kind == OperatorKind::fermion)
                             ? std::sin(h.wavenumber * x)
                             : std::cos(h.wavenumber * x);
      design(row, col++) = osc / std::pow(chord, h.exponent);
    }
    if (shape.uniform_term) design(row, col++) = 1.0 / (chord * chord);
    if (fit_offset) design(row, col++) = 1.0;
    target(row) = window[row].second;
  }

  Eigen::ColPivHouseholderQR<Eigen::MatrixXd> qr(design);
  if (qr.rank() < n_free)
    throw fit_error("fit_prefactors: rank-deficient design (window too small "
                    "or aliased wavenumbers)");
  const Eigen::VectorXd coeff = qr.solve(target);

  FitReport report;
  report.model = shape;
  int col = 0;
  for (Harmonic& h : report.model.harmonics) h.amplitude = coeff(col++);
  if (report.model.uniform_term) {
    const double c = coeff(col++);
    report.model.uniform_term->sign_convention = c < 0.0 ? -1 : 1;
    report.model.uniform_term->coefficient = std::fabs(c);
  }
  if (fit_offset) report.model.constant_offset = coeff(col++);

  double max_abs_y = 0.0;
  double max_abs_res = 0.0;
  for (const auto& [x, y] : window) {
    max_abs_y = std::max(max_abs_y, std::fabs(y));
    const double res = evaluate_correlator(report.model, x, length) - y;
    max_abs_res = std::max(max_abs_res, std::fabs(res));
  }
  report.max_relative_residual = max_abs_y > 0.0 ? max_abs_res / max_abs_y : 0.0;
  report.sample_count = static_cast<int>(window.size());
  return report;
}

}  // namespace luttff
