#include "luttff/formfactor.hpp"

#include <cmath>
#include <string>

#include "luttff/errors.hpp"

namespace luttff {

namespace {

bool is_nonpositive_integer(double a) {
  return a <= 0.0 && a == std::floor(a);
}

}  // namespace

SignedLog f_plus_log(int p, double a) {
  if (p < 1) throw domain_error("f_plus: particle momentum must be >= 1");
  // Gamma(p+a)/Gamma(a) = a (a+1) ... (a+p-1)
  SignedLog out = log_rising(a, p);
  if (out.zero) return out;
  out.log_abs -= log_factorial(p - 1);
  return out;
}

SignedLog f_minus_log(int q, double a) {
  if (q > 0) throw domain_error("f_minus: hole momentum must be <= 0");
  // Gamma(1-q-a)/Gamma(1-a) = (1-a)(2-a)...(-q-a)
  SignedLog out = log_rising(1.0 - a, -q);
  if (out.zero) return out;
  out.log_abs -= log_factorial(-q);
  return out;
}

double f_plus(int p, double a) { return f_plus_log(p, a).value(); }
double f_minus(int q, double a) { return f_minus_log(q, a).value(); }

SignedLog cauchy_det_log(const std::vector<int>& particles,
                         const std::vector<int>& holes) {
  const std::size_t n = particles.size();
  if (holes.size() != n)
    throw invalid_state_error("cauchy_det: particle/hole counts differ");
  SignedLog out;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const int dp = particles[i] - particles[j];
      const int dq = holes[j] - holes[i];
      if (dp == 0 || dq == 0)
        throw invalid_state_error(
            "cauchy_det: repeated momentum (Pauli-excluded state)");
      out *= SignedLog::from_value(static_cast<double>(dp));
      out *= SignedLog::from_value(static_cast<double>(dq));
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const int d = particles[i] - holes[j];
      if (d == 0)
        throw invalid_state_error("cauchy_det: particle coincides with hole");
      out.log_abs -= std::log(std::fabs(static_cast<double>(d)));
      if (d < 0) out.sign = -out.sign;
    }
  }
  return out;
}

double cauchy_det(const std::vector<int>& particles,
                  const std::vector<int>& holes) {
  return cauchy_det_log(particles, holes).value();
}

FormFactorValue formfactor(const ChiralState& state,
                           const VertexWeight& weight) {
  state.validate();
  SignedLog acc = cauchy_det_log(state.particles, state.holes);
  bool pole = false;
  for (int p : state.particles) {
    const SignedLog f = f_plus_log(p, weight.a);
    if (f.zero && is_nonpositive_integer(weight.a)) pole = true;
    acc *= f;
  }
  for (int q : state.holes) {
    const SignedLog f = f_minus_log(q, weight.a);
    if (f.zero && is_nonpositive_integer(1.0 - weight.a)) pole = true;
    acc *= f;
  }
  FormFactorValue out;
  out.log_magnitude = acc.log_abs;
  out.sign = acc.sign;
  out.zero = acc.zero;
  out.gamma_pole = pole && acc.zero;
  return out;
}

std::pair<double, double> chiral_weights(OperatorKind kind, int m, double xi) {
  if (!(xi > 0.0)) throw domain_error("chiral_weights: xi must be > 0");
  if (m < 0) throw domain_error("chiral_weights: harmonic must be >= 0");
  const double s = std::sqrt(xi);
  switch (kind) {
    case OperatorKind::boson:
      return {-(s / 2.0 + m / s), -(s / 2.0 - m / s)};
    case OperatorKind::fermion:
      return {-(s / 2.0 + (2 * m + 1) / (2.0 * s)),
              -(s / 2.0 - (2 * m + 1) / (2.0 * s))};
    case OperatorKind::density:
      if (m == 0)
        throw domain_error(
            "chiral_weights: the m = 0 density term is the gradient part, "
            "not a vertex operator");
      return {m / s, m / s};
  }
  throw domain_error("chiral_weights: unknown operator kind");
}

FormFactorValue total_formfactor(const ExcitedState& state, OperatorKind kind,
                                 double xi, double lowest) {
  const auto [a_right, a_left] = chiral_weights(kind, state.harmonic, xi);
  const FormFactorValue fr = formfactor(state.right, {a_right});
  const FormFactorValue fl = formfactor(state.left, {a_left});

  SignedLog acc = SignedLog::from_value(lowest);
  SignedLog right{fr.log_magnitude, fr.sign, fr.zero};
  SignedLog left{fl.log_magnitude, fl.sign, fl.zero};
  acc *= right;
  acc *= left;

  FormFactorValue out;
  out.log_magnitude = acc.log_abs;
  out.sign = acc.sign;
  out.zero = acc.zero;
  out.gamma_pole = fr.gamma_pole || fl.gamma_pole;
  return out;
}

}  // namespace luttff
