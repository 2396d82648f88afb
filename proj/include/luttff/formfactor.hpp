#pragma once

#include <utility>
#include <vector>

#include "luttff/signed_log.hpp"
#include "luttff/states.hpp"

namespace luttff {

// Operator families whose particle-hole formfactors share one kernel and
// differ only in the vertex weight. `boson` covers the spin-lowering
// operator of the lattice model.
enum class OperatorKind { boson, fermion, density };

// Exponent coefficient a of the chiral vertex exp(a (2pi/L) sum_p rho(p)/p).
struct VertexWeight {
  double a = 0.0;
};

// Real formfactor in overflow-safe form. The exact zeros produced by Gamma
// poles at integer vertex weights carry both flags.
struct FormFactorValue {
  double log_magnitude = 0.0;
  int sign = 1;
  bool zero = false;
  bool gamma_pole = false;

  double value() const { return zero ? 0.0 : sign * std::exp(log_magnitude); }
};

// Edge factors of the particle-hole kernel:
//   f+(p) = Gamma(p + a) / (Gamma(p) Gamma(a)),      p >= 1
//   f-(q) = Gamma(1 - q - a) / (Gamma(1 - q) Gamma(1 - a)),  q <= 0
// evaluated through the log-space rising factorial, so non-positive integer
// weights give exact zeros instead of Gamma-pole overflow. The recurrences
// f+(p+1)/f+(p) = (p+a)/p and f-(q-1)/f-(q) = (1-q-a)/(1-q) hold.
SignedLog f_plus_log(int p, double a);
SignedLog f_minus_log(int q, double a);
double f_plus(int p, double a);
double f_minus(int q, double a);

// det_ij 1/(p_i - q_j) through the closed product form
//   prod_{i<j} (p_i - p_j)(q_j - q_i) / prod_{i,j} (p_i - q_j).
// Requires canonical (strictly decreasing) momenta; repeated entries are a
// Pauli violation and throw invalid_state_error.
SignedLog cauchy_det_log(const std::vector<int>& particles,
                         const std::vector<int>& holes);
double cauchy_det(const std::vector<int>& particles,
                  const std::vector<int>& holes);

// Single-branch formfactor F(p_i, q_i) = det * prod f+(p_i) * prod f-(q_i).
// F(vacuum) = 1 for any weight.
FormFactorValue formfactor(const ChiralState& state, const VertexWeight& weight);

// Branch weights (a_R, a_L) for operator `kind` at harmonic m:
//   boson:    -(sqrt(xi)/2 + m/sqrt(xi)), -(sqrt(xi)/2 - m/sqrt(xi))
//   fermion:  -(sqrt(xi)/2 + (2m+1)/(2 sqrt(xi))), -(sqrt(xi)/2 - ...)
//   density:  +m/sqrt(xi) on both branches (m >= 1)
// Signs continue the m = 0 conventions (a = -sqrt(xi)/2 for the spin-lowering
// operator, a = +1/sqrt(xi) for the density harmonic); only a^2 enters any
// reported modulus. a_R^2 + a_L^2 always equals the correlator exponent of
// the same kind and harmonic.
std::pair<double, double> chiral_weights(OperatorKind kind, int m, double xi);

// Two-branch formfactor: lowest * F_right(a_R) * F_left(a_L).
FormFactorValue total_formfactor(const ExcitedState& state, OperatorKind kind,
                                 double xi, double lowest);

}  // namespace luttff
