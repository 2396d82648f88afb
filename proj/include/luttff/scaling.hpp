#pragma once

#include <optional>
#include <vector>

#include "luttff/formfactor.hpp"

namespace luttff {

// Power-law exponent of the m-th harmonic:
//   boson:    xi/2 + 2 m^2 / xi
//   fermion:  xi/2 + (2m+1)^2 / (2 xi)
//   density:  2 m^2 / xi              (m >= 1)
// Always equal to a_R^2 + a_L^2 from chiral_weights.
double exponent(OperatorKind kind, int m, double xi);

// L sin(pi x / L): the finite-ring separation every power law runs in.
double chord_distance(double x, double length);

struct Harmonic {
  int m = 0;
  double amplitude = 0.0;
  double exponent = 0.0;
  double wavenumber = 0.0;
};

// Optional 1/chord^2 gradient term of the density correlator. The sign
// defaults to the free-fermion-measured one (negative connected uniform
// part); +1 selects the opposite bookkeeping.
struct UniformTerm {
  double coefficient = 0.0;
  int sign_convention = -1;
};

// Harmonic expansion of an equal-time correlator. Harmonics use
// cos(wavenumber * x) except for the fermion kind, which uses sin.
struct CorrelatorModel {
  OperatorKind kind = OperatorKind::boson;
  std::vector<Harmonic> harmonics;
  std::optional<UniformTerm> uniform_term;
  double constant_offset = 0.0;
};

// Sum of harmonic terms amplitude * trig(kx)/chord^exponent plus the
// uniform term and constant offset. Requires 0 < x < L.
double evaluate_correlator(const CorrelatorModel& model, double x,
                           double length);

// Model shapes with closed-form exponents and wavenumbers 2 p_F m
// (boson/density) or (2m+1) p_F (fermion); amplitudes left free.
CorrelatorModel make_model(OperatorKind kind, double xi, double p_fermi,
                           const std::vector<int>& harmonics);

// Lattice spin-lowering correlator at half filling: the leading term is
// staggered, cos(2 p_F x)/chord^{xi/2}.
CorrelatorModel xx_transverse_model(double xi, double p_fermi);

// Connected density correlator shape: uniform term plus the 2 p_F harmonic.
CorrelatorModel xx_density_model(double xi, double p_fermi);

// One prefactor <-> squared-formfactor pairing:
//   |FF|^2 = s_m * prefactor * (2/L)^exponent
// with s_m = (-1)^m/(2 - delta_{m,0}) (boson), (-1)^m/2 (fermion),
// 1/2 (density). The m = 0 boson case reduces to C^2 = (2/L)^{xi/2} C_0 and
// the m = 1 density case to C_1^2 = (1/2)(2/L)^{2/xi} C_10.
struct ScalingRelation {
  OperatorKind kind = OperatorKind::boson;
  int m = 0;
  double xi = 1.0;
  double length = 1.0;
  double prefactor = 0.0;
  double formfactor_sq = 0.0;
};

double relation_sign(OperatorKind kind, int m);
// prefactor from rel.formfactor_sq; throws inconsistency_error when the
// implied square goes negative.
double prefactor_from_formfactor(const ScalingRelation& rel);
// squared formfactor from rel.prefactor; same consistency check.
double formfactor_from_prefactor(const ScalingRelation& rel);

struct FitReport {
  CorrelatorModel model;  // amplitudes filled in
  double max_relative_residual = 0.0;
  int sample_count = 0;
};

// Linear least squares in the amplitudes (exponents and wavenumbers stay at
// their closed forms). Free columns: every harmonic amplitude, the uniform
// coefficient when present, and optionally a constant offset. Throws
// fit_error on a rank-deficient window.
FitReport fit_prefactors(const std::vector<std::pair<double, double>>& samples,
                         const CorrelatorModel& shape, double length,
                         double x_min, double x_max, bool fit_offset = false);

}  // namespace luttff
