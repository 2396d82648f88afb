#pragma once

namespace luttff {

// Universal inputs of every implemented relation: the dimensionless
// Luttinger constant xi, the sound velocity u in lattice units, the ring
// length, and the Fermi momentum.
struct LuttingerParams {
  double xi = 1.0;
  double u = 1.0;
  double length = 1.0;
  double fermi_momentum = 0.0;  // p_F in [0, pi]

  void validate() const;
};

// Zero-mode charges of a finite-size sector. dN + dQ must be even so the
// per-branch charges (dN + dQ)/2 and (dN - dQ)/2 stay integer.
struct SectorCharge {
  int delta_n = 0;
  int delta_q = 0;

  void validate() const;
};

// u = sqrt(1 - lambda^2), xi = sqrt((1 + lambda)/(1 - lambda)).
// Requires |lambda| < 1; the products xi*u = 1 + lambda and u/xi = 1 - lambda
// hold exactly.
LuttingerParams params_from_coupling(double lambda, double length,
                                     double fermi_momentum);

// Inverse of the closed form above: lambda = (xi^2 - 1)/(xi^2 + 1).
double coupling_from_xi(double xi);

// xi = 2(pi - eta)/pi with delta = cos(eta), for anisotropy delta in (-1, 1].
// Monotone increasing; delta = 0 gives the free-fermion point xi = 1.
double xi_from_anisotropy(double delta);

// Zero-mode energy shift (pi/2L) u [xi dN^2 + dQ^2/xi]. Particle-hole mode
// energies are not included here; they are pure level bookkeeping,
// (2 pi u / L) * level.
double finite_size_energy(const LuttingerParams& params,
                          const SectorCharge& charge);

}  // namespace luttff
