#pragma once

#include <vector>

#include "luttff/states.hpp"

namespace luttff {

// Periodic XX chain (hopping-1 normalization, H = sum_i s+_i s-_{i+1} + h.c.)
// at fixed up-spin number, solved through Jordan-Wigner free fermions.
//
// Momenta are bookkept relative to the band minimum, so the ground state
// occupies the set minimizing sum(-2 cos k); the physical lattice momentum
// is k + pi. The shift is a gauge choice: it cancels in every overlap
// determinant and enters the correlators only through the (-1)^r factor of
// the propagator, which is what produces the staggered sign of the
// transverse correlator at half filling.
//
// The Jordan-Wigner sector rule on the periodic chain: fermion momenta are
// antiperiodic (k = 2pi(n+1/2)/L) for even fermion number, periodic
// (k = 2pi n/L) for odd.
struct XxChainConfig {
  int length = 0;   // even site count L
  int filling = 0;  // up-spins M, 0 < M < L

  void validate() const;
  bool antiperiodic() const { return filling % 2 == 0; }
};

// Occupied momentum set of a Slater determinant, ascending in (-pi, pi].
struct SlaterState {
  std::vector<double> momenta;
};

// Full momentum grid of the sector holding `filling` fermions.
std::vector<double> momentum_grid(int length, bool antiperiodic);

// Lowest-energy momentum set. Throws degeneracy_error (with the tied
// momenta) when the Fermi shell is not unique.
SlaterState ground_state(const XxChainConfig& config);

// sum over occupied k of -2 cos k.
double free_fermion_ground_energy(const XxChainConfig& config);

// Exact propagator g(r) = (1/L) sum_{k occupied} e^{i(k+pi)r} of the
// physical fermions (real by the +-k symmetry of the ground state).
double propagator(const XxChainConfig& config, int r);

// |<GS_{M-1}| sigma^-_0 |GS_M>| as an M x M determinant: M-1 rows of
// cross-sector plane-wave overlaps plus one row of site amplitudes 1/sqrt(L)
// (the Jordan-Wigner string is empty left of site 0).
double lowest_sigma_minus_formfactor(const XxChainConfig& config);

// |<lambda(p,q)| sigma^-_0 |GS_M>| where the bra carries particle-hole
// content near the right and left Fermi points of the (M-1)-fermion sea.
// Divided by the lowest formfactor this is the finite-L estimate of
// F_right * F_left at vertex weight a = -1/2.
double particle_hole_sigma_minus_formfactor(const XxChainConfig& config,
                                            const ChiralState& right,
                                            const ChiralState& left);

// <sigma^+_x sigma^-_0> in the M-sector ground state, exact at finite L,
// through the x by x determinant of string Wick contractions
// <B_j A_l> = 2 g(j-l) - delta_{jl}.
double transverse_correlator(const XxChainConfig& config, int x);

// Connected <sigma^z_x sigma^z_0> = -4 g(x)^2. At half filling this is
// -(2/L^2)(1 - cos(pi x))/sin^2(pi x / L).
double density_correlator(const XxChainConfig& config, int x);

// |<t'| n_0 |t>| where t' moves one fermion from the left Fermi point to
// just above the right one (momentum transfer 2 p_F). Exactly 1/L in
// n-units and 2/L in sigma^z units.
double density_lowest_formfactor(const XxChainConfig& config,
                                 bool sigma_z_units = true);

}  // namespace luttff
