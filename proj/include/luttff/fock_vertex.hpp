#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "luttff/states.hpp"

namespace luttff {

// Truncated Fock space of one chiral branch, with the density modes rho(n)
// acting fermionically on occupation masks. Built to verify the closed
// particle-hole kernel by expanding the vertex exponential directly; the
// commutator certificate [rho(-n), rho(n)] = n pins the representation.
//
// Orbitals k in [-cutoff, cutoff] are stored as bits k + cutoff of a 64-bit
// mask; the reference sea fills k <= 0. Amplitudes are reported in the
// canonical-string convention (holes removed shallowest first, particles
// created lowest first), which is the convention the determinant kernel is
// stated in.

inline constexpr int kFockCutoffCap = 10;

class FockBasis {
 public:
  explicit FockBasis(int cutoff_level);

  int cutoff() const { return cutoff_; }
  int size() const { return static_cast<int>(states_.size()); }
  const ChiralState& state(int index) const { return states_[index]; }
  int state_level(int index) const { return levels_[index]; }
  // Relative sign between the canonical-string state and the raw
  // descending-ordered occupation string.
  int string_phase(int index) const { return phases_[index]; }
  std::uint64_t mask(int index) const { return masks_[index]; }
  // -1 when the mask leaves the truncated space.
  int index_of_mask(std::uint64_t mask) const;
  // -1 when the state's level exceeds the cutoff.
  int index_of_state(const ChiralState& state) const;

 private:
  int cutoff_;
  std::vector<ChiralState> states_;
  std::vector<int> levels_;
  std::vector<int> phases_;
  std::vector<std::uint64_t> masks_;
  std::unordered_map<std::uint64_t, int> index_;
};

// Amplitudes over the basis, index-aligned with FockBasis.
using VertexVector = std::vector<double>;

FockBasis build_basis(int cutoff_level);

// Linear action of rho(n) = sum_k a^+_{k+n} a_k (n > 0 raises the level by
// n, n < 0 lowers it). Components pushed past the cutoff are dropped; they
// never feed back into lower levels.
VertexVector apply_density_mode(const FockBasis& basis, int n,
                                const VertexVector& v);

// exp(a sum_{n>0} rho(n)/n) |0>. The expansion terminates exactly: every
// application raises the level, so amplitudes at level m are exact whenever
// the cutoff is >= m.
VertexVector vertex_state(const FockBasis& basis, double a);

struct VertexCheckReport {
  int max_level = 0;
  int states_checked = 0;
  double max_abs_diff = 0.0;
};

// Max |vertex amplitude - closed-form F| over all states of level <= max_level.
VertexCheckReport verify_f1(const FockBasis& basis, int max_level, double a);

struct CommutatorReport {
  int mode = 0;
  int states_checked = 0;
  double max_violation = 0.0;
};

// Checks [rho(-n), rho(n)] = n as an operator identity on every basis state
// of level <= cutoff - n (where the truncation is exact).
CommutatorReport verify_commutator(const FockBasis& basis, int n);

}  // namespace luttff
