#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace luttff {

// Particle-hole content of one chiral branch. Particles are strictly
// decreasing integers p_1 > ... > p_n >= 1, holes strictly decreasing
// integers 0 >= q_1 > ... > q_n, with equal counts; the physical momenta
// are 2 pi p_i / L and 2 pi q_i / L. The empty state is the vacuum.
struct ChiralState {
  std::vector<int> particles;
  std::vector<int> holes;

  int pair_count() const { return static_cast<int>(particles.size()); }
  void validate() const;

  bool operator==(const ChiralState&) const = default;
};

// Two-branch excitation: content near the right and left Fermi points plus
// the harmonic / charge bookkeeping of the operator that created it.
struct ExcitedState {
  ChiralState right;
  ChiralState left;
  int harmonic = 0;
  int delta_n = 0;
};

// sum(p_i) - sum(q_i); always >= n^2 >= 0.
int level(const ChiralState& state);

// Largest level the exhaustive sums enumerate by default. p(24) = 1575
// states, which keeps every exhaustive verification sub-second.
inline constexpr int kDefaultEnumerationCap = 24;

// Every state of the given level, ordered descending-lexicographically on
// the concatenated (particles, holes) list. The count equals the integer
// partition number p(m). Throws resource_error above the cap.
std::vector<ChiralState> enumerate_level(int m,
                                         int cap = kDefaultEnumerationCap);

// Integer partition count p(m) by Euler's pentagonal-number recurrence;
// the independent count the enumeration is checked against.
std::int64_t count_states(int m);

// "2,1;0,-1" round-trip form used by the CLI; the vacuum prints as "vacuum".
std::string state_label(const ChiralState& state);
ChiralState parse_state(const std::string& text);

}  // namespace luttff
