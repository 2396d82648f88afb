#include "luttff/fock_vertex.hpp"

#include <bit>
#include <cmath>
#include <string>

#include "luttff/errors.hpp"
#include "luttff/formfactor.hpp"

namespace luttff {

namespace {

// Bits strictly between two orbital positions.
std::uint64_t between_mask(int lo_bit, int hi_bit) {
  if (hi_bit - lo_bit <= 1) return 0;
  const std::uint64_t above_lo = ~0ULL << (lo_bit + 1);
  const std::uint64_t below_hi = (1ULL << hi_bit) - 1;
  return above_lo & below_hi;
}

int parity_sign(std::uint64_t bits) {
  return (std::popcount(bits) % 2 == 0) ? 1 : -1;
}

}  // namespace

FockBasis::FockBasis(int cutoff_level) : cutoff_(cutoff_level) {
  if (cutoff_level < 0)
    throw domain_error("FockBasis: cutoff must be >= 0");
  if (cutoff_level > kFockCutoffCap)
    throw resource_error("FockBasis: cutoff " + std::to_string(cutoff_level) +
                         " exceeds the oracle cap " +
                         std::to_string(kFockCutoffCap));

  const int width = 2 * cutoff_ + 1;
  std::uint64_t vacuum = 0;
  for (int bit = 0; bit <= cutoff_; ++bit) vacuum |= 1ULL << bit;

  for (int m = 0; m <= cutoff_; ++m) {
    for (auto& s : enumerate_level(m, cutoff_)) {
      std::uint64_t mask = vacuum;
      int phase = 1;
      // Canonical string: remove holes shallowest first, then create
      // particles lowest first; each step picks up the parity of the
      // occupied orbitals above it.
      for (int q : s.holes) {
        const int bit = q + cutoff_;
        phase *= parity_sign(mask & (~0ULL << (bit + 1)));
        mask &= ~(1ULL << bit);
      }
      for (auto it = s.particles.rbegin(); it != s.particles.rend(); ++it) {
        const int bit = *it + cutoff_;
        if (bit >= width)
          throw resource_error("FockBasis: particle outside orbital window");
        phase *= parity_sign(mask & (~0ULL << (bit + 1)));
        mask |= 1ULL << bit;
      }
      index_.emplace(mask, static_cast<int>(states_.size()));
      masks_.push_back(mask);
      phases_.push_back(phase);
      levels_.push_back(m);
      states_.push_back(std::move(s));
    }
  }
}

int FockBasis::index_of_mask(std::uint64_t mask) const {
  const auto it = index_.find(mask);
  return it == index_.end() ? -1 : it->second;
}

int FockBasis::index_of_state(const ChiralState& state) const {
  state.validate();
  std::uint64_t mask = 0;
  for (int bit = 0; bit <= cutoff_; ++bit) mask |= 1ULL << bit;
  for (int q : state.holes) {
    if (q + cutoff_ < 0) return -1;
    mask &= ~(1ULL << (q + cutoff_));
  }
  for (int p : state.particles) {
    const int bit = p + cutoff_;
    if (bit >= 2 * cutoff_ + 1) return -1;
    mask |= 1ULL << bit;
  }
  return index_of_mask(mask);
}

FockBasis build_basis(int cutoff_level) { return FockBasis(cutoff_level); }

VertexVector apply_density_mode(const FockBasis& basis, int n,
                                const VertexVector& v) {
  if (n == 0) throw domain_error("apply_density_mode: n must be nonzero");
  const int width = 2 * basis.cutoff() + 1;
  VertexVector out(basis.size(), 0.0);
  for (int i = 0; i < basis.size(); ++i) {
    if (v[i] == 0.0) continue;
    const std::uint64_t mask = basis.mask(i);
    const double amp = v[i] * basis.string_phase(i);
    for (int bit = 0; bit < width; ++bit) {
      const int target = bit + n;
      if (target < 0 || target >= width) continue;
      if (!(mask & (1ULL << bit))) continue;
      if (mask & (1ULL << target)) continue;
      const std::uint64_t moved =
          (mask & ~(1ULL << bit)) | (1ULL << target);
      const int j = basis.index_of_mask(moved);
      if (j < 0) continue;  // truncated component above the cutoff
      const int hop_sign =
          parity_sign(mask & between_mask(std::min(bit, target),
                                          std::max(bit, target)));
      out[j] += amp * hop_sign * basis.string_phase(j);
    }
  }
  return out;
}

VertexVector vertex_state(const FockBasis& basis, double a) {
  VertexVector result(basis.size(), 0.0);
  VertexVector term(basis.size(), 0.0);
  result[0] = 1.0;
  term[0] = 1.0;
  for (int order = 1; order <= basis.cutoff(); ++order) {
    VertexVector next(basis.size(), 0.0);
    for (int n = 1; n <= basis.cutoff(); ++n) {
      const VertexVector hop = apply_density_mode(basis, n, term);
      for (int i = 0; i < basis.size(); ++i) next[i] += hop[i] / n;
    }
    bool any = false;
    for (int i = 0; i < basis.size(); ++i) {
      next[i] *= a / order;
      result[i] += next[i];
      any = any || next[i] != 0.0;
    }
    if (!any) break;
    term = std::move(next);
  }
  return result;
}

VertexCheckReport verify_f1(const FockBasis& basis, int max_level, double a) {
  if (max_level > basis.cutoff())
    throw domain_error("verify_f1: max_level exceeds the basis cutoff");
  const VertexVector v = vertex_state(basis, a);
  VertexCheckReport report;
  report.max_level = max_level;
  for (int i = 0; i < basis.size(); ++i) {
    if (basis.state_level(i) > max_level) continue;
    const double closed = formfactor(basis.state(i), {a}).value();
    report.max_abs_diff =
        std::max(report.max_abs_diff, std::fabs(v[i] - closed));
    ++report.states_checked;
  }
  return report;
}

CommutatorReport verify_commutator(const FockBasis& basis, int n) {
  if (n < 1 || n > basis.cutoff())
    throw domain_error("verify_commutator: need 1 <= n <= cutoff");
  CommutatorReport report;
  report.mode = n;
  for (int i = 0; i < basis.size(); ++i) {
    if (basis.state_level(i) > basis.cutoff() - n) continue;
    VertexVector unit(basis.size(), 0.0);
    unit[i] = 1.0;
    const VertexVector raised = apply_density_mode(basis, n, unit);
    const VertexVector down_up =
        apply_density_mode(basis, -n, raised);
    const VertexVector lowered = apply_density_mode(basis, -n, unit);
    const VertexVector up_down = apply_density_mode(basis, n, lowered);
    for (int j = 0; j < basis.size(); ++j) {
      double d = down_up[j] - up_down[j];
      if (j == i) d -= n;
      report.max_violation = std::max(report.max_violation, std::fabs(d));
    }
    ++report.states_checked;
  }
  return report;
}

}  // namespace luttff
