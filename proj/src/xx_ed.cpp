#include "luttff/xx_ed.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <string>

#include "luttff/errors.hpp"

namespace luttff {

namespace {

constexpr double kDegenerateTol = 1e-9;

}  // namespace

XxEd::XxEd(int length) : length_(length) {
  if (length < 2 || length % 2 != 0)
    throw domain_error("XxEd: length must be a positive even integer");
  if (length > kEdMaxLength)
    throw resource_error("XxEd: length " + std::to_string(length) +
                         " exceeds the ED cap " + std::to_string(kEdMaxLength));
}

const XxEd::Sector& XxEd::sector(int m) {
  if (m <= 0 || m >= length_)
    throw domain_error("XxEd: sector filling must satisfy 0 < M < L");
  auto it = cache_.find(m);
  if (it != cache_.end()) return it->second;

  Sector s;
  for (std::uint32_t mask = 0; mask < (1u << length_); ++mask)
    if (std::popcount(mask) == m) s.masks.push_back(mask);

  const int dim = static_cast<int>(s.masks.size());
  Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
  for (int row = 0; row < dim; ++row) {
    const std::uint32_t mask = s.masks[row];
    for (int site = 0; site < length_; ++site) {
      const int next = (site + 1) % length_;
      const bool a = mask & (1u << site);
      const bool b = mask & (1u << next);
      if (a == b) continue;
      const std::uint32_t flipped = mask ^ (1u << site) ^ (1u << next);
      h(index_of(s, flipped), row) += 1.0;
    }
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
  s.energies = solver.eigenvalues();
  s.vectors = solver.eigenvectors();
  return cache_.emplace(m, std::move(s)).first->second;
}

int XxEd::index_of(const Sector& s, std::uint32_t mask) const {
  const auto it = std::lower_bound(s.masks.begin(), s.masks.end(), mask);
  return static_cast<int>(it - s.masks.begin());
}

std::uint32_t XxEd::rotate(std::uint32_t mask) const {
  const std::uint32_t all = (1u << length_) - 1;
  return ((mask << 1) | (mask >> (length_ - 1))) & all;
}

Eigen::VectorXd XxEd::translate(const Sector& s,
                                const Eigen::VectorXd& v) const {
  Eigen::VectorXd out(v.size());
  for (int i = 0; i < v.size(); ++i)
    out(index_of(s, rotate(s.masks[i]))) = v(i);
  return out;
}

double XxEd::sector_ground_energy(int m) { return sector(m).energies(0); }

double XxEd::transverse_correlator(int x, int base_site) {
  const Sector& s = sector(length_ / 2);
  if (s.energies(1) - s.energies(0) < kDegenerateTol)
    throw degeneracy_error("XxEd: degenerate half-filling ground state", {});
  const Eigen::VectorXd& gs = s.vectors.col(0);
  const int from = base_site % length_;
  const int to = (base_site + x) % length_;
  if (to == from) throw domain_error("XxEd: separation must be in [1, L)");
  double acc = 0.0;
  for (std::size_t i = 0; i < s.masks.size(); ++i) {
    const std::uint32_t mask = s.masks[i];
    if (!(mask & (1u << from)) || (mask & (1u << to))) continue;
    const std::uint32_t flipped = mask ^ (1u << from) ^ (1u << to);
    acc += gs(index_of(s, flipped)) * gs(i);
  }
  return acc;
}

double XxEd::density_correlator(int x, int base_site) {
  const Sector& s = sector(length_ / 2);
  const Eigen::VectorXd& gs = s.vectors.col(0);
  const int from = base_site % length_;
  const int to = (base_site + x) % length_;
  double zz = 0.0, z_from = 0.0, z_to = 0.0;
  for (std::size_t i = 0; i < s.masks.size(); ++i) {
    const std::uint32_t mask = s.masks[i];
    const double w = gs(i) * gs(i);
    const double sa = (mask & (1u << from)) ? 1.0 : -1.0;
    const double sb = (mask & (1u << to)) ? 1.0 : -1.0;
    zz += w * sa * sb;
    z_from += w * sa;
    z_to += w * sb;
  }
  return zz - z_from * z_to;
}

double XxEd::lowest_sigma_minus() {
  const Sector& big = sector(length_ / 2);
  const Sector& small = sector(length_ / 2 - 1);
  const Eigen::VectorXd& t = big.vectors.col(0);
  const Eigen::VectorXd& l = small.vectors.col(0);
  double acc = 0.0;
  for (std::size_t i = 0; i < big.masks.size(); ++i) {
    const std::uint32_t mask = big.masks[i];
    if (!(mask & 1u)) continue;
    acc += l(index_of(small, mask & ~1u)) * t(i);
  }
  return std::fabs(acc);
}

double XxEd::density_lowest_formfactor(bool sigma_z_units) {
  const Sector& s = sector(length_ / 2);
  const int dim = static_cast<int>(s.masks.size());
  const Eigen::VectorXd& t = s.vectors.col(0);

  // Ground-state momentum is 0 or pi (real eigenvector of the translation),
  // so the target momentum kappa_0 + pi also carries a real +-1 phase and
  // the projector (1/L) sum_j sign^j T^j stays real.
  const double gs_phase = translate(s, t).dot(t);
  if (std::fabs(std::fabs(gs_phase) - 1.0) > 1e-8)
    throw degeneracy_error("XxEd: ground state lacks definite momentum", {});
  const double sign = -(gs_phase > 0 ? 1.0 : -1.0);

  Eigen::VectorXd w(dim);
  for (int i = 0; i < dim; ++i)
    w(i) = (s.masks[i] & 1u) ? t(i) : 0.0;  // n_0 |t>

  Eigen::VectorXd projected = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd image = w;
  double phase = 1.0;
  for (int j = 0; j < length_; ++j) {
    projected += phase * image;
    image = translate(s, image);
    phase *= sign;
  }
  projected /= length_;

  // Walk energy multiplets upward; the first one the projection touches is
  // the 2 p_F pair. Its multiplicity comes from the momentum projector's
  // trace restricted to the multiplet.
  int lo = 0;
  while (lo < dim) {
    int hi = lo + 1;
    while (hi < dim && s.energies(hi) - s.energies(lo) < kDegenerateTol) ++hi;
    double r = 0.0;
    for (int c = lo; c < hi; ++c) {
      const double overlap = s.vectors.col(c).dot(projected);
      r += overlap * overlap;
    }
    if (r > 1e-18 && s.energies(lo) - s.energies(0) > kDegenerateTol) {
      double mult = 0.0;
      for (int c = lo; c < hi; ++c) {
        Eigen::VectorXd pe = Eigen::VectorXd::Zero(dim);
        Eigen::VectorXd img = s.vectors.col(c);
        double ph = 1.0;
        for (int j = 0; j < length_; ++j) {
          pe += ph * img;
          img = translate(s, img);
          ph *= sign;
        }
        pe /= length_;
        mult += s.vectors.col(c).dot(pe);
      }
      const int multiplicity = static_cast<int>(std::lround(mult));
      if (multiplicity < 1)
        throw degeneracy_error("XxEd: empty momentum multiplet", {});
      const double value = std::sqrt(r / multiplicity);
      return sigma_z_units ? 2.0 * value : value;
    }
    lo = hi;
  }
  throw degeneracy_error("XxEd: no 2 p_F multiplet found", {});
}

}  // namespace luttff
