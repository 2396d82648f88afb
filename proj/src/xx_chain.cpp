#include "luttff/xx_chain.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <set>
#include <string>

#include "luttff/errors.hpp"

namespace luttff {

namespace {

constexpr double kShellTol = 1e-9;

// Momenta are represented internally by the doubled integer index d with
// k = pi d / L, d in (-L, L]: odd d on the antiperiodic grid, even d on the
// periodic one. Integer bookkeeping keeps particle-hole surgery exact.
std::vector<int> grid_indices(int length, bool antiperiodic) {
  std::vector<int> d;
  d.reserve(length);
  if (antiperiodic) {
    for (int j = 0; j < length / 2; ++j) {
      d.push_back(2 * j + 1);
      d.push_back(-(2 * j + 1));
    }
  } else {
    d.push_back(0);
    for (int j = 1; j < length / 2; ++j) {
      d.push_back(2 * j);
      d.push_back(-2 * j);
    }
    d.push_back(length);  // k = pi
  }
  return d;
}

double momentum_of(int d, int length) { return M_PI * d / length; }

double band_energy(int d, int length) {
  return -2.0 * std::cos(momentum_of(d, length));
}

int wrap_index(int d, int length) {
  const int period = 2 * length;
  int r = ((d % period) + period) % period;  // [0, 2L)
  if (r > length) r -= period;               // (-L, L]
  return r;
}

// Occupied doubled indices of the sector ground state, ascending.
std::vector<int> ground_indices(const XxChainConfig& config) {
  config.validate();
  auto d = grid_indices(config.length, config.antiperiodic());
  std::sort(d.begin(), d.end(), [&](int a, int b) {
    const double ea = band_energy(a, config.length);
    const double eb = band_energy(b, config.length);
    if (ea != eb) return ea < eb;
    return a < b;
  });
  const int m = config.filling;
  const double fermi = band_energy(d[m - 1], config.length);
  if (std::fabs(band_energy(d[m], config.length) - fermi) < kShellTol) {
    std::vector<double> tied;
    for (int idx : d)
      if (std::fabs(band_energy(idx, config.length) - fermi) < kShellTol)
        tied.push_back(momentum_of(idx, config.length));
    throw degeneracy_error("ground_state: degenerate Fermi shell at M = " +
                               std::to_string(m),
                           tied);
  }
  std::vector<int> occ(d.begin(), d.begin() + m);
  std::sort(occ.begin(), occ.end());
  return occ;
}

// sigma^-_0 = a_0 between Slater states on the two parity grids:
// rows are bra-orbital overlaps, the last row the site amplitude 1/sqrt(L).
double removal_determinant(const std::vector<int>& bra_d,
                           const std::vector<int>& ket_d, int length) {
  using cd = std::complex<double>;
  const int m = static_cast<int>(ket_d.size());
  if (static_cast<int>(bra_d.size()) != m - 1)
    throw invalid_state_error("removal_determinant: bra must hold M-1 fermions");
  Eigen::MatrixXcd a(m, m);
  for (int j = 0; j < m; ++j) {
    const double kj = momentum_of(ket_d[j], length);
    for (int i = 0; i < m - 1; ++i) {
      const double ki = momentum_of(bra_d[i], length);
      // (1/L) sum_x e^{i(k-k')x}; the grids differ by half a step, so
      // e^{i(k-k')L} = -1 and the geometric sum closes to 2/(L(1-e^{iD})).
      const cd denom = cd(1.0, 0.0) - std::polar(1.0, kj - ki);
      a(i, j) = 2.0 / (static_cast<double>(length) * denom);
    }
    a(m - 1, j) = 1.0 / std::sqrt(static_cast<double>(length));
  }
  return std::abs(a.determinant());
}

}  // namespace

void XxChainConfig::validate() const {
  if (length <= 0 || length % 2 != 0)
    throw domain_error("XxChainConfig: length must be a positive even integer");
  if (filling <= 0 || filling >= length)
    throw domain_error("XxChainConfig: filling must satisfy 0 < M < L");
}

std::vector<double> momentum_grid(int length, bool antiperiodic) {
  auto d = grid_indices(length, antiperiodic);
  std::sort(d.begin(), d.end());
  std::vector<double> k(d.size());
  std::transform(d.begin(), d.end(), k.begin(),
                 [&](int idx) { return momentum_of(idx, length); });
  return k;
}

SlaterState ground_state(const XxChainConfig& config) {
  const auto occ = ground_indices(config);
  SlaterState s;
  s.momenta.reserve(occ.size());
  for (int d : occ) s.momenta.push_back(momentum_of(d, config.length));
  return s;
}

double free_fermion_ground_energy(const XxChainConfig& config) {
  const auto occ = ground_indices(config);
  return std::accumulate(occ.begin(), occ.end(), 0.0, [&](double acc, int d) {
    return acc + band_energy(d, config.length);
  });
}

double propagator(const XxChainConfig& config, int r) {
  const auto occ = ground_indices(config);
  double sum = 0.0;
  for (int d : occ) sum += std::cos(momentum_of(d, config.length) * r);
  const int stagger = (r % 2 == 0) ? 1 : -1;  // physical momentum k + pi
  return stagger * sum / config.length;
}

double lowest_sigma_minus_formfactor(const XxChainConfig& config) {
  if (config.filling < 2)
    throw domain_error("lowest_sigma_minus_formfactor: needs M >= 2");
  XxChainConfig bra = config;
  bra.filling = config.filling - 1;
  return removal_determinant(ground_indices(bra), ground_indices(config),
                             config.length);
}

double particle_hole_sigma_minus_formfactor(const XxChainConfig& config,
                                            const ChiralState& right,
                                            const ChiralState& left) {
  if (config.filling < 2)
    throw domain_error("particle_hole_sigma_minus_formfactor: needs M >= 2");
  right.validate();
  left.validate();

  XxChainConfig bra_config = config;
  bra_config.filling = config.filling - 1;
  const auto base = ground_indices(bra_config);
  const int d_top = base.back();
  const int d_bot = base.front();

  std::set<int> occ(base.begin(), base.end());
  auto remove_orbital = [&](int d) {
    d = wrap_index(d, config.length);
    if (occ.erase(d) != 1)
      throw invalid_state_error(
          "particle_hole_sigma_minus_formfactor: hole target not occupied");
  };
  auto add_orbital = [&](int d) {
    d = wrap_index(d, config.length);
    if (!occ.insert(d).second)
      throw invalid_state_error(
          "particle_hole_sigma_minus_formfactor: momentum collision");
  };
  // Right branch climbs from the top of the sea, left branch mirrors down
  // from the bottom; integer momenta count grid steps of 2 pi / L.
  for (int q : right.holes) remove_orbital(d_top + 2 * q);
  for (int p : right.particles) add_orbital(d_top + 2 * p);
  for (int q : left.holes) remove_orbital(d_bot - 2 * q);
  for (int p : left.particles) add_orbital(d_bot - 2 * p);

  const std::vector<int> bra(occ.begin(), occ.end());
  return removal_determinant(bra, ground_indices(config), config.length);
}

double transverse_correlator(const XxChainConfig& config, int x) {
  if (x < 1 || x >= config.length)
    throw domain_error("transverse_correlator: separation must be in [1, L)");
  // <sigma^x sigma^x> = det of the string Wick contractions; the x <-> y
  // rotation symmetry of the chain makes <sigma^+ sigma^-> half of it.
  std::vector<double> g(2 * x + 1);
  for (int r = -x; r <= x; ++r) g[r + x] = propagator(config, r);
  auto gm = [&](int r) { return 2.0 * g[r + x] - (r == 0 ? 1.0 : 0.0); };
  Eigen::MatrixXd t(x, x);
  for (int i = 0; i < x; ++i)
    for (int c = 0; c < x; ++c) t(i, c) = gm(i - c - 1);
  return 0.5 * t.determinant();
}

double density_correlator(const XxChainConfig& config, int x) {
  if (x < 1 || x >= config.length)
    throw domain_error("density_correlator: separation must be in [1, L)");
  const double g = propagator(config, x);
  return -4.0 * g * g;
}

double density_lowest_formfactor(const XxChainConfig& config,
                                 bool sigma_z_units) {
  const auto base = ground_indices(config);
  std::set<int> occ(base.begin(), base.end());
  const int d_new = wrap_index(base.back() + 2, config.length);
  if (occ.count(d_new))
    throw invalid_state_error(
        "density_lowest_formfactor: no room above the right Fermi point");
  occ.erase(base.front());
  occ.insert(d_new);
  // t' differs from t in exactly one orbital, so the one-body matrix
  // element of n_0 = (1/L) sum a^+_k a_{k'} has modulus 1/L.
  int differing = 0;
  for (int d : occ)
    if (!std::binary_search(base.begin(), base.end(), d)) ++differing;
  if (differing != 1)
    throw invalid_state_error("density_lowest_formfactor: not a single "
                              "momentum transfer");
  return (sigma_z_units ? 2.0 : 1.0) / config.length;
}

}  // namespace luttff
