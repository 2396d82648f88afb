#include "luttff/params.hpp"

#include <cmath>
#include <string>

#include "luttff/errors.hpp"

namespace luttff {

void LuttingerParams::validate() const {
  if (!(xi > 0.0)) throw domain_error("LuttingerParams: xi must be > 0");
  if (!(u > 0.0)) throw domain_error("LuttingerParams: u must be > 0");
  if (!(length > 0.0)) throw domain_error("LuttingerParams: length must be > 0");
}

void SectorCharge::validate() const {
  if ((delta_n + delta_q) % 2 != 0)
    throw invalid_state_error(
        "SectorCharge: dN + dQ must be even (integer branch charges)");
}

LuttingerParams params_from_coupling(double lambda, double length,
                                     double fermi_momentum) {
  if (!(std::fabs(lambda) < 1.0))
    throw domain_error("params_from_coupling: |lambda| >= 1 is outside the "
                       "stability window");
  LuttingerParams p;
  p.u = std::sqrt(1.0 - lambda * lambda);
  p.xi = std::sqrt((1.0 + lambda) / (1.0 - lambda));
  p.length = length;
  p.fermi_momentum = fermi_momentum;
  p.validate();
  return p;
}

double coupling_from_xi(double xi) {
  if (!(xi > 0.0)) throw domain_error("coupling_from_xi: xi must be > 0");
  return (xi * xi - 1.0) / (xi * xi + 1.0);
}

double xi_from_anisotropy(double delta) {
  if (!(delta > -1.0) || !(delta <= 1.0))
    throw domain_error("xi_from_anisotropy: anisotropy must lie in (-1, 1]");
  const double eta = std::acos(delta);
  return 2.0 * (M_PI - eta) / M_PI;
}

double finite_size_energy(const LuttingerParams& params,
                          const SectorCharge& charge) {
  params.validate();
  charge.validate();
  const double dn = charge.delta_n;
  const double dq = charge.delta_q;
  return (M_PI / (2.0 * params.length)) * params.u *
         (params.xi * dn * dn + dq * dq / params.xi);
}

}  // namespace luttff
