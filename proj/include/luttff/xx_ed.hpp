#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <map>
#include <vector>

namespace luttff {

inline constexpr int kEdMaxLength = 12;

// Full diagonalization of the periodic XX chain, H = sum_i (s+_i s-_{i+1}
// + h.c.), per magnetization sector. Independent ground truth for every
// free-fermion quantity: no Jordan-Wigner anywhere, just spin flips on
// bitmasks.
class XxEd {
 public:
  explicit XxEd(int length);

  int length() const { return length_; }

  double sector_ground_energy(int m);

  // <s+_{base+x} s-_base> in the half-filling ground state.
  double transverse_correlator(int x, int base_site = 0);

  // Connected <sz_{base+x} sz_base> at half filling.
  double density_correlator(int x, int base_site = 0);

  // |<GS_{M-1}| s-_0 |GS_M>| at half filling.
  double lowest_sigma_minus();

  // |<t'| n_0 |t>| where t' is the lowest eigenstate whose momentum differs
  // from the ground state's by pi. The +-2p_F pair is exactly degenerate, so
  // the invariant quantity is the norm of n_0|t> projected onto that
  // (energy, momentum) multiplet divided by sqrt(multiplicity).
  double density_lowest_formfactor(bool sigma_z_units = true);

 private:
  struct Sector {
    std::vector<std::uint32_t> masks;
    Eigen::VectorXd energies;
    Eigen::MatrixXd vectors;  // columns, ascending energy
  };

  const Sector& sector(int m);
  int index_of(const Sector& s, std::uint32_t mask) const;
  std::uint32_t rotate(std::uint32_t mask) const;
  Eigen::VectorXd translate(const Sector& s, const Eigen::VectorXd& v) const;

  int length_;
  std::map<int, Sector> cache_;
};

}  // namespace luttff
