#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace luttff {

// Physics input outside the validity region (coupling beyond the stability
// window, separation off the ring, ...). CLI exit code 2.
struct domain_error : std::domain_error {
  using std::domain_error::domain_error;
};

// Malformed particle-hole content: repeated momenta, broken canonical order,
// mismatched particle/hole counts.
struct invalid_state_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// A configured cap was exceeded (enumeration level, Fock cutoff, ED size).
// CLI exit code 3.
struct resource_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A squared quantity came out negative, i.e. the sign bookkeeping of a
// scaling relation does not match the supplied data.
struct inconsistency_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Rank-deficient least-squares design (window too small, aliased wavenumbers).
struct fit_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Non-unique Fermi shell; carries the momenta tied at the Fermi energy.
struct degeneracy_error : std::runtime_error {
  degeneracy_error(const std::string& what, std::vector<double> tied)
      : std::runtime_error(what), tied_momenta(std::move(tied)) {}

  std::vector<double> tied_momenta;
};

}  // namespace luttff
