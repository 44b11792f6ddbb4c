#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <stdexcept>
#include <string>

#include "qems/constants.hpp"
#include "qems/tridiag.hpp"

namespace qems {

/// Cooper-pair-box parameters. Energies are given as ordinary frequencies
/// (E/h in Hz) the way they are quoted experimentally.
struct TransmonParams {
  double e_c_hz = 0.227e9;   // charging energy E_C/h
  double e_j0_hz = 15.4e9;   // maximum Josephson energy E_J0/h
  int n_charge_states = 51;  // odd number of charge basis states
  double n_g = 0.0;          // offset charge

  void validate() const {
    if (e_c_hz <= 0.0) throw std::invalid_argument("TransmonParams: E_C must be > 0");
    if (e_j0_hz <= 0.0) throw std::invalid_argument("TransmonParams: E_J0 must be > 0");
    if (n_charge_states < 11 || n_charge_states % 2 == 0)
      throw std::invalid_argument("TransmonParams: n_charge_states must be odd and >= 11");
  }
};

/// Flux-tuned Josephson energy E_J = E_J0 |cos(pi Phi/Phi0)|. The magnitude
/// is taken: a negative E_J is gauge-equivalent and the spectrum depends
/// only on |E_J|.
inline double josephson_energy(double e_j0, double flux) {
  return e_j0 * std::abs(std::cos(M_PI * flux));
}

/// Transition frequencies and charge matrix elements of the transmon at one
/// flux point. levels are referenced to the ground state and stored as
/// angular frequencies; charge_elements(l, m) = <l|n|m> is real symmetric
/// for n_g real, with signs fixed so every <m|n|m+1> >= 0.
struct TransmonSpectrum {
  double flux = 0.0;                 // Phi/Phi0
  Eigen::VectorXd levels;            // omega_0m, rad/s, levels(0) == 0
  Eigen::MatrixXd charge_elements;   // <l|n|m>, dimensionless

  int n_levels() const { return static_cast<int>(levels.size()); }

  /// omega_{l,l+1} in rad/s.
  double transition(int l) const { return levels(l + 1) - levels(l); }
};

/// Charge-basis CPB Hamiltonian: diagonal 4 E_C (n - n_g)^2, off-diagonal
/// -E_J/2 between adjacent charge states. Units follow the inputs (Hz here).
inline TridiagonalMatrix cpb_hamiltonian(const TransmonParams& p, double e_j_hz) {
  p.validate();
  const int ncs = p.n_charge_states;
  const int nmax = ncs / 2;
  TridiagonalMatrix t;
  t.diag.resize(ncs);
  t.sub.assign(ncs - 1, -0.5 * e_j_hz);
  for (int k = 0; k < ncs; ++k) {
    double n = double(k - nmax);
    t.diag[k] = 4.0 * p.e_c_hz * (n - p.n_g) * (n - p.n_g);
  }
  return t;
}

inline TransmonSpectrum spectrum_at_flux(const TransmonParams& p, double flux,
                                         int n_levels = 3) {
  if (n_levels < 2 || n_levels > 5)
    throw std::invalid_argument("spectrum_at_flux: n_levels must be in [2, 5]");
  double e_j = josephson_energy(p.e_j0_hz, flux);
  TridiagonalEigen eig = diagonalize(cpb_hamiltonian(p, e_j));

  TransmonSpectrum s;
  s.flux = flux;
  s.levels.resize(n_levels);
  for (int m = 0; m < n_levels; ++m)
    s.levels(m) = angular(eig.values(m) - eig.values(0));

  const int ncs = p.n_charge_states;
  const int nmax = ncs / 2;
  Eigen::VectorXd charge(ncs);
  for (int k = 0; k < ncs; ++k) charge(k) = double(k - nmax);

  Eigen::MatrixXd v = eig.vectors.leftCols(n_levels);
  // Deterministic gauge: flip eigenvector signs so <m|n|m+1> >= 0.
  for (int m = 0; m + 1 < n_levels; ++m) {
    double elem = v.col(m).dot(charge.cwiseProduct(v.col(m + 1)));
    if (elem < 0.0) v.col(m + 1) *= -1.0;
  }
  s.charge_elements.resize(n_levels, n_levels);
  for (int l = 0; l < n_levels; ++l)
    for (int m = 0; m < n_levels; ++m)
      s.charge_elements(l, m) = v.col(l).dot(charge.cwiseProduct(v.col(m)));
  return s;
}

/// Locate the flux in [0, 1/2] where omega_01 equals `target` (rad/s) by
/// bisection; omega_01 is monotone decreasing on that interval.
inline double flux_for_frequency(const TransmonParams& p, double target,
                                 double rel_tol = 1e-6) {
  auto w01 = [&](double flux) { return spectrum_at_flux(p, flux, 2).levels(1); };
  double lo = 0.0, hi = 0.5;
  double w_lo = w01(lo), w_hi = w01(hi);
  if (target > w_lo || target < w_hi)
    throw std::invalid_argument(
        "flux_for_frequency: target " + std::to_string(to_hz(target)) +
        " Hz outside the tunable range [" + std::to_string(to_hz(w_hi)) + ", " +
        std::to_string(to_hz(w_lo)) + "] Hz");
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    double w = w01(mid);
    if (std::abs(w - target) <= rel_tol * target) return mid;
    if (w > target)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace qems
