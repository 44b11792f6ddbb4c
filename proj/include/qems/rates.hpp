#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

#include "qems/constants.hpp"
#include "qems/operators.hpp"
#include "qems/transmon.hpp"

namespace qems {

/// Bath temperatures in kelvin. Defaults follow the base-temperature
/// operating point; the nanoresonator temperature is swept by the
/// spectroscopy layer.
struct BathSpec {
  double t_transmon = 0.030;
  double t_cavity = 0.045;
  double t_nanoresonator = 0.030;

  void validate() const {
    if (t_transmon < 0 || t_cavity < 0 || t_nanoresonator < 0)
      throw std::invalid_argument("BathSpec: temperatures must be >= 0");
  }
};

/// Bose-Einstein occupation 1/(exp(hbar w / kB T) - 1); zero at T = 0.
inline double bose_occupation(double omega, double temperature) {
  if (omega <= 0.0) throw std::invalid_argument("bose_occupation: omega must be > 0");
  if (temperature <= 0.0) return 0.0;
  return 1.0 / std::expm1(hbar * omega / (k_boltzmann * temperature));
}

/// Boltzmann ratio exp(-hbar w / kB T) governing up/down rate pairs.
inline double detailed_balance_ratio(double omega, double temperature) {
  if (temperature <= 0.0) return 0.0;
  return std::exp(-hbar * omega / (k_boltzmann * temperature));
}

/// All dissipative rates of the master equation, angular units (1/s).
/// Up/down pairs obey the detailed-balance ratio of their subsystem by
/// construction and Gamma01_down + Gamma01_up = 1/T1 exactly.
struct RateSet {
  double kappa_cpw_down = 0, kappa_cpw_up = 0;
  double kappa_nr_down = 0, kappa_nr_up = 0;
  double gamma01_down = 0, gamma01_up = 0;
  double gamma12_down = 0, gamma12_up = 0;
  double gamma_phi1 = 0, gamma_phi2 = 0;
};

/// Cavity decay rate from a loaded quality factor, angular units.
inline double kappa_from_quality(double omega, double q_loaded) {
  if (q_loaded <= 0.0) throw std::invalid_argument("kappa_from_quality: Q must be > 0");
  return omega / q_loaded;
}

/// Split measured totals into up/down pairs by detailed balance.
///   - Gamma01 pair sums to 1/T1; the thermal ratio uses omega_01 at T_Q.
///   - Gamma12_down = gamma12_scale * Gamma01_down (paper-silent; harmonic
///     matrix-element scaling by default).
///   - gamma_phi1 = 1/T_phi with 1/T2* = 1/(2 T1) + 1/T_phi;
///     gamma_phi2 = gamma_phi2_scale * gamma_phi1.
inline RateSet rates_from_measured(double t1, double t2_star, double kappa_cpw,
                                   double kappa_nr, const BathSpec& bath,
                                   const TransmonSpectrum& spectrum,
                                   double gamma12_scale = 2.0,
                                   double gamma_phi2_scale = 2.0) {
  if (t1 <= 0 || t2_star <= 0 || kappa_cpw <= 0 || kappa_nr <= 0)
    throw std::invalid_argument("rates_from_measured: all inputs must be positive");
  if (t2_star > 2.0 * t1)
    throw std::invalid_argument("rates_from_measured: T2* > 2 T1 is unphysical");
  bath.validate();

  RateSet r;
  double w01 = spectrum.transition(0);
  double ratio01 = detailed_balance_ratio(w01, bath.t_transmon);
  r.gamma01_down = (1.0 / t1) / (1.0 + ratio01);
  r.gamma01_up = r.gamma01_down * ratio01;

  r.gamma12_down = gamma12_scale * r.gamma01_down;
  if (spectrum.n_levels() > 2) {
    double w12 = spectrum.transition(1);
    r.gamma12_up = r.gamma12_down * detailed_balance_ratio(w12, bath.t_transmon);
  }

  r.gamma_phi1 = 1.0 / t2_star - 1.0 / (2.0 * t1);
  r.gamma_phi2 = gamma_phi2_scale * r.gamma_phi1;

  return r;
}

/// Fill in the oscillator pairs; omega arguments are the mode frequencies.
inline void set_oscillator_rates(RateSet& r, double kappa_cpw, double omega_cpw,
                                 double kappa_nr, double omega_nr,
                                 const BathSpec& bath) {
  r.kappa_cpw_down = kappa_cpw;
  r.kappa_cpw_up = kappa_cpw * detailed_balance_ratio(omega_cpw, bath.t_cavity);
  r.kappa_nr_down = kappa_nr;
  r.kappa_nr_up = kappa_nr * detailed_balance_ratio(omega_nr, bath.t_nanoresonator);
}

/// One weighted collapse operator of the master equation.
struct CollapseTerm {
  double rate;  // prefactor multiplying D[op], angular units
  QuantumOperator op;
};

/// The paper's collapse set: (a, a^dag) and (b, b^dag) thermal pairs,
/// transmon ladder relaxation/absorption |l><l+1| / |l+1><l|, and level
/// dephasing projectors |i><i| carrying the gamma_phi/2 weighting.
/// Supports 2- or 3-level transmon truncations.
inline std::vector<CollapseTerm> collapse_operators(const RateSet& r,
                                                    const HilbertLayout& layout) {
  const int dt = layout.dims[0];
  if (dt != 2 && dt != 3)
    throw std::invalid_argument("collapse_operators: transmon dimension must be 2 or 3");
  std::vector<CollapseTerm> c;
  c.push_back({r.kappa_cpw_down, embed(annihilation(layout.dims[1]), 1, layout)});
  c.push_back({r.kappa_cpw_up, embed(annihilation(layout.dims[1]).adjoint(), 1, layout)});
  c.push_back({r.kappa_nr_down, embed(annihilation(layout.dims[2]), 2, layout)});
  c.push_back({r.kappa_nr_up, embed(annihilation(layout.dims[2]).adjoint(), 2, layout)});
  c.push_back({r.gamma01_down, embed(transition(0, 1, dt), 0, layout)});
  c.push_back({r.gamma01_up, embed(transition(1, 0, dt), 0, layout)});
  c.push_back({r.gamma_phi1 / 2.0, embed(transition(1, 1, dt), 0, layout)});
  if (dt == 3) {
    c.push_back({r.gamma12_down, embed(transition(1, 2, dt), 0, layout)});
    c.push_back({r.gamma12_up, embed(transition(2, 1, dt), 0, layout)});
    c.push_back({r.gamma_phi2 / 2.0, embed(transition(2, 2, dt), 0, layout)});
  }
  return c;
}

}  // namespace qems
