#pragma once

namespace qems {

// 2018 CODATA / SI exact values.
inline constexpr double hbar = 1.054571817e-34;      // J s
inline constexpr double k_boltzmann = 1.380649e-23;  // J / K
inline constexpr double electron_charge = 1.602176634e-19;  // C
inline constexpr double two_pi = 6.283185307179586476925287;

/// Convert an ordinary frequency in Hz to an angular frequency in rad/s.
/// All internal energies and rates are angular (hbar = 1); config files
/// and CSV columns use plain Hz.
inline constexpr double angular(double hz) { return two_pi * hz; }

/// Inverse of angular(): rad/s -> Hz.
inline constexpr double to_hz(double rad_per_s) { return rad_per_s / two_pi; }

/// Numerical tolerances shared across the library. One instance is
/// threaded through solvers; tests use the defaults.
struct Tolerances {
  double hermiticity = 1e-12;         // relative Frobenius deviation
  double trace_preservation = 1e-10;  // |vec(I)^dag L| / |L|
  double steady_residual = 1e-8;      // |L vec(rho)| / (|L| |vec(rho)|)
  double truncation_guard = 1e-3;     // top-level population warning limit
};

}  // namespace qems
