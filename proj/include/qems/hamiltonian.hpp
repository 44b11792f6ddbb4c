#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <vector>

#include "qems/constants.hpp"
#include "qems/operators.hpp"
#include "qems/transmon.hpp"

namespace qems {

/// Frequencies and couplings of the assembled system, all angular (rad/s).
/// g_lm / lambda_lm are the full coupling tables in the retained transmon
/// levels; they must be Hermitian as matrices in (l, m).
struct SystemParams {
  double omega_cpw = angular(4.94e9);
  double omega_nr = angular(3.47e9);
  Eigen::MatrixXd g_lm;       // transmon-cavity couplings, rad/s
  Eigen::MatrixXd lambda_lm;  // transmon-nanoresonator couplings, rad/s
  double drive_amplitude = 0.0;  // E_d, rad/s
  double drive_frequency = 0.0;  // omega_d, rad/s
};

/// Build the coupling table Sigma_lm = base * <l|n|m> / <0|n|1> from the
/// charge matrix elements, pinning the configured 01 coupling. `overrides`
/// optionally forces individual adjacent couplings (e.g. the measured
/// g_12) instead of the matrix-element ratio.
inline Eigen::MatrixXd coupling_table(
    const TransmonSpectrum& spectrum, double base_01,
    const std::vector<std::pair<int, double>>& overrides = {}) {
  const int n = spectrum.n_levels();
  const double n01 = spectrum.charge_elements(0, 1);
  if (n01 == 0.0)
    throw std::invalid_argument("coupling_table: vanishing <0|n|1> element");
  Eigen::MatrixXd t = spectrum.charge_elements * (base_01 / n01);
  for (auto [level, value] : overrides) {
    if (level < 0 || level + 1 >= n)
      throw std::invalid_argument("coupling_table: override level out of range");
    t(level, level + 1) = value;
    t(level + 1, level) = value;
  }
  return t;
}

/// Probe drive E_d (e^{i w t} a + e^{-i w t} a^dag), kept symbolic until the
/// frame transformation.
struct DriveTerm {
  double amplitude = 0.0;  // E_d, rad/s
  double frequency = 0.0;  // omega_d, rad/s

  bool is_null() const { return amplitude == 0.0; }
};

inline DriveTerm drive_hamiltonian(const SystemParams& p) {
  if (p.drive_amplitude < 0.0)
    throw std::invalid_argument("drive_hamiltonian: E_d must be >= 0");
  return {p.drive_amplitude, p.drive_frequency};
}

/// Lab-frame bare Hamiltonian: transmon levels + cavity + nanoresonator.
inline QuantumOperator bare_hamiltonian(const TransmonSpectrum& spectrum,
                                        const SystemParams& p,
                                        const HilbertLayout& layout) {
  if (spectrum.n_levels() != layout.dims[0])
    throw std::invalid_argument(
        "bare_hamiltonian: spectrum level count does not match transmon dimension");
  Matrix diag_t = Matrix::Zero(layout.dims[0], layout.dims[0]);
  for (int m = 0; m < layout.dims[0]; ++m) diag_t(m, m) = spectrum.levels(m);
  QuantumOperator h = embed({single_mode_layout(layout.dims[0]), diag_t}, 0, layout);
  QuantumOperator n_c = number_operator(layout.dims[1]);
  QuantumOperator n_b = number_operator(layout.dims[2]);
  h.mat += p.omega_cpw * embed(n_c, 1, layout).mat;
  h.mat += p.omega_nr * embed(n_b, 2, layout).mat;
  return h;
}

/// Lab-frame generalized Jaynes-Cummings couplings
///   H_T-cpw = sum_lm g_lm |l><m| (a^dag + a)
///   H_T-NR  = sum_lm lambda_lm |l><m| (b^dag + b)
inline std::pair<QuantumOperator, QuantumOperator> coupling_hamiltonians(
    const SystemParams& p, const HilbertLayout& layout) {
  const int dt = layout.dims[0];
  auto check = [&](const Eigen::MatrixXd& table, const char* name) {
    if (table.rows() != dt || table.cols() != dt)
      throw std::invalid_argument(std::string(name) + ": coupling table size mismatch");
    if ((table - table.transpose()).norm() > 1e-12 * std::max(1.0, table.norm()))
      throw std::invalid_argument(std::string(name) + ": coupling table is not Hermitian");
  };
  check(p.g_lm, "coupling_hamiltonians(g)");
  check(p.lambda_lm, "coupling_hamiltonians(lambda)");

  Matrix sigma_g = p.g_lm.cast<Complex>();
  Matrix sigma_l = p.lambda_lm.cast<Complex>();
  Matrix quad_c = annihilation(layout.dims[1]).mat;
  quad_c += quad_c.adjoint().eval();
  Matrix quad_b = annihilation(layout.dims[2]).mat;
  quad_b += quad_b.adjoint().eval();

  // Products of commuting embedded factors: sigma on the transmon times the
  // quadrature on the oscillator.
  QuantumOperator sg = embed({single_mode_layout(dt), sigma_g}, 0, layout);
  QuantumOperator sl = embed({single_mode_layout(dt), sigma_l}, 0, layout);
  QuantumOperator qc = embed({single_mode_layout(layout.dims[1]), quad_c}, 1, layout);
  QuantumOperator qb = embed({single_mode_layout(layout.dims[2]), quad_b}, 2, layout);
  QuantumOperator h_t_cpw{layout, sg.mat * qc.mat};
  QuantumOperator h_t_nr{layout, sl.mat * qb.mat};
  return {std::move(h_t_cpw), std::move(h_t_nr)};
}

/// Total-excitation operator N = sum_m m|m><m| + a^dag a + b^dag b.
inline QuantumOperator total_excitation(const HilbertLayout& layout) {
  QuantumOperator n = embed(number_operator(layout.dims[0]), 0, layout);
  n.mat += embed(number_operator(layout.dims[1]), 1, layout).mat;
  n.mat += embed(number_operator(layout.dims[2]), 2, layout).mat;
  return n;
}

/// Integer total excitation of each product-basis state.
inline std::vector<int> excitation_numbers(const HilbertLayout& layout) {
  std::vector<int> n(layout.total());
  int idx = 0;
  for (int m = 0; m < layout.dims[0]; ++m)
    for (int nc = 0; nc < layout.dims[1]; ++nc)
      for (int nb = 0; nb < layout.dims[2]; ++nb) n[idx++] = m + nc + nb;
  return n;
}

namespace detail {
/// Keep only the excitation-conserving part of an operator: entries between
/// basis states of equal total excitation. Applied to the lab-frame
/// (a^dag + a) couplings this is exactly the rotating-wave approximation and
/// also drops non-adjacent |l><m| terms.
inline Matrix excitation_conserving_part(const Matrix& m, const std::vector<int>& n) {
  Matrix out = Matrix::Zero(m.rows(), m.cols());
  for (int j = 0; j < m.cols(); ++j)
    for (int i = 0; i < m.rows(); ++i)
      if (n[i] == n[j]) out(i, j) = m(i, j);
  return out;
}
}  // namespace detail

/// Transform to the frame rotating at the drive frequency and apply the
/// rotating-wave approximation to both coupling terms: every subsystem
/// frequency is shifted by omega_d per excitation, counter-rotating coupling
/// terms drop, and the drive becomes the static E_d (a + a^dag).
inline QuantumOperator rotating_frame(const QuantumOperator& bare,
                                      const std::pair<QuantumOperator, QuantumOperator>& couplings,
                                      const DriveTerm& drive,
                                      double omega_d) {
  const HilbertLayout& layout = bare.layout;
  std::vector<int> n = excitation_numbers(layout);
  Matrix h = bare.mat - omega_d * total_excitation(layout).mat;
  h += detail::excitation_conserving_part(couplings.first.mat, n);
  h += detail::excitation_conserving_part(couplings.second.mat, n);
  if (!drive.is_null()) {
    Matrix a_full = embed(annihilation(layout.dims[1]), 1, layout).mat;
    h += drive.amplitude * (a_full + a_full.adjoint());
  }
  return {layout, std::move(h)};
}

}  // namespace qems
