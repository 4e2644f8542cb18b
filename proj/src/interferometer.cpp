#include "shequid/interferometer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "shequid/coupling.hpp"

namespace shequid {

namespace {

void require_normalized(const JointState& state, const char* where) {
  const double norm2 = state.amplitudes.squaredNorm();
  if (std::abs(norm2 - 1.0) > 1e-10)
    throw std::invalid_argument(std::string(where) + ": state not normalized");
}

/// Reduced one-qubit coherence of the first interferometer, doubled:
/// 2 sum_k a_uk conj(a_lk).
std::complex<double> coherence(const JointState& state) {
  const auto& a = state.amplitudes;
  return 2.0 * (a[0] * std::conj(a[2]) + a[1] * std::conj(a[3]));
}

}  // namespace

BranchPhases branch_phases(const ExperimentConfig& config, Model model,
                           PairMode mode) {
  validate(config);
  if (model == Model::cg) return {};

  const double rho = rho_s(config.superfluid);
  const double m = arm_mass(config.geometry, rho);
  const double dt = junction_time(config.drive.f_J);
  const double A = resolve_form_factor(config, config.geometry.d);

  BranchPhases phases;
  const double d = config.geometry.d;
  phases.uu = grav_phase(m, d, dt, A, config.constants);
  if (mode == PairMode::full_pairwise) {
    const double d_cross = 2.0 * config.geometry.L;
    const double d_far = 2.0 * config.geometry.L + d;
    phases.ul = grav_phase(m, d_cross, dt, A, config.constants);
    phases.lu = phases.ul;
    phases.ll = grav_phase(m, d_far, dt, A, config.constants);
  }
  return phases;
}

JointState joint_state(const BranchPhases& phases) {
  for (double phi : {phases.uu, phases.ul, phases.lu, phases.ll})
    if (!std::isfinite(phi))
      throw std::invalid_argument("joint_state: non-finite branch phase");
  using namespace std::complex_literals;
  JointState state;
  state.amplitudes << 0.5 * std::exp(1i * phases.uu),
      0.5 * std::exp(1i * phases.ul), 0.5 * std::exp(1i * phases.lu),
      0.5 * std::exp(1i * phases.ll);
  return state;
}

EntanglementMeasures entanglement_measures(const JointState& state) {
  require_normalized(state, "entanglement_measures");
  const auto& a = state.amplitudes;

  EntanglementMeasures out;
  out.visibility = std::min(std::abs(coherence(state)), 1.0);
  out.concurrence = std::min(2.0 * std::abs(a[0] * a[3] - a[1] * a[2]), 1.0);

  // Negativity from the partial transpose over the second qubit:
  // (rho^Tb)[(i,j),(k,l)] = rho[(i,l),(k,j)], rho = |psi><psi|.
  Eigen::Matrix4cd rho_pt;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          rho_pt(2 * i + j, 2 * k + l) =
              a[2 * i + l] * std::conj(a[2 * k + j]);

  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> solver(rho_pt,
                                                         Eigen::EigenvaluesOnly);
  const Eigen::Vector4d ev = solver.eigenvalues();
  out.negativity = std::max(0.5 * (ev.cwiseAbs().sum() - 1.0), 0.0);
  return out;
}

double sagnac_phase(double omega_perp, double loop_area, double m4,
                    const PhysicalConstants& c) {
  if (!(loop_area > 0.0))
    throw std::domain_error("sagnac_phase: loop_area must be positive");
  return 2.0 * m4 * omega_perp * loop_area / c.hbar;
}

double detector_probability(const JointState& state, double theta) {
  require_normalized(state, "detector_probability");
  if (!std::isfinite(theta))
    throw std::invalid_argument("detector_probability: non-finite theta");
  using namespace std::complex_literals;
  const double p =
      0.5 * (1.0 + (std::exp(1i * theta) * coherence(state)).real());
  return std::clamp(p, 0.0, 1.0);
}

}  // namespace shequid
