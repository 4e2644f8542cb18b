#pragma once

#include <complex>

#include <Eigen/Dense>

#include "shequid/constants.hpp"
#include "shequid/experiment_config.hpp"

namespace shequid {

/// Phases of the four arm-pair branches. u = near (side-by-side) arm,
/// l = far arm; uu means both masses in their near arms.
struct BranchPhases {
  double uu = 0.0;
  double ul = 0.0;
  double lu = 0.0;
  double ll = 0.0;
};

/// Joint path-qubit state of the two interferometers.
/// Amplitude ordering: (uu, ul, lu, ll). Normalized to 1 within 1e-12.
struct JointState {
  Eigen::Vector4cd amplitudes;
};

struct EntanglementMeasures {
  double visibility = 0.0;   // fringe contrast V in [0, 1]
  double concurrence = 0.0;  // C in [0, 1]
  double negativity = 0.0;   // N in [0, 0.5]
};

/// Branch phases under the given hypothesis.
///   qg / nearest_only: (phi, 0, 0, 0) with phi at separation d.
///   qg / full_pairwise: pair separations d, 2L, 2L, 2L + d. One form factor
///     (the near pair's, per the config policy) scales all branches so the
///     branch ratios follow the 1/d law exactly.
///   cg: all zeros -- classical attraction is branch-independent and absorbed
///     into the local phase offset.
BranchPhases branch_phases(const ExperimentConfig& config, Model model,
                           PairMode mode);

/// Equal-amplitude joint state a_jk = exp(i phi_jk)/2.
JointState joint_state(const BranchPhases& phases);

/// Visibility V = 2|sum_k a_uk conj(a_lk)|, pure-state concurrence
/// C = 2|a_uu a_ll - a_ul a_lu|, and negativity from the eigenvalues of the
/// partially transposed 4x4 density matrix. Throws on non-normalized input.
EntanglementMeasures entanglement_measures(const JointState& state);

/// Matter-wave rotation phase threading the loop: 2 m4 omega_perp area / hbar.
double sagnac_phase(double omega_perp, double loop_area,
                    double m4 = kCodata.m_he4,
                    const PhysicalConstants& c = kCodata);

/// Output-port probability P(+|theta) = (1 + Re[e^{i theta} * 2 sum_k a_uk
/// conj(a_lk)]) / 2. Throws on non-normalized input.
double detector_probability(const JointState& state, double theta);

}  // namespace shequid
