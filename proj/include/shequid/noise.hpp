#pragma once

#include <cstdint>
#include <vector>

#include <Eigen/Dense>

#include "shequid/types.hpp"

namespace shequid {

/// Disturbance budget for a measurement run. All magnitudes non-negative;
/// zeroing a field switches that noise source off.
struct NoiseParams {
  double vortex_rate = 1.0 / (4.0 * 3600.0);  // phase-jump events [1/s]
  double vortex_jump_rms = 1e-2;              // jump magnitude [rad]
  double baseline_drift_bound = 2e-3;         // drift accumulation per 6 h [rad]
  double temp_rms = 50e-9;                    // temperature stability [K]
  double temp_corr_time = 100.0;              // AR(1) correlation time [s]
  double rotation_noise_asd = 0.0;            // platform rate noise [rad/s/sqrt(Hz)]
  double readout_noise_rms = 1e-3;            // additive probability noise
  ReadoutMode readout_mode = ReadoutMode::gaussian;
  std::uint64_t counts_per_sample = 1000;     // counting-mode window size

  /// All sources off; used by the protocol null tests.
  static NoiseParams zero();
};

void validate(const NoiseParams& n);

/// One abrupt vortex-induced phase jump.
struct VortexEvent {
  double time = 0.0;  // [s]
  double jump = 0.0;  // [rad]
};

/// Sampled detector record from one run.
struct TimeSeries {
  Eigen::ArrayXd t;    // sample times [s], uniform
  Eigen::ArrayXd y;    // detector port probability samples
  Eigen::ArrayXd d_t;  // instantaneous arm separation trace [m]
  Model model = Model::qg;
  bool heater_on = true;
  std::uint64_t seed = 0;
  double sample_rate = 0.0;  // [Hz]
};

/// Poisson-distributed jump times at noise.vortex_rate over [0, duration),
/// jump sizes Gaussian with noise.vortex_jump_rms. Deterministic in seed.
std::vector<VortexEvent> vortex_events(const NoiseParams& noise,
                                       double duration, std::uint64_t seed);

/// Slow baseline drift slope [rad/s]: a seeded uniform draw whose 6-hour
/// accumulation stays within +/- noise.baseline_drift_bound.
double vortex_drift_slope(const NoiseParams& noise, std::uint64_t seed);

/// Stationary AR(1) temperature offsets sampled at sample_rate, zero mean,
/// asymptotic RMS noise.temp_rms, correlation time noise.temp_corr_time.
Eigen::ArrayXd temperature_series(const NoiseParams& noise, double duration,
                                  double sample_rate, std::uint64_t seed);

}  // namespace shequid
