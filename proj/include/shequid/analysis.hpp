#pragma once

#include <complex>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "shequid/experiment_config.hpp"
#include "shequid/noise.hpp"

namespace shequid {

struct Harmonic {
  double frequency = 0.0;                 // [Hz]
  std::complex<double> amplitude{0.0, 0.0};  // complex lock-in output
  double magnitude = 0.0;                 // |amplitude|, probability units
  double phase = 0.0;                     // arg(amplitude) [rad]
};

struct LockinResult {
  std::vector<Harmonic> harmonics;  // n = 1..N_h at n * f_m
  double dc = 0.0;                  // mean over the integration window
  double noise_floor = 0.0;         // RMS amplitude at off-harmonic bins
  double integration_time = 0.0;    // [s], integer number of periods
  bool truncated = false;           // input was cut to integer periods
};

/// Empirical null distribution of the detection statistic (first-harmonic
/// magnitude) under the cg hypothesis.
struct NullDistribution {
  std::vector<double> amplitudes;  // sorted ascending
  std::uint64_t master_seed = 0;
};

enum class Verdict { qg_consistent, cg_consistent, inconclusive };

std::string to_string(Verdict v);

struct WitnessReport {
  Verdict verdict = Verdict::inconclusive;
  double detection_statistic = 0.0;  // measured first-harmonic magnitude
  double p_value = 1.0;              // empirical tail probability
  bool p_below_resolution = false;   // statistic exceeded every null sample
  std::size_t n_null = 0;
  double alpha = 0.01;               // qg threshold
  double cg_threshold = 0.05;        // cg threshold; between them: inconclusive
  std::optional<double> heater_ab_delta;  // heater-on minus heater-off h1
  ExperimentConfig config_echo;
};

/// In-phase/quadrature projection of the series onto n * f_m, n = 1..N_h,
/// over an integer number of modulation periods (excess samples truncated,
/// recorded in `truncated`). Noise floor from half-harmonic bins.
/// Errors: duration < 10/f_m, or any requested harmonic at or above Nyquist.
LockinResult lockin(const TimeSeries& series, double f_m, int n_harmonics);

/// Run n_runs cg simulations (heater on, run seeds derived from `seed` by
/// run index) and collect the first-harmonic magnitude of each.
/// Requires n_runs >= 100.
NullDistribution null_calibration(const ExperimentConfig& config,
                                  const NoiseParams& noise, int n_runs,
                                  std::uint64_t seed, double duration,
                                  double sample_rate);

/// Empirical tail p-value of the measured statistic under the null
/// (p = k/n with k = #{null >= measured}), two-threshold verdict.
/// heater_off, when given, fills heater_ab_delta = measured h1 - heater_off h1.
WitnessReport witness_decision(const LockinResult& measured,
                               const NullDistribution& null_dist,
                               double alpha = 0.01, double cg_threshold = 0.05,
                               const std::optional<LockinResult>& heater_off =
                                   std::nullopt);

}  // namespace shequid
