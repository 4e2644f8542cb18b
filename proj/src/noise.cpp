#include "shequid/noise.hpp"

#include <cmath>
#include <stdexcept>

#include "shequid/rng.hpp"

namespace shequid {

NoiseParams NoiseParams::zero() {
  NoiseParams n;
  n.vortex_rate = 0.0;
  n.vortex_jump_rms = 0.0;
  n.baseline_drift_bound = 0.0;
  n.temp_rms = 0.0;
  n.temp_corr_time = 100.0;
  n.rotation_noise_asd = 0.0;
  n.readout_noise_rms = 0.0;
  return n;
}

void validate(const NoiseParams& n) {
  const auto check = [](double v, const char* field) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument(std::string("noise.") + field +
                                  ": must be non-negative and finite");
  };
  check(n.vortex_rate, "vortex_rate");
  check(n.vortex_jump_rms, "vortex_jump_rms");
  check(n.baseline_drift_bound, "baseline_drift_bound");
  check(n.temp_rms, "temp_rms");
  check(n.temp_corr_time, "temp_corr_time");
  check(n.rotation_noise_asd, "rotation_noise_asd");
  check(n.readout_noise_rms, "readout_noise_rms");
  if (n.readout_mode == ReadoutMode::counting && n.counts_per_sample == 0)
    throw std::invalid_argument("noise.counts_per_sample: must be positive");
}

std::vector<VortexEvent> vortex_events(const NoiseParams& noise,
                                       double duration, std::uint64_t seed) {
  if (!(duration > 0.0))
    throw std::invalid_argument("vortex_events: duration must be positive");
  std::vector<VortexEvent> events;
  if (noise.vortex_rate == 0.0) return events;

  rng::Sampler sampler(seed);
  double t = sampler.exponential(noise.vortex_rate);
  while (t < duration) {
    events.push_back({t, sampler.normal(0.0, noise.vortex_jump_rms)});
    t += sampler.exponential(noise.vortex_rate);
  }
  return events;
}

double vortex_drift_slope(const NoiseParams& noise, std::uint64_t seed) {
  if (noise.baseline_drift_bound == 0.0) return 0.0;
  rng::Sampler sampler(seed);
  const double six_hours = 6.0 * 3600.0;
  return sampler.uniform(-1.0, 1.0) * noise.baseline_drift_bound / six_hours;
}

Eigen::ArrayXd temperature_series(const NoiseParams& noise, double duration,
                                  double sample_rate, std::uint64_t seed) {
  if (!(duration > 0.0) || !(sample_rate > 0.0))
    throw std::invalid_argument(
        "temperature_series: duration and sample_rate must be positive");
  const auto n = static_cast<Eigen::Index>(std::llround(duration * sample_rate));
  Eigen::ArrayXd series = Eigen::ArrayXd::Zero(n);
  if (noise.temp_rms == 0.0 || n == 0) return series;

  // AR(1) with continuous-time correlation time tau: x_{k+1} = a x_k + s w_k,
  // a = exp(-dt/tau), s = rms sqrt(1 - a^2) keeps the process stationary at
  // the requested RMS from the first sample on.
  rng::Sampler sampler(seed);
  const double dt = 1.0 / sample_rate;
  const double a = noise.temp_corr_time > 0.0
                       ? std::exp(-dt / noise.temp_corr_time)
                       : 0.0;
  const double s = noise.temp_rms * std::sqrt(1.0 - a * a);
  double x = noise.temp_rms * sampler.normal();
  series[0] = x;
  for (Eigen::Index k = 1; k < n; ++k) {
    x = a * x + s * sampler.normal();
    series[k] = x;
  }
  return series;
}

}  // namespace shequid
