#include "shequid/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "shequid/coupling.hpp"
#include "shequid/interferometer.hpp"
#include "shequid/rng.hpp"

namespace shequid {

namespace {

// Per-sample density: the config regime was validated up front; small
// thermometry excursions bypass the window guard and an above-lambda
// excursion simply carries zero superfluid density.
double rho_s_at(const SuperfluidParams& p, double T) {
  const double reduced = 1.0 - T / p.T_lambda;
  if (reduced <= 0.0) return 0.0;
  return 2.4 * p.rho_lambda * std::pow(reduced, 2.0 / 3.0);
}

}  // namespace

TimeSeries simulate_run(const ExperimentConfig& config, Model model,
                        const NoiseParams& noise, bool heater_on,
                        double duration, double sample_rate,
                        std::uint64_t seed) {
  validate(config);
  validate(noise);
  const double f_m = config.drive.f_m;
  if (!(sample_rate >= 10.0 * f_m))
    throw std::invalid_argument(
        "simulate_run: sample_rate must satisfy sample_rate >= 10 * f_m");
  if (!(duration >= 10.0 / f_m))
    throw std::invalid_argument(
        "simulate_run: duration must satisfy duration >= 10 / f_m");

  const auto n = static_cast<Eigen::Index>(std::llround(duration * sample_rate));
  const double dt = 1.0 / sample_rate;

  // Every noise source has its own derived stream, so sources that are
  // inactive for a given run are simply not sampled without shifting any
  // other stream. None of the streams depend on the model or heater state,
  // hence qg/heater-off and cg runs with the same seed are bit-identical.
  const bool entangling = (model == Model::qg) && heater_on;
  Eigen::ArrayXd temp;
  if (entangling && noise.temp_rms > 0.0)
    temp = temperature_series(noise, duration, sample_rate,
                              rng::derive_seed(seed, 1));
  const std::vector<VortexEvent> jumps =
      vortex_events(noise, duration, rng::derive_seed(seed, 2));
  const double drift_slope = vortex_drift_slope(noise, rng::derive_seed(seed, 3));
  rng::Sampler rotation(rng::derive_seed(seed, 4));
  rng::Sampler readout(rng::derive_seed(seed, 5));

  const double delta_t_j = junction_time(config.drive.f_J);
  const double theta_sagnac =
      sagnac_phase(config.omega_perp, config.geometry.loop_area,
                   config.constants.m_he4, config.constants);
  // White rotation-rate noise with the configured amplitude spectral density,
  // mapped through the Sagnac response of the loop.
  const double omega_sd = noise.rotation_noise_asd * std::sqrt(sample_rate / 2.0);
  const double sagnac_per_omega = 2.0 * config.constants.m_he4 *
                                  config.geometry.loop_area /
                                  config.constants.hbar;
  const bool with_rotation = omega_sd > 0.0;
  const bool gaussian_readout = noise.readout_mode == ReadoutMode::gaussian;
  const bool with_readout = gaussian_readout && noise.readout_noise_rms > 0.0;

  TimeSeries out;
  out.t = Eigen::ArrayXd::Zero(n);
  out.y = Eigen::ArrayXd::Zero(n);
  out.d_t = Eigen::ArrayXd::Zero(n);
  out.model = model;
  out.heater_on = heater_on;
  out.seed = seed;
  out.sample_rate = sample_rate;

  std::size_t next_jump = 0;
  double jump_offset = 0.0;

  for (Eigen::Index k = 0; k < n; ++k) {
    const double t = k * dt;
    out.t[k] = t;
    const double d_now =
        config.geometry.d - config.drive.delta_d * std::sin(2.0 * M_PI * f_m * t);
    out.d_t[k] = d_now;

    while (next_jump < jumps.size() && jumps[next_jump].time <= t) {
      jump_offset += jumps[next_jump].jump;
      ++next_jump;
    }
    double theta = theta_sagnac + drift_slope * t + jump_offset;
    if (with_rotation) theta += sagnac_per_omega * omega_sd * rotation.normal();

    double p;
    if (entangling) {
      const double T_now =
          config.superfluid.T + (temp.size() > 0 ? temp[k] : 0.0);
      const double rho = rho_s_at(config.superfluid, T_now);
      const double m = arm_mass(config.geometry, rho);
      const double A = resolve_form_factor(config, d_now);
      BranchPhases phases;
      phases.uu = grav_phase(m, d_now, delta_t_j, A, config.constants);
      if (config.mode == PairMode::full_pairwise) {
        const double d_cross = 2.0 * config.geometry.L;
        phases.ul = grav_phase(m, d_cross, delta_t_j, A, config.constants);
        phases.lu = phases.ul;
        phases.ll = grav_phase(m, d_cross + d_now, delta_t_j, A, config.constants);
      }
      p = detector_probability(joint_state(phases), theta);
    } else {
      // Bit-identical to detector_probability(joint_state({}), theta): the
      // zero-phase product state has coherence exactly (1, 0).
      p = 0.5 * (1.0 + std::cos(theta));
    }

    double y = p;
    if (gaussian_readout) {
      if (with_readout) y = p + noise.readout_noise_rms * readout.normal();
    } else {
      const double clamped = std::clamp(p, 0.0, 1.0);
      std::uint64_t hits = 0;
      for (std::uint64_t c = 0; c < noise.counts_per_sample; ++c)
        if (readout.bernoulli(clamped)) ++hits;
      y = static_cast<double>(hits) / static_cast<double>(noise.counts_per_sample);
    }
    out.y[k] = y;
  }
  return out;
}

TimeSeries simulate_run(const ExperimentConfig& config, double duration,
                        double sample_rate) {
  return simulate_run(config, config.model, config.noise, config.heater_on,
                      duration, sample_rate, config.seed);
}

}  // namespace shequid
