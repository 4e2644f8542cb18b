#include "shequid/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "shequid/rng.hpp"
#include "shequid/simulate.hpp"

namespace shequid {

namespace {

/// Complex projection of y onto frequency f over the first n_used samples:
/// (2/N) sum y_k exp(-i 2 pi f t_k). For an integer number of periods this
/// returns the complex amplitude of a cos(2 pi f t + psi) component.
std::complex<double> project(const Eigen::ArrayXd& t, const Eigen::ArrayXd& y,
                             Eigen::Index n_used, double f) {
  const Eigen::ArrayXd arg = 2.0 * M_PI * f * t.head(n_used);
  const double re = (y.head(n_used) * arg.cos()).sum();
  const double im = (y.head(n_used) * arg.sin()).sum();
  return {2.0 * re / static_cast<double>(n_used),
          -2.0 * im / static_cast<double>(n_used)};
}

}  // namespace

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::qg_consistent: return "QG-consistent";
    case Verdict::cg_consistent: return "CG-consistent";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "inconclusive";
}

LockinResult lockin(const TimeSeries& series, double f_m, int n_harmonics) {
  const auto n = series.t.size();
  if (n < 2 || series.y.size() != n)
    throw std::invalid_argument("lockin: series must have matching t and y");
  if (!(f_m > 0.0)) throw std::invalid_argument("lockin: f_m must be positive");
  if (n_harmonics < 1)
    throw std::invalid_argument("lockin: need at least one harmonic");
  const double rate = series.sample_rate;
  if (!(rate > 0.0))
    throw std::invalid_argument("lockin: sample_rate must be positive");
  if (!(f_m * n_harmonics < 0.5 * rate))
    throw std::invalid_argument("lockin: requested harmonic at or above Nyquist");

  const double duration = static_cast<double>(n) / rate;
  if (duration * f_m < 10.0 * (1.0 - 1e-12))
    throw std::invalid_argument("lockin: duration must cover at least 10 modulation periods");

  // Integer number of modulation periods; excess samples are dropped.
  const double periods = std::floor(duration * f_m + 1e-9);
  const double t_window = periods / f_m;
  auto n_used = static_cast<Eigen::Index>(std::floor(t_window * rate + 1e-9));
  n_used = std::min(n_used, n);

  LockinResult out;
  out.truncated = n_used < n;
  out.integration_time = static_cast<double>(n_used) / rate;
  out.dc = series.y.head(n_used).mean();

  out.harmonics.reserve(static_cast<std::size_t>(n_harmonics));
  for (int h = 1; h <= n_harmonics; ++h) {
    Harmonic harm;
    harm.frequency = h * f_m;
    harm.amplitude = project(series.t, series.y, n_used, harm.frequency);
    harm.magnitude = std::abs(harm.amplitude);
    harm.phase = std::arg(harm.amplitude);
    out.harmonics.push_back(harm);
  }

  // Noise floor: RMS projection magnitude at the half-harmonic bins, where
  // the modulation itself contributes nothing.
  double sum_sq = 0.0;
  for (int h = 0; h < n_harmonics; ++h) {
    const double f_off = (h + 0.5) * f_m;
    sum_sq += std::norm(project(series.t, series.y, n_used, f_off));
  }
  out.noise_floor = std::sqrt(sum_sq / n_harmonics);
  return out;
}

NullDistribution null_calibration(const ExperimentConfig& config,
                                  const NoiseParams& noise, int n_runs,
                                  std::uint64_t seed, double duration,
                                  double sample_rate) {
  if (n_runs < 100)
    throw std::invalid_argument("null_calibration: n_runs must be at least 100");
  NullDistribution null_dist;
  null_dist.master_seed = seed;
  null_dist.amplitudes.reserve(static_cast<std::size_t>(n_runs));
  for (int run = 0; run < n_runs; ++run) {
    const std::uint64_t run_seed =
        rng::derive_seed(seed, static_cast<std::uint64_t>(run));
    const TimeSeries series = simulate_run(config, Model::cg, noise, true,
                                           duration, sample_rate, run_seed);
    // Same integer-period window and projection as lockin, first harmonic
    // only (the off-harmonic floor is not needed per null run).
    const double f_m = config.drive.f_m;
    const double n_samples = static_cast<double>(series.t.size());
    const double periods = std::floor(n_samples / sample_rate * f_m + 1e-9);
    const auto n_used = std::min<Eigen::Index>(
        static_cast<Eigen::Index>(std::floor(periods / f_m * sample_rate + 1e-9)),
        series.t.size());
    null_dist.amplitudes.push_back(
        std::abs(project(series.t, series.y, n_used, f_m)));
  }
  std::sort(null_dist.amplitudes.begin(), null_dist.amplitudes.end());
  return null_dist;
}

WitnessReport witness_decision(const LockinResult& measured,
                               const NullDistribution& null_dist,
                               double alpha, double cg_threshold,
                               const std::optional<LockinResult>& heater_off) {
  if (null_dist.amplitudes.empty())
    throw std::invalid_argument("witness_decision: null distribution is empty");
  if (measured.harmonics.empty())
    throw std::invalid_argument("witness_decision: measured result has no harmonics");

  WitnessReport report;
  report.alpha = alpha;
  report.cg_threshold = cg_threshold;
  report.n_null = null_dist.amplitudes.size();
  report.detection_statistic = measured.harmonics[0].magnitude;

  // Empirical tail probability p = k/n, k = #{null >= measured}. The sorted
  // null makes this a binary search.
  const auto& a = null_dist.amplitudes;
  const auto first_ge =
      std::lower_bound(a.begin(), a.end(), report.detection_statistic);
  const auto k = static_cast<std::size_t>(a.end() - first_ge);
  report.p_value = static_cast<double>(k) / static_cast<double>(a.size());
  report.p_below_resolution = (k == 0);

  if (report.p_value < alpha)
    report.verdict = Verdict::qg_consistent;
  else if (report.p_value > cg_threshold)
    report.verdict = Verdict::cg_consistent;
  else
    report.verdict = Verdict::inconclusive;

  if (heater_off.has_value()) {
    if (heater_off->harmonics.empty())
      throw std::invalid_argument("witness_decision: heater-off result has no harmonics");
    report.heater_ab_delta =
        report.detection_statistic - heater_off->harmonics[0].magnitude;
  }
  return report;
}

}  // namespace shequid
