#pragma once

#include <cstdint>

#include "shequid/experiment_config.hpp"
#include "shequid/noise.hpp"

namespace shequid {

/// Time-domain simulation of the piezo-modulated measurement protocol.
///
/// Per sample: d(t) = d - delta_d sin(2 pi f_m t); T(t) = T + AR(1) offset
/// feeds rho_s and the arm mass; branch phases follow the model (heater off
/// forces cg behaviour -- film-locked baths); theta(t) = Sagnac phase +
/// rotation-rate noise mapped through the loop + vortex drift and jumps;
/// y(t) = port probability + readout noise.
///
/// All noise streams draw from seeds derived from (config.seed xor `seed`
/// argument) with fixed counters, independent of the model, so qg/heater-off
/// and cg runs with equal seeds are bit-identical.
///
/// Preconditions: sample_rate >= 10 f_m and duration >= 10 / f_m; violations
/// throw with the bound named.
TimeSeries simulate_run(const ExperimentConfig& config, Model model,
                        const NoiseParams& noise, bool heater_on,
                        double duration, double sample_rate,
                        std::uint64_t seed);

/// simulate_run with model/heater/noise/seed taken from the config itself.
TimeSeries simulate_run(const ExperimentConfig& config, double duration,
                        double sample_rate);

}  // namespace shequid
