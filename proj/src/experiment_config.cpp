#include "shequid/experiment_config.hpp"

#include <cmath>
#include <stdexcept>

namespace shequid {

void validate(const ExperimentConfig& config) {
  validate(config.superfluid);
  validate(config.geometry);
  validate(config.drive);
  validate(config.noise);
  if (!(config.drive.delta_d < config.geometry.d))
    throw std::invalid_argument(
        "drive.delta_d: modulation amplitude must be smaller than geometry.d");
  if (config.form_factor_policy == FormFactorPolicy::explicit_value &&
      !(config.form_factor_value > 0.0))
    throw std::invalid_argument("run.form_factor: explicit value must be positive");
  if (!(config.E_max > 0.0))
    throw std::invalid_argument("run.E_max: must be positive");
  if (!std::isfinite(config.omega_perp))
    throw std::invalid_argument("run.omega_perp: must be finite");
}

}  // namespace shequid
