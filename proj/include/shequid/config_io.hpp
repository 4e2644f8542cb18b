#pragma once

#include <string>
#include <vector>

#include "shequid/experiment_config.hpp"

namespace shequid {

/// Parse the TOML-style key-value config text. Unspecified keys take the
/// documented defaults; unknown sections or keys are errors carrying the
/// dotted key path. An empty document yields the default configuration.
ExperimentConfig parse_config(const std::string& text);

/// Load and parse a config file.
ExperimentConfig load_config(const std::string& path);

/// Emit the fully resolved config in the same format parse_config accepts;
/// emit -> parse round-trips to an equal config (full double precision).
std::string emit_config(const ExperimentConfig& config);

/// One swept parameter: a dotted path into the config plus explicit values
/// or a (min, max, count, log/linear) range.
struct SweepSpec {
  std::string parameter;        // e.g. "geometry.d"
  std::vector<double> values;   // resolved sweep points
};

/// Build sweep values from a range description.
std::vector<double> sweep_range(double min, double max, int count,
                                bool log_scale);

/// List of sweepable dotted parameter paths.
std::vector<std::string> sweepable_parameters();

/// Return a copy of the config with the dotted parameter set to value.
/// Unknown path or an invariant violation at the new value is an error.
ExperimentConfig with_parameter(const ExperimentConfig& config,
                                const std::string& path, double value);

/// Read a double parameter by dotted path (sweep bases, tests).
double get_parameter(const ExperimentConfig& config, const std::string& path);

}  // namespace shequid
