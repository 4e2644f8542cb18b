#include "shequid/config_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace shequid {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

struct RawValue {
  std::string text;
  bool quoted = false;
};

/// Minimal strict TOML subset: [section] headers, key = value lines,
/// '#' comments, values are numbers, booleans or quoted strings.
std::map<std::string, RawValue> tokenize(const std::string& text) {
  std::map<std::string, RawValue> entries;
  std::istringstream in(text);
  std::string line;
  std::string section;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    // Strip comment (quotes in our grammar never contain '#').
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto strip = [](std::string s) {
      const auto b = s.find_first_not_of(" \t\r");
      if (b == std::string::npos) return std::string{};
      const auto e = s.find_last_not_of(" \t\r");
      return s.substr(b, e - b + 1);
    };
    line = strip(line);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        throw std::invalid_argument("config line " + std::to_string(line_no) +
                                    ": malformed section header");
      section = strip(line.substr(1, line.size() - 2));
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    const std::string key = strip(line.substr(0, eq));
    std::string value = strip(line.substr(eq + 1));
    if (key.empty() || value.empty())
      throw std::invalid_argument("config line " + std::to_string(line_no) +
                                  ": expected key = value");
    RawValue raw;
    if (value.size() >= 2 && value.front() == '"' && value.back() == '"') {
      raw.quoted = true;
      value = value.substr(1, value.size() - 2);
    }
    raw.text = value;
    const std::string path = section.empty() ? key : section + "." + key;
    if (!entries.emplace(path, raw).second)
      throw std::invalid_argument(path + ": duplicate key");
  }
  return entries;
}

class Reader {
 public:
  explicit Reader(std::map<std::string, RawValue> entries)
      : entries_(std::move(entries)) {}

  bool has(const std::string& path) const { return entries_.count(path) > 0; }

  double number(const std::string& path, double fallback) {
    const RawValue* raw = take(path);
    if (!raw) return fallback;
    return parse_number(path, *raw);
  }

  std::uint64_t integer(const std::string& path, std::uint64_t fallback) {
    const RawValue* raw = take(path);
    if (!raw) return fallback;
    try {
      std::size_t pos = 0;
      const auto v = std::stoull(raw->text, &pos);
      if (pos != raw->text.size()) throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument(path + ": expected a non-negative integer, got \"" +
                                  raw->text + "\"");
    }
  }

  bool boolean(const std::string& path, bool fallback) {
    const RawValue* raw = take(path);
    if (!raw) return fallback;
    if (raw->text == "true") return true;
    if (raw->text == "false") return false;
    throw std::invalid_argument(path + ": expected true or false, got \"" +
                                raw->text + "\"");
  }

  std::string string(const std::string& path, const std::string& fallback) {
    const RawValue* raw = take(path);
    if (!raw) return fallback;
    if (!raw->quoted)
      throw std::invalid_argument(path + ": expected a quoted string");
    return raw->text;
  }

  /// The form factor accepts "computed", "reference" or a number.
  void form_factor(const std::string& path, ExperimentConfig& config) {
    const RawValue* raw = take(path);
    if (!raw) return;
    if (raw->quoted || raw->text == "computed" || raw->text == "reference") {
      if (raw->text == "computed")
        config.form_factor_policy = FormFactorPolicy::computed;
      else if (raw->text == "reference")
        config.form_factor_policy = FormFactorPolicy::reference;
      else
        throw std::invalid_argument(path +
                                    ": expected \"computed\", \"reference\" or a "
                                    "number, got \"" + raw->text + "\"");
      return;
    }
    config.form_factor_policy = FormFactorPolicy::explicit_value;
    config.form_factor_value = parse_number(path, *raw);
  }

  /// Every recognized key must be consumed before this is called.
  void reject_unknown() const {
    if (!entries_.empty())
      throw std::invalid_argument(entries_.begin()->first + ": unknown key");
  }

 private:
  // Returned pointer is valid until the next take().
  const RawValue* take(const std::string& path) {
    const auto it = entries_.find(path);
    if (it == entries_.end()) return nullptr;
    last_ = it->second;
    entries_.erase(it);
    return &last_;
  }

  static double parse_number(const std::string& path, const RawValue& raw) {
    try {
      std::size_t pos = 0;
      const double v = std::stod(raw.text, &pos);
      if (pos != raw.text.size() || !std::isfinite(v))
        throw std::invalid_argument("");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument(path + ": expected a finite number, got \"" +
                                  raw.text + "\"");
    }
  }

  std::map<std::string, RawValue> entries_;
  RawValue last_;
};

}  // namespace

ExperimentConfig parse_config(const std::string& text) {
  Reader reader(tokenize(text));
  ExperimentConfig config;

  config.superfluid.T_lambda = reader.number("superfluid.T_lambda", config.superfluid.T_lambda);
  config.superfluid.rho_lambda = reader.number("superfluid.rho_lambda", config.superfluid.rho_lambda);
  const bool t_given = reader.has("superfluid.T");
  config.superfluid.T = reader.number("superfluid.T", config.superfluid.T);
  if (!t_given)  // default: 20 microkelvin below the (possibly overridden) lambda point
    config.superfluid.T = config.superfluid.T_lambda - 20e-6;
  config.superfluid.epsilon_r = reader.number("superfluid.epsilon_r", config.superfluid.epsilon_r);
  config.superfluid.allow_wide_regime =
      reader.boolean("superfluid.allow_wide_regime", config.superfluid.allow_wide_regime);

  config.geometry.L = reader.number("geometry.L", config.geometry.L);
  config.geometry.sigma = reader.number("geometry.sigma", config.geometry.sigma);
  config.geometry.d = reader.number("geometry.d", config.geometry.d);
  const bool area_given = reader.has("geometry.loop_area");
  config.geometry.loop_area = reader.number("geometry.loop_area", config.geometry.loop_area);
  if (!area_given) config.geometry.loop_area = config.geometry.L * config.geometry.L;

  config.drive.f_J = reader.number("drive.f_J", config.drive.f_J);
  config.drive.delta_d = reader.number("drive.delta_d", config.drive.delta_d);
  config.drive.f_m = reader.number("drive.f_m", config.drive.f_m);
  config.drive.E_field = reader.number("drive.E_field", config.drive.E_field);
  config.drive.orientation = orientation_from_string(
      reader.string("drive.E_orientation", to_string(config.drive.orientation)));

  config.noise.vortex_rate = reader.number("noise.vortex_rate", config.noise.vortex_rate);
  config.noise.vortex_jump_rms = reader.number("noise.vortex_jump_rms", config.noise.vortex_jump_rms);
  config.noise.baseline_drift_bound =
      reader.number("noise.baseline_drift_bound", config.noise.baseline_drift_bound);
  config.noise.temp_rms = reader.number("noise.temp_rms", config.noise.temp_rms);
  config.noise.temp_corr_time = reader.number("noise.temp_corr_time", config.noise.temp_corr_time);
  config.noise.rotation_noise_asd =
      reader.number("noise.rotation_noise_asd", config.noise.rotation_noise_asd);
  config.noise.readout_noise_rms =
      reader.number("noise.readout_noise_rms", config.noise.readout_noise_rms);
  config.noise.readout_mode = readout_mode_from_string(
      reader.string("noise.readout_mode", to_string(config.noise.readout_mode)));
  config.noise.counts_per_sample =
      reader.integer("noise.counts_per_sample", config.noise.counts_per_sample);

  config.model = model_from_string(reader.string("run.model", to_string(config.model)));
  config.heater_on = reader.boolean("run.heater_on", config.heater_on);
  config.mode = pair_mode_from_string(reader.string("run.mode", to_string(config.mode)));
  config.seed = reader.integer("run.seed", config.seed);
  config.omega_perp = reader.number("run.omega_perp", config.omega_perp);
  reader.form_factor("run.form_factor", config);
  config.E_max = reader.number("run.E_max", config.E_max);

  reader.reject_unknown();
  validate(config);
  return config;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open config file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_config(buffer.str());
}

std::string emit_config(const ExperimentConfig& config) {
  std::ostringstream out;
  out << "[superfluid]\n"
      << "T_lambda = " << fmt(config.superfluid.T_lambda) << "\n"
      << "rho_lambda = " << fmt(config.superfluid.rho_lambda) << "\n"
      << "T = " << fmt(config.superfluid.T) << "\n"
      << "epsilon_r = " << fmt(config.superfluid.epsilon_r) << "\n"
      << "allow_wide_regime = " << (config.superfluid.allow_wide_regime ? "true" : "false")
      << "\n\n";
  out << "[geometry]\n"
      << "L = " << fmt(config.geometry.L) << "\n"
      << "sigma = " << fmt(config.geometry.sigma) << "\n"
      << "d = " << fmt(config.geometry.d) << "\n"
      << "loop_area = " << fmt(config.geometry.loop_area) << "\n\n";
  out << "[drive]\n"
      << "f_J = " << fmt(config.drive.f_J) << "\n"
      << "delta_d = " << fmt(config.drive.delta_d) << "\n"
      << "f_m = " << fmt(config.drive.f_m) << "\n"
      << "E_field = " << fmt(config.drive.E_field) << "\n"
      << "E_orientation = \"" << to_string(config.drive.orientation) << "\"\n\n";
  out << "[noise]\n"
      << "vortex_rate = " << fmt(config.noise.vortex_rate) << "\n"
      << "vortex_jump_rms = " << fmt(config.noise.vortex_jump_rms) << "\n"
      << "baseline_drift_bound = " << fmt(config.noise.baseline_drift_bound) << "\n"
      << "temp_rms = " << fmt(config.noise.temp_rms) << "\n"
      << "temp_corr_time = " << fmt(config.noise.temp_corr_time) << "\n"
      << "rotation_noise_asd = " << fmt(config.noise.rotation_noise_asd) << "\n"
      << "readout_noise_rms = " << fmt(config.noise.readout_noise_rms) << "\n"
      << "readout_mode = \"" << to_string(config.noise.readout_mode) << "\"\n"
      << "counts_per_sample = " << config.noise.counts_per_sample << "\n\n";
  out << "[run]\n"
      << "model = \"" << to_string(config.model) << "\"\n"
      << "heater_on = " << (config.heater_on ? "true" : "false") << "\n"
      << "mode = \"" << to_string(config.mode) << "\"\n"
      << "seed = " << config.seed << "\n"
      << "omega_perp = " << fmt(config.omega_perp) << "\n";
  switch (config.form_factor_policy) {
    case FormFactorPolicy::computed: out << "form_factor = \"computed\"\n"; break;
    case FormFactorPolicy::reference: out << "form_factor = \"reference\"\n"; break;
    case FormFactorPolicy::explicit_value:
      out << "form_factor = " << fmt(config.form_factor_value) << "\n";
      break;
  }
  out << "E_max = " << fmt(config.E_max) << "\n";
  return out.str();
}

namespace {

struct ParameterBinding {
  const char* path;
  std::function<double&(ExperimentConfig&)> field;
};

const std::vector<ParameterBinding>& parameter_table() {
  static const std::vector<ParameterBinding> table = {
      {"superfluid.T_lambda", [](ExperimentConfig& c) -> double& { return c.superfluid.T_lambda; }},
      {"superfluid.rho_lambda", [](ExperimentConfig& c) -> double& { return c.superfluid.rho_lambda; }},
      {"superfluid.T", [](ExperimentConfig& c) -> double& { return c.superfluid.T; }},
      {"superfluid.epsilon_r", [](ExperimentConfig& c) -> double& { return c.superfluid.epsilon_r; }},
      {"geometry.L", [](ExperimentConfig& c) -> double& { return c.geometry.L; }},
      {"geometry.sigma", [](ExperimentConfig& c) -> double& { return c.geometry.sigma; }},
      {"geometry.d", [](ExperimentConfig& c) -> double& { return c.geometry.d; }},
      {"geometry.loop_area", [](ExperimentConfig& c) -> double& { return c.geometry.loop_area; }},
      {"drive.f_J", [](ExperimentConfig& c) -> double& { return c.drive.f_J; }},
      {"drive.delta_d", [](ExperimentConfig& c) -> double& { return c.drive.delta_d; }},
      {"drive.f_m", [](ExperimentConfig& c) -> double& { return c.drive.f_m; }},
      {"drive.E_field", [](ExperimentConfig& c) -> double& { return c.drive.E_field; }},
      {"noise.vortex_rate", [](ExperimentConfig& c) -> double& { return c.noise.vortex_rate; }},
      {"noise.vortex_jump_rms", [](ExperimentConfig& c) -> double& { return c.noise.vortex_jump_rms; }},
      {"noise.baseline_drift_bound", [](ExperimentConfig& c) -> double& { return c.noise.baseline_drift_bound; }},
      {"noise.temp_rms", [](ExperimentConfig& c) -> double& { return c.noise.temp_rms; }},
      {"noise.temp_corr_time", [](ExperimentConfig& c) -> double& { return c.noise.temp_corr_time; }},
      {"noise.rotation_noise_asd", [](ExperimentConfig& c) -> double& { return c.noise.rotation_noise_asd; }},
      {"noise.readout_noise_rms", [](ExperimentConfig& c) -> double& { return c.noise.readout_noise_rms; }},
      {"run.omega_perp", [](ExperimentConfig& c) -> double& { return c.omega_perp; }},
  };
  return table;
}

const ParameterBinding& find_binding(const std::string& path) {
  for (const auto& binding : parameter_table())
    if (path == binding.path) return binding;
  throw std::invalid_argument("unknown sweep parameter: " + path);
}

}  // namespace

std::vector<std::string> sweepable_parameters() {
  std::vector<std::string> names;
  names.reserve(parameter_table().size());
  for (const auto& binding : parameter_table()) names.emplace_back(binding.path);
  return names;
}

std::vector<double> sweep_range(double min, double max, int count,
                                bool log_scale) {
  if (count < 1) throw std::invalid_argument("sweep: count must be at least 1");
  if (log_scale && !(min > 0.0 && max > 0.0))
    throw std::invalid_argument("sweep: log scale requires positive endpoints");
  std::vector<double> values;
  values.reserve(static_cast<std::size_t>(count));
  if (count == 1) {
    values.push_back(min);
    return values;
  }
  for (int i = 0; i < count; ++i) {
    const double w = static_cast<double>(i) / (count - 1);
    values.push_back(log_scale ? min * std::pow(max / min, w)
                               : min + w * (max - min));
  }
  return values;
}

ExperimentConfig with_parameter(const ExperimentConfig& config,
                                const std::string& path, double value) {
  ExperimentConfig out = config;
  find_binding(path).field(out) = value;
  validate(out);
  return out;
}

double get_parameter(const ExperimentConfig& config, const std::string& path) {
  ExperimentConfig copy = config;
  return find_binding(path).field(copy);
}

}  // namespace shequid
