// Command-line front end: phase | formfactor | compensate | simulate |
// analyze | sweep. Every output embeds the resolved configuration and seed.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "shequid/analysis.hpp"
#include "shequid/config_io.hpp"
#include "shequid/coupling.hpp"
#include "shequid/csv.hpp"
#include "shequid/interferometer.hpp"
#include "shequid/rng.hpp"
#include "shequid/simulate.hpp"

namespace {

using namespace shequid;

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

struct CommonFlags {
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> model;
  std::optional<std::string> heater;
};

ExperimentConfig resolve_config(const CommonFlags& flags) {
  ExperimentConfig config =
      flags.config_path.empty() ? ExperimentConfig{} : load_config(flags.config_path);
  if (flags.seed) config.seed = *flags.seed;
  if (flags.model) config.model = model_from_string(*flags.model);
  if (flags.heater) {
    if (*flags.heater == "on")
      config.heater_on = true;
    else if (*flags.heater == "off")
      config.heater_on = false;
    else
      throw std::invalid_argument("--heater must be on or off");
  }
  validate(config);
  return config;
}

void add_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "config file (TOML key-value)");
  cmd->add_option("--seed", flags.seed, "master seed override");
  cmd->add_option("--model", flags.model, "qg | cg")
      ->check(CLI::IsMember({"qg", "cg"}));
  cmd->add_option("--heater", flags.heater, "on | off")
      ->check(CLI::IsMember({"on", "off"}));
}

void print_phase(const ExperimentConfig& config) {
  const CouplingResult r = couple(config);
  const double A_line = form_factor_line(config.geometry.L, config.geometry.d);
  const double A_quad = form_factor_line_quadrature(config.geometry.L, config.geometry.d);
  const double phi_ref = grav_phase(r.mass, config.geometry.d, r.delta_t,
                                    kReferenceFormFactor, config.constants);
  const double rho = rho_s(config.superfluid);
  const double theta = sagnac_phase(config.omega_perp, config.geometry.loop_area,
                                    config.constants.m_he4, config.constants);

  const double d_min = config.geometry.d - config.drive.delta_d;
  const double delta_phi =
      d_min > 0.0
          ? grav_phase(r.mass, d_min, r.delta_t, r.form_factor_A, config.constants) -
                r.phi_grav
          : 0.0;

  std::cout << "operating point\n";
  std::cout << "  superfluid density rho_s      " << fmt(rho) << " kg/m^3\n";
  std::cout << "  arm mass m                    " << fmt(r.mass) << " kg\n";
  std::cout << "  junction time dt_J            " << fmt(r.delta_t) << " s\n";
  std::cout << "  form factor A (line model)    " << fmt(A_line) << "\n";
  std::cout << "  form factor A (quadrature)    " << fmt(A_quad) << "\n";
  std::cout << "  form factor A (proposal)      " << fmt(kReferenceFormFactor) << "\n";
  std::cout << "  active form factor            " << fmt(r.form_factor_A) << "\n";
  std::cout << "  grav phase phi_G (active A)   " << fmt(r.phi_grav) << " rad\n";
  std::cout << "  grav phase phi_G (A = 0.5)    " << fmt(phi_ref) << " rad\n";
  std::cout << "  piezo phase excursion         " << fmt(delta_phi) << " rad at delta_d = "
            << fmt(config.drive.delta_d) << " m\n";
  std::cout << "  sagnac phase theta            " << fmt(theta) << " rad\n";
  if (config.drive.E_field > 0.0) {
    std::cout << "  em phase phi_E (signed)       " << fmt(r.phi_em) << " rad at E = "
              << fmt(config.drive.E_field) << " V/m\n";
  }
  std::cout << "notices\n";
  std::cout << "  - the line-mass model gives A = " << fmt(A_line)
            << " at this geometry; the proposal quotes ~0.5. Both are shown;\n"
            << "    no reconciliation is attempted.\n";
  std::cout << "  - the proposal expects the piezo (delta_d = 1e-6 m) to modulate the\n"
            << "    phase by ~1 rad, which corresponds to phi_G ~ 1e4 rad at these\n"
            << "    parameters; the phase equation as written evaluates to "
            << fmt(r.phi_grav) << " rad.\n"
            << "    The discrepancy is unresolved by the proposal; computed values are\n"
            << "    reported unchanged.\n";
}

int run_simulate(const ExperimentConfig& config, double duration, double rate,
                 const std::string& out_path) {
  const TimeSeries series = simulate_run(config, duration, rate);
  if (out_path.empty()) {
    write_time_series_csv(std::cout, series, config);
  } else {
    write_time_series_csv(out_path, series, config);
    std::cerr << "wrote " << series.t.size() << " samples to " << out_path << "\n";
  }
  return 0;
}

int run_analyze(const std::string& in_path, const std::string& heater_off_path,
                int n_harmonics, int null_runs, double alpha, double cg_threshold,
                const std::string& out_path) {
  const LoadedSeries loaded = read_time_series_csv(in_path);
  const double f_m = loaded.config.drive.f_m;
  const LockinResult measured = lockin(loaded.series, f_m, n_harmonics);

  std::optional<LockinResult> heater_off;
  if (!heater_off_path.empty()) {
    const LoadedSeries off = read_time_series_csv(heater_off_path);
    heater_off = lockin(off.series, f_m, n_harmonics);
  }

  const double duration =
      static_cast<double>(loaded.series.t.size()) / loaded.series.sample_rate;
  const NullDistribution null_dist = null_calibration(
      loaded.config, loaded.config.noise, null_runs,
      rng::derive_seed(loaded.config.seed, 1000003), duration,
      loaded.series.sample_rate);

  WitnessReport report =
      witness_decision(measured, null_dist, alpha, cg_threshold, heater_off);
  report.config_echo = loaded.config;

  if (out_path.empty()) {
    write_report_text(std::cout, report, measured);
  } else {
    std::ofstream text(out_path);
    if (!text) throw std::runtime_error("cannot open output file: " + out_path);
    write_report_text(text, report, measured);
    const std::string csv_path = out_path + ".csv";
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("cannot open output file: " + csv_path);
    write_report_csv(csv, report, measured);
    std::cerr << "wrote " << out_path << " and " << csv_path << "\n";
  }
  return report.verdict == Verdict::inconclusive ? 0 : 0;
}

int run_sweep(const ExperimentConfig& base, const std::string& parameter,
              const std::vector<double>& values, const std::string& out_path) {
  std::ostream* out = &std::cout;
  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) throw std::runtime_error("cannot open output file: " + out_path);
    out = &file;
  }
  *out << "# shequid-sweep-v1\n";
  *out << "# parameter = " << parameter << "\n";
  *out << "# config-begin\n";
  {
    std::istringstream echo(emit_config(base));
    std::string line;
    while (std::getline(echo, line)) *out << "# " << line << "\n";
  }
  *out << "# config-end\n";
  *out << "parameter,value,rho_s,mass,delta_t,form_factor,phi_grav,delta_phi,"
          "phi_em,sagnac\n";
  for (const double value : values) {
    const ExperimentConfig point = with_parameter(base, parameter, value);
    const CouplingResult r = couple(point);
    const double rho = rho_s(point.superfluid);
    const double theta = sagnac_phase(point.omega_perp, point.geometry.loop_area,
                                      point.constants.m_he4, point.constants);
    const double d_min = point.geometry.d - point.drive.delta_d;
    const double delta_phi =
        d_min > 0.0 ? grav_phase(r.mass, d_min, r.delta_t, r.form_factor_A,
                                 point.constants) -
                          r.phi_grav
                    : 0.0;
    char buf[512];
    std::snprintf(buf, sizeof(buf),
                  "%s,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  parameter.c_str(), value, rho, r.mass, r.delta_t,
                  r.form_factor_A, r.phi_grav, delta_phi, r.phi_em, theta);
    *out << buf;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"two-SHeQUID gravitational entanglement witness: feasibility "
               "simulator and analysis toolkit"};
  app.require_subcommand(1);

  CommonFlags flags;

  auto* phase_cmd = app.add_subcommand(
      "phase", "derived design numbers at the operating point");
  add_common(phase_cmd, flags);

  auto* ff_cmd = app.add_subcommand(
      "formfactor", "closed-form and quadrature form factor");
  add_common(ff_cmd, flags);
  std::optional<double> ff_L, ff_d;
  ff_cmd->add_option("--L", ff_L, "arm length override [m]");
  ff_cmd->add_option("--d", ff_d, "separation override [m]");

  auto* comp_cmd = app.add_subcommand(
      "compensate", "electric field whose phase matches the gravitational one");
  add_common(comp_cmd, flags);

  auto* sim_cmd = app.add_subcommand("simulate", "run the modulation protocol");
  add_common(sim_cmd, flags);
  double duration = 3600.0, rate = 100.0;
  std::string out_path;
  sim_cmd->add_option("--duration", duration, "simulated time [s]");
  sim_cmd->add_option("--rate", rate, "sample rate [Hz]");
  sim_cmd->add_option("--out", out_path, "output CSV path (default stdout)");

  auto* an_cmd = app.add_subcommand("analyze", "lock-in + witness decision");
  std::string in_path, heater_off_path, report_path;
  int n_harmonics = 3, null_runs = 200;
  double alpha = 0.01, cg_threshold = 0.05;
  an_cmd->add_option("input", in_path, "time series CSV")->required();
  an_cmd->add_option("--heater-off", heater_off_path,
                     "heater-off series CSV for the A/B delta");
  an_cmd->add_option("--harmonics", n_harmonics, "harmonics to report");
  an_cmd->add_option("--null-runs", null_runs, "null-calibration run count");
  an_cmd->add_option("--alpha", alpha, "qg significance threshold");
  an_cmd->add_option("--cg-threshold", cg_threshold, "cg consistency threshold");
  an_cmd->add_option("--out", report_path, "report path (also writes <out>.csv)");

  auto* sweep_cmd = app.add_subcommand("sweep", "one-parameter design sweep");
  add_common(sweep_cmd, flags);
  std::string sweep_param, sweep_out;
  std::vector<double> sweep_values;
  double sweep_min = 0.0, sweep_max = 0.0;
  int sweep_count = 0;
  bool sweep_log = false;
  sweep_cmd->add_option("--param", sweep_param, "dotted parameter path")->required();
  sweep_cmd->add_option("--values", sweep_values, "explicit sweep values");
  sweep_cmd->add_option("--min", sweep_min, "range minimum");
  sweep_cmd->add_option("--max", sweep_max, "range maximum");
  sweep_cmd->add_option("--count", sweep_count, "range point count");
  sweep_cmd->add_flag("--log", sweep_log, "logarithmic range spacing");
  sweep_cmd->add_option("--out", sweep_out, "output CSV path (default stdout)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (phase_cmd->parsed()) {
      print_phase(resolve_config(flags));
      return 0;
    }
    if (ff_cmd->parsed()) {
      const ExperimentConfig config = resolve_config(flags);
      const double L = ff_L.value_or(config.geometry.L);
      const double d = ff_d.value_or(config.geometry.d);
      std::cout << "L = " << fmt(L) << " m, d = " << fmt(d) << " m\n";
      std::cout << "form factor (closed form)  " << fmt(form_factor_line(L, d)) << "\n";
      std::cout << "form factor (quadrature)   " << fmt(form_factor_line_quadrature(L, d))
                << "\n";
      std::cout << "form factor (proposal)     " << fmt(kReferenceFormFactor)
                << "  # quoted estimate, shown for comparison\n";
      return 0;
    }
    if (comp_cmd->parsed()) {
      const ExperimentConfig config = resolve_config(flags);
      const double e_star = compensating_field(config);
      const CouplingResult r = couple(config);
      std::cout << "gravitational phase target  " << fmt(r.phi_grav) << " rad\n";
      std::cout << "compensating field E*       " << fmt(e_star) << " V/m ("
                << to_string(config.drive.orientation) << " orientation)\n";
      return 0;
    }
    if (sim_cmd->parsed()) {
      return run_simulate(resolve_config(flags), duration, rate, out_path);
    }
    if (an_cmd->parsed()) {
      return run_analyze(in_path, heater_off_path, n_harmonics, null_runs, alpha,
                         cg_threshold, report_path);
    }
    if (sweep_cmd->parsed()) {
      const ExperimentConfig base = resolve_config(flags);
      std::vector<double> values = sweep_values;
      if (values.empty()) {
        if (sweep_count <= 0)
          throw std::invalid_argument(
              "sweep: give --values or --min/--max/--count");
        values = sweep_range(sweep_min, sweep_max, sweep_count, sweep_log);
      }
      return run_sweep(base, sweep_param, values, sweep_out);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
