#include "shequid/csv.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "shequid/config_io.hpp"

namespace shequid {

namespace {

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

constexpr const char* kSeriesMagic = "# shequid-timeseries-v1";
constexpr const char* kHeader = "t,y,d_t,model,heater_on,seed";

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, sep)) fields.push_back(field);
  return fields;
}

}  // namespace

void write_time_series_csv(std::ostream& out, const TimeSeries& series,
                           const ExperimentConfig& config) {
  out << kSeriesMagic << "\n";
  out << "# sample_rate = " << fmt(series.sample_rate) << "\n";
  out << "# run_seed = " << series.seed << "\n";
  if (config.mode == PairMode::full_pairwise)
    out << "# note: far-pair separation modeled as 2L + d\n";
  out << "# config-begin\n";
  std::istringstream echo(emit_config(config));
  std::string line;
  while (std::getline(echo, line)) out << "# " << line << "\n";
  out << "# config-end\n";
  out << kHeader << "\n";
  const std::string model = to_string(series.model);
  for (Eigen::Index k = 0; k < series.t.size(); ++k) {
    out << fmt(series.t[k]) << ',' << fmt(series.y[k]) << ','
        << fmt(series.d_t[k]) << ',' << model << ','
        << (series.heater_on ? '1' : '0') << ',' << series.seed << "\n";
  }
}

void write_time_series_csv(const std::string& path, const TimeSeries& series,
                           const ExperimentConfig& config) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  write_time_series_csv(out, series, config);
}

LoadedSeries read_time_series_csv(std::istream& in) {
  std::string line;
  std::string config_text;
  bool in_config = false;
  bool have_config = false;
  double sample_rate = 0.0;
  bool header_seen = false;
  std::vector<double> t, y, d;
  Model model = Model::qg;
  bool heater_on = true;
  std::uint64_t seed = 0;

  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::string body = line.size() > 1 ? line.substr(2) : "";
      if (line == "# config-begin") {
        in_config = true;
      } else if (line == "# config-end") {
        in_config = false;
        have_config = true;
      } else if (in_config) {
        config_text += body;
        config_text += "\n";
      } else if (body.rfind("sample_rate = ", 0) == 0) {
        sample_rate = std::stod(body.substr(14));
      }
      continue;
    }
    if (!header_seen) {
      if (line != kHeader)
        throw std::runtime_error("time series CSV: unexpected header \"" + line +
                                 "\"");
      header_seen = true;
      continue;
    }
    const auto fields = split(line, ',');
    if (fields.size() != 6)
      throw std::runtime_error("time series CSV: expected 6 columns");
    t.push_back(std::stod(fields[0]));
    y.push_back(std::stod(fields[1]));
    d.push_back(std::stod(fields[2]));
    model = model_from_string(fields[3]);
    heater_on = fields[4] == "1" || fields[4] == "true";
    seed = std::stoull(fields[5]);
  }
  if (!header_seen) throw std::runtime_error("time series CSV: missing header");
  if (!have_config) throw std::runtime_error("time series CSV: missing config echo");
  if (!(sample_rate > 0.0))
    throw std::runtime_error("time series CSV: missing sample_rate");

  LoadedSeries loaded;
  loaded.config = parse_config(config_text);
  const auto n = static_cast<Eigen::Index>(t.size());
  loaded.series.t = Eigen::Map<Eigen::ArrayXd>(t.data(), n);
  loaded.series.y = Eigen::Map<Eigen::ArrayXd>(y.data(), n);
  loaded.series.d_t = Eigen::Map<Eigen::ArrayXd>(d.data(), n);
  loaded.series.model = model;
  loaded.series.heater_on = heater_on;
  loaded.series.seed = seed;
  loaded.series.sample_rate = sample_rate;
  return loaded;
}

LoadedSeries read_time_series_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open input file: " + path);
  return read_time_series_csv(in);
}

void write_report_text(std::ostream& out, const WitnessReport& report,
                       const LockinResult& lockin_result) {
  out << "witness report\n";
  out << "==============\n";
  out << "verdict:              " << to_string(report.verdict) << "\n";
  out << "detection statistic:  " << fmt(report.detection_statistic)
      << " (first-harmonic amplitude)\n";
  if (report.p_below_resolution)
    out << "p-value:              < " << fmt(1.0 / static_cast<double>(report.n_null))
        << " (statistic above every null sample)\n";
  else
    out << "p-value:              " << fmt(report.p_value) << "\n";
  out << "null samples:         " << report.n_null << "\n";
  out << "thresholds:           qg if p < " << fmt(report.alpha)
      << ", cg if p > " << fmt(report.cg_threshold) << "\n";
  if (report.heater_ab_delta.has_value())
    out << "heater A/B delta:     " << fmt(*report.heater_ab_delta) << "\n";
  out << "integration time:     " << fmt(lockin_result.integration_time) << " s\n";
  out << "noise floor:          " << fmt(lockin_result.noise_floor) << "\n";
  out << "harmonics (n, freq [Hz], amplitude, phase [rad]):\n";
  int n = 1;
  for (const auto& h : lockin_result.harmonics) {
    out << "  " << n++ << ", " << fmt(h.frequency) << ", " << fmt(h.magnitude)
        << ", " << fmt(h.phase) << "\n";
  }
  out << "decision procedure: first-harmonic amplitude against a Monte Carlo\n"
      << "cg null; the statistical layer is defined by this toolkit, not by\n"
      << "the experiment proposal.\n";
  out << "\nresolved configuration:\n";
  std::istringstream echo(emit_config(report.config_echo));
  std::string line;
  while (std::getline(echo, line)) out << "  " << line << "\n";
}

void write_report_csv(std::ostream& out, const WitnessReport& report,
                      const LockinResult& lockin_result) {
  out << "verdict,detection_statistic,p_value,p_below_resolution,n_null,alpha,"
         "cg_threshold,heater_ab_delta,noise_floor,integration_time,seed\n";
  out << to_string(report.verdict) << ',' << fmt(report.detection_statistic)
      << ',' << fmt(report.p_value) << ',' << (report.p_below_resolution ? 1 : 0)
      << ',' << report.n_null << ',' << fmt(report.alpha) << ','
      << fmt(report.cg_threshold) << ','
      << (report.heater_ab_delta ? fmt(*report.heater_ab_delta) : "")
      << ',' << fmt(lockin_result.noise_floor) << ','
      << fmt(lockin_result.integration_time) << ',' << report.config_echo.seed
      << "\n";
}

}  // namespace shequid
