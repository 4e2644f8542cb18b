#pragma once

#include <iosfwd>
#include <string>

#include "shequid/analysis.hpp"
#include "shequid/experiment_config.hpp"
#include "shequid/noise.hpp"

namespace shequid {

/// TimeSeries CSV: '#'-prefixed metadata lines (resolved config echo, sample
/// rate), then the fixed header row t,y,d_t,model,heater_on,seed.
void write_time_series_csv(std::ostream& out, const TimeSeries& series,
                           const ExperimentConfig& config);
void write_time_series_csv(const std::string& path, const TimeSeries& series,
                           const ExperimentConfig& config);

struct LoadedSeries {
  TimeSeries series;
  ExperimentConfig config;  // reconstructed from the embedded echo
};

LoadedSeries read_time_series_csv(std::istream& in);
LoadedSeries read_time_series_csv(const std::string& path);

/// Human-readable witness report.
void write_report_text(std::ostream& out, const WitnessReport& report,
                       const LockinResult& lockin_result);

/// Machine-readable one-row summary of the report.
void write_report_csv(std::ostream& out, const WitnessReport& report,
                      const LockinResult& lockin_result);

}  // namespace shequid
