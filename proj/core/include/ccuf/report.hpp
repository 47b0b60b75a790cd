#pragma once

#include <filesystem>
#include <istream>
#include <ostream>
#include <string>

#include "ccuf/simulation.hpp"

namespace ccuf {

/// Shortest text that parses back to exactly `x` ("nan" and "inf" for non-finite values).
std::string format_double(double x);
double parse_double(const std::string& s);

/// Long format: point, one column per sweep axis, replication, kind (run | mean | ci95), metrics.
/// Aggregate rows carry an empty replication field.
void write_report_csv(std::ostream& out, const MetricsReport& report);
MetricsReport read_report_csv(std::istream& in);

/// Line plot of `metric` (mean with CI whiskers) against the first sweep axis, one line per value
/// combination of the remaining axes.
void write_svg_plot(std::ostream& out, const MetricsReport& report, const std::string& metric);

void write_report_csv(const std::filesystem::path& path, const MetricsReport& report);
void write_svg_plot(const std::filesystem::path& path, const MetricsReport& report, const std::string& metric);

}  // namespace ccuf
