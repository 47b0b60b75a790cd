#include "ccuf/report.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>
#include <stdexcept>

namespace ccuf {

std::string format_double(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

double parse_double(const std::string& s) {
  if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double x = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw std::invalid_argument("not a number: '" + s + "'");
  return x;
}

namespace {

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string cell;
  std::stringstream ss(line);
  while (std::getline(ss, cell, ',')) out.push_back(cell);
  if (!line.empty() && line.back() == ',') out.emplace_back();
  return out;
}

void write_metrics(std::ostream& out, const ReplicationMetrics& m) {
  for (const auto& def : metric_defs()) out << ',' << format_double(m.*def.member);
  out << '\n';
}

}  // namespace

void write_report_csv(std::ostream& out, const MetricsReport& report) {
  out << "point";
  for (const auto& a : report.axes) out << ',' << a;
  out << ",replication,kind";
  for (const auto& def : metric_defs()) out << ',' << def.name;
  out << '\n';
  for (std::size_t p = 0; p < report.points.size(); ++p) {
    const auto& pt = report.points[p];
    auto prefix = [&](const std::string& rep, const char* kind) {
      out << p;
      for (const auto& v : pt.values) out << ',' << v;
      out << ',' << rep << ',' << kind;
    };
    for (std::size_t r = 0; r < pt.runs.size(); ++r) {
      prefix(std::to_string(r), "run");
      write_metrics(out, pt.runs[r]);
    }
    prefix("", "mean");
    write_metrics(out, pt.mean);
    prefix("", "ci95");
    write_metrics(out, pt.ci95);
  }
}

MetricsReport read_report_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw std::invalid_argument("report: empty input");
  const auto header = split(line);
  const auto defs = metric_defs();
  const auto kind_col = std::find(header.begin(), header.end(), "kind");
  if (header.empty() || header.front() != "point" || kind_col == header.end() || kind_col == header.begin() + 1)
    throw std::invalid_argument("report: unrecognised header");
  const auto n_axes = static_cast<std::size_t>(kind_col - header.begin()) - 2;
  if (header.size() != n_axes + 3 + defs.size()) throw std::invalid_argument("report: metric columns do not match");
  for (std::size_t i = 0; i < defs.size(); ++i) {
    if (header[n_axes + 3 + i] != defs[i].name) throw std::invalid_argument("report: unexpected column " + header[n_axes + 3 + i]);
  }
  MetricsReport report;
  report.axes.assign(header.begin() + 1, header.begin() + 1 + static_cast<std::ptrdiff_t>(n_axes));
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto cells = split(line);
    if (cells.size() != header.size()) throw std::invalid_argument("report: ragged row '" + line + "'");
    const auto p = static_cast<std::size_t>(std::stoul(cells[0]));
    if (p >= report.points.size()) {
      report.points.resize(p + 1);
      report.points[p].values.assign(cells.begin() + 1, cells.begin() + 1 + static_cast<std::ptrdiff_t>(n_axes));
    }
    ReplicationMetrics m;
    for (std::size_t i = 0; i < defs.size(); ++i) m.*defs[i].member = parse_double(cells[n_axes + 3 + i]);
    const auto& kind = cells[n_axes + 2];
    auto& pt = report.points[p];
    if (kind == "run") {
      pt.runs.push_back(m);
    } else if (kind == "mean") {
      pt.mean = m;
    } else if (kind == "ci95") {
      pt.ci95 = m;
    } else {
      throw std::invalid_argument("report: unknown row kind '" + kind + "'");
    }
  }
  return report;
}

void write_svg_plot(std::ostream& out, const MetricsReport& report, const std::string& metric) {
  const auto defs = metric_defs();
  const auto it = std::find_if(defs.begin(), defs.end(), [&](const MetricDef& d) { return metric == d.name; });
  if (it == defs.end()) throw std::invalid_argument("plot: unknown metric '" + metric + "'");
  const auto member = it->member;

  // Series keyed by the values of all axes except the first.
  std::map<std::string, std::vector<std::tuple<double, double, double>>> series;
  for (std::size_t p = 0; p < report.points.size(); ++p) {
    const auto& pt = report.points[p];
    double x = static_cast<double>(p);
    std::string key;
    if (!pt.values.empty()) {
      try {
        x = parse_double(pt.values[0]);
      } catch (const std::invalid_argument&) {
      }
      for (std::size_t a = 1; a < pt.values.size(); ++a) key += (a > 1 ? ", " : "") + report.axes[a] + "=" + pt.values[a];
    }
    series[key].emplace_back(x, pt.mean.*member, pt.ci95.*member);
  }

  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& [k, pts] : series) {
    for (const auto& [x, y, ci] : pts) {
      if (!std::isfinite(y)) continue;
      const double c = std::isfinite(ci) ? ci : 0.0;
      x0 = std::min(x0, x);
      x1 = std::max(x1, x);
      y0 = std::min(y0, y - c);
      y1 = std::max(y1, y + c);
    }
  }
  if (!(x1 > x0)) {
    x0 = std::isfinite(x0) ? x0 - 1 : 0;
    x1 = x0 + 2;
  }
  if (!(y1 > y0)) {
    y0 = std::isfinite(y0) ? y0 - 1 : 0;
    y1 = y0 + 2;
  }
  const double W = 640, H = 420, L = 70, R = 20, T = 30, B = 50;
  auto sx = [&](double x) { return L + (x - x0) / (x1 - x0) * (W - L - R); };
  auto sy = [&](double y) { return H - B - (y - y0) / (y1 - y0) * (H - T - B); };
  static const char* colours[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  out << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  out << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double xv = x0 + (x1 - x0) * i / 4.0;
    const double yv = y0 + (y1 - y0) * i / 4.0;
    out << "<text x=\"" << sx(xv) << "\" y=\"" << H - B + 16 << "\" font-size=\"11\" text-anchor=\"middle\">"
        << format_double(std::round(xv * 1000) / 1000) << "</text>\n";
    out << "<text x=\"" << L - 6 << "\" y=\"" << sy(yv) + 4 << "\" font-size=\"11\" text-anchor=\"end\">"
        << format_double(std::round(yv * 1000) / 1000) << "</text>\n";
  }
  out << "<text x=\"" << (L + W - R) / 2 << "\" y=\"" << H - 10 << "\" font-size=\"13\" text-anchor=\"middle\">"
      << (report.axes.empty() ? std::string("point") : report.axes[0]) << "</text>\n";
  out << "<text x=\"" << L << "\" y=\"" << T - 10 << "\" font-size=\"13\">" << metric << "</text>\n";
  std::size_t c = 0;
  for (const auto& [key, pts] : series) {
    const char* colour = colours[c % (sizeof colours / sizeof *colours)];
    out << "<polyline fill=\"none\" stroke=\"" << colour << "\" stroke-width=\"2\" points=\"";
    for (const auto& [x, y, ci] : pts) {
      if (std::isfinite(y)) out << sx(x) << ',' << sy(y) << ' ';
    }
    out << "\"/>\n";
    for (const auto& [x, y, ci] : pts) {
      if (!std::isfinite(y) || !std::isfinite(ci)) continue;
      out << "<line x1=\"" << sx(x) << "\" y1=\"" << sy(y - ci) << "\" x2=\"" << sx(x) << "\" y2=\"" << sy(y + ci)
          << "\" stroke=\"" << colour << "\"/>\n";
    }
    if (!key.empty())
      out << "<text x=\"" << W - R - 4 << "\" y=\"" << T + 14 * (c + 1) << "\" font-size=\"11\" text-anchor=\"end\" fill=\""
          << colour << "\">" << key << "</text>\n";
    ++c;
  }
  out << "</svg>\n";
}

void write_report_csv(const std::filesystem::path& path, const MetricsReport& report) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_report_csv(out, report);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

void write_svg_plot(const std::filesystem::path& path, const MetricsReport& report, const std::string& metric) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  write_svg_plot(out, report, metric);
  if (!out) throw std::runtime_error("failed writing " + path.string());
}

}  // namespace ccuf
