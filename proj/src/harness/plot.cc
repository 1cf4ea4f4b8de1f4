// Copyright 2026 The perturbbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "perturbbench/harness/plot.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "perturbbench/error.h"
#include "perturbbench/harness/csv.h"
#include "perturbbench/harness/grid.h"
#include "perturbbench/harness/runner.h"

namespace perturbbench {
namespace {

struct Point {
  double x, y, lo, hi;
};

struct Series {
  std::string label;
  std::vector<Point> points;
};

constexpr double kWidth = 640, kHeight = 420;
constexpr double kLeft = 70, kRight = 170, kTop = 40, kBottom = 60;
constexpr const char* kColors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                   "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string tick_label(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%g", v);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Specs agreeing outside the swept key form one series.
std::string series_label(const PerturbationSpec& spec, const std::string& key) {
  std::string label(kind_name(spec.kind()));
  std::string rest;
  for (const auto& [k, v] : spec.params()) {
    if (k == key) continue;
    if (!rest.empty()) rest += ";";
    rest += k + "=" + v;
  }
  return rest.empty() ? label : label + ":" + rest;
}

std::vector<double> linear_ticks(double lo, double hi) {
  const double span = hi - lo;
  const double raw = span / 5;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  double step = mag;
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    step = m * mag;
    if (span / step <= 6) break;
  }
  std::vector<double> ticks;
  for (double t = std::ceil(lo / step) * step; t <= hi + step * 1e-9; t += step) {
    ticks.push_back(std::abs(t) < step * 1e-9 ? 0.0 : t);
  }
  return ticks;
}

}  // namespace

void emit_curves(const std::filesystem::path& summary_csv,
                 const std::filesystem::path& out_svg, const AxisSpec& axes) {
  const auto rows = read_csv_file(summary_csv.string(), summary_header());

  std::vector<Series> series;
  std::map<std::string, std::size_t> index;
  PerturbationKind kind = PerturbationKind::kNone;
  bool any_kind = false;
  for (const auto& row : rows) {
    PerturbationSpec spec;
    try {
      spec = PerturbationSpec::parse(row[0]);
    } catch (const ParameterError& e) {
      throw ParseError(std::string("bad spec in summary: ") + e.what());
    }
    if (!any_kind) {
      kind = spec.kind();
      any_kind = true;
    }
    const Point p{parse_csv_number(row[1]), parse_csv_number(row[2]),
                  parse_csv_number(row[3]), parse_csv_number(row[4])};
    if (std::isnan(p.y) || std::isnan(p.x)) continue;
    const std::string label = series_label(spec, sweep_key(spec.kind()));
    auto [it, fresh] = index.emplace(label, series.size());
    if (fresh) series.push_back({label, {}});
    series[it->second].points.push_back(p);
  }
  for (auto& s : series) {
    std::stable_sort(s.points.begin(), s.points.end(),
                     [](const Point& a, const Point& b) { return a.x < b.x; });
  }

  double x_min = INFINITY, x_max = -INFINITY, y_max = 1.0;
  for (const auto& s : series) {
    for (const auto& p : s.points) {
      x_min = std::min(x_min, p.x);
      x_max = std::max(x_max, p.x);
      if (std::isfinite(p.hi)) y_max = std::max(y_max, p.hi);
      y_max = std::max(y_max, p.y);
    }
  }
  if (!std::isfinite(x_min)) x_min = 0, x_max = 1;

  bool log_x = axes.x_scale == AxisScale::kLog;
  if (axes.x_scale == AxisScale::kAuto) {
    log_x = x_min > 0 && x_max / x_min > 10.0;
  }
  if (log_x && x_min <= 0) throw ParameterError("log x axis needs x > 0");
  const bool reverse_y =
      axes.reverse_y.value_or(any_kind && kind == PerturbationKind::kRepackage);

  auto tx = [&](double x) { return log_x ? std::log10(x) : x; };
  double lo = tx(x_min), hi = tx(x_max);
  if (hi - lo < 1e-12) {
    const double pad = log_x ? 0.5 : std::max(std::abs(lo) * 0.1, 0.5);
    lo -= pad;
    hi += pad;
  }
  const double y_top = std::ceil(y_max * 10.0) / 10.0;
  const double pw = kWidth - kLeft - kRight, ph = kHeight - kTop - kBottom;
  auto px = [&](double x) { return kLeft + (tx(x) - lo) / (hi - lo) * pw; };
  auto py = [&](double y) {
    y = std::clamp(y, 0.0, y_top);
    const double f = y / y_top;
    return reverse_y ? kTop + f * ph : kTop + (1 - f) * ph;
  };

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt(kWidth)
      << "\" height=\"" << fmt(kHeight) << "\" font-family=\"sans-serif\""
      << " font-size=\"12\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  const std::string title =
      axes.title.empty() ? std::string(kind_name(kind)) : axes.title;
  svg << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"24\" text-anchor=\"middle\""
      << " font-size=\"14\">" << xml_escape(title) << "</text>\n";

  // Axes and ticks.
  svg << "<rect x=\"" << fmt(kLeft) << "\" y=\"" << fmt(kTop) << "\" width=\""
      << fmt(pw) << "\" height=\"" << fmt(ph)
      << "\" fill=\"none\" stroke=\"black\"/>\n";
  std::vector<double> xticks;
  if (log_x) {
    for (int e = static_cast<int>(std::floor(lo)); e <= std::ceil(hi); ++e) {
      const double v = std::pow(10.0, e);
      if (std::log10(v) >= lo - 1e-9 && std::log10(v) <= hi + 1e-9) {
        xticks.push_back(v);
      }
    }
  } else {
    xticks = linear_ticks(lo, hi);
  }
  for (double v : xticks) {
    const double x = px(v);
    svg << "<line x1=\"" << fmt(x) << "\" y1=\"" << fmt(kTop + ph) << "\" x2=\""
        << fmt(x) << "\" y2=\"" << fmt(kTop + ph + 5) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt(x) << "\" y=\"" << fmt(kTop + ph + 18)
        << "\" text-anchor=\"middle\">" << tick_label(v) << "</text>\n";
  }
  for (double v : linear_ticks(0.0, y_top)) {
    const double y = py(v);
    svg << "<line x1=\"" << fmt(kLeft - 5) << "\" y1=\"" << fmt(y) << "\" x2=\""
        << fmt(kLeft) << "\" y2=\"" << fmt(y) << "\" stroke=\"black\"/>\n";
    svg << "<text x=\"" << fmt(kLeft - 8) << "\" y=\"" << fmt(y + 4)
        << "\" text-anchor=\"end\">" << tick_label(v) << "</text>\n";
  }
  std::string x_label = axes.x_label;
  if (x_label.empty()) {
    x_label = kind == PerturbationKind::kRepackage ? "audio:silence ratio"
                                                   : sweep_key(kind);
  }
  svg << "<text x=\"" << fmt(kLeft + pw / 2) << "\" y=\"" << fmt(kHeight - 15)
      << "\" text-anchor=\"middle\">" << xml_escape(x_label) << "</text>\n";
  svg << "<text transform=\"translate(20," << fmt(kTop + ph / 2)
      << ") rotate(-90)\" text-anchor=\"middle\">" << xml_escape(axes.y_label)
      << "</text>\n";

  for (std::size_t si = 0; si < series.size(); ++si) {
    const Series& s = series[si];
    const char* color = kColors[si % std::size(kColors)];
    bool band = s.points.size() > 1;
    for (const auto& p : s.points) band = band && std::isfinite(p.lo) && std::isfinite(p.hi);
    if (band) {
      svg << "<polygon fill=\"" << color << "\" fill-opacity=\"0.2\" stroke=\"none\" points=\"";
      for (const auto& p : s.points) svg << fmt(px(p.x)) << "," << fmt(py(p.hi)) << " ";
      for (auto it = s.points.rbegin(); it != s.points.rend(); ++it) {
        svg << fmt(px(it->x)) << "," << fmt(py(it->lo)) << " ";
      }
      svg << "\"/>\n";
    }
    if (s.points.size() > 1) {
      svg << "<polyline fill=\"none\" stroke=\"" << color
          << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < s.points.size(); ++i) {
        if (i) svg << " ";
        svg << fmt(px(s.points[i].x)) << "," << fmt(py(s.points[i].y));
      }
      svg << "\"/>\n";
    }
    for (const auto& p : s.points) {
      svg << "<circle class=\"marker\" cx=\"" << fmt(px(p.x)) << "\" cy=\""
          << fmt(py(p.y)) << "\" r=\"3\" fill=\"" << color << "\"/>\n";
    }
    const double ly = kTop + 14 + 16 * static_cast<double>(si);
    svg << "<rect x=\"" << fmt(kWidth - kRight + 10) << "\" y=\"" << fmt(ly - 8)
        << "\" width=\"10\" height=\"10\" fill=\"" << color << "\"/>\n";
    svg << "<text x=\"" << fmt(kWidth - kRight + 25) << "\" y=\"" << fmt(ly + 1)
        << "\" font-size=\"9\">" << xml_escape(s.label) << "</text>\n";
  }
  svg << "</svg>\n";

  std::ofstream out(out_svg, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + out_svg.string());
  out << svg.str();
  if (!out) throw IoError("write failed for " + out_svg.string());
}

}  // namespace perturbbench
