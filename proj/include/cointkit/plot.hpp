#pragma once

// Standalone SVG 1.1 line chart of selected series over the year axis.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "cointkit/errors.hpp"
#include "cointkit/series.hpp"

namespace cointkit {

namespace detail {

inline std::string fmt(const char* pattern, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, pattern, v);
  return buf;
}

inline std::string xml_escape(const std::string& s) {
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

struct AxisRange {
  double lo = 0.0;
  double hi = 1.0;
};

inline AxisRange range_of(const Dataset& d, const std::vector<std::size_t>& cols) {
  AxisRange r{std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()};
  for (std::size_t c : cols)
    for (double v : d[c].values()) {
      r.lo = std::min(r.lo, v);
      r.hi = std::max(r.hi, v);
    }
  if (r.hi - r.lo < 1e-12 * std::max(1.0, std::fabs(r.hi))) {
    r.lo -= 0.5;
    r.hi += 0.5;
  }
  const double pad = 0.05 * (r.hi - r.lo);
  return {r.lo - pad, r.hi + pad};
}

}  // namespace detail

/// Ratio of largest magnitudes above which a second y-axis is used.
inline constexpr double kDualAxisRatio = 100.0;

/// Builds the SVG document. Series whose peak magnitude is within
/// kDualAxisRatio of the largest share the left axis; the rest go right.
inline std::string svg_plot(const Dataset& d, const std::vector<std::string>& variables,
                            const std::string& title = "") {
  if (variables.empty()) throw Error(ErrorCode::UnknownVariable, "no variables selected for the plot");
  std::vector<std::size_t> cols;
  for (const auto& v : variables) cols.push_back(d.index_of(v));

  std::vector<double> peak;
  for (std::size_t c : cols) {
    double m = 0.0;
    for (double v : d[c].values()) m = std::max(m, std::fabs(v));
    peak.push_back(m);
  }
  const double top = *std::max_element(peak.begin(), peak.end());
  std::vector<std::size_t> left, right;
  std::vector<bool> on_right(cols.size(), false);
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (top > kDualAxisRatio * peak[i]) {
      on_right[i] = true;
      right.push_back(cols[i]);
    } else {
      left.push_back(cols[i]);
    }
  }

  constexpr double width = 800, height = 450, ml = 80, mr = 80, mt = 50, mb = 70;
  const double pw = width - ml - mr, ph = height - mt - mb;
  const auto& years = d.years();
  const double x0 = years.front();
  const double xspan = std::max(1.0, static_cast<double>(years.back() - years.front()));
  auto xpos = [&](double year) { return ml + (year - x0) / xspan * pw; };
  const detail::AxisRange lr = detail::range_of(d, left);
  const detail::AxisRange rr = right.empty() ? lr : detail::range_of(d, right);
  auto ypos = [&](double v, const detail::AxisRange& r) { return mt + ph - (v - r.lo) / (r.hi - r.lo) * ph; };

  static constexpr std::array<const char*, 8> palette = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                                         "#9467bd", "#8c564b", "#e377c2", "#7f7f7f"};
  std::string s;
  s += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  s += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"800\" height=\"450\" "
       "viewBox=\"0 0 800 450\">\n";
  s += "<rect x=\"0\" y=\"0\" width=\"800\" height=\"450\" fill=\"white\"/>\n";
  if (!title.empty())
    s += "<text x=\"400\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"16\">" +
         detail::xml_escape(title) + "</text>\n";

  // axes
  s += "<g stroke=\"black\" stroke-width=\"1\">\n";
  s += "<line x1=\"" + detail::fmt("%.2f", ml) + "\" y1=\"" + detail::fmt("%.2f", mt + ph) + "\" x2=\"" +
       detail::fmt("%.2f", ml + pw) + "\" y2=\"" + detail::fmt("%.2f", mt + ph) + "\"/>\n";
  s += "<line x1=\"" + detail::fmt("%.2f", ml) + "\" y1=\"" + detail::fmt("%.2f", mt) + "\" x2=\"" +
       detail::fmt("%.2f", ml) + "\" y2=\"" + detail::fmt("%.2f", mt + ph) + "\"/>\n";
  if (!right.empty())
    s += "<line x1=\"" + detail::fmt("%.2f", ml + pw) + "\" y1=\"" + detail::fmt("%.2f", mt) + "\" x2=\"" +
         detail::fmt("%.2f", ml + pw) + "\" y2=\"" + detail::fmt("%.2f", mt + ph) + "\"/>\n";
  s += "</g>\n";

  // x ticks: every year up to 30 years, otherwise a thinned subset
  const std::size_t step = years.size() <= 30 ? 1 : (years.size() + 14) / 15;
  s += "<g class=\"x-ticks\" font-family=\"sans-serif\" font-size=\"10\">\n";
  for (std::size_t i = 0; i < years.size(); i += step) {
    const double x = xpos(years[i]);
    s += "<line class=\"x-tick\" x1=\"" + detail::fmt("%.2f", x) + "\" y1=\"" + detail::fmt("%.2f", mt + ph) +
         "\" x2=\"" + detail::fmt("%.2f", x) + "\" y2=\"" + detail::fmt("%.2f", mt + ph + 5) +
         "\" stroke=\"black\"/>\n";
    s += "<text x=\"" + detail::fmt("%.2f", x) + "\" y=\"" + detail::fmt("%.2f", mt + ph + 18) +
         "\" text-anchor=\"end\" transform=\"rotate(-45 " + detail::fmt("%.2f", x) + " " +
         detail::fmt("%.2f", mt + ph + 18) + ")\">" + std::to_string(years[i]) + "</text>\n";
  }
  s += "</g>\n";

  // y ticks
  auto y_ticks = [&](const detail::AxisRange& r, double x, const char* anchor, double dx) {
    std::string g;
    for (int i = 0; i <= 4; ++i) {
      const double v = r.lo + (r.hi - r.lo) * i / 4.0;
      const double y = ypos(v, r);
      g += "<text x=\"" + detail::fmt("%.2f", x + dx) + "\" y=\"" + detail::fmt("%.2f", y + 3) +
           "\" text-anchor=\"" + anchor + "\">" + detail::fmt("%.4g", v) + "</text>\n";
    }
    return g;
  };
  s += "<g class=\"y-ticks\" font-family=\"sans-serif\" font-size=\"10\">\n";
  s += y_ticks(lr, ml, "end", -6);
  if (!right.empty()) s += y_ticks(rr, ml + pw, "start", 6);
  s += "</g>\n";

  s += "<text x=\"400\" y=\"" + detail::fmt("%.2f", height - 12) +
       "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\">Year</text>\n";

  // one polyline per variable
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const auto& r = on_right[i] ? rr : lr;
    const auto& vals = d[cols[i]].values();
    std::string pts;
    for (std::size_t t = 0; t < vals.size(); ++t) {
      if (t) pts += ' ';
      pts += detail::fmt("%.2f", xpos(years[t])) + "," + detail::fmt("%.2f", ypos(vals[t], r));
    }
    s += "<polyline fill=\"none\" stroke=\"" + std::string(palette[i % palette.size()]) +
         "\" stroke-width=\"2\" points=\"" + pts + "\"/>\n";
  }

  // legend
  s += "<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < cols.size(); ++i) {
    const double y = mt + 10 + 18.0 * static_cast<double>(i);
    s += "<rect x=\"" + detail::fmt("%.2f", ml + 10) + "\" y=\"" + detail::fmt("%.2f", y - 8) +
         "\" width=\"14\" height=\"4\" fill=\"" + palette[i % palette.size()] + "\"/>\n";
    std::string label = detail::xml_escape(variables[i]);
    if (!right.empty()) label += on_right[i] ? " (right axis)" : " (left axis)";
    s += "<text x=\"" + detail::fmt("%.2f", ml + 30) + "\" y=\"" + detail::fmt("%.2f", y - 2) + "\">" + label +
         "</text>\n";
  }
  s += "</g>\n</svg>\n";
  return s;
}

inline std::string render_plot(const Dataset& d, const std::vector<std::string>& variables,
                               const std::filesystem::path& out, const std::string& title = "") {
  std::string doc = svg_plot(d, variables, title);
  std::ofstream f(out, std::ios::binary);
  if (!f) throw Error(ErrorCode::IoError, "cannot write '" + out.string() + "'");
  f << doc;
  if (!f) throw Error(ErrorCode::IoError, "failed writing '" + out.string() + "'");
  return doc;
}

}  // namespace cointkit
