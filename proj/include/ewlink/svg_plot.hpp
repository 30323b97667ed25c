#pragma once
#ifndef EWLINK_SVG_PLOT_HPP
#define EWLINK_SVG_PLOT_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#include "ewlink/scenario.hpp"

namespace ewlink {

struct PlotSpec {
  bool log_x = true;
  bool show_sjr = true;
  std::optional<double> threshold_db = 0.0;  // horizontal detection line
  std::string title = "SNR / SJR vs range";
  int width = 900;
  int height = 560;
};

struct PlotSeries {
  std::string label;
  std::string metric;  // "snr" or "sjr"
  std::vector<double> x_km;
  std::vector<double> y_db;
};

// Series in the order they are drawn: SNR and then SJR for each target.
inline std::vector<PlotSeries> plot_series(const std::vector<SweepRow>& rows,
                                           const PlotSpec& spec = {}) {
  std::vector<PlotSeries> out;
  if (rows.empty()) {
    return out;
  }
  const std::size_t n_targets = rows.front().cells.size();
  for (std::size_t t = 0; t < n_targets; ++t) {
    const TargetCell& head = rows.front().cells[t];
    const std::string sigma = " (sigma=" + detail::shortest(head.rcs_m2) + " m^2)";
    PlotSeries snr{"SNR " + head.name + sigma, "snr", {}, {}};
    PlotSeries sjr{"SJR " + head.name + sigma, "sjr", {}, {}};
    bool has_sjr = spec.show_sjr;
    for (const auto& row : rows) {
      const TargetCell& c = row.cells.at(t);
      snr.x_km.push_back(row.range_km);
      snr.y_db.push_back(c.snr_db);
      if (c.sjr_db) {
        sjr.x_km.push_back(row.range_km);
        sjr.y_db.push_back(*c.sjr_db);
      } else {
        has_sjr = false;
      }
    }
    out.push_back(std::move(snr));
    if (has_sjr) {
      out.push_back(std::move(sjr));
    }
  }
  return out;
}

namespace svg_detail {

inline std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  return buf;
}

inline std::string escape(const std::string& s) {
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

inline const char* color(std::size_t i) {
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#ff7f0e",
                                  "#9467bd", "#8c564b", "#e377c2", "#17becf"};
  return palette[i % (sizeof(palette) / sizeof(palette[0]))];
}

// Round a span outward to a tidy tick step (1, 2, 5 x 10^n).
inline double nice_step(double span, int target_ticks) {
  const double raw = span / std::max(1, target_ticks);
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0, 10.0}) {
    if (raw <= m * mag) {
      return m * mag;
    }
  }
  return 10.0 * mag;
}

}  // namespace svg_detail

/// Render the sweep as a self-contained SVG document. Output depends only on
/// the input values, so identical sweeps produce identical bytes.
inline std::string render_plot(const std::vector<SweepRow>& rows, const PlotSpec& spec = {}) {
  using svg_detail::num;
  if (rows.empty()) {
    throw UsageError("cannot plot an empty sweep");
  }
  const auto series = plot_series(rows, spec);

  double x_min = rows.front().range_km;
  double x_max = rows.back().range_km;
  double y_min = spec.threshold_db.value_or(0.0);
  double y_max = y_min;
  for (const auto& s : series) {
    for (double y : s.y_db) {
      y_min = std::min(y_min, y);
      y_max = std::max(y_max, y);
    }
  }
  const double y_step = svg_detail::nice_step(std::max(y_max - y_min, 1.0), 8);
  y_min = std::floor(y_min / y_step) * y_step;
  y_max = std::ceil(y_max / y_step) * y_step;
  if (y_max <= y_min) {
    y_max = y_min + y_step;
  }

  auto tx = [&](double v) { return spec.log_x ? std::log10(v) : v; };
  double ax_lo = tx(x_min);
  double ax_hi = tx(x_max);
  if (spec.log_x) {
    ax_lo = std::floor(ax_lo);
    ax_hi = std::ceil(ax_hi);
  }
  if (ax_hi <= ax_lo) {
    ax_hi = ax_lo + 1.0;
  }

  const double left = 70, right = 300, top = 40, bottom = 55;
  const double pw = spec.width - left - right;
  const double ph = spec.height - top - bottom;
  auto px = [&](double x) { return left + (tx(x) - ax_lo) / (ax_hi - ax_lo) * pw; };
  auto py = [&](double y) { return top + (y_max - y) / (y_max - y_min) * ph; };

  std::string svg;
  svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(spec.width) +
         "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " +
         std::to_string(spec.width) + " " + std::to_string(spec.height) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg += "<text x=\"" + num(left + pw / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" +
         svg_detail::escape(spec.title) + "</text>\n";

  // Grid and ticks
  svg += "<g class=\"grid\" stroke=\"#dddddd\" stroke-width=\"1\">\n";
  std::string labels;
  const int y_ticks = static_cast<int>(std::lround((y_max - y_min) / y_step));
  for (int k = 0; k <= y_ticks; ++k) {
    const double y = y_min + k * y_step;
    char tick[32];
    std::snprintf(tick, sizeof(tick), "%.6g", std::abs(y) < 1e-9 ? 0.0 : y);
    svg += "<line x1=\"" + num(left) + "\" y1=\"" + num(py(y)) + "\" x2=\"" + num(left + pw) +
           "\" y2=\"" + num(py(y)) + "\"/>\n";
    labels += "<text x=\"" + num(left - 6) + "\" y=\"" + num(py(y) + 4) +
              "\" text-anchor=\"end\">" + tick + "</text>\n";
  }
  if (spec.log_x) {
    for (double d = ax_lo; d <= ax_hi + 1e-9; d += 1.0) {
      for (int m = 1; m < 10; ++m) {
        const double v = std::pow(10.0, d) * m;
        if (tx(v) > ax_hi + 1e-9) {
          break;
        }
        svg += "<line x1=\"" + num(px(v)) + "\" y1=\"" + num(top) + "\" x2=\"" + num(px(v)) +
               "\" y2=\"" + num(top + ph) + "\"" + (m == 1 ? "" : " stroke-opacity=\"0.4\"") +
               "/>\n";
        if (m == 1) {
          labels += "<text x=\"" + num(px(v)) + "\" y=\"" + num(top + ph + 18) +
                    "\" text-anchor=\"middle\">" + detail::shortest(v) + "</text>\n";
        }
      }
    }
  } else {
    const double step = svg_detail::nice_step(ax_hi - ax_lo, 8);
    for (double v = std::ceil(ax_lo / step) * step; v <= ax_hi + 1e-9; v += step) {
      svg += "<line x1=\"" + num(px(v)) + "\" y1=\"" + num(top) + "\" x2=\"" + num(px(v)) +
             "\" y2=\"" + num(top + ph) + "\"/>\n";
      labels += "<text x=\"" + num(px(v)) + "\" y=\"" + num(top + ph + 18) +
                "\" text-anchor=\"middle\">" + detail::shortest(v) + "</text>\n";
    }
  }
  svg += "</g>\n<g class=\"ticks\">\n" + labels + "</g>\n";
  svg += "<rect x=\"" + num(left) + "\" y=\"" + num(top) + "\" width=\"" + num(pw) +
         "\" height=\"" + num(ph) + "\" fill=\"none\" stroke=\"black\"/>\n";
  svg += "<text x=\"" + num(left + pw / 2) + "\" y=\"" + num(spec.height - 12.0) +
         "\" text-anchor=\"middle\">range [km]" + (spec.log_x ? " (log)" : "") + "</text>\n";
  svg += "<text transform=\"translate(18," + num(top + ph / 2) +
         ") rotate(-90)\" text-anchor=\"middle\">[dB]</text>\n";

  // Data
  std::string legend;
  double ly = top + 10;
  for (std::size_t i = 0; i < series.size(); ++i) {
    const auto& s = series[i];
    const char* c = svg_detail::color(i / 2);
    const char* dash = s.metric == "sjr" ? " stroke-dasharray=\"6,4\"" : "";
    svg += "<polyline class=\"series " + s.metric + "\" fill=\"none\" stroke=\"" + c +
           "\" stroke-width=\"2\"" + dash + " points=\"";
    for (std::size_t k = 0; k < s.x_km.size(); ++k) {
      svg += (k ? " " : "") + num(px(s.x_km[k])) + "," + num(py(s.y_db[k]));
    }
    svg += "\"/>\n";
    legend += "<line x1=\"" + num(left + pw + 15) + "\" y1=\"" + num(ly) + "\" x2=\"" +
              num(left + pw + 45) + "\" y2=\"" + num(ly) + "\" stroke=\"" + c +
              "\" stroke-width=\"2\"" + dash + "/>\n";
    legend += "<text x=\"" + num(left + pw + 52) + "\" y=\"" + num(ly + 4) + "\">" +
              svg_detail::escape(s.label) + "</text>\n";
    ly += 18;
  }
  if (spec.threshold_db) {
    const double y = py(*spec.threshold_db);
    svg += "<line class=\"threshold\" x1=\"" + num(left) + "\" y1=\"" + num(y) + "\" x2=\"" +
           num(left + pw) + "\" y2=\"" + num(y) +
           "\" stroke=\"black\" stroke-width=\"1.5\" stroke-dasharray=\"2,3\"/>\n";
    svg += "<text x=\"" + num(left + pw - 4) + "\" y=\"" + num(y - 5) +
           "\" text-anchor=\"end\">threshold " + num(*spec.threshold_db) + " dB</text>\n";
  }
  svg += "<g class=\"legend\">\n" + legend + "</g>\n";
  svg += "</svg>\n";
  return svg;
}

}  // namespace ewlink

#endif  // EWLINK_SVG_PLOT_HPP
