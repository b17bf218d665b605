/*
 * Copyright 2026 The featstudy Authors.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>

#include "featstudy/report.h"

namespace featstudy {
namespace {

constexpr double kWidth = 760.0;
constexpr double kHeight = 420.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 30.0;
constexpr double kTop = 60.0;
constexpr double kBottom = 80.0;
constexpr double kPlotWidth = kWidth - kLeft - kRight;
constexpr double kPlotHeight = kHeight - kTop - kBottom;

std::string Num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.2f", v);
  std::string s(buf);
  return s == "-0.00" ? "0.00" : s;
}

std::string Escape(std::string_view text) {
  std::string out;
  for (char ch : text) {
    switch (ch) {
      case '&':
        out += "&amp;";
        break;
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '"':
        out += "&quot;";
        break;
      case '\'':
        out += "&apos;";
        break;
      default:
        out += ch;
    }
  }
  return out;
}

std::string Header(std::string_view title) {
  std::string s =
      "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
      Num(kWidth) + "\" height=\"" + Num(kHeight) + "\" viewBox=\"0 0 " +
      Num(kWidth) + " " + Num(kHeight) + "\">\n";
  s += "  <rect x=\"0\" y=\"0\" width=\"" + Num(kWidth) + "\" height=\"" +
       Num(kHeight) + "\" fill=\"#ffffff\"/>\n";
  s += "  <text class=\"title\" x=\"" + Num(kWidth / 2) +
       "\" y=\"30\" text-anchor=\"middle\" font-family=\"sans-serif\" "
       "font-size=\"16\">" +
       Escape(title) + "</text>\n";
  return s;
}

std::string Line(double x1, double y1, double x2, double y2,
                 std::string_view cls) {
  return "  <line class=\"" + std::string(cls) + "\" x1=\"" + Num(x1) +
         "\" y1=\"" + Num(y1) + "\" x2=\"" + Num(x2) + "\" y2=\"" + Num(y2) +
         "\" stroke=\"#444444\" stroke-width=\"1\"/>\n";
}

std::string Label(double x, double y, std::string_view anchor,
                  std::string_view text) {
  return "  <text x=\"" + Num(x) + "\" y=\"" + Num(y) +
         "\" text-anchor=\"" + std::string(anchor) +
         "\" font-family=\"sans-serif\" font-size=\"11\">" + Escape(text) +
         "</text>\n";
}

}  // namespace

std::string AblationChartSvg(const AblationResult& result) {
  double extent = 0.0;
  for (const auto& g : result.per_group) {
    extent = std::max(extent, std::fabs(g.delta_f1_points));
  }
  // Symmetric axis rounded up to a multiple of 5 points.
  extent = std::max(5.0, std::ceil(extent / 5.0) * 5.0);
  const double zero_y = kTop + kPlotHeight / 2;
  const double scale = (kPlotHeight / 2) / extent;

  char title[64];
  std::snprintf(title, sizeof(title), " (baseline avg F1 = %.3f)",
                result.baseline.avg_f1);
  std::string svg = Header(result.class_id + title);
  svg += Line(kLeft, kTop, kLeft, kTop + kPlotHeight, "axis y-axis");
  svg += Line(kLeft, zero_y, kLeft + kPlotWidth, zero_y, "axis zero-axis");
  for (double tick : {extent, 0.0, -extent}) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%+.0f", tick);
    svg += Label(kLeft - 8, zero_y - tick * scale + 4, "end",
                 tick == 0.0 ? "0" : buf);
  }
  svg += Label(20, kTop - 12, "start", "delta F1 (points)");

  const std::size_t n = result.per_group.size();
  const double band = n ? kPlotWidth / static_cast<double>(n) : kPlotWidth;
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = result.per_group[i];
    const double d = g.delta_f1_points;
    const double h = std::fabs(d) * scale;
    const double x = kLeft + band * static_cast<double>(i) + band * 0.2;
    const double y = d > 0 ? zero_y - h : zero_y;
    const bool loss = d < 0;
    svg += "  <rect class=\"bar " + std::string(loss ? "loss" : "gain") +
           "\" data-group=\"" + std::string(GroupName(g.group)) + "\" x=\"" +
           Num(x) + "\" y=\"" + Num(y) + "\" width=\"" + Num(band * 0.6) +
           "\" height=\"" + Num(h) + "\" fill=\"" +
           std::string(loss ? kLossColor : kGainColor) + "\"/>\n";
    char value[32];
    std::snprintf(value, sizeof(value), "%+.1f", d);
    svg += Label(x + band * 0.3, d > 0 ? y - 4 : y + h + 12, "middle", value);
    svg += Label(x + band * 0.3, kTop + kPlotHeight + 24, "middle",
                 "sans " + std::string(GroupName(g.group)));
  }
  svg += "</svg>\n";
  return svg;
}

std::string CurveChartSvg(const EliminationCurve& curve) {
  auto px = [](double percentile) {
    return kLeft + kPlotWidth * percentile / 100.0;
  };
  auto py = [](double f1) { return kTop + kPlotHeight * (1.0 - f1); };

  char title[96];
  std::snprintf(title, sizeof(title),
                " (peak avg F1 = %.3f at percentile %d, %zu features)",
                curve.peak.avg_f1, curve.peak.percentile, curve.peak.k);
  std::string svg = Header(curve.class_id + title);
  const double base = kTop + kPlotHeight;
  svg += Line(kLeft, kTop, kLeft, base, "axis y-axis");
  svg += Line(kLeft, base, kLeft + kPlotWidth, base, "axis x-axis");
  for (int t = 0; t <= 100; t += 20) {
    svg += Label(px(t), base + 18, "middle", std::to_string(t));
  }
  for (int t = 0; t <= 4; ++t) {
    char buf[16];
    std::snprintf(buf, sizeof(buf), "%.2f", t / 4.0);
    svg += Label(kLeft - 8, py(t / 4.0) + 4, "end", buf);
  }
  svg += Label(kLeft + kPlotWidth / 2, base + 40, "middle",
               "top-ranked features (percentile)");
  svg += Label(20, kTop - 12, "start", "avg F1");

  if (curve.points.size() >= 2) {
    std::string pts;
    for (const auto& p : curve.points) {
      if (!pts.empty()) pts += ' ';
      pts += Num(px(p.percentile)) + "," + Num(py(p.summary.avg_f1));
    }
    svg += "  <polyline class=\"curve\" points=\"" + pts +
           "\" fill=\"none\" stroke=\"#1f4e79\" stroke-width=\"2\"/>\n";
  }
  if (!curve.points.empty()) {
    svg += "  <circle id=\"peak\" class=\"peak\" cx=\"" +
           Num(px(curve.peak.percentile)) + "\" cy=\"" +
           Num(py(curve.peak.avg_f1)) +
           "\" r=\"5\" fill=\"#c00000\" stroke=\"#000000\"/>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace featstudy
