#include "rmnk/pipeline/svg_report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace rmnk::pipeline {
namespace {

// Two-decimal fixed rendering keeps the emitted bytes reproducible.
std::string fmt2(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  return buf;
}

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    if (c == '&') out += "&amp;";
    else if (c == '<') out += "&lt;";
    else if (c == '>') out += "&gt;";
    else out += c;
  }
  return out;
}

const char* palette(int i) {
  static const char* kColors[] = {"#4e79a7", "#f28e2b", "#e15759", "#76b7b2",
                                  "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
                                  "#9c755f", "#bab0ac"};
  return kColors[((i % 10) + 10) % 10];
}

struct Range {
  double lo = 0.0, hi = 1.0;
};

Range padded(double lo, double hi) {
  if (!(hi > lo)) return {lo - 0.5, lo + 0.5};
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

std::string svg_open(double w, double h) {
  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fmt2(w)
      << "\" height=\"" << fmt2(h) << "\" viewBox=\"0 0 " << fmt2(w) << ' '
      << fmt2(h) << "\" font-family=\"sans-serif\">\n"
      << "<rect width=\"" << fmt2(w) << "\" height=\"" << fmt2(h)
      << "\" fill=\"white\"/>\n";
  return out.str();
}

std::string text_at(double x, double y, const std::string& s, int size,
                    const char* anchor = "start", const char* extra = "") {
  std::ostringstream out;
  out << "<text x=\"" << fmt2(x) << "\" y=\"" << fmt2(y) << "\" font-size=\""
      << size << "\" text-anchor=\"" << anchor << "\"" << extra << '>'
      << escape(s) << "</text>\n";
  return out.str();
}

}  // namespace

std::string render_scatter_svg(const std::vector<ScatterPoint>& points,
                               const std::string& title) {
  const double w = 640, h = 500, ml = 60, mr = 20, mt = 40, mb = 60;
  double xlo = 0, xhi = 1, ylo = 0, yhi = 1;
  if (!points.empty()) {
    xlo = xhi = points[0].x;
    ylo = yhi = points[0].y;
    for (const auto& p : points) {
      xlo = std::min(xlo, p.x); xhi = std::max(xhi, p.x);
      ylo = std::min(ylo, p.y); yhi = std::max(yhi, p.y);
    }
  }
  const Range rx = padded(xlo, xhi), ry = padded(ylo, yhi);
  auto sx = [&](double x) { return ml + (x - rx.lo) / (rx.hi - rx.lo) * (w - ml - mr); };
  auto sy = [&](double y) { return h - mb - (y - ry.lo) / (ry.hi - ry.lo) * (h - mt - mb); };

  std::ostringstream out;
  out << svg_open(w, h) << text_at(w / 2, 24, title, 15, "middle");
  out << "<rect x=\"" << fmt2(ml) << "\" y=\"" << fmt2(mt) << "\" width=\""
      << fmt2(w - ml - mr) << "\" height=\"" << fmt2(h - mt - mb)
      << "\" fill=\"none\" stroke=\"#888\"/>\n";
  out << text_at(w / 2, h - 28, "pc1", 12, "middle");
  out << text_at(16, h / 2, "pc2", 12, "middle",
                 (" transform=\"rotate(-90 16 " + fmt2(h / 2) + ")\"").c_str());
  for (const auto& p : points)
    out << "<circle cx=\"" << fmt2(sx(p.x)) << "\" cy=\"" << fmt2(sy(p.y))
        << "\" r=\"5\" fill=\"" << palette(p.cluster - 1)
        << "\" fill-opacity=\"0.8\" stroke=\"#333\" stroke-width=\"0.5\"/>\n";

  std::vector<int> clusters;
  for (const auto& p : points)
    if (std::find(clusters.begin(), clusters.end(), p.cluster) == clusters.end())
      clusters.push_back(p.cluster);
  std::sort(clusters.begin(), clusters.end());
  double lx = ml;
  for (int c : clusters) {
    out << "<rect x=\"" << fmt2(lx) << "\" y=\"" << fmt2(h - 18) << "\" width=\"10\""
        << " height=\"10\" fill=\"" << palette(c - 1) << "\"/>\n"
        << text_at(lx + 14, h - 9, "C" + std::to_string(c), 11);
    lx += 60;
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_heatmap_svg(const std::vector<std::string>& row_labels,
                               const std::vector<std::string>& col_labels,
                               const std::vector<HeatCell>& cells,
                               const std::string& title) {
  const double cw = 84, ch = 36, ml = 70, mt = 84, mr = 20, mb = 20;
  const double w = ml + cw * std::max<std::size_t>(col_labels.size(), 1) + mr;
  const double h = mt + ch * std::max<std::size_t>(row_labels.size(), 1) + mb;
  double vlo = 0, vhi = 0;
  if (!cells.empty()) {
    vlo = vhi = cells[0].value;
    for (const auto& c : cells) {
      vlo = std::min(vlo, c.value);
      vhi = std::max(vhi, c.value);
    }
  }

  std::ostringstream out;
  out << svg_open(w, h) << text_at(w / 2, 22, title, 15, "middle");
  for (std::size_t j = 0; j < col_labels.size(); ++j) {
    const double x = ml + cw * j + cw / 2;
    out << text_at(x, mt - 8, col_labels[j], 10, "end",
                   (" transform=\"rotate(-35 " + fmt2(x) + ' ' + fmt2(mt - 8) + ")\"")
                       .c_str());
  }
  for (std::size_t i = 0; i < row_labels.size(); ++i)
    out << text_at(ml - 8, mt + ch * i + ch / 2 + 4, row_labels[i], 11, "end");
  for (const auto& c : cells) {
    const double t = vhi > vlo ? (c.value - vlo) / (vhi - vlo) : 0.5;
    const int r = static_cast<int>(std::lround(255 - t * (255 - 70)));
    const int g = static_cast<int>(std::lround(255 - t * (255 - 130)));
    const int b = static_cast<int>(std::lround(255 - t * (255 - 180)));
    out << "<rect x=\"" << fmt2(ml + cw * c.col) << "\" y=\"" << fmt2(mt + ch * c.row)
        << "\" width=\"" << fmt2(cw) << "\" height=\"" << fmt2(ch) << "\" fill=\"rgb("
        << r << ',' << g << ',' << b << ")\" stroke=\"#999\"/>\n";
    out << text_at(ml + cw * c.col + cw / 2, mt + ch * c.row + ch / 2 + 4,
                   std::to_string(c.count), 12, "middle",
                   t > 0.6 ? " fill=\"white\"" : "");
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_bars_svg(const std::vector<BarEntry>& bars, const std::string& title) {
  const double ml = 180, mr = 70, mt = 40, bh = 22, gap = 8;
  const double w = 560;
  const double h = mt + (bh + gap) * std::max<std::size_t>(bars.size(), 1) + 20;
  double vmax = 0;
  for (const auto& b : bars) vmax = std::max(vmax, b.value);
  if (vmax <= 0) vmax = 1;

  std::ostringstream out;
  out << svg_open(w, h) << text_at(w / 2, 22, title, 15, "middle");
  for (std::size_t i = 0; i < bars.size(); ++i) {
    const double y = mt + (bh + gap) * i;
    const double bw = bars[i].value / vmax * (w - ml - mr);
    out << text_at(ml - 8, y + bh - 6, bars[i].label, 11, "end");
    out << "<rect x=\"" << fmt2(ml) << "\" y=\"" << fmt2(y) << "\" width=\""
        << fmt2(bw) << "\" height=\"" << fmt2(bh) << "\" fill=\"#4e79a7\"/>\n";
    out << text_at(ml + bw + 6, y + bh - 6, fmt2(bars[i].value), 10);
  }
  out << "</svg>\n";
  return out.str();
}

std::string render_path_svg(const std::vector<PathSeries>& series,
                            const std::vector<std::string>& step_labels,
                            const std::string& title) {
  const std::size_t steps = step_labels.size();
  const double ml = 60, mr = 130, mt = 40, mb = 110;
  const double w = ml + mr + 42.0 * std::max<std::size_t>(steps, 2);
  const double h = 420;
  double vlo = 0, vhi = 1;
  bool first = true;
  for (const auto& s : series)
    for (double v : s.cumulative) {
      if (first) { vlo = vhi = v; first = false; }
      vlo = std::min(vlo, v);
      vhi = std::max(vhi, v);
    }
  const Range ry = padded(vlo, vhi);
  auto sx = [&](std::size_t i) {
    return ml + (steps > 1 ? static_cast<double>(i) / (steps - 1) : 0.5) * (w - ml - mr);
  };
  auto sy = [&](double v) { return h - mb - (v - ry.lo) / (ry.hi - ry.lo) * (h - mt - mb); };

  std::ostringstream out;
  out << svg_open(w, h) << text_at(w / 2, 22, title, 15, "middle");
  out << "<line x1=\"" << fmt2(ml) << "\" y1=\"" << fmt2(h - mb) << "\" x2=\""
      << fmt2(w - mr) << "\" y2=\"" << fmt2(h - mb) << "\" stroke=\"#888\"/>\n";
  for (std::size_t i = 0; i < steps; ++i) {
    const double x = sx(i);
    out << "<line x1=\"" << fmt2(x) << "\" y1=\"" << fmt2(h - mb) << "\" x2=\""
        << fmt2(x) << "\" y2=\"" << fmt2(h - mb + 4) << "\" stroke=\"#888\"/>\n";
    out << text_at(x, h - mb + 16, step_labels[i], 9, "end",
                   (" transform=\"rotate(-45 " + fmt2(x) + ' ' + fmt2(h - mb + 16) + ")\"")
                       .c_str());
  }
  for (std::size_t s = 0; s < series.size(); ++s) {
    std::ostringstream pts;
    for (std::size_t i = 0; i < series[s].cumulative.size() && i < steps; ++i)
      pts << (i ? " " : "") << fmt2(sx(i)) << ',' << fmt2(sy(series[s].cumulative[i]));
    out << "<polyline points=\"" << pts.str() << "\" fill=\"none\" stroke=\""
        << palette(static_cast<int>(s)) << "\" stroke-width=\"2\"/>\n";
    out << "<rect x=\"" << fmt2(w - mr + 16) << "\" y=\"" << fmt2(mt + 20.0 * s)
        << "\" width=\"10\" height=\"10\" fill=\"" << palette(static_cast<int>(s))
        << "\"/>\n"
        << text_at(w - mr + 30, mt + 20.0 * s + 9, series[s].label, 11);
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace rmnk::pipeline
