#pragma once

#include <string>
#include <vector>

namespace rmnk::pipeline {

// Static, self-contained SVG renderers for the report stage. Coordinates
// are emitted with two decimals so rendered bytes are reproducible.

struct ScatterPoint {
  double x = 0.0;
  double y = 0.0;
  int cluster = 0;  // 1-based label used for color and legend
};

std::string render_scatter_svg(const std::vector<ScatterPoint>& points,
                               const std::string& title);

struct HeatCell {
  int row = 0;
  int col = 0;
  double value = 0.0;  // cell shade
  int count = 0;       // printed inside the cell
};

std::string render_heatmap_svg(const std::vector<std::string>& row_labels,
                               const std::vector<std::string>& col_labels,
                               const std::vector<HeatCell>& cells,
                               const std::string& title);

struct BarEntry {
  std::string label;
  double value = 0.0;
};

std::string render_bars_svg(const std::vector<BarEntry>& bars, const std::string& title);

struct PathSeries {
  std::string label;
  std::vector<double> cumulative;  // one value per step, step 0 = base
};

std::string render_path_svg(const std::vector<PathSeries>& series,
                            const std::vector<std::string>& step_labels,
                            const std::string& title);

}  // namespace rmnk::pipeline
