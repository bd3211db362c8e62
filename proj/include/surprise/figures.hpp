#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "surprise/analysis.hpp"
#include "surprise/csv.hpp"

namespace surprise::io {

/// fig1, fig5, fig6b, fig7b, figS1.
const std::vector<std::string>& figure_ids();

/// Data behind a figure at its default parameters. Throws std::out_of_range
/// for an unknown id.
CsvTable figure_table(std::string_view id);

/// `r,k,delta_a,delta_b,preferred`, one row per cell, k-major.
CsvTable region_map_table(const analysis::RegionMap& map);

/// Default region-map axes: k in [1, 4] and r in (1, 4], 100 points each.
std::vector<double> figure_k_grid();
std::vector<double> figure_r_grid();

}  // namespace surprise::io
