#include "surprise/figures.hpp"

#include <stdexcept>
#include <utility>

#include "surprise/scenarios.hpp"

namespace surprise::io {

namespace {

using analysis::RegionMap;

void append_cells(CsvTable& table, const RegionMap& map,
                  const std::string* panel) {
  for (std::size_t i = 0; i < map.k_grid.size(); ++i) {
    for (std::size_t j = 0; j < map.r_grid.size(); ++j) {
      const analysis::Preference& p = map.at(i, j);
      std::vector<CsvCell> row;
      if (panel != nullptr) row.emplace_back(*panel);
      row.emplace_back(map.r_grid[j]);
      row.emplace_back(map.k_grid[i]);
      row.emplace_back(p.delta_a);
      row.emplace_back(p.delta_b);
      row.emplace_back(std::string(analysis::verdict_code(p.verdict)));
      table.add_row(std::move(row));
    }
  }
}

CsvTable panels(const std::vector<std::pair<std::string, RegionMap>>& maps) {
  CsvTable table({"panel", "r", "k", "delta_a", "delta_b", "preferred"});
  for (const auto& [name, map] : maps) append_cells(table, map, &name);
  return table;
}

RegionMap default_map(const Scenario& s, std::string_view a, std::string_view b) {
  return analysis::region_map(s, a, b, figure_k_grid(), figure_r_grid());
}

CsvTable fig1() {
  CsvTable table({"p", "delta_gain_k1", "delta_loss_k1", "delta_gain_k2.5",
                  "delta_loss_k2.5"});
  const SurpriseSpec k1 = SurpriseSpec::power(1.5, 1.0);
  const SurpriseSpec k25 = SurpriseSpec::power(1.5, 2.5);
  for (int i = 1; i <= 100; ++i) {
    const double p = i / 100.0;
    table.add_row({p, analysis::gamble_surprise(p, k1, Domain::Gain),
                   analysis::gamble_surprise(p, k1, Domain::Loss),
                   analysis::gamble_surprise(p, k25, Domain::Gain),
                   analysis::gamble_surprise(p, k25, Domain::Loss)});
  }
  return table;
}

CsvTable fig5() {
  std::vector<double> r_grid;
  for (int i = 100; i <= 600; ++i) r_grid.push_back(i / 100.0);
  CsvTable table({"r", "delta1_minus_delta2"});
  for (const auto& point : analysis::ellsberg_curve(50, 2.0, r_grid)) {
    table.add_row({point.r, point.difference});
  }
  return table;
}

CsvTable fig6b() {
  return panels({{"problem1", default_map(scenarios::allais_problem(1), "option1",
                                          "option2")},
                 {"problem2", default_map(scenarios::allais_problem(2, true),
                                          "option1", "option2")}});
}

CsvTable fig7b() {
  return panels({{"problem1", default_map(scenarios::birnbaum_problem(1),
                                          "option1", "option2")},
                 {"problem2", default_map(scenarios::birnbaum_problem(2),
                                          "option1", "option2")}});
}

// delta_a is the grouped tree, delta_b the ungrouped one.
CsvTable figS1() {
  const Scenario allais(
      "allais-2-option2", {},
      {{"grouped", scenarios::allais_problem(2, true).option("option2")},
       {"flat", scenarios::allais_problem(2, false).option("option2")}},
      "Allais problem 2, option 2 with and without grouping");
  const Scenario birnbaum(
      "birnbaum-option2", {},
      {{"grouped", scenarios::birnbaum_problem(1).option("option2")},
       {"flat", scenarios::birnbaum_problem(2).option("option2")}},
      "Birnbaum option 2 with and without grouping");
  return panels({{"allais", default_map(allais, "grouped", "flat")},
                 {"birnbaum", default_map(birnbaum, "grouped", "flat")}});
}

}  // namespace

const std::vector<std::string>& figure_ids() {
  static const std::vector<std::string> ids{"fig1", "fig5", "fig6b", "fig7b", "figS1"};
  return ids;
}

std::vector<double> figure_k_grid() {
  std::vector<double> k;
  for (int i = 0; i < 100; ++i) k.push_back(1.0 + 3.0 * i / 99.0);
  return k;
}

std::vector<double> figure_r_grid() {
  std::vector<double> r;
  for (int j = 1; j <= 100; ++j) r.push_back(1.0 + 3.0 * j / 100.0);
  return r;
}

CsvTable region_map_table(const RegionMap& map) {
  CsvTable table({"r", "k", "delta_a", "delta_b", "preferred"});
  append_cells(table, map, nullptr);
  return table;
}

CsvTable figure_table(std::string_view id) {
  if (id == "fig1") return fig1();
  if (id == "fig5") return fig5();
  if (id == "fig6b") return fig6b();
  if (id == "fig7b") return fig7b();
  if (id == "figS1") return figS1();
  throw std::out_of_range("unknown figure id '" + std::string(id) + "'");
}

}  // namespace surprise::io
