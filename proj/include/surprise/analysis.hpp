#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "surprise/decision_tree.hpp"
#include "surprise/scenarios.hpp"
#include "surprise/surprise_spec.hpp"

namespace surprise::analysis {

enum class Verdict { A, B, Indifferent };

/// "A", "B" or "I".
std::string_view verdict_code(Verdict v);

/// Pairwise comparison of two options. The model ranks by surprise value
/// only; expected values are carried along for inspection.
struct Preference {
  double delta_a = 0.0;
  double delta_b = 0.0;
  double expected_a = 0.0;
  double expected_b = 0.0;
  Verdict verdict = Verdict::Indifferent;
  double tolerance = 0.0;
};

/// Default tolerance is 1e-12 * max(1, |delta_a|, |delta_b|).
Preference preference(const DecisionTree& option_a, const DecisionTree& option_b,
                      const SurpriseSpec& spec,
                      std::optional<double> tolerance = std::nullopt);

/// Surprise value of the gamble {(1/p, p), (0, 1 - p)} (gain) or its
/// negation (loss), i.e. the certain-vs-gamble family at unit mean.
double gamble_surprise(double p, const SurpriseSpec& spec,
                       Domain domain = Domain::Gain);

/// The p in (0, 1) where gamble_surprise changes sign, by bisection on
/// [1e-9, 1 - 1e-9]. Throws NoRootError without a sign change.
double switch_probability(const SurpriseSpec& spec, Domain domain = Domain::Gain);

/// Evenly spaced, both ends included.
std::vector<double> linspace(double first, double last, std::size_t count);

/// Dense (k, r) grid of preferences under the power family.
struct RegionMap {
  std::vector<double> k_grid;
  std::vector<double> r_grid;
  std::vector<std::vector<Preference>> cells;  // cells[k index][r index]

  const Preference& at(std::size_t k_index, std::size_t r_index) const {
    return cells.at(k_index).at(r_index);
  }
};

/// Throws std::out_of_range for unknown labels and std::invalid_argument for
/// empty or non-ascending grids.
RegionMap region_map(const Scenario& scenario, std::string_view label_a,
                     std::string_view label_b, std::vector<double> k_grid,
                     std::vector<double> r_grid);

struct CurvePoint {
  double r;
  double difference;  // delta_option1 - delta_option2
};

/// Known-urn minus ambiguous-urn surprise along r, power family.
std::vector<CurvePoint> ellsberg_curve(int n, double k,
                                       const std::vector<double>& r_grid,
                                       const std::vector<double>& prior = {});

/// Sufficient conditions for ambiguity aversion (option 1 preferred).
struct ConditionReport {
  bool mild_condition_holds = false;   // f'' <= 1.5 f' on (0, 1/2)
  std::optional<double> mild_witness;  // worst violating m
  bool strong_condition_holds = false; // mu0 * f(1 - mu1) > f(1/2)
  double mu0 = 0.0;                    // mean of m over m < 1/2
  double mu1 = 0.0;                    // m-weighted mean of m over m < 1/2
  std::optional<double> r_threshold;   // power family, uniform prior only
};

/// Derivatives: closed form for the power family, central differences with
/// step 1e-5 otherwise. The mild condition is checked at m = 0.001 .. 0.499.
ConditionReport ambiguity_conditions(const SurpriseSpec& spec, int n,
                                     const std::vector<double>& prior = {});

/// Smallest power exponent for which the strong condition holds under the
/// uniform prior: log(4n / (n - 1)) / log((4n + 1) / (3n)). Needs n >= 2.
double strong_convexity_threshold(double n);

}  // namespace surprise::analysis
