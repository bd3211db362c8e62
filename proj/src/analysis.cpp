#include "surprise/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "surprise/bisection.hpp"
#include "surprise/errors.hpp"
#include "surprise/lottery.hpp"

namespace surprise::analysis {

namespace {

void require_ascending(const std::vector<double>& grid, const char* what) {
  if (grid.empty()) {
    throw std::invalid_argument(std::string(what) + " grid is empty");
  }
  for (std::size_t i = 1; i < grid.size(); ++i) {
    if (!(grid[i] > grid[i - 1])) {
      throw std::invalid_argument(std::string(what) +
                                  " grid must be strictly ascending");
    }
  }
}

struct Derivatives {
  double first;
  double second;
};

Derivatives gain_derivatives(const SurpriseSpec& spec, double m) {
  if (auto r = spec.power_exponent()) {
    return {*r * std::pow(m, *r - 1.0), *r * (*r - 1.0) * std::pow(m, *r - 2.0)};
  }
  constexpr double h = 1e-5;
  const double lo = spec.gain(m - h);
  const double mid = spec.gain(m);
  const double hi = spec.gain(m + h);
  return {(hi - lo) / (2.0 * h), (hi - 2.0 * mid + lo) / (h * h)};
}

bool is_uniform(const std::vector<double>& prior) {
  return std::all_of(prior.begin(), prior.end(),
                     [&](double p) { return p == prior.front(); });
}

}  // namespace

std::string_view verdict_code(Verdict v) {
  switch (v) {
    case Verdict::A:
      return "A";
    case Verdict::B:
      return "B";
    case Verdict::Indifferent:
      break;
  }
  return "I";
}

Preference preference(const DecisionTree& option_a, const DecisionTree& option_b,
                      const SurpriseSpec& spec, std::optional<double> tolerance) {
  Preference out;
  out.delta_a = surprise_tree(option_a, spec);
  out.delta_b = surprise_tree(option_b, spec);
  out.expected_a = annotate(option_a).expectation;
  out.expected_b = annotate(option_b).expectation;
  out.tolerance = tolerance.value_or(
      1e-12 * std::max({1.0, std::abs(out.delta_a), std::abs(out.delta_b)}));
  const double gap = out.delta_a - out.delta_b;
  if (std::abs(gap) <= out.tolerance) {
    out.verdict = Verdict::Indifferent;
  } else {
    out.verdict = gap > 0.0 ? Verdict::A : Verdict::B;
  }
  return out;
}

double gamble_surprise(double p, const SurpriseSpec& spec, Domain domain) {
  const double sign = domain == Domain::Loss ? -1.0 : 1.0;
  return surprise_flat(Lottery({{sign / p, p}, {0.0, 1.0 - p}}), spec);
}

double switch_probability(const SurpriseSpec& spec, Domain domain) {
  return bisect([&](double p) { return gamble_surprise(p, spec, domain); },
                1e-9, 1.0 - 1e-9);
}

std::vector<double> linspace(double first, double last, std::size_t count) {
  if (count == 0) return {};
  if (count == 1) return {first};
  std::vector<double> out(count);
  const double span = last - first;
  const double steps = static_cast<double>(count - 1);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = first + span * (static_cast<double>(i) / steps);
  }
  out.back() = last;
  return out;
}

RegionMap region_map(const Scenario& scenario, std::string_view label_a,
                     std::string_view label_b, std::vector<double> k_grid,
                     std::vector<double> r_grid) {
  require_ascending(k_grid, "k");
  require_ascending(r_grid, "r");
  const DecisionTree& a = scenario.option(label_a);
  const DecisionTree& b = scenario.option(label_b);

  RegionMap out;
  out.cells.reserve(k_grid.size());
  for (double k : k_grid) {
    std::vector<Preference> row;
    row.reserve(r_grid.size());
    for (double r : r_grid) {
      row.push_back(preference(a, b, SurpriseSpec::power(r, k)));
    }
    out.cells.push_back(std::move(row));
  }
  out.k_grid = std::move(k_grid);
  out.r_grid = std::move(r_grid);
  return out;
}

std::vector<CurvePoint> ellsberg_curve(int n, double k,
                                       const std::vector<double>& r_grid,
                                       const std::vector<double>& prior) {
  const Scenario urns = scenarios::ellsberg_two_urns(n, prior);
  const DecisionTree& known = urns.option("option1");
  const DecisionTree& ambiguous = urns.option("option2");
  std::vector<CurvePoint> out;
  out.reserve(r_grid.size());
  for (double r : r_grid) {
    const SurpriseSpec spec = SurpriseSpec::power(r, k);
    out.push_back({r, surprise_tree(known, spec) - surprise_tree(ambiguous, spec)});
  }
  return out;
}

ConditionReport ambiguity_conditions(const SurpriseSpec& spec, int n,
                                     const std::vector<double>& prior_in) {
  // Validates the prior the same way the scenario does.
  const std::vector<double> prior =
      prior_in.empty() ? scenarios::uniform_urn_prior(n) : prior_in;
  (void)scenarios::ellsberg_two_urns(n, prior);

  ConditionReport out;

  double worst = 0.0;
  for (int i = 1; i < 500; ++i) {
    const double m = i / 1000.0;
    const Derivatives d = gain_derivatives(spec, m);
    const double excess = d.second - 1.5 * d.first;
    if (excess > 0.0 && (!out.mild_witness || excess > worst)) {
      worst = excess;
      out.mild_witness = m;
    }
  }
  out.mild_condition_holds = !out.mild_witness.has_value();

  double mass = 0.0, first = 0.0, second = 0.0;
  const double two_n = 2.0 * n;
  for (int j = 0; j < n; ++j) {  // m = j / 2n < 1/2
    const double m = j / two_n;
    mass += prior[j];
    first += m * prior[j];
    second += m * m * prior[j];
  }
  out.mu0 = first / mass;
  out.mu1 = second / first;
  out.strong_condition_holds =
      std::isfinite(out.mu0) && std::isfinite(out.mu1) &&
      out.mu0 * spec.gain(1.0 - out.mu1) > spec.gain(0.5);

  if (spec.is_power() && n >= 2 && is_uniform(prior)) {
    out.r_threshold = strong_convexity_threshold(n);
  }
  return out;
}

double strong_convexity_threshold(double n) {
  if (!(n >= 2.0)) {
    throw DomainError("strong-convexity threshold needs n >= 2");
  }
  return std::log(4.0 * n / (n - 1.0)) / std::log((4.0 * n + 1.0) / (3.0 * n));
}

}  // namespace surprise::analysis
