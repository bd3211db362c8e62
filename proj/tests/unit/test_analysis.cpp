#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "random_tree.hpp"
#include "surprise/analysis.hpp"
#include "surprise/bisection.hpp"
#include "surprise/errors.hpp"

using namespace surprise;
using namespace surprise::analysis;

TEST_CASE("preference") {
  const auto spec = SurpriseSpec::power(1.5, 2.0);
  const auto tree = scenarios::allais_problem(1).option("option2");
  const auto same = preference(tree, tree, spec);
  CHECK(same.verdict == Verdict::Indifferent);
  CHECK(verdict_code(same.verdict) == "I");

  const auto allais1 = scenarios::allais_problem(1);
  const auto p = preference(allais1.option("option1"), allais1.option("option2"), spec);
  CHECK(p.verdict == Verdict::B);
  CHECK(p.delta_b > p.delta_a);
  CHECK(p.expected_b == doctest::Approx(0.5));

  const auto urns = scenarios::ellsberg_two_urns(50);
  CHECK(preference(urns.option("option1"), urns.option("option2"),
                   SurpriseSpec::power(3.0, 2.0))
            .verdict == Verdict::A);

  const auto loose = preference(allais1.option("option1"), allais1.option("option2"), spec, 10.0);
  CHECK(loose.verdict == Verdict::Indifferent);
  CHECK(loose.tolerance == 10.0);
}

TEST_CASE("switch probability against the closed form") {
  for (double k : {1.0, 1.5, 2.5, 5.0}) {
    for (double r : {1.2, 1.5, 2.0, 3.0}) {
      const auto spec = SurpriseSpec::power(r, k);
      const double gain = 1.0 / (1.0 + std::pow(k, 1.0 / (r - 1.0)));
      const double loss = 1.0 / (1.0 + std::pow(k, -1.0 / (r - 1.0)));
      CHECK(std::abs(switch_probability(spec, Domain::Gain) - gain) < 1e-6);
      CHECK(std::abs(switch_probability(spec, Domain::Loss) - loss) < 1e-6);
    }
  }
  CHECK(std::abs(switch_probability(SurpriseSpec::power(1.5, 1.0)) - 0.5) < 1e-9);
  CHECK(std::abs(switch_probability(SurpriseSpec::power(1.5, 2.5)) - 1.0 / 7.25) < 1e-6);
  CHECK(std::abs(1.0 / 7.25 - 0.137931) < 1e-6);
}

TEST_CASE("gamble surprise shape") {
  const auto k1 = SurpriseSpec::power(1.5, 1.0);
  const auto k25 = SurpriseSpec::power(1.5, 2.5);
  CHECK(std::abs(gamble_surprise(1.0, k1)) < 1e-12);
  CHECK(std::abs(gamble_surprise(1.0, k25, Domain::Loss)) < 1e-12);
  CHECK(gamble_surprise(1e-6, k1) > 900.0);
  CHECK(gamble_surprise(1e-6, k25) > 900.0);
  CHECK(gamble_surprise(0.5, k25) < 0.0);
  CHECK(gamble_surprise(0.5, k25, Domain::Loss) < 0.0);
  for (int i = 1; i <= 100; ++i) {
    const double p = i / 100.0;
    CHECK(std::abs(gamble_surprise(p, k1, Domain::Loss) + gamble_surprise(p, k1)) < 1e-12);
  }
}

TEST_CASE("bisection") {
  const double root = bisect([](double x) { return x * x - 2.0; }, 0.0, 2.0);
  CHECK(std::abs(root - std::sqrt(2.0)) < 1e-9);
  CHECK_THROWS_AS(bisect([](double x) { return x * x + 1.0; }, -1.0, 1.0), NoRootError);
  CHECK(bisect([](double x) { return x; }, 0.0, 1.0) == 0.0);
  CHECK_THROWS_AS(switch_probability(SurpriseSpec::power(1.0, 2.0)), NoRootError);
}

TEST_CASE("linspace") {
  CHECK(linspace(1.0, 2.0, 0).empty());
  CHECK(linspace(1.0, 2.0, 1) == std::vector<double>{1.0});
  const auto x = linspace(1.0, 4.0, 31);
  CHECK(x.front() == 1.0);
  CHECK(x.back() == 4.0);
  CHECK(x[10] == doctest::Approx(2.0));
}

TEST_CASE("region map cells") {
  const auto s = scenarios::allais_problem(2, true);
  const auto map = region_map(s, "option1", "option2", {2.5}, {1.5});
  CHECK(map.at(0, 0).verdict == Verdict::A);
  const auto flat = region_map(scenarios::allais_problem(2, false), "option1", "option2", {2.5},
                               {1.5});
  CHECK(flat.at(0, 0).verdict == Verdict::B);
  const auto b1 = region_map(scenarios::birnbaum_problem(1), "option1", "option2", {2.0}, {2.0});
  const auto b2 = region_map(scenarios::birnbaum_problem(2), "option1", "option2", {2.0}, {2.0});
  CHECK(b1.at(0, 0).verdict == Verdict::B);
  CHECK(b2.at(0, 0).verdict == Verdict::A);

  CHECK_THROWS_AS(region_map(s, "option1", "option2", {2.0, 1.0}, {1.5}), std::invalid_argument);
  CHECK_THROWS_AS(region_map(s, "option1", "option2", {}, {1.5}), std::invalid_argument);
  CHECK_THROWS_AS(region_map(s, "option1", "nope", {1.0}, {1.5}), std::out_of_range);
}

TEST_CASE("region map verdicts survive outcome scaling") {
  const auto k = linspace(1.0, 4.0, 16);
  const auto r = linspace(1.1, 4.0, 16);
  for (const auto& info : scenarios::catalog()) {
    const auto s = scenarios::make_scenario(info.name);
    std::vector<LabeledOption> scaled;
    for (const auto& o : s.options()) {
      scaled.push_back({o.label, testgen::map_outcomes(o.tree, [](double x) { return 7.0 * x; })});
    }
    const Scenario big(s.name(), s.params(), scaled, s.provenance());
    const auto& a = s.options()[0].label;
    const auto& b = s.options()[1].label;
    const auto m1 = region_map(s, a, b, k, r);
    const auto m7 = region_map(big, a, b, k, r);
    for (std::size_t i = 0; i < k.size(); ++i) {
      for (std::size_t j = 0; j < r.size(); ++j) {
        REQUIRE(m1.at(i, j).verdict == m7.at(i, j).verdict);
      }
    }
  }
}

TEST_CASE("ellsberg curve") {
  const auto r = linspace(1.0, 6.0, 51);
  for (const auto& point : ellsberg_curve(50, 1.0, r)) {
    CHECK(std::abs(point.difference) < 1e-12);
  }
  const auto curve = ellsberg_curve(50, 2.0, {1.5, 2.2, 3.0, 4.0});
  CHECK(curve[0].difference > 0.0);
  CHECK(curve[1].difference < 0.0);
  CHECK(curve[2].difference > 0.0);
  CHECK(curve[3].difference > 0.0);

  // f linear: (k - 1) sum_{m < 1/2} p(m) m (1 - 2m)
  const int n = 50;
  const auto prior = scenarios::uniform_urn_prior(n);
  double expected = 0.0;
  for (int j = 0; j < n; ++j) {
    const double m = j / (2.0 * n);
    expected += prior[j] * m * (1.0 - 2.0 * m);
  }
  const auto linear = ellsberg_curve(n, 2.0, {1.0});
  CHECK(linear[0].difference > 0.0);
  CHECK(std::abs(linear[0].difference - expected) < 1e-12);
}

TEST_CASE("ambiguity conditions") {
  const auto linear = ambiguity_conditions(SurpriseSpec::power(1.0, 2.0), 50);
  CHECK(linear.mild_condition_holds);
  CHECK_FALSE(linear.mild_witness.has_value());

  const auto convex = ambiguity_conditions(SurpriseSpec::power(1.5, 2.0), 50);
  CHECK_FALSE(convex.mild_condition_holds);
  REQUIRE(convex.mild_witness.has_value());
  CHECK(*convex.mild_witness < 0.5 / 1.5);
  CHECK(*convex.mild_witness < 0.01);

  REQUIRE(convex.r_threshold.has_value());
  CHECK(*convex.r_threshold == doctest::Approx(strong_convexity_threshold(50)));
  CHECK(convex.mu0 > 0.0);
  CHECK(convex.mu1 > convex.mu0);

  CHECK(ambiguity_conditions(SurpriseSpec::power(5.0, 2.0), 50).strong_condition_holds);
  CHECK_FALSE(ambiguity_conditions(SurpriseSpec::power(4.7, 2.0), 50).strong_condition_holds);

  const auto table = ambiguity_conditions(
      SurpriseSpec::tabulated({0.0, 0.5, 1.0}, {0.0, 0.5, 1.0}, 2.0), 10);
  CHECK(table.mild_condition_holds);
  CHECK_FALSE(table.r_threshold.has_value());
}

TEST_CASE("strong convexity threshold") {
  CHECK(std::abs(strong_convexity_threshold(1e6) - 4.82) < 0.01);
  CHECK(std::abs(strong_convexity_threshold(50) - 4.81) < 0.01);
  CHECK(strong_convexity_threshold(50) == doctest::Approx(4.8058).epsilon(1e-4));
  CHECK_THROWS(strong_convexity_threshold(1.0));
}
