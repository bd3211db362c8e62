#include "surprise/scenarios.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "surprise/errors.hpp"

namespace surprise {

Scenario::Scenario(std::string name, std::map<std::string, double> params,
                   std::vector<LabeledOption> options, std::string provenance)
    : name_(std::move(name)),
      params_(std::move(params)),
      options_(std::move(options)),
      provenance_(std::move(provenance)) {
  if (options_.size() < 2) {
    throw ValidationError("scenario '" + name_ + "' needs at least two options");
  }
}

const DecisionTree& Scenario::option(std::string_view label) const {
  for (const auto& o : options_) {
    if (o.label == label) return o.tree;
  }
  throw std::out_of_range("scenario '" + name_ + "' has no option '" +
                          std::string(label) + "'");
}

bool Scenario::has_option(std::string_view label) const {
  return std::any_of(options_.begin(), options_.end(),
                     [&](const LabeledOption& o) { return o.label == label; });
}

namespace scenarios {

namespace {

using Children = std::vector<Transition>;

DecisionTree leaf(double x) { return DecisionTree::leaf(x); }

DecisionTree flat(std::vector<LotteryEntry> entries) {
  return DecisionTree::from_lottery(Lottery(std::move(entries)));
}

void require_open_unit(double p, const char* what) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError(std::string(what) + " must lie in (0, 1), got " +
                      std::to_string(p));
  }
}

int as_integer(double v, const char* what) {
  if (!std::isfinite(v) || v != std::floor(v)) {
    throw DomainError(std::string(what) + " must be an integer");
  }
  return static_cast<int>(v);
}

bool as_flag(double v, const char* what) {
  if (v != 0.0 && v != 1.0) {
    throw DomainError(std::string(what) + " must be 0 or 1");
  }
  return v == 1.0;
}

}  // namespace

Scenario kahneman_gamble(double p, double xbar, Domain domain) {
  if (!(p > 0.0 && p <= 1.0)) {
    throw DomainError("gamble probability p must lie in (0, 1], got " +
                      std::to_string(p));
  }
  if (xbar == 0.0 || !std::isfinite(xbar)) {
    throw DomainError("expected value xbar must be finite and non-zero");
  }
  const double sign = domain == Domain::Loss ? -1.0 : 1.0;
  const double x = sign * xbar;
  std::vector<LabeledOption> options{
      {"certain", flat({{x, 1.0}})},
      {"gamble", flat({{x / p, p}, {0.0, 1.0 - p}})},
  };
  return Scenario("kahneman",
                  {{"p", p}, {"xbar", xbar}, {"loss", domain == Domain::Loss ? 1.0 : 0.0}},
                  std::move(options),
                  "Kahneman & Tversky (1979), problems 3, 4, 7, 8: equal-mean "
                  "certain prospect vs long-shot gamble");
}

Scenario blackjack_16v10(double p0, double p2) {
  require_open_unit(p0, "p0");
  require_open_unit(p2, "p2");
  if (!(p0 < p2)) {
    throw DomainError("blackjack 16 vs 10 needs p0 < p2");
  }
  const double p1 = p0 / p2;
  DecisionTree stand = flat({{1.0, p0}, {-1.0, 1.0 - p0}});
  DecisionTree hit = DecisionTree::branch(Children{
      {1.0 - p1, leaf(-1.0)},
      {p1, flat({{1.0, p2}, {-1.0, 1.0 - p2}})},
  });
  return Scenario("blackjack-16v10", {{"p0", p0}, {"p2", p2}},
                  {{"stand", std::move(stand)}, {"hit", std::move(hit)}},
                  "Bennis (2004) field study: standing on 16 against a dealer 10; "
                  "ties resolved by a fair coin, unit bet");
}

Scenario blackjack_insurance(double p2, bool player_has_blackjack) {
  require_open_unit(p2, "p2");
  constexpr double dealer_blackjack = 1.0 / 3.0;
  std::vector<LabeledOption> options;
  if (player_has_blackjack) {
    options.push_back({"bet", flat({{1.0, 1.0}})});
    options.push_back(
        {"no_bet", flat({{1.5, 2.0 / 3.0}, {0.0, 1.0 / 3.0}})});
  } else {
    options.push_back({"bet", DecisionTree::branch(Children{
                                  {dealer_blackjack, leaf(0.0)},
                                  {1.0 - dealer_blackjack,
                                   flat({{0.5, p2}, {-1.5, 1.0 - p2}})},
                              })});
    options.push_back({"no_bet", DecisionTree::branch(Children{
                                     {dealer_blackjack, leaf(-1.0)},
                                     {1.0 - dealer_blackjack,
                                      flat({{1.0, p2}, {-1.0, 1.0 - p2}})},
                                 })});
  }
  return Scenario("blackjack-insurance",
                  {{"p2", p2}, {"player_blackjack", player_has_blackjack ? 1.0 : 0.0}},
                  std::move(options),
                  "Bennis (2004) field study: insurance side bet with a dealer "
                  "ace and peek; dealer blackjack probability idealized to 1/3");
}

std::vector<double> uniform_urn_prior(int n) {
  if (n < 1) {
    throw DomainError("urn half-size n must be a positive integer");
  }
  const std::size_t states = 2 * static_cast<std::size_t>(n) + 1;
  return std::vector<double>(states, 1.0 / static_cast<double>(states));
}

Scenario ellsberg_two_urns(int n, std::vector<double> prior) {
  if (n < 1) {
    throw DomainError("urn half-size n must be a positive integer");
  }
  if (prior.empty()) prior = uniform_urn_prior(n);
  const std::size_t states = 2 * static_cast<std::size_t>(n) + 1;
  if (prior.size() != states) {
    throw DomainError("prior must have 2n + 1 = " + std::to_string(states) +
                      " entries, got " + std::to_string(prior.size()));
  }
  double total = 0.0;
  for (std::size_t j = 0; j < states; ++j) {
    if (!std::isfinite(prior[j]) || prior[j] < 0.0) {
      throw DomainError("prior entry " + std::to_string(j) + " is negative");
    }
    if (std::abs(prior[j] - prior[states - 1 - j]) > 1e-12) {
      throw DomainError("prior is not symmetric: p(m) != p(1 - m) at index " +
                        std::to_string(j));
    }
    total += prior[j];
  }
  if (std::abs(total - 1.0) > 1e-9) {
    throw DomainError("prior sums to " + std::to_string(total) + ", expected 1");
  }

  Children compositions;
  compositions.reserve(states);
  const double two_n = 2.0 * n;
  for (std::size_t j = 0; j < states; ++j) {
    const double m = static_cast<double>(j) / two_n;
    if (j == 0) {
      compositions.push_back({prior[j], leaf(0.0)});
    } else if (j == states - 1) {
      compositions.push_back({prior[j], leaf(1.0)});
    } else {
      compositions.push_back({prior[j], flat({{1.0, m}, {0.0, 1.0 - m}})});
    }
  }
  return Scenario("ellsberg", {{"n", static_cast<double>(n)}},
                  {{"option1", flat({{1.0, 0.5}, {0.0, 0.5}})},
                   {"option2", DecisionTree::branch(std::move(compositions))}},
                  "Ellsberg (1961) two-urn problem: known 50/50 urn vs urn of "
                  "unknown composition viewed as a compound lottery");
}

Scenario allais_problem(int problem, bool grouping) {
  if (problem == 1) {
    return Scenario("allais-1", {},
                    {{"option1", flat({{0.0, 0.89}, {1.0, 0.11}})},
                     {"option2", flat({{0.0, 0.9}, {5.0, 0.1}})}},
                    "Allais (1953) common-consequence problem 1");
  }
  if (problem != 2) {
    throw DomainError("Allais problem must be 1 or 2");
  }
  DecisionTree option2 = flat({{0.0, 0.01}, {1.0, 0.89}, {5.0, 0.1}});
  if (grouping) {
    // Same arithmetic as group_improbable on the flat lottery.
    const double group = 0.01 + 0.1;
    option2 = DecisionTree::branch(Children{
        {0.89, leaf(1.0)},
        {group, flat({{0.0, 0.01 / group}, {5.0, 0.1 / group}})},
    });
  }
  return Scenario("allais-2", {{"grouped", grouping ? 1.0 : 0.0}},
                  {{"option1", flat({{1.0, 1.0}})}, {"option2", std::move(option2)}},
                  grouping ? "Allais (1953) common-consequence problem 2, "
                             "improbable outcomes 0 and 5 grouped"
                           : "Allais (1953) common-consequence problem 2");
}

Scenario birnbaum_problem(int problem) {
  // Option 1 merges its two improbable 50-outcomes: a certain sub-branch.
  DecisionTree option1 = flat({{100.0, 0.85}, {50.0, 0.15}});
  if (problem == 1) {
    const double group = 0.15;
    DecisionTree option2 = DecisionTree::branch(Children{
        {0.85, leaf(100.0)},
        {group, flat({{100.0, 0.1 / group}, {7.0, 0.05 / group}})},
    });
    return Scenario("birnbaum-1", {},
                    {{"option1", std::move(option1)}, {"option2", std::move(option2)}},
                    "Birnbaum (2008), Table 1: event-split form, improbable "
                    "events grouped");
  }
  if (problem != 2) {
    throw DomainError("Birnbaum problem must be 1 or 2");
  }
  return Scenario("birnbaum-2", {},
                  {{"option1", std::move(option1)},
                   {"option2", flat({{100.0, 0.95}, {7.0, 0.05}})}},
                  "Birnbaum (2008), Table 1: coalesced form");
}

DecisionTree group_improbable(const Lottery& lottery, double threshold) {
  if (!(threshold > 0.0 && threshold < 1.0)) {
    throw DomainError("grouping threshold must lie in (0, 1)");
  }
  Children kept;
  std::vector<LotteryEntry> grouped;
  for (const auto& e : lottery.entries()) {
    if (e.probability == 0.0) continue;
    if (e.probability <= threshold) {
      grouped.push_back(e);
    } else {
      kept.push_back({e.probability, leaf(e.outcome)});
    }
  }
  if (kept.empty() || grouped.size() < 2) {
    return DecisionTree::from_lottery(lottery);
  }
  double mass = 0.0;
  for (const auto& e : grouped) mass += e.probability;
  const bool uniform_outcome =
      std::all_of(grouped.begin(), grouped.end(), [&](const LotteryEntry& e) {
        return e.outcome == grouped.front().outcome;
      });
  if (uniform_outcome) {
    kept.push_back({mass, leaf(grouped.front().outcome)});
  } else {
    for (auto& e : grouped) e.probability /= mass;
    kept.push_back({mass, DecisionTree::from_lottery(Lottery(std::move(grouped)))});
  }
  return DecisionTree::branch(std::move(kept));
}

const std::vector<ScenarioInfo>& catalog() {
  static const std::vector<ScenarioInfo> entries{
      {"kahneman", "certain xbar vs gamble {(xbar/p, p), (0, 1-p)}; loss=1 negates",
       {{"p", 0.25}, {"xbar", 1.0}, {"loss", 0.0}}},
      {"blackjack-16v10", "stand vs hit on 16 against a dealer 10",
       {{"p0", 0.23}, {"p2", 0.598}}},
      {"blackjack-insurance", "insurance side bet vs none, dealer shows an ace",
       {{"p2", 0.5}, {"player_blackjack", 0.0}}},
      {"ellsberg", "known 50/50 urn vs ambiguous urn, uniform prior", {{"n", 50.0}}},
      {"allais-1", "Allais problem 1", {}},
      {"allais-2", "Allais problem 2; grouped=1 bundles improbable outcomes",
       {{"grouped", 1.0}}},
      {"birnbaum-1", "Birnbaum event-split problem (grouped option 2)", {}},
      {"birnbaum-2", "Birnbaum coalesced problem", {}},
  };
  return entries;
}

Scenario make_scenario(std::string_view name,
                       const std::map<std::string, double>& params) {
  const auto& entries = catalog();
  auto it = std::find_if(entries.begin(), entries.end(),
                         [&](const ScenarioInfo& s) { return s.name == name; });
  if (it == entries.end()) {
    throw DomainError("unknown scenario '" + std::string(name) + "'");
  }
  std::map<std::string, double> merged = it->defaults;
  for (const auto& [key, value] : params) {
    if (!merged.contains(key)) {
      throw DomainError("scenario '" + std::string(name) +
                        "' has no parameter '" + key + "'");
    }
    merged[key] = value;
  }

  if (name == "kahneman") {
    return kahneman_gamble(merged["p"], merged["xbar"],
                           as_flag(merged["loss"], "loss") ? Domain::Loss : Domain::Gain);
  }
  if (name == "blackjack-16v10") return blackjack_16v10(merged["p0"], merged["p2"]);
  if (name == "blackjack-insurance") {
    return blackjack_insurance(merged["p2"],
                               as_flag(merged["player_blackjack"], "player_blackjack"));
  }
  if (name == "ellsberg") return ellsberg_two_urns(as_integer(merged["n"], "n"));
  if (name == "allais-1") return allais_problem(1);
  if (name == "allais-2") return allais_problem(2, as_flag(merged["grouped"], "grouped"));
  if (name == "birnbaum-1") return birnbaum_problem(1);
  return birnbaum_problem(2);
}

}  // namespace scenarios
}  // namespace surprise
