#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "surprise/decision_tree.hpp"
#include "surprise/lottery.hpp"

namespace surprise {

enum class Domain { Gain, Loss };

struct LabeledOption {
  std::string label;
  DecisionTree tree;
};

/// A named, parameterized decision problem: two or more labeled option trees
/// plus the parameters they were built from and where the problem comes from.
class Scenario {
 public:
  Scenario(std::string name, std::map<std::string, double> params,
           std::vector<LabeledOption> options, std::string provenance);

  const std::string& name() const { return name_; }
  const std::map<std::string, double>& params() const { return params_; }
  const std::vector<LabeledOption>& options() const { return options_; }
  const std::string& provenance() const { return provenance_; }

  /// Throws std::out_of_range for an unknown label.
  const DecisionTree& option(std::string_view label) const;
  bool has_option(std::string_view label) const;

 private:
  std::string name_;
  std::map<std::string, double> params_;
  std::vector<LabeledOption> options_;
  std::string provenance_;
};

namespace scenarios {

/// Certain xbar against the gamble {(xbar/p, p), (0, 1 - p)}; the loss
/// domain negates every outcome. Options "certain" and "gamble".
Scenario kahneman_gamble(double p, double xbar = 1.0,
                         Domain domain = Domain::Gain);

/// Player 16 against a dealer 10 with unit bet. p0: dealer busts,
/// p2: player wins after drawing without busting. Options "stand" and "hit".
Scenario blackjack_16v10(double p0 = 0.23, double p2 = 0.598);

/// Insurance side bet with the dealer showing an ace; the dealer-blackjack
/// probability is fixed at 1/3. Options "bet" and "no_bet".
Scenario blackjack_insurance(double p2 = 0.5, bool player_has_blackjack = false);

/// p(m) = 1 / (2n + 1) over m = 0, 1/2n, ..., 1.
std::vector<double> uniform_urn_prior(int n);

/// Known 50/50 urn ("option1") against an urn of unknown composition
/// ("option2") envisioned through intermediate compositions m with prior p(m).
/// An empty prior means uniform.
Scenario ellsberg_two_urns(int n = 50, std::vector<double> prior = {});

/// Allais common-consequence problems. `grouping` only affects option 2 of
/// problem 2, which then bundles the improbable outcomes 0 and 5.
Scenario allais_problem(int problem, bool grouping = true);

/// Birnbaum's same-outcome event-splitting pair.
Scenario birnbaum_problem(int problem);

/// Moves every entry with probability <= threshold into one sub-branch with
/// conditional probabilities; the rest stay at the root in their original
/// order, the group last. Returns the flat tree when nothing would be gained
/// (no entry above the threshold, or fewer than two grouped entries). A group
/// whose outcomes are all equal becomes a single leaf.
DecisionTree group_improbable(const Lottery& lottery, double threshold = 0.1);

struct ScenarioInfo {
  std::string name;
  std::string summary;
  std::map<std::string, double> defaults;
};

/// Every scenario reachable by name, in a stable order.
const std::vector<ScenarioInfo>& catalog();

/// Builds a catalog scenario, overriding defaults with `params`. Throws
/// DomainError for an unknown name or parameter key.
Scenario make_scenario(std::string_view name,
                       const std::map<std::string, double>& params = {});

}  // namespace scenarios
}  // namespace surprise
