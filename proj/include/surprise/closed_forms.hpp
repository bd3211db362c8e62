#pragma once

#include <vector>

#include "surprise/decision_tree.hpp"
#include "surprise/surprise_spec.hpp"

// Standalone closed-form surprise values for the worked scenarios. Each is
// written out term by term from f and k and never touches the tree engine,
// so agreement with surprise_tree is a genuine cross-check.
namespace surprise::oracle::closed_form {

/// Certain-vs-gamble family at unit mean, gain side:
/// p f(1/p - 1) - (1 - p) k f(1).
double gamble_gain(double p, const SurpriseSpec& spec);

/// Loss side: -p k f(1/p - 1) + (1 - p) f(1).
double gamble_loss(double p, const SurpriseSpec& spec);

/// Blackjack 16 vs 10 at unit bet. Outcomes are +-1 so every deviation is
/// twice the one obtained with a half-unit bet.
double blackjack_stand(double p0, const SurpriseSpec& spec);
double blackjack_hit(double p0, double p2, const SurpriseSpec& spec);

/// Insurance with dealer-blackjack probability 1/3 and
/// E0 = 4/3 p2 - 1; picks the branch for the sign of E0.
double insurance_bet(double p2, const SurpriseSpec& spec);
double insurance_no_bet(double p2, const SurpriseSpec& spec);

/// Two-urn problem written with delta directly.
double ellsberg_known(const SurpriseSpec& spec);
double ellsberg_ambiguous(int n, const std::vector<double>& prior,
                          const SurpriseSpec& spec);

/// Known minus ambiguous, folded over symmetric pairs:
/// (k - 1) sum_{m < 1/2} p(m) [f(1/2 - m) + m f(1 - m) + (1 - m) f(m) - f(1/2)].
double ellsberg_difference(int n, const std::vector<double>& prior,
                           const SurpriseSpec& spec);

/// Allais problem 2, option 2, with and without the improbable group.
double allais_grouped(const SurpriseSpec& spec);
double allais_ungrouped(const SurpriseSpec& spec);

/// Birnbaum option 2 of problem 1 (grouped) and problem 2 (coalesced).
double birnbaum_grouped(const SurpriseSpec& spec);
double birnbaum_ungrouped(const SurpriseSpec& spec);

/// Literal two-level formula for a tree whose root children are all
/// branches of leaves:
/// sum_i p_i delta(E_i - E_0) + sum_i p_i sum_j p_ij delta(x_ij - E_i).
/// Throws std::invalid_argument for any other shape.
double two_step(const DecisionTree& tree, const SurpriseSpec& spec);

}  // namespace surprise::oracle::closed_form
