#include "surprise/closed_forms.hpp"

#include <stdexcept>

namespace surprise::oracle::closed_form {

namespace {
constexpr double kDealerBlackjack = 1.0 / 3.0;
}

double gamble_gain(double p, const SurpriseSpec& spec) {
  const double k = spec.loss_multiplier();
  return p * spec.gain(1.0 / p - 1.0) - (1.0 - p) * k * spec.gain(1.0);
}

double gamble_loss(double p, const SurpriseSpec& spec) {
  const double k = spec.loss_multiplier();
  return -p * k * spec.gain(1.0 / p - 1.0) + (1.0 - p) * spec.gain(1.0);
}

double blackjack_stand(double p0, const SurpriseSpec& spec) {
  const double k = spec.loss_multiplier();
  return p0 * spec.gain(2.0 * (1.0 - p0)) - (1.0 - p0) * k * spec.gain(2.0 * p0);
}

double blackjack_hit(double p0, double p2, const SurpriseSpec& spec) {
  const double k = spec.loss_multiplier();
  const auto f = [&](double z) { return spec.gain(z); };
  const double survive = p0 / p2;
  return -(1.0 - survive) * k * f(2.0 * p0) +
         survive * (f(2.0 * (p2 - p0)) + p2 * f(2.0 * (1.0 - p2)) -
                    (1.0 - p2) * k * f(2.0 * p2));
}

double insurance_bet(double p2, const SurpriseSpec& spec) {
  const double k = spec.loss_multiplier();
  const auto f = [&](double z) { return spec.gain(z); };
  const double p1 = kDealerBlackjack;
  const double e0 = 4.0 / 3.0 * p2 - 1.0;
  const double resolve =
      p2 * f(0.5 - 1.5 * e0) - (1.0 - p2) * k * f(1.5 + 1.5 * e0);
  if (e0 < 0.0) {
    return p1 * f(-e0) + (1.0 - p1) * (-k * f(-e0 / 2.0) + resolve);
  }
  return -p1 * k * f(e0) + (1.0 - p1) * (f(e0 / 2.0) + resolve);
}

double insurance_no_bet(double p2, const SurpriseSpec& spec) {
  const double k = spec.loss_multiplier();
  const auto f = [&](double z) { return spec.gain(z); };
  const double p1 = kDealerBlackjack;
  const double e0 = 4.0 / 3.0 * p2 - 1.0;
  return -p1 * k * f(1.0 + e0) +
         (1.0 - p1) * (f(0.5 + e0 / 2.0) + p2 * f(0.5 - 1.5 * e0) -
                       (1.0 - p2) * k * f(1.5 + 1.5 * e0));
}

double ellsberg_known(const SurpriseSpec& spec) {
  return 0.5 * spec.delta(0.5) + 0.5 * spec.delta(-0.5);
}

double ellsberg_ambiguous(int n, const std::vector<double>& prior,
                          const SurpriseSpec& spec) {
  double total = 0.0;
  for (int j = 0; j <= 2 * n; ++j) {
    const double m = j / (2.0 * n);
    total += prior.at(static_cast<std::size_t>(j)) *
             (spec.delta(m - 0.5) + m * spec.delta(1.0 - m) +
              (1.0 - m) * spec.delta(-m));
  }
  return total;
}

double ellsberg_difference(int n, const std::vector<double>& prior,
                           const SurpriseSpec& spec) {
  const auto f = [&](double z) { return spec.gain(z); };
  double total = 0.0;
  for (int j = 0; j < n; ++j) {
    const double m = j / (2.0 * n);
    total += prior.at(static_cast<std::size_t>(j)) *
             (f(0.5 - m) + m * f(1.0 - m) + (1.0 - m) * f(m) - f(0.5));
  }
  return (spec.loss_multiplier() - 1.0) * total;
}

double allais_grouped(const SurpriseSpec& spec) {
  const double k = spec.loss_multiplier();
  const auto f = [&](double z) { return spec.gain(z); };
  const double e0 = 0.89 * 1.0 + 0.1 * 5.0;
  const double e1 = (0.1 / 0.11) * 5.0;
  return -0.89 * k * f(e0 - 1.0) + 0.1 * (f(e1 - e0) + f(5.0 - e1)) +
         0.01 * (f(e1 - e0) - k * f(e1));
}

double allais_ungrouped(const SurpriseSpec& spec) {
  const double k = spec.loss_multiplier();
  const auto f = [&](double z) { return spec.gain(z); };
  const double e0 = 0.89 * 1.0 + 0.1 * 5.0;
  return -0.89 * k * f(e0 - 1.0) + 0.1 * f(5.0 - e0) - 0.01 * k * f(e0);
}

double birnbaum_grouped(const SurpriseSpec& spec) {
  const double k = spec.loss_multiplier();
  const auto f = [&](double z) { return spec.gain(z); };
  const double e0 = 0.95 * 100.0 + 0.05 * 7.0;
  const double e1 = 0.1 / 0.15 * 100.0 + 0.05 / 0.15 * 7.0;
  return 0.85 * f(100.0 - e0) - 0.15 * k * f(e0 - e1) + 0.1 * f(100.0 - e1) -
         0.05 * k * f(e1 - 7.0);
}

double birnbaum_ungrouped(const SurpriseSpec& spec) {
  const double k = spec.loss_multiplier();
  const auto f = [&](double z) { return spec.gain(z); };
  const double e0 = 0.95 * 100.0 + 0.05 * 7.0;
  return 0.95 * f(100.0 - e0) - 0.05 * k * f(e0 - 7.0);
}

double two_step(const DecisionTree& tree, const SurpriseSpec& spec) {
  if (tree.is_leaf()) {
    throw std::invalid_argument("two-step formula needs a branch at the root");
  }
  // Root children that are leaves count as sub-branches with one certain outcome.
  struct SubBranch {
    double p;
    std::vector<std::pair<double, double>> outcomes;  // (p_ij, x_ij)
    double mean = 0.0;
  };
  std::vector<SubBranch> subs;
  for (const auto& c : tree.children()) {
    SubBranch s{c.probability, {}};
    if (c.target.is_leaf()) {
      s.outcomes.emplace_back(1.0, c.target.outcome());
    } else {
      for (const auto& g : c.target.children()) {
        if (!g.target.is_leaf()) {
          throw std::invalid_argument("two-step formula needs depth <= 2");
        }
        s.outcomes.emplace_back(g.probability, g.target.outcome());
      }
    }
    for (const auto& [p, x] : s.outcomes) s.mean += p * x;
    subs.push_back(std::move(s));
  }
  double e0 = 0.0;
  for (const auto& s : subs) {
    for (const auto& [p, x] : s.outcomes) e0 += s.p * p * x;
  }
  double first = 0.0;
  double second = 0.0;
  for (const auto& s : subs) {
    first += s.p * spec.delta(s.mean - e0);
    double inner = 0.0;
    for (const auto& [p, x] : s.outcomes) inner += p * spec.delta(x - s.mean);
    second += s.p * inner;
  }
  return first + second;
}

}  // namespace surprise::oracle::closed_form
