#pragma once

#include <cstddef>
#include <vector>

#include "surprise/lottery.hpp"
#include "surprise/surprise_spec.hpp"

namespace surprise {

struct Transition;

/// A finite branching structure of probability-weighted transitions that
/// ends in monetary leaves.
///
/// Branch construction validates (>= 1 child, probabilities in [0, 1] summing
/// to 1 within 1e-9) and prunes zero-probability children. Values are
/// immutable after construction.
class DecisionTree {
 public:
  static DecisionTree leaf(double outcome);
  static DecisionTree branch(std::vector<Transition> children);
  /// The depth-1 tree with one leaf per lottery entry.
  static DecisionTree from_lottery(const Lottery& lottery);

  bool is_leaf() const { return children_.empty(); }
  /// Only meaningful for leaves.
  double outcome() const { return outcome_; }
  const std::vector<Transition>& children() const { return children_; }

  /// Number of transitions on the longest root-to-leaf path; 0 for a leaf.
  std::size_t depth() const;
  std::size_t leaf_count() const;

  friend bool operator==(const DecisionTree& a, const DecisionTree& b);

 private:
  DecisionTree() = default;

  double outcome_ = 0.0;
  std::vector<Transition> children_;
};

struct Transition {
  double probability;
  DecisionTree target;

  friend bool operator==(const Transition&, const Transition&) = default;
};

/// A tree node decorated with its conditional expected outcome and the
/// probability of reaching it from the root.
struct AnnotatedTree {
  double expectation = 0.0;
  double path_probability = 1.0;
  double transition_probability = 1.0;
  std::vector<AnnotatedTree> children;

  bool is_leaf() const { return children.empty(); }
};

/// One root-to-leaf path.
struct Trajectory {
  std::vector<std::size_t> branch_path;    // child index taken at each step
  std::vector<double> expectations;        // E at y(0) .. y(T)
  std::vector<double> step_probabilities;  // p(y(t) | y(t-1)), t = 1..T
  double probability = 1.0;
  double outcome = 0.0;
};

AnnotatedTree annotate(const DecisionTree& tree);

/// Sum over every parent-to-child edge of
/// path_probability(child) * delta(E_child - E_parent).
double surprise_tree(const DecisionTree& tree, const SurpriseSpec& spec);

/// Depth-first, children in construction order.
std::vector<Trajectory> enumerate_trajectories(const DecisionTree& tree);

/// Prepends a transition from the status quo to the root expectation:
/// delta(E_root - status_quo) + surprise_tree(tree).
double with_status_quo(const DecisionTree& tree, const SurpriseSpec& spec,
                       double status_quo = 0.0);

}  // namespace surprise
