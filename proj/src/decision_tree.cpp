#include "surprise/decision_tree.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "surprise/errors.hpp"

namespace surprise {

namespace {

constexpr double kNormalizationTolerance = 1e-9;

AnnotatedTree annotate_node(const DecisionTree& node, double transition,
                            double path) {
  AnnotatedTree out;
  out.transition_probability = transition;
  out.path_probability = path;
  if (node.is_leaf()) {
    out.expectation = node.outcome();
    return out;
  }
  out.children.reserve(node.children().size());
  double mean = 0.0;
  for (const auto& edge : node.children()) {
    out.children.push_back(
        annotate_node(edge.target, edge.probability, path * edge.probability));
    mean += edge.probability * out.children.back().expectation;
  }
  out.expectation = mean;
  return out;
}

double edge_sum(const AnnotatedTree& node, const SurpriseSpec& spec) {
  double total = 0.0;
  for (const auto& child : node.children) {
    total += child.path_probability *
             spec.delta(child.expectation - node.expectation);
    total += edge_sum(child, spec);
  }
  return total;
}

void collect(const DecisionTree& node, const AnnotatedTree& annotated,
             Trajectory& current, std::vector<Trajectory>& out) {
  current.expectations.push_back(annotated.expectation);
  if (node.is_leaf()) {
    current.outcome = node.outcome();
    out.push_back(current);
  } else {
    for (std::size_t i = 0; i < node.children().size(); ++i) {
      const double p = node.children()[i].probability;
      const double saved = current.probability;
      current.branch_path.push_back(i);
      current.step_probabilities.push_back(p);
      current.probability = saved * p;
      collect(node.children()[i].target, annotated.children[i], current, out);
      current.probability = saved;
      current.step_probabilities.pop_back();
      current.branch_path.pop_back();
    }
  }
  current.expectations.pop_back();
}

}  // namespace

DecisionTree DecisionTree::leaf(double outcome) {
  if (!std::isfinite(outcome)) {
    throw ValidationError("leaf outcome must be finite");
  }
  DecisionTree t;
  t.outcome_ = outcome;
  return t;
}

DecisionTree DecisionTree::branch(std::vector<Transition> children) {
  if (children.empty()) {
    throw ValidationError("branch needs at least one child");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < children.size(); ++i) {
    const double p = children[i].probability;
    if (!std::isfinite(p) || p < 0.0 || p > 1.0) {
      throw ValidationError("branch child " + std::to_string(i) +
                            ": probability outside [0, 1]");
    }
    total += p;
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw ValidationError("branch probabilities sum to " +
                          std::to_string(total) + ", expected 1");
  }
  std::erase_if(children, [](const Transition& t) { return t.probability == 0.0; });
  DecisionTree t;
  t.children_ = std::move(children);
  return t;
}

DecisionTree DecisionTree::from_lottery(const Lottery& lottery) {
  std::vector<Transition> children;
  children.reserve(lottery.size());
  for (const auto& e : lottery.entries()) {
    children.push_back({e.probability, leaf(e.outcome)});
  }
  return branch(std::move(children));
}

std::size_t DecisionTree::depth() const {
  std::size_t deepest = 0;
  for (const auto& c : children_) {
    deepest = std::max(deepest, c.target.depth());
  }
  return is_leaf() ? 0 : deepest + 1;
}

std::size_t DecisionTree::leaf_count() const {
  if (is_leaf()) return 1;
  std::size_t n = 0;
  for (const auto& c : children_) n += c.target.leaf_count();
  return n;
}

bool operator==(const DecisionTree& a, const DecisionTree& b) {
  if (a.is_leaf() != b.is_leaf()) return false;
  if (a.is_leaf()) return a.outcome_ == b.outcome_;
  return a.children_ == b.children_;
}

AnnotatedTree annotate(const DecisionTree& tree) {
  return annotate_node(tree, 1.0, 1.0);
}

double surprise_tree(const DecisionTree& tree, const SurpriseSpec& spec) {
  return edge_sum(annotate(tree), spec);
}

std::vector<Trajectory> enumerate_trajectories(const DecisionTree& tree) {
  const AnnotatedTree annotated = annotate(tree);
  std::vector<Trajectory> out;
  Trajectory current;
  collect(tree, annotated, current, out);
  return out;
}

double with_status_quo(const DecisionTree& tree, const SurpriseSpec& spec,
                       double status_quo) {
  const double root = annotate(tree).expectation;
  return spec.delta(root - status_quo) + surprise_tree(tree, spec);
}

}  // namespace surprise
