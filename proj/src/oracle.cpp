#include "surprise/oracle.hpp"

#include <set>
#include <stdexcept>

namespace surprise::oracle {

namespace {

using Path = std::vector<std::size_t>;

double recursive_mean(const DecisionTree& node) {
  if (node.is_leaf()) return node.outcome();
  double mean = 0.0;
  for (const auto& c : node.children()) {
    mean += c.probability * recursive_mean(c.target);
  }
  return mean;
}

void leaf_paths(const DecisionTree& node, Path& prefix, std::vector<Path>& out) {
  if (node.is_leaf()) {
    out.push_back(prefix);
    return;
  }
  for (std::size_t i = 0; i < node.children().size(); ++i) {
    prefix.push_back(i);
    leaf_paths(node.children()[i].target, prefix, out);
    prefix.pop_back();
  }
}

}  // namespace

double oracle_tree_value(const DecisionTree& tree, const SurpriseSpec& spec) {
  std::vector<Path> paths;
  Path prefix;
  leaf_paths(tree, prefix, paths);

  std::set<Path> visited;
  double total = 0.0;
  for (const Path& path : paths) {
    const DecisionTree* parent = &tree;
    double reach = 1.0;
    Path edge;
    for (std::size_t index : path) {
      const Transition& step = parent->children()[index];
      reach *= step.probability;
      edge.push_back(index);
      if (visited.insert(edge).second) {
        total += reach * spec.delta(recursive_mean(step.target) -
                                    recursive_mean(*parent));
      }
      parent = &step.target;
    }
  }
  return total;
}

ConvexityVerdict convexity_probe(const std::function<double(double)>& f,
                                 double lo, double hi, std::size_t samples) {
  if (samples < 3) {
    throw std::invalid_argument("convexity probe needs at least 3 samples");
  }
  std::vector<double> x(samples);
  std::vector<double> y(samples);
  const double steps = static_cast<double>(samples - 1);
  for (std::size_t i = 0; i < samples; ++i) {
    x[i] = lo + (hi - lo) * (static_cast<double>(i) / steps);
    y[i] = f(x[i]);
  }
  ConvexityVerdict out;
  bool first = true;
  for (std::size_t i = 1; i + 1 < samples; ++i) {
    const double second = y[i - 1] - 2.0 * y[i] + y[i + 1];
    if (first || second < out.worst_second_difference) {
      first = false;
      out.worst_second_difference = second;
      out.witness_left = x[i - 1];
      out.witness_middle = x[i];
      out.witness_right = x[i + 1];
    }
  }
  out.convex = out.worst_second_difference >= -1e-9;
  return out;
}

}  // namespace surprise::oracle
