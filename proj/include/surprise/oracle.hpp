#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "surprise/decision_tree.hpp"
#include "surprise/surprise_spec.hpp"

namespace surprise::oracle {

/// Surprise value by brute force: enumerate every trajectory, recompute each
/// node's expectation from scratch, and count each edge once through a
/// visited set. Shares nothing with annotate() or surprise_tree().
double oracle_tree_value(const DecisionTree& tree, const SurpriseSpec& spec);

struct ConvexityVerdict {
  bool convex = true;
  double worst_second_difference = 0.0;
  double witness_left = 0.0;  // worst triple (left, middle, right)
  double witness_middle = 0.0;
  double witness_right = 0.0;
};

/// Second differences on `samples` evenly spaced points of [lo, hi]; convex
/// when none is below -1e-9. Throws std::invalid_argument if samples < 3.
ConvexityVerdict convexity_probe(const std::function<double(double)>& f,
                                 double lo, double hi, std::size_t samples);

enum class GridKind { Coarse, Fine };

struct CheckResult {
  bool passed = true;
  bool informational = false;  // reported, never fails the suite
  double worst_violation = 0.0;
  std::map<std::string, double> witness;  // populated whenever passed == false
  std::string grid;
  std::vector<std::string> notes;
};

struct VerificationReport {
  std::map<std::string, CheckResult> checks;

  bool passed() const;
};

/// Coarse: k in {1, 1.5, 2, 3, 5} x r in {1.1, 1.5, 2, 3, 4}.
/// Fine: 0.1 steps over k in [1, 5] x r in (1, 4].
VerificationReport verify_appendices(GridKind grid);

std::string format_report(const VerificationReport& report);

}  // namespace surprise::oracle
