#pragma once

#include <span>
#include <vector>

#include "surprise/surprise_spec.hpp"

namespace surprise {

struct LotteryEntry {
  double outcome;
  double probability;

  friend bool operator==(const LotteryEntry&, const LotteryEntry&) = default;
};

/// A flat probability-weighted set of monetary outcomes.
///
/// Probabilities must be non-negative and sum to 1 within 1e-9; at least one
/// entry. Throws ValidationError otherwise.
class Lottery {
 public:
  explicit Lottery(std::vector<LotteryEntry> entries);

  std::span<const LotteryEntry> entries() const { return entries_; }
  std::size_t size() const { return entries_.size(); }

 private:
  std::vector<LotteryEntry> entries_;
};

double expected_value(const Lottery& lottery);

/// Sum over outcomes of p * delta(x - E(x)).
double surprise_flat(const Lottery& lottery, const SurpriseSpec& spec);

}  // namespace surprise
