#include "surprise/lottery.hpp"

#include <cmath>
#include <string>

#include "surprise/errors.hpp"

namespace surprise {

namespace {
constexpr double kNormalizationTolerance = 1e-9;
}

Lottery::Lottery(std::vector<LotteryEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) {
    throw ValidationError("lottery needs at least one entry");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < entries_.size(); ++i) {
    const auto& e = entries_[i];
    if (!std::isfinite(e.outcome)) {
      throw ValidationError("lottery entry " + std::to_string(i) +
                            ": outcome is not finite");
    }
    if (!std::isfinite(e.probability) || e.probability < 0.0 ||
        e.probability > 1.0) {
      throw ValidationError("lottery entry " + std::to_string(i) +
                            ": probability outside [0, 1]");
    }
    total += e.probability;
  }
  if (std::abs(total - 1.0) > kNormalizationTolerance) {
    throw ValidationError("lottery probabilities sum to " +
                          std::to_string(total) + ", expected 1");
  }
}

double expected_value(const Lottery& lottery) {
  double mean = 0.0;
  for (const auto& e : lottery.entries()) {
    mean += e.probability * e.outcome;
  }
  return mean;
}

double surprise_flat(const Lottery& lottery, const SurpriseSpec& spec) {
  const double mean = expected_value(lottery);
  double total = 0.0;
  for (const auto& e : lottery.entries()) {
    total += e.probability * spec.delta(e.outcome - mean);
  }
  return total;
}

}  // namespace surprise
