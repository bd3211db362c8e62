#pragma once

#include <cmath>
#include <string>

#include "surprise/errors.hpp"

namespace surprise {

struct BisectionTolerance {
  double interval = 1e-9;  // stop once hi - lo is below this ...
  double residual = 1e-10;  // ... and |f(mid)| is below this
};

/// Root of a continuous f on [lo, hi] with f(lo), f(hi) of opposite sign.
///
/// Runs until both tolerances hold or the bracket collapses to adjacent
/// doubles. Throws NoRootError when the endpoints do not bracket a root.
template <typename Function>
double bisect(Function&& f, double lo, double hi,
              BisectionTolerance tol = {}) {
  double f_lo = f(lo);
  const double f_hi = f(hi);
  if (f_lo == 0.0) return lo;
  if (f_hi == 0.0) return hi;
  if (std::signbit(f_lo) == std::signbit(f_hi) || std::isnan(f_lo) ||
      std::isnan(f_hi)) {
    throw NoRootError("no sign change on [" + std::to_string(lo) + ", " +
                      std::to_string(hi) + "]");
  }
  for (;;) {
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) return mid;
    const double f_mid = f(mid);
    if (f_mid == 0.0) return mid;
    if (hi - lo < tol.interval && std::abs(f_mid) < tol.residual) return mid;
    if (std::signbit(f_mid) == std::signbit(f_lo)) {
      lo = mid;
      f_lo = f_mid;
    } else {
      hi = mid;
    }
  }
}

}  // namespace surprise
