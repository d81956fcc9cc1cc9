// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <cmath>
#include <limits>

namespace fogndt {

// Delivery times live on the extended non-negative reals: +inf marks an
// infeasible scheme (zero-rate link carrying a positive load).
inline constexpr double kInfiniteNdt = std::numeric_limits<double>::infinity();

inline bool is_finite_ndt(double x) { return std::isfinite(x); }

// Time to push `amount` normalized bits over a link of normalized rate `rate`.
// Zero load takes zero time even on a dead link, so the amount check comes
// first; positive load on a dead link never completes.
inline double ndt_div(double amount, double rate) {
  if (amount == 0.0) return 0.0;
  if (rate == 0.0) return kInfiniteNdt;
  return amount / rate;
}

// Convex combination w*a + (1-w)*b where a zero-weight term is dropped before
// it is evaluated. Time sharing never touches the unused constituent, so
// pairing weight 0 with an infeasible (+inf) arm must yield the other arm,
// not the IEEE 0*inf = NaN.
inline double time_share(double w, double a, double b) {
  double lhs = (w == 0.0) ? 0.0 : w * a;
  double rhs = (w == 1.0) ? 0.0 : (1.0 - w) * b;
  return lhs + rhs;
}

}  // namespace fogndt
