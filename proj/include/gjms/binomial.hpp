#pragma once

#include <vector>

#include "gjms/rational.hpp"

namespace gjms {

/// Binomial coefficient via the Pascal recurrence in arbitrary precision.
/// Returns 0 whenever k < 0, n < 0, or k > n (the convention used by the
/// harmonic multiplicity formula). Pure function, no shared state.
inline Integer binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) return Integer(0);
  std::vector<Integer> row(static_cast<size_t>(n) + 1);
  row[0] = 1;
  for (int i = 1; i <= n; ++i) {
    for (int j = i; j >= 1; --j) row[static_cast<size_t>(j)] += row[static_cast<size_t>(j) - 1];
  }
  return row[static_cast<size_t>(k)];
}

}  // namespace gjms
