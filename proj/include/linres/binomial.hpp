#pragma once

#include <vector>

#include "linres/errors.hpp"

namespace linres {

// C(n, k) for 0 <= n <= 64 via a cached Pascal triangle; every value in this
// range fits in 64 bits. Out-of-range k gives 0.
inline unsigned long long binomial(int n, int k) {
  if (n < 0 || n > 64) fail(errc::invalid_input, "binomial needs 0 <= n <= 64");
  if (k < 0 || k > n) return 0;
  static const auto table = [] {
    std::vector<std::vector<unsigned long long>> t(65);
    for (int i = 0; i <= 64; ++i) {
      t[i].assign(static_cast<std::size_t>(i) + 1, 1);
      for (int j = 1; j < i; ++j) t[i][j] = t[i - 1][j - 1] + t[i - 1][j];
    }
    return t;
  }();
  return table[static_cast<std::size_t>(n)][static_cast<std::size_t>(k)];
}

}  // namespace linres
