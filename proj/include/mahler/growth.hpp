#pragma once

#include <optional>
#include <vector>

#include "mahler/ring.hpp"

namespace mahler {

struct GrowthReport {
  // Coefficients f_0..f_N of the solution of (1 - x) f = Phi(f), f_0 = 1.
  std::vector<BigInt> f;
  // f_n = f_{n-1} + [n in phi(N)] f_{lambda(n)} agrees with f_n = sum_{i <= lambda(n)} f_i.
  bool forms_agree = false;
  // thresholds[k]: 0 for k = 0, otherwise the least n >= 1 with f_n > n^k.
  std::vector<std::optional<std::int64_t>> thresholds;
};

GrowthReport growth_analysis(std::int64_t N, int k_max);

}  // namespace mahler
