#include "mahler/growth.hpp"

#include <stdexcept>

#include "mahler/numeration.hpp"

namespace mahler {

GrowthReport growth_analysis(std::int64_t N, int k_max) {
  if (N < 1) throw std::invalid_argument("growth_analysis: N must be at least 1");
  if (k_max < 0) throw std::invalid_argument("growth_analysis: negative k_max");
  GrowthReport r;
  r.f.reserve(static_cast<std::size_t>(N + 1));
  r.f.push_back(1);
  for (std::int64_t n = 1; n <= N; ++n) {
    BigInt next = r.f.back();
    if (phi_preimage(n, 1)) next += r.f[static_cast<std::size_t>(lambda(n))];
    r.f.push_back(std::move(next));
  }

  std::vector<BigInt> prefix(r.f.size());
  BigInt run = 0;
  for (std::size_t n = 0; n < r.f.size(); ++n) {
    run += r.f[n];
    prefix[n] = run;
  }
  r.forms_agree = true;
  for (std::int64_t n = 1; n <= N; ++n) {
    if (prefix[static_cast<std::size_t>(lambda(n))] != r.f[static_cast<std::size_t>(n)]) {
      r.forms_agree = false;
      break;
    }
  }

  r.thresholds.assign(static_cast<std::size_t>(k_max + 1), std::nullopt);
  r.thresholds[0] = 0;
  for (int k = 1; k <= k_max; ++k) {
    for (std::int64_t n = 1; n <= N; ++n) {
      BigInt bound = boost::multiprecision::pow(BigInt(n), static_cast<unsigned>(k));
      if (r.f[static_cast<std::size_t>(n)] > bound) {
        r.thresholds[static_cast<std::size_t>(k)] = n;
        break;
      }
    }
  }
  return r;
}

}  // namespace mahler
