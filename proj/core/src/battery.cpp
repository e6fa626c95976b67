#include "freeab/battery.hpp"

#include <algorithm>
#include <utility>

namespace freeab {

namespace {

using Chain = std::pair<std::size_t, std::vector<std::int64_t>>;  // (order, factors)

void extend(const std::vector<std::int64_t>& divisors, std::size_t max_order, Chain& current, std::vector<Chain>& out) {
  out.push_back(current);
  for (std::int64_t d : divisors) {
    const auto ud = static_cast<std::size_t>(d);
    if (!current.second.empty() && d % current.second.back() != 0) continue;
    if (current.first * ud > max_order) continue;
    current.first *= ud;
    current.second.push_back(d);
    extend(divisors, max_order, current, out);
    current.second.pop_back();
    current.first /= ud;
  }
}

}  // namespace

std::vector<FpModule<ModularRing>> finite_modules(const ModularRing& ring, Side side, std::size_t max_order) {
  const std::int64_t n = ring.modulus();
  std::vector<std::int64_t> divisors;
  for (std::int64_t d = 2; d <= n; ++d) {
    if (n % d == 0) divisors.push_back(d);
  }
  std::vector<Chain> chains;
  if (max_order >= 1) {
    Chain start{1, {}};
    extend(divisors, max_order, start, chains);
  }
  std::sort(chains.begin(), chains.end());
  std::vector<FpModule<ModularRing>> out;
  out.reserve(chains.size());
  for (const auto& [order, factors] : chains) {
    std::vector<std::int64_t> diag;
    for (std::int64_t d : factors) diag.push_back(ring.from_int(d));
    out.push_back(FpModule<ModularRing>::diagonal(ring, side, diag));
  }
  return out;
}

}  // namespace freeab
