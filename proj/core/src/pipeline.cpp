#include "hdq/pipeline.hpp"

#include <limits>
#include <string>

#include "hdq/error.hpp"
#include "hdq/lift.hpp"
#include "hdq/torus2.hpp"
#include "hdq/torus3.hpp"

namespace hdq {

FactorPlan plan(int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  FactorPlan p;
  int rest = n;
  while (rest % 2 == 0) {
    p.factors.push_back(2);
    rest /= 2;
  }
  while (rest % 3 == 0) {
    p.factors.push_back(3);
    rest /= 3;
  }
  if (rest != 1) {
    throw UnsupportedOrder("unsupported n = " + std::to_string(n) +
                           ": only n = 2^a 3^b has a known source cycle construction");
  }
  return p;
}

std::uint64_t expanded_steps(int n) noexcept {
  if (n < 1) return 0;
  if (2 * n >= 64) return std::numeric_limits<std::uint64_t>::max();
  const auto cycle = std::uint64_t{1} << (2 * n);
  const auto count = static_cast<std::uint64_t>(n);
  if (cycle > std::numeric_limits<std::uint64_t>::max() / count) {
    return std::numeric_limits<std::uint64_t>::max();
  }
  return cycle * count;
}

SourcePair base_pair() {
  CycleCode e{GraphKind::hypercube(1), std::vector<EdgeStep>(4, EdgeStep::forward(1))};
  return {std::move(e), SourceMatrix::unit()};
}

SourcePair build(int n, std::uint64_t step_budget) {
  const auto p = plan(n);
  if (expanded_steps(n) > step_budget) {
    throw BudgetExceeded("Q_" + std::to_string(2 * n) + " needs " + std::to_string(n) + " x 4^" +
                         std::to_string(n) + " steps, over the budget of " +
                         std::to_string(step_budget));
  }
  auto pair = base_pair();
  int size = 1;
  for (int f : p.factors) {
    if (f == 2) {
      pair = lift2_latin(pair, hd_torus2(size));
    } else {
      pair = lift3_latin(pair, source_pair_torus3(size));
    }
    size *= f;
  }
  return pair;
}

}  // namespace hdq
