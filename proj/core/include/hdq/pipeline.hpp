#pragma once

#include <cstdint>
#include <vector>

#include "hdq/types.hpp"

namespace hdq {

/// Default cap on n * 4^n, the total steps of an expanded Q_{2n} decomposition.
inline constexpr std::uint64_t kDefaultStepBudget = std::uint64_t{1} << 28;

/// Factors 2 and 3 of n in application order: all 2s, then all 3s.
struct FactorPlan {
  std::vector<int> factors;

  friend bool operator==(const FactorPlan&, const FactorPlan&) = default;
};

/// Throws UnsupportedOrder unless n = 2^a 3^b.
FactorPlan plan(int n);

/// n * 4^n, saturating at UINT64_MAX.
std::uint64_t expanded_steps(int n) noexcept;

/// Source pair of Q_2: the 4-cycle 1111 with matrix [1].
SourcePair base_pair();

/// Source pair for Q_{2n}.  Starting from `base_pair`, each factor 2 lifts
/// through `hd_torus2` and each factor 3 through `source_pair_torus3` at the
/// current size.  Throws UnsupportedOrder or BudgetExceeded.
SourcePair build(int n, std::uint64_t step_budget = kDefaultStepBudget);

}  // namespace hdq
