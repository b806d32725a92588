#include "hdq/torus2.hpp"

#include "hdq/error.hpp"

namespace hdq {

SourcePair hd_torus2(int n) {
  if (n < 1) throw InvalidArgument("hd_torus2 needs n >= 1");
  const auto kind = GraphKind::torus(n, 2);
  const std::uint64_t side = kind.modulus();

  CycleCode h{kind, {}};
  h.steps.reserve(side * side);
  for (std::uint64_t row = 0; row < side; ++row) {
    for (std::uint64_t i = 0; i + 1 < side; ++i) h.steps.push_back(EdgeStep::forward(1));
    h.steps.push_back(EdgeStep::forward(2));
  }
  return {std::move(h), SourceMatrix({{1, 2}, {2, 1}})};
}

}  // namespace hdq
