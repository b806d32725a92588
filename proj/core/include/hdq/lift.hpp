#pragma once

#include <vector>

#include "hdq/types.hpp"

namespace hdq {

/// The order a Hamilton cycle E of Q_{2n} induces on Q_{2n}'s vertices:
/// the origin is 0, the i-th vertex along E is i.
class Seating {
 public:
  /// Throws InvalidArgument unless `e` is a Hamilton cycle of a hypercube.
  explicit Seating(const CycleCode& e);

  std::uint64_t size() const noexcept { return order_.size(); }
  VertexId vertex_at(std::uint64_t index) const { return order_.at(index); }
  std::uint64_t index_of(VertexId v) const { return index_.at(v); }

 private:
  std::vector<VertexId> order_;
  std::vector<std::uint64_t> index_;
};

/// The Hamilton cycle of Q_{2nk} that traces `h` (a cycle of G_{n,k}) on the
/// grid seated via `e` (a Hamilton cycle of Q_{2n}).  Axis a of the grid maps
/// to hypercube dimensions a*n+1 .. (a+1)*n.
///
/// One pointer per axis tracks h's position.  A forward grid step at position
/// p emits edge p of e (0-based) shifted into the axis's dimension block and
/// advances the pointer; a backward step first retreats the pointer and then
/// emits the reversed edge at the new position.
CycleCode lift(const CycleCode& e, const CycleCode& h);

/// `lift` restricted to k = 2: Q_{2n} x G_{n,2} -> Q_{4n}.
CycleCode lift2(const CycleCode& e, const CycleCode& h);
/// `lift` restricted to k = 3: Q_{2n} x G_{n,3} -> Q_{6n}.
CycleCode lift3(const CycleCode& e, const CycleCode& h);

/// All lifts of a decomposition pair, ordered so that entry j + i*|es| is
/// lift(es[j], hs[i]).
std::vector<CycleCode> lift_family(const std::vector<CycleCode>& es,
                                   const std::vector<CycleCode>& hs);

/// Source pair for Q_{4n} from source pairs of Q_{2n} and G_{n,2}.
SourcePair lift2_latin(const SourcePair& e, const SourcePair& h);
/// Source pair for Q_{6n} from source pairs of Q_{2n} and G_{n,3}.
SourcePair lift3_latin(const SourcePair& e, const SourcePair& h);

}  // namespace hdq
