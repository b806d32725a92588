#include "hdq/lift.hpp"

#include <string>

#include "hdq/error.hpp"

namespace hdq {

namespace {

// Length and closure only; full Hamiltonicity is the verifier's job.
void check_closed(const CycleCode& c, const char* what) {
  const Lattice lattice(c.kind);
  if (c.steps.size() != c.kind.cycle_length()) {
    throw InvalidArgument(std::string(what) + " has " + std::to_string(c.steps.size()) +
                          " steps, a Hamilton cycle of " + c.kind.to_string() + " has " +
                          std::to_string(c.kind.cycle_length()));
  }
  for (const auto& s : c.steps) lattice.check_step(s);
  if (endpoint(lattice, c.steps) != 0) {
    throw InvalidArgument(std::string(what) + " does not close at the origin");
  }
}

void check_lift_inputs(const CycleCode& e, const CycleCode& h) {
  if (e.kind.family() != Family::Hypercube) throw InvalidArgument("seating cycle must be in a hypercube");
  if (h.kind.family() != Family::Torus) throw InvalidArgument("lifted cycle must be in a torus");
  if (h.kind.n() != e.kind.n()) {
    throw InvalidArgument("torus " + h.kind.to_string() + " does not match " + e.kind.to_string());
  }
  check_closed(e, "seating cycle");
  check_closed(h, "torus cycle");
}

SourcePair lift_latin(const SourcePair& e, const SourcePair& h, int k) {
  const auto pattern = k == 2 ? BlockPattern::Swap2 : BlockPattern::Circulant3;
  const auto expected = compose_block_matrix(SourceMatrix::unit(), pattern);
  if (!(h.matrix == expected)) {
    throw InvalidArgument("torus source matrix must be the standard " + std::to_string(k) + "x" +
                          std::to_string(k) + " Latin square");
  }
  if (e.matrix.size() != e.cycle.kind.axes()) {
    throw InvalidArgument("seating source matrix does not match its cycle");
  }
  return {lift(e.cycle, h.cycle), compose_block_matrix(e.matrix, pattern)};
}

}  // namespace

Seating::Seating(const CycleCode& e) {
  if (e.kind.family() != Family::Hypercube) throw InvalidArgument("seating cycle must be in a hypercube");
  check_closed(e, "seating cycle");
  const Lattice lattice(e.kind);
  const auto count = e.kind.vertex_count();
  order_.reserve(count);
  index_.assign(count, count);
  VertexId v = 0;
  for (const auto& s : e.steps) {
    if (index_[v] != count) throw InvalidArgument("seating cycle revisits a vertex");
    index_[v] = order_.size();
    order_.push_back(v);
    v = lattice.step(v, s);
  }
}

CycleCode lift(const CycleCode& e, const CycleCode& h) {
  check_lift_inputs(e, h);
  const int n = e.kind.n();
  const int k = h.kind.axes();
  const auto len = e.steps.size();

  CycleCode out{GraphKind::hypercube(n * k), {}};
  out.steps.reserve(h.steps.size());
  std::vector<std::size_t> pointer(static_cast<std::size_t>(k), 0);
  for (const auto& s : h.steps) {
    const auto axis = static_cast<std::size_t>(s.dimension - 1);
    const auto shift = static_cast<int>(axis) * n;
    auto& p = pointer[axis];
    if (s.direction == Direction::Forward) {
      const auto& edge = e.steps[p];
      out.steps.push_back({static_cast<std::uint16_t>(edge.dimension + shift), edge.direction});
      p = p + 1 == len ? 0 : p + 1;
    } else {
      p = p == 0 ? len - 1 : p - 1;
      const auto edge = e.steps[p].reversed();
      out.steps.push_back({static_cast<std::uint16_t>(edge.dimension + shift), edge.direction});
    }
  }
  for (auto p : pointer) {
    if (p != 0) throw ConstructionError("lift pointers did not return to the origin");
  }
  return out;
}

CycleCode lift2(const CycleCode& e, const CycleCode& h) {
  if (h.kind.axes() != 2) throw InvalidArgument("lift2 needs a cycle of G_{n,2}");
  return lift(e, h);
}

CycleCode lift3(const CycleCode& e, const CycleCode& h) {
  if (h.kind.axes() != 3) throw InvalidArgument("lift3 needs a cycle of G_{n,3}");
  return lift(e, h);
}

std::vector<CycleCode> lift_family(const std::vector<CycleCode>& es,
                                   const std::vector<CycleCode>& hs) {
  std::vector<CycleCode> out;
  out.reserve(es.size() * hs.size());
  for (const auto& h : hs) {
    for (const auto& e : es) out.push_back(lift(e, h));
  }
  return out;
}

SourcePair lift2_latin(const SourcePair& e, const SourcePair& h) {
  if (h.cycle.kind.axes() != 2) throw InvalidArgument("lift2_latin needs a G_{n,2} source pair");
  return lift_latin(e, h, 2);
}

SourcePair lift3_latin(const SourcePair& e, const SourcePair& h) {
  if (h.cycle.kind.axes() != 3) throw InvalidArgument("lift3_latin needs a G_{n,3} source pair");
  return lift_latin(e, h, 3);
}

}  // namespace hdq
