#include "hdq/torus3.hpp"

#include <algorithm>
#include <string>

#include "hdq/error.hpp"

namespace hdq {

namespace {

using enum EdgeClass;

// Class of each cube edge before and after a merge.  Offsets are (dx, dy, dz)
// of the edge's lower endpoint relative to the cube origin.
constexpr std::array<CubeEdge, 12> kCubeEdges{{
    {{0, 0, 0}, 2, X, Z},
    {{0, 1, 0}, 1, X, X},
    {{0, 1, 1}, 1, X, Z},
    {{0, 0, 1}, 1, X, Y},
    {{0, 0, 0}, 3, Y, X},
    {{0, 0, 1}, 2, Y, Y},
    {{1, 0, 0}, 2, Y, Z},
    {{1, 0, 1}, 2, Y, X},
    {{1, 0, 0}, 3, Z, Z},
    {{0, 0, 0}, 1, Z, Y},
    {{0, 1, 0}, 3, Z, X},
    {{1, 1, 0}, 3, Z, Y},
}};

struct Incident {
  std::array<EdgeStep, 6> steps;
  int count = 0;
};

std::uint64_t side_of(int n) { return std::uint64_t{1} << (2 * n); }

void check_n(int n) {
  if (n < 1) throw InvalidArgument("n must be >= 1");
  // 3 axes * 2n bits must fit in a packed label, and the label array must
  // stay addressable.
  if (n > 10) throw InvalidArgument("n too large for an explicit G_{n,3}");
}

}  // namespace

char to_char(EdgeClass c) noexcept {
  switch (c) {
    case X:
      return 'X';
    case Y:
      return 'Y';
    case Z:
      return 'Z';
  }
  return '?';
}

std::span<const CubeEdge, 12> cube_edge_table() noexcept { return kCubeEdges; }

MergingSet default_merging_set(int n) {
  check_n(n);
  const auto side = side_of(n);
  const auto half = side / 2;
  MergingSet s{n, {}};
  for (std::uint64_t i = 0; i < half; ++i) s.elements.push_back({i, i, side - 1 - 2 * i});
  for (std::uint64_t j = 0; j + 1 < half; ++j) {
    s.elements.push_back({half + j, half + 1 + j, side - 2 - 2 * j});
  }
  if (!is_merging_set(s)) throw ConstructionError("default merging set formula is invalid");
  return s;
}

MergingSet latin_merging_set(int n) {
  check_n(n);
  const auto side = static_cast<std::int64_t>(side_of(n));
  std::vector<Point3> core;
  // 4^n = 4 (mod 6), so every division below is exact.
  for (std::int64_t i = 0; i <= (side - 4) / 6; ++i) {
    core.push_back({static_cast<std::uint64_t>(i), static_cast<std::uint64_t>(side / 2 - 1 - 2 * i),
                    static_cast<std::uint64_t>(side / 2 + i)});
  }
  const std::int64_t x0 = (4 * side + 2) / 6;
  const std::int64_t y0 = (5 * side + 4) / 6;
  for (std::int64_t j = 0; j <= (side - 10) / 6 && side >= 10; ++j) {
    core.push_back({static_cast<std::uint64_t>(x0 + j), static_cast<std::uint64_t>(y0 + j),
                    static_cast<std::uint64_t>(side / 2 - 2 - 2 * j)});
  }

  MergingSet s{n, {}};
  for (const auto& p : core) {
    s.elements.push_back(p);
    s.elements.push_back({p.z, p.x, p.y});
    s.elements.push_back({p.y, p.z, p.x});
  }
  std::sort(s.elements.begin(), s.elements.end());
  if (!is_merging_set(s)) {
    throw ConstructionError("rotation-closed merging set formula is invalid for n = " +
                            std::to_string(n));
  }
  return s;
}

bool is_merging_set(const MergingSet& s) noexcept {
  if (s.n < 1 || s.n > 10) return false;
  const auto side = side_of(s.n);
  if (s.elements.size() != side - 1) return false;
  std::vector<char> xs(side, 0), ys(side, 0), zs(side, 0);
  for (const auto& p : s.elements) {
    if (p.x >= side || p.y >= side || p.z >= side) return false;
    if ((p.x + p.y + p.z) % side != side - 1) return false;
    if (xs[p.x] || ys[p.y] || zs[p.z]) return false;
    xs[p.x] = ys[p.y] = zs[p.z] = 1;
  }
  return true;
}

EdgePartition3::EdgePartition3(int n)
    : n_(n), lattice_(GraphKind::torus(n, 3)), labels_(lattice_.kind().vertex_count() * 3) {}

EdgePartition3 EdgePartition3::partition_initial(int n) {
  check_n(n);
  EdgePartition3 p(n);
  const auto side = p.side();
  const auto count = p.kind().vertex_count();
  for (VertexId v = 0; v < count; ++v) {
    const auto pt = p.point(v);
    const bool diagonal = (pt.x + pt.y + pt.z) % side == side - 1;
    auto* l = &p.labels_[v * 3];
    l[0] = static_cast<std::uint8_t>(diagonal ? Z : X);
    l[1] = static_cast<std::uint8_t>(diagonal ? X : Y);
    l[2] = static_cast<std::uint8_t>(diagonal ? Y : Z);
  }
  return p;
}

VertexId EdgePartition3::vertex(const Point3& p) const noexcept {
  const auto mask = side() - 1;
  VertexId v = 0;
  v = lattice_.with_digit(v, 0, p.x & mask);
  v = lattice_.with_digit(v, 1, p.y & mask);
  v = lattice_.with_digit(v, 2, p.z & mask);
  return v;
}

Point3 EdgePartition3::point(VertexId v) const noexcept {
  return {lattice_.digit(v, 0), lattice_.digit(v, 1), lattice_.digit(v, 2)};
}

namespace {

Incident incident_steps(const EdgePartition3& p, VertexId v, EdgeClass c) {
  Incident out;
  for (int d = 1; d <= 3; ++d) {
    if (p.class_of(v, d) == c) out.steps[static_cast<std::size_t>(out.count++)] = EdgeStep::forward(d);
  }
  for (int d = 1; d <= 3; ++d) {
    const auto b = EdgeStep::backward(d);
    if (p.class_of(p.lattice().step(v, b), d) == c) {
      out.steps[static_cast<std::size_t>(out.count++)] = b;
    }
  }
  return out;
}

// The class-c step at v other than the one that undoes `arrived`.
EdgeStep continue_step(const EdgePartition3& p, VertexId v, EdgeClass c, EdgeStep arrived) {
  const auto inc = incident_steps(p, v, c);
  const auto back = arrived.reversed();
  for (int i = 0; i < inc.count; ++i) {
    if (!(inc.steps[static_cast<std::size_t>(i)] == back)) return inc.steps[static_cast<std::size_t>(i)];
  }
  throw ConstructionError("class walk reached a dead end");
}

}  // namespace

std::vector<EdgeStep> EdgePartition3::incident(VertexId v, EdgeClass c) const {
  const auto inc = incident_steps(*this, v, c);
  return {inc.steps.begin(), inc.steps.begin() + inc.count};
}

EdgeStep EdgePartition3::successor_step(VertexId v, EdgeClass c) const {
  for (int d = 1; d <= 3; ++d) {
    if (class_of(v, d) == c) return EdgeStep::forward(d);
  }
  throw ConstructionError("vertex has no forward edge of the requested class");
}

bool EdgePartition3::is_type_one(const Point3& origin) const noexcept {
  for (const auto& e : kCubeEdges) {
    const auto v = vertex({origin.x + e.offset[0], origin.y + e.offset[1], origin.z + e.offset[2]});
    if (class_of(v, e.dimension) != e.type_one) return false;
  }
  return true;
}

bool EdgePartition3::is_type_two(const Point3& origin) const noexcept {
  for (const auto& e : kCubeEdges) {
    const auto v = vertex({origin.x + e.offset[0], origin.y + e.offset[1], origin.z + e.offset[2]});
    if (class_of(v, e.dimension) != e.type_two) return false;
  }
  return true;
}

void EdgePartition3::merge(const Point3& origin) {
  const auto s = side();
  if (origin.x >= s || origin.y >= s || origin.z >= s) {
    throw InvalidArgument("cube origin out of range");
  }
  if ((origin.x + origin.y + origin.z) % s != s - 1) {
    throw InvalidArgument("cube origin is not on the diagonal x+y+z = -1");
  }
  if (!is_type_one(origin)) throw InvalidArgument("cube is not in type-I configuration");
  for (const auto& e : kCubeEdges) {
    const auto v = vertex({origin.x + e.offset[0], origin.y + e.offset[1], origin.z + e.offset[2]});
    labels_[v * 3 + static_cast<std::size_t>(e.dimension - 1)] = static_cast<std::uint8_t>(e.type_two);
  }
}

bool EdgePartition3::degrees_valid() const {
  const auto count = kind().vertex_count();
  for (VertexId v = 0; v < count; ++v) {
    for (auto c : {X, Y, Z}) {
      if (incident_steps(*this, v, c).count != 2) return false;
    }
  }
  return true;
}

std::uint64_t EdgePartition3::component_count(EdgeClass c) const {
  const auto count = kind().vertex_count();
  std::vector<bool> seen(count, false);
  std::uint64_t components = 0;
  for (VertexId start = 0; start < count; ++start) {
    if (seen[start]) continue;
    ++components;
    seen[start] = true;
    const auto inc = incident_steps(*this, start, c);
    if (inc.count != 2) throw ConstructionError("class is not a 2-factor");
    EdgeStep step = inc.steps[0];
    VertexId v = lattice_.step(start, step);
    while (v != start) {
      seen[v] = true;
      step = continue_step(*this, v, c, step);
      v = lattice_.step(v, step);
    }
  }
  return components;
}

std::vector<VertexId> EdgePartition3::component_vertices(EdgeClass c, VertexId start) const {
  std::vector<VertexId> out{start};
  const auto inc = incident_steps(*this, start, c);
  if (inc.count != 2) throw ConstructionError("class is not a 2-factor");
  EdgeStep step = inc.steps[0];
  VertexId v = lattice_.step(start, step);
  while (v != start) {
    out.push_back(v);
    step = continue_step(*this, v, c, step);
    v = lattice_.step(v, step);
  }
  return out;
}

CycleCode EdgePartition3::trace(EdgeClass c) const {
  const int home = static_cast<int>(c) + 1;
  const auto inc = incident_steps(*this, 0, c);
  if (inc.count != 2) throw ConstructionError("class is not a 2-factor at the origin");
  const EdgeStep first = class_of(0, home) == c ? EdgeStep::forward(home) : inc.steps[0];

  const auto total = kind().vertex_count();
  CycleCode code{kind(), {}};
  code.steps.reserve(total);
  code.steps.push_back(first);
  VertexId v = lattice_.step(0, first);
  EdgeStep step = first;
  while (v != 0) {
    if (code.steps.size() >= total) break;
    step = continue_step(*this, v, c, step);
    code.steps.push_back(step);
    v = lattice_.step(v, step);
  }
  if (v != 0 || code.steps.size() != total) {
    throw ConstructionError(std::string("class ") + to_char(c) +
                            " is not a single Hamilton cycle (origin component has " +
                            std::to_string(code.steps.size()) + " of " + std::to_string(total) +
                            " vertices)");
  }
  return code;
}

EdgePartition3 merge_cube(EdgePartition3 p, const Point3& origin) {
  p.merge(origin);
  return p;
}

std::vector<Point3> merge_order(const MergingSet& s) {
  auto order = s.elements;
  std::sort(order.begin(), order.end(), [](const Point3& a, const Point3& b) { return a.x > b.x; });
  return order;
}

Torus3Decomposition hd_torus3_surgery(const MergingSet& s) {
  if (!is_merging_set(s)) throw InvalidArgument("not a merging set");
  auto p = EdgePartition3::partition_initial(s.n);
  for (const auto& origin : merge_order(s)) p.merge(origin);
  return {p.trace(X), p.trace(Y), p.trace(Z)};
}

CycleCode hd_torus3_walk(const MergingSet& s) {
  if (!is_merging_set(s)) throw InvalidArgument("not a merging set");
  const auto kind = GraphKind::torus(s.n, 3);
  const Lattice lattice(kind);
  const auto side = static_cast<std::int64_t>(kind.modulus());
  const auto wrap = [side](std::int64_t v) { return ((v % side) + side) % side; };

  // Helper rows indexed by x; a merging set has at most one element per x.
  // (y, z) = (-2, -2) marks "no special vertex with this x".
  struct Row {
    std::int64_t y = -2;
    std::int64_t z = -2;
    bool matches(std::int64_t yy, std::int64_t zz) const { return y == yy && z == zz; }
  };
  const auto rows = static_cast<std::size_t>(side);
  std::vector<Row> sv(rows), sp(rows), d(rows), dp(rows), m(rows), mp(rows);
  for (const auto& e : s.elements) {
    const auto x = static_cast<std::int64_t>(e.x);
    const auto y = static_cast<std::int64_t>(e.y);
    const auto z = static_cast<std::int64_t>(e.z);
    const auto xi = static_cast<std::size_t>(x);
    const auto xn = static_cast<std::size_t>(wrap(x + 1));
    sv[xi] = {y, z};
    sp[xi] = {y, wrap(z + 1)};
    d[xi] = {wrap(y + 1), z};
    dp[xi] = {wrap(y + 1), wrap(z + 1)};
    m[xn] = {y, wrap(z + 1)};
    mp[xn] = {wrap(y + 1), wrap(z + 1)};
  }

  const auto total = kind.vertex_count();
  std::vector<bool> seen(total, false);
  CycleCode code{kind, {}};
  code.steps.reserve(total);

  // Exit from (x, y, z) given the orientation the walk arrived with, and the
  // orientation it leaves with.
  const auto exit = [&](std::int64_t x, std::int64_t y, std::int64_t z,
                        bool backward) -> std::pair<EdgeStep, bool> {
    const auto xi = static_cast<std::size_t>(x);
    if (sv[xi].matches(y, z)) {
      // s: entered from outside going forward -> up to s'; from s' -> leave backward in 1.
      return {backward ? EdgeStep::backward(1) : EdgeStep::forward(3), true};
    }
    if (sp[xi].matches(y, z)) {
      // s': from outside -> down to s; from s -> leave backward in 2.
      return {backward ? EdgeStep::backward(2) : EdgeStep::backward(3), true};
    }
    if (d[xi].matches(y, z)) {
      // d: from d' going forward -> on to v'; from v' going backward -> up to d'.
      return {backward ? EdgeStep::forward(3) : EdgeStep::forward(1), backward};
    }
    if (dp[xi].matches(y, z)) {
      // d': from outside going forward -> down to d; from d -> leave backward in 1.
      return {backward ? EdgeStep::backward(1) : EdgeStep::backward(3), backward};
    }
    if (m[xi].matches(y, z)) {
      // m: from m' -> leave forward in 1; from outside (backward) -> over to m'.
      return {backward ? EdgeStep::forward(2) : EdgeStep::forward(1), false};
    }
    if (mp[xi].matches(y, z)) {
      // m': from m -> leave forward in 1; from outside (backward) -> over to m,
      // after which the walk leaves m forward.
      return {backward ? EdgeStep::backward(2) : EdgeStep::forward(1), false};
    }
    const auto sum = wrap(x + y + z);
    if (!backward) return {sum == side - 1 ? EdgeStep::forward(2) : EdgeStep::forward(1), false};
    return {sum == 0 ? EdgeStep::backward(2) : EdgeStep::backward(1), true};
  };

  std::int64_t x = 0, y = 0, z = 0;
  bool backward = false;  // current orientation along X
  // When a merged cube contains the origin, both orientations give an X edge
  // at the origin; leave the way `EdgePartition3::trace` does.
  {
    const auto a = exit(0, 0, 0, false).first;
    const auto b = exit(0, 0, 0, true).first;
    const auto rank = [](EdgeStep st) {
      if (st == EdgeStep::forward(1)) return 0;
      return (st.direction == Direction::Forward ? 0 : 3) + st.dimension;
    };
    backward = rank(b) < rank(a);
  }
  for (std::uint64_t i = 0; i < total; ++i) {
    const VertexId here = lattice.pack(
        Coord{{static_cast<std::uint64_t>(x), static_cast<std::uint64_t>(y), static_cast<std::uint64_t>(z)}});
    if (seen[here]) {
      throw ConstructionError("walk revisited a vertex at step " + std::to_string(i));
    }
    seen[here] = true;

    const auto [step, next_backward] = exit(x, y, z, backward);
    backward = next_backward;
    code.steps.push_back(step);
    const std::int64_t delta = step.direction == Direction::Forward ? 1 : -1;
    switch (step.dimension) {
      case 1:
        x = wrap(x + delta);
        break;
      case 2:
        y = wrap(y + delta);
        break;
      default:
        z = wrap(z + delta);
        break;
    }
  }
  if (x != 0 || y != 0 || z != 0) throw ConstructionError("walk did not close at the origin");
  return code;
}

SourcePair source_pair_torus3(const MergingSet& s) {
  auto hd = hd_torus3_surgery(s);
  SourceMatrix matrix({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
  if (permute_cycle(hd.x, matrix.row(1)) != hd.y || permute_cycle(hd.x, matrix.row(2)) != hd.z) {
    throw ConstructionError("decomposition is not Latin: merging set is not rotation-closed");
  }
  return {std::move(hd.x), std::move(matrix)};
}

SourcePair source_pair_torus3(int n) { return source_pair_torus3(latin_merging_set(n)); }

}  // namespace hdq
