#include "hdq/verify.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <set>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace hdq::verify {

namespace {

std::string show(const Lattice& lattice, VertexId v) {
  const auto c = lattice.unpack(v);
  std::string s = "(";
  for (std::size_t i = 0; i < c.digits.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(c.digits[i]);
  }
  return s + ")";
}

std::string show(const Point3& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + "," + std::to_string(p.z) + ")";
}

// Undirected edge id: the endpoint the edge leaves in the forward direction,
// times the axis count, plus the 0-based dimension.
std::uint64_t edge_id(const Lattice& lattice, VertexId from, EdgeStep s) {
  const VertexId tail = s.direction == Direction::Forward ? from : lattice.step(from, s);
  return tail * static_cast<std::uint64_t>(lattice.kind().axes()) + (s.dimension - 1u);
}

class Bitmap {
 public:
  explicit Bitmap(std::uint64_t bits) : words_((bits + 63) / 64, 0) {}
  bool test(std::uint64_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  /// Sets bit i and returns its previous value.
  bool test_and_set(std::uint64_t i) {
    auto& w = words_[i >> 6];
    const auto bit = std::uint64_t{1} << (i & 63);
    const bool was = (w & bit) != 0;
    w |= bit;
    return was;
  }
  std::uint64_t count() const {
    std::uint64_t c = 0;
    for (auto w : words_) c += static_cast<std::uint64_t>(__builtin_popcountll(w));
    return c;
  }

 private:
  std::vector<std::uint64_t> words_;
};

std::size_t least_rotation(const std::vector<VertexId>& s) {
  // Two-candidate minimum-rotation scan.
  const std::size_t n = s.size();
  std::size_t i = 0, j = 1, k = 0;
  while (i < n && j < n && k < n) {
    const auto a = s[(i + k) % n];
    const auto b = s[(j + k) % n];
    if (a == b) {
      ++k;
      continue;
    }
    if (a > b) {
      i += k + 1;
    } else {
      j += k + 1;
    }
    if (i == j) ++j;
    k = 0;
  }
  return std::min(i, j);
}

std::vector<VertexId> rotated(const std::vector<VertexId>& s, std::size_t start) {
  std::vector<VertexId> out;
  out.reserve(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) out.push_back(s[(start + i) % s.size()]);
  return out;
}

}  // namespace

bool Report::ok() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.passed || c.informational; });
}

void Report::add(std::string name, bool passed, std::string detail) {
  checks.push_back({std::move(name), passed, std::move(detail), false});
}

void Report::add_info(std::string name, bool holds, std::string detail) {
  checks.push_back({std::move(name), holds, std::move(detail), true});
}

void Report::merge(const Report& other, const std::string& prefix) {
  for (const auto& c : other.checks) {
    checks.push_back({prefix + c.name, c.passed, c.detail, c.informational});
  }
  for (const auto& n : other.notes) notes.push_back(prefix + n);
}

const Check* Report::find(const std::string& name) const noexcept {
  for (const auto& c : checks) {
    if (c.name == name) return &c;
  }
  return nullptr;
}

std::string Report::to_text() const {
  std::ostringstream os;
  for (const auto& c : checks) {
    if (c.informational) {
      os << "INFO " << c.name << ": " << (c.passed ? "yes" : "no");
    } else {
      os << (c.passed ? "PASS " : "FAIL ") << c.name;
    }
    if (!c.detail.empty()) os << (c.informational ? " (" : ": ") << c.detail << (c.informational ? ")" : "");
    os << '\n';
  }
  for (const auto& n : notes) os << "NOTE " << n << '\n';
  os << (ok() ? "RESULT pass" : "RESULT fail") << '\n';
  return os.str();
}

std::string Report::to_json() const {
  nlohmann::ordered_json j;
  j["ok"] = ok();
  auto& arr = j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : checks) {
    arr.push_back({{"name", c.name},
                   {"passed", c.passed},
                   {"informational", c.informational},
                   {"detail", c.detail}});
  }
  j["notes"] = notes;
  return j.dump(2) + "\n";
}

bool WalkResult::hamiltonian(const GraphKind& kind) const noexcept {
  return closed && !first_repeat && !bad_step && vertices.size() == kind.vertex_count();
}

WalkResult walk(const CycleCode& code) {
  const Lattice lattice(code.kind);
  WalkResult r;
  r.vertices.reserve(code.steps.size());
  std::vector<bool> seen(code.kind.vertex_count(), false);
  VertexId v = 0;
  for (std::size_t i = 0; i < code.steps.size(); ++i) {
    if (!lattice.valid_step(code.steps[i])) {
      r.bad_step = i;
      return r;
    }
    v = lattice.step(v, code.steps[i]);
    if (seen[v] && !r.first_repeat) r.first_repeat = r.vertices.size();
    seen[v] = true;
    r.vertices.push_back(v);
  }
  r.closed = v == 0;
  return r;
}

Check check_hamiltonian(const CycleCode& code) {
  const Lattice lattice(code.kind);
  const auto expected = code.kind.cycle_length();
  Check c{"hamiltonian", false, {}, false};
  if (code.steps.size() != expected) {
    c.detail = "length " + std::to_string(code.steps.size()) + ", expected " + std::to_string(expected);
    return c;
  }
  Bitmap seen(code.kind.vertex_count());
  VertexId v = 0;
  for (std::size_t i = 0; i < code.steps.size(); ++i) {
    const auto s = code.steps[i];
    if (!lattice.valid_step(s)) {
      c.detail = "step " + std::to_string(i) + " has dimension " + std::to_string(s.dimension) +
                 " outside 1.." + std::to_string(code.kind.axes());
      return c;
    }
    v = lattice.step(v, s);
    if (seen.test_and_set(v)) {
      c.detail = "step " + std::to_string(i) + " revisits " + show(lattice, v);
      return c;
    }
  }
  if (v != 0) {
    c.detail = "walk ends at " + show(lattice, v) + ", not the origin";
    return c;
  }
  c.passed = true;
  return c;
}

Report check_hd(std::span<const CycleCode> codes, const GraphKind& kind, int jobs,
                bool expect_complete) {
  Report r;
  const Lattice lattice(kind);
  const auto count = codes.size();

  std::vector<char> usable(count, 1);
  for (std::size_t i = 0; i < count; ++i) {
    if (!(codes[i].kind == kind)) {
      r.add("cycle " + std::to_string(i + 1) + " graph", false,
            codes[i].kind.to_string() + " instead of " + kind.to_string());
      usable[i] = 0;
    } else if (!std::all_of(codes[i].steps.begin(), codes[i].steps.end(),
                            [&](EdgeStep s) { return lattice.valid_step(s); })) {
      usable[i] = 0;
    }
  }

  std::vector<Check> ham(count);
  {
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (auto i = next++; i < count; i = next++) {
        ham[i] = codes[i].kind == kind ? check_hamiltonian(codes[i])
                                       : Check{"hamiltonian", false, "wrong graph", false};
      }
    };
    const auto threads = static_cast<std::size_t>(std::clamp(jobs, 1, 64));
    std::vector<std::thread> pool;
    for (std::size_t t = 1; t < std::min(threads, count); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
  }
  for (std::size_t i = 0; i < count; ++i) {
    r.add("cycle " + std::to_string(i + 1) + " hamiltonian", ham[i].passed, ham[i].detail);
  }

  // Edge union in cycle order, so the first collision reported is stable.
  Bitmap used(kind.edge_count());
  std::optional<std::pair<std::size_t, std::uint64_t>> clash;  // (cycle, edge)
  for (std::size_t i = 0; i < count && !clash; ++i) {
    if (!usable[i]) continue;
    VertexId v = 0;
    for (const auto& s : codes[i].steps) {
      const auto id = edge_id(lattice, v, s);
      if (used.test_and_set(id)) {
        clash = {i, id};
        break;
      }
      v = lattice.step(v, s);
    }
  }
  if (clash) {
    const auto [i, id] = *clash;
    const auto axes = static_cast<std::uint64_t>(kind.axes());
    std::size_t owner = i;
    for (std::size_t j = 0; j <= i && owner == i; ++j) {
      if (!usable[j]) continue;
      VertexId v = 0;
      std::size_t seen_in_i = 0;
      for (const auto& s : codes[j].steps) {
        if (edge_id(lattice, v, s) == id) {
          if (j < i || ++seen_in_i == 1) {
            owner = j;
            break;
          }
        }
        v = lattice.step(v, s);
      }
    }
    const auto edge = "edge " + show(lattice, id / axes) + " dim " + std::to_string(id % axes + 1);
    if (owner == i) {
      r.add("edge-disjoint", false, "cycle " + std::to_string(i + 1) + " uses " + edge + " twice");
    } else {
      r.add("edge-disjoint", false,
            "cycles " + std::to_string(owner + 1) + " and " + std::to_string(i + 1) + " share " + edge);
    }
  } else {
    r.add("edge-disjoint", true);
  }

  const auto covered = used.count();
  const auto needed = kind.edge_count();
  const auto coverage = std::to_string(covered) + " of " + std::to_string(needed) + " edges";
  if (!expect_complete && count < static_cast<std::size_t>(kind.decomposition_size())) {
    r.notes.push_back("incomplete coverage: " + std::to_string(count) + " of " +
                      std::to_string(kind.decomposition_size()) + " cycles, " + coverage);
  } else {
    r.add("cycle count", count == static_cast<std::size_t>(kind.decomposition_size()),
          std::to_string(count) + " cycles, " + kind.to_string() + " needs " +
              std::to_string(kind.decomposition_size()));
    r.add("coverage", !clash && covered == needed, coverage);
  }
  return r;
}

Report check_latin(const SourcePair& sp, int jobs) {
  Report r;
  const auto& m = sp.matrix;
  const int axes = sp.cycle.kind.axes();
  r.add("matrix size", m.size() == axes,
        std::to_string(m.size()) + "x" + std::to_string(m.size()) + " for " + std::to_string(axes) + " axes");
  r.add("matrix latin", m.is_latin());
  r.add("matrix identity first row", m.has_identity_first_row());
  if (!r.ok()) {
    r.notes.push_back("family not expanded: matrix preconditions failed");
    return r;
  }
  std::vector<CycleCode> family;
  family.reserve(static_cast<std::size_t>(m.size()));
  for (int i = 0; i < m.size(); ++i) {
    CycleCode c{sp.cycle.kind, {}};
    c.steps.reserve(sp.cycle.steps.size());
    for (const auto& s : sp.cycle.steps) {
      c.steps.push_back({static_cast<std::uint16_t>(m.at(i, s.dimension - 1)), s.direction});
    }
    family.push_back(std::move(c));
  }
  r.merge(check_hd(family, sp.cycle.kind, jobs), "family ");
  return r;
}

Report check_merging_set(const MergingSet& s, int n) {
  Report r;
  r.add("n", s.n == n, "set declares n = " + std::to_string(s.n) + ", expected " + std::to_string(n));
  if (n < 1 || n > 20) {
    r.add("side", false, "n out of range");
    return r;
  }
  const std::uint64_t side = std::uint64_t{1} << (2 * n);
  r.add("cardinality", s.elements.size() == side - 1,
        std::to_string(s.elements.size()) + " elements, expected " + std::to_string(side - 1));

  std::string bad;
  for (const auto& p : s.elements) {
    if (p.x >= side || p.y >= side || p.z >= side) {
      bad = show(p);
      break;
    }
  }
  r.add("in range", bad.empty(), bad.empty() ? "" : bad + " has a coordinate >= " + std::to_string(side));
  bad.clear();
  for (const auto& p : s.elements) {
    if ((p.x % side + p.y % side + p.z % side) % side != side - 1) {
      bad = show(p);
      break;
    }
  }
  r.add("on diagonal", bad.empty(), bad.empty() ? "" : bad + " has coordinate sum != -1");
  bad.clear();
  for (std::size_t i = 0; i < s.elements.size() && bad.empty(); ++i) {
    for (std::size_t j = i + 1; j < s.elements.size(); ++j) {
      const auto& a = s.elements[i];
      const auto& b = s.elements[j];
      if (a.x == b.x || a.y == b.y || a.z == b.z) {
        bad = show(a) + " and " + show(b);
        break;
      }
    }
  }
  r.add("distinct coordinates", bad.empty(), bad.empty() ? "" : bad + " share a coordinate");

  const std::set<Point3> members(s.elements.begin(), s.elements.end());
  bool closed = true;
  for (const auto& p : s.elements) {
    if (!members.count({p.z, p.x, p.y}) || !members.count({p.y, p.z, p.x})) {
      closed = false;
      bad = show(p);
      break;
    }
  }
  r.add_info("rotation-closed", closed, closed ? "" : "rotation of " + bad + " missing");
  std::set<std::uint64_t> xs;
  for (const auto& p : s.elements) xs.insert(p.x);
  const bool walk_contract =
      xs.size() == side - 1 && s.elements.size() == side - 1 && (xs.empty() || *xs.rbegin() == side - 2);
  r.add_info("x-coords 0..4^n-2", walk_contract);
  return r;
}

std::vector<VertexId> necklace_order(std::span<const VertexId> cycle,
                                     const std::function<bool(VertexId)>& in_subset) {
  std::vector<VertexId> seq;
  for (auto v : cycle) {
    if (in_subset(v)) seq.push_back(v);
  }
  if (seq.size() < 2) return seq;
  auto forward = rotated(seq, least_rotation(seq));
  std::reverse(seq.begin(), seq.end());
  auto backward = rotated(seq, least_rotation(seq));
  return std::min(forward, backward);
}

namespace {

class DisjointSets {
 public:
  explicit DisjointSets(std::uint64_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::uint64_t find(std::uint64_t a) {
    while (parent_[a] != a) {
      parent_[a] = parent_[parent_[a]];
      a = parent_[a];
    }
    return a;
  }
  void unite(std::uint64_t a, std::uint64_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::uint64_t> parent_;
};

struct OracleColouring {
  int n;
  std::uint64_t side;
  std::uint64_t vertices;

  explicit OracleColouring(int nn) : n(nn), side(std::uint64_t{1} << (2 * nn)), vertices(side * side * side) {}

  // Vertex index x + side*(y + side*z); plain arithmetic rather than the
  // library's bit packing.
  std::uint64_t index(std::uint64_t x, std::uint64_t y, std::uint64_t z) const {
    return (x % side) + side * ((y % side) + side * (z % side));
  }
  // Class (0=X, 1=Y, 2=Z) of the forward edge in dimension d from (x,y,z).
  int colour(std::uint64_t x, std::uint64_t y, std::uint64_t z, int d) const {
    const bool diagonal = (x + y + z + 1) % side == 0;
    switch (d) {
      case 1:
        return diagonal ? 2 : 0;
      case 2:
        return diagonal ? 0 : 1;
      default:
        return diagonal ? 1 : 2;
    }
  }
};

}  // namespace

ClassCensus initial_census(int n) {
  const OracleColouring g(n);
  std::vector<DisjointSets> sets;
  for (int c = 0; c < 3; ++c) sets.emplace_back(g.vertices);
  for (std::uint64_t z = 0; z < g.side; ++z) {
    for (std::uint64_t y = 0; y < g.side; ++y) {
      for (std::uint64_t x = 0; x < g.side; ++x) {
        const auto v = g.index(x, y, z);
        sets[static_cast<std::size_t>(g.colour(x, y, z, 1))].unite(v, g.index(x + 1, y, z));
        sets[static_cast<std::size_t>(g.colour(x, y, z, 2))].unite(v, g.index(x, y + 1, z));
        sets[static_cast<std::size_t>(g.colour(x, y, z, 3))].unite(v, g.index(x, y, z + 1));
      }
    }
  }
  ClassCensus census;
  std::vector<std::uint64_t>* out[3] = {&census.x, &census.y, &census.z};
  for (int c = 0; c < 3; ++c) {
    std::vector<std::uint64_t> size(g.vertices, 0);
    for (std::uint64_t v = 0; v < g.vertices; ++v) ++size[sets[static_cast<std::size_t>(c)].find(v)];
    for (auto s : size) {
      if (s) out[c]->push_back(s);
    }
    std::sort(out[c]->begin(), out[c]->end());
  }
  return census;
}

Report oracle_initial_partition(int n) {
  Report r;
  if (n < 1 || n > 3) {
    r.add("n", false, "oracle runs for 1 <= n <= 3");
    return r;
  }
  const OracleColouring g(n);
  const char* names = "XYZ";

  // In- and out-degree 1 per class at every vertex.
  std::vector<std::array<std::uint8_t, 6>> deg(g.vertices, {0, 0, 0, 0, 0, 0});
  // A class-c edge changes only axes allowed for that class: X stays in its
  // z-layer, Y in its x-layer, Z in its y-layer.
  bool layered = true;
  std::string layer_detail;
  for (std::uint64_t z = 0; z < g.side; ++z) {
    for (std::uint64_t y = 0; y < g.side; ++y) {
      for (std::uint64_t x = 0; x < g.side; ++x) {
        const std::uint64_t next[3] = {g.index(x + 1, y, z), g.index(x, y + 1, z), g.index(x, y, z + 1)};
        for (int d = 1; d <= 3; ++d) {
          const int c = g.colour(x, y, z, d);
          ++deg[g.index(x, y, z)][static_cast<std::size_t>(2 * c)];
          ++deg[next[d - 1]][static_cast<std::size_t>(2 * c + 1)];
          // Fixed axis per class: X -> dim 3, Y -> dim 1, Z -> dim 2.
          const int fixed = c == 0 ? 3 : c == 1 ? 1 : 2;
          if (d == fixed && layered) {
            layered = false;
            layer_detail = std::string("class ") + names[c] + " edge in dimension " + std::to_string(d);
          }
        }
      }
    }
  }
  bool degrees = std::all_of(deg.begin(), deg.end(), [](const auto& a) {
    return std::all_of(a.begin(), a.end(), [](auto v) { return v == 1; });
  });
  r.add("directed 2-factors", degrees);
  r.add("components are layers", layered, layer_detail);

  const auto census = initial_census(n);
  const std::vector<std::uint64_t>* per[3] = {&census.x, &census.y, &census.z};
  const auto layer = g.side * g.side;
  for (int c = 0; c < 3; ++c) {
    const auto& sizes = *per[c];
    r.add(std::string(1, names[c]) + " component count", sizes.size() == g.side,
          std::to_string(sizes.size()) + ", expected " + std::to_string(g.side));
    const bool lengths = std::all_of(sizes.begin(), sizes.end(), [&](auto s) { return s == layer; });
    r.add(std::string(1, names[c]) + " component lengths", lengths,
          "expected every cycle to have " + std::to_string(layer) + " vertices");
  }
  r.add("total cycles", census.x.size() + census.y.size() + census.z.size() == 3 * g.side,
        std::to_string(census.x.size() + census.y.size() + census.z.size()));

  std::uint64_t diagonal = 0;
  for (std::uint64_t z = 0; z < g.side; ++z) {
    for (std::uint64_t y = 0; y < g.side; ++y) {
      for (std::uint64_t x = 0; x < g.side; ++x) diagonal += (x + y + z + 1) % g.side == 0;
    }
  }
  r.add("diagonal vertices", diagonal == layer,
        std::to_string(diagonal) + " candidate cube origins, expected " + std::to_string(layer));
  return r;
}

}  // namespace hdq::verify
