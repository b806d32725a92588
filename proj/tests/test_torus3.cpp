#include <gtest/gtest.h>

#include <algorithm>
#include <array>
#include <map>
#include <random>
#include <set>
#include <string>

#include "hdq/error.hpp"
#include "hdq/torus3.hpp"
#include "hdq/verify.hpp"
#include "fixtures.hpp"
#include "oracle.hpp"

using namespace hdq;

namespace {

// The two cube colourings written as undirected edges between corner
// offsets "xyz".
struct DrawnEdge {
  const char* a;
  const char* b;
  char cls;
};

constexpr std::array<DrawnEdge, 12> kTypeTwo = {{
    {"010", "110", 'X'}, {"000", "001", 'X'}, {"101", "111", 'X'}, {"010", "011", 'X'},
    {"001", "101", 'Y'}, {"001", "011", 'Y'}, {"000", "100", 'Y'}, {"110", "111", 'Y'},
    {"000", "010", 'Z'}, {"011", "111", 'Z'}, {"100", "110", 'Z'}, {"100", "101", 'Z'},
}};

std::string corner(const std::array<std::uint8_t, 3>& o) {
  return {static_cast<char>('0' + o[0]), static_cast<char>('0' + o[1]), static_cast<char>('0' + o[2])};
}

std::string other_corner(const CubeEdge& e) {
  auto o = e.offset;
  o[static_cast<std::size_t>(e.dimension - 1)] = 1;
  return corner(o);
}

using Census = std::map<std::pair<std::string, char>, int>;

// Class degree of every cube corner, counting only cube edges.
Census corner_degrees(bool type_two) {
  Census c;
  for (const auto& e : cube_edge_table()) {
    const char cls = to_char(type_two ? e.type_two : e.type_one);
    ++c[{corner(e.offset), cls}];
    ++c[{other_corner(e), cls}];
  }
  return c;
}

std::vector<CycleCode> as_vector(const Torus3Decomposition& d) { return {d.x, d.y, d.z}; }

Point3 p3(std::uint64_t x, std::uint64_t y, std::uint64_t z) { return {x, y, z}; }

std::vector<VertexId> layer_necklace(const EdgePartition3& p, std::uint64_t z_layer) {
  const auto in_layer = [&](VertexId v) { return p.point(v).z == z_layer; };
  const auto start = p.vertex(p3(0, 0, z_layer));
  return verify::necklace_order(p.component_vertices(EdgeClass::X, start), in_layer);
}

}  // namespace

TEST(CubeTable, TypeTwoMatchesDrawing) {
  std::set<std::tuple<std::string, std::string, char>> drawn, table;
  for (const auto& e : kTypeTwo) drawn.insert({std::min<std::string>(e.a, e.b), std::max<std::string>(e.a, e.b), e.cls});
  for (const auto& e : cube_edge_table()) {
    table.insert({corner(e.offset), other_corner(e), to_char(e.type_two)});
  }
  EXPECT_EQ(drawn, table);
}

TEST(CubeTable, TypeOneIsTheInitialColouring) {
  // A cube whose origin has coordinate sum -1: only the origin is on the diagonal.
  for (const auto& e : cube_edge_table()) {
    const int expected = oracle::initial_class(4, 3 + e.offset[0], e.offset[1], e.offset[2], e.dimension);
    EXPECT_EQ(static_cast<int>(e.type_one), expected) << corner(e.offset) << " dim " << e.dimension;
  }
}

TEST(CubeTable, MergeKeepsEveryCornerDegree) {
  EXPECT_EQ(corner_degrees(false), corner_degrees(true));
}

TEST(CubeTable, RotationSymmetric) {
  // dims 1->2->3->1, classes X->Y->Z->X, offset (a,b,c) -> (c,a,b).
  std::set<std::tuple<std::string, int, char, char>> table, rotated;
  for (const auto& e : cube_edge_table()) {
    table.insert({corner(e.offset), e.dimension, to_char(e.type_one), to_char(e.type_two)});
    const std::array<std::uint8_t, 3> o{e.offset[2], e.offset[0], e.offset[1]};
    const auto next = [](EdgeClass c) { return to_char(static_cast<EdgeClass>((static_cast<int>(c) + 1) % 3)); };
    rotated.insert({corner(o), e.dimension % 3 + 1, next(e.type_one), next(e.type_two)});
  }
  EXPECT_EQ(table, rotated);
}

TEST(Partition, MatchesColouringRule) {
  for (int n : {1, 2}) {
    const auto p = EdgePartition3::partition_initial(n);
    const auto side = p.side();
    for (std::uint64_t x = 0; x < side; ++x) {
      for (std::uint64_t y = 0; y < side; ++y) {
        for (std::uint64_t z = 0; z < side; ++z) {
          for (int d = 1; d <= 3; ++d) {
            ASSERT_EQ(static_cast<int>(p.class_of(p.vertex(p3(x, y, z)), d)), oracle::initial_class(side, x, y, z, d));
          }
        }
      }
    }
  }
}

TEST(Partition, SpecificEdges) {
  const auto p = EdgePartition3::partition_initial(1);
  EXPECT_EQ(p.class_of(p.vertex(p3(0, 0, 3)), 1), EdgeClass::Z);
  EXPECT_EQ(p.class_of(p.vertex(p3(0, 0, 0)), 1), EdgeClass::X);
}

TEST(Partition, CensusAtNOne) {
  const auto census = verify::initial_census(1);
  for (const auto* cls : {&census.x, &census.y, &census.z}) {
    EXPECT_EQ(*cls, (std::vector<std::uint64_t>{16, 16, 16, 16}));
  }
  const auto p = EdgePartition3::partition_initial(1);
  for (auto c : {EdgeClass::X, EdgeClass::Y, EdgeClass::Z}) EXPECT_EQ(p.component_count(c), 4u);
  EXPECT_TRUE(p.degrees_valid());
  EXPECT_TRUE(verify::oracle_initial_partition(1).ok());
}

TEST(Partition, CensusAtNTwo) {
  const auto census = verify::initial_census(2);
  EXPECT_EQ(census.x.size() + census.y.size() + census.z.size(), 48u);
  for (const auto* cls : {&census.x, &census.y, &census.z}) {
    EXPECT_TRUE(std::all_of(cls->begin(), cls->end(), [](auto s) { return s == 256; }));
  }
  EXPECT_TRUE(verify::oracle_initial_partition(2).ok());
}

TEST(Partition, XComponentsAreZLayers) {
  const auto p = EdgePartition3::partition_initial(1);
  for (std::uint64_t z = 0; z < 4; ++z) {
    for (auto v : p.component_vertices(EdgeClass::X, p.vertex(p3(0, 0, z)))) EXPECT_EQ(p.point(v).z, z);
  }
}

TEST(MergingSet, FrozenSmallSets) {
  EXPECT_EQ(default_merging_set(1).elements, (std::vector<Point3>{p3(0, 0, 3), p3(1, 1, 1), p3(2, 3, 2)}));
  const auto latin = latin_merging_set(1);
  const std::set<Point3> got(latin.elements.begin(), latin.elements.end());
  EXPECT_EQ(got, (std::set<Point3>{p3(0, 1, 2), p3(2, 0, 1), p3(1, 2, 0)}));
}

TEST(MergingSet, BruteForceAtNOne) {
  const auto all = fixtures::all_merging_sets_n1();
  EXPECT_EQ(all.size(), 32u);
  std::vector<fixtures::TripleSet> closed;
  for (const auto& s : all) {
    if (fixtures::rotation_closed(s)) closed.push_back(s);
  }
  // The Latin set and its mirror image.
  EXPECT_EQ(closed, (std::vector<fixtures::TripleSet>{{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}},
                                                      {{0, 2, 1}, {1, 0, 2}, {2, 1, 0}}}));

  const auto as_triples = [](const MergingSet& m) {
    fixtures::TripleSet t;
    for (const auto& p : m.elements) t.insert({p.x, p.y, p.z});
    return t;
  };
  EXPECT_NE(std::find(all.begin(), all.end(), as_triples(default_merging_set(1))), all.end());
  EXPECT_EQ(as_triples(latin_merging_set(1)), closed.front());
  for (const auto& t : all) {
    MergingSet m{1, {}};
    for (const auto& p : t) m.elements.push_back({p[0], p[1], p[2]});
    EXPECT_TRUE(is_merging_set(m));
  }
}

TEST(MergingSet, DefaultXCoordinatesAtNTwo) {
  const auto s = default_merging_set(2);
  ASSERT_EQ(s.elements.size(), 15u);
  std::vector<std::uint64_t> xs;
  for (const auto& p : s.elements) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  for (std::uint64_t i = 0; i < 15; ++i) EXPECT_EQ(xs[i], i);
}

TEST(MergingSet, DefaultCubeWrapsOntoTheOrigin) {
  // (0, 0, 4^n - 1) + (0, 0, 1) is the origin modulo 4^n.
  for (int n : {1, 2, 3}) {
    const auto s = default_merging_set(n);
    EXPECT_EQ(s.elements.front(), p3(0, 0, (std::uint64_t{1} << (2 * n)) - 1));
  }
}

class MergingSetSizes : public ::testing::TestWithParam<int> {};

TEST_P(MergingSetSizes, FormulasSatisfyInvariants) {
  const int n = GetParam();
  for (const auto& s : {default_merging_set(n), latin_merging_set(n)}) {
    const auto r = verify::check_merging_set(s, n);
    EXPECT_TRUE(r.ok()) << r.to_text();
  }
  EXPECT_TRUE(verify::check_merging_set(latin_merging_set(n), n).find("rotation-closed")->passed);
  EXPECT_FALSE(verify::check_merging_set(default_merging_set(n), n).find("rotation-closed")->passed);
}

INSTANTIATE_TEST_SUITE_P(N, MergingSetSizes, ::testing::Values(1, 2, 3, 4, 5));

TEST(MergingSet, RejectsBrokenSets) {
  auto s = latin_merging_set(2);
  EXPECT_TRUE(is_merging_set(s));
  auto dropped = s;
  dropped.elements.pop_back();
  EXPECT_FALSE(is_merging_set(dropped));
  auto off = s;
  off.elements[0].z = (off.elements[0].z + 1) % 16;
  EXPECT_FALSE(is_merging_set(off));
  auto clash = s;
  clash.elements[1].x = clash.elements[0].x;
  EXPECT_FALSE(is_merging_set(clash));
  EXPECT_THROW(hd_torus3_surgery(dropped), InvalidArgument);
  EXPECT_THROW(hd_torus3_walk(off), InvalidArgument);
}

TEST(Merge, TurnsTypeOneIntoTypeTwo) {
  auto p = EdgePartition3::partition_initial(1);
  const auto origin = p3(0, 1, 2);
  EXPECT_TRUE(p.is_type_one(origin));
  p.merge(origin);
  EXPECT_TRUE(p.is_type_two(origin));
  EXPECT_FALSE(p.is_type_one(origin));
  EXPECT_TRUE(p.degrees_valid());
  for (const auto& e : cube_edge_table()) {
    const auto v = p.vertex(p3(origin.x + e.offset[0], origin.y + e.offset[1], origin.z + e.offset[2]));
    EXPECT_EQ(p.class_of(v, e.dimension), e.type_two);
  }
  EXPECT_THROW(p.merge(origin), InvalidArgument);
  EXPECT_THROW(p.merge(p3(0, 0, 0)), InvalidArgument);
  EXPECT_THROW(p.merge(p3(9, 0, 2)), InvalidArgument);
}

TEST(Merge, CopyingFormLeavesInputAlone) {
  const auto p = EdgePartition3::partition_initial(1);
  const auto q = merge_cube(p, p3(1, 1, 1));
  EXPECT_TRUE(p.is_type_one(p3(1, 1, 1)));
  EXPECT_TRUE(q.is_type_two(p3(1, 1, 1)));
}

TEST(Merge, EachMergeJoinsExactlyOnePairPerClass) {
  for (int n : {1, 2}) {
    for (const auto& s : {default_merging_set(n), latin_merging_set(n)}) {
      auto p = EdgePartition3::partition_initial(n);
      std::uint64_t expected = std::uint64_t{1} << (2 * n);
      for (const auto& origin : merge_order(s)) {
        p.merge(origin);
        --expected;
        for (auto c : {EdgeClass::X, EdgeClass::Y, EdgeClass::Z}) ASSERT_EQ(p.component_count(c), expected);
      }
      EXPECT_EQ(expected, 1u);
    }
  }
}

TEST(Merge, AnyOrderGivesADecomposition) {
  std::mt19937 rng(2024);
  for (int n : {1, 2}) {
    for (int trial = 0; trial < 4; ++trial) {
      auto s = trial % 2 ? latin_merging_set(n) : default_merging_set(n);
      std::shuffle(s.elements.begin(), s.elements.end(), rng);
      auto p = EdgePartition3::partition_initial(n);
      for (const auto& origin : s.elements) p.merge(origin);
      const std::vector<CycleCode> cycles{p.trace(EdgeClass::X), p.trace(EdgeClass::Y), p.trace(EdgeClass::Z)};
      EXPECT_TRUE(verify::check_hd(cycles, GraphKind::torus(n, 3)).ok());
    }
  }
}

TEST(Merge, TraceRejectsUnmergedClasses) {
  const auto p = EdgePartition3::partition_initial(1);
  EXPECT_THROW(p.trace(EdgeClass::X), ConstructionError);
}

TEST(Surgery, SmallDecompositions) {
  for (const auto& s : {latin_merging_set(1), default_merging_set(1)}) {
    const auto d = hd_torus3_surgery(s);
    for (const auto* c : d.cycles()) EXPECT_EQ(c->steps.size(), 64u);
    EXPECT_TRUE(oracle::is_decomposition(as_vector(d)));
  }
}

TEST(Surgery, DefaultSetAtNTwoIsHamiltonian) {
  const auto d = hd_torus3_surgery(default_merging_set(2));
  EXPECT_EQ(d.x.steps.size(), 4096u);
  EXPECT_TRUE(verify::check_hd(as_vector(d), GraphKind::torus(2, 3)).ok());
}

TEST(Walk, MatchesSurgery) {
  for (int n : {1, 2, 3}) {
    for (const auto& s : {default_merging_set(n), latin_merging_set(n)}) {
      EXPECT_EQ(hd_torus3_walk(s), hd_torus3_surgery(s).x) << "n = " << n;
    }
  }
}

TEST(Walk, LatinSetStartsForwardInDimensionOne) {
  EXPECT_EQ(hd_torus3_walk(latin_merging_set(1)).steps.front(), EdgeStep::forward(1));
}

TEST(Walk, MatchesSurgeryForShuffledSets) {
  // Element order in the set does not matter to either construction.
  std::mt19937 rng(5);
  auto s = latin_merging_set(2);
  std::shuffle(s.elements.begin(), s.elements.end(), rng);
  EXPECT_EQ(hd_torus3_walk(s), hd_torus3_surgery(latin_merging_set(2)).x);
}

TEST(SourcePair3, LatinAtNOne) {
  const auto sp = source_pair_torus3(1);
  EXPECT_EQ(sp.matrix, SourceMatrix({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}}));
  const auto d = hd_torus3_surgery(latin_merging_set(1));
  EXPECT_EQ(permute_cycle(d.x, AxisPermutation({2, 3, 1})), d.y);
  EXPECT_EQ(permute_cycle(d.x, AxisPermutation({3, 1, 2})), d.z);
  EXPECT_EQ(sp.cycle, d.x);
  EXPECT_TRUE(verify::check_latin(sp).ok());
}

TEST(SourcePair3, LatinAtNTwoAndThree) {
  for (int n : {2, 3}) EXPECT_TRUE(verify::check_latin(source_pair_torus3(n)).ok()) << n;
}

TEST(SourcePair3, DefaultSetIsNotLatin) {
  const auto d = hd_torus3_surgery(default_merging_set(1));
  EXPECT_NE(permute_cycle(d.x, AxisPermutation({2, 3, 1})), d.y);
  EXPECT_THROW(source_pair_torus3(default_merging_set(1)), ConstructionError);
}

TEST(LayerOrder, LayerOrderSurvivesOneMerge) {
  for (int n : {1, 2}) {
    for (const auto& origin : latin_merging_set(n).elements) {
      const auto before = EdgePartition3::partition_initial(n);
      const auto after = merge_cube(before, origin);
      EXPECT_EQ(layer_necklace(before, origin.z), layer_necklace(after, origin.z))
          << "origin (" << origin.x << "," << origin.y << "," << origin.z << ")";
    }
  }
}

// Only the origin's layer keeps its order; the detour reorders the layer above.
TEST(LayerOrder, LayerAboveIsReordered) {
  for (const auto& origin : latin_merging_set(1).elements) {
    const auto before = EdgePartition3::partition_initial(1);
    const auto after = merge_cube(before, origin);
    const auto z = (origin.z + 1) % 4;
    EXPECT_NE(layer_necklace(before, z), layer_necklace(after, z));
  }
}
