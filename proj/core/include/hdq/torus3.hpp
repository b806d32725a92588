#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "hdq/types.hpp"

namespace hdq {

/// The three colour classes of G_{n,3}'s edges.
enum class EdgeClass : std::uint8_t { X = 0, Y = 1, Z = 2 };

char to_char(EdgeClass c) noexcept;

/// A vertex of G_{n,3} as plain coordinates.
struct Point3 {
  std::uint64_t x = 0;
  std::uint64_t y = 0;
  std::uint64_t z = 0;

  friend auto operator<=>(const Point3&, const Point3&) = default;
};

/// One edge of the 2x2x2 cube: lower endpoint (as 0/1 offsets from the cube
/// origin) and dimension, with its class before and after a merge.
struct CubeEdge {
  std::array<std::uint8_t, 3> offset;
  int dimension;
  EdgeClass type_one;
  EdgeClass type_two;
};

/// The 12-edge type-I / type-II class table.
std::span<const CubeEdge, 12> cube_edge_table() noexcept;

/// A set of cube origins on the diagonal x+y+z = -1 (mod 4^n).
struct MergingSet {
  int n = 1;
  std::vector<Point3> elements;

  friend bool operator==(const MergingSet&, const MergingSet&) = default;
};

/// The set with first block (i, i, 4^n-1-2i) and second block
/// (4^n/2+j, 4^n/2+1+j, 4^n-2-2j).  Its x-coordinates are exactly 0..4^n-2.
MergingSet default_merging_set(int n);

/// A rotation-closed merging set, S* together with its images under
/// (x,y,z) -> (z,x,y) and (x,y,z) -> (y,z,x).  Produces a Latin decomposition.
MergingSet latin_merging_set(int n);

/// Whether `s` satisfies the merging-set conditions for its n.  Used as an
/// internal guard by the constructors; the verifier has its own check.
bool is_merging_set(const MergingSet& s) noexcept;

/// The colouring of G_{n,3} into three classes, each a spanning 2-regular
/// subgraph.
///
/// Storage is one class label per (vertex, forward dimension).  Right after
/// `partition_initial` every class, oriented along its forward edges, is a
/// union of directed cycles.  Merging a cube keeps every vertex at degree two
/// in every class but flips orientations along the merged path, so after
/// surgery a class is only meaningful as an undirected 2-factor; `trace`
/// orients it by walking away from a chosen start edge.
class EdgePartition3 {
 public:
  /// Initial colouring: a dimension-d edge leaving a vertex with coordinate
  /// sum -1 gets the "diagonal" class (Z, X, Y for d = 1, 2, 3), any other
  /// gets the "regular" class (X, Y, Z).
  static EdgePartition3 partition_initial(int n);

  int n() const noexcept { return n_; }
  const GraphKind& kind() const noexcept { return lattice_.kind(); }
  const Lattice& lattice() const noexcept { return lattice_; }
  std::uint64_t side() const noexcept { return kind().modulus(); }

  VertexId vertex(const Point3& p) const noexcept;
  Point3 point(VertexId v) const noexcept;

  /// Class of the edge from v in the forward direction of `dimension`.
  EdgeClass class_of(VertexId v, int dimension) const noexcept {
    return static_cast<EdgeClass>(labels_[v * 3 + static_cast<std::size_t>(dimension - 1)]);
  }

  /// The class-c edges at v as steps leaving v.  Exactly two for a valid
  /// partition; the first entry prefers forward steps and lower dimensions.
  std::vector<EdgeStep> incident(VertexId v, EdgeClass c) const;

  /// With no orientation changes yet, the unique forward class-c step at v.
  /// Meaningful only before any merge.
  EdgeStep successor_step(VertexId v, EdgeClass c) const;

  bool is_type_one(const Point3& origin) const noexcept;
  bool is_type_two(const Point3& origin) const noexcept;

  /// Replaces the type-I cube at `origin` by a type-II cube.  Throws
  /// InvalidArgument if the origin is off the diagonal or the cube is not
  /// currently type-I.
  void merge(const Point3& origin);

  /// Every vertex has exactly two incident edges of each class.
  bool degrees_valid() const;

  /// Number of connected components of class c.
  std::uint64_t component_count(EdgeClass c) const;

  /// The component of class c through `start` as a vertex cycle.
  std::vector<VertexId> component_vertices(EdgeClass c, VertexId start) const;

  /// Walks class c from the origin, leaving along the forward step of the
  /// class's own axis (1 for X, 2 for Y, 3 for Z) when that edge belongs to c.
  /// Throws ConstructionError unless the walk is a Hamilton cycle.
  CycleCode trace(EdgeClass c) const;

 private:
  explicit EdgePartition3(int n);

  int n_;
  Lattice lattice_;
  std::vector<std::uint8_t> labels_;
};

/// Copying form of `EdgePartition3::merge`.
EdgePartition3 merge_cube(EdgePartition3 p, const Point3& origin);

struct Torus3Decomposition {
  CycleCode x;
  CycleCode y;
  CycleCode z;

  std::array<const CycleCode*, 3> cycles() const noexcept { return {&x, &y, &z}; }
};

/// Merge order used by `hd_torus3_surgery`: descending x.
std::vector<Point3> merge_order(const MergingSet& s);

/// Partitions, merges every cube of `s`, and traces the three classes.
Torus3Decomposition hd_torus3_surgery(const MergingSet& s);

/// The X class of the surgery result computed directly, by walking from the
/// origin and handling the eight special vertices of each merged cube on the
/// fly.  Only O(4^n) helper rows plus a visited bitmap; no partition is built.
CycleCode hd_torus3_walk(const MergingSet& s);

/// Source pair for G_{n,3} built on `s`; throws ConstructionError unless the
/// rotations of X reproduce Y and Z exactly.
SourcePair source_pair_torus3(const MergingSet& s);

/// `source_pair_torus3(latin_merging_set(n))`.
SourcePair source_pair_torus3(int n);

}  // namespace hdq
