#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hdq {

enum class Family : std::uint8_t { Hypercube, Torus };

/// Which graph a cycle lives in.
///
/// `hypercube(m)` is Q_{2m} seen as the m-fold product of 4-cycles: m axes,
/// modulus 4.  `torus(n, k)` is G_{n,k}: k axes, each a cycle of length 4^n.
/// G_{1,k} and Q_{2k} have identical vertex and edge sets; only the family
/// tag differs.
class GraphKind {
 public:
  static GraphKind hypercube(int m);
  static GraphKind torus(int n, int k);

  Family family() const noexcept { return family_; }
  /// For a hypercube this is m (the graph is Q_{2m}); for a torus it is n.
  int n() const noexcept { return n_; }
  /// Number of torus axes; 0 for hypercubes (use `axes()`).
  int k() const noexcept { return k_; }

  int axes() const noexcept { return family_ == Family::Hypercube ? n_ : k_; }
  std::uint64_t modulus() const noexcept { return std::uint64_t{1} << bits_per_axis(); }
  int bits_per_axis() const noexcept { return family_ == Family::Hypercube ? 2 : 2 * n_; }
  std::uint64_t vertex_count() const noexcept {
    return std::uint64_t{1} << (bits_per_axis() * axes());
  }
  std::uint64_t edge_count() const noexcept {
    return vertex_count() * static_cast<std::uint64_t>(axes());
  }
  /// Length of every Hamilton cycle.
  std::uint64_t cycle_length() const noexcept { return vertex_count(); }
  /// Number of cycles in a Hamilton decomposition.
  int decomposition_size() const noexcept { return axes(); }

  std::string to_string() const;

  friend bool operator==(const GraphKind&, const GraphKind&) = default;

 private:
  GraphKind(Family f, int n, int k) : family_(f), n_(n), k_(k) {}

  Family family_;
  int n_;
  int k_;
};

enum class Direction : std::uint8_t { Forward, Backward };

/// One directed edge of a walk: `d` or `d-bar` in edge-code notation.
/// Dimensions are 1-based.
struct EdgeStep {
  std::uint16_t dimension = 1;
  Direction direction = Direction::Forward;

  static EdgeStep forward(int d) { return {static_cast<std::uint16_t>(d), Direction::Forward}; }
  static EdgeStep backward(int d) { return {static_cast<std::uint16_t>(d), Direction::Backward}; }
  /// `d` for forward, `-d` for backward.
  static EdgeStep from_signed(int value);

  int to_signed() const noexcept {
    return direction == Direction::Forward ? int{dimension} : -int{dimension};
  }
  EdgeStep reversed() const noexcept {
    return {dimension, direction == Direction::Forward ? Direction::Backward : Direction::Forward};
  }

  friend bool operator==(const EdgeStep&, const EdgeStep&) = default;
};

/// Packed vertex label: axis a (0-based) occupies bits [a*b, (a+1)*b) where
/// b = kind.bits_per_axis().  Under this packing the vertex (x_1..x_k) of
/// G_{n,k} and the quaternary string of Q_{2nk} with digit blocks x_1..x_k
/// share the same integer.
using VertexId = std::uint64_t;

/// A vertex as explicit per-axis digits.
struct Coord {
  std::vector<std::uint64_t> digits;

  friend auto operator<=>(const Coord&, const Coord&) = default;
};

/// Packing and neighbor arithmetic for one GraphKind.
class Lattice {
 public:
  explicit Lattice(GraphKind kind);

  const GraphKind& kind() const noexcept { return kind_; }

  VertexId pack(const Coord& c) const;
  Coord unpack(VertexId v) const;

  std::uint64_t digit(VertexId v, int axis0) const noexcept {
    return (v >> (axis0 * bits_)) & mask_;
  }
  VertexId with_digit(VertexId v, int axis0, std::uint64_t value) const noexcept {
    const int shift = axis0 * bits_;
    return (v & ~(mask_ << shift)) | ((value & mask_) << shift);
  }

  /// Neighbor of v along `s`.  The dimension is assumed valid; use
  /// `check_step` first on untrusted input.
  VertexId step(VertexId v, EdgeStep s) const noexcept {
    const int axis0 = s.dimension - 1;
    const std::uint64_t d = digit(v, axis0);
    return with_digit(v, axis0, s.direction == Direction::Forward ? d + 1 : d - 1);
  }

  bool valid_step(EdgeStep s) const noexcept {
    return s.dimension >= 1 && s.dimension <= kind_.axes();
  }
  void check_step(EdgeStep s) const;

 private:
  GraphKind kind_;
  int bits_;
  std::uint64_t mask_;
};

/// A directed closed walk written as edge steps from the origin.
struct CycleCode {
  GraphKind kind;
  std::vector<EdgeStep> steps;

  friend bool operator==(const CycleCode&, const CycleCode&) = default;
};

/// A bijection on axes {1..k}, acting on steps by relabelling dimensions.
class AxisPermutation {
 public:
  /// images[i] is the image of axis i+1; must be a permutation of 1..k.
  explicit AxisPermutation(std::vector<int> images);

  static AxisPermutation identity(int k);

  int degree() const noexcept { return static_cast<int>(images_.size()); }
  int operator()(int axis) const { return images_.at(static_cast<std::size_t>(axis - 1)); }
  EdgeStep operator()(EdgeStep s) const {
    return {static_cast<std::uint16_t>((*this)(s.dimension)), s.direction};
  }
  const std::vector<int>& images() const noexcept { return images_; }

  /// (this o other)(i) = this(other(i)).
  AxisPermutation compose(const AxisPermutation& other) const;
  AxisPermutation inverse() const;
  bool is_identity() const noexcept;

  friend bool operator==(const AxisPermutation&, const AxisPermutation&) = default;

 private:
  std::vector<int> images_;
};

/// A k x k matrix whose rows are meant to be axis permutations; m[i][j] = sigma_i(j).
///
/// Construction only checks shape and entry range so that malformed candidates
/// can still be fed to the verifier.  `is_latin()` and
/// `has_identity_first_row()` test the real invariants.
class SourceMatrix {
 public:
  SourceMatrix() = default;
  explicit SourceMatrix(std::vector<std::vector<int>> rows);

  /// The 1x1 matrix [1].
  static SourceMatrix unit();

  int size() const noexcept { return static_cast<int>(rows_.size()); }
  const std::vector<std::vector<int>>& rows() const noexcept { return rows_; }
  int at(int i, int j) const { return rows_.at(i).at(j); }  // 0-based

  bool is_latin() const noexcept;
  bool has_identity_first_row() const noexcept;
  /// Row i (0-based) as a permutation; throws if that row is not one.
  AxisPermutation row(int i) const;

  friend bool operator==(const SourceMatrix&, const SourceMatrix&) = default;

 private:
  std::vector<std::vector<int>> rows_;
};

/// A source cycle together with the Latin family that generates the rest
/// of its decomposition.
struct SourcePair {
  CycleCode cycle;
  SourceMatrix matrix;

  /// sigma_i(cycle) for every row i, in row order.
  std::vector<CycleCode> expand() const;

  friend bool operator==(const SourcePair&, const SourcePair&) = default;
};

/// Block offset patterns accepted by `compose_block_matrix`, in units of the
/// input size.
enum class BlockPattern { Swap2, Circulant3 };

/// Offsets for `pattern`: [[0,1],[1,0]] or [[0,1,2],[1,2,0],[2,0,1]].
std::vector<std::vector<int>> block_offsets(BlockPattern pattern);

Coord apply_step(const Coord& c, EdgeStep s, GraphKind kind);

/// sigma applied step by step; same directions.
CycleCode permute_cycle(const CycleCode& h, const AxisPermutation& sigma);

/// Replaces every block (r, c) of `offsets` by m + offsets[r][c] * m.size().
/// Only the two patterns from `block_offsets` are accepted.
SourceMatrix compose_block_matrix(const SourceMatrix& m,
                                  const std::vector<std::vector<int>>& offsets);
SourceMatrix compose_block_matrix(const SourceMatrix& m, BlockPattern pattern);

/// Replays `steps` from the origin and returns the final vertex.
VertexId endpoint(const Lattice& lattice, std::span<const EdgeStep> steps);

}  // namespace hdq
