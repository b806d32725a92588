#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hdq/torus3.hpp"
#include "hdq/types.hpp"

// Independent checkers.  Everything here consumes cycle codes, coordinates
// and matrices only; nothing calls back into the generators.
namespace hdq::verify {

/// One named assertion with its first counterexample when it fails.
/// Informational checks are reported but do not affect `Report::ok()`.
struct Check {
  std::string name;
  bool passed = false;
  std::string detail;
  bool informational = false;
};

struct Report {
  std::vector<Check> checks;
  /// Informational lines that are neither pass nor fail.
  std::vector<std::string> notes;

  bool ok() const noexcept;
  void add(std::string name, bool passed, std::string detail = {});
  void add_info(std::string name, bool holds, std::string detail = {});
  /// Appends `other`'s checks with `prefix` prepended to their names.
  void merge(const Report& other, const std::string& prefix = {});
  const Check* find(const std::string& name) const noexcept;

  std::string to_text() const;
  std::string to_json() const;
};

/// Result of replaying a code from the origin.
struct WalkResult {
  /// Vertices after each step; the last one is the origin iff the walk closes.
  std::vector<VertexId> vertices;
  bool closed = false;
  /// Index into `vertices` of the first vertex seen twice.
  std::optional<std::size_t> first_repeat;
  /// First step whose dimension is out of range; the walk stops there.
  std::optional<std::size_t> bad_step;

  /// Closed, no repeats, and one vertex per step of a Hamilton cycle.
  bool hamiltonian(const GraphKind& kind) const noexcept;
};

WalkResult walk(const CycleCode& code);

/// Hamiltonicity without materializing the vertex list.
Check check_hamiltonian(const CycleCode& code);

/// Each code is a Hamilton cycle of `kind`, their undirected edge sets are
/// pairwise disjoint, and together they cover every edge of `kind`.
/// With `expect_complete = false` a family smaller than a full decomposition
/// gets a coverage note instead of a failing check.  `jobs` > 1 checks
/// cycles on worker threads; the report does not depend on it.
Report check_hd(std::span<const CycleCode> codes, const GraphKind& kind, int jobs = 1,
                bool expect_complete = true);

/// The matrix is Latin with identity first row, and sigma_i(cycle) over
/// all rows is a Hamilton decomposition.
Report check_latin(const SourcePair& sp, int jobs = 1);

/// Size 4^n - 1, every element on the diagonal, pairwise distinct in every
/// coordinate.  Rotation closure (needed for a Latin result) and whether the
/// x-coordinates are exactly 0..4^n-2 are reported as informational checks.
Report check_merging_set(const MergingSet& s, int n);

/// The order in which members of `subset` appear along `cycle`, brought to a
/// canonical form invariant under rotating and reversing `cycle`.
std::vector<VertexId> necklace_order(std::span<const VertexId> cycle,
                                     const std::function<bool(VertexId)>& in_subset);

/// Brute-force census of the initial three-class colouring of G_{n,3}
/// (recomputed here from the colouring rule, not taken from torus3): every
/// class must have 4^n components, each a cycle of length 4^(2n), and the
/// components of X, Y, Z are the layers of constant z, x, y respectively.
Report oracle_initial_partition(int n);

/// Component sizes per class from the oracle colouring, for fixture tests.
struct ClassCensus {
  std::vector<std::uint64_t> x, y, z;
};
ClassCensus initial_census(int n);

}  // namespace hdq::verify
