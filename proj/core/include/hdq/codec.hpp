#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "hdq/torus3.hpp"
#include "hdq/types.hpp"

namespace hdq {

/// Everything one HDQ1 file can hold.
///
///     HDQ1 <Q|G> <n> <k|.> <num_cycles> <cycle_len>
///     <cycle_len signed integers>            (num_cycles lines)
///     MATRIX <k>                             (optional)
///     <k integers>                           (k lines)
///     MSET <n> <count>                       (optional)
///     <x> <y> <z>                            (count lines)
///
/// For Q the header's n is m where the graph is Q_{2m}.  Tokens are separated
/// by single spaces and every line, including the last, ends in '\n'.
struct Artifact {
  GraphKind kind = GraphKind::hypercube(1);
  std::vector<CycleCode> cycles;
  std::optional<SourceMatrix> matrix;
  std::optional<MergingSet> merging_set;

  static Artifact from(const SourcePair& sp);
  static Artifact from(std::vector<CycleCode> cycles);

  /// The source pair this file describes: its one cycle and its matrix.
  /// Throws InvalidArgument if the artifact has no matrix or not exactly one cycle.
  SourcePair source_pair() const;

  friend bool operator==(const Artifact&, const Artifact&) = default;
};

/// "2 -1 -1 2 ..." with no trailing newline.
std::string format_steps(std::span<const EdgeStep> steps);

std::string encode_text(const Artifact& a);
void encode_text(const Artifact& a, std::ostream& out);

/// Throws ParseError with the offending line number.
Artifact decode_text(std::string_view text);
Artifact decode_text(std::istream& in);

/// Structured form with the same fields as the text format.
std::string encode_json(const Artifact& a);
Artifact decode_json(std::string_view text);

/// Reads a cycle in any of the notations used when writing codes by hand:
///
///  - whitespace- or comma-separated tokens, each `d`, `-d`, `d'` or `~d`;
///  - a compact string with no separators, one digit per step, where `~`
///    before a digit, `'` after it, or `\overline{...}` around a run marks
///    backward steps, e.g. "2\overline{11}22" or "2~1~122".
///
/// Dimensions are checked against `kind`.  Throws ParseError.
CycleCode parse_overline(std::string_view text, const GraphKind& kind);

/// Writes an HDQ1 file incrementally, so cycles never need to be held in
/// memory as a whole.  Call order mirrors the file layout; out-of-order
/// calls or a wrong number of steps throw InvalidArgument.
class StreamWriter {
 public:
  StreamWriter(std::ostream& out, const GraphKind& kind, std::uint64_t num_cycles,
               std::uint64_t cycle_len);

  void put(EdgeStep s);
  /// Ends the current cycle line; it must hold exactly cycle_len steps.
  void end_cycle();

  template <typename Range>
  void write_cycle(const Range& steps) {
    for (const EdgeStep& s : steps) put(s);
    end_cycle();
  }

  void write_matrix(const SourceMatrix& m);
  void write_merging_set(const MergingSet& s);
  /// Checks that every announced cycle was written and flushes.
  void finish();

 private:
  void require_cycles_done() const;

  std::ostream& out_;
  GraphKind kind_;
  std::uint64_t num_cycles_;
  std::uint64_t cycle_len_;
  std::uint64_t cycles_done_ = 0;
  std::uint64_t in_cycle_ = 0;
  int section_ = 0;  // 0 cycles, 1 matrix written, 2 merging set written
};

}  // namespace hdq
