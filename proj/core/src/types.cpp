#include "hdq/types.hpp"

#include <algorithm>
#include <numeric>

#include "hdq/error.hpp"

namespace hdq {

namespace {

constexpr int kMaxPackedBits = 62;

void check_packable(int bits_per_axis, int axes) {
  if (bits_per_axis * axes > kMaxPackedBits) {
    throw InvalidArgument("graph too large to index: " + std::to_string(bits_per_axis * axes) +
                          " label bits");
  }
}

bool is_permutation_of_1_to_k(const std::vector<int>& v) {
  std::vector<char> seen(v.size() + 1, 0);
  for (int x : v) {
    if (x < 1 || x > static_cast<int>(v.size()) || seen[static_cast<std::size_t>(x)]) return false;
    seen[static_cast<std::size_t>(x)] = 1;
  }
  return true;
}

}  // namespace

GraphKind GraphKind::hypercube(int m) {
  if (m < 1) throw InvalidArgument("hypercube parameter must be >= 1");
  check_packable(2, m);
  return GraphKind(Family::Hypercube, m, 0);
}

GraphKind GraphKind::torus(int n, int k) {
  if (n < 1) throw InvalidArgument("torus n must be >= 1");
  if (k != 2 && k != 3) throw InvalidArgument("torus k must be 2 or 3");
  check_packable(2 * n, k);
  return GraphKind(Family::Torus, n, k);
}

std::string GraphKind::to_string() const {
  if (family_ == Family::Hypercube) return "Q_" + std::to_string(2 * n_);
  return "G_{" + std::to_string(n_) + "," + std::to_string(k_) + "}";
}

EdgeStep EdgeStep::from_signed(int value) {
  if (value == 0) throw InvalidArgument("edge step 0 has no dimension");
  if (value > 0xFFFF || value < -0xFFFF) throw InvalidArgument("edge step dimension too large");
  return value > 0 ? forward(value) : backward(-value);
}

Lattice::Lattice(GraphKind kind)
    : kind_(kind), bits_(kind.bits_per_axis()), mask_(kind.modulus() - 1) {}

VertexId Lattice::pack(const Coord& c) const {
  if (static_cast<int>(c.digits.size()) != kind_.axes()) {
    throw InvalidArgument("coordinate has " + std::to_string(c.digits.size()) + " digits, " +
                          kind_.to_string() + " needs " + std::to_string(kind_.axes()));
  }
  VertexId v = 0;
  for (int a = 0; a < kind_.axes(); ++a) {
    const auto d = c.digits[static_cast<std::size_t>(a)];
    if (d > mask_) throw InvalidArgument("coordinate digit out of range");
    v = with_digit(v, a, d);
  }
  return v;
}

Coord Lattice::unpack(VertexId v) const {
  Coord c;
  c.digits.resize(static_cast<std::size_t>(kind_.axes()));
  for (int a = 0; a < kind_.axes(); ++a) c.digits[static_cast<std::size_t>(a)] = digit(v, a);
  return c;
}

void Lattice::check_step(EdgeStep s) const {
  if (!valid_step(s)) {
    throw InvalidArgument("dimension " + std::to_string(s.dimension) + " out of range for " +
                          kind_.to_string());
  }
}

AxisPermutation::AxisPermutation(std::vector<int> images) : images_(std::move(images)) {
  if (images_.empty() || !is_permutation_of_1_to_k(images_)) {
    throw InvalidArgument("not a permutation of 1..k");
  }
}

AxisPermutation AxisPermutation::identity(int k) {
  std::vector<int> v(static_cast<std::size_t>(k));
  std::iota(v.begin(), v.end(), 1);
  return AxisPermutation(std::move(v));
}

AxisPermutation AxisPermutation::compose(const AxisPermutation& other) const {
  if (other.degree() != degree()) throw InvalidArgument("permutation degree mismatch");
  std::vector<int> v(images_.size());
  for (int i = 1; i <= degree(); ++i) v[static_cast<std::size_t>(i - 1)] = (*this)(other(i));
  return AxisPermutation(std::move(v));
}

AxisPermutation AxisPermutation::inverse() const {
  std::vector<int> v(images_.size());
  for (int i = 1; i <= degree(); ++i) v[static_cast<std::size_t>((*this)(i) - 1)] = i;
  return AxisPermutation(std::move(v));
}

bool AxisPermutation::is_identity() const noexcept {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (images_[i] != static_cast<int>(i) + 1) return false;
  }
  return true;
}

SourceMatrix::SourceMatrix(std::vector<std::vector<int>> rows) : rows_(std::move(rows)) {
  const auto k = rows_.size();
  if (k == 0) throw InvalidArgument("source matrix is empty");
  for (const auto& r : rows_) {
    if (r.size() != k) throw InvalidArgument("source matrix is not square");
    for (int x : r) {
      if (x < 1 || x > static_cast<int>(k)) throw InvalidArgument("source matrix entry out of range");
    }
  }
}

SourceMatrix SourceMatrix::unit() { return SourceMatrix(std::vector<std::vector<int>>{{1}}); }

bool SourceMatrix::is_latin() const noexcept {
  if (rows_.empty()) return false;
  for (const auto& r : rows_) {
    if (!is_permutation_of_1_to_k(r)) return false;
  }
  for (std::size_t j = 0; j < rows_.size(); ++j) {
    std::vector<int> col;
    col.reserve(rows_.size());
    for (const auto& r : rows_) col.push_back(r[j]);
    if (!is_permutation_of_1_to_k(col)) return false;
  }
  return true;
}

bool SourceMatrix::has_identity_first_row() const noexcept {
  if (rows_.empty()) return false;
  for (std::size_t j = 0; j < rows_[0].size(); ++j) {
    if (rows_[0][j] != static_cast<int>(j) + 1) return false;
  }
  return true;
}

AxisPermutation SourceMatrix::row(int i) const { return AxisPermutation(rows_.at(static_cast<std::size_t>(i))); }

std::vector<CycleCode> SourcePair::expand() const {
  std::vector<CycleCode> out;
  out.reserve(static_cast<std::size_t>(matrix.size()));
  for (int i = 0; i < matrix.size(); ++i) out.push_back(permute_cycle(cycle, matrix.row(i)));
  return out;
}

std::vector<std::vector<int>> block_offsets(BlockPattern pattern) {
  switch (pattern) {
    case BlockPattern::Swap2:
      return {{0, 1}, {1, 0}};
    case BlockPattern::Circulant3:
      return {{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  }
  throw InvalidArgument("unknown block pattern");
}

Coord apply_step(const Coord& c, EdgeStep s, GraphKind kind) {
  const Lattice lattice(kind);
  lattice.check_step(s);
  return lattice.unpack(lattice.step(lattice.pack(c), s));
}

CycleCode permute_cycle(const CycleCode& h, const AxisPermutation& sigma) {
  if (sigma.degree() != h.kind.axes()) {
    throw InvalidArgument("permutation degree " + std::to_string(sigma.degree()) +
                          " does not match " + std::to_string(h.kind.axes()) + " axes");
  }
  CycleCode out{h.kind, {}};
  out.steps.reserve(h.steps.size());
  for (const auto& s : h.steps) out.steps.push_back(sigma(s));
  return out;
}

SourceMatrix compose_block_matrix(const SourceMatrix& m,
                                  const std::vector<std::vector<int>>& offsets) {
  if (offsets != block_offsets(BlockPattern::Swap2) &&
      offsets != block_offsets(BlockPattern::Circulant3)) {
    throw InvalidArgument("unsupported block pattern");
  }
  if (!m.is_latin() || !m.has_identity_first_row()) {
    throw InvalidArgument("block composition needs a Latin matrix with identity first row");
  }
  const int n = m.size();
  const int blocks = static_cast<int>(offsets.size());
  std::vector<std::vector<int>> out(static_cast<std::size_t>(n * blocks),
                                    std::vector<int>(static_cast<std::size_t>(n * blocks)));
  for (int br = 0; br < blocks; ++br) {
    for (int bc = 0; bc < blocks; ++bc) {
      const int shift = offsets[static_cast<std::size_t>(br)][static_cast<std::size_t>(bc)] * n;
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          out[static_cast<std::size_t>(br * n + i)][static_cast<std::size_t>(bc * n + j)] =
              m.at(i, j) + shift;
        }
      }
    }
  }
  return SourceMatrix(std::move(out));
}

SourceMatrix compose_block_matrix(const SourceMatrix& m, BlockPattern pattern) {
  return compose_block_matrix(m, block_offsets(pattern));
}

VertexId endpoint(const Lattice& lattice, std::span<const EdgeStep> steps) {
  VertexId v = 0;
  for (const auto& s : steps) v = lattice.step(v, s);
  return v;
}

}  // namespace hdq
