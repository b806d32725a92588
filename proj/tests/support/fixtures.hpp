#pragma once

#include <array>
#include <cstdint>
#include <random>
#include <set>
#include <vector>

#include "hdq/codec.hpp"
#include "hdq/types.hpp"

namespace fixtures {

/// A Hamilton cycle of Q_4 that is not part of any generated family.
inline hdq::CycleCode sample_q4_cycle() {
  hdq::CycleCode c{hdq::GraphKind::hypercube(2), {}};
  for (int v : {2, -1, -1, 2, 2, -1, -1, -1, -2, 1, 1, -2, -2, 1, 1, 1}) {
    c.steps.push_back(hdq::EdgeStep::from_signed(v));
  }
  return c;
}

/// A syntactically valid artifact with arbitrary content; the codec does
/// not care whether the steps form cycles.
inline hdq::Artifact random_artifact(std::mt19937& rng) {
  hdq::Artifact a;
  switch (rng() % 3) {
    case 0:
      a.kind = hdq::GraphKind::hypercube(1 + static_cast<int>(rng() % 3));
      break;
    case 1:
      a.kind = hdq::GraphKind::torus(1 + static_cast<int>(rng() % 2), 2);
      break;
    default:
      a.kind = hdq::GraphKind::torus(1, 3);
      break;
  }
  const auto cycles = rng() % static_cast<unsigned>(a.kind.axes() + 1);
  const auto len = 1 + rng() % 40;
  for (std::size_t i = 0; i < cycles; ++i) {
    hdq::CycleCode c{a.kind, {}};
    for (std::size_t j = 0; j < len; ++j) {
      const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(a.kind.axes()));
      c.steps.push_back(rng() % 2 ? hdq::EdgeStep::forward(d) : hdq::EdgeStep::backward(d));
    }
    a.cycles.push_back(std::move(c));
  }
  if (rng() % 2) {
    std::vector<std::vector<int>> rows;
    const int k = 1 + static_cast<int>(rng() % 4);
    for (int i = 0; i < k; ++i) {
      auto& row = rows.emplace_back();
      for (int j = 0; j < k; ++j) row.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(k)));
    }
    a.matrix = hdq::SourceMatrix(rows);
  }
  if (rng() % 2) {
    hdq::MergingSet s{1 + static_cast<int>(rng() % 2), {}};
    const auto count = rng() % 4;
    for (std::size_t i = 0; i < count; ++i) s.elements.push_back({rng() % 16, rng() % 16, rng() % 16});
    a.merging_set = s;
  }
  return a;
}

using Triple = std::array<std::uint64_t, 3>;
using TripleSet = std::set<Triple>;

/// Every 3-element set of points with x+y+z = 3 (mod 4) that is pairwise
/// distinct in each coordinate.
inline std::vector<TripleSet> all_merging_sets_n1() {
  std::vector<Triple> diagonal;
  for (std::uint64_t x = 0; x < 4; ++x) {
    for (std::uint64_t y = 0; y < 4; ++y) {
      for (std::uint64_t z = 0; z < 4; ++z) {
        if ((x + y + z) % 4 == 3) diagonal.push_back({x, y, z});
      }
    }
  }
  std::vector<TripleSet> out;
  for (std::size_t a = 0; a < diagonal.size(); ++a) {
    for (std::size_t b = a + 1; b < diagonal.size(); ++b) {
      for (std::size_t c = b + 1; c < diagonal.size(); ++c) {
        bool ok = true;
        for (std::size_t i = 0; i < 3; ++i) {
          const auto u = diagonal[a][i], v = diagonal[b][i], w = diagonal[c][i];
          ok = ok && u != v && v != w && u != w;
        }
        if (ok) out.push_back({diagonal[a], diagonal[b], diagonal[c]});
      }
    }
  }
  return out;
}

inline bool rotation_closed(const TripleSet& s) {
  for (const auto& p : s) {
    if (!s.count({p[2], p[0], p[1]})) return false;
  }
  return true;
}

}  // namespace fixtures
