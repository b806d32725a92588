#pragma once

#include "hdq/types.hpp"

namespace hdq {

/// Source pair of the two-cycle decomposition of G_{n,2}.
///
/// The cycle is ((1 x (4^n - 1)) 2) repeated 4^n times, all forward; the
/// matrix is [[1,2],[2,1]], so the second cycle is the same walk with the
/// axes swapped.
SourcePair hd_torus2(int n);

}  // namespace hdq
