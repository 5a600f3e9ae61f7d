#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "covlat/lattice.hpp"

namespace covlat {

struct IsoOptions {
  std::size_t node_budget = 2000;
};

// Height- and cover-preserving bijection from a to b, or nullopt. Backtracking
// over iterated degree-refinement classes, most-constrained class first; sound
// and complete within the node budget. The returned bijection is re-verified
// cover by cover in both directions before being handed out.
// Errors: TooLarge above the node budget.
std::optional<std::vector<int>> lattice_isomorphic(const GradedLattice& a,
                                                   const GradedLattice& b,
                                                   const IsoOptions& opts = {});

}  // namespace covlat
