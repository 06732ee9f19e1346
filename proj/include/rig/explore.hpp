#pragma once

#include "rig/bounds.hpp"

namespace rig {

/// Findings from a conjecture-exploration run. Reports are advisory: a
/// negative finding means "not found within budget", never impossibility.
struct ExploreReport {
  std::vector<std::string> lines;
  bool budget_exhausted = false;
  double best_value = 0.0;
};

/// Realizes the double-star decomposition of K_{2d} and searches for any
/// decomposition beating min_i a(G_i) over it.
ExploreReport explore_k2d(int d, const SearchBudget& budget,
                          std::uint64_t seed);

/// Searches for a partition of K_8 into four spanning trees isomorphic to
/// the only diameter-4 degree-4 tree whose algebraic connectivity exceeds
/// the double star's, then attempts to realize one.
ExploreReport explore_h8(const SearchBudget& budget, std::uint64_t seed);

/// Samples placements of K_n in l_infty^d and probes edge-redundant rigidity.
ExploreReport explore_redrig(int n, int d, const SearchBudget& budget,
                             std::uint64_t seed);

}  // namespace rig
