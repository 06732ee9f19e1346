#include "rig/explore.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace rig {

namespace {

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

ExploreReport explore_k2d(int d, const SearchBudget& budget,
                          std::uint64_t seed) {
  ExploreReport rep;
  const double target = grone_root(d);
  const Framework fw = k2d_decomposition_placement(d, budget, seed);
  const double eig = rigidity_report(fw).rigidity_eigenvalue;
  rep.lines.push_back("double-star decomposition of K_" + std::to_string(2 * d) +
                      " realized; rigidity eigenvalue " + fmt(eig));
  rep.lines.push_back("lower bound a(K_" + std::to_string(2 * d) +
                      ", l_inf^" + std::to_string(d) + ") >= " + fmt(eig) +
                      " (double-star value " + fmt(target) + ")");
  rep.best_value = eig;

  const ConnectivityEstimate est = estimate_alg_connectivity(
      fw.graph(), NormedSpace::linf(d), budget, derive_seed(seed, 1));
  rep.best_value = std::max(rep.best_value, est.lower_bound);
  if (est.lower_bound > target + kEps) {
    rep.lines.push_back("placement search EXCEEDED the double-star value: " +
                        fmt(est.lower_bound));
  } else {
    rep.lines.push_back("placement search reached " + fmt(est.lower_bound) +
                        ", not above the double-star value; no conclusion");
  }
  return rep;
}

ExploreReport explore_h8(const SearchBudget& budget, std::uint64_t seed) {
  ExploreReport rep;
  const Graph g = Graph::complete(8);
  const Graph tree = h_tree(7);

  // Distinct edge sets of spanning embeddings of the tree in K_8.
  std::set<std::uint64_t> mask_set;
  std::vector<int> perm(8);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    std::uint64_t mask = 0;
    for (const Edge& e : tree.edges())
      mask |= 1ull << g.edge_index(Edge(perm[e.u], perm[e.v]));
    mask_set.insert(mask);
  } while (std::next_permutation(perm.begin(), perm.end()));
  std::vector<std::uint64_t> masks(mask_set.begin(), mask_set.end());
  rep.lines.push_back("distinct spanning embeddings of the target tree: " +
                      std::to_string(masks.size()));

  // Exact-cover search for four pairwise disjoint embeddings covering K_8,
  // branching on the lowest uncovered edge via per-edge mask buckets.
  std::vector<std::vector<std::uint64_t>> by_edge(g.edge_count());
  for (std::uint64_t m : masks)
    for (int e = 0; e < g.edge_count(); ++e)
      if (m & (1ull << e)) by_edge[e].push_back(m);
  const std::uint64_t full = (1ull << g.edge_count()) - 1;
  std::vector<std::uint64_t> chosen;
  std::int64_t nodes = 0;
  bool exhausted_cleanly = true;
  std::function<bool(std::uint64_t)> cover = [&](std::uint64_t used) -> bool {
    if (used == full) return true;
    if (++nodes > budget.candidate_cap) {
      exhausted_cleanly = false;
      return false;
    }
    int pivot = 0;
    while (used & (1ull << pivot)) ++pivot;
    for (std::uint64_t m : by_edge[pivot]) {
      if (m & used) continue;
      chosen.push_back(m);
      if (cover(used | m)) return true;
      chosen.pop_back();
      if (!exhausted_cleanly) return false;
    }
    return false;
  };
  const bool found = cover(0);

  if (!found) {
    rep.budget_exhausted = !exhausted_cleanly;
    rep.lines.push_back(exhausted_cleanly
                            ? "exhaustive pass found no partition of K_8 into "
                              "four copies of the target tree"
                            : "packing search budget exhausted; no conclusion");
    return rep;
  }

  ColorVector colors(g.edge_count(), 0);
  for (int c = 0; c < 4; ++c)
    for (int e = 0; e < g.edge_count(); ++e)
      if (chosen[c] & (1ull << e)) colors[e] = c;
  rep.lines.push_back("combinatorial partition into four copies found");
  rep.best_value = algebraic_connectivity(tree);

  const std::optional<Placement> cert =
      realize_decomposition(g, 4, colors, budget, seed);
  if (cert) {
    Framework f(g, NormedSpace::linf(4), *cert);
    const double eig = rigidity_report(f).rigidity_eigenvalue;
    rep.lines.push_back("partition REALIZED; rigidity eigenvalue " + fmt(eig));
    rep.best_value = std::max(rep.best_value, eig);
  } else {
    rep.budget_exhausted = true;
    rep.lines.push_back(
        "partition not realized within budget; no conclusion about its "
        "realizability");
  }
  return rep;
}

ExploreReport explore_redrig(int n, int d, const SearchBudget& budget,
                             std::uint64_t seed) {
  ExploreReport rep;
  const Graph g = Graph::complete(n);
  const NormedSpace space = NormedSpace::linf(d);

  const ConnectivityEstimate est =
      estimate_alg_connectivity(g, space, budget, seed);
  rep.best_value = est.lower_bound;
  rep.lines.push_back("a(K_" + std::to_string(n) + ", l_inf^" +
                      std::to_string(d) + ") >= " + fmt(est.lower_bound));

  std::mt19937_64 rng(derive_seed(seed, 0xed6e));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  int tested = 0;
  for (int t = 0; t < std::max(8, budget.restarts) && tested < 100; ++t) {
    Placement p;
    if (t == 0) {
      p = est.witness;
    } else {
      p.points.assign(n, Vec(d));
      for (Vec& pt : p.points)
        for (double& c : pt) c = unif(rng);
    }
    try {
      Framework f(g, space, p);
      ++tested;
      const RedundancyReport r = edge_redundant_test(f);
      if (r.rigid) {
        rep.lines.push_back("edge-redundantly rigid witness found after " +
                            std::to_string(tested) + " sampled placements");
        return rep;
      }
    } catch (const std::runtime_error&) {
    }
  }
  rep.budget_exhausted = true;
  rep.lines.push_back("no edge-redundant witness in " + std::to_string(tested) +
                      " sampled placements; no conclusion");
  return rep;
}

}  // namespace rig
