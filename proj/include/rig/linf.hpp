#pragma once

#include <functional>

#include "rig/framework.hpp"

namespace rig {

struct TieOnEdge : std::runtime_error {
  explicit TieOnEdge(const std::string& what) : std::runtime_error(what) {}
};
struct BudgetExceeded : std::runtime_error {
  explicit BudgetExceeded(const std::string& what) : std::runtime_error(what) {}
};

/// Ordered d-tuple of edge sets partitioning E, optionally with a placement
/// whose monochrome classification reproduces the parts exactly.
struct Decomposition {
  std::vector<std::vector<Edge>> parts;
  std::optional<Placement> certificate;
};

struct LinfResult {
  double lower = 0.0;
  double upper = 0.0;
  bool exact = false;
  Decomposition best_decomposition;
  std::vector<std::string> notes;
};

struct FilterSet {
  bool connected_spanning = true;
  bool odd_hole_free = true;  // applied only to complete graphs
  bool min_edge_count = true;
  bool symmetry_reduction = true;
};

/// Per-edge part indices (position in the graph's sorted edge list).
using ColorVector = std::vector<int>;

std::vector<std::vector<Edge>> parts_of_colors(const Graph& g, int d,
                                               const ColorVector& colors);

/// Classify each edge by its dominant facet / coordinate.
Decomposition monochrome_decompose(const Framework& f);

/// Entrywise check of L(G,p) == P (dirsum_i L(G_i)) P^T and of the eigenvalue
/// identity lambda_{d+1}(L(G,p)) == min_i lambda_2(L(G_i)).
bool verify_block_similarity(const Framework& f, double eps = kEps);

/// Visit every ordered partition of E into d parts passing the enabled
/// filters, in lexicographic order of the per-edge color vector. Returns
/// false if the callback stopped the enumeration early.
bool enumerate_candidates(const Graph& g, int d, const FilterSet& filters,
                          std::int64_t candidate_cap,
                          const std::function<bool(const ColorVector&)>& visit);

std::vector<ColorVector> collect_candidates(const Graph& g, int d,
                                            const FilterSet& filters,
                                            std::int64_t candidate_cap);

/// Randomized search for a placement whose monochrome decomposition matches
/// the target parts exactly. Absence of a result is not a proof of
/// non-realizability. An optional initial placement seeds the first restart.
std::optional<Placement> realize_decomposition(
    const Graph& g, int d, const ColorVector& target, const SearchBudget& budget,
    std::uint64_t seed, const std::optional<Placement>& hint = std::nullopt);

LinfResult exact_linf_connectivity(const Graph& g, int d,
                                   const SearchBudget& budget,
                                   std::uint64_t seed);

/// Exact value for graphs that are unions of two edge-disjoint spanning trees.
LinfResult two_tree_connectivity(const Graph& g, const SearchBudget& budget,
                                 std::uint64_t seed);

/// The double star on 2d vertices: two adjacent centers of degree d, each
/// with d-1 leaves.
Graph t_d_tree(int d);

/// Smallest root of x^3 - (2d+2)x^2 + (d^2+2d+2)x - 2d, by bisection on [0,1].
double grone_root(int d);

/// A catalog of eight trees on 8 vertices with maximum degree 4, ordered by
/// increasing algebraic connectivity; h_tree(6) == t_d_tree(4). All have
/// diameter 4 except h_tree(1), whose diameter is 5; the trees with maximum
/// degree <= 4 and diameter <= 4 are exactly the other seven.
Graph h_tree(int index);

/// A framework (K_{2d}, p) in l_infty^d whose monochrome subgraphs are all
/// isomorphic to T_d.
Framework k2d_decomposition_placement(int d, const SearchBudget& budget,
                                      std::uint64_t seed);

/// The combinatorial target behind k2d_decomposition_placement: a partition
/// of K_{2d} into d double stars.
ColorVector k2d_target_colors(int d);

/// A placement classifying K_{2d} into the k2d_target_colors partition.
Placement k2d_structured_placement(int d);

}  // namespace rig
