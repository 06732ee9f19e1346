#pragma once

#include "rig/linf.hpp"

namespace rig {

struct HypothesisViolated : std::runtime_error {
  explicit HypothesisViolated(const std::string& what)
      : std::runtime_error(what) {}
};
struct KernelMismatch : std::runtime_error {
  explicit KernelMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct TooDense : std::runtime_error {
  explicit TooDense(const std::string& what) : std::runtime_error(what) {}
};

enum class Relation { LessEq, GreaterEq };

/// One verified inequality. `slack` is signed so that the check holds exactly
/// when slack >= -kEps: rhs - lhs for <=, lhs - rhs for >=.
struct BoundCheck {
  std::string name;
  double lhs = 0.0;
  double rhs = 0.0;
  Relation relation = Relation::LessEq;
  double slack = 0.0;
  bool holds = false;
  std::string provenance;
};

BoundCheck make_bound_check(std::string name, double lhs, double rhs,
                            Relation relation, std::string provenance);

/// Best available lower bound on a(G,X): known closed form, then the exact
/// l_infty engine on small inputs, then randomized placement search. The
/// source is reported so callers can flag estimate-based checks.
struct LowerBound {
  double value = 0.0;
  std::string source;  // "closed form" | "exact engine" | "search estimate"
  bool exact = false;
};

LowerBound best_lower_bound(const Graph& g, const NormedSpace& space,
                            const SearchBudget& budget, std::uint64_t seed);

/// a(G,X) <= gamma(X) * a(G) / (2d - k(X)), valid when k(X) <= 2d-1.
BoundCheck general_upper_bound(const Graph& g, const NormedSpace& space,
                               const SearchBudget& budget = {},
                               std::uint64_t seed = 7);

/// a(G,l_infty^d) <= (n/(n-1)) * floor(min_degree / d).
BoundCheck linf_degree_bound(const Graph& g, int d,
                             const SearchBudget& budget = {},
                             std::uint64_t seed = 7);

/// lambda_{d+1}(M) <= (n/(n-1)) * min_i m_ii for dn x dn M in block form,
/// i.e. with every coordinate-block all-ones vector in the kernel.
BoundCheck min_eigen_row_bound(const SymMatrix& m, int d, int n);

/// a(G,l_infty^d) <= 1 when |E| <= d*n; equality only for d=2 and the
/// octahedral graph, which is reported in the provenance string.
BoundCheck sparse_bound(const Graph& g, int d, const SearchBudget& budget = {},
                        std::uint64_t seed = 7);

/// a(G - v, X) >= a(G,X) - gamma(X), on best available lower bounds.
BoundCheck vertex_deletion_bound(const Graph& g, const NormedSpace& space,
                                 int v, const SearchBudget& budget = {},
                                 std::uint64_t seed = 7);

/// Outcome of a redundant-rigidity probe at sampled placements. Absence of a
/// witness is not a graph-level negative unless `certified_by` says so.
struct RedundancyReport {
  bool rigid = false;  // redundantly rigid at the reported witness
  std::vector<int> vertex_failures;
  std::vector<Edge> edge_failures;
  std::optional<std::string> certified_by;
  std::optional<Placement> witness;
};

RedundancyReport vertex_redundant_test(const Graph& g, const NormedSpace& space,
                                       const SearchBudget& budget,
                                       std::uint64_t seed);

RedundancyReport edge_redundant_test(const Framework& f);

}  // namespace rig
