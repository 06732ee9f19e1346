#include "rig/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace rig {

BoundCheck make_bound_check(std::string name, double lhs, double rhs,
                            Relation relation, std::string provenance) {
  BoundCheck c;
  c.name = std::move(name);
  c.lhs = lhs;
  c.rhs = rhs;
  c.relation = relation;
  c.slack = relation == Relation::LessEq ? rhs - lhs : lhs - rhs;
  c.holds = c.slack >= -kEps;
  c.provenance = std::move(provenance);
  return c;
}

namespace {

std::optional<double> closed_form_value(const Graph& g,
                                        const NormedSpace& space) {
  if (space.kind() != NormedSpace::Kind::Lp || !space.p_is_inf())
    return std::nullopt;
  const int d = space.dim();
  const int n = g.vertex_count();
  const int m = g.edge_count();
  const bool complete = m == n * (n - 1) / 2;
  if (d == 2 && complete) {
    if (n == 4) return 2.0 - std::sqrt(2.0);
    if (n == 5) return (5.0 - std::sqrt(13.0)) / 2.0;
    if (n == 6) return 1.0;
  }
  if (d == 2 && n == 6 && m == 12 && is_isomorphic(g, Graph::octahedron()))
    return 1.0;
  if (d == 3 && complete && n == 6) return grone_root(3);
  return std::nullopt;
}

// Whether the exact engine is cheap enough to be used as a bound side.
bool exact_engine_feasible(const Graph& g, int d) {
  if (d > 3) return false;
  const double nodes = std::pow((double)d, (double)g.edge_count());
  return nodes <= 3e5;
}

}  // namespace

LowerBound best_lower_bound(const Graph& g, const NormedSpace& space,
                            const SearchBudget& budget, std::uint64_t seed) {
  if (const auto v = closed_form_value(g, space))
    return LowerBound{*v, "closed form", true};
  const bool linf =
      space.kind() == NormedSpace::Kind::Lp && space.p_is_inf();
  if (linf && exact_engine_feasible(g, space.dim())) {
    try {
      const LinfResult r =
          exact_linf_connectivity(g, space.dim(), budget, seed);
      if (r.exact) return LowerBound{r.lower, "exact engine", true};
      return LowerBound{r.lower, "search estimate", false};
    } catch (const BudgetExceeded&) {
    }
  }
  const ConnectivityEstimate est =
      estimate_alg_connectivity(g, space, budget, seed);
  return LowerBound{est.lower_bound, "search estimate", false};
}

BoundCheck general_upper_bound(const Graph& g, const NormedSpace& space,
                               const SearchBudget& budget,
                               std::uint64_t seed) {
  const int d = space.dim();
  const int k = k_dimension(space);
  if (k > 2 * d - 1) {
    std::ostringstream os;
    os << "general_upper_bound: k(X) = " << k << " exceeds 2d-1 = "
       << 2 * d - 1;
    throw HypothesisViolated(os.str());
  }
  if (g.vertex_count() < d + 1)
    throw TooSmall("general_upper_bound: n >= d+1 required");
  const LowerBound lb = best_lower_bound(g, space, budget, seed);
  const double rhs =
      gamma(space) * algebraic_connectivity(g) / (double)(2 * d - k);
  return make_bound_check(
      "general_upper_bound", lb.value, rhs, Relation::LessEq,
      "gamma-scaled Fiedler upper bound; lhs from " + lb.source);
}

BoundCheck linf_degree_bound(const Graph& g, int d, const SearchBudget& budget,
                             std::uint64_t seed) {
  const int n = g.vertex_count();
  if (n < d + 1) throw TooSmall("linf_degree_bound: n >= d+1 required");
  const LowerBound lb = best_lower_bound(g, NormedSpace::linf(d), budget, seed);
  const double rhs =
      (double)n / (n - 1.0) * std::floor((double)g.min_degree() / d);
  return make_bound_check(
      "linf_degree_bound", lb.value, rhs, Relation::LessEq,
      "minimum-degree upper bound; lhs from " + lb.source);
}

BoundCheck min_eigen_row_bound(const SymMatrix& m, int d, int n) {
  if ((int)m.order() != d * n)
    throw DimensionMismatch("min_eigen_row_bound: dn x dn matrix required");
  double scale = 1.0;
  for (std::size_t i = 0; i < m.order(); ++i)
    for (std::size_t j = 0; j < m.order(); ++j)
      scale = std::max(scale, std::abs(m(i, j)));
  for (int i = 0; i < d; ++i) {
    // z_i = all-ones on coordinate block i must lie in the kernel.
    for (std::size_t row = 0; row < m.order(); ++row) {
      double s = 0.0;
      for (int v = 0; v < n; ++v) s += m(row, (std::size_t)i * n + v);
      if (std::abs(s) > kEps * scale)
        throw KernelMismatch(
            "min_eigen_row_bound: block all-ones vector not in kernel");
    }
  }
  double min_diag = m(0, 0);
  for (std::size_t i = 1; i < m.order(); ++i)
    min_diag = std::min(min_diag, m(i, i));
  const double lhs = eigenvalue_k(m, (std::size_t)d + 1);
  const double rhs = (double)n / (n - 1.0) * min_diag;
  return make_bound_check("min_eigen_row_bound", lhs, rhs, Relation::LessEq,
                          "diagonal bound on the (d+1)-st eigenvalue");
}

BoundCheck sparse_bound(const Graph& g, int d, const SearchBudget& budget,
                        std::uint64_t seed) {
  const int n = g.vertex_count();
  if (n < d + 1) throw TooSmall("sparse_bound: n >= d+1 required");
  if (g.edge_count() > d * n)
    throw TooDense("sparse_bound: |E| <= d*n required");
  const LowerBound lb = best_lower_bound(g, NormedSpace::linf(d), budget, seed);
  const bool octa = d == 2 && n == 6 && g.edge_count() == 12 &&
                    is_isomorphic(g, Graph::octahedron());
  std::string prov = "sparse-graph upper bound of 1; lhs from " + lb.source;
  if (octa)
    prov += "; equality attained (octahedral graph, d=2)";
  else if (lb.exact && std::abs(lb.value - 1.0) <= 1e-6)
    prov += "; WARNING: equality reached off the octahedral case";
  return make_bound_check("sparse_bound", lb.value, 1.0, Relation::LessEq,
                          std::move(prov));
}

BoundCheck vertex_deletion_bound(const Graph& g, const NormedSpace& space,
                                 int v, const SearchBudget& budget,
                                 std::uint64_t seed) {
  const int d = space.dim();
  if (g.vertex_count() < d + 2)
    throw TooSmall("vertex_deletion_bound: n >= d+2 required");
  const LowerBound whole = best_lower_bound(g, space, budget, seed);
  const LowerBound rest =
      best_lower_bound(g.without_vertex(v), space, budget, derive_seed(seed, 1));
  std::string prov = "vertex deletion drops the value by at most gamma";
  if (!whole.exact || !rest.exact) prov += "; estimates_used";
  return make_bound_check("vertex_deletion_bound", rest.value,
                          whole.value - gamma(space), Relation::GreaterEq,
                          std::move(prov));
}

namespace {

RedundancyReport vertex_report_at(const Framework& f) {
  RedundancyReport rep;
  rep.rigid = rigidity_report(f).infinitesimally_rigid;
  if (!rep.rigid) {
    rep.vertex_failures.push_back(-1);  // -1 marks the undeleted framework
    return rep;
  }
  for (int v = 0; v < f.graph().vertex_count(); ++v) {
    bool ok = false;
    try {
      ok = rigidity_report(delete_vertex(f, v)).infinitesimally_rigid;
    } catch (const std::runtime_error&) {
    }
    if (!ok) rep.vertex_failures.push_back(v);
  }
  rep.rigid = rep.vertex_failures.empty();
  return rep;
}

}  // namespace

RedundancyReport vertex_redundant_test(const Graph& g, const NormedSpace& space,
                                       const SearchBudget& budget,
                                       std::uint64_t seed) {
  const int d = space.dim();
  if (g.vertex_count() < d + 2)
    throw TooSmall("vertex_redundant_test: n >= d+2 required");

  RedundancyReport best;
  best.vertex_failures.assign(1, -1);
  int best_failures = g.vertex_count() + 2;

  const auto consider = [&](const Placement& pts) {
    try {
      Framework f(g, space, pts);
      RedundancyReport rep = vertex_report_at(f);
      rep.witness = pts;
      const int fails = (int)rep.vertex_failures.size();
      if (fails < best_failures) {
        best_failures = fails;
        best = std::move(rep);
      }
    } catch (const std::runtime_error&) {
    }
  };

  const ConnectivityEstimate est =
      estimate_alg_connectivity(g, space, budget, seed);
  consider(est.witness);
  std::mt19937_64 rng(derive_seed(seed, 0x5eed));
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  for (int t = 0; t < 32 && !best.rigid; ++t) {
    Placement p;
    p.points.assign(g.vertex_count(), Vec(d));
    for (Vec& pt : p.points)
      for (double& c : pt) c = unif(rng);
    consider(p);
  }

  if (est.lower_bound > gamma(space) + kEps)
    best.certified_by = "lower bound on the connectivity exceeds gamma";
  return best;
}

RedundancyReport edge_redundant_test(const Framework& f) {
  RedundancyReport rep;
  rep.witness = f.placement();
  if (!rigidity_report(f).infinitesimally_rigid) {
    rep.rigid = false;
    return rep;
  }
  for (const Edge& e : f.graph().edges()) {
    bool ok = false;
    try {
      Framework sub(f.graph().without_edge(e), f.space(), f.placement());
      ok = rigidity_report(sub).infinitesimally_rigid;
    } catch (const std::runtime_error&) {
    }
    if (!ok) rep.edge_failures.push_back(e);
  }
  rep.rigid = rep.edge_failures.empty();
  return rep;
}

}  // namespace rig
