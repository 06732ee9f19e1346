// Acceptance gate: one PASS/FAIL line per criterion, exit code equals the
// number of failed criteria.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "rig/explore.hpp"
#include "rig/io.hpp"
#include "test_util.hpp"

using namespace rig;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Criterion {
  std::string label;
  std::function<bool(std::string&)> run;
};

bool close(double a, double b, double tol) { return std::abs(a - b) <= tol; }

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

Placement bull_pair_placement() {
  return Placement{{{1.0, -2.0},
                    {-2.0, 0.0},
                    {0.0, 1.0},
                    {2.0, 0.0},
                    {-1.0, 2.0 + 1e-6}}};
}

// --- criterion 1: closed-form spectra --------------------------------------

bool accept_closed_forms(std::string& why) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int n = 2; n <= 12; ++n) {
    if (!close(algebraic_connectivity(Graph::path(n)),
               2.0 * (1.0 - std::cos(kPi / n)), 1e-9)) {
      why = "path on " + std::to_string(n);
      return false;
    }
    if (n >= 3 && !close(algebraic_connectivity(Graph::cycle(n)),
                         2.0 * (1.0 - std::cos(2.0 * kPi / n)), 1e-9)) {
      why = "cycle on " + std::to_string(n);
      return false;
    }
    if (!close(algebraic_connectivity(Graph::complete(n)), (double)n, 1e-9)) {
      why = "complete graph on " + std::to_string(n);
      return false;
    }
  }
  const double dt = seconds_since(t0);
  if (dt >= 1.0) {
    why = "took " + std::to_string(dt) + " s (limit 1 s)";
    return false;
  }
  return true;
}

// --- criterion 2: exact sup-norm engine ------------------------------------

bool exact_value_checked(const Graph& g, int d, double expect, double limit,
                         std::string& why) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchBudget budget;
  const LinfResult res = exact_linf_connectivity(g, d, budget, 7);
  const double dt = seconds_since(t0);
  std::ostringstream tag;
  tag << "n=" << g.vertex_count() << " d=" << d;
  if (!res.exact) {
    why = tag.str() + ": not exact-flagged";
    return false;
  }
  if (!close(res.lower, expect, 1e-6) || !close(res.upper, expect, 1e-6)) {
    why = tag.str() + ": value " + std::to_string(res.lower);
    return false;
  }
  if (!res.best_decomposition.certificate.has_value()) {
    why = tag.str() + ": no realizing certificate";
    return false;
  }
  const Framework f(g, NormedSpace::linf(d),
                    *res.best_decomposition.certificate);
  if (!close(rigidity_report(f).rigidity_eigenvalue, expect, 1e-6)) {
    why = tag.str() + ": certificate eigenvalue off";
    return false;
  }
  if (dt >= limit) {
    why = tag.str() + ": took " + std::to_string(dt) + " s";
    return false;
  }
  return true;
}

bool accept_exact_engine(std::string& why) {
  return exact_value_checked(Graph::complete(4), 2, 2.0 - std::sqrt(2.0), 10.0,
                             why) &&
         exact_value_checked(Graph::complete(5), 2,
                             (5.0 - std::sqrt(13.0)) / 2.0, 10.0, why) &&
         exact_value_checked(Graph::complete(6), 2, 1.0, 10.0, why) &&
         exact_value_checked(Graph::complete(6), 3, grone_root(3), 600.0, why);
}

// --- criterion 3: the five-vertex worked example ---------------------------

bool accept_bull_pair(std::string& why) {
  const Framework f(Graph::complete(5), NormedSpace::linf(2),
                    bull_pair_placement());
  const Decomposition dec = monochrome_decompose(f);
  for (const auto& part : dec.parts)
    if (!is_isomorphic(f.graph().spanning_subgraph(part), Graph::bull())) {
      why = "a monochrome part is not a bull";
      return false;
    }
  const double eig = rigidity_report(f).rigidity_eigenvalue;
  if (!close(eig, (5.0 - std::sqrt(13.0)) / 2.0, 1e-9)) {
    why = "rigidity eigenvalue " + std::to_string(eig);
    return false;
  }
  if (!verify_block_similarity(f, 1e-9)) {
    why = "block similarity failed";
    return false;
  }
  return true;
}

// --- criterion 4: property suite over 500 random frameworks ----------------

bool framework_properties(const Framework& f, std::mt19937_64& rng,
                          std::string& why) {
  const Graph& g = f.graph();
  const NormedSpace& space = f.space();
  const int k = k_dimension(space);
  const SymMatrix l = framework_laplacian(f);
  const auto spectrum = sym_eigenvalues(l).values;

  if (spectrum.front() < -1e-9) {
    why = "Laplacian not PSD";
    return false;
  }
  for (int i = 0; i < k; ++i)
    if (spectrum[i] >= 1e-9) {
      why = "trivial-flex eigenvalue not near zero";
      return false;
    }
  if (max_abs_diff(l.matrix(), framework_laplacian_blocks(f).matrix()) >
      1e-12) {
    why = "R^T R disagrees with the block formula";
    return false;
  }

  // Random edge split: the Laplacian is additive and the rigidity eigenvalue
  // superadditive (Weyl) across the split.
  std::vector<Edge> left, right;
  for (const Edge& e : g.edges())
    (rng() & 1 ? left : right).push_back(e);
  const SymMatrix la =
      framework_laplacian(Framework(g.spanning_subgraph(left), space,
                                    f.placement()));
  const SymMatrix lb =
      framework_laplacian(Framework(g.spanning_subgraph(right), space,
                                    f.placement()));
  if (max_abs_diff(la.matrix() + lb.matrix(), l.matrix()) > 1e-12) {
    why = "Laplacian not additive over an edge split";
    return false;
  }
  const std::size_t kk = (std::size_t)k + 1;
  if (eigenvalue_k(l, kk) <
      eigenvalue_k(la, kk) + eigenvalue_k(lb, kk) - 1e-9) {
    why = "rigidity eigenvalue not superadditive";
    return false;
  }

  // Congruence by the perfect shuffle permutation preserves the spectrum.
  const Matrix p = perfect_shuffle(space.dim(), g.vertex_count());
  const auto conj = sym_eigenvalues(congruence(l, p)).values;
  for (std::size_t i = 0; i < spectrum.size(); ++i)
    if (!close(spectrum[i], conj[i], 1e-9)) {
      why = "permutation congruence changed the spectrum";
      return false;
    }

  if (space.kind() == NormedSpace::Kind::Lp && space.p_is_inf()) {
    if (!verify_block_similarity(f, 1e-9)) {
      why = "sup-norm block similarity failed";
      return false;
    }
    const bool complete =
        g.edge_count() == g.vertex_count() * (g.vertex_count() - 1) / 2;
    if (complete) {
      for (const auto& part : monochrome_decompose(f).parts) {
        const Graph sub = g.spanning_subgraph(part);
        if (find_odd_hole(sub).has_value()) {
          why = "monochrome part of a complete framework has an odd hole";
          return false;
        }
        if (space.dim() == 2 && !is_perfect_small(sub)) {
          why = "planar monochrome part of a complete framework not perfect";
          return false;
        }
      }
    }
  }
  return true;
}

bool accept_property_suite(std::string& why) {
  const std::vector<NormedSpace> spaces{
      NormedSpace::linf(2), NormedSpace::linf(3), NormedSpace::lp(1, 2),
      NormedSpace::lp(2, 2), NormedSpace::lp(1.5, 3)};
  std::mt19937_64 rng(1001);
  for (const NormedSpace& space : spaces) {
    for (int trial = 0; trial < 100; ++trial) {
      const int n = space.dim() + 2 + (int)(rng() % (7 - space.dim()));
      const Graph g = testutil::random_connected_graph(rng, n, (int)(rng() % 8));
      const Framework f = testutil::random_framework(rng, g, space);
      if (!framework_properties(f, rng, why)) {
        why = space.descriptor() + " trial " + std::to_string(trial) + ": " +
              why;
        return false;
      }
    }
  }
  return true;
}

// --- criterion 5: bound sweep ----------------------------------------------

bool bound_sweep_graph(const Graph& g, const SearchBudget& budget,
                       std::mt19937_64& rng, std::string& why) {
  const int n = g.vertex_count();
  const auto record = [&](const BoundCheck& c) {
    if (c.slack >= -1e-9) return true;
    why = c.name + " violated on n=" + std::to_string(n) +
          " m=" + std::to_string(g.edge_count()) +
          " (slack " + std::to_string(c.slack) + ")";
    return false;
  };
  const std::vector<NormedSpace> spaces{
      NormedSpace::linf(2), NormedSpace::linf(3), NormedSpace::lp(1, 2),
      NormedSpace::lp(1.5, 3)};
  const std::uint64_t seed = rng();

  for (const NormedSpace& space : spaces) {
    const int d = space.dim();
    if (n < d + 1) continue;
    if (!record(general_upper_bound(g, space, budget, seed))) return false;
    if (space.kind() == NormedSpace::Kind::Lp && space.p_is_inf()) {
      if (!record(linf_degree_bound(g, d, budget, seed))) return false;
      if (g.edge_count() <= d * n &&
          !record(sparse_bound(g, d, budget, seed)))
        return false;
    }
    if (n >= d + 2 && space.dim() == 2 &&
        !record(vertex_deletion_bound(g, space, 0, budget, seed)))
      return false;
  }

  // Per-placement checks on one random sup-norm framework of the graph.
  const Framework f =
      testutil::random_framework(rng, g, NormedSpace::linf(2));
  const SymMatrix l = framework_laplacian(f);
  const Matrix shuffle = perfect_shuffle(2, n);
  if (!record(min_eigen_row_bound(congruence(l, shuffle), 2, n))) return false;

  // Trace identity: the eigenvalues sum to the trace (= 2|E| here, since
  // every edge functional has unit dual norm and +-1 entries for sup norm).
  const auto spectrum = sym_eigenvalues(l).values;
  double sum = 0.0;
  for (double v : spectrum) sum += v;
  if (!close(sum, l.trace(), 1e-8)) {
    why = "trace identity violated";
    return false;
  }

  // Per-placement vertex deletion: the rigidity eigenvalue drops by at most
  // gamma = 1 when one vertex is removed.
  if (n >= 4) {
    const double whole = rigidity_report(f).rigidity_eigenvalue;
    const int v = (int)(rng() % (std::uint64_t)n);
    const double rest =
        rigidity_report(delete_vertex(f, v)).rigidity_eigenvalue;
    if (rest < whole - 1.0 - 1e-9) {
      why = "per-placement vertex deletion bound violated";
      return false;
    }
  }

  // Raising one scalar edge weight never lowers a graph Laplacian eigenvalue.
  ScalarWeights w, w2;
  for (const Edge& e : g.edges()) w.w[e] = w2.w[e] = 1.0;
  w2.w[g.edges()[rng() % (std::uint64_t)g.edge_count()]] += 1.5;
  const auto e1 = sym_eigenvalues(weighted_laplacian(g, w)).values;
  const auto e2 = sym_eigenvalues(weighted_laplacian(g, w2)).values;
  for (std::size_t i = 0; i < e1.size(); ++i)
    if (e2[i] < e1[i] - 1e-9) {
      why = "weight monotonicity violated";
      return false;
    }
  return true;
}

bool accept_bound_sweep(std::string& why) {
  const auto t0 = std::chrono::steady_clock::now();
  SearchBudget budget;
  budget.restarts = 8;
  budget.steps = 60;

  std::vector<Graph> corpus{
      Graph::complete(4), Graph::complete(5), Graph::complete(6),
      Graph::bull(),      Graph::octahedron(), Graph::cycle(4),
      Graph::cycle(5),    Graph::cycle(6),     Graph::path(4),
      Graph::path(5),     Graph::path(6),      t_d_tree(2),
      t_d_tree(3),        Graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4},
                                    {1, 2}, {2, 3}, {3, 4}, {1, 4}})};
  for (int i = 0; i < 8; ++i) corpus.push_back(h_tree(i));

  std::mt19937_64 rng(2002);
  for (int i = 0; i < 200; ++i) {
    const int n = 4 + (int)(rng() % 4);
    corpus.push_back(
        testutil::random_connected_graph(rng, n, (int)(rng() % 6)));
  }

  std::mt19937_64 check_rng(2003);
  for (std::size_t i = 0; i < corpus.size(); ++i)
    if (!bound_sweep_graph(corpus[i], budget, check_rng, why)) {
      why = "graph " + std::to_string(i) + ": " + why;
      return false;
    }
  const double dt = seconds_since(t0);
  if (dt >= 300.0) {
    why = "took " + std::to_string(dt) + " s (limit 300 s)";
    return false;
  }
  return true;
}

// --- criterion 6: octahedral realization and the derived 7-vertex frame ----

bool accept_octahedron(std::string& why) {
  SearchBudget budget;
  const LinfResult res =
      exact_linf_connectivity(Graph::octahedron(), 2, budget, 42);
  if (!res.exact || !close(res.lower, 1.0, 1e-9)) {
    why = "octahedral value " + std::to_string(res.lower);
    return false;
  }
  for (const auto& part : res.best_decomposition.parts)
    if (!is_isomorphic(Graph::octahedron().spanning_subgraph(part),
                       Graph::cycle(6))) {
      why = "a monochrome part is not a 6-cycle";
      return false;
    }
  if (!res.best_decomposition.certificate.has_value()) {
    why = "no realizing placement";
    return false;
  }
  const Framework f(Graph::octahedron(), NormedSpace::linf(2),
                    *res.best_decomposition.certificate);
  if (!close(rigidity_report(f).rigidity_eigenvalue, 1.0, 1e-9)) {
    why = "realized eigenvalue off";
    return false;
  }

  // Append a vertex near (0.5, 0.9) and test the complete 7-vertex framework
  // for edge-redundant rigidity; nudge the new point if a direction ties.
  const Placement base = f.placement();
  std::mt19937_64 rng(derive_seed(42, 99));
  std::uniform_real_distribution<double> nudge(-0.01, 0.01);
  for (int attempt = 0; attempt < 64; ++attempt) {
    Placement p7 = base;
    Vec extra{0.5, 0.9};
    if (attempt > 0) {
      extra[0] += nudge(rng);
      extra[1] += nudge(rng);
    }
    p7.points.push_back(extra);
    try {
      const Framework k7(Graph::complete(7), NormedSpace::linf(2), p7);
      if (edge_redundant_test(k7).rigid) return true;
    } catch (const std::runtime_error&) {
    }
  }
  why = "no edge-redundantly rigid 7-vertex frame found";
  return false;
}

// --- criterion 7: isometry scaling -----------------------------------------

bool accept_isometry_scaling(std::string& why) {
  const Matrix psi = linf_to_l1_isometry_2d();
  std::mt19937_64 rng(3003);
  int done = 0;
  for (int trial = 0; trial < 500 && done < 100; ++trial) {
    const Graph g = testutil::random_connected_graph(rng, 4 + (int)(rng() % 4),
                                                     (int)(rng() % 6));
    const Framework fi =
        testutil::random_framework(rng, g, NormedSpace::linf(2));
    Placement mapped;
    for (const Vec& pt : fi.placement().points)
      mapped.points.push_back(Vec{psi(0, 0) * pt[0] + psi(0, 1) * pt[1],
                                  psi(1, 0) * pt[0] + psi(1, 1) * pt[1]});
    std::optional<Framework> f1;
    try {
      f1.emplace(g, NormedSpace::lp(1, 2), mapped);
    } catch (const std::runtime_error&) {
      continue;
    }
    ++done;
    const double li = rigidity_report(fi).rigidity_eigenvalue;
    const double l1 = rigidity_report(*f1).rigidity_eigenvalue;
    if (!close(li, 0.5 * l1, 1e-9)) {
      why = "factor-1/2 relation violated: " + std::to_string(li) + " vs " +
            std::to_string(l1);
      return false;
    }
  }
  if (done < 100) {
    why = "only " + std::to_string(done) + " mapped frameworks validated";
    return false;
  }
  return true;
}

// --- criterion 8: negative results on K_5 ----------------------------------

bool accept_k5_negatives(std::string& why) {
  std::mt19937_64 rng(4004);
  const Graph k5 = Graph::complete(5);
  for (int trial = 0; trial < 100; ++trial) {
    const Framework f =
        testutil::random_framework(rng, k5, NormedSpace::linf(2));
    if (edge_redundant_test(f).rigid) {
      why = "a 5-vertex sup-norm framework tested edge-redundantly rigid";
      return false;
    }
    for (const auto& part : monochrome_decompose(f).parts)
      if (is_isomorphic(k5.spanning_subgraph(part), Graph::cycle(5))) {
        why = "a monochrome part realized a 5-cycle";
        return false;
      }
  }
  return true;
}

}  // namespace

int main() {
  std::vector<Criterion> criteria{
      {"closed-form path/cycle/complete spectra", accept_closed_forms},
      {"exact sup-norm engine with certificates", accept_exact_engine},
      {"five-vertex bull decomposition end-to-end", accept_bull_pair},
      {"property suite over 500 random frameworks", accept_property_suite},
      {"bound sweep over the graph corpus", accept_bound_sweep},
      {"octahedral realization and 7-vertex redundancy", accept_octahedron},
      {"planar isometry factor-1/2 scaling", accept_isometry_scaling},
      {"negative results on 5-vertex frameworks", accept_k5_negatives},
  };

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    std::string why;
    bool ok = false;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      ok = criteria[i].run(why);
    } catch (const std::exception& e) {
      why = std::string("exception: ") + e.what();
    }
    std::printf("ACCEPT %zu: %s - %s (%.1f s)%s%s\n", i + 1,
                ok ? "PASS" : "FAIL", criteria[i].label.c_str(),
                seconds_since(t0), why.empty() ? "" : " | ", why.c_str());
    if (!ok) ++failures;
  }

  // Exploration report: lower bound only, explicitly inconclusive about the
  // optimum for the 8-vertex complete graph in 4 dimensions.
  {
    SearchBudget budget;
    const ExploreReport rep = explore_k2d(4, budget, 7);
    const bool ok = rep.best_value >= grone_root(4) - 1e-9;
    std::printf("EXPLORE: %s - K_8 in 4 dimensions, lower bound %.9f "
                "(double-star value %.9f); optimality not claimed\n",
                ok ? "PASS" : "FAIL", rep.best_value, grone_root(4));
    if (!ok) ++failures;
  }

  std::printf("acceptance: %d of %zu criteria failed\n", failures,
              criteria.size());
  return failures;
}
