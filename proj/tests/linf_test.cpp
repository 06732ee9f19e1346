#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <array>
#include <cmath>
#include <queue>

#include "doctest.h"
#include "rig/linf.hpp"
#include "test_util.hpp"

using namespace rig;

namespace {

Placement points(std::vector<Vec> pts) { return Placement{std::move(pts)}; }

// The five-vertex placement whose sup-norm decomposition splits into two
// bull graphs. The last point is nudged off the lattice so that every edge
// direction clears the smoothness margin.
Placement bull_pair_placement() {
  return points(
      {{1.0, -2.0}, {-2.0, 0.0}, {0.0, 1.0}, {2.0, 0.0}, {-1.0, 2.0 + 1e-6}});
}

int diameter(const Graph& g) {
  int best = 0;
  for (int s = 0; s < g.vertex_count(); ++s) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int v : g.neighbors(u))
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          q.push(v);
        }
    }
    best = std::max(best, *std::max_element(dist.begin(), dist.end()));
  }
  return best;
}

}  // namespace

TEST_CASE("monochrome decomposition splits K_5 into two bulls") {
  const Framework f(Graph::complete(5), NormedSpace::linf(2),
                    bull_pair_placement());
  const Decomposition dec = monochrome_decompose(f);
  REQUIRE(dec.parts.size() == 2);
  CHECK(dec.parts[0].size() + dec.parts[1].size() == 10);
  for (const auto& part : dec.parts) {
    const Graph sub = f.graph().spanning_subgraph(part);
    CHECK(sub.is_connected());
    CHECK(is_isomorphic(sub, Graph::bull()));
  }
  CHECK(verify_block_similarity(f));
  CHECK(rigidity_report(f).rigidity_eigenvalue ==
        doctest::Approx((5.0 - std::sqrt(13.0)) / 2.0).epsilon(1e-9));
}

TEST_CASE("block similarity holds on random sup-norm frameworks") {
  std::mt19937_64 rng(51);
  for (int d : {2, 3}) {
    for (int trial = 0; trial < 25; ++trial) {
      const Graph g = testutil::random_connected_graph(
          rng, d + 2 + (int)(rng() % 4), (int)(rng() % 7));
      const Framework f =
          testutil::random_framework(rng, g, NormedSpace::linf(d));
      CHECK(verify_block_similarity(f));
      const Decomposition dec = monochrome_decompose(f);
      // The parts partition the edge set.
      std::size_t total = 0;
      for (const auto& part : dec.parts) total += part.size();
      CHECK(total == (std::size_t)g.edge_count());
    }
  }
}

TEST_CASE("candidate enumeration matches the spanning tree pair count") {
  const Graph k4 = Graph::complete(4);
  const std::size_t pairs = spanning_tree_pairs(k4).size();

  FilterSet filters;
  const auto reduced = collect_candidates(k4, 2, filters, 1'000'000);
  CHECK(reduced.size() == pairs / 2);

  filters.symmetry_reduction = false;
  const auto ordered = collect_candidates(k4, 2, filters, 1'000'000);
  CHECK(ordered.size() == pairs);

  for (const ColorVector& colors : ordered) {
    const auto parts = parts_of_colors(k4, 2, colors);
    for (const auto& part : parts)
      CHECK(k4.spanning_subgraph(part).is_tree());
  }
}

TEST_CASE("odd-hole filter removes five-cycle parts of K_5") {
  const Graph k5 = Graph::complete(5);
  FilterSet filters;
  filters.symmetry_reduction = false;

  const auto kept = collect_candidates(k5, 2, filters, 10'000'000);
  for (const ColorVector& colors : kept)
    for (const auto& part : parts_of_colors(k5, 2, colors))
      CHECK(!is_isomorphic(k5.spanning_subgraph(part), Graph::cycle(5)));

  filters.odd_hole_free = false;
  const auto all = collect_candidates(k5, 2, filters, 10'000'000);
  CHECK(all.size() > kept.size());
  bool saw_c5 = false;
  for (const ColorVector& colors : all)
    for (const auto& part : parts_of_colors(k5, 2, colors))
      if (is_isomorphic(k5.spanning_subgraph(part), Graph::cycle(5)))
        saw_c5 = true;
  CHECK(saw_c5);
}

TEST_CASE("enumeration respects its node budget") {
  FilterSet filters;
  CHECK_THROWS_AS(collect_candidates(Graph::complete(6), 2, filters, 50),
                  BudgetExceeded);
}

TEST_CASE("realizing a decomposition reproduces the target exactly") {
  const Graph k4 = Graph::complete(4);
  FilterSet filters;
  const auto candidates = collect_candidates(k4, 2, filters, 1'000'000);
  REQUIRE(!candidates.empty());
  SearchBudget budget;
  const auto cert = realize_decomposition(k4, 2, candidates[0], budget, 7);
  REQUIRE(cert.has_value());
  const Framework f(k4, NormedSpace::linf(2), *cert);
  const Decomposition dec = monochrome_decompose(f);
  CHECK(dec.parts == parts_of_colors(k4, 2, candidates[0]));
}

TEST_CASE("an unrealizable five-cycle split is not falsely certified") {
  // C_5 / C_5 splits of K_5 admit no sup-norm placement; the search must
  // come back empty rather than invent one.
  const Graph k5 = Graph::complete(5);
  FilterSet filters;
  filters.symmetry_reduction = false;
  filters.odd_hole_free = false;
  ColorVector c5_split;
  for (const ColorVector& colors : collect_candidates(k5, 2, filters, 10'000'000)) {
    const auto parts = parts_of_colors(k5, 2, colors);
    if (is_isomorphic(k5.spanning_subgraph(parts[0]), Graph::cycle(5))) {
      c5_split = colors;
      break;
    }
  }
  REQUIRE(!c5_split.empty());
  SearchBudget small;
  small.realize_restarts = 24;
  small.realize_steps = 120;
  CHECK(!realize_decomposition(k5, 2, c5_split, small, 7).has_value());
}

TEST_CASE("exact sup-norm connectivity of K_4 in the plane") {
  SearchBudget budget;
  const LinfResult res = exact_linf_connectivity(Graph::complete(4), 2, budget, 7);
  CHECK(res.exact);
  CHECK(res.lower == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-9));
  CHECK(res.upper == doctest::Approx(res.lower).epsilon(1e-9));
  REQUIRE(res.best_decomposition.certificate.has_value());
  const Framework f(Graph::complete(4), NormedSpace::linf(2),
                    *res.best_decomposition.certificate);
  CHECK(rigidity_report(f).rigidity_eigenvalue ==
        doctest::Approx(res.lower).epsilon(1e-9));
}

TEST_CASE("infeasible decompositions give value zero") {
  // K_4 has 6 edges; three connected spanning parts would need 9.
  SearchBudget budget;
  const LinfResult res = exact_linf_connectivity(Graph::complete(4), 3, budget, 7);
  CHECK(res.exact);
  CHECK(res.lower == 0.0);
  CHECK(res.upper == 0.0);
}

TEST_CASE("two-tree specialization agrees with the exact engine") {
  SearchBudget budget;
  const LinfResult k4 = two_tree_connectivity(Graph::complete(4), budget, 7);
  CHECK(k4.exact);
  CHECK(k4.lower == doctest::Approx(2.0 - std::sqrt(2.0)).epsilon(1e-9));

  // Wheel on five vertices: hub 0 joined to the cycle 1-2-3-4.
  const Graph w5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3}, {3, 4},
                     {1, 4}});
  const LinfResult via_pairs = two_tree_connectivity(w5, budget, 7);
  const LinfResult via_engine = exact_linf_connectivity(w5, 2, budget, 7);
  CHECK(via_pairs.upper == doctest::Approx(via_engine.upper).epsilon(1e-9));

  CHECK_THROWS_AS(two_tree_connectivity(Graph::complete(5), budget, 7),
                  WrongEdgeCount);
}

TEST_CASE("double stars and the cubic root formula") {
  for (int d = 2; d <= 6; ++d) {
    const Graph t = t_d_tree(d);
    CHECK(t.vertex_count() == 2 * d);
    CHECK(t.is_tree());
    CHECK(t.degree(0) == d);
    CHECK(t.degree(1) == d);
    CHECK(t.max_degree() == d);
    const double root = grone_root(d);
    CHECK(algebraic_connectivity(t) == doctest::Approx(root).epsilon(1e-9));
    // The root really solves x^3 - (2d+2)x^2 + (d^2+2d+2)x - 2d.
    const double x = root;
    CHECK(std::abs(x * x * x - (2.0 * d + 2.0) * x * x +
                   (d * d + 2.0 * d + 2.0) * x - 2.0 * d) <= 1e-9);
    CHECK(root > 0.0);
    CHECK(root < 1.0);
  }
  CHECK_THROWS_AS(grone_root(1), std::runtime_error);
}

TEST_CASE("the catalog of degree-four trees on eight vertices") {
  std::vector<double> values;
  for (int i = 0; i < 8; ++i) {
    const Graph t = h_tree(i);
    CHECK(t.vertex_count() == 8);
    CHECK(t.is_tree());
    CHECK(t.max_degree() <= 4);
    // The double star has diameter 3; the figure's second entry has 5.
    CHECK(diameter(t) == (i == 1 ? 5 : i == 6 ? 3 : 4));
    values.push_back(algebraic_connectivity(t));
    for (int j = 0; j < i; ++j) CHECK(!is_isomorphic(h_tree(j), t));
  }
  CHECK(std::is_sorted(values.begin(), values.end()));
  CHECK(is_isomorphic(h_tree(6), t_d_tree(4)));
  CHECK(values[6] == doctest::Approx(grone_root(4)).epsilon(1e-9));
  // Only the last entry beats the double star.
  CHECK(values[5] < grone_root(4));
  CHECK(values[7] > grone_root(4));
  CHECK_THROWS_AS(h_tree(8), IndexOutOfRange);
}

TEST_CASE("diameter-four trees on eight vertices are exactly seven") {
  // Exhaustive check via Pruefer sequences: up to isomorphism there are
  // seven trees on 8 vertices with maximum degree <= 4 and diameter <= 4,
  // and they are the catalog minus its diameter-5 member.
  std::vector<Graph> reps;
  std::array<int, 6> seq{};
  while (true) {
    std::vector<int> deg(8, 1);
    for (int s : seq) ++deg[s];
    std::vector<Edge> edges;
    std::vector<int> rem = deg;
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < 8; ++v)
      if (rem[v] == 1) leaves.push(v);
    for (int s : seq) {
      const int leaf = leaves.top();
      leaves.pop();
      edges.emplace_back(leaf, s);
      rem[leaf] = 0;
      if (--rem[s] == 1) leaves.push(s);
    }
    int a = -1, b = -1;
    for (int v = 0; v < 8; ++v)
      if (rem[v] == 1) (a < 0 ? a : b) = v;
    edges.emplace_back(a, b);
    const Graph t(8, edges);
    if (t.max_degree() <= 4 && diameter(t) <= 4) {
      bool seen = false;
      for (const Graph& r : reps)
        if (is_isomorphic(r, t)) {
          seen = true;
          break;
        }
      if (!seen) reps.push_back(t);
    }
    int i = 5;
    while (i >= 0 && seq[i] == 7) seq[i--] = 0;
    if (i < 0) break;
    ++seq[i];
  }
  REQUIRE(reps.size() == 7);
  for (const Graph& r : reps) {
    int hits = 0;
    for (int i = 0; i < 8; ++i)
      if (i != 1 && is_isomorphic(r, h_tree(i))) ++hits;
    CHECK(hits == 1);
  }
}

TEST_CASE("complete graphs on 2d vertices split into d double stars") {
  for (int d = 2; d <= 4; ++d) {
    const Graph g = Graph::complete(2 * d);
    const ColorVector target = k2d_target_colors(d);
    REQUIRE((int)target.size() == g.edge_count());
    const auto parts = parts_of_colors(g, d, target);
    for (const auto& part : parts)
      CHECK(is_isomorphic(g.spanning_subgraph(part), t_d_tree(d)));

    // The structured placement classifies every edge as intended.
    const Framework f(g, NormedSpace::linf(d), k2d_structured_placement(d));
    CHECK(monochrome_decompose(f).parts == parts);

    SearchBudget budget;
    const Framework fw = k2d_decomposition_placement(d, budget, 7);
    CHECK(rigidity_report(fw).rigidity_eigenvalue ==
          doctest::Approx(grone_root(d)).epsilon(1e-9));
    CHECK(verify_block_similarity(fw));
  }
}
