#include "rig/linf.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <sstream>
#include <unordered_map>

namespace rig {

std::vector<std::vector<Edge>> parts_of_colors(const Graph& g, int d,
                                               const ColorVector& colors) {
  if ((int)colors.size() != g.edge_count())
    throw DimensionMismatch("parts_of_colors: one color per edge required");
  std::vector<std::vector<Edge>> parts(d);
  for (std::size_t e = 0; e < colors.size(); ++e) {
    if (colors[e] < 0 || colors[e] >= d)
      throw IndexOutOfRange("parts_of_colors: color out of range");
    parts[colors[e]].push_back(g.edges()[e]);
  }
  return parts;
}

Decomposition monochrome_decompose(const Framework& f) {
  if (f.space().kind() != NormedSpace::Kind::Lp || !f.space().p_is_inf())
    throw std::invalid_argument("monochrome_decompose: l_infty space required");
  const int d = f.space().dim();
  ColorVector colors(f.graph().edge_count());
  for (std::size_t e = 0; e < colors.size(); ++e) {
    const Vec& phi = f.edge_functionals()[e].row;
    int c = -1;
    for (int i = 0; i < d; ++i)
      if (phi[i] != 0.0) c = i;
    colors[e] = c;
  }
  Decomposition dec;
  dec.parts = parts_of_colors(f.graph(), d, colors);
  dec.certificate = f.placement();
  return dec;
}

bool verify_block_similarity(const Framework& f, double eps) {
  const int d = f.space().dim();
  const int n = f.graph().vertex_count();
  const Decomposition dec = monochrome_decompose(f);

  Matrix direct_sum((std::size_t)d * n, (std::size_t)d * n);
  std::vector<double> part_lambda2;
  for (int i = 0; i < d; ++i) {
    const Graph gi = f.graph().spanning_subgraph(dec.parts[i]);
    const SymMatrix li = laplacian(gi);
    for (int u = 0; u < n; ++u)
      for (int v = 0; v < n; ++v)
        direct_sum((std::size_t)i * n + u, (std::size_t)i * n + v) = li(u, v);
    part_lambda2.push_back(eigenvalue_k(li, 2));
  }

  const Matrix p = perfect_shuffle((std::size_t)d, (std::size_t)n);
  const Matrix conjugated = p * direct_sum * p.transpose();
  if (max_abs_diff(conjugated, framework_laplacian(f).matrix()) > eps)
    return false;

  const double rig_eig = eigenvalue_k(framework_laplacian(f), (std::size_t)d + 1);
  const double min_l2 = *std::min_element(part_lambda2.begin(), part_lambda2.end());
  return std::abs(rig_eig - min_l2) <= std::max(eps, 1e-7);
}

namespace {

struct EnumState {
  const Graph* g = nullptr;
  int d = 0;
  int n = 0;
  int m = 0;
  FilterSet filters;
  bool apply_odd_hole = false;
  std::int64_t nodes = 0;
  std::int64_t cap = 0;
  ColorVector colors;
  std::vector<int> part_size;
  const std::function<bool(const ColorVector&)>* visit = nullptr;
  bool stopped = false;
};

bool leaf_passes(EnumState& st) {
  for (int c = 0; c < st.d; ++c) {
    std::vector<Edge> part;
    for (int e = 0; e < st.m; ++e)
      if (st.colors[e] == c) part.push_back(st.g->edges()[e]);
    const Graph gc = st.g->spanning_subgraph(part);
    if (st.filters.connected_spanning && !gc.is_connected()) return false;
    if (st.apply_odd_hole && find_odd_hole(gc)) return false;
  }
  return true;
}

void enum_rec(EnumState& st, int e, int used) {
  if (st.stopped) return;
  if (++st.nodes > st.cap)
    throw BudgetExceeded("enumerate_candidates: node budget exceeded");
  if (e == st.m) {
    if (st.filters.symmetry_reduction && used < st.d) return;
    if (leaf_passes(st) && !(*st.visit)(st.colors)) st.stopped = true;
    return;
  }
  const int remaining = st.m - e;
  if (st.filters.min_edge_count) {
    std::int64_t deficit = 0;
    for (int c = 0; c < st.d; ++c)
      deficit += std::max(0, (st.n - 1) - st.part_size[c]);
    if (deficit > remaining) return;
  }
  const int limit = st.filters.symmetry_reduction ? std::min(st.d - 1, used)
                                                  : st.d - 1;
  for (int c = 0; c <= limit && !st.stopped; ++c) {
    st.colors[e] = c;
    ++st.part_size[c];
    enum_rec(st, e + 1, std::max(used, c + 1));
    --st.part_size[c];
  }
  st.colors[e] = -1;
}

}  // namespace

bool enumerate_candidates(const Graph& g, int d, const FilterSet& filters,
                          std::int64_t candidate_cap,
                          const std::function<bool(const ColorVector&)>& visit) {
  if (d < 1) throw std::invalid_argument("enumerate_candidates: d >= 1 required");
  EnumState st;
  st.g = &g;
  st.d = d;
  st.n = g.vertex_count();
  st.m = g.edge_count();
  st.filters = filters;
  st.apply_odd_hole = filters.odd_hole_free && st.n <= 12 &&
                      st.m == st.n * (st.n - 1) / 2;
  st.cap = candidate_cap;
  st.colors.assign(st.m, -1);
  st.part_size.assign(d, 0);
  st.visit = &visit;
  enum_rec(st, 0, 0);
  return !st.stopped;
}

std::vector<ColorVector> collect_candidates(const Graph& g, int d,
                                            const FilterSet& filters,
                                            std::int64_t candidate_cap) {
  std::vector<ColorVector> out;
  enumerate_candidates(g, d, filters, candidate_cap,
                       [&](const ColorVector& c) {
                         out.push_back(c);
                         return true;
                       });
  return out;
}

namespace {

// Stricter relative margin than framework validation, so that a placement
// accepted by the search always builds a valid framework.
constexpr double kSearchMargin = 1e-5;

// Per-edge dominant coordinate; -1 for an unusable (tied or zero) direction.
ColorVector classify(const Graph& g, int d, const Placement& pts) {
  ColorVector c(g.edge_count(), -1);
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    const Vec diff = sub(pts.points[ed.u], pts.points[ed.v]);
    int best = 0;
    double b1 = -1.0, b2 = -1.0;
    for (int i = 0; i < d; ++i) {
      const double a = std::abs(diff[i]);
      if (a > b1) {
        b2 = b1;
        b1 = a;
        best = i;
      } else if (a > b2) {
        b2 = a;
      }
    }
    if (b1 > 0.0 && b1 - b2 > kSearchMargin * b1) c[e] = best;
  }
  return c;
}

// Misclassification score minimized over part relabelings. Fills `perm` with
// the best map from classified color to target color.
int match_score(const ColorVector& classified, const ColorVector& target, int d,
                std::vector<int>& perm) {
  const int m = (int)classified.size();
  std::vector<std::vector<int>> count((std::size_t)d, std::vector<int>(d, 0));
  for (int e = 0; e < m; ++e)
    if (classified[e] >= 0) ++count[classified[e]][target[e]];
  perm.resize(d);
  std::iota(perm.begin(), perm.end(), 0);
  if (d <= 6) {
    std::vector<int> p(perm);
    int best = -1;
    do {
      int hit = 0;
      for (int i = 0; i < d; ++i) hit += count[i][p[i]];
      if (hit > best) {
        best = hit;
        perm = p;
      }
    } while (std::next_permutation(p.begin(), p.end()));
    return m - best;  // tied edges never contribute to `best`
  }
  int hit = 0;
  for (int i = 0; i < d; ++i) hit += count[i][i];
  return m - hit;
}

Placement permute_coordinates(const Placement& pts, const std::vector<int>& perm) {
  Placement out;
  out.points.reserve(pts.points.size());
  for (const Vec& p : pts.points) {
    Vec q(p.size());
    for (std::size_t i = 0; i < p.size(); ++i) q[perm[i]] = p[i];
    out.points.push_back(std::move(q));
  }
  return out;
}

}  // namespace

std::optional<Placement> realize_decomposition(
    const Graph& g, int d, const ColorVector& target, const SearchBudget& budget,
    std::uint64_t seed, const std::optional<Placement>& hint) {
  if ((int)target.size() != g.edge_count())
    throw DimensionMismatch("realize_decomposition: one color per edge required");
  for (int c : target)
    if (c < 0 || c >= d)
      throw IndexOutOfRange("realize_decomposition: color out of range");
  const int n = g.vertex_count();
  const int m = g.edge_count();

  const auto finish = [&](const Placement& pts,
                          const std::vector<int>& perm) -> std::optional<Placement> {
    const Placement fixed = permute_coordinates(pts, perm);
    try {
      Framework f(g, NormedSpace::linf(d), fixed);
      const Decomposition dec = monochrome_decompose(f);
      if (dec.parts == parts_of_colors(g, d, target)) return fixed;
    } catch (const std::runtime_error&) {
    }
    return std::nullopt;
  };

  std::vector<int> perm;
  for (int restart = 0; restart < budget.realize_restarts; ++restart) {
    std::mt19937_64 rng(derive_seed(seed, (std::uint64_t)restart));
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    Placement p;
    if (restart == 0 && hint) {
      p = *hint;
    } else {
      p.points.assign(n, Vec(d));
      for (Vec& pt : p.points)
        for (double& c : pt) c = 2.0 * unif(rng) - 1.0;
    }
    int score = match_score(classify(g, d, p), target, d, perm);
    if (score == 0)
      if (auto done = finish(p, perm)) return done;

    for (int step = 0; step < budget.realize_steps && score > 0; ++step) {
      Placement q = p;
      if (unif(rng) < 0.7) {
        // Repair: rewrite one endpoint coordinate of a mismatched edge so
        // the needed coordinate of the edge vector becomes dominant.
        std::vector<int> inv(d);
        for (int i = 0; i < d; ++i) inv[perm[i]] = i;
        const ColorVector cls = classify(g, d, p);
        std::vector<int> bad;
        for (int e = 0; e < m; ++e)
          if (cls[e] < 0 || perm[cls[e]] != target[e]) bad.push_back(e);
        if (bad.empty()) break;
        const int e = bad[rng() % bad.size()];
        const Edge& ed = g.edges()[e];
        const int want = inv[target[e]];
        const int mover = (rng() % 2 == 0) ? ed.u : ed.v;
        const int other = (mover == ed.u) ? ed.v : ed.u;
        double span = 0.0;
        for (int i = 0; i < d; ++i)
          if (i != want)
            span = std::max(span,
                            std::abs(q.points[ed.u][i] - q.points[ed.v][i]));
        const double sign = (rng() % 2 == 0) ? 1.0 : -1.0;
        q.points[mover][want] =
            q.points[other][want] + sign * (span * (1.1 + 0.6 * unif(rng)) + 0.05);
      } else {
        const int v = (int)(rng() % (std::uint64_t)n);
        const int c = (int)(rng() % (std::uint64_t)d);
        const double scale = std::pow(10.0, -3.0 * unif(rng));
        q.points[v][c] += scale * (2.0 * unif(rng) - 1.0);
      }
      std::vector<int> qperm;
      const int qscore = match_score(classify(g, d, q), target, d, qperm);
      if (qscore < score || (qscore == score && unif(rng) < 0.3)) {
        p = std::move(q);
        score = qscore;
        perm = std::move(qperm);
        if (score == 0)
          if (auto done = finish(p, perm)) return done;
      }
    }
  }
  return std::nullopt;
}

namespace {

double part_lambda2(const Graph& g, const std::vector<Edge>& part) {
  const Graph sub = g.spanning_subgraph(part);
  if (!sub.is_connected()) return 0.0;
  return algebraic_connectivity(sub);
}

double candidate_score(const Graph& g, int d, const ColorVector& colors,
                       std::unordered_map<std::uint64_t, double>* memo) {
  double worst = std::numeric_limits<double>::infinity();
  for (int c = 0; c < d; ++c) {
    std::vector<Edge> part;
    std::uint64_t mask = 0;
    for (std::size_t e = 0; e < colors.size(); ++e)
      if (colors[e] == c) {
        part.push_back(g.edges()[e]);
        if (memo) mask |= 1ull << e;
      }
    double val;
    if (memo) {
      auto it = memo->find(mask);
      if (it != memo->end()) {
        val = it->second;
      } else {
        val = part_lambda2(g, part);
        memo->emplace(mask, val);
      }
    } else {
      val = part_lambda2(g, part);
    }
    worst = std::min(worst, val);
  }
  return worst;
}

std::string format_value(double v) {
  std::ostringstream os;
  os.precision(12);
  os << v;
  return os.str();
}

}  // namespace

LinfResult exact_linf_connectivity(const Graph& g, int d,
                                   const SearchBudget& budget,
                                   std::uint64_t seed) {
  if (d < 1)
    throw std::invalid_argument("exact_linf_connectivity: d >= 1 required");
  if (g.vertex_count() < d + 1)
    throw TooSmall("exact_linf_connectivity: n >= d+1 required");

  LinfResult res;
  FilterSet filters;
  std::vector<ColorVector> candidates =
      collect_candidates(g, d, filters, budget.candidate_cap);
  {
    std::ostringstream os;
    os << "candidate decompositions after filtering: " << candidates.size();
    res.notes.push_back(os.str());
  }
  if (candidates.empty()) {
    res.lower = 0.0;
    res.upper = 0.0;
    res.exact = true;
    res.best_decomposition.parts.assign(d, {});
    res.notes.push_back(
        "no connected spanning decomposition exists; the value is 0");
    return res;
  }

  std::unordered_map<std::uint64_t, double> memo;
  std::unordered_map<std::uint64_t, double>* memo_ptr =
      g.edge_count() <= 64 ? &memo : nullptr;
  std::vector<double> scores(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    scores[i] = candidate_score(g, d, candidates[i], memo_ptr);

  std::vector<std::size_t> order(candidates.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

  res.upper = scores[order[0]];
  res.best_decomposition.parts = parts_of_colors(g, d, candidates[order[0]]);
  res.notes.push_back("upper bound (decomposition maximin): " +
                      format_value(res.upper));

  res.lower = 0.0;
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    const std::size_t i = order[rank];
    const std::optional<Placement> cert = realize_decomposition(
        g, d, candidates[i], budget, derive_seed(seed, (std::uint64_t)i));
    if (cert) {
      res.lower = scores[i];
      res.best_decomposition.parts = parts_of_colors(g, d, candidates[i]);
      res.best_decomposition.certificate = cert;
      std::ostringstream os;
      os << "realized candidate of score " << format_value(scores[i])
         << " (rank " << rank + 1 << " of " << order.size() << ")";
      res.notes.push_back(os.str());
      break;
    }
  }
  if (!res.best_decomposition.certificate)
    res.notes.push_back("no candidate realized within the search budget");

  res.exact = std::abs(res.upper - res.lower) <= kEps;
  if (res.best_decomposition.certificate) {
    Framework f(g, NormedSpace::linf(d),
                *res.best_decomposition.certificate);
    if (verify_block_similarity(f))
      res.notes.push_back("certificate passed the block-similarity check");
    else
      res.notes.push_back("certificate FAILED the block-similarity check");
  }
  return res;
}

LinfResult two_tree_connectivity(const Graph& g, const SearchBudget& budget,
                                 std::uint64_t seed) {
  const std::vector<std::uint64_t> pairs = spanning_tree_pairs(g);
  LinfResult res;
  if (pairs.empty()) {
    res.lower = res.upper = 0.0;
    res.exact = true;
    res.best_decomposition.parts.assign(2, {});
    res.notes.push_back("no spanning tree pair exists; the value is 0");
    return res;
  }

  double best = -1.0;
  std::uint64_t best_mask = 0;
  for (std::uint64_t mask : pairs) {
    const Graph t1 = g.spanning_subgraph(edges_of_mask(g, mask));
    std::vector<Edge> rest;
    for (int e = 0; e < g.edge_count(); ++e)
      if (!(mask & (1ull << e))) rest.push_back(g.edges()[e]);
    const Graph t2 = g.spanning_subgraph(rest);
    const double v =
        std::min(algebraic_connectivity(t1), algebraic_connectivity(t2));
    if (v > best) {
      best = v;
      best_mask = mask;
    }
  }

  ColorVector colors(g.edge_count(), 1);
  for (int e = 0; e < g.edge_count(); ++e)
    if (best_mask & (1ull << e)) colors[e] = 0;
  res.lower = res.upper = best;
  res.exact = true;
  res.best_decomposition.parts = parts_of_colors(g, 2, colors);
  {
    std::ostringstream os;
    os << "best of " << pairs.size()
       << " spanning tree pairs: " << format_value(best);
    res.notes.push_back(os.str());
  }
  res.best_decomposition.certificate =
      realize_decomposition(g, 2, colors, budget, seed);
  res.notes.push_back(res.best_decomposition.certificate
                          ? "optimal tree pair realized by a placement"
                          : "optimal tree pair not realized within budget");
  return res;
}

Graph t_d_tree(int d) {
  if (d < 1) throw TooSmall("t_d_tree: d >= 1 required");
  std::vector<Edge> edges;
  edges.emplace_back(0, 1);
  for (int i = 2; i <= d; ++i) edges.emplace_back(0, i);
  for (int i = d + 1; i <= 2 * d - 1; ++i) edges.emplace_back(1, i);
  return Graph(2 * d, std::move(edges));
}

double grone_root(int d) {
  if (d < 2) throw TooSmall("grone_root: d >= 2 required");
  const auto poly = [d](double x) {
    return ((x - (2.0 * d + 2.0)) * x + (double)d * d + 2.0 * d + 2.0) * x -
           2.0 * d;
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 100 && hi - lo > 1e-12; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (poly(mid) < 0.0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Graph h_tree(int index) {
  static const std::vector<std::vector<Edge>> trees = {
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {3, 6}, {3, 7}},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {1, 6}, {6, 7}},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {1, 6}, {3, 7}},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {3, 6}, {3, 7}},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {5, 6}, {2, 6}, {6, 7}},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {1, 5}, {2, 6}, {2, 7}},
      {{0, 1}, {1, 5}, {1, 6}, {1, 3}, {2, 3}, {3, 4}, {3, 7}},
      {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {2, 5}, {2, 6}, {6, 7}},
  };
  if (index < 0 || index >= (int)trees.size())
    throw IndexOutOfRange("h_tree: index in [0,8) required");
  return Graph(8, trees[index]);
}

ColorVector k2d_target_colors(int d) {
  if (d < 1) throw TooSmall("k2d_target_colors: d >= 1 required");
  const Graph g = Graph::complete(2 * d);
  ColorVector colors(g.edge_count());
  for (int e = 0; e < g.edge_count(); ++e) {
    const Edge& ed = g.edges()[e];
    const int i = ed.u / 2, j = ed.v / 2;
    if (i == j)
      colors[e] = i;
    else
      colors[e] = (ed.u % 2 == ed.v % 2) ? i : j;
  }
  return colors;
}

Placement k2d_structured_placement(int d) {
  if (d < 1) throw TooSmall("k2d_structured_placement: d >= 1 required");
  const double sigma = 0.1;
  Placement p;
  p.points.assign(2 * d, Vec(d, 0.0));
  for (int i = 0; i < d; ++i) {
    p.points[2 * i][i] = 1.0;
    p.points[2 * i + 1][i] = -1.0;
    for (int k = 0; k < d; ++k) {
      if (k == i) continue;
      p.points[2 * i][k] = (k > i) ? sigma : -sigma;
      p.points[2 * i + 1][k] = (k > i) ? -sigma : sigma;
    }
  }
  return p;
}

Framework k2d_decomposition_placement(int d, const SearchBudget& budget,
                                      std::uint64_t seed) {
  const Graph g = Graph::complete(2 * d);
  const ColorVector target = k2d_target_colors(d);
  const std::optional<Placement> cert = realize_decomposition(
      g, d, target, budget, seed, k2d_structured_placement(d));
  if (!cert)
    throw Unsatisfiable(
        "k2d_decomposition_placement: target decomposition not realized");
  return Framework(g, NormedSpace::linf(d), *cert);
}

}  // namespace rig
