#include "rig/graph.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <set>

namespace rig {

Graph::Graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
  if (n_ < 1) throw std::invalid_argument("Graph: vertex count must be >= 1");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.u == e.v) throw std::invalid_argument("Graph: self-loop");
    if (e.u < 0 || e.v >= n_) throw std::invalid_argument("Graph: endpoint out of range");
    if (i > 0 && edges_[i - 1] == e) throw std::invalid_argument("Graph: duplicate edge");
  }
  adj_.assign(n_, {});
  for (const Edge& e : edges_) {
    adj_[e.u].push_back(e.v);
    adj_[e.v].push_back(e.u);
  }
  for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

Graph Graph::path(int n) {
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  return Graph(n, std::move(e));
}

Graph Graph::cycle(int n) {
  if (n < 3) throw std::invalid_argument("cycle: n >= 3 required");
  std::vector<Edge> e;
  for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
  e.emplace_back(0, n - 1);
  return Graph(n, std::move(e));
}

Graph Graph::complete(int n) {
  std::vector<Edge> e;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) e.emplace_back(u, v);
  return Graph(n, std::move(e));
}

Graph Graph::bull() {
  return Graph(5, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 4}});
}

Graph Graph::octahedron() {
  std::vector<Edge> e;
  for (int u = 0; u < 6; ++u)
    for (int v = u + 1; v < 6; ++v)
      if (v != u + 3) e.emplace_back(u, v);
  return Graph(6, std::move(e));
}

bool Graph::has_edge(int u, int v) const {
  if (u == v) return false;
  const Edge e(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::degree(int v) const { return static_cast<int>(adj_[v].size()); }

int Graph::min_degree() const {
  int m = n_;
  for (int v = 0; v < n_; ++v) m = std::min(m, degree(v));
  return m;
}

int Graph::max_degree() const {
  int m = 0;
  for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
  return m;
}

bool Graph::connected_on(const std::vector<bool>& keep) const {
  int start = -1, total = 0;
  for (int v = 0; v < n_; ++v)
    if (keep[v]) {
      if (start < 0) start = v;
      ++total;
    }
  if (total == 0) return true;
  std::vector<bool> seen(n_, false);
  std::vector<int> stack{start};
  seen[start] = true;
  int reached = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adj_[v])
      if (keep[w] && !seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
  }
  return reached == total;
}

bool Graph::is_connected() const {
  return connected_on(std::vector<bool>(n_, true));
}

bool Graph::is_tree() const {
  return edge_count() == n_ - 1 && is_connected();
}

Graph Graph::complement() const {
  std::vector<Edge> e;
  for (int u = 0; u < n_; ++u)
    for (int v = u + 1; v < n_; ++v)
      if (!has_edge(u, v)) e.emplace_back(u, v);
  return Graph(n_, std::move(e));
}

Graph Graph::induced(const std::vector<int>& vertices) const {
  std::vector<int> index(n_, -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) index[vertices[i]] = (int)i;
  std::vector<Edge> e;
  for (const Edge& ed : edges_)
    if (index[ed.u] >= 0 && index[ed.v] >= 0)
      e.emplace_back(index[ed.u], index[ed.v]);
  return Graph(static_cast<int>(vertices.size()), std::move(e));
}

Graph Graph::without_vertex(int v) const {
  std::vector<int> keep;
  for (int u = 0; u < n_; ++u)
    if (u != v) keep.push_back(u);
  return induced(keep);
}

Graph Graph::without_edge(const Edge& e) const {
  std::vector<Edge> es;
  for (const Edge& ed : edges_)
    if (!(ed == e)) es.push_back(ed);
  return Graph(n_, std::move(es));
}

Graph Graph::spanning_subgraph(const std::vector<Edge>& keep) const {
  for (const Edge& e : keep)
    if (!has_edge(e.u, e.v))
      throw std::invalid_argument("spanning_subgraph: edge not in graph");
  return Graph(n_, keep);
}

int Graph::edge_index(const Edge& e) const {
  auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
  if (it == edges_.end() || !(*it == e)) return -1;
  return static_cast<int>(it - edges_.begin());
}

SymMatrix laplacian(const Graph& g) {
  const int n = g.vertex_count();
  SymMatrix l(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) l.set(v, v, g.degree(v));
  for (const Edge& e : g.edges()) l.set(e.u, e.v, -1.0);
  return l;
}

Matrix oriented_incidence(const Graph& g, const Orientation& orientation) {
  if (orientation.size() != g.edges().size())
    throw std::invalid_argument("oriented_incidence: one direction per edge required");
  Matrix c(g.edges().size(), g.vertex_count());
  for (std::size_t i = 0; i < orientation.size(); ++i) {
    auto [s, r] = orientation[i];
    if (!(Edge(s, r) == g.edges()[i]))
      throw std::invalid_argument("oriented_incidence: direction does not match edge");
    c(i, s) = 1.0;
    c(i, r) = -1.0;
  }
  return c;
}

double algebraic_connectivity(const Graph& g) {
  if (g.vertex_count() < 2)
    throw TooSmall("algebraic_connectivity: n >= 2 required");
  return eigenvalue_k(laplacian(g), 2);
}

SymMatrix weighted_laplacian(const Graph& g, const ScalarWeights& w) {
  const int n = g.vertex_count();
  SymMatrix l(static_cast<std::size_t>(n));
  for (const Edge& e : g.edges()) {
    auto it = w.w.find(e);
    const double we = it == w.w.end() ? 0.0 : it->second;
    if (we < 0.0) throw NegativeWeight("weighted_laplacian: negative weight");
    l.set(e.u, e.v, l(e.u, e.v) - we);
    l.set(e.u, e.u, l(e.u, e.u) + we);
    l.set(e.v, e.v, l(e.v, e.v) + we);
  }
  return l;
}

SymMatrix matrix_weighted_laplacian(const Graph& g, const MatrixWeights& w,
                                    double eps) {
  const int n = g.vertex_count();
  const int d = w.d;
  Matrix l(static_cast<std::size_t>(n) * d, static_cast<std::size_t>(n) * d);
  for (const Edge& e : g.edges()) {
    auto it = w.w.find(e);
    if (it == w.w.end()) continue;
    const Matrix& we = it->second;
    if (we.rows() != (std::size_t)d || we.cols() != (std::size_t)d)
      throw DimensionMismatch("matrix_weighted_laplacian: weight shape");
    const SymMatrix sym_we(we);
    if (sym_eigenvalues(sym_we).values.front() < -eps)
      throw NonPSDWeight("matrix_weighted_laplacian: weight not PSD");
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const double val = sym_we(i, j);
        l(e.u * d + i, e.u * d + j) += val;
        l(e.v * d + i, e.v * d + j) += val;
        l(e.u * d + i, e.v * d + j) -= val;
        l(e.v * d + i, e.u * d + j) -= val;
      }
  }
  return SymMatrix(std::move(l));
}

namespace {

// Enumerate k-subsets of [0,n) in lexicographic order; calls f(subset),
// stops early if f returns true. Returns whether any call returned true.
bool for_each_subset(int n, int k, const std::function<bool(const std::vector<int>&)>& f) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return false;
  while (true) {
    if (f(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

int vertex_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw TooSmall("vertex_connectivity: n >= 2 required");
  if (n > 12) throw TooLarge("vertex_connectivity: brute-force path limited to n <= 12");
  if (!g.is_connected()) return 0;
  if (g.edge_count() == n * (n - 1) / 2) return n - 1;  // complete graph
  for (int k = 1; k < n - 1; ++k) {
    bool found = for_each_subset(n, k, [&](const std::vector<int>& sep) {
      std::vector<bool> keep(n, true);
      for (int v : sep) keep[v] = false;
      return !g.connected_on(keep);
    });
    if (found) return k;
  }
  return n - 1;
}

int edge_connectivity(const Graph& g) {
  const int n = g.vertex_count();
  if (n < 2) throw TooSmall("edge_connectivity: n >= 2 required");
  if (n > 12) throw TooLarge("edge_connectivity: brute-force path limited to n <= 12");
  if (!g.is_connected()) return 0;
  // Global minimum edge cut over vertex bipartitions (vertex 0 fixed on one side).
  int best = g.edge_count();
  for (std::uint32_t mask = 0; mask < (1u << (n - 1)); ++mask) {
    int cut = 0;
    auto side = [&](int v) { return v == 0 ? 0 : (int)((mask >> (v - 1)) & 1u); };
    if (mask == (1u << (n - 1)) - 1) continue;  // all vertices on side 0
    for (const Edge& e : g.edges())
      if (side(e.u) != side(e.v)) ++cut;
    bool proper = false;
    for (int v = 1; v < n; ++v)
      if (side(v) == 1) proper = true;
    if (proper) best = std::min(best, cut);
  }
  return best;
}

std::vector<int> cut_vertices(const Graph& g) {
  if (!g.is_connected()) throw Disconnected("cut_vertices: graph is disconnected");
  std::vector<int> cuts;
  const int n = g.vertex_count();
  for (int v = 0; v < n; ++v) {
    std::vector<bool> keep(n, true);
    keep[v] = false;
    if (!g.connected_on(keep)) cuts.push_back(v);
  }
  return cuts;
}

namespace {

// Checks whether the induced subgraph on `verts` is a chordless cycle and, if
// so, returns the vertices in cycle order.
std::optional<std::vector<int>> induced_cycle_order(const Graph& g,
                                                    const std::vector<int>& verts) {
  const int k = static_cast<int>(verts.size());
  int edge_total = 0;
  for (int a = 0; a < k; ++a)
    for (int b = a + 1; b < k; ++b)
      if (g.has_edge(verts[a], verts[b])) ++edge_total;
  if (edge_total != k) return std::nullopt;
  for (int v : verts) {
    int deg = 0;
    for (int w : verts)
      if (w != v && g.has_edge(v, w)) ++deg;
    if (deg != 2) return std::nullopt;
  }
  // Walk the cycle; connectivity check is implicit in completing the tour.
  std::vector<int> order{verts[0]};
  std::set<int> used{verts[0]};
  int cur = verts[0], prev = -1;
  for (int step = 1; step < k; ++step) {
    int next = -1;
    for (int w : verts)
      if (w != prev && w != cur && g.has_edge(cur, w) && !used.count(w)) {
        next = w;
        break;
      }
    if (next < 0) return std::nullopt;
    order.push_back(next);
    used.insert(next);
    prev = cur;
    cur = next;
  }
  if (!g.has_edge(order.back(), order.front())) return std::nullopt;
  return order;
}

}  // namespace

std::optional<std::vector<int>> find_odd_hole(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 12) throw TooLarge("find_odd_hole: exhaustive search limited to n <= 12");
  for (int k = 5; k <= n; k += 2) {
    std::optional<std::vector<int>> hole;
    for_each_subset(n, k, [&](const std::vector<int>& verts) {
      hole = induced_cycle_order(g, verts);
      return hole.has_value();
    });
    if (hole) return hole;
  }
  return std::nullopt;
}

std::optional<std::vector<int>> find_odd_antihole(const Graph& g) {
  auto hole = find_odd_hole(g.complement());
  if (!hole) return std::nullopt;
  return hole;
}

bool is_perfect_small(const Graph& g) {
  if (g.vertex_count() > 12)
    throw TooLarge("is_perfect_small: n <= 12 required");
  return !find_odd_hole(g) && !find_odd_antihole(g);
}

Graph cartesian_product(const Graph& g1, const Graph& g2) {
  const int n1 = g1.vertex_count(), n2 = g2.vertex_count();
  std::vector<Edge> e;
  auto id = [n2](int v1, int v2) { return v1 * n2 + v2; };
  for (int v1 = 0; v1 < n1; ++v1)
    for (const Edge& ed : g2.edges()) e.emplace_back(id(v1, ed.u), id(v1, ed.v));
  for (int v2 = 0; v2 < n2; ++v2)
    for (const Edge& ed : g1.edges()) e.emplace_back(id(ed.u, v2), id(ed.v, v2));
  return Graph(n1 * n2, std::move(e));
}

namespace {

bool mask_is_spanning_tree(const Graph& g, std::uint64_t mask) {
  const int n = g.vertex_count();
  if (std::popcount(mask) != n - 1) return false;
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  int comps = n;
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    if (!((mask >> i) & 1)) continue;
    int a = find(g.edges()[i].u), b = find(g.edges()[i].v);
    if (a == b) return false;  // cycle
    parent[a] = b;
    --comps;
  }
  return comps == 1;
}

// Recursive enumeration in lexicographic order of the edge-inclusion choices,
// pruning branches that cannot complete a spanning tree.
void enumerate_trees(const Graph& g, std::size_t pos, std::uint64_t mask,
                     int chosen, std::vector<std::uint64_t>& out) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (chosen == n - 1) {
    if (mask_is_spanning_tree(g, mask)) out.push_back(mask);
    return;
  }
  if (pos >= (std::size_t)m) return;
  if (m - (int)pos < n - 1 - chosen) return;  // not enough edges left
  // Include edge `pos` only if it joins two distinct components so far.
  {
    std::vector<int> parent(n);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
      while (parent[x] != x) x = parent[x] = parent[parent[x]];
      return x;
    };
    for (std::size_t i = 0; i < pos; ++i)
      if ((mask >> i) & 1) parent[find(g.edges()[i].u)] = find(g.edges()[i].v);
    if (find(g.edges()[pos].u) != find(g.edges()[pos].v))
      enumerate_trees(g, pos + 1, mask | (1ull << pos), chosen + 1, out);
  }
  enumerate_trees(g, pos + 1, mask, chosen, out);
}

}  // namespace

std::vector<std::uint64_t> spanning_trees(const Graph& g) {
  if (g.vertex_count() > 10)
    throw TooLarge("spanning_trees: enumeration limited to n <= 10");
  std::vector<std::uint64_t> out;
  enumerate_trees(g, 0, 0, 0, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::uint64_t> spanning_tree_pairs(const Graph& g) {
  const int n = g.vertex_count();
  if (g.edge_count() != 2 * (n - 1))
    throw WrongEdgeCount("spanning_tree_pairs: |E| == 2(n-1) required");
  const std::uint64_t all = (g.edge_count() == 64)
                                ? ~0ull
                                : ((1ull << g.edge_count()) - 1);
  std::vector<std::uint64_t> out;
  for (std::uint64_t t : spanning_trees(g))
    if (mask_is_spanning_tree(g, all & ~t)) out.push_back(t);
  return out;
}

std::vector<Edge> edges_of_mask(const Graph& g, std::uint64_t mask) {
  std::vector<Edge> out;
  for (std::size_t i = 0; i < g.edges().size(); ++i)
    if ((mask >> i) & 1) out.push_back(g.edges()[i]);
  return out;
}

bool is_isomorphic(const Graph& g, const Graph& h) {
  if (g.vertex_count() > 8 || h.vertex_count() > 8)
    throw TooLarge("is_isomorphic: brute-force search limited to n <= 8");
  if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
    return false;
  const int n = g.vertex_count();
  std::vector<int> dg, dh;
  for (int v = 0; v < n; ++v) {
    dg.push_back(g.degree(v));
    dh.push_back(h.degree(v));
  }
  std::sort(dg.begin(), dg.end());
  std::sort(dh.begin(), dh.end());
  if (dg != dh) return false;
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const Edge& e : g.edges())
      if (!h.has_edge(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace rig
