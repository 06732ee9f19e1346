#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "rig/linalg.hpp"

namespace rig {

struct TooSmall : std::runtime_error {
  explicit TooSmall(const std::string& what) : std::runtime_error(what) {}
};
struct TooLarge : std::runtime_error {
  explicit TooLarge(const std::string& what) : std::runtime_error(what) {}
};
struct Disconnected : std::runtime_error {
  explicit Disconnected(const std::string& what) : std::runtime_error(what) {}
};
struct NegativeWeight : std::runtime_error {
  explicit NegativeWeight(const std::string& what) : std::runtime_error(what) {}
};
struct NonPSDWeight : std::runtime_error {
  explicit NonPSDWeight(const std::string& what) : std::runtime_error(what) {}
};
struct WrongEdgeCount : std::runtime_error {
  explicit WrongEdgeCount(const std::string& what) : std::runtime_error(what) {}
};

/// Unordered vertex pair with u < v.
struct Edge {
  int u = 0, v = 0;
  Edge() = default;
  Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {}
  friend bool operator==(const Edge&, const Edge&) = default;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Finite simple graph on vertices 0..n-1 with a sorted edge list.
class Graph {
 public:
  explicit Graph(int n, std::vector<Edge> edges = {});

  static Graph path(int n);
  static Graph cycle(int n);
  static Graph complete(int n);
  /// Bull graph: triangle 0-1-2 with pendant edges 1-3 and 2-4.
  static Graph bull();
  /// Octahedral graph K_{2,2,2}: non-edges are {0,3},{1,4},{2,5}.
  static Graph octahedron();

  int vertex_count() const { return n_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  const std::vector<Edge>& edges() const { return edges_; }
  bool has_edge(int u, int v) const;
  int degree(int v) const;
  int min_degree() const;
  int max_degree() const;
  const std::vector<int>& neighbors(int v) const { return adj_[v]; }

  bool is_connected() const;
  bool is_tree() const;
  /// Connectivity of the subgraph induced by keeping the flagged vertices.
  bool connected_on(const std::vector<bool>& keep) const;

  Graph complement() const;
  Graph induced(const std::vector<int>& vertices) const;
  Graph without_vertex(int v) const;
  Graph without_edge(const Edge& e) const;
  /// Spanning subgraph on the same vertex set keeping only the given edges.
  Graph spanning_subgraph(const std::vector<Edge>& keep) const;

  /// Position of an edge in the sorted edge list, or -1.
  int edge_index(const Edge& e) const;

 private:
  int n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> adj_;
};

/// Non-negative scalar edge weights.
struct ScalarWeights {
  std::map<Edge, double> w;
};

/// PSD d x d matrix edge weights.
struct MatrixWeights {
  int d = 1;
  std::map<Edge, Matrix> w;
};

SymMatrix laplacian(const Graph& g);

/// Oriented edge as (source, range).
using Orientation = std::vector<std::pair<int, int>>;

/// |E| x n incidence matrix, rows in edge-list order.
Matrix oriented_incidence(const Graph& g, const Orientation& orientation);

double algebraic_connectivity(const Graph& g);

SymMatrix weighted_laplacian(const Graph& g, const ScalarWeights& w);

/// dn x dn block Laplacian, vertex-major ordering: coordinate i of vertex v
/// sits at index v*d + i. Kernel contains the d vectors with u_v = b_i.
SymMatrix matrix_weighted_laplacian(const Graph& g, const MatrixWeights& w,
                                    double eps = kEps);

int vertex_connectivity(const Graph& g);
int edge_connectivity(const Graph& g);

std::vector<int> cut_vertices(const Graph& g);

/// Vertex-induced chordless cycle of odd length >= 5, in cycle order, if any.
/// Exhaustive over induced subgraphs; requires n <= 12.
std::optional<std::vector<int>> find_odd_hole(const Graph& g);

std::optional<std::vector<int>> find_odd_antihole(const Graph& g);

bool is_perfect_small(const Graph& g);

Graph cartesian_product(const Graph& g1, const Graph& g2);

/// All spanning trees T of g (edge subsets as bitmasks over the edge list)
/// whose complement g \ T is also a spanning tree. Requires |E| == 2(n-1).
std::vector<std::uint64_t> spanning_tree_pairs(const Graph& g);

/// All spanning trees of g as edge bitmasks, lexicographic by edge index.
std::vector<std::uint64_t> spanning_trees(const Graph& g);

std::vector<Edge> edges_of_mask(const Graph& g, std::uint64_t mask);

/// Brute-force isomorphism test; requires both graphs to have <= 8 vertices.
bool is_isomorphic(const Graph& g, const Graph& h);

}  // namespace rig
