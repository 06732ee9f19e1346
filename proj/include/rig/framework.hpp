#pragma once

#include <cstdint>
#include <optional>

#include "rig/graph.hpp"
#include "rig/normed_space.hpp"

namespace rig {

struct CoincidentEndpoints : std::runtime_error {
  Edge edge;
  CoincidentEndpoints(Edge e, const std::string& what)
      : std::runtime_error(what), edge(e) {}
};
struct NonSmoothEdge : std::runtime_error {
  Edge edge;
  NonSmoothEdge(Edge e, const std::string& what)
      : std::runtime_error(what), edge(e) {}
};
struct Unsatisfiable : std::runtime_error {
  explicit Unsatisfiable(const std::string& what) : std::runtime_error(what) {}
};

/// Points assigned to vertices 0..n-1.
struct Placement {
  std::vector<Vec> points;
};

struct SearchBudget {
  int restarts = 64;
  int steps = 200;
  std::int64_t candidate_cap = 10'000'000;
  int realize_restarts = 256;
  int realize_steps = 500;
};

/// A validated framework: every edge direction is distinct and smooth.
/// Support functionals are cached per edge, computed on p_u - p_v with u the
/// lexicographically smaller endpoint.
class Framework {
 public:
  Framework(Graph g, NormedSpace space, Placement p);

  const Graph& graph() const { return graph_; }
  const NormedSpace& space() const { return space_; }
  const Placement& placement() const { return placement_; }
  const std::vector<SupportFunctional>& edge_functionals() const {
    return functionals_;
  }

 private:
  Graph graph_;
  NormedSpace space_;
  Placement placement_;
  std::vector<SupportFunctional> functionals_;  // edge-list order
};

struct RigidityReport {
  double rigidity_eigenvalue = 0.0;  // lambda_{k(X)+1}
  int kernel_dim = 0;
  int rank = 0;
  bool infinitesimally_rigid = false;
  bool full_affine_span = false;
  std::vector<double> spectrum;
};

/// |E| x dn matrix; row for edge uv carries phi in u's block, -phi in w's.
Matrix rigidity_matrix(const Framework& f);

/// R^T R; dn x dn PSD, vertex-major coordinate ordering.
SymMatrix framework_laplacian(const Framework& f);

/// Same matrix assembled from the block-entry formula (used for cross-checks).
SymMatrix framework_laplacian_blocks(const Framework& f);

/// Orthonormal generators of the trivial flexes: d translations, plus the
/// C(d,2) rotation flexes u_v = A p_v for Euclidean spaces.
std::vector<Vec> trivial_flex_basis(const Framework& f);

int affine_span_dim(const Placement& pts);

RigidityReport rigidity_report(const Framework& f);

Framework delete_vertex(const Framework& f, int v);

struct ConnectivityEstimate {
  double lower_bound = 0.0;
  Placement witness;
};

/// Rigidity eigenvalue of (g, pts) when the placement gives a valid framework
/// with full affine span, otherwise nullopt.
std::optional<double> placement_score(const Graph& g, const NormedSpace& space,
                                      const Placement& pts);

/// Randomized lower bound on a(G,X): random restarts refined by coordinate
/// hill-climbing over 10 halving step scales.
ConnectivityEstimate estimate_alg_connectivity(const Graph& g,
                                               const NormedSpace& space,
                                               const SearchBudget& budget,
                                               std::uint64_t seed);

/// Deterministic per-stream seed derivation (splitmix64 over seed, index).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace rig
