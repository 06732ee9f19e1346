#include "rig/framework.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace rig {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

Framework::Framework(Graph g, NormedSpace space, Placement p)
    : graph_(std::move(g)), space_(std::move(space)), placement_(std::move(p)) {
  const int n = graph_.vertex_count();
  if ((int)placement_.points.size() != n)
    throw std::invalid_argument("Framework: placement must cover all vertices");
  for (const Vec& pt : placement_.points)
    if ((int)pt.size() != space_.dim())
      throw DimensionMismatch("Framework: point dimension mismatch");
  functionals_.reserve(graph_.edges().size());
  for (const Edge& e : graph_.edges()) {
    const Vec diff = sub(placement_.points[e.u], placement_.points[e.v]);
    const double len = norm(space_, diff);
    if (len == 0.0) {
      std::ostringstream os;
      os << "Framework: coincident endpoints on edge {" << e.u << "," << e.v << "}";
      throw CoincidentEndpoints(e, os.str());
    }
    if (!is_smooth_point(space_, diff)) {
      std::ostringstream os;
      os << "Framework: norm not smooth along edge {" << e.u << "," << e.v << "}";
      throw NonSmoothEdge(e, os.str());
    }
    functionals_.push_back(support_functional(space_, diff));
  }
}

Matrix rigidity_matrix(const Framework& f) {
  const int d = f.space().dim();
  const int n = f.graph().vertex_count();
  Matrix r(f.graph().edges().size(), (std::size_t)d * n);
  for (std::size_t ei = 0; ei < f.graph().edges().size(); ++ei) {
    const Edge& e = f.graph().edges()[ei];
    const Vec& phi = f.edge_functionals()[ei].row;
    for (int i = 0; i < d; ++i) {
      r(ei, (std::size_t)e.u * d + i) = phi[i];
      r(ei, (std::size_t)e.v * d + i) = -phi[i];
    }
  }
  return r;
}

SymMatrix framework_laplacian(const Framework& f) {
  const Matrix r = rigidity_matrix(f);
  return SymMatrix(r.transpose() * r);
}

SymMatrix framework_laplacian_blocks(const Framework& f) {
  const int d = f.space().dim();
  const int n = f.graph().vertex_count();
  Matrix l((std::size_t)d * n, (std::size_t)d * n);
  for (std::size_t ei = 0; ei < f.graph().edges().size(); ++ei) {
    const Edge& e = f.graph().edges()[ei];
    const Vec& phi = f.edge_functionals()[ei].row;
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) {
        const double v = phi[i] * phi[j];
        l((std::size_t)e.u * d + i, (std::size_t)e.u * d + j) += v;
        l((std::size_t)e.v * d + i, (std::size_t)e.v * d + j) += v;
        l((std::size_t)e.u * d + i, (std::size_t)e.v * d + j) -= v;
        l((std::size_t)e.v * d + i, (std::size_t)e.u * d + j) -= v;
      }
  }
  return SymMatrix(std::move(l));
}

namespace {

// Gram-Schmidt; vectors that collapse below threshold are dropped.
std::vector<Vec> orthonormalize(std::vector<Vec> vs) {
  std::vector<Vec> out;
  for (Vec& v : vs) {
    for (const Vec& u : out) {
      const double c = dot(v, u);
      for (std::size_t i = 0; i < v.size(); ++i) v[i] -= c * u[i];
    }
    const double nv = norm2(v);
    if (nv < 1e-10) continue;
    for (double& x : v) x /= nv;
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace

std::vector<Vec> trivial_flex_basis(const Framework& f) {
  const int d = f.space().dim();
  const int n = f.graph().vertex_count();
  std::vector<Vec> gen;
  for (int i = 0; i < d; ++i) {
    Vec u((std::size_t)d * n, 0.0);
    for (int v = 0; v < n; ++v) u[(std::size_t)v * d + i] = 1.0;
    gen.push_back(std::move(u));
  }
  const bool euclidean = f.space().kind() == NormedSpace::Kind::Lp &&
                         !f.space().p_is_inf() && f.space().p_value() == 2.0;
  if (euclidean) {
    for (int a = 0; a < d; ++a)
      for (int b = a + 1; b < d; ++b) {
        Vec u((std::size_t)d * n, 0.0);
        for (int v = 0; v < n; ++v) {
          const Vec& pv = f.placement().points[v];
          u[(std::size_t)v * d + a] = -pv[b];
          u[(std::size_t)v * d + b] = pv[a];
        }
        gen.push_back(std::move(u));
      }
  }
  return orthonormalize(std::move(gen));
}

int affine_span_dim(const Placement& pts) {
  if (pts.points.empty()) return 0;
  const int d = (int)pts.points[0].size();
  const int n = (int)pts.points.size();
  if (n == 1) return 0;
  Matrix m(n - 1, d);
  double scale = 0.0;
  for (int v = 1; v < n; ++v)
    for (int i = 0; i < d; ++i) {
      m(v - 1, i) = pts.points[v][i] - pts.points[0][i];
      scale = std::max(scale, std::abs(m(v - 1, i)));
    }
  if (scale == 0.0) return 0;
  // Row-echelon rank with relative pivot threshold.
  const double thresh = kEps * scale;
  int rank = 0;
  std::size_t row = 0;
  for (int col = 0; col < d && row < m.rows(); ++col) {
    std::size_t piv = row;
    for (std::size_t r = row; r < m.rows(); ++r)
      if (std::abs(m(r, col)) > std::abs(m(piv, col))) piv = r;
    if (std::abs(m(piv, col)) <= thresh) continue;
    for (int c = 0; c < d; ++c) std::swap(m(piv, c), m(row, c));
    for (std::size_t r = row + 1; r < m.rows(); ++r) {
      const double fac = m(r, col) / m(row, col);
      for (int c = col; c < d; ++c) m(r, c) -= fac * m(row, c);
    }
    ++rank;
    ++row;
  }
  return rank;
}

RigidityReport rigidity_report(const Framework& f) {
  const int d = f.space().dim();
  const int n = f.graph().vertex_count();
  const int k = k_dimension(f.space());
  const SymMatrix l = framework_laplacian(f);
  const Spectrum sp = sym_eigenvalues(l);

  RigidityReport rep;
  rep.spectrum = sp.values;
  rep.kernel_dim = 0;
  for (double v : sp.values)
    if (v < kEps) ++rep.kernel_dim;
  rep.rank = d * n - rep.kernel_dim;
  rep.full_affine_span = affine_span_dim(f.placement()) == d;
  rep.rigidity_eigenvalue = (k < d * n) ? sp.values[k] : 0.0;
  if (rep.full_affine_span) {
    rep.infinitesimally_rigid = rep.kernel_dim == k;
  } else {
    const int trivial_dim = (int)trivial_flex_basis(f).size();
    rep.infinitesimally_rigid = rep.kernel_dim == trivial_dim;
  }
  return rep;
}

Framework delete_vertex(const Framework& f, int v) {
  if (f.graph().vertex_count() < 2)
    throw TooSmall("delete_vertex: n >= 2 required");
  Placement p;
  for (int u = 0; u < f.graph().vertex_count(); ++u)
    if (u != v) p.points.push_back(f.placement().points[u]);
  return Framework(f.graph().without_vertex(v), f.space(), std::move(p));
}

std::optional<double> placement_score(const Graph& g, const NormedSpace& space,
                                      const Placement& pts) {
  const int d = space.dim();
  if (affine_span_dim(pts) != d) return std::nullopt;
  try {
    Framework f(g, space, pts);
    const SymMatrix l = framework_laplacian(f);
    return eigenvalue_k(l, (std::size_t)k_dimension(space) + 1);
  } catch (const CoincidentEndpoints&) {
    return std::nullopt;
  } catch (const NonSmoothEdge&) {
    return std::nullopt;
  }
}

ConnectivityEstimate estimate_alg_connectivity(const Graph& g,
                                               const NormedSpace& space,
                                               const SearchBudget& budget,
                                               std::uint64_t seed) {
  const int d = space.dim();
  const int n = g.vertex_count();
  if (n < d + 1)
    throw TooSmall("estimate_alg_connectivity: n >= d+1 required");

  double best = -1.0;
  Placement best_p;
  int attempts = 0;
  const int attempt_cap = 10 * std::max(1, budget.restarts);
  int valid_restarts = 0;

  for (int restart = 0; restart < budget.restarts; ++restart) {
    std::mt19937_64 rng(derive_seed(seed, (std::uint64_t)restart));
    std::uniform_real_distribution<double> unif(0.0, 1.0);

    Placement p;
    std::optional<double> score;
    while (!score) {
      if (++attempts > attempt_cap) {
        if (valid_restarts == 0)
          throw Unsatisfiable(
              "estimate_alg_connectivity: no valid placement found");
        goto done;
      }
      p.points.assign(n, Vec(d));
      for (Vec& pt : p.points)
        for (double& c : pt) c = unif(rng);
      score = placement_score(g, space, p);
    }
    ++valid_restarts;

    // Hill-climb: random coordinate perturbations over 10 halving scales.
    double step = 0.25;
    const int scales = 10;
    const int per_scale = std::max(1, budget.steps / scales);
    for (int scale = 0; scale < scales; ++scale) {
      bool improved = false;
      for (int it = 0; it < per_scale; ++it) {
        const int v = (int)(rng() % (std::uint64_t)n);
        const int c = (int)(rng() % (std::uint64_t)d);
        const double delta = (unif(rng) < 0.5 ? 1.0 : -1.0) * step * unif(rng);
        Placement q = p;
        q.points[v][c] += delta;
        const std::optional<double> s = placement_score(g, space, q);
        if (s && (*s > *score + 1e-15 || (*s >= *score && unif(rng) < 0.5))) {
          if (*s > *score + 1e-15) improved = true;
          p = std::move(q);
          score = s;
        }
      }
      if (!improved) step *= 0.5;
    }

    if (*score > best || best_p.points.empty()) {
      best = *score;
      best_p = p;
    }
  }
done:
  if (best_p.points.empty())
    throw Unsatisfiable("estimate_alg_connectivity: no valid placement found");
  // An exact zero can come back as solver noise of either sign.
  return ConnectivityEstimate{std::max(best, 0.0), std::move(best_p)};
}

}  // namespace rig
