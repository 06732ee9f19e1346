#include "rig/normed_space.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace rig {

double dot(const Vec& a, const Vec& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Vec sub(const Vec& a, const Vec& b) {
  Vec c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
  return c;
}

double norm2(const Vec& a) { return std::sqrt(dot(a, a)); }

namespace {

void require_finite(const Vec& x, const char* where) {
  for (double v : x)
    if (!std::isfinite(v)) throw NonFinite(std::string(where) + ": non-finite vector entry");
}

double determinant(Matrix a) {
  const std::size_t n = a.rows();
  double det = 1.0;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    for (std::size_t r = col + 1; r < n; ++r)
      if (std::abs(a(r, col)) > std::abs(a(piv, col))) piv = r;
    if (a(piv, col) == 0.0) return 0.0;
    if (piv != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a(piv, c), a(col, c));
      det = -det;
    }
    det *= a(col, col);
    for (std::size_t r = col + 1; r < n; ++r) {
      const double f = a(r, col) / a(col, col);
      for (std::size_t c = col; c < n; ++c) a(r, c) -= f * a(col, c);
    }
  }
  return det;
}

}  // namespace

NormedSpace NormedSpace::lp(double p, int d) {
  if (d < 1) throw std::invalid_argument("NormedSpace: dimension >= 1 required");
  if (!(p >= 1.0) || !std::isfinite(p))
    throw std::invalid_argument("NormedSpace: p in [1,inf) required (use linf for p=inf)");
  NormedSpace s;
  s.kind_ = Kind::Lp;
  s.d_ = d;
  s.p_ = PExponent::finite(p);
  return s;
}

NormedSpace NormedSpace::linf(int d) {
  if (d < 1) throw std::invalid_argument("NormedSpace: dimension >= 1 required");
  NormedSpace s;
  s.kind_ = Kind::Lp;
  s.d_ = d;
  s.p_ = PExponent::inf();
  return s;
}

NormedSpace NormedSpace::polyhedral(int d, std::vector<Vec> facets) {
  if (d < 1) throw std::invalid_argument("NormedSpace: dimension >= 1 required");
  if (facets.empty())
    throw std::invalid_argument("NormedSpace: facet list must be nonempty");
  for (const Vec& f : facets) {
    if ((int)f.size() != d)
      throw std::invalid_argument("NormedSpace: facet dimension mismatch");
    require_finite(f, "NormedSpace");
    if (norm2(f) == 0.0)
      throw std::invalid_argument("NormedSpace: zero facet functional");
  }
  NormedSpace s;
  s.kind_ = Kind::Polyhedral;
  s.d_ = d;
  s.facets_ = std::move(facets);
  // Definiteness: max_j |F_j . x| > 0 for 200 random unit directions.
  std::mt19937_64 rng(0x9e3779b97f4a7c15ull);
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (int t = 0; t < 200; ++t) {
    Vec x(d);
    for (double& v : x) v = gauss(rng);
    const double nx = norm2(x);
    if (nx == 0.0) continue;
    double m = 0.0;
    for (const Vec& f : s.facets_) m = std::max(m, std::abs(dot(f, x) / nx));
    if (m <= 1e-12)
      throw std::invalid_argument(
          "NormedSpace: facet functionals do not positively span R^d");
  }
  return s;
}

std::string NormedSpace::descriptor() const {
  std::ostringstream os;
  if (kind_ == Kind::Polyhedral) {
    os << "poly:d=" << d_ << ",m=" << facets_.size();
  } else if (p_.is_inf) {
    os << "linf:" << d_;
  } else {
    os << "lp:" << p_.value << ":" << d_;
  }
  return os.str();
}

double norm(const NormedSpace& space, const Vec& x) {
  require_finite(x, "norm");
  if ((int)x.size() != space.dim()) throw DimensionMismatch("norm: vector dimension");
  if (space.kind() == NormedSpace::Kind::Polyhedral) {
    double m = 0.0;
    for (const Vec& f : space.facets()) m = std::max(m, std::abs(dot(f, x)));
    return m;
  }
  if (space.p_is_inf()) {
    double m = 0.0;
    for (double v : x) m = std::max(m, std::abs(v));
    return m;
  }
  const double p = space.p_value();
  if (p == 1.0) {
    double s = 0.0;
    for (double v : x) s += std::abs(v);
    return s;
  }
  if (p == 2.0) return norm2(x);
  double s = 0.0;
  for (double v : x) s += std::pow(std::abs(v), p);
  return std::pow(s, 1.0 / p);
}

double dual_norm(const NormedSpace& space, const Vec& row) {
  if (space.kind() == NormedSpace::Kind::Polyhedral)
    throw std::invalid_argument("dual_norm: closed form only for Lp spaces");
  if (space.p_is_inf()) return norm(NormedSpace::lp(1.0, space.dim()), row);
  const double p = space.p_value();
  if (p == 1.0) return norm(NormedSpace::linf(space.dim()), row);
  return norm(NormedSpace::lp(p / (p - 1.0), space.dim()), row);
}

namespace {

// Two largest |F_j . x| over the facet list (or coordinates for l_infty),
// with the index of the largest.
struct TopTwo {
  int index = -1;
  double best = -1.0;
  double second = -1.0;
};

TopTwo top_two(const NormedSpace& space, const Vec& x) {
  TopTwo t;
  auto feed = [&](int j, double val) {
    if (val > t.best) {
      t.second = t.best;
      t.best = val;
      t.index = j;
    } else if (val > t.second) {
      t.second = val;
    }
  };
  if (space.kind() == NormedSpace::Kind::Polyhedral) {
    for (std::size_t j = 0; j < space.facets().size(); ++j)
      feed((int)j, std::abs(dot(space.facets()[j], x)));
  } else {
    for (int j = 0; j < space.dim(); ++j) feed(j, std::abs(x[j]));
  }
  return t;
}

}  // namespace

bool is_smooth_point(const NormedSpace& space, const Vec& x, double margin) {
  require_finite(x, "is_smooth_point");
  const double nx = norm(space, x);
  if (nx == 0.0) throw ZeroVector("is_smooth_point: zero vector");
  if (space.kind() == NormedSpace::Kind::Polyhedral || space.p_is_inf()) {
    const TopTwo t = top_two(space, x);
    return t.best - t.second > margin * nx;
  }
  const double p = space.p_value();
  if (p == 1.0) {
    for (double v : x)
      if (std::abs(v) <= margin * nx) return false;
    return true;
  }
  return true;  // 1 < p < inf: smooth everywhere away from 0
}

int dominant_facet(const NormedSpace& space, const Vec& x, double margin) {
  require_finite(x, "dominant_facet");
  if (space.kind() != NormedSpace::Kind::Polyhedral && !space.p_is_inf())
    throw std::invalid_argument("dominant_facet: l_infty or polyhedral space required");
  const double nx = norm(space, x);
  if (nx == 0.0) throw ZeroVector("dominant_facet: zero vector");
  const TopTwo t = top_two(space, x);
  if (t.best - t.second <= margin * nx)
    throw NotSmooth("dominant_facet: tied maximal facet");
  return t.index;
}

SupportFunctional support_functional(const NormedSpace& space, const Vec& x,
                                     double margin) {
  if (!is_smooth_point(space, x, margin))
    throw NotSmooth("support_functional: norm not smooth at this point");
  const double nx = norm(space, x);
  const int d = space.dim();
  Vec xhat(d);
  for (int i = 0; i < d; ++i) xhat[i] = x[i] / nx;

  SupportFunctional phi;
  phi.row.assign(d, 0.0);
  if (space.kind() == NormedSpace::Kind::Polyhedral || space.p_is_inf()) {
    const int j = dominant_facet(space, x, margin);
    if (space.kind() == NormedSpace::Kind::Polyhedral) {
      const Vec& f = space.facets()[j];
      const double s = dot(f, xhat) >= 0.0 ? 1.0 : -1.0;
      for (int i = 0; i < d; ++i) phi.row[i] = s * f[i];
    } else {
      phi.row[j] = xhat[j] >= 0.0 ? 1.0 : -1.0;
    }
    return phi;
  }
  const double p = space.p_value();
  if (p == 1.0) {
    for (int i = 0; i < d; ++i) phi.row[i] = xhat[i] >= 0.0 ? 1.0 : -1.0;
    return phi;
  }
  for (int i = 0; i < d; ++i) {
    const double s = xhat[i] >= 0.0 ? 1.0 : -1.0;
    phi.row[i] = s * std::pow(std::abs(xhat[i]), p - 1.0);
  }
  return phi;
}

double gamma(const NormedSpace& space) {
  if (space.kind() == NormedSpace::Kind::Polyhedral) {
    // The dual unit ball is the convex hull of the +/- facet functionals, so
    // the convex maximum of ||f||_2^2 is attained at one of them.
    double m = 0.0;
    for (const Vec& f : space.facets()) m = std::max(m, dot(f, f));
    return m;
  }
  if (space.p_is_inf()) return 1.0;
  const double p = space.p_value();
  if (p >= 2.0) return 1.0;
  return std::pow((double)space.dim(), 2.0 / p - 1.0);
}

int k_dimension(const NormedSpace& space) {
  const int d = space.dim();
  if (space.kind() == NormedSpace::Kind::Lp && !space.p_is_inf() &&
      space.p_value() == 2.0)
    return d * (d + 1) / 2;
  return d;
}

LinearIsometry check_isometry(const Matrix& psi, const NormedSpace& source,
                              const NormedSpace& target, int samples,
                              std::uint64_t seed) {
  const int d = source.dim();
  if ((int)psi.rows() != d || (int)psi.cols() != d || target.dim() != d)
    throw DimensionMismatch("check_isometry: dimension mismatch");
  if (std::abs(determinant(psi)) < kEps)
    throw Singular("check_isometry: matrix is singular");

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  double worst = 0.0;
  Vec worst_x;
  for (int t = 0; t < samples; ++t) {
    Vec x(d);
    for (double& v : x) v = gauss(rng);
    Vec y(d, 0.0);
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) y[i] += psi(i, j) * x[j];
    const double ns = norm(source, x);
    const double nt = norm(target, y);
    const double dev = std::abs(nt - ns) / std::max(1.0, ns);
    if (dev > worst) {
      worst = dev;
      worst_x = x;
    }
  }
  if (worst > kEps) {
    std::ostringstream os;
    os << "check_isometry: norm deviation " << worst << " at x = (";
    for (std::size_t i = 0; i < worst_x.size(); ++i)
      os << (i ? "," : "") << worst_x[i];
    os << ")";
    throw NotIsometry(os.str());
  }
  return LinearIsometry{psi, source, target};
}

Matrix linf_to_l1_isometry_2d() {
  Matrix psi(2, 2);
  psi(0, 0) = 0.5;
  psi(0, 1) = -0.5;
  psi(1, 0) = 0.5;
  psi(1, 1) = 0.5;
  return psi;
}

}  // namespace rig
