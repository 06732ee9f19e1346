#pragma once

#include <string>
#include <vector>

#include "rig/linalg.hpp"

namespace rig {

struct ZeroVector : std::runtime_error {
  explicit ZeroVector(const std::string& what) : std::runtime_error(what) {}
};
struct NotSmooth : std::runtime_error {
  explicit NotSmooth(const std::string& what) : std::runtime_error(what) {}
};
struct NotIsometry : std::runtime_error {
  explicit NotIsometry(const std::string& what) : std::runtime_error(what) {}
};
struct Singular : std::runtime_error {
  explicit Singular(const std::string& what) : std::runtime_error(what) {}
};

using Vec = std::vector<double>;

/// Exponent of an l_p norm; infinity is a distinguished value, never a float.
struct PExponent {
  bool is_inf = false;
  double value = 2.0;  // valid only when !is_inf

  static PExponent finite(double p) { return {false, p}; }
  static PExponent inf() { return {true, 0.0}; }
};

/// A finite-dimensional normed space: l_p(d) or a polyhedral norm given by
/// facet functionals (one representative per antipodal facet pair).
class NormedSpace {
 public:
  enum class Kind { Lp, Polyhedral };

  static NormedSpace lp(double p, int d);
  static NormedSpace linf(int d);
  static NormedSpace polyhedral(int d, std::vector<Vec> facets);

  Kind kind() const { return kind_; }
  int dim() const { return d_; }
  bool p_is_inf() const { return p_.is_inf; }
  double p_value() const { return p_.value; }
  const std::vector<Vec>& facets() const { return facets_; }
  std::string descriptor() const;

 private:
  NormedSpace() = default;
  Kind kind_ = Kind::Lp;
  int d_ = 1;
  PExponent p_;
  std::vector<Vec> facets_;
};

/// Standard matrix of a support functional, as a row vector.
struct SupportFunctional {
  Vec row;
};

struct LinearIsometry {
  Matrix matrix;
  NormedSpace source;
  NormedSpace target;
};

// Relative margin below which a near-tie is declared non-smooth.
inline constexpr double kSmoothMargin = 1e-9;

double norm(const NormedSpace& space, const Vec& x);

/// Dual norm of a row functional; exact conjugate-exponent formula for Lp.
/// Not defined for polyhedral spaces.
double dual_norm(const NormedSpace& space, const Vec& row);

bool is_smooth_point(const NormedSpace& space, const Vec& x,
                     double margin = kSmoothMargin);

SupportFunctional support_functional(const NormedSpace& space, const Vec& x,
                                     double margin = kSmoothMargin);

/// For l_infty and polyhedral spaces: the facet index maximizing |F_j . x|.
/// Throws NotSmooth when the maximum is not unique within the margin.
int dominant_facet(const NormedSpace& space, const Vec& x,
                   double margin = kSmoothMargin);

double gamma(const NormedSpace& space);

int k_dimension(const NormedSpace& space);

LinearIsometry check_isometry(const Matrix& psi, const NormedSpace& source,
                              const NormedSpace& target, int samples,
                              std::uint64_t seed);

/// The half-rotation (x,y) -> ((x-y)/2,(x+y)/2), an isometry from l_infty^2
/// onto l_1^2 with Psi^T Psi = I/2. Its inverse maps l_1^2 onto l_infty^2.
Matrix linf_to_l1_isometry_2d();

// Small vector helpers shared across modules.
double dot(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
double norm2(const Vec& a);

}  // namespace rig
