#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rig {

// Numeric tolerances used across the library.
// kSolverTol drives the Jacobi eigensolver termination; kEps is the global
// comparison tolerance for eigenvalue/closed-form matching.
inline constexpr double kSolverTol = 1e-12;
inline constexpr double kEps = 1e-9;

struct NonFinite : std::runtime_error {
  explicit NonFinite(const std::string& what) : std::runtime_error(what) {}
};
struct NoConvergence : std::runtime_error {
  explicit NoConvergence(const std::string& what) : std::runtime_error(what) {}
};
struct DimensionMismatch : std::runtime_error {
  explicit DimensionMismatch(const std::string& what) : std::runtime_error(what) {}
};
struct IndexOutOfRange : std::out_of_range {
  explicit IndexOutOfRange(const std::string& what) : std::out_of_range(what) {}
};

/// Dense row-major real matrix.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), a_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  double& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

  const std::vector<double>& data() const { return a_; }

  Matrix transpose() const;
  bool all_finite() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<double> a_;
};

Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator+(const Matrix& a, const Matrix& b);
Matrix operator-(const Matrix& a, const Matrix& b);
Matrix operator*(double t, const Matrix& a);
bool approx_equal(const Matrix& a, const Matrix& b, double tol);
double max_abs_diff(const Matrix& a, const Matrix& b);

/// Dense real symmetric matrix. Construction symmetrizes the input so that
/// entries[i][j] == entries[j][i] holds exactly.
class SymMatrix {
 public:
  explicit SymMatrix(std::size_t n) : m_(n, n) {
    if (n < 1) throw DimensionMismatch("SymMatrix: order must be >= 1");
  }
  explicit SymMatrix(Matrix m);

  std::size_t order() const { return m_.rows(); }
  double operator()(std::size_t i, std::size_t j) const { return m_(i, j); }
  void set(std::size_t i, std::size_t j, double v) {
    m_(i, j) = v;
    m_(j, i) = v;
  }
  const Matrix& matrix() const { return m_; }
  double trace() const;

 private:
  Matrix m_;
};

/// Full sorted spectrum of a symmetric matrix. `residual` is the remaining
/// off-diagonal Frobenius mass at solver termination.
struct Spectrum {
  std::vector<double> values;  // non-decreasing
  double residual = 0.0;
};

/// All eigenvalues of M, sorted ascending, via cyclic Jacobi rotations.
Spectrum sym_eigenvalues(const SymMatrix& m, double tol = kSolverTol);

/// k-th smallest eigenvalue (1-based).
double eigenvalue_k(const SymMatrix& m, std::size_t k, double tol = kSolverTol);

/// S^T M S, symmetrized after computation.
SymMatrix congruence(const SymMatrix& m, const Matrix& s);

/// Kronecker product A (x) B.
Matrix kron(const Matrix& a, const Matrix& b);

/// The dn x dn permutation matrix P with P (B_i (x) L) P^T = L (x) B_i for
/// every n x n matrix L and i in [d]. Index map: (i-1)n+v -> (v-1)d+i.
Matrix perfect_shuffle(std::size_t d, std::size_t n);

/// Spectral norm (largest singular value) of an arbitrary matrix.
double spectral_norm(const Matrix& a);

}  // namespace rig
