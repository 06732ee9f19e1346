#include "rig/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace rig {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

bool Matrix::all_finite() const {
  for (double v : a_)
    if (!std::isfinite(v)) return false;
  return true;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw DimensionMismatch("matrix product shape");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix sum shape");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) + b(i, j);
  return c;
}

Matrix operator-(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix difference shape");
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) - b(i, j);
  return c;
}

Matrix operator*(double t, const Matrix& a) {
  Matrix c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = t * a(i, j);
  return c;
}

double max_abs_diff(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw DimensionMismatch("matrix comparison shape");
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, std::abs(a(i, j) - b(i, j)));
  return m;
}

bool approx_equal(const Matrix& a, const Matrix& b, double tol) {
  return max_abs_diff(a, b) <= tol;
}

SymMatrix::SymMatrix(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols() || m_.rows() < 1)
    throw DimensionMismatch("SymMatrix: square matrix of order >= 1 required");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    for (std::size_t j = i + 1; j < m_.cols(); ++j) {
      const double v = 0.5 * (m_(i, j) + m_(j, i));
      m_(i, j) = v;
      m_(j, i) = v;
    }
}

double SymMatrix::trace() const {
  double t = 0.0;
  for (std::size_t i = 0; i < order(); ++i) t += m_(i, i);
  return t;
}

namespace {

double offdiag_frobenius(const Matrix& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (i != j) s += a(i, j) * a(i, j);
  return std::sqrt(s);
}

}  // namespace

Spectrum sym_eigenvalues(const SymMatrix& m, double tol) {
  if (tol <= 0.0) throw std::invalid_argument("sym_eigenvalues: tol must be > 0");
  if (!m.matrix().all_finite())
    throw NonFinite("sym_eigenvalues: matrix has NaN or infinite entries");

  const std::size_t n = m.order();
  Matrix a = m.matrix();

  constexpr int kMaxSweeps = 100;
  double off = offdiag_frobenius(a);
  int sweep = 0;
  while (off > tol && sweep < kMaxSweeps) {
    for (std::size_t p = 0; p + 1 < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (std::abs(apq) <= tol / (double)(n * n)) continue;
        const double theta = (a(q, q) - a(p, p)) / (2.0 * apq);
        double t;  // tan of rotation angle, smaller root
        if (std::abs(theta) > 1e150) {
          t = 1.0 / (2.0 * theta);
        } else {
          t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
          if (theta < 0.0) t = -t;
        }
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        const double tau = s / (1.0 + c);
        const double h = t * apq;
        a(p, p) -= h;
        a(q, q) += h;
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = akp - s * (akq + tau * akp);
          a(p, k) = a(k, p);
          a(k, q) = akq + s * (akp - tau * akq);
          a(q, k) = a(k, q);
        }
      }
    }
    off = offdiag_frobenius(a);
    ++sweep;
  }
  if (off > tol)
    throw NoConvergence("sym_eigenvalues: residual " + std::to_string(off) +
                        " above tolerance after " + std::to_string(sweep) +
                        " sweeps");

  Spectrum sp;
  sp.residual = off;
  sp.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) sp.values[i] = a(i, i);
  std::sort(sp.values.begin(), sp.values.end());
  return sp;
}

double eigenvalue_k(const SymMatrix& m, std::size_t k, double tol) {
  if (k < 1 || k > m.order())
    throw IndexOutOfRange("eigenvalue_k: k=" + std::to_string(k) +
                          " outside [1," + std::to_string(m.order()) + "]");
  return sym_eigenvalues(m, tol).values[k - 1];
}

SymMatrix congruence(const SymMatrix& m, const Matrix& s) {
  if (s.rows() != m.order())
    throw DimensionMismatch("congruence: S must have as many rows as M");
  if (!s.all_finite()) throw NonFinite("congruence: S has non-finite entries");
  return SymMatrix(s.transpose() * m.matrix() * s);
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (!a.all_finite() || !b.all_finite())
    throw NonFinite("kron: non-finite entries");
  Matrix c(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const double aij = a(i, j);
      if (aij == 0.0) continue;
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l)
          c(i * b.rows() + k, j * b.cols() + l) = aij * b(k, l);
    }
  return c;
}

Matrix perfect_shuffle(std::size_t d, std::size_t n) {
  Matrix p(d * n, d * n);
  // coordinate-major index (i-1)n+v maps to vertex-major index (v-1)d+i.
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t v = 0; v < n; ++v) p(v * d + i, i * n + v) = 1.0;
  return p;
}

double spectral_norm(const Matrix& a) {
  const SymMatrix ata(a.transpose() * a);
  const Spectrum sp = sym_eigenvalues(ata);
  const double top = sp.values.back();
  return top > 0.0 ? std::sqrt(top) : 0.0;
}

}  // namespace rig
