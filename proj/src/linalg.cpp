#include "fim/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fim/errors.hpp"

namespace fim {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

Matrix operator*(const Matrix &a, const Matrix &b) {
  if (a.cols() != b.rows()) throw ArgumentError("matrix product: dimension mismatch");
  Matrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const double aik = a(i, k);
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += aik * b(k, j);
    }
  return c;
}

std::vector<double> operator*(const Matrix &a, const std::vector<double> &x) {
  if (a.cols() != x.size()) throw ArgumentError("matrix-vector product: dimension mismatch");
  std::vector<double> y(a.rows(), 0.0);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) y[i] += a(i, j) * x[j];
  return y;
}

double max_abs(const Matrix &m) {
  double v = 0.0;
  for (double x : m.data()) v = std::max(v, std::abs(x));
  return v;
}

namespace {

// In-place partially pivoted LU; returns the permutation sign, or 0 when a
// pivot column is exactly zero.
int lu_factor(Matrix &a, std::vector<std::size_t> &perm) {
  const std::size_t n = a.rows();
  perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  int sign = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    double best = std::abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      const double v = std::abs(a(i, k));
      if (v > best) {
        best = v;
        piv = i;
      }
    }
    if (best == 0.0) return 0;
    if (piv != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
      std::swap(perm[k], perm[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      a(i, k) = f;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return sign;
}

std::vector<double> lu_substitute(const Matrix &lu, const std::vector<std::size_t> &perm,
                                  const std::vector<double> &b) {
  const std::size_t n = lu.rows();
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[perm[i]];
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) x[i] -= lu(i, j) * x[j];
  for (std::size_t i = n; i-- > 0;) {
    for (std::size_t j = i + 1; j < n; ++j) x[i] -= lu(i, j) * x[j];
    x[i] /= lu(i, i);
  }
  return x;
}

}  // namespace

std::vector<double> lu_solve(Matrix a, std::vector<double> b) {
  if (a.rows() != a.cols() || a.rows() != b.size())
    throw ArgumentError("lu_solve: dimension mismatch");
  if (b.empty()) return {};
  std::vector<std::size_t> perm;
  if (lu_factor(a, perm) == 0) throw NumericalError("lu_solve: singular system");
  return lu_substitute(a, perm, b);
}

Matrix lu_solve_matrix(Matrix a, Matrix b) {
  if (a.rows() != a.cols() || a.rows() != b.rows())
    throw ArgumentError("lu_solve_matrix: dimension mismatch");
  std::vector<std::size_t> perm;
  if (lu_factor(a, perm) == 0) throw NumericalError("lu_solve_matrix: singular system");
  Matrix x(b.rows(), b.cols());
  std::vector<double> col(b.rows());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = 0; i < b.rows(); ++i) col[i] = b(i, j);
    const std::vector<double> sol = lu_substitute(a, perm, col);
    for (std::size_t i = 0; i < b.rows(); ++i) x(i, j) = sol[i];
  }
  return x;
}

double lu_determinant(Matrix a) {
  if (a.rows() != a.cols()) throw ArgumentError("lu_determinant: matrix not square");
  if (a.rows() == 0) return 1.0;
  std::vector<std::size_t> perm;
  const int sign = lu_factor(a, perm);
  if (sign == 0) return 0.0;
  double det = sign;
  for (std::size_t i = 0; i < a.rows(); ++i) det *= a(i, i);
  return det;
}

Matrix cholesky_inverse(const Matrix &a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw ArgumentError("cholesky_inverse: matrix not square");
  // Lower-triangular factor a = L L'.
  Matrix l(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      double s = a(i, j);
      for (std::size_t k = 0; k < j; ++k) s -= l(i, k) * l(j, k);
      if (i == j) {
        if (s <= 0.0) throw NumericalError("cholesky_inverse: matrix not positive definite");
        l(i, i) = std::sqrt(s);
      } else {
        l(i, j) = s / l(j, j);
      }
    }
  }
  // Invert L in place, then a^-1 = L^-T L^-1.
  Matrix linv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    linv(i, i) = 1.0 / l(i, i);
    for (std::size_t j = 0; j < i; ++j) {
      double s = 0.0;
      for (std::size_t k = j; k < i; ++k) s -= l(i, k) * linv(k, j);
      linv(i, j) = s / l(i, i);
    }
  }
  Matrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      double s = 0.0;
      for (std::size_t k = i; k < n; ++k) s += linv(k, i) * linv(k, j);
      inv(i, j) = s;
      inv(j, i) = s;
    }
  return inv;
}

Matrix fully_pivoted_solve(Matrix a, Matrix b) {
  const std::size_t n = a.rows();
  if (n != a.cols() || n != b.rows())
    throw ArgumentError("fully_pivoted_solve: dimension mismatch");
  std::vector<std::size_t> colperm(n);
  for (std::size_t j = 0; j < n; ++j) colperm[j] = j;

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = k, pc = k;
    double best = 0.0;
    for (std::size_t i = k; i < n; ++i)
      for (std::size_t j = k; j < n; ++j) {
        const double v = std::abs(a(i, j));
        if (v > best) {
          best = v;
          pr = i;
          pc = j;
        }
      }
    if (best == 0.0) throw NumericalError("fully_pivoted_solve: singular system");
    if (pr != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(pr, j));
      for (std::size_t j = 0; j < b.cols(); ++j) std::swap(b(k, j), b(pr, j));
    }
    if (pc != k) {
      for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, pc));
      std::swap(colperm[k], colperm[pc]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const double f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
      for (std::size_t j = 0; j < b.cols(); ++j) b(i, j) -= f * b(k, j);
    }
  }

  Matrix x(n, b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) {
    for (std::size_t i = n; i-- > 0;) {
      double s = b(i, j);
      for (std::size_t k = i + 1; k < n; ++k) s -= a(i, k) * x(colperm[k], j);
      x(colperm[i], j) = s / a(i, i);
    }
  }
  return x;
}

std::vector<double> jacobi_eigenvalues(Matrix a) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw ArgumentError("jacobi_eigenvalues: matrix not square");
  if (n == 0) return {};
  if (n == 1) return {a(0, 0)};

  const int max_sweeps = 64;
  bool converged = false;
  for (int sweep = 0; sweep < max_sweeps; ++sweep) {
    double off = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) off += a(i, j) * a(i, j);
    double diag = 0.0;
    for (std::size_t i = 0; i < n; ++i) diag += a(i, i) * a(i, i);
    if (off <= std::numeric_limits<double>::epsilon() * std::numeric_limits<double>::epsilon() *
                   (diag + off)) {
      converged = true;
      break;
    }

    for (std::size_t p = 0; p < n - 1; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = a(p, q);
        if (apq == 0.0) continue;
        const double app = a(p, p);
        const double aqq = a(q, q);
        // Rotation angle from the classic two-sided Jacobi formulas.
        const double tau = (aqq - app) / (2.0 * apq);
        const double t = (tau >= 0.0) ? 1.0 / (tau + std::sqrt(1.0 + tau * tau))
                                      : 1.0 / (tau - std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double akp = a(k, p);
          const double akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double apk = a(p, k);
          const double aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
      }
    }
  }

  if (!converged) throw NumericalError("jacobi_eigenvalues: no convergence in 64 sweeps");

  std::vector<double> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

}  // namespace fim
