#ifndef FIM_LINALG_HPP
#define FIM_LINALG_HPP

#include <cstddef>
#include <vector>

namespace fim {

/// Dense row-major matrix of doubles.  Everything in this project is tiny
/// (order p+q, rarely above 10), so the storage is a flat vector and the
/// solvers below are textbook dense algorithms.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, double fill = 0.0)
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return data_.empty(); }

  double &operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  double operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<double> &data() const { return data_; }
  std::vector<double> &data() { return data_; }

  bool operator==(const Matrix &other) const = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

Matrix operator*(const Matrix &a, const Matrix &b);
std::vector<double> operator*(const Matrix &a, const std::vector<double> &x);

/// Largest absolute entry; 0 for an empty matrix.
double max_abs(const Matrix &m);

/// Solves a x = b in place with partially pivoted Gaussian elimination.
/// Throws NumericalError when a pivot collapses to zero.
std::vector<double> lu_solve(Matrix a, std::vector<double> b);

/// Solves a X = B column by column (B square) with one shared factorization.
Matrix lu_solve_matrix(Matrix a, Matrix b);

/// Determinant via partially pivoted elimination; 1 for the empty matrix.
double lu_determinant(Matrix a);

/// Inverse of a symmetric positive definite matrix via Cholesky.
/// Throws NumericalError when the factorization breaks down.
Matrix cholesky_inverse(const Matrix &a);

/// Solves a X = B with complete (row and column) pivoting; the slow, maximally
/// stable fallback for matrices that defeat the Cholesky path.
Matrix fully_pivoted_solve(Matrix a, Matrix b);

/// Eigenvalues of a symmetric matrix, ascending, by the cyclic Jacobi method.
/// Jacobi is slow in O() terms but at these orders it is both fast and the
/// most accurate option for small eigenvalues of semidefinite matrices.
std::vector<double> jacobi_eigenvalues(Matrix a);

}  // namespace fim

#endif  // FIM_LINALG_HPP
