#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "wick/scalar.hpp"

namespace wick {

/// Dense row-major matrix of exact scalars.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const;
  /// Conjugate transpose.
  Matrix adjoint() const;
  bool is_self_adjoint() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Scalar& c);
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const Scalar& c) { return a *= c; }
  friend Matrix operator*(const Scalar& c, Matrix a) { return a *= c; }
  /// Product; zero entries of the left factor are skipped.
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  /// Kronecker product a (x) b.
  static Matrix kron(const Matrix& a, const Matrix& b);

  std::vector<std::complex<double>> to_complex() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

/// Exact rank by Gaussian elimination.
std::size_t rank(Matrix m);

/// Basis of the right null space {x : m x = 0}, as the columns of the result.
Matrix kernel(Matrix m);

/// Exact inverse; std::nullopt when singular.
std::optional<Matrix> inverse(const Matrix& m);

/// Unique solution of m x = b (b given as columns); std::nullopt when m is
/// singular.
std::optional<Matrix> solve(const Matrix& m, const Matrix& b);

/// Incrementally maintained row-echelon basis of a subspace of K^n.
///
/// Used for span membership: insert spanning vectors, then ask whether a
/// vector reduces to zero.
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t dim) : dim_(dim) {}

  /// Adds v to the span; returns true if the rank grew.
  bool insert(std::vector<Scalar> v);
  bool contains(std::vector<Scalar> v) const;
  std::size_t rank() const { return rows_.size(); }
  std::size_t dim() const { return dim_; }

 private:
  void reduce(std::vector<Scalar>& v) const;

  std::size_t dim_;
  std::vector<std::vector<Scalar>> rows_;  // each normalized with pivot entry 1
  std::vector<std::size_t> pivots_;
};

// ---------------------------------------------------------------- floating point

/// Eigenvalues (ascending) of a Hermitian matrix given row-major, computed by
/// cyclic complex Jacobi rotations.
std::vector<double> hermitian_eigenvalues(const std::vector<std::complex<double>>& a, std::size_t n);

/// Eigenvalues together with orthonormal eigenvectors (columns, row-major n x n).
struct HermitianEigen {
  std::vector<double> values;
  std::vector<std::complex<double>> vectors;
};
HermitianEigen hermitian_eigen(const std::vector<std::complex<double>>& a, std::size_t n);

/// Largest singular value of a square complex matrix.
double operator_norm(const std::vector<std::complex<double>>& a, std::size_t n);

}  // namespace wick
