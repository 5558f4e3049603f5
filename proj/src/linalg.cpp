#include "wick/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wick {

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
  return m;
}

bool Matrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Scalar& s) { return s.is_zero(); });
}

Matrix Matrix::adjoint() const {
  Matrix out(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c).conj();
  return out;
}

bool Matrix::is_self_adjoint() const {
  if (!is_square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r).conj()) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("matrix shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i)
    if (!o.data_[i].is_zero()) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Scalar& c) {
  for (auto& v : data_)
    if (!v.is_zero()) v *= c;
  return *this;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
  Matrix out(a.rows_, b.cols_);
  for (std::size_t r = 0; r < a.rows_; ++r)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Scalar& x = a(r, k);
      if (x.is_zero()) continue;
      for (std::size_t c = 0; c < b.cols_; ++c) {
        const Scalar& y = b(k, c);
        if (!y.is_zero()) out(r, c).add_product(x, y);
      }
    }
  return out;
}

Matrix Matrix::kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows_ * b.rows_, a.cols_ * b.cols_);
  for (std::size_t ar = 0; ar < a.rows_; ++ar)
    for (std::size_t ac = 0; ac < a.cols_; ++ac) {
      const Scalar& x = a(ar, ac);
      if (x.is_zero()) continue;
      for (std::size_t br = 0; br < b.rows_; ++br)
        for (std::size_t bc = 0; bc < b.cols_; ++bc) {
          const Scalar& y = b(br, bc);
          if (!y.is_zero()) out(ar * b.rows_ + br, ac * b.cols_ + bc) = x * y;
        }
    }
  return out;
}

std::vector<std::complex<double>> Matrix::to_complex() const {
  std::vector<std::complex<double>> out(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) out[i] = data_[i].to_complex();
  return out;
}

// ---------------------------------------------------------------- elimination

namespace {

/// Reduces m to reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != row)
      for (std::size_t k = 0; k < cols; ++k) std::swap(m(p, k), m(row, k));
    Scalar inv = Scalar(1) / m(row, c);
    for (std::size_t k = c; k < cols; ++k)
      if (!m(row, k).is_zero()) m(row, k) *= inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      Scalar f = -m(r, c);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(row, k).is_zero()) m(r, k).add_product(f, m(row, k));
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(Matrix m) {
  // Forward elimination only.
  std::size_t row = 0;
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  for (std::size_t c = 0; c < cols && row < rows; ++c) {
    std::size_t p = row;
    while (p < rows && m(p, c).is_zero()) ++p;
    if (p == rows) continue;
    if (p != row)
      for (std::size_t k = c; k < cols; ++k) std::swap(m(p, k), m(row, k));
    Scalar inv = Scalar(1) / m(row, c);
    for (std::size_t r = row + 1; r < rows; ++r) {
      if (m(r, c).is_zero()) continue;
      Scalar f = -(m(r, c) * inv);
      for (std::size_t k = c; k < cols; ++k)
        if (!m(row, k).is_zero()) m(r, k).add_product(f, m(row, k));
    }
    ++row;
  }
  return row;
}

Matrix kernel(Matrix m) {
  const std::size_t cols = m.cols();
  auto pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::size_t> free_cols;
  for (std::size_t c = 0; c < cols; ++c)
    if (!is_pivot[c]) free_cols.push_back(c);
  Matrix basis(cols, free_cols.size());
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    basis(free_cols[f], f) = Scalar(1);
    for (std::size_t r = 0; r < pivots.size(); ++r)
      if (!m(r, free_cols[f]).is_zero()) basis(pivots[r], f) = -m(r, free_cols[f]);
  }
  return basis;
}

std::optional<Matrix> solve(const Matrix& m, const Matrix& b) {
  if (!m.is_square() || b.rows() != m.rows()) throw std::invalid_argument("solve: shape mismatch");
  const std::size_t n = m.rows();
  Matrix aug(n, n + b.cols());
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    for (std::size_t c = 0; c < b.cols(); ++c) aug(r, n + c) = b(r, c);
  }
  auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) return std::nullopt;
  Matrix x(n, b.cols());
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) x(r, c) = aug(r, n + c);
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) { return solve(m, Matrix::identity(m.rows())); }

// ---------------------------------------------------------------- EchelonBasis

void EchelonBasis::reduce(std::vector<Scalar>& v) const {
  for (std::size_t r = 0; r < rows_.size(); ++r) {
    const std::size_t p = pivots_[r];
    if (v[p].is_zero()) continue;
    Scalar f = -v[p];
    const auto& row = rows_[r];
    for (std::size_t k = p; k < dim_; ++k)
      if (!row[k].is_zero()) v[k].add_product(f, row[k]);
  }
}

bool EchelonBasis::insert(std::vector<Scalar> v) {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
  reduce(v);
  std::size_t p = 0;
  while (p < dim_ && v[p].is_zero()) ++p;
  if (p == dim_) return false;
  Scalar inv = Scalar(1) / v[p];
  for (std::size_t k = p; k < dim_; ++k)
    if (!v[k].is_zero()) v[k] *= inv;
  // Keep rows fully reduced against the new pivot so reduce() is one pass.
  for (auto& row : rows_) {
    if (row[p].is_zero()) continue;
    Scalar f = -row[p];
    for (std::size_t k = p; k < dim_; ++k)
      if (!v[k].is_zero()) row[k].add_product(f, v[k]);
  }
  rows_.push_back(std::move(v));
  pivots_.push_back(p);
  return true;
}

bool EchelonBasis::contains(std::vector<Scalar> v) const {
  if (v.size() != dim_) throw std::invalid_argument("EchelonBasis: dimension mismatch");
  reduce(v);
  return std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); });
}

// ---------------------------------------------------------------- Jacobi

HermitianEigen hermitian_eigen(const std::vector<std::complex<double>>& input, std::size_t n) {
  using cd = std::complex<double>;
  if (input.size() != n * n) throw std::invalid_argument("hermitian_eigen: size mismatch");
  std::vector<cd> a = input;
  std::vector<cd> v(n * n, cd(0));
  for (std::size_t i = 0; i < n; ++i) v[i * n + i] = 1.0;
  auto at = [&](std::size_t r, std::size_t c) -> cd& { return a[r * n + c]; };

  double total = 0;
  for (const auto& x : a) total += std::norm(x);
  const double eps = 1e-30 * std::max(total, 1e-300);

  for (int sweep = 0; sweep < 100; ++sweep) {
    double off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(at(p, q));
    if (off <= eps) break;
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const cd apq = at(p, q);
        const double mag = std::abs(apq);
        if (mag == 0.0) continue;
        const cd phase = apq / mag;  // e^{i phi}
        const double app = at(p, p).real();
        const double aqq = at(q, q).real();
        const double theta = (aqq - app) / (2.0 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // G = diag(1, conj(phase)) * [[c, s], [-s, c]] restricted to (p, q).
        const cd gpp = c;
        const cd gpq = s;
        const cd gqp = -s * std::conj(phase);
        const cd gqq = c * std::conj(phase);
        for (std::size_t r = 0; r < n; ++r) {  // A <- A G
          const cd arp = at(r, p);
          const cd arq = at(r, q);
          at(r, p) = arp * gpp + arq * gqp;
          at(r, q) = arp * gpq + arq * gqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- G^dagger A
          const cd apk = at(p, k);
          const cd aqk = at(q, k);
          at(p, k) = std::conj(gpp) * apk + std::conj(gqp) * aqk;
          at(q, k) = std::conj(gpq) * apk + std::conj(gqq) * aqk;
        }
        at(p, q) = 0;
        at(q, p) = 0;
        at(p, p) = at(p, p).real();
        at(q, q) = at(q, q).real();
        for (std::size_t r = 0; r < n; ++r) {  // V <- V G
          const cd vrp = v[r * n + p];
          const cd vrq = v[r * n + q];
          v[r * n + p] = vrp * gpp + vrq * gqp;
          v[r * n + q] = vrp * gpq + vrq * gqq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t x, std::size_t y) { return at(x, x).real() < at(y, y).real(); });
  HermitianEigen out;
  out.values.resize(n);
  out.vectors.resize(n * n);
  for (std::size_t j = 0; j < n; ++j) {
    out.values[j] = at(order[j], order[j]).real();
    for (std::size_t r = 0; r < n; ++r) out.vectors[r * n + j] = v[r * n + order[j]];
  }
  return out;
}

std::vector<double> hermitian_eigenvalues(const std::vector<std::complex<double>>& a, std::size_t n) {
  return hermitian_eigen(a, n).values;
}

double operator_norm(const std::vector<std::complex<double>>& a, std::size_t n) {
  std::vector<std::complex<double>> g(n * n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::complex<double> s = 0;
      for (std::size_t k = 0; k < n; ++k) s += std::conj(a[k * n + r]) * a[k * n + c];
      g[r * n + c] = s;
    }
  auto ev = hermitian_eigenvalues(g, n);
  return ev.empty() ? 0.0 : std::sqrt(std::max(0.0, ev.back()));
}

}  // namespace wick
