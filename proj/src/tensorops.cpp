#include "wick/tensorops.hpp"

#include <algorithm>
#include <cmath>

#include "wick/braid.hpp"

namespace wick {

MatrixOp::MatrixOp(int n_, int d_, Matrix m_) : n(n_), d(d_), m(std::move(m_)) {
  if (m.rows() != m.cols() || m.rows() != power_dim(d, n, static_cast<std::size_t>(-1)))
    throw PreconditionError("MatrixOp: matrix is not d^n x d^n");
}

MatrixOp MatrixOp::identity(int n, int d) {
  return MatrixOp(n, d, Matrix::identity(power_dim(d, n, static_cast<std::size_t>(-1))));
}

namespace {

void require_same_space(const MatrixOp& a, const MatrixOp& b) {
  if (a.n != b.n || a.d != b.d) throw PreconditionError("operators act on different tensor powers");
}

}  // namespace

MatrixOp operator*(const MatrixOp& a, const MatrixOp& b) {
  require_same_space(a, b);
  return MatrixOp(a.n, a.d, a.m * b.m);
}

MatrixOp operator+(const MatrixOp& a, const MatrixOp& b) {
  require_same_space(a, b);
  return MatrixOp(a.n, a.d, a.m + b.m);
}

MatrixOp operator-(const MatrixOp& a, const MatrixOp& b) {
  require_same_space(a, b);
  return MatrixOp(a.n, a.d, a.m - b.m);
}

std::size_t power_dim(int d, int n, std::size_t cap) {
  if (d < 1 || n < 0) throw PreconditionError("power_dim: need d >= 1 and n >= 0");
  std::size_t out = 1;
  for (int k = 0; k < n; ++k) {
    if (out > cap / static_cast<std::size_t>(d))
      throw ResourceCapError("d^n = " + std::to_string(d) + "^" + std::to_string(n) + " exceeds cap " +
                             std::to_string(cap));
    out *= static_cast<std::size_t>(d);
  }
  return out;
}

std::size_t basis_index(const std::vector<int>& indices, int d) {
  std::size_t idx = 0;
  for (int i : indices) {
    if (i < 1 || i > d) throw IndexError("basis index outside 1.." + std::to_string(d));
    idx = idx * static_cast<std::size_t>(d) + static_cast<std::size_t>(i - 1);
  }
  return idx;
}

std::vector<int> basis_word(std::size_t index, int d, int n) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (int k = n - 1; k >= 0; --k) {
    out[static_cast<std::size_t>(k)] = static_cast<int>(index % static_cast<std::size_t>(d)) + 1;
    index /= static_cast<std::size_t>(d);
  }
  return out;
}

std::string basis_label(std::size_t index, int d, int n) {
  std::string s = "|";
  auto w = basis_word(index, d, n);
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (d > 9 && k) s += ',';
    s += std::to_string(w[k]);
  }
  return s + ">";
}

MatrixOp t_matrix(const CoeffTensor& t) {
  const int d = t.d();
  Matrix m(static_cast<std::size_t>(d * d), static_cast<std::size_t>(d * d));
  for (const auto& [key, v] : t.entries()) {
    auto [i, j, k, l] = key;
    // T_{ij}^{kl} = <i l | T | j k>
    m(basis_index({i, l}, d), basis_index({j, k}, d)) = v;
  }
  return MatrixOp(2, d, std::move(m));
}

MatrixOp ttilde_matrix(const CoeffTensor& t) {
  const int d = t.d();
  Matrix m(static_cast<std::size_t>(d * d), static_cast<std::size_t>(d * d));
  for (const auto& [key, v] : t.entries()) {
    auto [i, j, k, l] = key;
    m(basis_index({l, k}, d), basis_index({i, j}, d)) = v;
  }
  return MatrixOp(2, d, std::move(m));
}

MatrixOp embed(const MatrixOp& x, int slot, int n) {
  if (x.n != 2) throw PreconditionError("embed: operator must act on two legs");
  if (slot < 1 || slot > n - 1)
    throw PreconditionError("embed: slot " + std::to_string(slot) + " outside 1.." + std::to_string(n - 1));
  const int d = x.d;
  const std::size_t left = power_dim(d, slot - 1, static_cast<std::size_t>(-1));
  const std::size_t right = power_dim(d, n - slot - 1, static_cast<std::size_t>(-1));
  Matrix m = Matrix::kron(Matrix::kron(Matrix::identity(left), x.m), Matrix::identity(right));
  return MatrixOp(n, d, std::move(m));
}

MatrixOp p_n(const CoeffTensor& t, int n, std::size_t cap) {
  if (n < 0) throw PreconditionError("p_n: n must be nonnegative");
  const int d = t.d();
  power_dim(d, n, cap);
  if (n <= 1) return MatrixOp::identity(n, d);
  const MatrixOp tm = t_matrix(t);
  Matrix p = Matrix::identity(static_cast<std::size_t>(d));
  Matrix r = p;
  const Matrix id_d = Matrix::identity(static_cast<std::size_t>(d));
  for (int k = 1; k < n; ++k) {
    // Level k -> k+1.
    const std::size_t rest = power_dim(d, k - 1, static_cast<std::size_t>(-1));
    Matrix t1 = Matrix::kron(tm.m, Matrix::identity(rest));
    Matrix r_next = Matrix::identity(t1.rows()) + t1 * Matrix::kron(id_d, r);
    p = Matrix::kron(id_d, p) * r_next;
    r = std::move(r_next);
  }
  return MatrixOp(n, d, std::move(p));
}

bool exact_is_psd(const Matrix& input) {
  if (!input.is_square()) throw PreconditionError("exact_is_psd: matrix not square");
  Matrix a = input;
  const std::size_t n = a.rows();
  std::vector<bool> active(n, true);
  for (std::size_t step = 0; step < n; ++step) {
    std::optional<std::size_t> pivot;
    for (std::size_t i = 0; i < n; ++i) {
      if (!active[i]) continue;
      const Scalar& v = a(i, i);
      if (sgn(v.re()) < 0) return false;
      if (!pivot && sgn(v.re()) > 0) pivot = i;
    }
    if (!pivot) {
      // All remaining diagonal entries vanish: PSD only if the block is zero.
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (active[i] && active[j] && !a(i, j).is_zero()) return false;
      return true;
    }
    const std::size_t p = *pivot;
    active[p] = false;
    const Scalar inv = Scalar(1) / a(p, p);
    for (std::size_t r = 0; r < n; ++r) {
      if (!active[r] || a(r, p).is_zero()) continue;
      const Scalar f = -(a(r, p) * inv);
      for (std::size_t c = 0; c < n; ++c)
        if (active[c] && !a(p, c).is_zero()) a(r, c).add_product(f, a(p, c));
    }
  }
  return true;
}

std::vector<double> eigenvalues(const Matrix& x) {
  if (!x.is_self_adjoint()) throw PreconditionError("eigenvalues: matrix is not self-adjoint");
  return hermitian_eigenvalues(x.to_complex(), x.rows());
}

SpectralSummary spectral_summary(const Matrix& x) {
  auto ev = eigenvalues(x);
  SpectralSummary s;
  if (!ev.empty()) {
    s.t_minus = ev.front();
    s.t_plus = ev.back();
  }
  s.eig_min = s.t_minus;
  s.norm = std::max(std::abs(s.t_plus), std::abs(s.t_minus));
  s.rank = rank(x);
  s.is_psd = s.eig_min >= -kPsdTolerance * std::max(1.0, s.norm);
  return s;
}

bool cuntz_stability_predicate(const CoeffTensor& t) {
  auto ev = eigenvalues(t_matrix(t).m);
  const double tp = ev.back();
  const double tm = ev.front();
  const double lhs = std::pow(std::max(std::abs(tp), std::abs(tm)), 2);
  const double rhs = 1.0 - tp + tm;
  return lhs < rhs - 1e-12;
}

namespace {

Scalar quadratic_form(const Matrix& p, const std::vector<Scalar>& v) {
  Scalar total;
  for (std::size_t r = 0; r < p.rows(); ++r) {
    if (v[r].is_zero()) continue;
    Scalar row;
    for (std::size_t c = 0; c < p.cols(); ++c)
      if (!v[c].is_zero() && !p(r, c).is_zero()) row.add_product(p(r, c), v[c]);
    total.add_product(v[r].conj(), row);
  }
  return total;
}

Rational rationalize(double x) {
  constexpr long kScale = 1'000'000;
  return Rational(static_cast<long>(std::llround(x * kScale)), kScale);
}

}  // namespace

std::optional<NegativityWitness> negativity_witness(const MatrixOp& pn, const std::optional<MatrixOp>& prev) {
  const int d = pn.d;
  const int n = pn.n;
  if (prev && prev->n == n - 1) {
    Matrix lifted = Matrix::kron(Matrix::identity(static_cast<std::size_t>(d)), prev->m);
    if (auto inv = inverse(lifted)) {
      Matrix w = inv->adjoint() * pn.m * *inv;
      std::size_t best = 0;
      for (std::size_t i = 1; i < w.rows(); ++i)
        if (w(i, i).re() < w(best, best).re()) best = i;
      if (sgn(w(best, best).re()) < 0) {
        std::vector<Scalar> v(w.rows());
        for (std::size_t r = 0; r < w.rows(); ++r) v[r] = (*inv)(r, best);
        NegativityWitness out{v, quadratic_form(pn.m, v),
                              "(1 (x) P_" + std::to_string(n - 1) + ")^-1 " + basis_label(best, d, n)};
        return out;
      }
    }
  }
  auto eig = hermitian_eigen(pn.m.to_complex(), pn.dim());
  if (eig.values.empty() || eig.values.front() >= 0) return std::nullopt;
  // Scale so that the largest component is 1 before rounding.
  std::size_t big = 0;
  for (std::size_t r = 0; r < pn.dim(); ++r)
    if (std::abs(eig.vectors[r * pn.dim()]) > std::abs(eig.vectors[big * pn.dim()])) big = r;
  const std::complex<double> scale = 1.0 / eig.vectors[big * pn.dim()];
  std::vector<Scalar> v(pn.dim());
  for (std::size_t r = 0; r < pn.dim(); ++r) {
    auto z = eig.vectors[r * pn.dim()] * scale;
    v[r] = Scalar(rationalize(z.real()), rationalize(z.imag()));
  }
  Scalar value = quadratic_form(pn.m, v);
  if (sgn(value.re()) >= 0) return std::nullopt;
  return NegativityWitness{v, value, "rationalized lowest eigenvector"};
}

PositivityReport positivity_report(const CoeffTensor& t, int n_max, std::size_t cap) {
  if (!hermiticity_check(t)) throw PreconditionError("positivity_report: tensor is not hermitian");
  PositivityReport rep;
  const MatrixOp tm = t_matrix(t);
  const auto summary = spectral_summary(tm);
  rep.norm_t = summary.norm;
  rep.t_plus = summary.t_plus;
  rep.t_minus = summary.t_minus;
  rep.braid = braid_check(t);

  const Matrix id = Matrix::identity(tm.dim());
  auto norm_at_most = [&](const Scalar& c) {
    return exact_is_psd(id * c - tm.m) && exact_is_psd(id * c + tm.m);
  };
  rep.crit_norm_half = norm_at_most(Scalar::ratio(1, 2));
  rep.crit_positive = exact_is_psd(tm.m);
  rep.crit_braid_norm1 = rep.braid && norm_at_most(Scalar(1));
  if (rep.norm_t < 1) rep.operator_bound = 1.0 / (1.0 - rep.norm_t);
  if (rep.t_plus < 1) rep.collective_bound = 1.0 / (1.0 - rep.t_plus);
  rep.cuntz_stable = cuntz_stability_predicate(t);

  std::optional<MatrixOp> prev;
  for (int n = 1; n <= n_max; ++n) {
    MatrixOp pn = p_n(t, n, cap);
    LevelReport level;
    level.n = n;
    level.summary = spectral_summary(pn);
    level.psd_exact = exact_is_psd(pn.m);
    if (!level.psd_exact) level.witness = negativity_witness(pn, prev);
    rep.levels.push_back(std::move(level));
    prev = std::move(pn);
  }
  return rep;
}

}  // namespace wick
