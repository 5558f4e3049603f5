#include "wick/diffcalc.hpp"

#include <map>

#include "wick/braid.hpp"

namespace wick {

namespace {

using Cache = std::map<Word, DAndTwist>;

const DAndTwist& word_d_and_twist(const Word& w, const CoeffTensor& t, Cache& cache) {
  auto it = cache.find(w);
  if (it != cache.end()) return it->second;
  const int d = t.d();
  const auto ud = static_cast<std::size_t>(d);
  DAndTwist out;
  out.D.assign(ud, Polynomial());
  out.Theta.assign(ud, std::vector<Polynomial>(ud));
  if (w.empty()) {
    for (std::size_t i = 0; i < ud; ++i) out.Theta[i][i] = Polynomial::one();
    return cache.emplace(w, std::move(out)).first->second;
  }
  const int j = w[0].index();
  const Word rest = w.slice(1, w.size() - 1);
  const DAndTwist inner = word_d_and_twist(rest, t, cache);  // copy: cache may rehash
  for (int i = 1; i <= d; ++i) {
    auto& di = out.D[static_cast<std::size_t>(i - 1)];
    if (i == j) di.add_term(rest, 1);
    for (const auto& e : t.row(i, j)) {
      // T_{ij}^{mk}: e.k plays the role of m, e.l of k.
      const Polynomial xk = Polynomial::gen(e.l);
      di += e.value * (xk * inner.D[static_cast<std::size_t>(e.k - 1)]);
      for (int l = 1; l <= d; ++l)
        out.Theta[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(l - 1)] +=
            e.value * (xk * inner.Theta[static_cast<std::size_t>(e.k - 1)][static_cast<std::size_t>(l - 1)]);
    }
  }
  return cache.emplace(w, std::move(out)).first->second;
}

}  // namespace

DAndTwist d_and_twist(const Polynomial& f, const CoeffTensor& t) {
  if (!f.generator_only()) throw PreconditionError("d_and_twist: generator letters only");
  check_indices(f, t.d());
  const auto ud = static_cast<std::size_t>(t.d());
  DAndTwist out;
  out.D.assign(ud, Polynomial());
  out.Theta.assign(ud, std::vector<Polynomial>(ud));
  Cache cache;
  for (const auto& [w, c] : f.terms()) {
    const DAndTwist& part = word_d_and_twist(w, t, cache);
    for (std::size_t i = 0; i < ud; ++i) {
      out.D[i] += c * part.D[i];
      for (std::size_t l = 0; l < ud; ++l) out.Theta[i][l] += c * part.Theta[i][l];
    }
  }
  return out;
}

std::size_t form_space_dim(const CoeffTensor& t, int p, std::size_t cap) {
  if (p < 0) throw PreconditionError("form_space_dim: p must be nonnegative");
  if (p == 0) return 1;
  if (p == 1) return static_cast<std::size_t>(t.d());
  const std::size_t dim = power_dim(t.d(), p, cap);
  const MatrixOp tm = t_matrix(t);
  const MatrixOp one_plus = MatrixOp::identity(2, t.d()) + tm;
  EchelonBasis rows(dim);
  for (int r = 1; r < p && rows.rank() < dim; ++r) {
    const MatrixOp op = embed(one_plus, r, p);
    for (std::size_t i = 0; i < dim && rows.rank() < dim; ++i) {
      std::vector<Scalar> row(dim);
      bool nonzero = false;
      for (std::size_t c = 0; c < dim; ++c)
        if (!op.m(i, c).is_zero()) {
          row[c] = op.m(i, c);
          nonzero = true;
        }
      if (nonzero) rows.insert(std::move(row));
    }
  }
  return dim - rows.rank();
}

DiffStarAlgebraResult wick_diff_star_algebra_exists(const CoeffTensor& t) {
  if (!hermiticity_check(t)) throw PreconditionError("wick_diff_star_algebra_exists: tensor is not hermitian");
  DiffStarAlgebraResult out;
  const MatrixOp tm = t_matrix(t);
  auto inv = inverse(tm.m);
  out.invertible = inv.has_value();
  out.braid = braid_check(t);
  out.exists = out.invertible && out.braid;
  if (out.exists) {
    out.S = tm;
    out.R = MatrixOp(2, t.d(), *inv);
  }
  return out;
}

}  // namespace wick
