#include "wick/ideals.hpp"

#include "wick/rewrite.hpp"

namespace wick {

MatrixOp minus_one_eigenprojection(const CoeffTensor& t) {
  const MatrixOp tm = t_matrix(t);
  const std::size_t n = tm.dim();
  Matrix b = kernel(Matrix::identity(n) + tm.m);
  if (b.cols() == 0) return MatrixOp(2, t.d(), Matrix(n, n));
  Matrix bstar = b.adjoint();
  auto gram_inv = inverse(bstar * b);
  if (!gram_inv) throw SingularSystemError("kernel basis Gram matrix is singular");
  return MatrixOp(2, t.d(), b * *gram_inv * bstar);
}

bool is_orthogonal_projection(const MatrixOp& p) { return p.m.is_self_adjoint() && p.m * p.m == p.m; }

QuadraticIdealResult quadratic_ideal_check(const CoeffTensor& t, const MatrixOp& p) {
  if (p.n != 2 || p.d != t.d()) throw PreconditionError("projection must act on H (x) H");
  if (!is_orthogonal_projection(p)) throw PreconditionError("P is not an orthogonal projection");
  const MatrixOp tm = t_matrix(t);
  const MatrixOp id2 = MatrixOp::identity(2, t.d());
  QuadraticIdealResult r;
  r.linear = ((id2 + tm) * p).m.is_zero();
  const MatrixOp lhs = embed(id2 - p, 2, 3) * embed(tm, 1, 3) * embed(tm, 2, 3) * embed(p, 1, 3);
  r.quadratic = lhs.m.is_zero();
  return r;
}

MatrixOp ideal_generator_relations(const CoeffTensor& t, const MatrixOp& p) {
  auto q = quadratic_ideal_check(t, p);
  if (!q.linear || !q.quadratic) throw PreconditionError("quadratic ideal conditions fail for P");
  const MatrixOp tm = t_matrix(t);
  const MatrixOp p1 = embed(p, 1, 4);
  const MatrixOp p3 = embed(p, 3, 4);
  const MatrixOp t1 = embed(tm, 1, 4);
  const MatrixOp t2 = embed(tm, 2, 4);
  const MatrixOp t3 = embed(tm, 3, 4);
  return p1 * p3 * t2 * t1 * t3 * t2 * p3 * p1;
}

Polynomial projection_generator(const MatrixOp& p, int i, int j) {
  if (p.n != 2) throw PreconditionError("projection must act on H (x) H");
  const int d = p.d;
  const std::size_t col = basis_index({i, j}, d);
  Polynomial out;
  for (int k = 1; k <= d; ++k)
    for (int l = 1; l <= d; ++l) out.add_term(Word::gens({k, l}), p.m(basis_index({k, l}, d), col));
  return out;
}

std::vector<Polynomial> range_generators(const MatrixOp& p) {
  // The range of a self-adjoint projection is the kernel of 1 - P.
  Matrix b = kernel(Matrix::identity(p.dim()) - p.m);
  std::vector<Polynomial> out;
  for (std::size_t c = 0; c < b.cols(); ++c) {
    Polynomial g;
    for (std::size_t r = 0; r < b.rows(); ++r) {
      auto w = basis_word(r, p.d, 2);
      g.add_term(Word::gens(std::span<const int>(w)), b(r, c));
    }
    out.push_back(std::move(g));
  }
  return out;
}

WickIdealCheck wick_ideal_condition_details(const CoeffTensor& t, const std::vector<Polynomial>& gens,
                                            std::size_t max_deg) {
  std::size_t longest = 0;
  for (const auto& g : gens) {
    if (!g.generator_only()) throw PreconditionError("ideal generators must be generator-only");
    longest = std::max(longest, g.max_length());
  }
  if (max_deg < longest + 1) throw PreconditionError("max_deg must exceed the longest generator length");
  IdealSpan span(gens, t.d(), max_deg);
  WickIdealCheck out;
  for (std::size_t gi = 0; gi < gens.size(); ++gi) {
    for (int k = 1; k <= t.d(); ++k) {
      Polynomial x = wick_order(Polynomial::dag(k) * gens[gi], t);
      Polynomial free_part;
      std::map<int, Polynomial> coeffs;
      bool shape_ok = true;
      for (const auto& [w, c] : x.terms()) {
        const std::size_t dags = w.dag_count();
        if (dags == 0) {
          free_part.add_term(w, c);
        } else if (dags == 1 && w[w.size() - 1].is_dag()) {
          coeffs[w[w.size() - 1].index()].add_term(w.slice(0, w.size() - 1), c);
        } else {
          shape_ok = false;
        }
      }
      const std::string label = "a" + std::to_string(k) + "* g" + std::to_string(gi + 1);
      if (!shape_ok) {
        out.holds = false;
        out.failures.push_back(label + ": more than one dagger after ordering");
        continue;
      }
      if (!span.contains(free_part)) {
        out.holds = false;
        out.failures.push_back(label + ": dagger-free part " + free_part.to_string() + " not in ideal");
      }
      for (const auto& [m, poly] : coeffs)
        if (!span.contains(poly)) {
          out.holds = false;
          out.failures.push_back(label + ": coefficient of a" + std::to_string(m) + "* not in ideal");
        }
    }
  }
  return out;
}

bool wick_ideal_condition_check(const CoeffTensor& t, const std::vector<Polynomial>& gens, std::size_t max_deg) {
  return wick_ideal_condition_details(t, gens, max_deg).holds;
}

bool coherent_annihilation_check(const std::vector<Polynomial>& gens, const CoherentParam& phi) {
  for (const auto& g : gens) {
    if (!g.generator_only()) throw PreconditionError("ideal generators must be generator-only");
    check_indices(g, phi.d());
    Scalar v;
    for (const auto& [w, c] : g.terms()) v.add_product(c, coherent_on_normal_word(w, phi));
    if (!v.is_zero()) return false;
  }
  return true;
}

}  // namespace wick
