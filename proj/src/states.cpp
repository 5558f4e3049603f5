#include "wick/states.hpp"

#include <algorithm>

namespace wick {

bool CoherentParam::is_fock() const {
  return std::all_of(phi.begin(), phi.end(), [](const Scalar& s) { return s.is_zero(); });
}

namespace {

void check_param(const CoherentParam& phi, int d) {
  if (phi.d() != d)
    throw PreconditionError("coherent parameter has " + std::to_string(phi.d()) + " components, expected " +
                            std::to_string(d));
}

void require_generator_only(const Polynomial& p, const char* what) {
  if (!p.generator_only()) throw PreconditionError(std::string(what) + ": generator letters only");
}

}  // namespace

Scalar coherent_on_normal_word(const Word& w, const CoherentParam& phi) {
  Scalar v(1);
  for (Letter l : w) {
    const Scalar& c = phi.phi.at(static_cast<std::size_t>(l.index() - 1));
    if (c.is_zero()) return Scalar(0);
    v *= l.is_gen() ? c.conj() : c;
  }
  return v;
}

Scalar coherent_functional(const Polynomial& p, const CoherentParam& phi, const CoeffTensor& t,
                           const RewriteOptions& options) {
  check_param(phi, t.d());
  Scalar total;
  const Polynomial ordered = wick_order(p, t, options);
  for (const auto& [w, c] : ordered.terms()) total.add_product(c, coherent_on_normal_word(w, phi));
  return total;
}

Scalar inner_product(const Polynomial& f, const Polynomial& g, const CoherentParam& phi, const CoeffTensor& t) {
  require_generator_only(f, "inner_product");
  require_generator_only(g, "inner_product");
  return coherent_functional(adjoint(f) * g, phi, t);
}

Matrix gram_matrix(const std::vector<Word>& words, const CoherentParam& phi, const CoeffTensor& t) {
  const std::size_t n = words.size();
  Matrix g(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) g(a, b) = inner_product(Polynomial(words[a]), Polynomial(words[b]), phi, t);
  return g;
}

Polynomial annihilator_apply(int i, const Polynomial& x, const CoherentParam& phi, const CoeffTensor& t) {
  require_generator_only(x, "annihilator_apply");
  check_indices(x, t.d());
  check_param(phi, t.d());
  if (i < 1 || i > t.d()) throw IndexError("annihilator index outside 1.." + std::to_string(t.d()));
  Polynomial out;
  for (const auto& [w, c] : x.terms()) {
    if (w.empty()) {
      out.add_term(Word{}, c * phi.phi[static_cast<std::size_t>(i - 1)]);
      continue;
    }
    const int j = w[0].index();
    const Word rest = w.slice(1, w.size() - 1);
    if (i == j) out.add_term(rest, c);
    for (const auto& e : t.row(i, j)) {
      Polynomial inner = annihilator_apply(e.k, Polynomial(rest), phi, t);
      for (const auto& [wi, ci] : inner.terms())
        out.add_term(Word{Letter::gen(e.l)} * wi, c * e.value * ci);
    }
  }
  return out;
}

Scalar inner_product_by_annihilators(const Polynomial& f, const Polynomial& g, const CoherentParam& phi,
                                     const CoeffTensor& t) {
  require_generator_only(f, "inner_product_by_annihilators");
  require_generator_only(g, "inner_product_by_annihilators");
  Scalar total;
  for (const auto& [wf, cf] : f.terms()) {
    Polynomial x = g;
    // F^dagger = a_{in}^dagger ... a_{i1}^dagger; a_{i1}^dagger acts first.
    for (Letter l : wf) {
      x = annihilator_apply(l.index(), x, phi, t);
      if (x.is_zero()) break;
    }
    Scalar v;
    for (const auto& [w, c] : x.terms()) v.add_product(c, coherent_on_normal_word(w, phi));
    total.add_product(cf.conj(), v);
  }
  return total;
}

Matrix gram_matrix_by_annihilators(const std::vector<Word>& words, const CoherentParam& phi,
                                   const CoeffTensor& t) {
  const std::size_t n = words.size();
  Matrix g(n, n);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g(a, b) = inner_product_by_annihilators(Polynomial(words[a]), Polynomial(words[b]), phi, t);
  return g;
}

std::vector<Word> all_words(int d, int n) {
  std::size_t count = 1;
  for (int k = 0; k < n; ++k) count *= static_cast<std::size_t>(d);
  std::vector<Word> out;
  out.reserve(count);
  std::vector<int> idx(static_cast<std::size_t>(n), 1);
  for (std::size_t c = 0; c < count; ++c) {
    out.push_back(Word::gens(std::span<const int>(idx)));
    for (int k = n - 1; k >= 0; --k) {
      auto& v = idx[static_cast<std::size_t>(k)];
      if (++v <= d) break;
      v = 1;
    }
  }
  return out;
}

}  // namespace wick
