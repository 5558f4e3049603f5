#pragma once

#include <vector>

#include "wick/algebra.hpp"
#include "wick/linalg.hpp"
#include "wick/rewrite.hpp"

namespace wick {

/// Components phi_i = <e_i, phi> of the conjugate-linear functional
/// f -> <f, phi> = sum conj(f_i) phi_i. All zero is the Fock case.
struct CoherentParam {
  std::vector<Scalar> phi;

  static CoherentParam fock(int d) { return {std::vector<Scalar>(static_cast<std::size_t>(d))}; }
  int d() const { return static_cast<int>(phi.size()); }
  bool is_fock() const;
};

/// omega_phi(p): Wick order p, then send i1..in j1*..jm* to
/// prod conj(phi_ik) * prod phi_jl.
Scalar coherent_functional(const Polynomial& p, const CoherentParam& phi, const CoeffTensor& t,
                           const RewriteOptions& options = {});

/// Value of omega_phi on a single Wick-ordered word.
Scalar coherent_on_normal_word(const Word& w, const CoherentParam& phi);

/// <F, G> = omega_phi(F^dagger G); F and G generator-only.
Scalar inner_product(const Polynomial& f, const Polynomial& g, const CoherentParam& phi, const CoeffTensor& t);

/// G[a][b] = <words[a], words[b]>.
Matrix gram_matrix(const std::vector<Word>& words, const CoherentParam& phi, const CoeffTensor& t);

/// lambda_phi(a_i^dagger) x for generator-only x, by
///   lambda(i^dagger) 1 = phi_i,
///   lambda(i^dagger)(j w) = delta_ij w + sum_{kl} T_{ij}^{kl} l lambda(k^dagger) w.
Polynomial annihilator_apply(int i, const Polynomial& x, const CoherentParam& phi, const CoeffTensor& t);

/// <F, G> computed without Wick ordering: the letters of F are peeled off G
/// with annihilator_apply and the generator-only remainder is evaluated.
Scalar inner_product_by_annihilators(const Polynomial& f, const Polynomial& g, const CoherentParam& phi,
                                     const CoeffTensor& t);

Matrix gram_matrix_by_annihilators(const std::vector<Word>& words, const CoherentParam& phi,
                                   const CoeffTensor& t);

/// All generator words of length n in big-endian basis order.
std::vector<Word> all_words(int d, int n);

}  // namespace wick
