#pragma once

#include <string>
#include <vector>

#include "wick/algebra.hpp"
#include "wick/states.hpp"
#include "wick/tensorops.hpp"

namespace wick {

/// Orthogonal projection onto ker(1 + T) as B (B* B)^-1 B* for an exact
/// kernel basis B.
MatrixOp minus_one_eigenprojection(const CoeffTensor& t);

/// P = P^dagger = P^2, exactly.
bool is_orthogonal_projection(const MatrixOp& p);

struct QuadraticIdealResult {
  bool linear = false;     // (1 + T) P = 0
  bool quadratic = false;  // (1 (x) (1-P)) T_1 T_2 (P (x) 1) = 0
};

/// Throws PreconditionError unless P is an orthogonal projection on H (x) H.
QuadraticIdealResult quadratic_ideal_check(const CoeffTensor& t, const MatrixOp& p);

/// P_1 P_3 T_2 T_1 T_3 T_2 P_3 P_1 on four legs. Its matrix element
/// <k1 k2 r1 r2| M |i1 i2 s1 s2> is the coefficient of A_r A_s^dagger in
/// A_k^dagger A_i, where A_ij = sum_{kl} <kl|P|ij> a_k a_l. Requires both
/// quadratic ideal conditions.
MatrixOp ideal_generator_relations(const CoeffTensor& t, const MatrixOp& p);

/// A_ij = sum_{kl} <kl|P|ij> a_k a_l.
Polynomial projection_generator(const MatrixOp& p, int i, int j);

/// Generators sum_{kl} v_{kl} a_k a_l for a basis v of the range of P.
std::vector<Polynomial> range_generators(const MatrixOp& p);

struct WickIdealCheck {
  bool holds = true;
  std::vector<std::string> failures;  // "a_k^dagger g_m: <part>"
};

/// For each generator g and each k, Wick-orders a_k^dagger g and tests that
/// the dagger-free part and every coefficient of a_m^dagger lie in the
/// ideal truncated at max_deg.
WickIdealCheck wick_ideal_condition_details(const CoeffTensor& t, const std::vector<Polynomial>& gens,
                                            std::size_t max_deg);
bool wick_ideal_condition_check(const CoeffTensor& t, const std::vector<Polynomial>& gens, std::size_t max_deg);

/// Every generator vanishes under a_i -> <phi, a_i> = conj(phi_i).
bool coherent_annihilation_check(const std::vector<Polynomial>& gens, const CoherentParam& phi);

}  // namespace wick
