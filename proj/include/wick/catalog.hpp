#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wick/algebra.hpp"

namespace wick {

/// A named relation family with its parameters. d = 0 selects the family's
/// default (or fixed) number of generators.
struct PresetSpec {
  std::string family;
  int d = 0;
  std::map<std::string, Scalar> params;
};

/// Families:
///   zero(d)                 T = 0 (Cuntz-Toeplitz)
///   qccr(d, q)              i^dagger j = delta_ij + q j i^dagger
///   clifford(d)             qccr with q = -1
///   qij(d, q12, q13, ...)   i^dagger j = delta_ij + q_ij j i^dagger, q_ji = conj(q_ij), q_ii real
///   tlw(d, q)               i^dagger j = delta_ij + q i j^dagger
///   twisted_ccr(d, mu)      twisted canonical commutation relations, 0 < mu < 1
///   twisted_car(d, mu)      twisted anticommutation relations, 0 < mu < 1
///   mucar(d, mu)            twisted_car plus the cubic ideal generators
///   snu2(nu)                generators g1 = alpha*, g2 = gamma*
///   degenerate(d)           i^dagger j = delta_ij (1 - sum_k k k^dagger), T = -1
///   usym(d, q, lambda)      unitarily invariant two-parameter family
///   aklt(lambda)            three generators, spin-1 chain subspace
///   bs_ce(tau)              diagonal T with eigenvalues +-tau
///   bp_ce(lambda, eps)      diagonal T, lambda on |ii>, eps on |ij>
///   e91(mu)                 i^dagger i = j^dagger j = 1, i^dagger j = mu i i^dagger
/// Throws PreconditionError for unknown families or parameters outside the
/// family's domain.
RelationSystem make_preset(const PresetSpec& spec);

std::vector<std::string> preset_families();

/// Eigenvalue set of t_matrix(T) known in closed form for the family, if any.
std::optional<std::vector<Scalar>> expected_t_spectrum(const PresetSpec& spec);

/// The four cubic generator families of the mucar Wick ideal (d >= 2).
std::vector<Polynomial> mucar_cubic_generators(int d, const Scalar& mu);

/// {a_i a_j - mu a_j a_i : i > j}.
std::vector<Polynomial> twisted_ccr_generators(int d, const Scalar& mu);

/// {a_i a_i} together with {a_i a_j + mu a_j a_i : i > j}.
std::vector<Polynomial> twisted_car_generators(int d, const Scalar& mu);

}  // namespace wick
