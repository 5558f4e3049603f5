#pragma once

#include <optional>
#include <vector>

#include "wick/algebra.hpp"
#include "wick/tensorops.hpp"

namespace wick {

/// Twisted derivatives D_i f and twists Theta_i^l f of a generator-only f,
/// defined by a_i^dagger f = D_i(f) + sum_l Theta_i^l(f) a_l^dagger in W(T).
struct DAndTwist {
  std::vector<Polynomial> D;                   // D[i-1]
  std::vector<std::vector<Polynomial>> Theta;  // Theta[i-1][l-1]
};

/// Recursion on the first letter:
///   D_i(x_j w) = delta_ij w + sum_{l,k} T_{ij}^{lk} x_k D_l(w),
///   Theta_i^l(x_j w) = sum_{m,k} T_{ij}^{mk} x_k Theta_m^l(w),
/// with D_i(1) = 0 and Theta_i^l(1) = delta_il.
DAndTwist d_and_twist(const Polynomial& f, const CoeffTensor& t);

/// Dimension of the constant-coefficient p-forms: the joint kernel of
/// 1 + T_r, r = 1..p-1, on p legs; 1 for p = 0 and d for p = 1.
std::size_t form_space_dim(const CoeffTensor& t, int p, std::size_t cap = kDefaultDimCap);

struct DiffStarAlgebraResult {
  bool exists = false;
  bool invertible = false;
  bool braid = false;
  std::optional<MatrixOp> S;  // = T
  std::optional<MatrixOp> R;  // = T^-1
};

/// Requires a hermitian tensor.
DiffStarAlgebraResult wick_diff_star_algebra_exists(const CoeffTensor& t);

}  // namespace wick
