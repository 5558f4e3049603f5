#pragma once

#include <cstddef>
#include <vector>

#include "wick/algebra.hpp"
#include "wick/tensorops.hpp"

namespace wick {

/// A permutation of {0, ..., n-1} in one-line notation: p[k] is the image of k.
using Permutation = std::vector<int>;

/// T_1 T_2 T_1 == T_2 T_1 T_2 on three legs, exactly.
bool braid_check(const CoeffTensor& t);

Permutation compose(const Permutation& p, const Permutation& q);  // (p o q)[k] = p[q[k]]
Permutation inverse_permutation(const Permutation& p);
std::size_t inversions(const Permutation& p);
std::vector<Permutation> all_permutations(int n);

/// Reduced word (i_1, ..., i_k) with p = s_{i_1} o ... o s_{i_k}, where s_i
/// swaps positions i and i+1 (1-based). Obtained from bubble sort, so
/// k = inversions(p).
std::vector<int> reduced_word(const Permutation& p);

/// Product T_{i_1} ... T_{i_k} of embedded copies of T on n legs.
MatrixOp t_of_word(const CoeffTensor& t, const std::vector<int>& word, int n);

/// T(p) through the bubble-sort reduced word. Throws PreconditionError when
/// the braid relation fails.
MatrixOp t_of_permutation(const CoeffTensor& t, const Permutation& p);

constexpr std::size_t kDefaultPermutationCap = 50'000'000;

/// Sum of T(p) over all n! permutations. Throws PreconditionError when the
/// braid relation fails and ResourceCapError when n! d^(2n) exceeds cap.
MatrixOp p_n_by_permutations(const CoeffTensor& t, int n, std::size_t cap = kDefaultPermutationCap);

struct KernelPsdResult {
  bool psd = false;      // exact
  double eig_min = 0;    // float view
  std::size_t dim = 0;
};

/// Block kernel (p, q) -> T(p^-1 q), of size n! d^n, tested for positive
/// semidefiniteness. Requires the braid relation and n <= 3.
KernelPsdResult permutation_kernel_psd(const CoeffTensor& t, int n);

}  // namespace wick
