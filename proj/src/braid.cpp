#include "wick/braid.hpp"

#include <algorithm>
#include <numeric>

namespace wick {

bool braid_check(const CoeffTensor& t) {
  const MatrixOp tm = t_matrix(t);
  const MatrixOp t1 = embed(tm, 1, 3);
  const MatrixOp t2 = embed(tm, 2, 3);
  return t1 * t2 * t1 == t2 * t1 * t2;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw PreconditionError("compose: permutations of different size");
  Permutation out(p.size());
  for (std::size_t k = 0; k < q.size(); ++k) out[k] = p[static_cast<std::size_t>(q[k])];
  return out;
}

Permutation inverse_permutation(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t k = 0; k < p.size(); ++k) out[static_cast<std::size_t>(p[k])] = static_cast<int>(k);
  return out;
}

std::size_t inversions(const Permutation& p) {
  std::size_t count = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++count;
  return count;
}

std::vector<Permutation> all_permutations(int n) {
  Permutation p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<Permutation> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

void check_permutation(const Permutation& p) {
  std::vector<bool> seen(p.size(), false);
  for (int v : p) {
    if (v < 0 || static_cast<std::size_t>(v) >= p.size() || seen[static_cast<std::size_t>(v)])
      throw PreconditionError("not a permutation");
    seen[static_cast<std::size_t>(v)] = true;
  }
}

}  // namespace

std::vector<int> reduced_word(const Permutation& p) {
  check_permutation(p);
  // Sorting a by swaps a <- a o s_j gives p o s_{j1} o ... o s_{jm} = id.
  Permutation a = p;
  std::vector<int> swaps;
  for (std::size_t pass = 0; pass < a.size(); ++pass)
    for (std::size_t j = 0; j + 1 < a.size() - pass; ++j)
      if (a[j] > a[j + 1]) {
        std::swap(a[j], a[j + 1]);
        swaps.push_back(static_cast<int>(j) + 1);
      }
  std::reverse(swaps.begin(), swaps.end());
  return swaps;
}

MatrixOp t_of_word(const CoeffTensor& t, const std::vector<int>& word, int n) {
  const MatrixOp tm = t_matrix(t);
  std::vector<MatrixOp> legs;
  for (int slot = 1; slot < n; ++slot) legs.push_back(embed(tm, slot, n));
  MatrixOp out = MatrixOp::identity(n, t.d());
  // Multiply from the right end so the sparse factor is always on the left.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (*it < 1 || *it >= n) throw PreconditionError("t_of_word: generator index out of range");
    out = legs[static_cast<std::size_t>(*it - 1)] * out;
  }
  return out;
}

MatrixOp t_of_permutation(const CoeffTensor& t, const Permutation& p) {
  if (!braid_check(t)) throw PreconditionError("t_of_permutation: T does not satisfy the braid relation");
  return t_of_word(t, reduced_word(p), static_cast<int>(p.size()));
}

MatrixOp p_n_by_permutations(const CoeffTensor& t, int n, std::size_t cap) {
  if (n < 1) throw PreconditionError("p_n_by_permutations: n must be positive");
  if (!braid_check(t)) throw PreconditionError("p_n_by_permutations: T does not satisfy the braid relation");
  std::size_t fact = 1;
  for (int k = 2; k <= n; ++k) fact *= static_cast<std::size_t>(k);
  const std::size_t dim = power_dim(t.d(), n);
  if (dim > cap / dim || fact > cap / (dim * dim))
    throw ResourceCapError("p_n_by_permutations: n! d^(2n) exceeds cap " + std::to_string(cap));

  MatrixOp sum(n, t.d(), Matrix(dim, dim));
  for (const auto& p : all_permutations(n)) sum = sum + t_of_word(t, reduced_word(p), n);
  return sum;
}

KernelPsdResult permutation_kernel_psd(const CoeffTensor& t, int n) {
  if (n < 1 || n > 3) throw PreconditionError("permutation_kernel_psd: n must be in 1..3");
  if (!braid_check(t)) throw PreconditionError("permutation_kernel_psd: braid relation fails");
  const auto perms = all_permutations(n);
  const std::size_t block = power_dim(t.d(), n);
  const std::size_t total = perms.size() * block;
  Matrix k(total, total);
  for (std::size_t a = 0; a < perms.size(); ++a)
    for (std::size_t b = 0; b < perms.size(); ++b) {
      MatrixOp tp = t_of_word(t, reduced_word(compose(inverse_permutation(perms[a]), perms[b])), n);
      for (std::size_t r = 0; r < block; ++r)
        for (std::size_t c = 0; c < block; ++c) k(a * block + r, b * block + c) = tp.m(r, c);
    }
  KernelPsdResult out;
  out.dim = total;
  out.psd = exact_is_psd(k);
  auto ev = hermitian_eigenvalues(k.to_complex(), total);
  out.eig_min = ev.front();
  return out;
}

}  // namespace wick
