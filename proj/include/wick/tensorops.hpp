#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "wick/algebra.hpp"
#include "wick/linalg.hpp"

namespace wick {

/// Operator on the n-fold tensor power of C^d. The basis vector
/// |i1 ... in> sits at position sum (ik - 1) d^(n-k).
struct MatrixOp {
  int n = 0;
  int d = 1;
  Matrix m;

  MatrixOp() = default;
  MatrixOp(int n_, int d_, Matrix m_);

  static MatrixOp identity(int n, int d);
  std::size_t dim() const { return m.rows(); }

  friend bool operator==(const MatrixOp& a, const MatrixOp& b) {
    return a.n == b.n && a.d == b.d && a.m == b.m;
  }
};

MatrixOp operator*(const MatrixOp& a, const MatrixOp& b);
MatrixOp operator+(const MatrixOp& a, const MatrixOp& b);
MatrixOp operator-(const MatrixOp& a, const MatrixOp& b);

constexpr std::size_t kDefaultDimCap = 4096;

std::size_t power_dim(int d, int n, std::size_t cap = kDefaultDimCap);

/// 0-based position of |i1 ... in> (1-based letters).
std::size_t basis_index(const std::vector<int>& indices, int d);
std::vector<int> basis_word(std::size_t index, int d, int n);
/// "|122>".
std::string basis_label(std::size_t index, int d, int n);

/// <ij|T|kl> = T_{ik}^{lj}.
MatrixOp t_matrix(const CoeffTensor& t);

/// Row (l,k), column (i,j) holds T_{ij}^{kl}.
MatrixOp ttilde_matrix(const CoeffTensor& t);

/// X (an operator on two legs) acting on legs slot, slot+1 of an n-fold
/// tensor power.
MatrixOp embed(const MatrixOp& x, int slot, int n);

/// Fock Gram operator by P_{k+1} = (1 (x) P_k) R_{k+1}, R_{k+1} = 1 + T_1 (1 (x) R_k).
/// n = 0 gives the 1x1 identity. Throws ResourceCapError if d^n > cap.
MatrixOp p_n(const CoeffTensor& t, int n, std::size_t cap = kDefaultDimCap);

/// Exact positive semidefiniteness of a self-adjoint matrix via symmetric
/// Gaussian elimination (Schur complements with positive pivots).
bool exact_is_psd(const Matrix& m);

struct SpectralSummary {
  double norm = 0;
  double t_plus = 0;
  double t_minus = 0;
  double eig_min = 0;
  std::size_t rank = 0;
  bool is_psd = false;
};

constexpr double kPsdTolerance = 1e-9;

/// Float eigenvalues, exact rank. Throws PreconditionError unless X = X^dagger
/// exactly.
SpectralSummary spectral_summary(const Matrix& x);
inline SpectralSummary spectral_summary(const MatrixOp& x) { return spectral_summary(x.m); }

/// Sorted float eigenvalues of a self-adjoint exact matrix.
std::vector<double> eigenvalues(const Matrix& x);

/// max(|t+|, |t-|)^2 < 1 - t+ + t- for the spectrum of T, with an absolute
/// slack of 1e-12 on the strict inequality.
bool cuntz_stability_predicate(const CoeffTensor& t);

/// Exact vector v with <v, P v> < 0, certifying that P is not PSD.
struct NegativityWitness {
  std::vector<Scalar> vector;
  Scalar value;            // <v, P v>
  std::string description; // how v was obtained
};

struct LevelReport {
  int n = 0;
  SpectralSummary summary;
  bool psd_exact = false;
  std::optional<NegativityWitness> witness;
};

struct PositivityReport {
  double norm_t = 0;
  double t_plus = 0;
  double t_minus = 0;
  bool braid = false;
  bool crit_norm_half = false;    // ||T|| <= 1/2
  bool crit_positive = false;     // T >= 0
  bool crit_braid_norm1 = false;  // braid and ||T|| <= 1
  std::optional<double> operator_bound;    // 1/(1 - ||T||) when ||T|| < 1
  std::optional<double> collective_bound;  // 1/(1 - t+) when t+ < 1
  bool cuntz_stable = false;
  std::vector<LevelReport> levels;         // n = 1 .. n_max

  bool any_criterion() const { return crit_norm_half || crit_positive || crit_braid_norm1; }
};

/// Throws PreconditionError for a non-hermitian tensor.
PositivityReport positivity_report(const CoeffTensor& t, int n_max, std::size_t cap = kDefaultDimCap);

/// Looks for an exact negativity certificate of the self-adjoint P_{n}: first
/// the diagonal of (1 (x) P_{n-1})^{-1} P_n (1 (x) P_{n-1})^{-1} when
/// 1 (x) P_{n-1} is invertible, then a rationalized eigenvector of the
/// smallest eigenvalue.
std::optional<NegativityWitness> negativity_witness(const MatrixOp& pn, const std::optional<MatrixOp>& prev);

}  // namespace wick
