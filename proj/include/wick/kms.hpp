#pragma once

#include <map>
#include <utility>
#include <vector>

#include "wick/algebra.hpp"
#include "wick/tensorops.hpp"

namespace wick {

struct KmsSeries {
  std::vector<std::size_t> ranks;     // rank P_n, n = 0..n_max
  std::vector<Scalar> partial_sums;   // sum_{k<=n} lambda^k rank P_k
};

/// Requires lambda real, lambda >= 0 and a hermitian tensor.
KmsSeries kms_series(const CoeffTensor& t, const Scalar& lambda, int n_max, std::size_t cap = kDefaultDimCap);

/// Gauge-KMS functional kappa_lambda with kappa(k X) = lambda kappa(X k).
///
/// A Wick monomial G D (G: n generators, D: m daggers) satisfies
/// kappa(G D) = lambda^n kappa(D G). Wick ordering D G gives a part of the
/// same bidegree (matrix M) plus lower bidegrees, so each bidegree level is
/// the linear system (1 - lambda^n M) kappa = lambda^n (lower values). For
/// n != m and lambda != 1 the value is 0. Levels are solved once and cached.
class KmsEvaluator {
 public:
  /// Throws PreconditionError unless lambda is real and >= 0.
  KmsEvaluator(CoeffTensor t, Scalar lambda, int max_bidegree);

  /// Wick orders X first. Throws ResourceCapError when a monomial has
  /// n + m > max_bidegree and SingularSystemError when a level system is
  /// not uniquely solvable.
  Scalar evaluate(const Polynomial& x);
  Scalar evaluate_normal(const Word& w);

  /// Number of bidegree levels solved so far.
  std::size_t levels_solved() const { return levels_.size(); }

 private:
  void solve_level(int n, int m);

  CoeffTensor t_;
  Scalar lambda_;
  int max_bidegree_;
  std::map<std::pair<int, int>, std::map<Word, Scalar>> levels_;
};

Scalar kms_evaluate(const Polynomial& x, const Scalar& lambda, const CoeffTensor& t, int max_bidegree);

}  // namespace wick
