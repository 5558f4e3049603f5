#include "wick/kms.hpp"

#include "wick/rewrite.hpp"
#include "wick/states.hpp"

namespace wick {

namespace {

void require_fugacity(const Scalar& lambda) {
  if (!lambda.is_real() || sgn(lambda.re()) < 0) throw PreconditionError("lambda must be real and >= 0");
}

}  // namespace

KmsSeries kms_series(const CoeffTensor& t, const Scalar& lambda, int n_max, std::size_t cap) {
  require_fugacity(lambda);
  if (!hermiticity_check(t)) throw PreconditionError("kms_series: tensor is not hermitian");
  if (n_max < 0) throw PreconditionError("kms_series: n_max must be nonnegative");
  KmsSeries out;
  Scalar sum;
  Scalar power(1);
  for (int n = 0; n <= n_max; ++n) {
    const std::size_t r = rank(p_n(t, n, cap).m);
    out.ranks.push_back(r);
    sum += power * Scalar(static_cast<long>(r));
    out.partial_sums.push_back(sum);
    power *= lambda;
  }
  return out;
}

KmsEvaluator::KmsEvaluator(CoeffTensor t, Scalar lambda, int max_bidegree)
    : t_(std::move(t)), lambda_(std::move(lambda)), max_bidegree_(max_bidegree) {
  require_fugacity(lambda_);
}

Scalar KmsEvaluator::evaluate(const Polynomial& x) {
  Scalar total;
  const Polynomial ordered = wick_order(x, t_);
  for (const auto& [w, c] : ordered.terms()) total.add_product(c, evaluate_normal(w));
  return total;
}

Scalar KmsEvaluator::evaluate_normal(const Word& w) {
  if (!is_normal(w)) return evaluate(Polynomial(w));
  if (w.empty()) return Scalar(1);
  const int n = static_cast<int>(w.gen_count());
  const int m = static_cast<int>(w.dag_count());
  if (n + m > max_bidegree_)
    throw ResourceCapError("kms: bidegree (" + std::to_string(n) + "," + std::to_string(m) + ") exceeds cap " +
                           std::to_string(max_bidegree_));
  if (n != m && !lambda_.is_one()) return Scalar(0);
  auto key = std::make_pair(n, m);
  if (!levels_.count(key)) solve_level(n, m);
  return levels_.at(key).at(w);
}

void KmsEvaluator::solve_level(int n, int m) {
  const int d = t_.d();
  power_dim(d, n + m);
  const auto gens = all_words(d, n);
  const auto dags_src = all_words(d, m);
  std::vector<Word> basis;
  for (const auto& g : gens)
    for (const auto& dw : dags_src) {
      std::vector<Letter> letters(g.begin(), g.end());
      for (Letter l : dw) letters.push_back(Letter::dag(l.index()));
      basis.emplace_back(std::move(letters));
    }
  std::map<Word, std::size_t> position;
  for (std::size_t k = 0; k < basis.size(); ++k) position[basis[k]] = k;

  const Scalar lam_n = lambda_.pow(n);
  const std::size_t size = basis.size();
  Matrix system = Matrix::identity(size);
  Matrix rhs(size, 1);
  for (std::size_t row = 0; row < size; ++row) {
    const Word& w = basis[row];
    // Exchange: G D -> D G.
    Word swapped = w.slice(static_cast<std::size_t>(n), static_cast<std::size_t>(m)) *
                   w.slice(0, static_cast<std::size_t>(n));
    const Polynomial ordered = wick_order(Polynomial(swapped), t_);
    for (const auto& [y, c] : ordered.terms()) {
      if (static_cast<int>(y.size()) == n + m) {
        system(row, position.at(y)) -= lam_n * c;
      } else {
        rhs(row, 0) += lam_n * c * evaluate_normal(y);
      }
    }
  }
  auto sol = solve(system, rhs);
  if (!sol)
    throw SingularSystemError("kms: level (" + std::to_string(n) + "," + std::to_string(m) +
                              ") is not uniquely solvable at lambda = " + lambda_.to_string());
  auto& level = levels_[{n, m}];
  for (std::size_t k = 0; k < size; ++k) level.emplace(basis[k], (*sol)(k, 0));
}

Scalar kms_evaluate(const Polynomial& x, const Scalar& lambda, const CoeffTensor& t, int max_bidegree) {
  KmsEvaluator ev(t, lambda, max_bidegree);
  return ev.evaluate(x);
}

}  // namespace wick
