#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "random_poly.hpp"
#include "wick/catalog.hpp"
#include "wick/kms.hpp"
#include "wick/states.hpp"

using namespace wick;

namespace {

CoeffTensor preset(const std::string& f, int d, std::map<std::string, Scalar> ps = {}) {
  return make_preset({f, d, std::move(ps)}).tensor;
}

// Random Wick monomial with n generators followed by m daggers.
Word random_monomial(std::mt19937& rng, int d, int n, int m) {
  std::uniform_int_distribution<int> idx(1, d);
  std::vector<Letter> ls;
  for (int k = 0; k < n; ++k) ls.push_back(Letter::gen(idx(rng)));
  for (int k = 0; k < m; ++k) ls.push_back(Letter::dag(idx(rng)));
  return Word(std::move(ls));
}

// Gibbs functional tr(lambda^N pi(X)) / tr(lambda^N) on the Fock space, each
// level realized as words modulo ker P_n. With a basis S of words spanning the
// level, tr_n(A) = tr(G_S^-1 M_S) where G_S is the Gram matrix and
// M_S[t][s] = <t, A s>.
class GibbsOracle {
 public:
  GibbsOracle(CoeffTensor t, Scalar lambda, int n_max) : t_(std::move(t)), lambda_(std::move(lambda)) {
    const auto fock = CoherentParam::fock(t_.d());
    for (int n = 0; n <= n_max; ++n) {
      std::vector<Word> chosen;
      auto words = all_words(t_.d(), n);
      Matrix g = gram_matrix(words, fock, t_);
      // Pick words whose Gram columns are independent.
      EchelonBasis cols(words.size());
      for (std::size_t c = 0; c < words.size(); ++c) {
        std::vector<Scalar> v(words.size());
        for (std::size_t r = 0; r < words.size(); ++r) v[r] = g(r, c);
        if (cols.insert(v)) chosen.push_back(words[c]);
      }
      levels_.push_back(chosen);
    }
  }

  Scalar operator()(const Polynomial& x) const {
    const auto fock = CoherentParam::fock(t_.d());
    Scalar num, z, power(1);
    for (const auto& s : levels_) {
      const std::size_t k = s.size();
      if (k > 0) {
        Matrix g(k, k), m(k, k);
        for (std::size_t a = 0; a < k; ++a)
          for (std::size_t b = 0; b < k; ++b) {
            Polynomial ta(s[a]), sb(s[b]);
            g(a, b) = coherent_functional(adjoint(ta) * sb, fock, t_);
            m(a, b) = coherent_functional(adjoint(ta) * x * sb, fock, t_);
          }
        Matrix c = *inverse(g) * m;
        Scalar tr;
        for (std::size_t a = 0; a < k; ++a) tr += c(a, a);
        num += power * tr;
        z += power * Scalar(static_cast<long>(k));
      }
      power *= lambda_;
    }
    return num / z;
  }

 private:
  CoeffTensor t_;
  Scalar lambda_;
  std::vector<std::vector<Word>> levels_;
};

}  // namespace

TEST_CASE("rank series") {
  auto car = kms_series(preset("twisted_car", 3, {{"mu", Scalar::ratio(1, 2)}}), Scalar::ratio(1, 3), 4);
  CHECK(car.ranks == std::vector<std::size_t>{1, 3, 3, 1, 0});
  CHECK(car.partial_sums[3] == Scalar::ratio(64, 27));  // (1 + 1/3)^3
  CHECK(car.partial_sums[4] == car.partial_sums[3]);
  auto ccr = kms_series(preset("twisted_ccr", 2, {{"mu", Scalar::ratio(1, 2)}}), Scalar::ratio(1, 2), 4);
  CHECK(ccr.ranks == std::vector<std::size_t>{1, 2, 3, 4, 5});
  auto ccr3 = kms_series(preset("twisted_ccr", 3, {{"mu", Scalar::ratio(1, 2)}}), Scalar(0), 3);
  CHECK(ccr3.ranks == std::vector<std::size_t>{1, 3, 6, 10});
  for (const auto& s : ccr3.partial_sums) CHECK(s == Scalar(1));
  auto qm = kms_series(preset("qccr", 3, {{"q", Scalar(-1)}}), Scalar(1), 4);
  CHECK(qm.ranks == car.ranks);
  CHECK_THROWS_AS(kms_series(CoeffTensor(2), Scalar(-1), 2), PreconditionError);
}

TEST_CASE("evaluator examples") {
  for (auto lambda : {Scalar::ratio(1, 2), Scalar::ratio(1, 5), Scalar(3)}) {
    KmsEvaluator ev(CoeffTensor(2), lambda, 4);
    CHECK(ev.evaluate(Polynomial::one()) == Scalar(1));
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j)
        CHECK(ev.evaluate(Polynomial::gen(i) * Polynomial::dag(j)) == (i == j ? lambda : Scalar(0)));
  }
  std::mt19937 rng(1);
  auto t = preset("qccr", 2, {{"q", Scalar::ratio(1, 3)}});
  KmsEvaluator ev(t, Scalar::ratio(1, 2), 6);
  for (int trial = 0; trial < 30; ++trial) {
    int n = static_cast<int>(rng() % 4), m = static_cast<int>(rng() % 4);
    if (n == m) continue;
    CHECK(ev.evaluate(Polynomial(random_monomial(rng, 2, n, m))).is_zero());
  }
  CHECK_THROWS_AS(ev.evaluate(Polynomial(Word::gens({1, 1, 1, 1, 1, 1, 1}))), ResourceCapError);
  CHECK_THROWS_AS(KmsEvaluator(t, Scalar(-1), 2), PreconditionError);
}

TEST_CASE("qccr closed form at level one") {
  // kappa(a_i a_j^dagger) = lambda (delta_ij + q kappa(a_i a_j^dagger)).
  auto q = Scalar::ratio(1, 3), lambda = Scalar::ratio(1, 2);
  KmsEvaluator ev(preset("qccr", 2, {{"q", q}}), lambda, 2);
  CHECK(ev.evaluate(Polynomial::gen(1) * Polynomial::dag(1)) == lambda / (Scalar(1) - lambda * q));
  CHECK(ev.evaluate(Polynomial::gen(1) * Polynomial::dag(2)).is_zero());
}

TEST_CASE("KMS self-consistency on random monomials") {
  std::vector<CoeffTensor> ts = {preset("qccr", 2, {{"q", Scalar::ratio(1, 3)}}),
                                 preset("twisted_car", 2, {{"mu", Scalar::ratio(1, 2)}})};
  for (const auto& t : ts) {
    const Scalar lambda = Scalar::ratio(1, 2);
    KmsEvaluator ev(t, lambda, 6);
    std::mt19937 rng(99);
    for (int trial = 0; trial < 100; ++trial) {
      int n = static_cast<int>(rng() % 3), m = static_cast<int>(rng() % 3);
      Polynomial x(random_monomial(rng, 2, n, m));
      int k = static_cast<int>(rng() % 2) + 1;
      CHECK(ev.evaluate(Polynomial::gen(k) * x) == lambda * ev.evaluate(x * Polynomial::gen(k)));
      CHECK(ev.evaluate(x * Polynomial::dag(k)) == lambda * ev.evaluate(Polynomial::dag(k) * x));
    }
  }
}

TEST_CASE("uniqueness window and singular points") {
  // ||T~|| = |q| for qccr and tlw; systems are solvable when lambda ||T~|| < 1.
  std::vector<std::pair<CoeffTensor, Scalar>> cases = {
      {preset("qccr", 2, {{"q", Scalar::ratio(1, 2)}}), Scalar::ratio(3, 2)},
      {preset("tlw", 2, {{"q", Scalar::ratio(1, 3)}}), Scalar(2)},
      {preset("twisted_car", 2, {{"mu", Scalar::ratio(1, 2)}}), Scalar::ratio(1, 2)}};
  for (auto& [t, lambda] : cases) {
    REQUIRE(lambda.re().get_d() * operator_norm(ttilde_matrix(t).m.to_complex(), ttilde_matrix(t).dim()) < 1);
    KmsEvaluator ev(t, lambda, 4);
    for (const auto& u : all_words(2, 2))
      for (const auto& v : all_words(2, 2)) {
        std::vector<Letter> ls(u.begin(), u.end());
        for (Letter l : v) ls.push_back(Letter::dag(l.index()));
        CHECK_NOTHROW(ev.evaluate_normal(Word(std::move(ls))));
      }
  }
  // 1 - lambda q = 0 at lambda = 1/q.
  KmsEvaluator bad(preset("qccr", 2, {{"q", Scalar::ratio(1, 2)}}), Scalar(2), 2);
  CHECK_THROWS_AS(bad.evaluate(Polynomial::gen(1) * Polynomial::dag(1)), SingularSystemError);
}

TEST_CASE("agreement with the Gibbs functional of a finite Fock space") {
  auto t = preset("twisted_car", 2, {{"mu", Scalar::ratio(1, 2)}});
  const Scalar lambda = Scalar::ratio(1, 3);
  GibbsOracle gibbs(t, lambda, 3);
  KmsEvaluator ev(t, lambda, 4);
  CHECK(gibbs(Polynomial::one()) == Scalar(1));
  for (int i = 1; i <= 2; ++i)
    for (int j = 1; j <= 2; ++j) {
      Polynomial x = Polynomial::gen(i) * Polynomial::dag(j);
      CHECK(ev.evaluate(x) == gibbs(x));
      CHECK(ev.evaluate(adjoint(x) * x) == gibbs(adjoint(x) * x));
    }
  CHECK(ev.evaluate(Polynomial::gen(1) * Polynomial::dag(1)) != Scalar(0));
  for (const auto& u : all_words(2, 2))
    for (const auto& v : all_words(2, 2)) {
      Polynomial x = Polynomial(u) * adjoint(Polynomial(v));
      CHECK(ev.evaluate(x) == gibbs(x));
    }
}
