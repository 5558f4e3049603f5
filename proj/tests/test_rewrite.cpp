#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "random_poly.hpp"
#include "wick/catalog.hpp"
#include "wick/rewrite.hpp"

using namespace wick;

namespace {

Polynomial g(std::initializer_list<int> idx, const Scalar& c = Scalar(1)) { return Polynomial(Word::gens(idx), c); }

CoeffTensor preset(const std::string& f, int d, std::map<std::string, Scalar> ps = {}) {
  return make_preset({f, d, std::move(ps)}).tensor;
}

}  // namespace

TEST_CASE("is_normal") {
  CHECK(is_normal(Word{Letter::gen(1), Letter::gen(2), Letter::dag(1), Letter::dag(3)}));
  CHECK_FALSE(is_normal(Word{Letter::dag(1), Letter::gen(1)}));
  CHECK(is_normal(Word{}));
}

TEST_CASE("wick_order examples") {
  const auto a1 = Polynomial::gen(1), a2 = Polynomial::gen(2);
  const auto d1 = Polynomial::dag(1), d2 = Polynomial::dag(2);
  CHECK(wick_order(d1 * a1, CoeffTensor(2)) == Polynomial::one());
  CHECK(wick_order(d1 * a2, CoeffTensor(2)).is_zero());

  const Scalar q = Scalar::ratio(1, 2);
  CHECK(wick_order(d1 * a2, preset("qccr", 2, {{"q", q}})) == q * (a2 * d1));

  // snu2 with g1 = alpha*, g2 = gamma*: g1^dagger g1 = 1 - nu^2 g2 g2^dagger.
  const Scalar nu = Scalar::ratio(1, 3);
  auto t = preset("snu2", 0, {{"nu", nu}});
  CHECK(wick_order(d1 * a1, t) == Polynomial::one() - (nu * nu) * (a2 * d2));
}

TEST_CASE("wick_order rejects out-of-range indices") {
  CHECK_THROWS_AS(wick_order(Polynomial::gen(3), CoeffTensor(2)), IndexError);
}

TEST_CASE("term cap") {
  RewriteOptions opts;
  opts.term_cap = 3;
  auto t = preset("qccr", 3, {{"q", Scalar::ratio(1, 2)}});
  Polynomial p = Polynomial::one();
  for (int k = 0; k < 4; ++k) p = p * (Polynomial::dag(1) + Polynomial::dag(2) + Polynomial::dag(3));
  for (int k = 0; k < 4; ++k) p = p * (Polynomial::gen(1) + Polynomial::gen(2) + Polynomial::gen(3));
  CHECK_THROWS_AS(wick_order(p, t, opts), ResourceCapError);
}

TEST_CASE("verify_identity: e91 relations") {
  // i^dagger i = j^dagger j = 1, i^dagger j = mu i i^dagger. Direct ordering
  // gives i^dagger (i^dagger - j^dagger)(i - j) i = 2 (1 - mu) 1.
  for (long mu_num : {2L, 3L}) {
    const Scalar mu(mu_num);
    auto t = preset("e91", 0, {{"mu", mu}});
    const auto i = Polynomial::gen(1), j = Polynomial::gen(2);
    const auto id = Polynomial::dag(1), jd = Polynomial::dag(2);
    Polynomial lhs = id * (id - jd) * (i - j) * i;
    CHECK(verify_identity(lhs, (Scalar(2) * (Scalar(1) - mu)) * Polynomial::one(), t));
    CHECK_FALSE(verify_identity(lhs + (mu - Scalar(1)) * Polynomial::one(), Polynomial(), t));
    // Sign structure survives: for mu > 1 the element is negative.
  }
}

TEST_CASE("snu2 identities") {
  for (auto nu : {Scalar::ratio(1, 2), Scalar::ratio(1, 3)}) {
    auto t = preset("snu2", 0, {{"nu", nu}});
    const auto g1 = Polynomial::gen(1), g2 = Polynomial::gen(2);
    // C = alpha gamma - nu gamma alpha with alpha = g1^dagger, gamma = g2^dagger.
    Polynomial c = adjoint(g1) * adjoint(g2) - nu * (adjoint(g2) * adjoint(g1));
    Polynomial r = Polynomial::one() - g1 * adjoint(g1) - g2 * adjoint(g2);
    CHECK(verify_identity(adjoint(c) * c, r * (Polynomial::one() - r), t));
    CHECK(verify_identity(c * adjoint(c), -(nu * nu) * (r * (Polynomial::one() + (nu * nu) * r)), t));
  }
}

TEST_CASE("confluence, involution, idempotence, degree") {
  std::mt19937 rng(11);
  std::vector<CoeffTensor> tensors = {
      preset("qccr", 2, {{"q", Scalar::ratio(1, 3)}}),
      preset("twisted_car", 3, {{"mu", Scalar::ratio(1, 2)}}),
      preset("tlw", 2, {{"q", Scalar::ratio(-1, 2)}}),
      preset("snu2", 0, {{"nu", Scalar::ratio(2, 3)}}),
      preset("qij", 3, {{"q12", Scalar(Rational(1, 2), Rational(1, 3))}, {"q13", Scalar::ratio(-1, 4)}}),
  };
  for (std::size_t k = 0; k < 100; ++k) {
    const auto& t = tensors[k % tensors.size()];
    auto p = testing::random_polynomial(rng, t.d(), 3, 4);
    auto base = wick_order(p, t);
    for (auto strat : {RewriteOptions::Strategy::Rightmost, RewriteOptions::Strategy::Random}) {
      RewriteOptions o;
      o.strategy = strat;
      o.seed = k;
      CHECK(wick_order(p, t, o) == base);
    }
    CHECK(wick_order(adjoint(p), t) == adjoint(base));
    CHECK(wick_order(base, t) == base);
    for (const auto& [w, c] : p.terms()) {
      const Polynomial ordered = wick_order(Polynomial(w), t);
      for (const auto& [v, cv] : ordered.terms()) {
        CHECK(degree(v) == degree(w));
        CHECK(is_normal(v));
      }
    }
  }
}

TEST_CASE("ideal_membership examples") {
  std::vector<Polynomial> gens = {g({1, 2}) - g({2, 1}), g({1, 1, 2})};
  CHECK(ideal_membership(g({1}) * gens[0] * g({2}), gens, 4));
  CHECK_FALSE(ideal_membership(g({1}), gens, 4));
  const Scalar mu = Scalar::ratio(1, 2);
  std::vector<Polynomial> tw = {g({2, 1}) - g({1, 2}, mu)};
  CHECK(ideal_membership(g({2, 2, 1}) - g({2, 1, 2}, mu), tw, 3));
  CHECK_FALSE(ideal_membership(g({2, 2, 1}) - g({1, 2, 2}, mu), tw, 3));
  CHECK_THROWS_AS(ideal_membership(Polynomial::dag(1), gens, 3), PreconditionError);
}

TEST_CASE("ideal_membership with inhomogeneous generators") {
  std::vector<Polynomial> gens = {g({1, 1}) - Polynomial::one()};
  CHECK(ideal_membership(g({1, 1, 1, 1}) - Polynomial::one(), gens, 4));
  CHECK_FALSE(ideal_membership(g({1, 1, 1}) - Polynomial::one(), gens, 4));
  CHECK(ideal_membership(g({1, 1, 1}) - g({1}), gens, 4));
}

namespace {

// Brute force: enumerate u g v explicitly, then test membership by the rank
// of the coefficient matrix with and without p.
bool brute_member(const Polynomial& p, const std::vector<Polynomial>& gens, int d, std::size_t max_deg) {
  std::vector<Polynomial> elems;
  std::vector<Word> words{Word{}};
  std::vector<Word> frontier{Word{}};
  for (std::size_t len = 1; len <= max_deg; ++len) {
    std::vector<Word> next;
    for (const auto& w : frontier)
      for (int i = 1; i <= d; ++i) next.push_back(w * Word::gens({i}));
    words.insert(words.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  for (const auto& gg : gens)
    for (const auto& u : words)
      for (const auto& v : words) {
        Polynomial e = Polynomial(u) * gg * Polynomial(v);
        if (e.max_length() <= max_deg && !e.is_zero()) elems.push_back(e);
      }
  std::map<Word, std::size_t> col;
  for (const auto& w : words) col.emplace(w, col.size());
  auto build = [&](bool with_p) {
    Matrix m(elems.size() + (with_p ? 1 : 0), col.size());
    for (std::size_t r = 0; r < elems.size(); ++r)
      for (const auto& [w, c] : elems[r].terms()) m(r, col.at(w)) = c;
    if (with_p)
      for (const auto& [w, c] : p.terms()) m(elems.size(), col.at(w)) = c;
    return m;
  };
  return rank(build(true)) == rank(build(false));
}

}  // namespace

TEST_CASE("ideal_membership agrees with brute force") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 2 + trial % 2;
    const std::size_t max_deg = d == 2 ? 4 : 3;
    std::vector<Polynomial> gens;
    for (int k = 0; k < 2; ++k) {
      Polynomial gg;
      std::size_t len = 2;
      for (int t = 0; t < 2; ++t) {
        auto w = testing::random_word(rng, d, len, true);
        while (w.size() != len) w = testing::random_word(rng, d, len, true);
        gg.add_term(w, testing::random_scalar(rng, false));
      }
      gens.push_back(gg);
    }
    // Half the trials use a genuine ideal element, half a random polynomial.
    Polynomial p;
    if (trial % 2 == 0) {
      p = Polynomial(testing::random_word(rng, d, 1, true)) * gens[0] * Polynomial(testing::random_word(rng, d, 1, true));
      p += Scalar(3) * gens[1];
    } else {
      p = testing::random_polynomial(rng, d, 3, max_deg, true);
    }
    if (p.max_length() > max_deg) continue;
    CHECK(ideal_membership(p, gens, max_deg) == brute_member(p, gens, d, max_deg));
  }
}
