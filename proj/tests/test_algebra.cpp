#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "random_poly.hpp"
#include "wick/algebra.hpp"
#include "wick/linalg.hpp"

using namespace wick;

TEST_CASE("scalar arithmetic is exact") {
  Scalar a(Rational(1, 3), Rational(2));
  Scalar b = Scalar::ratio(-3, 4);
  CHECK((a + b) - b == a);
  CHECK((a * b) / b == a);
  CHECK(a.conj().conj() == a);
  Scalar n = a * a.conj();
  CHECK(n.is_real());
  CHECK(n.re() == a.norm2());
  CHECK(Scalar(2).pow(-2) == Scalar::ratio(1, 4));
  CHECK(Scalar::imag_unit().pow(2) == Scalar(-1));
  CHECK(Scalar::parse_rational("-6/8") == Rational(-3, 4));
  CHECK_THROWS(Scalar::parse_rational("1/0"));
  CHECK_THROWS(Scalar::parse_rational("x"));
}

TEST_CASE("adjoint of words and polynomials") {
  Word w{Letter::gen(1), Letter::dag(2)};
  CHECK(w.adjoint() == Word{Letter::gen(2), Letter::dag(1)});
  CHECK(adjoint(Polynomial::one()) == Polynomial::one());
  Polynomial p(Word::gens({1, 1}), Scalar(Rational(2), Rational(1)));
  Polynomial expect(Word::dags({1, 1}), Scalar(Rational(2), Rational(-1)));
  CHECK(adjoint(p) == expect);
}

TEST_CASE("multiplication") {
  auto a1 = Polynomial::gen(1);
  auto a2 = Polynomial::gen(2);
  CHECK(a1 * a2 == Polynomial(Word::gens({1, 2})));
  CHECK(a1 * Polynomial::one() == a1);
  Polynomial lhs = (a1 + a2) * (a1 - a2);
  Polynomial rhs;
  rhs.add_term(Word::gens({1, 1}), 1);
  rhs.add_term(Word::gens({1, 2}), -1);
  rhs.add_term(Word::gens({2, 1}), 1);
  rhs.add_term(Word::gens({2, 2}), -1);
  CHECK(lhs == rhs);
}

TEST_CASE("degree") {
  CHECK(degree(Word{Letter::gen(1), Letter::gen(2), Letter::dag(1)}) == 1);
  CHECK(degree(Word{}) == 0);
  CHECK(degree(Word::dags({1, 2})) == -2);
}

TEST_CASE("random algebra laws") {
  std::mt19937 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto p = testing::random_polynomial(rng, 3, 4, 3);
    auto q = testing::random_polynomial(rng, 3, 4, 3);
    auto r = testing::random_polynomial(rng, 3, 3, 3);
    CHECK(adjoint(adjoint(p)) == p);
    CHECK((p * q) * r == p * (q * r));
    CHECK(p * Polynomial::one() == p);
    CHECK(Polynomial::one() * p == p);
    CHECK(adjoint(p * q) == adjoint(q) * adjoint(p));
    for (const auto& [wp, cp] : p.terms())
      for (const auto& [wq, cq] : q.terms()) CHECK(degree(wp * wq) == degree(wp) + degree(wq));
  }
}

TEST_CASE("zero coefficients are never stored") {
  Polynomial p = Polynomial::gen(1) - Polynomial::gen(1);
  CHECK(p.is_zero());
  CHECK((Polynomial::gen(1) * Scalar(0)).is_zero());
}

TEST_CASE("hermiticity check") {
  CHECK(hermiticity_check(CoeffTensor(2)));
  CoeffTensor t(2);
  t.set(1, 2, 1, 1, 1);
  CHECK_FALSE(hermiticity_check(t));
  t.set(2, 1, 1, 1, 1);
  CHECK(hermiticity_check(t));
  CHECK_THROWS_AS(t.set(3, 1, 1, 1, 1), IndexError);
}

TEST_CASE("relation system rejects daggered generators") {
  CHECK_THROWS_AS(RelationSystem(CoeffTensor(2), {Polynomial::dag(1)}), PreconditionError);
  CHECK_THROWS_AS(RelationSystem(CoeffTensor(2), {Polynomial::gen(3)}), IndexError);
}

TEST_CASE("exact rank, kernel, inverse") {
  Matrix m(3, 3);
  int v[3][3] = {{1, 2, 3}, {2, 4, 6}, {1, 0, 1}};
  for (int r = 0; r < 3; ++r)
    for (int c = 0; c < 3; ++c) m(r, c) = v[r][c];
  CHECK(rank(m) == 2);
  Matrix k = kernel(m);
  REQUIRE(k.cols() == 1);
  CHECK((m * k).is_zero());
  CHECK_FALSE(inverse(m).has_value());

  Matrix a(2, 2);
  a(0, 0) = Scalar(Rational(0), Rational(1));
  a(0, 1) = 2;
  a(1, 0) = Scalar::ratio(1, 3);
  a(1, 1) = 1;
  auto inv = inverse(a);
  REQUIRE(inv.has_value());
  CHECK(a * *inv == Matrix::identity(2));
}

TEST_CASE("echelon basis membership") {
  EchelonBasis b(3);
  CHECK(b.insert({1, 1, 0}));
  CHECK(b.insert({0, 1, 1}));
  CHECK_FALSE(b.insert({1, 2, 1}));
  CHECK(b.contains({2, 0, -2}));
  CHECK_FALSE(b.contains({0, 0, 1}));
  CHECK(b.rank() == 2);
}

TEST_CASE("jacobi eigenvalues of a complex hermitian matrix") {
  // [[2, i], [-i, 2]] has eigenvalues 1 and 3.
  std::vector<std::complex<double>> h = {{2, 0}, {0, 1}, {0, -1}, {2, 0}};
  auto e = hermitian_eigen(h, 2);
  CHECK(e.values[0] == doctest::Approx(1.0));
  CHECK(e.values[1] == doctest::Approx(3.0));
  // H v = lambda v for each column.
  for (int j = 0; j < 2; ++j)
    for (int r = 0; r < 2; ++r) {
      std::complex<double> hv = h[r * 2 + 0] * e.vectors[0 * 2 + j] + h[r * 2 + 1] * e.vectors[1 * 2 + j];
      CHECK(std::abs(hv - e.values[j] * e.vectors[r * 2 + j]) < 1e-12);
    }
  std::vector<std::complex<double>> nilp = {{0, 0}, {3, 0}, {0, 0}, {0, 0}};
  CHECK(operator_norm(nilp, 2) == doctest::Approx(3.0));
}

TEST_CASE("jacobi against random hermitian matrices") {
  std::mt19937 rng(3);
  std::uniform_real_distribution<double> u(-1, 1);
  for (std::size_t n : {3u, 5u, 9u}) {
    std::vector<std::complex<double>> h(n * n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = r; c < n; ++c) {
        std::complex<double> z(u(rng), r == c ? 0 : u(rng));
        h[r * n + c] = z;
        h[c * n + r] = std::conj(z);
      }
    auto e = hermitian_eigen(h, n);
    double trace = 0, sum = 0;
    for (std::size_t i = 0; i < n; ++i) trace += h[i * n + i].real();
    for (double x : e.values) sum += x;
    CHECK(sum == doctest::Approx(trace));
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t r = 0; r < n; ++r) {
        std::complex<double> hv = 0;
        for (std::size_t k = 0; k < n; ++k) hv += h[r * n + k] * e.vectors[k * n + j];
        CHECK(std::abs(hv - e.values[j] * e.vectors[r * n + j]) < 1e-10);
      }
  }
}
