#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "rootfold/errors.hpp"
#include "rootfold/exact.hpp"

using namespace rootfold;

namespace {

// Leibniz expansion over all permutations.
mpz_class leibniz_determinant(const IntegerMatrix& m) {
  const std::size_t n = m.size();
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  mpz_class total = 0;
  do {
    mpz_class term = 1;
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i) {
      term *= m[i][p[i]];
      for (std::size_t k = i + 1; k < n; ++k) inversions += p[i] > p[k];
    }
    total += inversions % 2 ? mpz_class(-term) : term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<int> d(-4, 4);
  IntegerMatrix m(n, std::vector<mpz_class>(n));
  for (auto& row : m) {
    for (auto& x : row) x = d(rng);
  }
  return m;
}

Rational random_rational(std::mt19937_64& rng) {
  std::uniform_int_distribution<long> num(-30, 30), den(1, 12);
  return Rational(num(rng), den(rng));
}

RationalVector random_vector(std::mt19937_64& rng, std::size_t n) {
  std::vector<Rational> c;
  for (std::size_t i = 0; i < n; ++i) c.push_back(random_rational(rng));
  return RationalVector(std::move(c));
}

}  // namespace

TEST_CASE("canonical rational text round-trips") {
  CHECK(Rational(6, 4).to_string() == "3/2");
  CHECK(Rational(-6, 3).to_string() == "-2");
  CHECK(Rational(0, 5).to_string() == "0");
  CHECK(Rational::parse("-10/4") == Rational(-5, 2));
  CHECK(Rational::parse("7") == Rational(7));
  CHECK_THROWS_AS(Rational::parse("1.5"), DomainError);
  CHECK_THROWS_AS(Rational::parse("1/0"), DomainError);
  CHECK_THROWS(Rational(1, 0));

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    Rational x = random_rational(rng);
    CHECK(Rational::parse(x.to_string()) == x);
  }
}

TEST_CASE("rational field laws on random samples") {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    Rational a = random_rational(rng), b = random_rational(rng), c = random_rational(rng);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a - a == 0);
    if (!b.is_zero()) CHECK((a / b) * b == a);
    CHECK(abs(a) >= 0);
    CHECK((a < b) == (b - a).sign() > 0);
  }
}

TEST_CASE("vector operations") {
  RationalVector x{1, Rational(1, 2), -2};
  RationalVector y{0, 2, 1};
  CHECK(dot(x, y) == -1);
  CHECK(norm2(x) == Rational(21, 4));
  CHECK(x.to_string() == "(1, 1/2, -2)");
  CHECK(RationalVector(3).is_zero());
  CHECK(RationalVector::unit(3, 1) == RationalVector{0, 1, 0});
  CHECK((-x).leading_sign() == -1);
  CHECK_THROWS_AS(dot(x, RationalVector{1, 1}), StructuralError);
  CHECK_THROWS_AS(coroot(RationalVector(2)), DomainError);
}

TEST_CASE("reflection is an involutive isometry fixing the mirror") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    RationalVector a = random_vector(rng, 4);
    if (a.is_zero()) continue;
    RationalVector x = random_vector(rng, 4), y = random_vector(rng, 4);
    CHECK(reflect(a, reflect(a, x)) == x);
    CHECK(reflect(a, a) == -a);
    CHECK(dot(reflect(a, x), reflect(a, y)) == dot(x, y));
    CHECK(pairing(a, a) == 2);
    CHECK(pairing(a, x) == Rational(2) * dot(a, x) / norm2(a));
  }
}

TEST_CASE("solve_in_span finds the dual vector") {
  std::vector<RationalVector> basis = {{1, -1, 0}, {0, 1, -1}};
  std::vector<Constraint> c = {{basis[0], 1}, {basis[1], 0}};
  RationalVector x = solve_in_span(basis, c, 3);
  CHECK(x == RationalVector{Rational(2, 3), Rational(-1, 3), Rational(-1, 3)});
  CHECK(solve_in_span(std::span<const RationalVector>{}, std::span<const Constraint>{}, 2) ==
        RationalVector(2));
  std::vector<Constraint> bad = {{basis[0], 1}, {basis[0], 2}};
  CHECK_THROWS_AS(solve_in_span(basis, bad, 3), SolverError);
}

TEST_CASE("rank and coordinates agree with construction") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 50; ++i) {
    std::vector<RationalVector> b = {random_vector(rng, 4), random_vector(rng, 4)};
    std::vector<RationalVector> rows = b;
    rows.push_back(Rational(3) * b[0] - b[1]);
    CHECK(rank_of(rows) == rank_of(b));
    if (rank_of(b) == 2) {
      auto y = coordinates_in(b, rows[2]);
      CHECK(y == std::vector<Rational>{3, -1});
    }
  }
  CHECK_THROWS_AS(coordinates_in(std::vector<RationalVector>{{1, 0}}, RationalVector{0, 1}), SolverError);
}

TEST_CASE("determinant matches the Leibniz oracle") {
  std::mt19937_64 rng(13);
  for (std::size_t n = 1; n <= 5; ++n) {
    for (int i = 0; i < 20; ++i) {
      IntegerMatrix m = random_matrix(rng, n);
      CHECK(determinant(m) == leibniz_determinant(m));
    }
  }
}

TEST_CASE("Smith invariants: divisibility chain, product equals |det|") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 60; ++i) {
    IntegerMatrix m = random_matrix(rng, 4);
    auto d = smith_invariants(m);
    mpz_class det = determinant(m);
    if (det == 0) continue;
    mpz_class prod = 1;
    for (std::size_t k = 0; k < d.size(); ++k) {
      prod *= d[k];
      if (k + 1 < d.size()) CHECK(d[k + 1] % d[k] == 0);
    }
    CHECK(prod == abs(det));
    mpz_class g = 0;
    for (const auto& row : m) {
      for (const auto& x : row) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    CHECK(d[0] == g);
  }
  IntegerMatrix d4 = {{2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -1, 2}};
  auto inv = smith_invariants(d4);
  CHECK(inv == std::vector<mpz_class>{1, 1, 2, 2});
}
