#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <unordered_set>

#include "rootfold/errors.hpp"
#include "rootfold/root_system.hpp"
#include "rootfold/tables.hpp"

using namespace rootfold;

namespace {

// Closure of the simple roots under their own reflections, computed without the library's
// enumeration.
std::unordered_set<RationalVector> closure_oracle(const std::vector<RationalVector>& simple) {
  std::unordered_set<RationalVector> seen(simple.begin(), simple.end());
  std::vector<RationalVector> todo = simple;
  while (!todo.empty()) {
    RationalVector x = todo.back();
    todo.pop_back();
    for (const auto& a : simple) {
      RationalVector y = x - (Rational(2) * dot(a, x) / dot(a, a)) * a;
      if (seen.insert(y).second) todo.push_back(y);
    }
  }
  return seen;
}

std::size_t root_count_formula(const TypeLabel& t) {
  const std::size_t l = static_cast<std::size_t>(t.rank);
  switch (t.family) {
    case Family::A: return l * (l + 1);
    case Family::B:
    case Family::C: return 2 * l * l;
    case Family::D: return 2 * l * (l - 1);
    case Family::E: return l == 6 ? 72 : l == 7 ? 126 : 240;
    case Family::F: return 48;
    case Family::G: return 12;
    default: return 0;
  }
}

}  // namespace

TEST_CASE("type labels parse and canonicalize") {
  CHECK(TypeLabel::parse("A3") == TypeLabel{Family::A, 3});
  CHECK(TypeLabel::parse("BC2") == TypeLabel{Family::BC, 2});
  CHECK(TypeLabel::parse("Empty").family == Family::Empty);
  CHECK(TypeLabel::parse("∅").family == Family::Empty);
  CHECK(TypeLabel{Family::Empty, 0}.to_string() == "Empty");
  CHECK(TypeLabel{Family::C, 2}.canonical() == TypeLabel{Family::B, 2});
  CHECK(TypeLabel{Family::B, 1}.canonical() == TypeLabel{Family::A, 1});
  CHECK_THROWS_AS(TypeLabel::parse("A0"), DomainError);
  CHECK_THROWS_AS(TypeLabel::parse("X3"), DomainError);
  CHECK_THROWS_AS(TypeLabel::parse("E9"), DomainError);
  CHECK_THROWS_AS(TypeLabel::parse("D3x"), DomainError);
  CHECK_THROWS_AS(RootSystem::build(TypeLabel::parse("A13")), DomainError);
}

TEST_CASE("root sets equal the reflection closure of the simple roots") {
  for (const auto& t : catalogue(8)) {
    CAPTURE(t.to_string());
    auto rs = RootSystem::build(t);
    auto oracle = closure_oracle(rs.simple());
    CHECK(rs.roots().size() == root_count_formula(t));
    CHECK(oracle.size() == rs.roots().size());
    for (const auto& r : rs.roots()) CHECK(oracle.contains(r));
    CHECK(rs.positive().size() * 2 == rs.roots().size());
  }
}

TEST_CASE("documented sizes and marks") {
  CHECK(RootSystem::build(TypeLabel::parse("D5")).positive().size() == 20);
  CHECK(RootSystem::build(TypeLabel::parse("G2")).positive().size() == 6);
  CHECK(RootSystem::build(TypeLabel::parse("F4")).marks() == std::vector<int>{1, 2, 3, 4, 2});
  CHECK(RootSystem::build(TypeLabel::parse("E8")).marks() == std::vector<int>{1, 2, 3, 4, 6, 5, 4, 3, 2});
  CHECK(RootSystem::build(TypeLabel::parse("E7")).marks() == std::vector<int>{1, 2, 2, 3, 4, 3, 2, 1});
  CHECK(RootSystem::build(TypeLabel::parse("E6")).marks() == std::vector<int>{1, 1, 2, 2, 3, 2, 1});
  CHECK(RootSystem::build(TypeLabel::parse("C4")).marks() == std::vector<int>{1, 2, 2, 2, 1});
  CHECK(RootSystem::build(TypeLabel::parse("B4")).marks() == std::vector<int>{1, 1, 2, 2, 2});
  CHECK(RootSystem::build(TypeLabel::parse("A1")).highest() == RationalVector{1, -1});
}

TEST_CASE("positive order is by height then coefficients; highest root is the unique maximum") {
  for (const auto& t : catalogue(7)) {
    CAPTURE(t.to_string());
    auto rs = RootSystem::build(t);
    const auto& c = rs.positive_coefficients();
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
      int h0 = std::accumulate(c[i].begin(), c[i].end(), 0);
      int h1 = std::accumulate(c[i + 1].begin(), c[i + 1].end(), 0);
      CHECK((h0 < h1 || (h0 == h1 && c[i] < c[i + 1])));
    }
    int top = 0;
    std::size_t count = 0;
    for (const auto& b : rs.positive()) top = std::max(top, height(rs, b));
    for (const auto& b : rs.positive()) count += height(rs, b) == top;
    CHECK(count == 1);
    CHECK(height(rs, rs.highest()) == top);
    CHECK(rs.extended()[0] == -rs.highest());
  }
}

TEST_CASE("coweights are dual to the simple roots") {
  for (const auto& t : catalogue(9)) {
    auto rs = RootSystem::build(t);
    CHECK(rs.coweights()[0].is_zero());
    for (int i = 1; i <= rs.rank(); ++i) {
      for (int k = 1; k <= rs.rank(); ++k) {
        CHECK(dot(rs.simple()[static_cast<std::size_t>(i - 1)], rs.coweights()[static_cast<std::size_t>(k)]) ==
              Rational(i == k ? 1 : 0));
      }
    }
    auto v = alcove_vertices(rs);
    for (std::size_t k = 1; k < v.size(); ++k) CHECK(dot(rs.highest(), v[k]) == 1);
  }
}

TEST_CASE("index of connection: |det Cartan| oracle and invariant factors") {
  for (const auto& t : catalogue(7)) {
    CAPTURE(t.to_string());
    auto rs = RootSystem::build(t);
    IntegerMatrix c = cartan_matrix(rs.simple());
    for (std::size_t i = 0; i < c.size(); ++i) CHECK(c[i][i] == 2);
    // Leibniz expansion as an independent determinant.
    std::vector<std::size_t> p(c.size());
    std::iota(p.begin(), p.end(), 0);
    mpz_class det = 0;
    do {
      mpz_class term = 1;
      int inv = 0;
      for (std::size_t i = 0; i < p.size(); ++i) {
        term *= c[i][p[i]];
        for (std::size_t k = i + 1; k < p.size(); ++k) inv += p[i] > p[k];
      }
      det += inv % 2 ? mpz_class(-term) : term;
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(index_of_connection(rs) == mpz_class(abs(det)).get_si());
  }
  CHECK(connection_invariants(RootSystem::build(TypeLabel::parse("D6"))) == std::vector<long>{2, 2});
  CHECK(connection_invariants(RootSystem::build(TypeLabel::parse("D5"))) == std::vector<long>{4});
  CHECK(connection_invariants(RootSystem::build(TypeLabel::parse("E8"))).empty());
}

TEST_CASE("axiom verdicts carry witnesses") {
  std::vector<RationalVector> one = {{1}};
  auto v = verify_axioms(one);
  CHECK_FALSE(v.ok);
  CHECK(v.axiom == Axiom::R2);
  REQUIRE(v.alpha);
  CHECK(*v.alpha == RationalVector{1});

  std::vector<RationalVector> a1 = {{1}, {-1}};
  CHECK(verify_axioms(a1).ok);

  std::vector<RationalVector> bad3 = {{1}, {-1}, {3}, {-3}};
  auto w = verify_axioms(bad3);
  CHECK_FALSE(w.ok);
  CHECK(w.axiom == Axiom::R3);

  std::vector<RationalVector> zero = {{0, 0}};
  CHECK(verify_axioms(zero).axiom == Axiom::R1);
  CHECK(verify_axioms(a1, 2).axiom == Axiom::R1);

  auto rs = RootSystem::build(TypeLabel::parse("B3"));
  auto damaged = rs.roots();
  damaged.erase(damaged.begin());
  auto d = verify_axioms(damaged, 3);
  CHECK_FALSE(d.ok);
  CHECK(d.axiom == Axiom::R2);
  REQUIRE(d.alpha);
  REQUIRE(d.beta);
  CHECK(std::find(damaged.begin(), damaged.end(), reflect(*d.alpha, *d.beta)) == damaged.end());
}

TEST_CASE("reducedness") {
  std::vector<RationalVector> bc1 = {{1}, {-1}, {2}, {-2}};
  CHECK_FALSE(is_reduced(bc1));
  auto rs = RootSystem::build(TypeLabel::parse("C3"));
  CHECK(is_reduced(rs.roots()));
}

TEST_CASE("from_simple rejects a non-base") {
  auto rs = RootSystem::build(TypeLabel::parse("A2"));
  std::vector<RationalVector> simple = {rs.simple()[0], rs.highest()};
  CHECK_THROWS_AS(RootSystem::from_simple(rs.label(), 3, rs.roots(), simple), ConsistencyError);
}

TEST_CASE("root string and length-ratio properties on sampled pairs") {
  std::mt19937_64 rng(2024);
  for (const auto& t : catalogue(8)) {
    auto rs = RootSystem::build(t);
    std::uniform_int_distribution<std::size_t> pick(0, rs.roots().size() - 1);
    for (int s = 0; s < 300; ++s) {
      const auto& a = rs.roots()[pick(rng)];
      const auto& b = rs.roots()[pick(rng)];
      if (a == b || a == -b) continue;
      Rational ab = dot(a, b);
      if (ab.sign() > 0) CHECK(rs.contains(a - b));
      if (ab.sign() < 0) CHECK(rs.contains(a + b));
      if (!ab.is_zero() && norm2(a) <= norm2(b)) CHECK(abs(ab) == norm2(b) / Rational(2));
    }
  }
}
