#include <doctest.h>

#include <algorithm>
#include <set>

#include "rootfold/errors.hpp"
#include "rootfold/folding.hpp"
#include "rootfold/tables.hpp"

using namespace rootfold;

namespace {

std::shared_ptr<const RootSystem> sys(const char* label) {
  return std::make_shared<const RootSystem>(RootSystem::build(TypeLabel::parse(label)));
}

// Orbit average computed by iterating omega until it returns to the start.
RationalVector average_oracle(const IsometryMap& omega, const RationalVector& beta) {
  RationalVector sum = beta;
  RationalVector x = omega.apply(beta);
  int count = 1;
  IsometryMap power = omega;
  while (!power.is_identity()) {
    sum = sum + x;
    x = omega.apply(x);
    power = omega.compose(power);
    ++count;
  }
  return Rational(1, count) * sum;
}

std::set<std::string> as_text(const std::vector<RationalVector>& v) {
  std::set<std::string> out;
  for (const auto& x : v) out.insert(x.to_string());
  return out;
}

FoldedRootSystem folded(const char* label, int j) { return fold_root_system(make_context(sys(label), j)); }

}  // namespace

TEST_CASE("context: J membership and documented multiplicities") {
  CHECK_THROWS_WITH_AS(make_context(sys("B4"), 2), "j = 2 is not in J = {0,1} for B4", DomainError);
  CHECK(make_context(sys("E6"), 1).multiplicities == std::vector<int>{1, 2, 1});
  CHECK(make_context(sys("E7"), 7).multiplicities == std::vector<int>{1, 2, 3, 2, 1});
  CHECK(make_context(sys("C6"), 6).multiplicities == std::vector<int>{1, 2, 2, 1});
  auto e7 = make_context(sys("E7"), 7);
  CHECK(e7.orbits == std::vector<std::vector<int>>{{0, 7}, {1, 6}, {3, 5}, {4}, {2}});
  auto a4 = make_context(sys("A4"), 0);
  CHECK(a4.order == 1);
  CHECK(a4.rank() == 4);
}

TEST_CASE("fixed space dimension equals the number of nonzero orbits") {
  CHECK(fixed_space_dimension(make_context(sys("E7"), 7)) == 4);
  CHECK(fixed_space_dimension(make_context(sys("A5"), 3)) == 2);
  CHECK(fixed_space_dimension(make_context(sys("A5"), 1)) == 0);
  for (const auto& t : catalogue(8)) {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build(t));
    for (int j : minuscule_indices(*rs)) {
      auto ctx = make_context(rs, j);
      CHECK(fixed_space_dimension(ctx) == static_cast<std::size_t>(ctx.rank()));
      CHECK(fixed_space_basis(ctx).size() == static_cast<std::size_t>(ctx.rank()));
    }
  }
}

TEST_CASE("fold_vector agrees with the iterated average oracle") {
  for (const char* label : {"A5", "B4", "C4", "D5", "D6", "E6", "E7"}) {
    auto rs = sys(label);
    for (int j : minuscule_indices(*rs)) {
      auto ctx = make_context(rs, j);
      for (const auto& b : rs->roots()) CHECK(fold_vector(ctx, b) == average_oracle(ctx.omega(), b));
    }
  }
}

TEST_CASE("folded roots, vanishing set and profiles match full enumeration") {
  for (const auto& t : catalogue(9)) {
    auto rs = std::make_shared<const RootSystem>(RootSystem::build(t));
    for (int j : minuscule_indices(*rs)) {
      if (j == 0) continue;
      CAPTURE(t.to_string());
      CAPTURE(j);
      auto ctx = make_context(rs, j);
      auto f = fold_root_system(ctx);
      std::vector<RationalVector> images;
      std::vector<RationalVector> vanish;
      for (const auto& b : rs->roots()) {
        RationalVector a = average_oracle(ctx.omega(), b);
        if (a.is_zero()) {
          if (rs->is_positive(b)) vanish.push_back(b);
        } else {
          images.push_back(a);
        }
        CHECK(is_vanishing(ctx, b) == a.is_zero());
      }
      CHECK(as_text(f.roots) == as_text(images));
      CHECK(as_text(f.vanish) == as_text(vanish));
      CHECK(as_text(disappearing_roots(ctx)) == as_text(vanish));

      const RationalVector& pi0 = ctx.pi[0];
      REQUIRE(f.profiles.size() == f.positive.size() + 1);
      for (const auto& p : f.profiles) {
        std::set<int> oracle;
        for (const auto& g : rs->roots()) {
          if (average_oracle(ctx.omega(), g) == p.root) {
            Rational v = dot(g, pi0);
            REQUIRE(v.is_integer());
            oracle.insert(static_cast<int>(v.numerator().get_si()));
          }
        }
        CHECK(p.values == oracle);
        for (int v : p.values) CHECK(std::abs(v) <= ctx.order - 1);
        if (!p.root.is_zero()) CHECK(p.values.contains(0));
      }
    }
  }
}

TEST_CASE("documented vanishing and disappearing sets") {
  auto b3 = make_context(sys("B3"), 1);
  // e1 is moved to -e1 by the stabilizer, so its average is zero.
  CHECK(is_vanishing(b3, RationalVector{1, 0, 0}));
  CHECK_FALSE(is_vanishing(b3, RationalVector{0, 1, 0}));
  CHECK(disappearing_roots(make_context(sys("B4"), 1)) == std::vector<RationalVector>{{1, 0, 0, 0}});
  CHECK(disappearing_roots(make_context(sys("E7"), 7)).size() == 3);
  CHECK(disappearing_roots(make_context(sys("A5"), 1)).size() == 15);
  CHECK(disappearing_roots(make_context(sys("A5"), 0)).empty());
}

TEST_CASE("fold coefficients") {
  auto rs = sys("E7");
  auto ctx = make_context(rs, 7);
  CHECK(fold_coefficients(ctx, rs->highest()) == std::vector<int>{2, 3, 2, 1});
  CHECK(fold_coefficients(ctx, rs->extended()[0]) == std::vector<int>{-2, -3, -2, -1});
  for (const auto& b : rs->roots()) {
    RationalVector a = fold_vector(ctx, b);
    if (a.is_zero()) continue;
    auto c = fold_coefficients(ctx, b);
    RationalVector sum(rs->ambient_dim());
    for (std::size_t k = 0; k < c.size(); ++k) sum = sum + Rational(c[k]) * ctx.alpha_bar[k + 1];
    CHECK(sum == a);
    bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    CHECK((nonneg || nonpos));
  }
}

TEST_CASE("folded coroots and lifted reflections") {
  for (const char* label : {"B4", "C5", "D5", "D6", "E6", "E7"}) {
    auto rs = sys(label);
    for (int j : minuscule_indices(*rs)) {
      if (j == 0) continue;
      auto ctx = make_context(rs, j);
      std::set<std::string> done;
      for (const auto& b : rs->roots()) {
        RationalVector a = fold_vector(ctx, b);
        if (a.is_zero() || !done.insert(a.to_string()).second) continue;
        CHECK(folded_coroot(ctx, b) == coroot(a));
        IsometryMap w = lift_reflection(ctx, b);
        CHECK(w.compose(ctx.omega()) == ctx.omega().compose(w));
        for (const auto& x : fixed_space_basis(ctx)) CHECK(w.apply(x) == reflect(a, x));
      }
    }
  }
}

TEST_CASE("documented folded types") {
  CHECK(folded("B5", 1).label.to_string() == "B4");
  CHECK(folded("D8", 7).label.to_string() == "C4");
  CHECK(folded("C7", 7).label.to_string() == "BC3");
  CHECK_FALSE(folded("C5", 5).reduced);
  CHECK(folded("C4", 4).reduced);
  auto g2 = folded("E6", 1);
  CHECK(g2.label.to_string() == "G2");
  CHECK(g2.roots.size() == 12);
  CHECK(folded("D5", 5).label.to_string() == "BC1");
  CHECK(folded("E7", 7).label.to_string() == "F4");
  CHECK(folded("E7", 7).positive.size() == 24);
  auto empty = folded("A6", 2);
  CHECK(empty.label.family == Family::Empty);
  CHECK(empty.roots.empty());
  CHECK(empty.extended_simple.empty());
  CHECK(folded("A5", 2).label.to_string() == "A1");
  CHECK(folded("A4", 0).label.to_string() == "A4");
}

TEST_CASE("documented profiles") {
  auto e6 = folded("E6", 1);
  CHECK(e6.profiles[0].root.is_zero());
  CHECK(e6.profiles[0].values == std::set<int>{-2, -1, 1, 2});
  auto d7 = folded("D7", 7);
  CHECK(d7.profiles[0].values == std::set<int>{-3, -2, -1, 1, 2, 3});
  Rational shortest = norm2(d7.positive[0]);
  for (const auto& r : d7.positive) shortest = std::min(shortest, norm2(r));
  Rational longest = shortest;
  for (const auto& r : d7.positive) longest = std::max(longest, norm2(r));
  for (std::size_t i = 1; i < d7.profiles.size(); ++i) {
    const auto& p = d7.profiles[i];
    if (norm2(p.root) == shortest) CHECK(p.values == std::set<int>{-3, -2, -1, 0, 1, 2, 3});
    // The long class only reaches its own orbit sum: the preimages are orthogonal to pi_0.
    if (norm2(p.root) == longest) CHECK(p.values == std::set<int>{0});
  }
}

TEST_CASE("folded metric diagram matches the combinatorial fold") {
  for (const char* label : {"B4", "C6", "D6", "D7", "E6", "E7"}) {
    auto rs = sys(label);
    for (int j : minuscule_indices(*rs)) {
      if (j == 0) continue;
      auto f = fold_root_system(make_context(rs, j));
      if (f.extended_simple.empty()) continue;
      Diagram metric = folded_metric_diagram(f);
      Diagram combinatorial = fold_diagram(build_diagram(rs->extended(), rs->marks()), f.context.element.sigma);
      CHECK(metric.edges() == combinatorial.edges());
      for (int k = 0; k < metric.size(); ++k) CHECK(metric.nodes()[static_cast<std::size_t>(k)].mark == f.context.multiplicities[static_cast<std::size_t>(k)]);
    }
  }
}
