#include <doctest.h>

#include "rootfold/diagram.hpp"
#include "rootfold/errors.hpp"
#include "rootfold/tables.hpp"

using namespace rootfold;

namespace {

RootSystem sys(const char* label) { return RootSystem::build(TypeLabel::parse(label)); }

}  // namespace

TEST_CASE("rank two diagrams") {
  auto a2 = build_diagram(sys("A2").simple());
  REQUIRE(a2.edges().size() == 1);
  CHECK(a2.edges()[0] == DiagramEdge{0, 1, 1, Orientation::None});

  auto b2 = build_diagram(sys("B2").simple());
  REQUIRE(b2.edges().size() == 1);
  CHECK(b2.edges()[0].multiplicity == 2);
  // alpha_2 = e2 is the short root.
  CHECK(b2.edges()[0].orientation == Orientation::Forward);

  auto g2 = build_diagram(sys("G2").simple());
  REQUIRE(g2.edges().size() == 1);
  CHECK(g2.edges()[0].multiplicity == 3);
  CHECK(g2.nodes()[0].norm < g2.nodes()[1].norm);
  CHECK(g2.edges()[0].orientation == Orientation::Backward);
}

TEST_CASE("proportional equal-length vertices get a doubled bond; bad ratios are rejected") {
  std::vector<RationalVector> a1_ext = {{-1, 1}, {1, -1}};
  auto d = build_diagram(a1_ext);
  REQUIRE(d.edges().size() == 1);
  CHECK(d.edges()[0].multiplicity == 2);
  CHECK(d.edges()[0].orientation == Orientation::None);
  std::vector<RationalVector> bad = {{1, 1, 0}, {1, 1, 1}};
  CHECK_THROWS_AS(build_diagram(bad), DomainError);
}

TEST_CASE("extended diagrams carry marks and fold by sigma") {
  auto f4 = sys("F4");
  auto ext = build_diagram(f4.extended(), f4.marks());
  std::vector<int> marks;
  for (const auto& n : ext.nodes()) marks.push_back(n.mark);
  CHECK(marks == std::vector<int>{1, 2, 3, 4, 2});
  CHECK(ext.connected());
  CHECK(ext.edges().size() == 4);

  auto e6 = sys("E6");
  auto e6ext = build_diagram(e6.extended(), e6.marks());
  CHECK(e6ext.degree(4) == 3);
  auto sigma = stabilizer_element(e6, 1).sigma;
  Diagram folded = fold_diagram(e6ext, sigma);
  // Orbits {0,1,6}, {2,3,5}, {4}: the extended G2 diagram.
  REQUIRE(folded.size() == 3);
  CHECK(folded.edges().size() == 2);
  CHECK(folded.edges()[1].multiplicity == 3);
}

TEST_CASE("ordered_orbits follows the quotient path") {
  auto e7 = sys("E7");
  auto ext = build_diagram(e7.extended(), e7.marks());
  auto sigma = stabilizer_element(e7, 7).sigma;
  auto orbits = ordered_orbits(sigma, [&](int u, int v) { return ext.adjacent(u, v); });
  CHECK(orbits == std::vector<std::vector<int>>{{0, 7}, {1, 6}, {3, 5}, {4}, {2}});
  auto id = Permutation::identity(4);
  auto singles = ordered_orbits(id, [](int, int) { return false; });
  CHECK(singles == std::vector<std::vector<int>>{{0}, {1}, {2}, {3}});
}

TEST_CASE("identify_type recovers every catalogue label") {
  for (const auto& t : catalogue(9)) {
    CAPTURE(t.to_string());
    CHECK(identify_type(RootSystem::build(t).roots()) == t.canonical());
  }
  std::vector<RationalVector> bc1 = {{1}, {-1}, {2}, {-2}};
  CHECK(identify_type(bc1) == TypeLabel{Family::BC, 1});
  CHECK(identify_type(std::span<const RationalVector>{}).family == Family::Empty);
  std::vector<RationalVector> a1a1 = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  CHECK_THROWS_AS(identify_type(a1a1), ClassificationError);
}

TEST_CASE("lexicographic base has rank many indivisible roots") {
  for (const char* label : {"B3", "C3", "F4", "G2", "E6"}) {
    auto rs = sys(label);
    auto base = lexicographic_base(rs.roots());
    CHECK(static_cast<int>(base.size()) == rs.rank());
    CHECK(rank_of(base) == static_cast<std::size_t>(rs.rank()));
  }
}

TEST_CASE("render goldens") {
  CHECK(render(build_diagram(sys("G2").simple()), RenderFormat::Ascii, 1) == " o ##<## o\n 1       2\n");
  CHECK(render(build_diagram(sys("A2").simple()), RenderFormat::Dot, 1) ==
        "graph diagram {\n  node [shape=circle];\n  1 [label=\"α_1\"];\n  2 [label=\"α_2\"];\n  1 -- 2;\n}\n");
  auto e7 = sys("E7");
  CHECK(render(build_diagram(e7.simple()), RenderFormat::Ascii, 1).find("o") != std::string::npos);
  auto b3 = sys("B3");
  CHECK(render(build_diagram(b3.extended(), b3.marks()), RenderFormat::Ascii) ==
        " 1       2       1\n o ----- o ----- o\n 0       2       1\n  2(2) ==>== 3(2)\n");
}
