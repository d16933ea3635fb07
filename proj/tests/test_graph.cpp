#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "orraag/graph.hpp"

using namespace orraag;
using fixtures::K;

namespace {

bool has_violation(const ValidationResult& r, ViolationCode c) {
  return std::any_of(r.violations.begin(), r.violations.end(),
                     [c](const Violation& v) { return v.code == c; });
}

}  // namespace

TEST_CASE("validate accepts the standard fixtures") {
  for (const OrientedGraph& g : {fixtures::mennicke(), fixtures::lambda_s(),
                                 fixtures::easy_arrow(), fixtures::chord1(), fixtures::k4_so(),
                                 fixtures::c4(), fixtures::l3()}) {
    RawOrientedGraph raw{g.vertices(), g.arcs()};
    ValidationResult r = validate(raw);
    CHECK(r.ok());
    CHECK(r.violations.empty());
    CHECK(r.graph->same_graph(g));
  }
}

TEST_CASE("validate reports each violation kind") {
  SUBCASE("loop arc") {
    ValidationResult r = validate({{{"a", K::Ordinary}}, {{"a", "a"}}});
    CHECK(!r.ok());
    CHECK(has_violation(r, ViolationCode::LoopArc));
  }
  SUBCASE("special origin") {
    ValidationResult r =
        validate({{{"a", K::Special}, {"b", K::Ordinary}}, {{"a", "b"}}});
    CHECK(!r.ok());
    CHECK(has_violation(r, ViolationCode::SpecialOrigin));
  }
  SUBCASE("dangling endpoints") {
    ValidationResult r = validate({{{"a", K::Ordinary}}, {{"a", "ghost"}}});
    CHECK(!r.ok());
    CHECK(has_violation(r, ViolationCode::DanglingEndpoint));
  }
  SUBCASE("duplicate vertex id") {
    ValidationResult r = validate({{{"a", K::Ordinary}, {"a", K::Special}}, {}});
    CHECK(!r.ok());
    CHECK(has_violation(r, ViolationCode::DuplicateVertex));
  }
  SUBCASE("empty vertex set") {
    ValidationResult r = validate({{}, {}});
    CHECK(!r.ok());
    CHECK(has_violation(r, ViolationCode::EmptyVertexSet));
  }
  SUBCASE("empty vertex id") {
    ValidationResult r = validate({{{"", K::Ordinary}}, {}});
    CHECK(!r.ok());
    CHECK(has_violation(r, ViolationCode::EmptyVertexId));
  }
  SUBCASE("vertex cap") {
    std::vector<Vertex> many;
    for (int i = 0; i < kVertexCap + 1; ++i)
      many.push_back({"v" + std::to_string(i), K::Ordinary});
    ValidationResult r = validate({many, {}});
    CHECK(!r.ok());
    CHECK(has_violation(r, ViolationCode::VertexCapExceeded));
  }
  SUBCASE("several violations are collected together") {
    ValidationResult r = validate(
        {{{"a", K::Special}, {"b", K::Ordinary}}, {{"a", "b"}, {"b", "b"}, {"b", "ghost"}}});
    CHECK(!r.ok());
    CHECK(has_violation(r, ViolationCode::SpecialOrigin));
    CHECK(has_violation(r, ViolationCode::LoopArc));
    CHECK(has_violation(r, ViolationCode::DanglingEndpoint));
  }
  SUBCASE("checked constructor throws with the violation text") {
    CHECK_THROWS_AS(OrientedGraph({{"a", K::Ordinary}}, {{"a", "a"}}), error);
    try {
      OrientedGraph({{"a", K::Ordinary}}, {{"a", "a"}});
    } catch (const error& e) {
      CHECK(e.code() == error::Code::InvalidGraph);
      CHECK(std::string(e.what()).find("loop") != std::string::npos);
    }
  }
}

TEST_CASE("duplicate arcs coalesce") {
  OrientedGraph g({{"a", K::Ordinary}, {"b", K::Special}}, {{"a", "b"}, {"a", "b"}});
  CHECK(g.arc_count() == 1);
}

TEST_CASE("accessors and arc queries") {
  OrientedGraph g = fixtures::easy_arrow();
  CHECK(g.size() == 2);
  REQUIRE(g.index_of("v").has_value());
  REQUIRE(g.index_of("w").has_value());
  CHECK(!g.index_of("nope").has_value());
  int v = *g.index_of("v"), w = *g.index_of("w");
  CHECK(g.vertex(v).kind == K::Ordinary);
  CHECK(g.vertex(w).kind == K::Special);
  CHECK(g.has_arc(v, w));
  CHECK(!g.has_arc(w, v));
  CHECK(g.adjacent(v, w));
  CHECK(g.adjacent(w, v));
  CHECK(g.special_arc(v, w));
  CHECK(!g.special_arc(w, v));
  CHECK(g.arcs() == std::vector<Arc>{{"v", "w"}});
}

TEST_CASE("edge classification splits special from ordinary") {
  SUBCASE("mennicke: all special") {
    EdgeClassification ec = edge_classification(fixtures::mennicke());
    CHECK(ec.ordinary.empty());
    CHECK(ec.special == std::vector<Arc>{{"v1", "v2"}, {"v2", "v3"}, {"v3", "v1"}});
  }
  SUBCASE("k4: three ordinary pairs and three special edges") {
    EdgeClassification ec = edge_classification(fixtures::k4_so());
    CHECK(ec.special == std::vector<Arc>{{"v1", "v4"}, {"v2", "v4"}, {"v3", "v4"}});
    CHECK(ec.ordinary.size() == 6);  // both directions of each ordinary pair
    CHECK(std::is_sorted(ec.ordinary.begin(), ec.ordinary.end()));
  }
}

TEST_CASE("naive projection keeps one edge per adjacent pair") {
  NaiveGraph m = naive_projection(fixtures::mennicke());
  CHECK(m.edge_count() == 3);  // the directed triangle projects onto a triangle
  CHECK(m.adjacent(0, 1));
  CHECK(m.adjacent(1, 2));
  CHECK(m.adjacent(0, 2));

  NaiveGraph c = naive_projection(fixtures::c4());
  CHECK(c.edge_count() == 4);
  for (int i = 0; i < 4; ++i) CHECK(c.degree(i) == 2);
  CHECK(c.edges() == std::vector<std::pair<std::string, std::string>>{
                         {"v1", "v2"}, {"v1", "v4"}, {"v2", "v3"}, {"v3", "v4"}});
}

TEST_CASE("naive graph validation") {
  CHECK_THROWS_AS(NaiveGraph({"a"}, {{"a", "a"}}), error);
  CHECK_THROWS_AS(NaiveGraph({"a"}, {{"a", "ghost"}}), error);
  CHECK_THROWS_AS(NaiveGraph({"a", "a"}, {}), error);
  CHECK_THROWS_AS(NaiveGraph({}, {}), error);
}

TEST_CASE("induced subgraphs") {
  OrientedGraph g = fixtures::chord1();
  SUBCASE("keeps arcs inside the subset") {
    OrientedGraph h = induced_subgraph(g, {"v1", "v2", "v3"});
    CHECK(h.size() == 3);
    CHECK(h.arc_count() == 6);  // triangle of ordinary pairs
  }
  SUBCASE("drops arcs leaving the subset") {
    OrientedGraph h = induced_subgraph(g, {"v2", "v4"});
    CHECK(h.size() == 2);
    CHECK(h.arc_count() == 0);
  }
  SUBCASE("duplicates in the subset are ignored") {
    OrientedGraph h = induced_subgraph(g, {"v2", "v2", "v4"});
    CHECK(h.size() == 2);
  }
  SUBCASE("unknown vertex and empty subset throw") {
    CHECK_THROWS_AS(induced_subgraph(g, {"ghost"}), error);
    CHECK_THROWS_AS(induced_subgraph(g, std::vector<std::string>{}), error);
  }
  SUBCASE("naive version agrees with projecting the oriented version") {
    NaiveGraph a = induced_subgraph(naive_projection(g), {"v1", "v3", "v5"});
    NaiveGraph b = naive_projection(induced_subgraph(g, {"v1", "v3", "v5"}));
    CHECK(a.same_graph(b));
  }
}

TEST_CASE("disjoint union") {
  SUBCASE("disjoint id sets stay untouched") {
    OrientedGraph g = disjoint_union(fixtures::easy_arrow(), fixtures::mennicke());
    CHECK(g.size() == 5);
    CHECK(g.arc_count() == 4);
    CHECK(g.index_of("v").has_value());
    CHECK(g.index_of("v2").has_value());
  }
  SUBCASE("clashing ids get prefixed") {
    OrientedGraph g = disjoint_union(fixtures::mennicke(), fixtures::mennicke());
    CHECK(g.size() == 6);
    CHECK(g.index_of("1.v1").has_value());
    CHECK(g.index_of("2.v1").has_value());
    CHECK(!g.index_of("v1").has_value());
  }
  SUBCASE("no arcs between the two sides") {
    OrientedGraph g = disjoint_union(fixtures::mennicke(), fixtures::mennicke());
    for (int i = 0; i < 3; ++i)
      for (int j = 3; j < 6; ++j) CHECK(!g.adjacent(i, j));
  }
}

TEST_CASE("cone") {
  SUBCASE("over a single special vertex: one arc into the base") {
    OrientedGraph base({{"s", K::Special}}, {});
    OrientedGraph g = cone(base, "tip");
    CHECK(g.size() == 2);
    CHECK(g.arcs() == std::vector<Arc>{{"tip", "s"}});
    CHECK(g.vertex(*g.index_of("tip")).kind == K::Ordinary);
  }
  SUBCASE("over an ordinary vertex: both arcs") {
    OrientedGraph base({{"o", K::Ordinary}}, {});
    OrientedGraph g = cone(base, "tip");
    CHECK(g.arcs() == std::vector<Arc>{{"o", "tip"}, {"tip", "o"}});
  }
  SUBCASE("iterated cone over a special vertex gives the complete s.o. graph") {
    OrientedGraph g({{"v4", K::Special}}, {});
    g = cone(g, "v3");
    g = cone(g, "v2");
    g = cone(g, "v1");
    CHECK(g.same_graph(fixtures::k4_so()));
  }
  SUBCASE("tip id must be fresh") {
    CHECK_THROWS_AS(cone(fixtures::mennicke(), "v2"), error);
  }
}

TEST_CASE("patching") {
  OrientedGraph g = fixtures::chord1();
  OrientedGraph g1 = induced_subgraph(g, {"v1", "v2", "v3"});
  OrientedGraph g2 = induced_subgraph(g, {"v1", "v3", "v4", "v5"});
  SUBCASE("reassembles along the shared clique") {
    OrientedGraph back = patching(g1, g2, {"v1", "v3"});
    CHECK(back.same_graph(g));
  }
  SUBCASE("incompatible overlap is rejected") {
    OrientedGraph h1({{"a", K::Ordinary}, {"b", K::Ordinary}}, {{"a", "b"}, {"b", "a"}});
    OrientedGraph h2({{"a", K::Ordinary}, {"b", K::Ordinary}}, {});
    CHECK_THROWS_AS(patching(h1, h2, {"a", "b"}), error);
    OrientedGraph h3({{"a", K::Ordinary}, {"b", K::Special}}, {});
    CHECK_THROWS_AS(patching(h2, h3, {"a", "b"}), error);
  }
  SUBCASE("shared ids outside the named overlap must still agree") {
    // y is shared but not listed in the overlap; the union would be
    // ambiguous about the x-y edge, so the patching is rejected.
    OrientedGraph a({{"x", K::Ordinary}, {"y", K::Ordinary}}, {{"x", "y"}, {"y", "x"}});
    OrientedGraph b({{"x", K::Ordinary}, {"y", K::Ordinary}}, {});
    CHECK_THROWS_AS(patching(a, b, {"x"}), error);
  }
}

TEST_CASE("isomorphism and canonical forms") {
  OrientedGraph m = fixtures::mennicke();
  SUBCASE("relabeled graph is isomorphic, with a valid witness") {
    OrientedGraph r({{"b", K::Ordinary}, {"c", K::Ordinary}, {"a", K::Ordinary}},
                    {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    auto w = is_isomorphic(m, r);
    REQUIRE(w.has_value());
    CHECK(w->size() == 3);
    // The witness maps arcs to arcs.
    auto image = [&w](const std::string& id) {
      for (const auto& [x, y] : *w)
        if (x == id) return y;
      return std::string{};
    };
    for (const Arc& arc : m.arcs()) {
      int i = *r.index_of(image(arc.from));
      int j = *r.index_of(image(arc.to));
      CHECK(r.has_arc(i, j));
    }
    CHECK(canonical_form(m) == canonical_form(r));
  }
  SUBCASE("kind counts distinguish") {
    CHECK(!is_isomorphic(fixtures::lambda_s(), m).has_value());
  }
  SUBCASE("orientation matters") {
    // Reversing one arc of the directed triangle gives two sources onto one
    // vertex: not isomorphic to the cyclic orientation.
    OrientedGraph r({{"v1", K::Ordinary}, {"v2", K::Ordinary}, {"v3", K::Ordinary}},
                    {{"v1", "v2"}, {"v2", "v3"}, {"v1", "v3"}});
    CHECK(!is_isomorphic(m, r).has_value());
    CHECK(canonical_form(m) != canonical_form(r));
  }
  SUBCASE("cap is enforced") {
    std::vector<Vertex> many;
    for (int i = 0; i < kIsoCap + 1; ++i)
      many.push_back({"v" + std::to_string(i), K::Ordinary});
    OrientedGraph big(many, {});
    CHECK_THROWS_AS(canonical_form(big), error);
    CHECK_THROWS_AS(is_isomorphic(big, big), error);
  }
}

TEST_CASE("components and connectivity") {
  NaiveGraph two({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
  auto comps = components(two);
  REQUIRE(comps.size() == 2);
  CHECK(comps[0] == std::vector<int>{0, 1});
  CHECK(comps[1] == std::vector<int>{2, 3});
  CHECK(!is_connected(two));
  CHECK(is_connected(naive_projection(fixtures::chord1())));
  CHECK(is_complete(naive_projection(fixtures::k4_so())));
  CHECK(!is_complete(naive_projection(fixtures::chord1())));
  CHECK(is_complete(NaiveGraph({"z"}, {})));
}
