#include <doctest.h>

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "orraag/chordal.hpp"
#include "orraag/classify.hpp"
#include "orraag/graph.hpp"

using namespace orraag;
using fixtures::K;

namespace {

// An induced chordless cycle, listed in cycle order: consecutive vertices
// adjacent, all other pairs not.
void check_induced_cycle(const NaiveGraph& ng, const std::vector<std::string>& cycle) {
  REQUIRE(cycle.size() >= 4);
  int n = static_cast<int>(cycle.size());
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int i = *ng.index_of(cycle[a]);
      int j = *ng.index_of(cycle[b]);
      bool consecutive = (b == a + 1) || (a == 0 && b == n - 1);
      CHECK(ng.adjacent(i, j) == consecutive);
    }
  }
}

}  // namespace

TEST_CASE("chordality recognition") {
  SUBCASE("chordal fixtures with a perfect elimination ordering") {
    for (const OrientedGraph& g :
         {fixtures::chord1(), fixtures::k4_so(), fixtures::l3(), fixtures::mennicke(),
          fixtures::edgeless(3)}) {
      NaiveGraph ng = naive_projection(g);
      ChordalityResult r = is_chordal(ng);
      CHECK(r.chordal);
      CHECK(static_cast<int>(r.peo.size()) == ng.size());
      CHECK(r.witness_cycle.empty());
      // Verify the elimination ordering really is perfect: later neighbours
      // of each vertex form a clique.
      std::set<std::string> eliminated;
      for (const std::string& id : r.peo) {
        int i = *ng.index_of(id);
        std::vector<int> later;
        for (int j = 0; j < ng.size(); ++j)
          if (j != i && ng.adjacent(i, j) && !eliminated.count(ng.id(j))) later.push_back(j);
        for (std::size_t a = 0; a < later.size(); ++a)
          for (std::size_t b = a + 1; b < later.size(); ++b)
            CHECK(ng.adjacent(later[a], later[b]));
        eliminated.insert(id);
      }
    }
  }
  SUBCASE("C4 yields a 4-cycle witness") {
    ChordalityResult r = is_chordal(naive_projection(fixtures::c4()));
    CHECK(!r.chordal);
    REQUIRE(r.witness_cycle.size() == 4);
    check_induced_cycle(naive_projection(fixtures::c4()), r.witness_cycle);
  }
  SUBCASE("C5 yields a 5-cycle witness") {
    NaiveGraph ng = naive_projection(fixtures::cycle(5));
    ChordalityResult r = is_chordal(ng);
    CHECK(!r.chordal);
    REQUIRE(r.witness_cycle.size() == 5);
    check_induced_cycle(ng, r.witness_cycle);
  }
  SUBCASE("a chordless cycle hidden in a larger graph is found") {
    // C4 on v1..v4 plus a pendant vertex attached to v1.
    NaiveGraph ng({"v1", "v2", "v3", "v4", "v5"},
                  {{"v1", "v2"}, {"v2", "v3"}, {"v3", "v4"}, {"v4", "v1"}, {"v1", "v5"}});
    ChordalityResult r = is_chordal(ng);
    CHECK(!r.chordal);
    REQUIRE(r.witness_cycle.size() >= 4);
    check_induced_cycle(ng, r.witness_cycle);
  }
}

TEST_CASE("maximal cliques") {
  SUBCASE("chord1 has exactly the three triangles") {
    CliqueSet cs = maximal_cliques(naive_projection(fixtures::chord1()));
    CHECK(cs.cliques == std::vector<Clique>{{"v1", "v2", "v3"},
                                            {"v1", "v3", "v4"},
                                            {"v1", "v4", "v5"}});
  }
  SUBCASE("complete graph has a single clique") {
    CliqueSet cs = maximal_cliques(naive_projection(fixtures::k4_so()));
    CHECK(cs.cliques == std::vector<Clique>{{"v1", "v2", "v3", "v4"}});
  }
  SUBCASE("edgeless graph: one singleton per vertex") {
    CliqueSet cs = maximal_cliques(naive_projection(fixtures::edgeless(3)));
    CHECK(cs.cliques.size() == 3);
  }
  SUBCASE("C4: the four edges") {
    CliqueSet cs = maximal_cliques(naive_projection(fixtures::c4()));
    CHECK(cs.cliques == std::vector<Clique>{{"v1", "v2"}, {"v1", "v4"},
                                            {"v2", "v3"}, {"v3", "v4"}});
  }
}

TEST_CASE("clique graph and CIP clique tree") {
  SUBCASE("chord1: clique graph is a triangle, CIP tree is the path") {
    NaiveGraph ng = naive_projection(fixtures::chord1());
    CliqueGraph cg = clique_graph(ng);
    CHECK(cg.edges == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}});
    auto tree = clique_tree_cip(ng);
    REQUIRE(tree.has_value());
    CHECK(tree->edges == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
  }
  SUBCASE("C4 has no CIP tree") {
    CHECK(!clique_tree_cip(naive_projection(fixtures::c4())).has_value());
  }
  SUBCASE("disconnected chordal graphs get a linked forest") {
    NaiveGraph ng({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    auto tree = clique_tree_cip(ng);
    REQUIRE(tree.has_value());
    CHECK(tree->cliques.cliques.size() == 2);
    CHECK(tree->edges.size() == 1);  // spanning tree of 2 cliques
  }
  SUBCASE("tree edge count is cliques minus one") {
    for (const OrientedGraph& g :
         {fixtures::chord1(), fixtures::l3(), fixtures::edgeless(4), fixtures::k4_so()}) {
      auto tree = clique_tree_cip(naive_projection(g));
      REQUIRE(tree.has_value());
      CHECK(tree->edges.size() + 1 == tree->cliques.cliques.size());
    }
  }
}

TEST_CASE("patching split") {
  SUBCASE("chord1 splits along a clique separator and reassembles") {
    OrientedGraph g = fixtures::chord1();
    PatchingSplit s = patching_split(g);
    // Both parts are proper induced subgraphs meeting in the separator.
    CHECK(s.g1.size() < g.size());
    CHECK(s.g2.size() < g.size());
    CHECK(s.g1.size() + s.g2.size() - static_cast<int>(s.delta.size()) == g.size());
    std::vector<std::string> common = s.delta;
    OrientedGraph back = patching(s.g1, s.g2, common);
    CHECK(back.same_graph(g));
  }
  SUBCASE("the separator is a clique in both parts") {
    PatchingSplit s = patching_split(fixtures::chord1());
    for (std::size_t a = 0; a < s.delta.size(); ++a)
      for (std::size_t b = a + 1; b < s.delta.size(); ++b) {
        int i = *s.g1.index_of(s.delta[a]);
        int j = *s.g1.index_of(s.delta[b]);
        CHECK(s.g1.adjacent(i, j));
      }
  }
  SUBCASE("errors: not chordal, single clique, disconnected") {
    CHECK_THROWS_AS(patching_split(fixtures::c4()), error);
    CHECK_THROWS_AS(patching_split(fixtures::k4_so()), error);
    CHECK_THROWS_AS(patching_split(fixtures::edgeless(2)), error);
    try {
      patching_split(fixtures::c4());
    } catch (const error& e) {
      CHECK(e.code() == error::Code::NotChordal);
    }
    try {
      patching_split(fixtures::k4_so());
    } catch (const error& e) {
      CHECK(e.code() == error::Code::SingleClique);
    }
  }
}

TEST_CASE("amalgam decomposition") {
  LinearOrientation lam = fixtures::lam3();
  SUBCASE("complete graph is a leaf") {
    AmalgamTree t = amalgam_decomposition(fixtures::k4_so(), lam);
    const auto* leaf = std::get_if<AmalgamTree::Leaf>(&t.node);
    REQUIRE(leaf != nullptr);
    CHECK(leaf->graph.same_graph(fixtures::k4_so()));
  }
  SUBCASE("lambda-s splits along its special vertex into two edges") {
    AmalgamTree t = amalgam_decomposition(fixtures::lambda_s(), lam);
    const auto* am = std::get_if<AmalgamTree::Amalgam>(&t.node);
    REQUIRE(am != nullptr);
    CHECK(am->delta == std::vector<std::string>{"v2"});
    const auto* l = std::get_if<AmalgamTree::Leaf>(&am->left->node);
    const auto* r = std::get_if<AmalgamTree::Leaf>(&am->right->node);
    REQUIRE(l != nullptr);
    REQUIRE(r != nullptr);
    CHECK(l->graph.size() == 2);
    CHECK(r->graph.size() == 2);
  }
  SUBCASE("disconnected graphs become free products of leaves") {
    AmalgamTree t = amalgam_decomposition(fixtures::edgeless(3), lam);
    const auto* fp = std::get_if<AmalgamTree::FreeProduct>(&t.node);
    REQUIRE(fp != nullptr);
    CHECK(fp->children.size() == 3);
  }
  SUBCASE("chord1 nests amalgams down to complete leaves") {
    AmalgamTree t = amalgam_decomposition(fixtures::chord1(), lam);
    // Count leaves; every leaf must be complete.
    int leaves = 0;
    auto walk = [&leaves](const AmalgamTree& node, auto&& self) -> void {
      if (const auto* leaf = std::get_if<AmalgamTree::Leaf>(&node.node)) {
        ++leaves;
        CHECK(is_complete(naive_projection(leaf->graph)));
      } else if (const auto* am = std::get_if<AmalgamTree::Amalgam>(&node.node)) {
        self(*am->left, self);
        self(*am->right, self);
      } else {
        for (const AmalgamTree& c : std::get<AmalgamTree::FreeProduct>(node.node).children)
          self(c, self);
      }
    };
    walk(t, walk);
    CHECK(leaves == 3);  // one per maximal clique
  }
  SUBCASE("preconditions") {
    CHECK_THROWS_AS(amalgam_decomposition(fixtures::mennicke(), lam), error);
    CHECK_THROWS_AS(amalgam_decomposition(fixtures::c4(), lam), error);
  }
}

TEST_CASE("clique separator decomposition predicate") {
  CHECK(clique_separator_decomposes(naive_projection(fixtures::chord1())));
  CHECK(clique_separator_decomposes(naive_projection(fixtures::l3())));
  CHECK(clique_separator_decomposes(naive_projection(fixtures::k4_so())));  // complete: base case
  CHECK(clique_separator_decomposes(naive_projection(fixtures::edgeless(3))));
  CHECK(!clique_separator_decomposes(naive_projection(fixtures::c4())));
  CHECK(!clique_separator_decomposes(naive_projection(fixtures::cycle(5))));
}

TEST_CASE("triangle detection") {
  CHECK(has_triangle(naive_projection(fixtures::mennicke())));
  CHECK(has_triangle(naive_projection(fixtures::chord1())));
  CHECK(!has_triangle(naive_projection(fixtures::c4())));
  CHECK(!has_triangle(naive_projection(fixtures::l3())));
  CHECK(!has_triangle(naive_projection(fixtures::edgeless(3))));
}
