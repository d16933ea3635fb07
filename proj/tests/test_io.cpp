#include <doctest.h>

#include <string>
#include <vector>

#include "fixtures.hpp"
#include "orraag/chordal.hpp"
#include "orraag/classify.hpp"
#include "orraag/cohomology.hpp"
#include "orraag/graph.hpp"
#include "orraag/group_model.hpp"
#include "orraag/io.hpp"

using namespace orraag;
using fixtures::K;

TEST_CASE("text format round trip") {
  for (const OrientedGraph& g :
       {fixtures::mennicke(), fixtures::lambda_s(), fixtures::easy_arrow(), fixtures::chord1(),
        fixtures::k4_so(), fixtures::c4(), fixtures::edgeless(3)}) {
    ValidationResult r = parse_graph_text(graph_to_text(g));
    REQUIRE(r.ok());
    CHECK(r.graph->same_graph(g));
  }
}

TEST_CASE("json format round trip") {
  for (const OrientedGraph& g :
       {fixtures::mennicke(), fixtures::k4_so(), fixtures::edgeless(2)}) {
    ValidationResult r = parse_graph_json(graph_to_json(g));
    REQUIRE(r.ok());
    CHECK(r.graph->same_graph(g));
    ValidationResult rc = parse_graph_json(graph_to_json_compact(g));
    REQUIRE(rc.ok());
    CHECK(rc.graph->same_graph(g));
  }
}

TEST_CASE("text parsing details") {
  SUBCASE("comments, blank lines, and edge directives") {
    ValidationResult r = parse_graph_text(
        "# a comment\n"
        "\n"
        "vertex a ordinary   # trailing comment\n"
        "vertex b special\n"
        "edge a b\n");
    // `edge` between an ordinary and a special vertex expands to both arcs,
    // one of which originates at the special vertex: invalid by design.
    CHECK(!r.ok());
  }
  SUBCASE("edge gives both arcs") {
    ValidationResult r = parse_graph_text("vertex a ordinary\nvertex b ordinary\nedge a b\n");
    REQUIRE(r.ok());
    CHECK(r.graph->arc_count() == 2);
  }
  SUBCASE("syntax errors throw ParseError") {
    CHECK_THROWS_AS(parse_graph_text("vertex a nowhere\n"), error);
    CHECK_THROWS_AS(parse_graph_text("vertex a\n"), error);
    CHECK_THROWS_AS(parse_graph_text("arc a\n"), error);
    CHECK_THROWS_AS(parse_graph_text("arc a b c\n"), error);
    CHECK_THROWS_AS(parse_graph_text("frobnicate a b\n"), error);
  }
  SUBCASE("semantic problems come back as violations, not exceptions") {
    ValidationResult r = parse_graph_text("vertex a ordinary\narc a a\n");
    CHECK(!r.ok());
    CHECK(!r.violations.empty());
  }
}

TEST_CASE("json parsing details") {
  SUBCASE("malformed json throws") {
    CHECK_THROWS_AS(parse_graph_json("{"), error);
    CHECK_THROWS_AS(parse_graph_json("[1,2]"), error);
    CHECK_THROWS_AS(parse_graph_json("{\"vertices\": 3}"), error);
    CHECK_THROWS_AS(parse_graph_json(R"({"vertices":[{"id":"a","kind":"odd"}]})"), error);
    CHECK_THROWS_AS(
        parse_graph_json(R"({"vertices":[{"id":"a","kind":"ordinary"}],"arcs":[["a"]]})"),
        error);
  }
  SUBCASE("arcs are optional") {
    ValidationResult r = parse_graph_json(R"({"vertices":[{"id":"a","kind":"ordinary"}]})");
    REQUIRE(r.ok());
    CHECK(r.graph->size() == 1);
  }
}

TEST_CASE("auto detection dispatches on the first non-space byte") {
  ValidationResult text = parse_graph_auto("  \n vertex a ordinary\n");
  CHECK(text.ok());
  ValidationResult json = parse_graph_auto("  {\"vertices\":[{\"id\":\"a\",\"kind\":\"ordinary\"}]}");
  CHECK(json.ok());
}

TEST_CASE("canonical json output") {
  OrientedGraph g = fixtures::easy_arrow();
  SUBCASE("byte-identical across calls") {
    CHECK(graph_to_json(g) == graph_to_json(g));
    CHECK(report_to_json(classification_report(g, fixtures::lam3())) ==
          report_to_json(classification_report(g, fixtures::lam3())));
  }
  SUBCASE("keys sorted, two-space indent: frozen snapshot") {
    CHECK(graph_to_json(g) ==
          "{\n"
          "  \"arcs\": [\n"
          "    [\n"
          "      \"v\",\n"
          "      \"w\"\n"
          "    ]\n"
          "  ],\n"
          "  \"vertices\": [\n"
          "    {\n"
          "      \"id\": \"v\",\n"
          "      \"kind\": \"ordinary\"\n"
          "    },\n"
          "    {\n"
          "      \"id\": \"w\",\n"
          "      \"kind\": \"special\"\n"
          "    }\n"
          "  ]\n"
          "}");
  }
}

TEST_CASE("validation serialization") {
  ValidationResult bad = parse_graph_text("vertex a special\nvertex b ordinary\narc a b\n");
  CHECK(validation_to_text(bad).find("SpecialOrigin") != std::string::npos);
  CHECK(validation_to_json(bad).find("\"valid\": false") != std::string::npos);
  ValidationResult good = parse_graph_text("vertex a ordinary\n");
  CHECK(validation_to_text(good).rfind("valid", 0) == 0);
  CHECK(validation_to_json(good).find("\"valid\": true") != std::string::npos);
}

TEST_CASE("decomposition tree round trip") {
  for (const OrientedGraph& g :
       {fixtures::k4_so(), fixtures::edgeless(3),
        disjoint_union(fixtures::k4_so(), fixtures::easy_arrow())}) {
    DecomposeResult r = decompose_elementary(g);
    REQUIRE(r.ok());
    DecompositionTree back = tree_from_json(tree_to_json(*r.tree));
    CHECK(rebuild_from_tree(back).same_graph(g));
  }
  CHECK_THROWS_AS(tree_from_json("{\"nope\": 1}"), error);
  CHECK_THROWS_AS(tree_from_json("{\"cone\": {}}"), error);
}

TEST_CASE("report serialization carries verdicts, citations, and witnesses") {
  ClassificationReport r = classification_report(fixtures::lambda_s(), fixtures::lam3());
  std::string js = report_to_json(r);
  CHECK(js.find("\"kummerian\"") != std::string::npos);
  CHECK(js.find("Thm. 4.6") != std::string::npos);
  CHECK(js.find("Prop. 6.1") != std::string::npos);
  CHECK(js.find("InducedLambdaS") != std::string::npos);
  std::string tx = report_to_text(r);
  CHECK(tx.find("kummerian") != std::string::npos);
  CHECK(tx.find("[Thm. 4.6]") != std::string::npos);
}

TEST_CASE("clique and amalgam serialization") {
  NaiveGraph ng = naive_projection(fixtures::chord1());
  std::string js = cliques_to_json(clique_graph(ng), clique_tree_cip(ng));
  CHECK(js.find("\"cip_tree\"") != std::string::npos);
  CHECK(js.find("\"cliques\"") != std::string::npos);
  std::string none = cliques_to_json(clique_graph(naive_projection(fixtures::c4())),
                                     clique_tree_cip(naive_projection(fixtures::c4())));
  CHECK(none.find("\"cip_tree\": null") != std::string::npos);

  AmalgamTree t = amalgam_decomposition(fixtures::chord1(), fixtures::lam3());
  std::string am = amalgam_to_json(t);
  CHECK(am.find("\"amalgam\"") != std::string::npos);
  CHECK(am.find("\"delta\"") != std::string::npos);
  CHECK(am.find("\"leaf\"") != std::string::npos);
}

TEST_CASE("hilbert serialization renders big integers as strings") {
  HilbertPolynomial h = stanley_reisner_dims(naive_projection(fixtures::k4_so()));
  std::string js = hilbert_to_json(h, true, quadratic_dual_series(h, 3));
  CHECK(js.find("\"theorem\": \"chordal-SR\"") != std::string::npos);
  CHECK(js.find("\"6\"") != std::string::npos);   // coefficients as decimal strings
  CHECK(js.find("\"20\"") != std::string::npos);  // dual coefficient
  std::string tx = hilbert_to_text(h, false, std::nullopt);
  CHECK(tx == "hilbert: 1 4 6 4 1\ntheorem: assumed-quadratic\n");
}

TEST_CASE("presentation and fp-group export") {
  Presentation p = presentation(fixtures::easy_arrow(), fixtures::lam3());
  CHECK(presentation_to_fpgroup(p) ==
        "generators: v, w\n"
        "relator: w*v*w^-1*v^-4\n");
  Presentation q = presentation(fixtures::k4_so(), fixtures::lam3());
  std::string fp = presentation_to_fpgroup(q);
  CHECK(fp.find("relator: [v1,v2]\n") != std::string::npos);
  CHECK(fp.find("relator: v4*v1*v4^-1*v1^-4\n") != std::string::npos);
  std::string js = presentation_to_json(q);
  CHECK(js.find("\"theta\": \"4\"") != std::string::npos);
  CHECK(js.find("\"kind\": \"commute\"") != std::string::npos);
  CHECK(js.find("\"exponent\": \"4\"") != std::string::npos);
}

TEST_CASE("abelian and quotient serialization") {
  AbelianInvariants inv = abelianization_formula(fixtures::mennicke(), fixtures::lam3());
  std::string js = abelian_to_json(inv, 3, true);
  CHECK(js.find("\"free_rank\": 0") != std::string::npos);
  CHECK(js.find("\"formula_oracle_agree\": true") != std::string::npos);
  CHECK(abelian_to_text(inv, 3, std::nullopt) ==
        "free_rank: 0\ntorsion: 3 3 3\nprecision_limited: no\n");

  LocallyUniformQuotientData d = locally_uniform_quotient(fixtures::k4_so(), fixtures::lam3());
  std::string qs = quotient_to_json(d);
  CHECK(qs.find("\"acts\": true") != std::string::npos);
  CHECK(qs.find("\"abelian_rank\": 3") != std::string::npos);
  CHECK(qs.find("\"action_unit\": \"4\"") != std::string::npos);
}

TEST_CASE("labelled graph serialization") {
  LabelledGraph lg = to_labelled_graph(fixtures::easy_arrow(), fixtures::lam3());
  std::string js = labelled_graph_to_json(lg);
  CHECK(js.find("\"from\": \"v\"") != std::string::npos);
  CHECK(js.find("\"3\"") != std::string::npos);  // label component c - 1
}

TEST_CASE("verification serialization") {
  VerificationOutcome out;
  out.suite = "et";
  out.max_n = 3;
  out.checked = 136;
  std::string js = verification_to_json(out);
  CHECK(js.find("\"suite\": \"et\"") != std::string::npos);
  CHECK(js.find("\"checked\": 136") != std::string::npos);
  CHECK(js.find("\"failures\": []") != std::string::npos);
  CHECK(js.find("findings") == std::string::npos);  // omitted when empty

  out.failures.push_back({"v1:o", "x", "y"});
  out.findings.push_back("observation");
  std::string js2 = verification_to_json(out);
  CHECK(js2.find("\"expected\": \"x\"") != std::string::npos);
  CHECK(js2.find("\"findings\"") != std::string::npos);
  std::string tx = verification_to_text(out);
  CHECK(tx.find("counterexample") != std::string::npos);
  CHECK(tx.find("finding: observation") != std::string::npos);
}
