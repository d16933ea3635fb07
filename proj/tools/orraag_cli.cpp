// orraag — command-line surface for oriented pro-ℓ RAAG combinatorics.
//
// Exit codes: 0 success, 1 input/usage error, 2 a verify suite found a
// counterexample, 3 input graph invalid under --strict.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "orraag/chordal.hpp"
#include "orraag/classify.hpp"
#include "orraag/cohomology.hpp"
#include "orraag/enumerate.hpp"
#include "orraag/graph.hpp"
#include "orraag/group_model.hpp"
#include "orraag/io.hpp"
#include "orraag/orientation.hpp"

namespace {

using namespace orraag;

struct GlobalOpts {
  long prime = 3;
  std::string lambda = "1+l";
  int precision = 0;  // 0 → library default max(f+6, 8)
  bool json = false;
  bool strict = false;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw error(error::Code::ParseError, "cannot open input file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

LinearOrientation orientation_of(const GlobalOpts& g) {
  std::optional<int> precision;
  if (g.precision > 0) precision = g.precision;
  return LinearOrientation::make(g.prime, parse_lambda_spec(g.lambda, g.prime), precision);
}

// Parses and validates; on an invalid graph prints the violations to stderr
// and sets rc (3 under --strict, else 1).
std::optional<OrientedGraph> require_graph(const std::string& path, const GlobalOpts& g,
                                           int& rc) {
  ValidationResult res = parse_graph_auto(slurp(path));
  if (res.ok()) return std::move(res.graph);
  std::cerr << "invalid graph:\n" << violations_to_text(res.violations);
  rc = g.strict ? 3 : 1;
  return std::nullopt;
}

int cmd_validate(const std::string& path, const GlobalOpts& g) {
  ValidationResult res = parse_graph_auto(slurp(path));
  std::cout << (g.json ? validation_to_json(res) : validation_to_text(res));
  if (g.json) std::cout << "\n";
  return (!res.ok() && g.strict) ? 3 : 0;
}

int cmd_classify(const std::string& path, const GlobalOpts& g) {
  ValidationResult res = parse_graph_auto(slurp(path));
  int rc = 0;
  ClassificationReport report;
  if (res.ok()) {
    report = classification_report(*res.graph, orientation_of(g));
  } else {
    std::cerr << "invalid graph:\n" << violations_to_text(res.violations);
    report = report_for_invalid();
    if (g.strict) rc = 3;
  }
  std::cout << (g.json ? report_to_json(report) : report_to_text(report));
  if (g.json) std::cout << "\n";
  return rc;
}

int cmd_decompose(const std::string& path, const GlobalOpts& g) {
  int rc = 0;
  auto graph = require_graph(path, g, rc);
  if (!graph) return rc;
  DecomposeResult r = decompose_elementary(*graph);
  std::cout << (g.json ? decompose_to_json(r) : decompose_to_text(r));
  if (g.json) std::cout << "\n";
  return 0;
}

int cmd_cliques(const std::string& path, const GlobalOpts& g) {
  int rc = 0;
  auto graph = require_graph(path, g, rc);
  if (!graph) return rc;
  NaiveGraph ng = naive_projection(*graph);
  CliqueGraph cg = clique_graph(ng);
  std::optional<CliqueTree> tree = clique_tree_cip(ng);
  std::cout << (g.json ? cliques_to_json(cg, tree) : cliques_to_text(cg, tree));
  if (g.json) std::cout << "\n";
  return 0;
}

int cmd_cohomology(const std::string& path, const GlobalOpts& g, std::optional<int> max_degree,
                   bool want_dual) {
  int rc = 0;
  auto graph = require_graph(path, g, rc);
  if (!graph) return rc;
  NaiveGraph ng = naive_projection(*graph);
  HilbertPolynomial h = stanley_reisner_dims(ng);
  bool backed =
      is_chordal(ng).chordal && is_specially_oriented(*graph).specially_oriented;
  std::optional<PowerSeriesPrefix> dual;
  if (want_dual) dual = quadratic_dual_series(h, max_degree.value_or(10));
  if (max_degree && h.coeffs.size() > static_cast<std::size_t>(*max_degree) + 1)
    h.coeffs.resize(static_cast<std::size_t>(*max_degree) + 1);
  std::cout << (g.json ? hilbert_to_json(h, backed, dual) : hilbert_to_text(h, backed, dual));
  if (g.json) std::cout << "\n";
  return 0;
}

int cmd_present(const std::string& path, const GlobalOpts& g, const std::string& format) {
  int rc = 0;
  auto graph = require_graph(path, g, rc);
  if (!graph) return rc;
  Presentation p = presentation(*graph, orientation_of(g));
  std::string fmt = format.empty() ? (g.json ? "json" : "fpgroup") : format;
  if (fmt == "json") {
    std::cout << presentation_to_json(p) << "\n";
  } else {
    std::cout << presentation_to_fpgroup(p);
  }
  return 0;
}

int cmd_abelianize(const std::string& path, const GlobalOpts& g) {
  int rc = 0;
  auto graph = require_graph(path, g, rc);
  if (!graph) return rc;
  LinearOrientation lam = orientation_of(g);
  AbelianInvariants formula = abelianization_formula(*graph, lam);
  AbelianInvariants oracle = abelianization_oracle(presentation(*graph, lam), lam);
  bool agree = formula == oracle;
  std::cout << (g.json ? abelian_to_json(formula, g.prime, agree)
                       : abelian_to_text(formula, g.prime, agree));
  if (g.json) std::cout << "\n";
  return 0;
}

int cmd_enumerate(const GlobalOpts& g, const EnumerationSpec& spec, bool count_only) {
  if (count_only) {
    std::uint64_t c = count_oriented(spec);
    if (g.json)
      std::cout << enumeration_to_json(spec.n, spec.up_to_iso, c, nullptr) << "\n";
    else
      std::cout << "count: " << c << "\n";
    return 0;
  }
  if (g.json) {
    std::vector<OrientedGraph> graphs;
    enumerate_oriented(spec, [&graphs](const OrientedGraph& og) { graphs.push_back(og); });
    std::cout << enumeration_to_json(spec.n, spec.up_to_iso, graphs.size(), &graphs) << "\n";
    return 0;
  }
  std::uint64_t c = 0;
  enumerate_oriented(spec, [&c](const OrientedGraph& og) {
    ++c;
    std::cout << graph_to_text_brief(og) << "\n";
  });
  std::cout << "count: " << c << "\n";
  return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& suite, int max_n) {
  VerificationOutcome out;
  if (suite == "et")
    out = verify_et_equivalence(max_n);
  else if (suite == "chordal")
    out = verify_chordal_cliquetree(max_n);
  else if (suite == "hilbert")
    out = verify_hilbert_consistency(max_n, orientation_of(g));
  else
    out = verify_abelianization(max_n, g.prime);
  std::cout << (g.json ? verification_to_json(out) : verification_to_text(out));
  if (g.json) std::cout << "\n";
  return out.passed() ? 0 : 2;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOpts g;
  int rc = 0;

  CLI::App app{
      "orraag — combinatorics of oriented right-angled Artin pro-ell groups:\n"
      "validation, elementary-type and chordal classification, Stanley-Reisner\n"
      "cohomology dimensions, presentations, abelianizations, and exhaustive\n"
      "small-graph verification."};
  app.require_subcommand(1);
  app.add_option("-l,--prime", g.prime, "the prime ell")->capture_default_str();
  app.add_option("--lambda", g.lambda, "lambda(1): a decimal value or 1+l / 1+l^f")
      ->capture_default_str();
  app.add_option("-N,--precision", g.precision,
                 "working precision exponent N (default max(f+6, 8))");
  app.add_flag("--json", g.json, "canonical JSON output (sorted keys, no timestamps)");
  app.add_flag("--strict", g.strict, "exit with code 3 when the input graph is invalid");

  // Graph input: a file path, or '-' for stdin.  Text and JSON graph formats
  // are auto-detected.
  std::string input;
  auto add_input = [&input](CLI::App* sub) {
    sub->add_option("input", input, "graph file (text or JSON), or - for stdin")->required();
    sub->fallthrough();
  };

  CLI::App* validate = app.add_subcommand("validate", "check a graph and report violations");
  add_input(validate);
  validate->callback([&] { rc = cmd_validate(input, g); });

  CLI::App* classify =
      app.add_subcommand("classify", "full verdict report with citations and witnesses");
  add_input(classify);
  classify->callback([&] { rc = cmd_classify(input, g); });

  CLI::App* decompose =
      app.add_subcommand("decompose", "elementary-type decomposition tree or witness");
  add_input(decompose);
  decompose->callback([&] { rc = cmd_decompose(input, g); });

  CLI::App* cliques =
      app.add_subcommand("cliques", "maximal cliques, clique graph, and CIP clique tree");
  add_input(cliques);
  cliques->callback([&] { rc = cmd_cliques(input, g); });

  CLI::App* cohomology = app.add_subcommand(
      "cohomology", "cohomology dimensions (clique counts) and the quadratic dual series");
  add_input(cohomology);
  std::optional<int> max_degree;
  bool want_dual = false;
  cohomology->add_option("--max-degree", max_degree, "truncate output at this degree");
  cohomology->add_flag("--dual", want_dual, "also emit 1/h(-t) (default through degree 10)");
  cohomology->callback([&] { rc = cmd_cohomology(input, g, max_degree, want_dual); });

  CLI::App* present = app.add_subcommand("present", "pro-ell presentation of the group");
  add_input(present);
  std::string format;
  present->add_option("--format", format, "json | fpgroup (default: fpgroup; json under --json)")
      ->check(CLI::IsMember({"json", "fpgroup"}));
  present->callback([&] { rc = cmd_present(input, g, format); });

  CLI::App* abelianize =
      app.add_subcommand("abelianize", "abelianized invariants (formula, cross-checked)");
  add_input(abelianize);
  abelianize->callback([&] { rc = cmd_abelianize(input, g); });

  CLI::App* enumerate = app.add_subcommand("enumerate", "all valid oriented graphs on n vertices");
  EnumerationSpec spec;
  bool count_only = false;
  enumerate->add_option("--vertices", spec.n, "number of vertices")->required();
  enumerate->add_flag("--count-only", count_only, "print only the number of graphs");
  enumerate->add_flag("--iso", spec.up_to_iso, "one representative per isomorphism class");
  enumerate->add_flag("--specially-oriented", spec.require_specially_oriented,
                      "keep only specially oriented graphs");
  enumerate->add_flag("--connected", spec.require_connected, "keep only connected graphs");
  enumerate->add_flag("--chordal", spec.require_chordal, "keep only chordal graphs");
  enumerate->fallthrough();
  enumerate->callback([&] { rc = cmd_enumerate(g, spec, count_only); });

  CLI::App* verify = app.add_subcommand("verify", "exhaustive cross-check suites");
  std::string suite;
  int max_n = 0;
  verify->add_option("--suite", suite, "et | chordal | hilbert | abelian")
      ->required()
      ->check(CLI::IsMember({"et", "chordal", "hilbert", "abelian"}));
  verify->add_option("--max-vertices", max_n, "largest vertex count to sweep")->required();
  verify->fallthrough();
  verify->callback([&] { rc = cmd_verify(g, suite, max_n); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const orraag::error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
