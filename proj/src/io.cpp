// io.cpp — text and canonical JSON serialization.

#include "orraag/io.hpp"

#include <json.hpp>

#include <cctype>
#include <sstream>

namespace orraag {

using nlohmann::json;

namespace {

json graph_obj(const OrientedGraph& g) {
  json vertices = json::array();
  for (const Vertex& v : g.vertices())
    vertices.push_back({{"id", v.id}, {"kind", to_string(v.kind)}});
  json arcs = json::array();
  for (const Arc& a : g.arcs()) arcs.push_back({a.from, a.to});
  return {{"vertices", vertices}, {"arcs", arcs}};
}

json witness_obj(const ForbiddenWitness& w) {
  json arcs = json::array();
  for (const Arc& a : w.arcs) arcs.push_back({a.from, a.to});
  return {{"kind", to_string(w.kind)}, {"vertices", w.vertices}, {"arcs", arcs}};
}

json tree_obj(const DecompositionTree& t) {
  if (const auto* leaf = std::get_if<DecompositionTree::Leaf>(&t.node))
    return {{"leaf", {{"id", leaf->id}, {"kind", to_string(leaf->kind)}}}};
  if (const auto* cn = std::get_if<DecompositionTree::Cone>(&t.node))
    return {{"cone", {{"tip", cn->tip}, {"child", tree_obj(*cn->child)}}}};
  const auto& dis = std::get<DecompositionTree::Disjoint>(t.node);
  json children = json::array();
  for (const DecompositionTree& c : dis.children) children.push_back(tree_obj(c));
  return {{"disjoint", children}};
}

json series_obj(const std::vector<Int>& coeffs) {
  json a = json::array();
  for (const Int& c : coeffs) a.push_back(c.str());
  return a;
}

json entry_obj(const VerdictEntry& e) {
  json o = {{"verdict", to_string(e.verdict)}, {"citation", e.citation}};
  if (e.witness) o["witness"] = witness_obj(*e.witness);
  return o;
}

json amalgam_obj(const AmalgamTree& t) {
  if (const auto* leaf = std::get_if<AmalgamTree::Leaf>(&t.node))
    return {{"leaf", graph_obj(leaf->graph)}};
  if (const auto* am = std::get_if<AmalgamTree::Amalgam>(&t.node))
    return {{"amalgam",
             {{"delta", am->delta},
              {"left", amalgam_obj(*am->left)},
              {"right", amalgam_obj(*am->right)}}}};
  const auto& fp = std::get<AmalgamTree::FreeProduct>(t.node);
  json children = json::array();
  for (const AmalgamTree& c : fp.children) children.push_back(amalgam_obj(c));
  return {{"free_product", children}};
}

VertexKind parse_kind(const std::string& s, const std::string& where) {
  if (s == "ordinary") return VertexKind::Ordinary;
  if (s == "special") return VertexKind::Special;
  throw error(error::Code::ParseError, where + ": vertex kind must be ordinary|special, got '" +
                                           s + "'");
}

json parse_json_checked(std::string_view text) {
  json j = json::parse(text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) throw error(error::Code::ParseError, "malformed JSON");
  return j;
}

}  // namespace

// --- Oriented graphs ----------------------------------------------------------

ValidationResult parse_graph_text(std::string_view text) {
  RawOrientedGraph raw;
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string directive;
    if (!(ls >> directive)) continue;
    const std::string where = "line " + std::to_string(lineno);
    auto next = [&ls, &where](const char* what) {
      std::string tok;
      if (!(ls >> tok))
        throw error(error::Code::ParseError, where + ": missing " + std::string(what));
      return tok;
    };
    auto done = [&ls, &where]() {
      std::string extra;
      if (ls >> extra)
        throw error(error::Code::ParseError, where + ": unexpected token '" + extra + "'");
    };
    if (directive == "vertex") {
      std::string id = next("vertex id");
      std::string kind = next("vertex kind");
      done();
      raw.vertices.push_back({id, parse_kind(kind, where)});
    } else if (directive == "arc") {
      std::string from = next("arc origin");
      std::string to = next("arc terminus");
      done();
      raw.arcs.push_back({from, to});
    } else if (directive == "edge") {
      std::string a = next("edge endpoint");
      std::string b = next("edge endpoint");
      done();
      raw.arcs.push_back({a, b});
      raw.arcs.push_back({b, a});
    } else {
      throw error(error::Code::ParseError, where + ": unknown directive '" + directive + "'");
    }
  }
  return validate(raw);
}

ValidationResult parse_graph_json(std::string_view text) {
  json j = parse_json_checked(text);
  if (!j.is_object() || !j.contains("vertices") || !j["vertices"].is_array())
    throw error(error::Code::ParseError, "graph JSON needs a \"vertices\" array");
  RawOrientedGraph raw;
  for (const json& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("id") || !v["id"].is_string() || !v.contains("kind") ||
        !v["kind"].is_string())
      throw error(error::Code::ParseError, "each vertex needs string \"id\" and \"kind\"");
    raw.vertices.push_back(
        {v["id"].get<std::string>(), parse_kind(v["kind"].get<std::string>(), "vertices")});
  }
  if (j.contains("arcs")) {
    if (!j["arcs"].is_array())
      throw error(error::Code::ParseError, "\"arcs\" must be an array of [from, to] pairs");
    for (const json& a : j["arcs"]) {
      if (!a.is_array() || a.size() != 2 || !a[0].is_string() || !a[1].is_string())
        throw error(error::Code::ParseError, "each arc must be a [from, to] string pair");
      raw.arcs.push_back({a[0].get<std::string>(), a[1].get<std::string>()});
    }
  }
  return validate(raw);
}

ValidationResult parse_graph_auto(std::string_view text) {
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    return c == '{' ? parse_graph_json(text) : parse_graph_text(text);
  }
  return parse_graph_text(text);  // empty input: report via validation
}

std::string graph_to_text(const OrientedGraph& g) {
  std::ostringstream os;
  os << "# oriented graph: " << g.size() << (g.size() == 1 ? " vertex, " : " vertices, ")
     << g.arc_count() << (g.arc_count() == 1 ? " arc\n" : " arcs\n");
  for (const Vertex& v : g.vertices()) os << "vertex " << v.id << " " << to_string(v.kind) << "\n";
  // Ordinary pairs as single `edge` lines, special edges as `arc` lines.
  std::vector<Arc> singles;
  std::vector<std::pair<std::string, std::string>> doubles;
  for (const Arc& a : g.arcs()) {
    int i = *g.index_of(a.from), j = *g.index_of(a.to);
    if (g.has_arc(j, i)) {
      if (a.from < a.to) doubles.emplace_back(a.from, a.to);
    } else {
      singles.push_back(a);
    }
  }
  for (const auto& [a, b] : doubles) os << "edge " << a << " " << b << "\n";
  for (const Arc& a : singles) os << "arc " << a.from << " " << a.to << "\n";
  return os.str();
}

std::string graph_to_json(const OrientedGraph& g) { return graph_obj(g).dump(2); }
std::string graph_to_json_compact(const OrientedGraph& g) { return graph_obj(g).dump(); }

std::string violations_to_text(const std::vector<Violation>& vs) {
  std::ostringstream os;
  for (const Violation& v : vs) os << to_string(v.code) << ": " << v.detail << "\n";
  return os.str();
}

std::string violations_to_json(const std::vector<Violation>& vs) {
  json arr = json::array();
  for (const Violation& v : vs) arr.push_back({{"code", to_string(v.code)}, {"detail", v.detail}});
  return json{{"violations", arr}}.dump(2);
}

std::string validation_to_text(const ValidationResult& r) {
  if (r.ok()) {
    const OrientedGraph& g = *r.graph;
    std::ostringstream os;
    os << "valid (" << g.size() << (g.size() == 1 ? " vertex, " : " vertices, ") << g.arc_count()
       << (g.arc_count() == 1 ? " arc)\n" : " arcs)\n");
    return os.str();
  }
  return "invalid:\n" + violations_to_text(r.violations);
}

std::string validation_to_json(const ValidationResult& r) {
  json arr = json::array();
  for (const Violation& v : r.violations)
    arr.push_back({{"code", to_string(v.code)}, {"detail", v.detail}});
  json o{{"valid", r.ok()}, {"violations", arr}};
  if (r.ok()) o["graph"] = graph_obj(*r.graph);
  return o.dump(2);
}

// --- Classification -----------------------------------------------------------

std::string witness_to_json(const ForbiddenWitness& w) { return witness_obj(w).dump(2); }

std::string tree_to_json(const DecompositionTree& t) { return tree_obj(t).dump(2); }

namespace {

DecompositionTree tree_from_obj(const json& j) {
  if (!j.is_object() || j.size() != 1)
    throw error(error::Code::ParseError, "tree node must be one of leaf|cone|disjoint");
  if (j.contains("leaf")) {
    const json& leaf = j["leaf"];
    if (!leaf.is_object() || !leaf.contains("id") || !leaf.contains("kind"))
      throw error(error::Code::ParseError, "leaf needs \"id\" and \"kind\"");
    return DecompositionTree{DecompositionTree::Leaf{
        leaf["id"].get<std::string>(), parse_kind(leaf["kind"].get<std::string>(), "leaf")}};
  }
  if (j.contains("cone")) {
    const json& cn = j["cone"];
    if (!cn.is_object() || !cn.contains("tip") || !cn.contains("child"))
      throw error(error::Code::ParseError, "cone needs \"tip\" and \"child\"");
    return DecompositionTree{DecompositionTree::Cone{
        cn["tip"].get<std::string>(),
        std::make_unique<DecompositionTree>(tree_from_obj(cn["child"]))}};
  }
  if (j.contains("disjoint")) {
    const json& dis = j["disjoint"];
    if (!dis.is_array() || dis.empty())
      throw error(error::Code::ParseError, "disjoint needs a nonempty child array");
    DecompositionTree::Disjoint node;
    for (const json& c : dis) node.children.push_back(tree_from_obj(c));
    return DecompositionTree{std::move(node)};
  }
  throw error(error::Code::ParseError, "tree node must be one of leaf|cone|disjoint");
}

}  // namespace

DecompositionTree tree_from_json(std::string_view text) {
  return tree_from_obj(parse_json_checked(text));
}

namespace {

void tree_text_rec(const DecompositionTree& t, int depth, std::ostringstream& os) {
  os << std::string(static_cast<std::size_t>(depth) * 2, ' ');
  if (const auto* leaf = std::get_if<DecompositionTree::Leaf>(&t.node)) {
    os << "leaf " << leaf->id << " " << to_string(leaf->kind) << "\n";
  } else if (const auto* cn = std::get_if<DecompositionTree::Cone>(&t.node)) {
    os << "cone tip=" << cn->tip << "\n";
    tree_text_rec(*cn->child, depth + 1, os);
  } else {
    const auto& dis = std::get<DecompositionTree::Disjoint>(t.node);
    os << "disjoint\n";
    for (const DecompositionTree& c : dis.children) tree_text_rec(c, depth + 1, os);
  }
}

void witness_text(const ForbiddenWitness& w, std::ostringstream& os) {
  os << "witness " << to_string(w.kind) << ":";
  for (const std::string& v : w.vertices) os << " " << v;
  os << "\n";
  for (const Arc& a : w.arcs) os << "  arc " << a.from << " " << a.to << "\n";
}

}  // namespace

std::string decompose_to_text(const DecomposeResult& r) {
  std::ostringstream os;
  os << "elementary type: " << (r.ok() ? "yes" : "no") << "\n";
  if (r.ok())
    tree_text_rec(*r.tree, 0, os);
  else if (r.witness)
    witness_text(*r.witness, os);
  return os.str();
}

std::string decompose_to_json(const DecomposeResult& r) {
  json o{{"elementary_type", r.ok()}};
  if (r.ok())
    o["tree"] = tree_obj(*r.tree);
  else if (r.witness)
    o["witness"] = witness_obj(*r.witness);
  return o.dump(2);
}

std::string report_to_json(const ClassificationReport& r) {
  json o{{"valid", entry_obj(r.valid)},
         {"specially_oriented", entry_obj(r.specially_oriented)},
         {"chordal", entry_obj(r.chordal)},
         {"elementary_type", entry_obj(r.elementary_type)},
         {"kummerian", entry_obj(r.kummerian)},
         {"locally_uniform", entry_obj(r.locally_uniform)},
         {"bloch_kato", entry_obj(r.bloch_kato)},
         {"one_cyclotomic", entry_obj(r.one_cyclotomic)},
         {"galois_realizable", entry_obj(r.galois_realizable)},
         {"subgroups_are_orRAAGs", entry_obj(r.subgroups_are_orRAAGs)},
         {"bogomolov_positselski", entry_obj(r.bogomolov_positselski)},
         {"coherent_fp_infinity", entry_obj(r.coherent_fp_infinity)},
         {"cohomology_quadratic", entry_obj(r.cohomology_quadratic)}};
  return o.dump(2);
}

std::string report_to_text(const ClassificationReport& r) {
  std::ostringstream os;
  auto line = [&os](const char* name, const VerdictEntry& e) {
    os << name << ": " << to_string(e.verdict) << "  [" << e.citation << "]";
    if (e.witness) {
      os << "  witness " << to_string(e.witness->kind) << " {";
      for (std::size_t i = 0; i < e.witness->vertices.size(); ++i)
        os << (i ? ", " : "") << e.witness->vertices[i];
      os << "}";
    }
    os << "\n";
  };
  line("valid                 ", r.valid);
  line("specially_oriented    ", r.specially_oriented);
  line("chordal               ", r.chordal);
  line("elementary_type       ", r.elementary_type);
  line("kummerian             ", r.kummerian);
  line("locally_uniform       ", r.locally_uniform);
  line("bloch_kato            ", r.bloch_kato);
  line("one_cyclotomic        ", r.one_cyclotomic);
  line("galois_realizable     ", r.galois_realizable);
  line("subgroups_are_orRAAGs ", r.subgroups_are_orRAAGs);
  line("bogomolov_positselski ", r.bogomolov_positselski);
  line("coherent_fp_infinity  ", r.coherent_fp_infinity);
  line("cohomology_quadratic  ", r.cohomology_quadratic);
  return os.str();
}

// --- Chordality ---------------------------------------------------------------

std::string cliques_to_json(const CliqueGraph& cg, const std::optional<CliqueTree>& tree) {
  json cliques = json::array();
  for (const Clique& c : cg.cliques.cliques) cliques.push_back(c);
  json edges = json::array();
  for (auto [i, j] : cg.edges) edges.push_back({i, j});
  json o{{"cliques", cliques}, {"clique_graph_edges", edges}};
  if (tree) {
    json tedges = json::array();
    for (auto [i, j] : tree->edges) tedges.push_back({i, j});
    o["cip_tree"] = {{"edges", tedges}};
  } else {
    o["cip_tree"] = nullptr;
  }
  return o.dump(2);
}

std::string cliques_to_text(const CliqueGraph& cg, const std::optional<CliqueTree>& tree) {
  std::ostringstream os;
  for (std::size_t i = 0; i < cg.cliques.cliques.size(); ++i) {
    os << "clique " << i << ":";
    for (const std::string& v : cg.cliques.cliques[i]) os << " " << v;
    os << "\n";
  }
  for (auto [i, j] : cg.edges) os << "clique-graph edge: " << i << " -- " << j << "\n";
  if (!tree) {
    os << "cip-tree: none (graph is not chordal)\n";
  } else if (tree->edges.empty()) {
    os << "cip-tree: single node\n";
  } else {
    for (auto [i, j] : tree->edges) os << "cip-tree edge: " << i << " -- " << j << "\n";
  }
  return os.str();
}

std::string amalgam_to_json(const AmalgamTree& t) { return amalgam_obj(t).dump(2); }

// --- Cohomology ---------------------------------------------------------------

std::string hilbert_to_json(const HilbertPolynomial& h, bool theorem_backed,
                            const std::optional<PowerSeriesPrefix>& dual) {
  json o{{"hilbert", series_obj(h.coeffs)},
         {"basis", "cliques"},
         {"theorem", theorem_backed ? "chordal-SR" : "assumed-quadratic"}};
  if (dual) o["dual"] = series_obj(dual->coeffs);
  return o.dump(2);
}

std::string hilbert_to_text(const HilbertPolynomial& h, bool theorem_backed,
                            const std::optional<PowerSeriesPrefix>& dual) {
  std::ostringstream os;
  os << "hilbert:";
  for (const Int& c : h.coeffs) os << " " << c.str();
  os << "\ntheorem: " << (theorem_backed ? "chordal-SR" : "assumed-quadratic") << "\n";
  if (dual) {
    os << "dual:";
    for (const Int& c : dual->coeffs) os << " " << c.str();
    os << "\n";
  }
  return os.str();
}

// --- Group model ----------------------------------------------------------------

std::string presentation_to_json(const Presentation& p) {
  json gens = json::array();
  for (const Presentation::Generator& g : p.generators)
    gens.push_back({{"id", g.id}, {"theta", g.theta.str()}});
  json rels = json::array();
  for (const Presentation::Relator& r : p.relators) {
    if (r.kind == Presentation::Relator::Kind::Commute)
      rels.push_back({{"kind", "commute"}, {"a", r.a}, {"b", r.b}});
    else
      rels.push_back(
          {{"kind", "conjugate"}, {"a", r.a}, {"b", r.b}, {"exponent", r.exponent.str()}});
  }
  return json{{"generators", gens}, {"relators", rels}}.dump(2);
}

std::string presentation_to_fpgroup(const Presentation& p) {
  std::ostringstream os;
  os << "generators:";
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    os << (i ? ", " : " ") << p.generators[i].id;
  os << "\n";
  for (const Presentation::Relator& r : p.relators) {
    if (r.kind == Presentation::Relator::Kind::Commute)
      os << "relator: [" << r.a << "," << r.b << "]\n";
    else
      os << "relator: " << r.a << "*" << r.b << "*" << r.a << "^-1*" << r.b << "^-"
         << r.exponent.str() << "\n";
  }
  return os.str();
}

std::string labelled_graph_to_json(const LabelledGraph& lg) {
  json arcs = json::array();
  for (const LabelledGraph::LabelledArc& a : lg.arcs)
    arcs.push_back(
        {{"from", a.from}, {"to", a.to}, {"label", {a.a.str(), a.b.str()}}});
  return json{{"vertices", lg.vertices}, {"arcs", arcs}}.dump(2);
}

std::string abelian_to_json(const AbelianInvariants& inv, long ell,
                            std::optional<bool> oracle_agrees) {
  json torsion = json::array();
  for (int k : inv.torsion_exponents) torsion.push_back(pow_int(ell, k).str());
  json o{{"free_rank", inv.free_rank},
         {"torsion", torsion},
         {"precision_limited", inv.precision_limited}};
  if (oracle_agrees) o["formula_oracle_agree"] = *oracle_agrees;
  return o.dump(2);
}

std::string abelian_to_text(const AbelianInvariants& inv, long ell,
                            std::optional<bool> oracle_agrees) {
  std::ostringstream os;
  os << "free_rank: " << inv.free_rank << "\ntorsion:";
  if (inv.torsion_exponents.empty()) os << " none";
  for (int k : inv.torsion_exponents) os << " " << pow_int(ell, k).str();
  os << "\nprecision_limited: " << (inv.precision_limited ? "yes" : "no") << "\n";
  if (oracle_agrees)
    os << "formula_oracle_agree: " << (*oracle_agrees ? "yes" : "no") << "\n";
  return os.str();
}

std::string quotient_to_json(const LocallyUniformQuotientData& d) {
  return json{{"acts", d.acts},
              {"abelian_rank", d.abelian_rank},
              {"action_unit", d.action_unit.str()},
              {"depth", d.depth}}
      .dump(2);
}

// --- Enumeration ----------------------------------------------------------------

std::string enumeration_to_json(int n, bool up_to_iso, std::uint64_t count,
                                const std::vector<OrientedGraph>* graphs) {
  json o{{"n", n}, {"up_to_iso", up_to_iso}, {"count", count}};
  if (graphs) {
    json arr = json::array();
    for (const OrientedGraph& g : *graphs) arr.push_back(graph_obj(g));
    o["graphs"] = arr;
  }
  return o.dump(2);
}

// --- Verification ---------------------------------------------------------------

std::string verification_to_json(const VerificationOutcome& v) {
  json failures = json::array();
  for (const Counterexample& c : v.failures)
    failures.push_back({{"graph", c.graph}, {"expected", c.expected}, {"actual", c.actual}});
  json o{{"suite", v.suite},
         {"n", v.max_n},
         {"checked", v.checked},
         {"failures", failures}};
  if (!v.findings.empty()) o["findings"] = v.findings;
  return o.dump(2);
}

std::string verification_to_text(const VerificationOutcome& v) {
  std::ostringstream os;
  os << "suite " << v.suite << " up to " << v.max_n << " vertices: " << v.checked
     << " graphs checked, " << v.failures.size() << " failure(s)";
  if (!v.findings.empty()) os << ", " << v.findings.size() << " finding(s)";
  os << "\n";
  for (const Counterexample& c : v.failures)
    os << "  counterexample: " << c.graph << "\n    expected " << c.expected << "\n    actual   "
       << c.actual << "\n";
  for (const std::string& f : v.findings) os << "  finding: " << f << "\n";
  return os.str();
}

}  // namespace orraag
