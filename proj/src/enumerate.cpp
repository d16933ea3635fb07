// enumerate.cpp — exhaustive small-graph enumeration and verification suites.

#include "orraag/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include "orraag/chordal.hpp"
#include "orraag/classify.hpp"
#include "orraag/cohomology.hpp"
#include "orraag/group_model.hpp"

namespace orraag {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::vector<Vertex> labeled_vertices(int n, std::uint64_t kind_mask) {
  std::vector<Vertex> vs;
  for (int i = 0; i < n; ++i)
    vs.push_back({"v" + std::to_string(i + 1),
                  ((kind_mask >> i) & 1u) ? VertexKind::Special : VertexKind::Ordinary});
  return vs;
}

}  // namespace

std::string graph_to_text_brief(const OrientedGraph& g) {
  std::ostringstream os;
  for (int i = 0; i < g.size(); ++i) {
    if (i) os << " ";
    os << g.vertex(i).id << ":" << (g.vertex(i).kind == VertexKind::Special ? "s" : "o");
  }
  for (const Arc& a : g.arcs()) os << " (" << a.from << ">" << a.to << ")";
  return os.str();
}

void enumerate_oriented(const EnumerationSpec& spec,
                        const std::function<void(const OrientedGraph&)>& fn) {
  const int n = spec.n;
  if (n < 1 || n > spec.cap || n > 12)
    throw error(error::Code::CapExceeded,
                "enumeration over " + std::to_string(n) + " vertices exceeds the cap of " +
                    std::to_string(std::min(spec.cap, 12)));
  if (spec.up_to_iso && n > kIsoCap)
    throw error(error::Code::TooLarge, "isomorphism reduction is capped at " +
                                           std::to_string(kIsoCap) + " vertices");

  const int pairs = n * (n - 1) / 2;
  std::vector<std::pair<int, int>> pair_of(pairs);
  {
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) pair_of[k++] = {i, j};
  }

  std::set<std::string> seen;  // canonical forms when up_to_iso

  for (std::uint64_t kinds = 0; kinds < bit(n); ++kinds) {
    const std::vector<Vertex> vs = labeled_vertices(n, kinds);

    // Allowed per-pair arc states: 0 none, 1 i->j, 2 j->i, 3 both; a
    // special vertex never originates an arc.
    std::vector<std::vector<int>> allowed(pairs);
    for (int k = 0; k < pairs; ++k) {
      auto [i, j] = pair_of[k];
      const bool si = (kinds >> i) & 1u, sj = (kinds >> j) & 1u;
      if (si && sj) allowed[k] = {0};
      else if (si) allowed[k] = {0, 2};
      else if (sj) allowed[k] = {0, 1};
      else allowed[k] = {0, 1, 2, 3};
    }

    std::vector<int> digit(pairs, 0);  // index into allowed[k]
    for (;;) {
      std::vector<std::uint64_t> out(n, 0);
      for (int k = 0; k < pairs; ++k) {
        auto [i, j] = pair_of[k];
        const int st = allowed[k][digit[k]];
        if (st & 1) out[i] |= bit(j);
        if (st & 2) out[j] |= bit(i);
      }
      OrientedGraph g = OrientedGraph::from_adjacency(vs, std::move(out));

      bool keep = true;
      if (spec.require_specially_oriented) keep = is_specially_oriented(g).specially_oriented;
      if (keep && (spec.require_connected || spec.require_chordal)) {
        const NaiveGraph ng = naive_projection(g);
        if (spec.require_connected) keep = is_connected(ng);
        if (keep && spec.require_chordal) keep = is_chordal(ng).chordal;
      }
      if (keep && spec.up_to_iso) keep = seen.insert(canonical_form(g)).second;
      if (keep) fn(g);

      // Odometer over the allowed-state lists.
      int k = 0;
      while (k < pairs) {
        if (++digit[k] < static_cast<int>(allowed[k].size())) break;
        digit[k++] = 0;
      }
      if (k == pairs) break;
    }
  }
}

std::uint64_t count_oriented(const EnumerationSpec& spec) {
  std::uint64_t count = 0;
  enumerate_oriented(spec, [&count](const OrientedGraph&) { ++count; });
  return count;
}

void enumerate_naive(int n, const std::function<void(const NaiveGraph&)>& fn) {
  if (n < 1 || n > 6)
    throw error(error::Code::CapExceeded, "naive enumeration is capped at 6 vertices");
  std::vector<std::string> ids;
  for (int i = 0; i < n; ++i) ids.push_back("v" + std::to_string(i + 1));
  const int pairs = n * (n - 1) / 2;
  for (std::uint64_t mask = 0; mask < bit(pairs); ++mask) {
    std::vector<std::pair<std::string, std::string>> edges;
    int k = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j, ++k)
        if ((mask >> k) & 1u) edges.emplace_back(ids[i], ids[j]);
    fn(NaiveGraph(ids, edges));
  }
}

// --- Verification suites ------------------------------------------------------

VerificationOutcome verify_et_equivalence(int max_n) {
  VerificationOutcome out{"et", max_n, 0, {}, {}};
  for (int n = 1; n <= max_n; ++n) {
    EnumerationSpec spec;
    spec.n = n;
    spec.cap = std::max(spec.cap, n);
    enumerate_oriented(spec, [&out](const OrientedGraph& g) {
      ++out.checked;
      const bool forbidden = is_elementary_type_forbidden(g).elementary_type;
      const bool inductive = is_elementary_type_inductive(g);
      if (forbidden != inductive)
        out.failures.push_back({graph_to_text_brief(g),
                                "forbidden-subgraph and inductive deciders agree",
                                "forbidden=" + std::to_string(forbidden) +
                                    " inductive=" + std::to_string(inductive)});
    });
  }
  return out;
}

VerificationOutcome verify_chordal_cliquetree(int max_n) {
  VerificationOutcome out{"chordal", max_n, 0, {}, {}};
  for (int n = 1; n <= max_n; ++n) {
    enumerate_naive(n, [&out](const NaiveGraph& ng) {
      ++out.checked;
      const bool chordal = is_chordal(ng).chordal;
      const bool tree = clique_tree_cip(ng).has_value();
      const bool patch = clique_separator_decomposes(ng);
      if (chordal != tree || chordal != patch) {
        std::ostringstream desc;
        for (const auto& [a, b] : ng.edges()) desc << "{" << a << "," << b << "} ";
        out.failures.push_back({std::to_string(ng.size()) + " vertices, edges: " + desc.str(),
                                "chordal == CIP tree exists == separator decomposition",
                                "chordal=" + std::to_string(chordal) + " tree=" +
                                    std::to_string(tree) + " patch=" + std::to_string(patch)});
      }
    });
  }
  return out;
}

VerificationOutcome verify_hilbert_consistency(int max_n, const LinearOrientation& lambda) {
  VerificationOutcome out{"hilbert", max_n, 0, {}, {}};
  auto show = [](const std::vector<Int>& v) {
    std::ostringstream os;
    os << "[";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << "]";
    return os.str();
  };

  for (int n = 1; n <= max_n; ++n) {
    EnumerationSpec spec;
    spec.n = n;
    spec.cap = std::max(spec.cap, n);
    enumerate_oriented(spec, [&](const OrientedGraph& g) {
      ++out.checked;
      const NaiveGraph ng = naive_projection(g);
      const HilbertPolynomial direct = stanley_reisner_dims(ng);

      DecomposeResult dec = decompose_elementary(g);
      if (dec.ok()) {
        const HilbertPolynomial viaTree = et_hilbert_recursive(*dec.tree);
        if (viaTree != direct)
          out.failures.push_back({graph_to_text_brief(g), "tree recursion = " + show(direct.coeffs),
                                  show(viaTree.coeffs)});
      }
      if (is_specially_oriented(g).specially_oriented && is_chordal(ng).chordal) {
        const HilbertPolynomial viaMv = chordal_hilbert_mv(g, lambda);
        if (viaMv != direct)
          out.failures.push_back({graph_to_text_brief(g),
                                  "Mayer-Vietoris = " + show(direct.coeffs), show(viaMv.coeffs)});
      }
    });
  }

  // Dual-series positivity is conjecture evidence: negative coefficients are
  // findings, not failures.
  for (int n = 1; n <= max_n; ++n) {
    enumerate_naive(n, [&](const NaiveGraph& ng) {
      if (!is_chordal(ng).chordal) return;
      const PowerSeriesPrefix dual = quadratic_dual_series(stanley_reisner_dims(ng), 10);
      for (std::size_t k = 0; k < dual.coeffs.size(); ++k)
        if (dual.coeffs[k] < 0) {
          std::ostringstream desc;
          for (const auto& [a, b] : ng.edges()) desc << "{" << a << "," << b << "} ";
          out.findings.push_back("negative dual coefficient at degree " + std::to_string(k) +
                                 " for " + std::to_string(ng.size()) +
                                 " vertices, edges: " + desc.str());
          break;
        }
    });
  }
  return out;
}

VerificationOutcome verify_abelianization(int max_n, long ell) {
  VerificationOutcome out{"abelian", max_n, 0, {}, {}};
  std::vector<LinearOrientation> lambdas;
  if (ell == 2) {
    lambdas.push_back(LinearOrientation::make(2, 5));
    lambdas.push_back(LinearOrientation::make(2, 9));
  } else {
    lambdas.push_back(LinearOrientation::make(ell, 1 + pow_int(ell, 1)));
    lambdas.push_back(LinearOrientation::make(ell, 1 + pow_int(ell, 2)));
  }
  auto show = [](const AbelianInvariants& inv) {
    std::ostringstream os;
    os << "free^" << inv.free_rank << " torsion[";
    for (std::size_t i = 0; i < inv.torsion_exponents.size(); ++i)
      os << (i ? "," : "") << inv.torsion_exponents[i];
    os << "]" << (inv.precision_limited ? " (precision limited)" : "");
    return os.str();
  };

  for (int n = 1; n <= max_n; ++n) {
    EnumerationSpec spec;
    spec.n = n;
    spec.cap = std::max(spec.cap, n);
    enumerate_oriented(spec, [&](const OrientedGraph& g) {
      ++out.checked;
      for (const LinearOrientation& lambda : lambdas) {
        const AbelianInvariants a = abelianization_formula(g, lambda);
        const AbelianInvariants b = abelianization_oracle(presentation(g, lambda), lambda);
        if (!(a == b))
          out.failures.push_back({graph_to_text_brief(g), "formula " + show(a), "oracle " + show(b)});
      }
    });
  }
  return out;
}

}  // namespace orraag
