// enumerate.hpp — exhaustive enumeration of small oriented and naive graphs
// and the cross-checking suites built on it.
//
// Enumeration walks vertex-kind assignments and per-pair arc states (none /
// forward / backward / both), emitting only valid graphs: states that would
// give a special vertex an outgoing arc are never generated.  Vertices are
// labeled v1..vn.

#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "orraag/graph.hpp"
#include "orraag/orientation.hpp"

namespace orraag {

struct EnumerationSpec {
  int n = 1;
  bool up_to_iso = false;                 // deduplicate by canonical form (needs n <= kIsoCap)
  bool require_specially_oriented = false;
  bool require_connected = false;
  bool require_chordal = false;
  int cap = 5;  // hard cap; 4^(n(n-1)/2) * 2^n candidate shapes grow fast
};

// Calls fn for every (filtered) valid oriented graph on n labeled vertices.
// Throws CapExceeded when n exceeds spec.cap, TooLarge when up_to_iso needs
// more than kIsoCap vertices.
void enumerate_oriented(const EnumerationSpec& spec,
                        const std::function<void(const OrientedGraph&)>& fn);

std::uint64_t count_oriented(const EnumerationSpec& spec);

// All 2^(n(n-1)/2) naive graphs on n labeled vertices.
void enumerate_naive(int n, const std::function<void(const NaiveGraph&)>& fn);

// --- Verification suites ------------------------------------------------------

struct Counterexample {
  std::string graph;  // text serialization
  std::string expected;
  std::string actual;
};

struct VerificationOutcome {
  std::string suite;
  int max_n = 0;
  std::uint64_t checked = 0;
  std::vector<Counterexample> failures;
  std::vector<std::string> findings;  // surfaced observations that do not fail the suite
  bool passed() const { return failures.empty(); }
};

// Forbidden-subgraph and inductive elementary-type deciders agree on every
// valid oriented graph with at most max_n vertices.
VerificationOutcome verify_et_equivalence(int max_n);

// Chordality, existence of a CIP clique tree, and recursive clique-separator
// decomposition agree on every naive graph with at most max_n vertices.
VerificationOutcome verify_chordal_cliquetree(int max_n);

// Clique counts match the decomposition-tree recursion on elementary-type
// graphs and the Mayer–Vietoris recursion on chordal specially oriented
// graphs, for all oriented graphs with at most max_n vertices.  Negative
// coefficients of the dual series 1/h(-t) (through degree 10, chordal naive
// graphs) are reported as findings.
VerificationOutcome verify_hilbert_consistency(int max_n, const LinearOrientation& lambda);

// Closed-form abelianization matches the Smith-style oracle for
// λ(1) ∈ {1+ℓ, 1+ℓ²} (ℓ odd; {5, 9} for ℓ = 2) on every valid oriented
// graph with at most max_n vertices.
VerificationOutcome verify_abelianization(int max_n, long ell);

std::string graph_to_text_brief(const OrientedGraph& g);  // one-line form for reports

}  // namespace orraag
