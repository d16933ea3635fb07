// group_model.hpp — finite presentations of oriented pro-ℓ RAAGs, the
// ℓ-labelled graph translation, abelianized invariants (closed formula and
// an independent Smith-style oracle), the locally uniform quotient, and the
// Galois-theoretic classification report.
//
// Presentation convention: every adjacent pair contributes one relator.  An
// ordinary pair {v, w} commutes; a special edge (v, w) yields
// w v w^{-1} = v^{λ(1)} — the terminus conjugates the origin.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orraag/classify.hpp"
#include "orraag/graph.hpp"
#include "orraag/orientation.hpp"

namespace orraag {

struct Presentation {
  struct Generator {
    std::string id;
    Int theta;  // 1 on ordinary vertices, λ(1) on special ones
  };
  struct Relator {
    enum class Kind { Commute, Conjugate };
    Kind kind;
    // Commute: [a, b] = 1 with a < b.  Conjugate: a b a^{-1} = b^exponent,
    // the conjugator a being the terminus of the special edge (b, a).
    std::string a;
    std::string b;
    Int exponent;  // unused for Commute
  };

  std::vector<Generator> generators;  // in vertex order
  std::vector<Relator> relators;      // by sorted id pair
};

Presentation presentation(const OrientedGraph& g, const LinearOrientation& lambda);

// One labelled arc per adjacent pair: a special edge (v, w) keeps its
// direction and carries the label (λ(1) - 1, 0); an ordinary pair is listed
// once (smaller id first) with label (0, 0).
struct LabelledGraph {
  struct LabelledArc {
    std::string from;
    std::string to;
    Int a;
    Int b;
  };
  std::vector<std::string> vertices;
  std::vector<LabelledArc> arcs;  // sorted by (from, to)
};

LabelledGraph to_labelled_graph(const OrientedGraph& g, const LinearOrientation& lambda);

struct AbelianInvariants {
  int free_rank = 0;
  std::vector<int> torsion_exponents;  // torsion Z/ℓ^k per entry, ascending
  bool precision_limited = false;      // an invariant factor fell beyond ℓ^N
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Closed form: one Z/ℓ^f summand per vertex that originates a special edge,
// the rest free.
AbelianInvariants abelianization_formula(const OrientedGraph& g, const LinearOrientation& lambda);

// Independent oracle: exponent-sum matrix of the relators, reduced by
// Smith-style elimination with valuation-minimal pivots.
AbelianInvariants abelianization_oracle(const Presentation& p, const LinearOrientation& lambda);

// The maximal locally uniform quotient of a specially oriented graph's
// group: free abelian of rank |V| when no vertex is special, otherwise of
// rank |V| - 1 with one generator acting by the unit λ(1).  Throws
// NotSpeciallyOriented.
struct LocallyUniformQuotientData {
  bool acts = false;      // is some vertex special?
  int abelian_rank = 0;
  Int action_unit;        // λ(1)
  int depth = 0;          // f
};

LocallyUniformQuotientData locally_uniform_quotient(const OrientedGraph& g,
                                                    const LinearOrientation& lambda);

// --- Classification report ----------------------------------------------------

enum class Verdict { Yes, No, Unknown };

const char* to_string(Verdict v);

struct VerdictEntry {
  Verdict verdict = Verdict::Unknown;
  std::string citation;
  std::optional<ForbiddenWitness> witness;
};

struct ClassificationReport {
  VerdictEntry valid;
  VerdictEntry specially_oriented;
  VerdictEntry chordal;
  VerdictEntry elementary_type;
  VerdictEntry kummerian;
  VerdictEntry locally_uniform;
  VerdictEntry bloch_kato;
  VerdictEntry one_cyclotomic;
  VerdictEntry galois_realizable;
  VerdictEntry subgroups_are_orRAAGs;
  VerdictEntry bogomolov_positselski;
  VerdictEntry coherent_fp_infinity;
  VerdictEntry cohomology_quadratic;
};

// Three-valued verdicts with citations; negative verdicts carry a forbidden
// witness where one of the four witness patterns applies.
ClassificationReport classification_report(const OrientedGraph& g, const LinearOrientation& lambda);

// Report for raw data that failed validation: valid is "no" and every other
// property "unknown".
ClassificationReport report_for_invalid();

}  // namespace orraag
