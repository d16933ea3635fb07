// io.hpp — parsing and canonical serialization.
//
// Text format, one directive per line ('#' starts a comment):
//   vertex <id> ordinary|special
//   arc <from> <to>            a single arc
//   edge <a> <b>               both arcs (an ordinary pair)
//
// JSON graph shape: {"vertices":[{"id":...,"kind":...},...],
//                    "arcs":[[from,to],...]}.
// All JSON output is canonical: keys sorted, two-space indent, numbers that
// can exceed 64 bits rendered as decimal strings.  Syntax errors throw
// error(ParseError); semantic problems come back as validation violations.

#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "orraag/chordal.hpp"
#include "orraag/classify.hpp"
#include "orraag/cohomology.hpp"
#include "orraag/enumerate.hpp"
#include "orraag/graph.hpp"
#include "orraag/group_model.hpp"

namespace orraag {

// --- Oriented graphs ----------------------------------------------------------

ValidationResult parse_graph_text(std::string_view text);
ValidationResult parse_graph_json(std::string_view text);
// Dispatches on the first non-space character ('{' means JSON).
ValidationResult parse_graph_auto(std::string_view text);

std::string graph_to_text(const OrientedGraph& g);
std::string graph_to_json(const OrientedGraph& g);
std::string graph_to_json_compact(const OrientedGraph& g);  // single line

std::string violations_to_text(const std::vector<Violation>& vs);
std::string violations_to_json(const std::vector<Violation>& vs);

// Full validation outcome; the JSON echoes the canonical graph when valid.
std::string validation_to_text(const ValidationResult& r);
std::string validation_to_json(const ValidationResult& r);

// --- Classification -----------------------------------------------------------

std::string witness_to_json(const ForbiddenWitness& w);

std::string tree_to_json(const DecompositionTree& t);
DecompositionTree tree_from_json(std::string_view text);

std::string decompose_to_text(const DecomposeResult& r);
std::string decompose_to_json(const DecomposeResult& r);

std::string report_to_json(const ClassificationReport& r);
std::string report_to_text(const ClassificationReport& r);

// --- Chordality ---------------------------------------------------------------

// Maximal cliques, the clique-graph edges, and the CIP tree (null when none).
std::string cliques_to_json(const CliqueGraph& cg, const std::optional<CliqueTree>& tree);
std::string cliques_to_text(const CliqueGraph& cg, const std::optional<CliqueTree>& tree);
std::string amalgam_to_json(const AmalgamTree& t);

// --- Cohomology ---------------------------------------------------------------

// theorem_backed selects "chordal-SR" over "assumed-quadratic" (degrees >= 3
// rest on the quadratic-identification conjecture outside the chordal
// specially oriented case).
std::string hilbert_to_json(const HilbertPolynomial& h, bool theorem_backed,
                            const std::optional<PowerSeriesPrefix>& dual);
std::string hilbert_to_text(const HilbertPolynomial& h, bool theorem_backed,
                            const std::optional<PowerSeriesPrefix>& dual);

// --- Group model ----------------------------------------------------------------

std::string presentation_to_json(const Presentation& p);
std::string presentation_to_fpgroup(const Presentation& p);
std::string labelled_graph_to_json(const LabelledGraph& lg);
std::string abelian_to_json(const AbelianInvariants& inv, long ell,
                            std::optional<bool> oracle_agrees);
std::string abelian_to_text(const AbelianInvariants& inv, long ell,
                            std::optional<bool> oracle_agrees);
std::string quotient_to_json(const LocallyUniformQuotientData& d);

// --- Enumeration ----------------------------------------------------------------

// Count plus, unless graphs is null, the compact serialization of each graph.
std::string enumeration_to_json(int n, bool up_to_iso, std::uint64_t count,
                                const std::vector<OrientedGraph>* graphs);

// --- Verification ---------------------------------------------------------------

std::string verification_to_json(const VerificationOutcome& v);
std::string verification_to_text(const VerificationOutcome& v);

}  // namespace orraag
