// graph.hpp — oriented graphs with ordinary/special vertices, their naive
// (undirected) projections, and the elementary surgery operations:
// induced subgraphs, disjoint unions, cones, patchings, isomorphism.
//
// An oriented graph here is a finite loop-free directed graph whose vertex
// set is partitioned into *ordinary* and *special* vertices, subject to the
// origin condition: the origin (first coordinate) of every arc is ordinary.
// An arc (v, w) is a *special edge* when the reverse arc (w, v) is absent,
// and an *ordinary edge* otherwise.  The naive projection keeps one
// undirected edge per adjacent pair of vertices.
//
// Graphs are immutable once built and always satisfy the conditions above;
// use validate() to build one from untrusted data and collect violations.

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace orraag {

// Structural caps: adjacency lives in 64-bit masks, and isomorphism testing
// enumerates vertex permutations.
inline constexpr int kVertexCap = 64;
inline constexpr int kIsoCap = 8;

enum class VertexKind { Ordinary, Special };

const char* to_string(VertexKind k);

struct Vertex {
  std::string id;
  VertexKind kind = VertexKind::Ordinary;
  friend bool operator==(const Vertex&, const Vertex&) = default;
};

struct Arc {
  std::string from;
  std::string to;
  friend bool operator==(const Arc&, const Arc&) = default;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

// Library-wide error type.  Precondition violations throw; expected domain
// outcomes (validation reports, decomposition failures with witnesses, ...)
// are returned as values instead.
class error : public std::runtime_error {
 public:
  enum class Code {
    UnknownVertex,
    EmptySubset,
    DuplicateVertex,
    IncompatibleOverlap,
    TooLarge,
    NotChordal,
    SingleClique,
    Disconnected,
    NotSpeciallyOriented,
    CapExceeded,
    InvalidOrientation,
    InvalidGraph,
    ParseError,
  };

  error(Code code, const std::string& what) : std::runtime_error(what), code_(code) {}
  Code code() const { return code_; }

 private:
  Code code_;
};

// Raw graph data as read from a file or assembled by hand; validate() turns
// it into an OrientedGraph or a list of violations.
struct RawOrientedGraph {
  std::vector<Vertex> vertices;
  std::vector<Arc> arcs;
};

enum class ViolationCode {
  LoopArc,           // arc (v, v)
  SpecialOrigin,     // arc whose origin is a special vertex
  DanglingEndpoint,  // arc endpoint that is not a declared vertex
  DuplicateVertex,   // repeated vertex id
  EmptyVertexSet,    // no vertices at all
  EmptyVertexId,     // vertex with an empty id
  VertexCapExceeded, // more than kVertexCap vertices
};

const char* to_string(ViolationCode c);

struct Violation {
  ViolationCode code;
  std::string detail;
};

class OrientedGraph {
 public:
  // Checked constructor; throws error(InvalidGraph) listing the violations.
  // Prefer validate() when the violations themselves are wanted.
  OrientedGraph(std::vector<Vertex> vertices, const std::vector<Arc>& arcs);

  // Internal fast path: adjacency given as out-masks, invariants re-checked
  // cheaply (no string work).  Throws error(InvalidGraph) on violation.
  static OrientedGraph from_adjacency(std::vector<Vertex> vertices,
                                      std::vector<std::uint64_t> out);

  int size() const { return static_cast<int>(vertices_.size()); }
  const std::vector<Vertex>& vertices() const { return vertices_; }
  const Vertex& vertex(int i) const { return vertices_[i]; }
  std::optional<int> index_of(std::string_view id) const;

  bool has_arc(int i, int j) const { return (out_[i] >> j) & 1u; }
  bool adjacent(int i, int j) const { return ((out_[i] | in_[i]) >> j) & 1u; }
  // An arc without its reverse.
  bool special_arc(int i, int j) const { return has_arc(i, j) && !has_arc(j, i); }

  std::uint64_t out_mask(int i) const { return out_[i]; }
  std::uint64_t in_mask(int i) const { return in_[i]; }
  std::uint64_t adj_mask(int i) const { return out_[i] | in_[i]; }

  // All arcs as id pairs, sorted by (from, to).
  std::vector<Arc> arcs() const;
  int arc_count() const;

  // Equality of vertex sets (ids and kinds) and arc sets, ignoring the
  // order in which vertices were listed.
  bool same_graph(const OrientedGraph& other) const;

 private:
  OrientedGraph() = default;

  std::vector<Vertex> vertices_;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

struct ValidationResult {
  std::optional<OrientedGraph> graph;  // engaged iff violations is empty
  std::vector<Violation> violations;
  bool ok() const { return graph.has_value(); }
};

ValidationResult validate(const RawOrientedGraph& raw);

// Undirected simple graph, either derived via naive_projection or standalone.
class NaiveGraph {
 public:
  // Throws error(InvalidGraph) on loops, unknown endpoints, duplicate or
  // empty ids, an empty vertex set, or more than kVertexCap vertices.
  NaiveGraph(std::vector<std::string> ids,
             const std::vector<std::pair<std::string, std::string>>& edges);

  int size() const { return static_cast<int>(ids_.size()); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(int i) const { return ids_[i]; }
  std::optional<int> index_of(std::string_view id) const;

  bool adjacent(int i, int j) const { return (adj_[i] >> j) & 1u; }
  std::uint64_t adj_mask(int i) const { return adj_[i]; }
  int degree(int i) const;

  // Edges as id pairs; each pair sorted, list sorted.
  std::vector<std::pair<std::string, std::string>> edges() const;
  int edge_count() const;

  bool same_graph(const NaiveGraph& other) const;

 private:
  friend NaiveGraph naive_projection(const OrientedGraph&);
  friend NaiveGraph induced_subgraph(const NaiveGraph&, const std::vector<std::string>&);
  NaiveGraph() = default;

  std::vector<std::string> ids_;
  std::vector<std::uint64_t> adj_;
};

// --- Edge classification ----------------------------------------------------

// Partition of the arc set into special edges (no reverse arc) and ordinary
// ones (both arcs of an ordinary pair are listed).  Both lists sorted.
struct EdgeClassification {
  std::vector<Arc> special;
  std::vector<Arc> ordinary;
};

EdgeClassification edge_classification(const OrientedGraph& g);

// --- Surgery ----------------------------------------------------------------

NaiveGraph naive_projection(const OrientedGraph& g);

// Induced subgraph on the given vertex ids (duplicates ignored).  Vertex
// order follows the host graph.  Throws UnknownVertex / EmptySubset.
OrientedGraph induced_subgraph(const OrientedGraph& g, const std::vector<std::string>& subset);
NaiveGraph induced_subgraph(const NaiveGraph& ng, const std::vector<std::string>& subset);

// Disjoint union.  Ids stay untouched when the two id sets are disjoint;
// otherwise every id is prefixed ("1." / "2.") to disambiguate.
OrientedGraph disjoint_union(const OrientedGraph& g1, const OrientedGraph& g2);

// Cone over g: a new ordinary tip joined to every base vertex — one arc
// (tip, w) for special w, both arcs for ordinary w.  The tip id must be
// fresh (throws DuplicateVertex).
OrientedGraph cone(const OrientedGraph& g, const std::string& tip_id);

// Patching of g1 and g2 along the common vertex set.  The common ids must
// induce identical subgraphs in both (same kinds and arcs); any further
// shared ids must agree as well, since the result is the plain union.
// Throws UnknownVertex / EmptySubset / IncompatibleOverlap.
OrientedGraph patching(const OrientedGraph& g1, const OrientedGraph& g2,
                       const std::vector<std::string>& common);

// --- Isomorphism ------------------------------------------------------------

// Kind- and arc-preserving vertex bijection, as (id in g1, id in g2) pairs
// sorted by the first component; disengaged when no isomorphism exists.
// Brute force over permutations; throws TooLarge above kIsoCap vertices.
using IsoWitness = std::vector<std::pair<std::string, std::string>>;
std::optional<IsoWitness> is_isomorphic(const OrientedGraph& g1, const OrientedGraph& g2);

// Canonical key of the isomorphism class (lexicographically minimal
// serialization over all relabelings).  Throws TooLarge above kIsoCap.
std::string canonical_form(const OrientedGraph& g);

// --- Connectivity helpers on naive graphs -----------------------------------

// Connected components as index lists; components ordered by smallest
// member, members ascending.
std::vector<std::vector<int>> components(const NaiveGraph& ng);
bool is_connected(const NaiveGraph& ng);
bool is_complete(const NaiveGraph& ng);

}  // namespace orraag
