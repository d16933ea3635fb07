// classify.hpp — special orientation, elementary-type recognition (by
// forbidden subgraphs and by inductive decomposition), and decomposition
// trees built from cones and disjoint unions.
//
// An oriented graph is *specially oriented* when every special edge
// terminates at a special vertex.  The *elementary-type* graphs form the
// smallest family containing the one-vertex graphs and closed under disjoint
// union and cones; equivalently, a graph is of elementary type iff it is
// specially oriented and avoids three induced patterns: a naive 4-cycle, a
// naive path on four vertices, and the three-vertex graph with two ordinary
// vertices both pointing at a common special vertex.

#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "orraag/graph.hpp"

namespace orraag {

struct ForbiddenWitness {
  enum class Kind { NotSpeciallyOriented, InducedC4, InducedL3, InducedLambdaS };
  Kind kind;
  std::vector<std::string> vertices;  // sorted ids
  std::vector<Arc> arcs;              // the arcs of g realizing the pattern, sorted
};

const char* to_string(ForbiddenWitness::Kind k);

struct SpecialOrientationResult {
  bool specially_oriented;
  // A special edge with ordinary terminus, together with an arc the terminus
  // emits when there is one.
  std::optional<ForbiddenWitness> witness;
};

SpecialOrientationResult is_specially_oriented(const OrientedGraph& g);

struct EtCheckResult {
  bool elementary_type;
  std::optional<ForbiddenWitness> witness;
};

// Forbidden-pattern decider: specially oriented and no induced 4-cycle /
// 4-vertex path (in the naive projection of an induced subgraph) and no
// induced two-arrows-into-a-special-vertex triple.
EtCheckResult is_elementary_type_forbidden(const OrientedGraph& g);

// Decomposition tree over leaves (single vertices), cones, and disjoint
// unions.  Disjoint nodes are flattened: a disjoint child of a disjoint
// node never occurs.
class DecompositionTree {
 public:
  struct Leaf {
    std::string id;
    VertexKind kind;
  };
  struct Cone {
    std::string tip;
    std::unique_ptr<DecompositionTree> child;
  };
  struct Disjoint {
    std::vector<DecompositionTree> children;
  };

  std::variant<Leaf, Cone, Disjoint> node;
};

struct DecomposeResult {
  std::optional<DecompositionTree> tree;
  std::optional<ForbiddenWitness> witness;  // engaged on failure when a pattern exists
  bool ok() const { return tree.has_value(); }
};

// Greedy inductive decomposition: single vertices are leaves, disconnected
// graphs decompose over their components, and connected graphs are peeled
// at a cone tip — an ordinary vertex joined to every other vertex with both
// arcs towards ordinary neighbours and a single outgoing arc towards special
// ones.  Tip ties break by smallest id.  Failure carries the forbidden
// witness produced by is_elementary_type_forbidden.
DecomposeResult decompose_elementary(const OrientedGraph& g);

// Thin wrapper: does decompose_elementary succeed?
bool is_elementary_type_inductive(const OrientedGraph& g);

// Inverse of decompose_elementary, using graph-core cone / disjoint_union.
OrientedGraph rebuild_from_tree(const DecompositionTree& t);

// Vertices adjacent to every other vertex, sorted by id.  Throws
// Disconnected when ng is not connected.
std::vector<std::string> central_vertices(const NaiveGraph& ng);

}  // namespace orraag
