// chordal.hpp — chordality testing with witnesses, maximal cliques, clique
// graphs and clique trees with the clique-intersection property, and the
// patching decomposition of chordal graphs along clique separators.

#pragma once

#include <memory>
#include <optional>
#include <variant>
#include <vector>

#include "orraag/graph.hpp"
#include "orraag/orientation.hpp"

namespace orraag {

struct ChordalityResult {
  bool chordal;
  // When chordal: a perfect elimination ordering (each vertex simplicial at
  // removal time, smallest id first).
  std::vector<std::string> peo;
  // When not: an induced chordless cycle of length >= 4, in cycle order.
  std::vector<std::string> witness_cycle;
};

ChordalityResult is_chordal(const NaiveGraph& ng);

using Clique = std::vector<std::string>;  // sorted ids

struct CliqueSet {
  std::vector<Clique> cliques;  // sorted lexicographically
};

// Maximal cliques via Bron–Kerbosch with pivoting, in canonical order.
CliqueSet maximal_cliques(const NaiveGraph& ng);

// Nodes are indices into cliques; an edge joins two maximal cliques with
// nonempty intersection.
struct CliqueGraph {
  CliqueSet cliques;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
};

CliqueGraph clique_graph(const NaiveGraph& ng);

// Spanning tree of the clique set with the clique-intersection property:
// for every pair of cliques, their intersection lies in every clique on the
// tree path between them.
struct CliqueTree {
  CliqueSet cliques;
  std::vector<std::pair<int, int>> edges;  // i < j, sorted
};

// Maximum-weight spanning tree of the clique graph (Kruskal on weight
// |intersection|, ties by clique index), with zero-weight links joining the
// clique-graph components of a disconnected graph.  The CIP is then checked
// explicitly over all clique pairs (and cross-checked against the
// running-intersection property); nullopt when the check fails, which
// happens exactly for non-chordal graphs.
std::optional<CliqueTree> clique_tree_cip(const NaiveGraph& ng);

// One patching step: peel a leaf clique of the clique tree.  g1 is the leaf
// clique, g2 the rest, delta their (nonempty) common clique;
// patching(g1, g2, delta) reassembles g.  Leaf choice: smallest clique
// index whose tree neighbour meets it.  Throws NotChordal / SingleClique /
// Disconnected (disconnected graphs decompose as disjoint unions instead).
struct PatchingSplit {
  OrientedGraph g1;
  OrientedGraph g2;
  std::vector<std::string> delta;  // sorted ids
};

PatchingSplit patching_split(const OrientedGraph& g);

// Full recursive decomposition of a chordal specially oriented graph:
// free products over connected components, amalgams over clique separators
// within them, complete graphs as leaves.  The generator inclusions of an
// amalgam are the identity on vertex ids, so each node just records delta.
// Leaves are exactly the maximal cliques of g.
class AmalgamTree {
 public:
  struct Leaf {
    OrientedGraph graph;  // complete
  };
  struct Amalgam {
    std::vector<std::string> delta;  // sorted ids
    std::unique_ptr<AmalgamTree> left;
    std::unique_ptr<AmalgamTree> right;
  };
  struct FreeProduct {
    std::vector<AmalgamTree> children;
  };

  std::variant<Leaf, Amalgam, FreeProduct> node;
};

// Throws NotChordal / NotSpeciallyOriented.
AmalgamTree amalgam_decomposition(const OrientedGraph& g, const LinearOrientation& lambda);

// Definition-level decomposition test, independent of clique trees: a graph
// passes when it is complete, splits over its components, or admits some
// nonempty clique separator whose removal disconnects it, with all parts
// passing recursively.  Equivalent to chordality.
bool clique_separator_decomposes(const NaiveGraph& ng);

// Any three pairwise-adjacent vertices?
bool has_triangle(const NaiveGraph& ng);

}  // namespace orraag
