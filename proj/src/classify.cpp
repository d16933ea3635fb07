// classify.cpp — special orientation and elementary-type recognition.

#include "orraag/classify.hpp"

#include <algorithm>
#include <array>
#include <bit>

namespace orraag {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

std::vector<std::string> sorted_ids(const OrientedGraph& g, std::initializer_list<int> idx) {
  std::vector<std::string> ids;
  for (int i : idx) ids.push_back(g.vertex(i).id);
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
  return ids;
}

std::vector<Arc> arcs_within(const OrientedGraph& g, std::uint64_t subset) {
  std::vector<Arc> out;
  for (std::uint64_t m = subset; m; m &= m - 1) {
    int i = std::countr_zero(m);
    for (std::uint64_t t = g.out_mask(i) & subset; t; t &= t - 1)
      out.push_back({g.vertex(i).id, g.vertex(std::countr_zero(t)).id});
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

const char* to_string(ForbiddenWitness::Kind k) {
  switch (k) {
    case ForbiddenWitness::Kind::NotSpeciallyOriented: return "NotSpeciallyOriented";
    case ForbiddenWitness::Kind::InducedC4: return "InducedC4";
    case ForbiddenWitness::Kind::InducedL3: return "InducedL3";
    case ForbiddenWitness::Kind::InducedLambdaS: return "InducedLambdaS";
  }
  return "?";
}

SpecialOrientationResult is_specially_oriented(const OrientedGraph& g) {
  // Collect violating special edges and pick the id-least one for the witness.
  const int n = g.size();
  int best_from = -1, best_to = -1;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!g.special_arc(i, j) || g.vertex(j).kind != VertexKind::Ordinary) continue;
      if (best_from < 0 ||
          std::pair(g.vertex(i).id, g.vertex(j).id) <
              std::pair(g.vertex(best_from).id, g.vertex(best_to).id)) {
        best_from = i;
        best_to = j;
      }
    }
  if (best_from < 0) return {true, std::nullopt};

  ForbiddenWitness w;
  w.kind = ForbiddenWitness::Kind::NotSpeciallyOriented;
  w.arcs.push_back({g.vertex(best_from).id, g.vertex(best_to).id});
  // When the ordinary terminus emits an arc, the two arcs form the bad
  // two-edge shape; include the id-least such continuation.
  int cont = -1;
  for (std::uint64_t m = g.out_mask(best_to); m; m &= m - 1) {
    int y = std::countr_zero(m);
    if (cont < 0 || g.vertex(y).id < g.vertex(cont).id) cont = y;
  }
  if (cont >= 0) {
    w.arcs.push_back({g.vertex(best_to).id, g.vertex(cont).id});
    if (g.has_arc(cont, best_to)) w.arcs.push_back({g.vertex(cont).id, g.vertex(best_to).id});
    w.vertices = sorted_ids(g, {best_from, best_to, cont});
  } else {
    w.vertices = sorted_ids(g, {best_from, best_to});
  }
  std::sort(w.arcs.begin(), w.arcs.end());
  return {false, std::move(w)};
}

namespace {

// Induced naive pattern tests on a 4-element index subset.  On four
// vertices, degree sequence (2,2,2,2) forces a 4-cycle, and three edges
// with degrees (1,1,2,2) force a path.
bool induced_c4(const std::array<int, 4>& deg, int edges) {
  return edges == 4 && deg[0] == 2 && deg[1] == 2 && deg[2] == 2 && deg[3] == 2;
}

bool induced_l3(std::array<int, 4> deg, int edges) {
  std::sort(deg.begin(), deg.end());
  return edges == 3 && deg == std::array<int, 4>{1, 1, 2, 2};
}

}  // namespace

EtCheckResult is_elementary_type_forbidden(const OrientedGraph& g) {
  SpecialOrientationResult so = is_specially_oriented(g);
  if (!so.specially_oriented) return {false, std::move(so.witness)};

  const int n = g.size();

  // Two ordinary vertices pointing at a common special vertex, nothing else
  // among the three.
  for (int s = 0; s < n; ++s) {
    if (g.vertex(s).kind != VertexKind::Special) continue;
    for (int u = 0; u < n; ++u) {
      if (!g.has_arc(u, s)) continue;
      for (int v = u + 1; v < n; ++v) {
        if (!g.has_arc(v, s) || g.adjacent(u, v)) continue;
        ForbiddenWitness w;
        w.kind = ForbiddenWitness::Kind::InducedLambdaS;
        w.vertices = sorted_ids(g, {u, s, v});
        w.arcs = {{g.vertex(u).id, g.vertex(s).id}, {g.vertex(v).id, g.vertex(s).id}};
        std::sort(w.arcs.begin(), w.arcs.end());
        return {false, std::move(w)};
      }
    }
  }

  // Induced naive 4-cycles and 4-vertex paths.
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const std::uint64_t sub = bit(a) | bit(b) | bit(c) | bit(d);
          std::array<int, 4> deg{};
          int k = 0, edges = 0;
          for (int v : {a, b, c, d}) {
            deg[k] = std::popcount(g.adj_mask(v) & sub);
            edges += deg[k++];
          }
          edges /= 2;
          bool c4 = induced_c4(deg, edges);
          if (c4 || induced_l3(deg, edges)) {
            ForbiddenWitness w;
            w.kind = c4 ? ForbiddenWitness::Kind::InducedC4 : ForbiddenWitness::Kind::InducedL3;
            w.vertices = sorted_ids(g, {a, b, c, d});
            w.arcs = arcs_within(g, sub);
            return {false, std::move(w)};
          }
        }

  return {true, std::nullopt};
}

namespace {

// A cone tip: ordinary, joined to every other vertex, with both arcs towards
// ordinary neighbours and a single outgoing arc towards special ones.
bool is_cone_tip(const OrientedGraph& g, int v) {
  if (g.vertex(v).kind != VertexKind::Ordinary) return false;
  for (int w = 0; w < g.size(); ++w) {
    if (w == v) continue;
    if (g.vertex(w).kind == VertexKind::Special) {
      if (!g.has_arc(v, w)) return false;  // the reverse arc cannot exist anyway
    } else {
      if (!g.has_arc(v, w) || !g.has_arc(w, v)) return false;
    }
  }
  return true;
}

std::optional<DecompositionTree> decompose_rec(const OrientedGraph& g) {
  if (g.size() == 1)
    return DecompositionTree{
        DecompositionTree::Leaf{g.vertex(0).id, g.vertex(0).kind}};

  NaiveGraph ng = naive_projection(g);
  std::vector<std::vector<int>> comps = components(ng);
  if (comps.size() > 1) {
    DecompositionTree::Disjoint dis;
    for (const std::vector<int>& comp : comps) {
      std::vector<std::string> ids;
      for (int i : comp) ids.push_back(g.vertex(i).id);
      auto sub = decompose_rec(induced_subgraph(g, ids));
      if (!sub) return std::nullopt;
      // Components are connected, so no disjoint node can bubble up here;
      // the flattening invariant holds by construction.
      dis.children.push_back(std::move(*sub));
    }
    return DecompositionTree{std::move(dis)};
  }

  int tip = -1;
  for (int v = 0; v < g.size(); ++v)
    if (is_cone_tip(g, v) && (tip < 0 || g.vertex(v).id < g.vertex(tip).id)) tip = v;
  if (tip < 0) return std::nullopt;

  std::vector<std::string> rest;
  for (int i = 0; i < g.size(); ++i)
    if (i != tip) rest.push_back(g.vertex(i).id);
  auto sub = decompose_rec(induced_subgraph(g, rest));
  if (!sub) return std::nullopt;
  return DecompositionTree{DecompositionTree::Cone{
      g.vertex(tip).id, std::make_unique<DecompositionTree>(std::move(*sub))}};
}

}  // namespace

DecomposeResult decompose_elementary(const OrientedGraph& g) {
  DecomposeResult res;
  auto tree = decompose_rec(g);
  if (tree) {
    res.tree = std::move(*tree);
  } else {
    res.witness = is_elementary_type_forbidden(g).witness;
  }
  return res;
}

bool is_elementary_type_inductive(const OrientedGraph& g) {
  return decompose_rec(g).has_value();
}

OrientedGraph rebuild_from_tree(const DecompositionTree& t) {
  if (const auto* leaf = std::get_if<DecompositionTree::Leaf>(&t.node))
    return OrientedGraph({{leaf->id, leaf->kind}}, {});
  if (const auto* cn = std::get_if<DecompositionTree::Cone>(&t.node))
    return cone(rebuild_from_tree(*cn->child), cn->tip);
  const auto& dis = std::get<DecompositionTree::Disjoint>(t.node);
  if (dis.children.empty())
    throw error(error::Code::InvalidGraph, "disjoint node with no children");
  OrientedGraph acc = rebuild_from_tree(dis.children.front());
  for (std::size_t i = 1; i < dis.children.size(); ++i)
    acc = disjoint_union(acc, rebuild_from_tree(dis.children[i]));
  return acc;
}

std::vector<std::string> central_vertices(const NaiveGraph& ng) {
  if (!is_connected(ng))
    throw error(error::Code::Disconnected, "central vertices need a connected graph");
  std::vector<std::string> out;
  for (int i = 0; i < ng.size(); ++i)
    if (ng.degree(i) == ng.size() - 1) out.push_back(ng.id(i));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace orraag
