// chordal.cpp — chordality, cliques, clique trees, patching decomposition.

#include "orraag/chordal.hpp"

#include <algorithm>
#include <bit>
#include <iterator>
#include <map>
#include <numeric>
#include <tuple>

#include "orraag/classify.hpp"

namespace orraag {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

// Is the subset a clique (pairwise adjacent)?
bool is_clique_mask(const NaiveGraph& ng, std::uint64_t subset) {
  for (std::uint64_t m = subset; m; m &= m - 1) {
    int v = std::countr_zero(m);
    if ((subset & ~bit(v)) & ~ng.adj_mask(v)) return false;
  }
  return true;
}

// Index order that walks ids in lexicographic order, for deterministic
// witness and PEO choices.
std::vector<int> id_order(const NaiveGraph& ng) {
  std::vector<int> order(ng.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&ng](int a, int b) { return ng.id(a) < ng.id(b); });
  return order;
}

}  // namespace

ChordalityResult is_chordal(const NaiveGraph& ng) {
  const int n = ng.size();
  const std::vector<int> order = id_order(ng);
  std::uint64_t remaining = (n == 64) ? ~std::uint64_t{0} : (bit(n) - 1);

  ChordalityResult res{true, {}, {}};
  while (remaining) {
    int pick = -1;
    for (int v : order) {
      if (!((remaining >> v) & 1u)) continue;
      if (is_clique_mask(ng, ng.adj_mask(v) & remaining)) { pick = v; break; }
    }
    if (pick >= 0) {
      res.peo.push_back(ng.id(pick));
      remaining &= ~bit(pick);
      continue;
    }

    // No simplicial vertex is left, so the remaining induced subgraph holds
    // an induced chordless cycle: pick a vertex v with two non-adjacent
    // neighbours x, y and close a shortest x–y path avoiding N[v].
    res.chordal = false;
    res.peo.clear();
    for (int v : order) {
      if (!((remaining >> v) & 1u)) continue;
      const std::uint64_t nb = ng.adj_mask(v) & remaining;
      for (int x : order) {
        if (!((nb >> x) & 1u)) continue;
        for (int y : order) {
          if (y == x || !((nb >> y) & 1u) || ng.adjacent(x, y) || ng.id(y) < ng.id(x)) continue;
          const std::uint64_t allowed = (remaining & ~nb & ~bit(v)) | bit(x) | bit(y);
          // BFS from x to y inside `allowed`.
          std::vector<int> parent(n, -1);
          std::uint64_t seen = bit(x), frontier = bit(x);
          while (frontier && !((seen >> y) & 1u)) {
            std::uint64_t next = 0;
            for (std::uint64_t m = frontier; m; m &= m - 1) {
              int u = std::countr_zero(m);
              std::uint64_t fresh = ng.adj_mask(u) & allowed & ~seen;
              for (std::uint64_t f = fresh; f; f &= f - 1) parent[std::countr_zero(f)] = u;
              next |= fresh;
            }
            seen |= next;
            frontier = next;
          }
          if (!((seen >> y) & 1u)) continue;
          std::vector<int> path;  // y back to x
          for (int u = y; u != -1; u = parent[u]) path.push_back(u);
          if (path.size() < 3) continue;  // adjacent x, y cannot happen; guard anyway
          res.witness_cycle.push_back(ng.id(v));
          for (auto it = path.rbegin(); it != path.rend(); ++it)
            res.witness_cycle.push_back(ng.id(*it));
          return res;
        }
      }
    }
    // Unreachable: a stuck subgraph always contains an induced cycle.
    throw error(error::Code::InvalidGraph, "internal: no witness cycle in a stuck subgraph");
  }
  return res;
}

namespace {

void bron_kerbosch(const NaiveGraph& ng, std::uint64_t r, std::uint64_t p, std::uint64_t x,
                   std::vector<std::uint64_t>& out) {
  if (!p && !x) {
    out.push_back(r);
    return;
  }
  // Pivot: vertex of p|x with the most neighbours in p.
  int pivot = -1, best = -1;
  for (std::uint64_t m = p | x; m; m &= m - 1) {
    int u = std::countr_zero(m);
    int cnt = std::popcount(p & ng.adj_mask(u));
    if (cnt > best) { best = cnt; pivot = u; }
  }
  for (std::uint64_t cand = p & ~ng.adj_mask(pivot); cand; cand &= cand - 1) {
    int v = std::countr_zero(cand);
    bron_kerbosch(ng, r | bit(v), p & ng.adj_mask(v), x & ng.adj_mask(v), out);
    p &= ~bit(v);
    x |= bit(v);
  }
}

std::vector<std::uint64_t> maximal_clique_masks(const NaiveGraph& ng) {
  std::vector<std::uint64_t> masks;
  const std::uint64_t all = (ng.size() == 64) ? ~std::uint64_t{0} : (bit(ng.size()) - 1);
  bron_kerbosch(ng, 0, all, 0, masks);
  return masks;
}

Clique mask_to_clique(const NaiveGraph& ng, std::uint64_t mask) {
  Clique c;
  for (std::uint64_t m = mask; m; m &= m - 1) c.push_back(ng.id(std::countr_zero(m)));
  std::sort(c.begin(), c.end());
  return c;
}

// Maximal cliques in canonical order, with their masks kept aligned.
std::pair<CliqueSet, std::vector<std::uint64_t>> sorted_cliques(const NaiveGraph& ng) {
  std::vector<std::uint64_t> masks = maximal_clique_masks(ng);
  std::vector<std::pair<Clique, std::uint64_t>> pairs;
  for (std::uint64_t m : masks) pairs.emplace_back(mask_to_clique(ng, m), m);
  std::sort(pairs.begin(), pairs.end());
  CliqueSet cs;
  std::vector<std::uint64_t> aligned;
  for (auto& [c, m] : pairs) {
    cs.cliques.push_back(std::move(c));
    aligned.push_back(m);
  }
  return {std::move(cs), std::move(aligned)};
}

struct Dsu {
  std::vector<int> parent;
  explicit Dsu(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[b] = a;
    return true;
  }
};

}  // namespace

CliqueSet maximal_cliques(const NaiveGraph& ng) { return sorted_cliques(ng).first; }

CliqueGraph clique_graph(const NaiveGraph& ng) {
  auto [cs, masks] = sorted_cliques(ng);
  CliqueGraph cg{std::move(cs), {}};
  for (int i = 0; i < static_cast<int>(masks.size()); ++i)
    for (int j = i + 1; j < static_cast<int>(masks.size()); ++j)
      if (masks[i] & masks[j]) cg.edges.emplace_back(i, j);
  return cg;
}

std::optional<CliqueTree> clique_tree_cip(const NaiveGraph& ng) {
  auto [cs, masks] = sorted_cliques(ng);
  const int m = static_cast<int>(masks.size());

  // Kruskal on weight |intersection| descending, ties by (i, j).
  std::vector<std::tuple<int, int, int>> cand;  // (-weight, i, j)
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      if (masks[i] & masks[j]) cand.emplace_back(-std::popcount(masks[i] & masks[j]), i, j);
  std::sort(cand.begin(), cand.end());

  Dsu dsu(m);
  std::vector<std::pair<int, int>> edges;
  for (auto [negw, i, j] : cand)
    if (dsu.unite(i, j)) edges.emplace_back(i, j);

  // Join the remaining forest components with empty separators (cliques in
  // different clique-graph components never share a vertex, so the pair
  // intersections these edges must carry are empty).
  std::vector<int> reps;
  for (int i = 0; i < m; ++i)
    if (dsu.find(i) == i) reps.push_back(i);
  for (std::size_t k = 1; k < reps.size(); ++k) {
    edges.emplace_back(reps[0], reps[k]);
    dsu.unite(reps[0], reps[k]);
  }
  std::sort(edges.begin(), edges.end());

  // Explicit CIP check over all pairs: walk the tree path, intersect.
  std::vector<std::vector<int>> nbr(m);
  for (auto [i, j] : edges) {
    nbr[i].push_back(j);
    nbr[j].push_back(i);
  }
  auto path_ok = [&](int from, int to) {
    const std::uint64_t need = masks[from] & masks[to];
    std::vector<int> parent(m, -2);
    parent[from] = -1;
    std::vector<int> queue{from};
    for (std::size_t q = 0; q < queue.size(); ++q) {
      int u = queue[q];
      if (u == to) break;
      for (int v : nbr[u])
        if (parent[v] == -2) {
          parent[v] = u;
          queue.push_back(v);
        }
    }
    for (int u = to; u != from; u = parent[u])
      if ((need & masks[u]) != need) return false;
    return true;
  };
  bool cip = true;
  for (int i = 0; i < m && cip; ++i)
    for (int j = i + 1; j < m && cip; ++j) cip = path_ok(i, j);

  // Running-intersection cross-check: the cliques containing any fixed
  // vertex must induce a connected subtree.  Equivalent to the CIP; the
  // agreement is asserted rather than assumed.
  bool rip = true;
  for (int v = 0; v < ng.size() && rip; ++v) {
    std::vector<int> holders;
    for (int i = 0; i < m; ++i)
      if ((masks[i] >> v) & 1u) holders.push_back(i);
    if (holders.empty()) continue;
    std::vector<char> in(m, 0), seen(m, 0);
    for (int i : holders) in[i] = 1;
    std::vector<int> queue{holders[0]};
    seen[holders[0]] = 1;
    std::size_t reached = 0;
    for (std::size_t q = 0; q < queue.size(); ++q) {
      ++reached;
      for (int u : nbr[queue[q]])
        if (in[u] && !seen[u]) {
          seen[u] = 1;
          queue.push_back(u);
        }
    }
    rip = reached == holders.size();
  }
  if (cip != rip)
    throw error(error::Code::InvalidGraph, "internal: CIP and running intersection disagree");
  if (!cip) return std::nullopt;
  return CliqueTree{std::move(cs), std::move(edges)};
}

PatchingSplit patching_split(const OrientedGraph& g) {
  const NaiveGraph ng = naive_projection(g);
  ChordalityResult ch = is_chordal(ng);
  if (!ch.chordal) {
    std::string cyc;
    for (const std::string& id : ch.witness_cycle) cyc += (cyc.empty() ? "" : " ") + id;
    throw error(error::Code::NotChordal, "not chordal; induced cycle: " + cyc);
  }
  auto tree = clique_tree_cip(ng);
  const int m = static_cast<int>(tree->cliques.cliques.size());
  if (m < 2) throw error(error::Code::SingleClique, "a complete graph does not split");
  if (!is_connected(ng))
    throw error(error::Code::Disconnected,
                "disconnected graphs decompose as disjoint unions, not patchings");

  std::vector<int> deg(m, 0);
  std::vector<int> nbr(m, -1);
  for (auto [i, j] : tree->edges) {
    ++deg[i];
    ++deg[j];
    nbr[i] = nbr[i] == -1 ? j : nbr[i];
    nbr[j] = nbr[j] == -1 ? i : nbr[j];
  }
  int leaf = -1;
  for (int i = 0; i < m; ++i)
    if (deg[i] == 1) { leaf = i; break; }
  // A tree on >= 2 nodes has a leaf; connectedness makes every separator
  // nonempty, so the leaf's single neighbour meets it.
  const Clique& xi = tree->cliques.cliques[leaf];
  const Clique& xi2 = tree->cliques.cliques[nbr[leaf]];
  std::vector<std::string> delta;
  std::set_intersection(xi.begin(), xi.end(), xi2.begin(), xi2.end(), std::back_inserter(delta));

  std::vector<std::string> rest;
  for (const Vertex& v : g.vertices()) {
    bool priv = std::binary_search(xi.begin(), xi.end(), v.id) &&
                !std::binary_search(delta.begin(), delta.end(), v.id);
    if (!priv) rest.push_back(v.id);
  }
  return PatchingSplit{induced_subgraph(g, xi), induced_subgraph(g, rest), std::move(delta)};
}

namespace {

AmalgamTree amalgam_rec(const OrientedGraph& g) {
  const NaiveGraph ng = naive_projection(g);
  std::vector<std::vector<int>> comps = components(ng);
  if (comps.size() > 1) {
    AmalgamTree::FreeProduct fp;
    for (const std::vector<int>& comp : comps) {
      std::vector<std::string> ids;
      for (int i : comp) ids.push_back(g.vertex(i).id);
      fp.children.push_back(amalgam_rec(induced_subgraph(g, ids)));
    }
    return AmalgamTree{std::move(fp)};
  }
  if (is_complete(ng)) return AmalgamTree{AmalgamTree::Leaf{g}};
  PatchingSplit split = patching_split(g);
  AmalgamTree::Amalgam am;
  am.delta = std::move(split.delta);
  am.left = std::make_unique<AmalgamTree>(amalgam_rec(split.g1));
  am.right = std::make_unique<AmalgamTree>(amalgam_rec(split.g2));
  return AmalgamTree{std::move(am)};
}

}  // namespace

AmalgamTree amalgam_decomposition(const OrientedGraph& g, const LinearOrientation&) {
  if (!is_specially_oriented(g).specially_oriented)
    throw error(error::Code::NotSpeciallyOriented,
                "amalgam decomposition needs a specially oriented graph");
  ChordalityResult ch = is_chordal(naive_projection(g));
  if (!ch.chordal)
    throw error(error::Code::NotChordal, "amalgam decomposition needs a chordal graph");
  return amalgam_rec(g);
}

namespace {

bool decomposes_rec(const NaiveGraph& ng, std::uint64_t subset,
                    std::map<std::uint64_t, bool>& memo) {
  auto hit = memo.find(subset);
  if (hit != memo.end()) return hit->second;

  // Complete?
  bool complete = true;
  for (std::uint64_t m = subset; m && complete; m &= m - 1) {
    int v = std::countr_zero(m);
    complete = ((ng.adj_mask(v) & subset) | bit(v)) == subset;
  }
  if (complete) return memo[subset] = true;

  // Components within the subset.
  auto comps_of = [&ng](std::uint64_t sub) {
    std::vector<std::uint64_t> out;
    std::uint64_t left = sub;
    while (left) {
      std::uint64_t comp = bit(std::countr_zero(left)), frontier = comp;
      while (frontier) {
        std::uint64_t next = 0;
        for (std::uint64_t m = frontier; m; m &= m - 1)
          next |= ng.adj_mask(std::countr_zero(m)) & sub;
        frontier = next & ~comp;
        comp |= next & sub;
      }
      out.push_back(comp);
      left &= ~comp;
    }
    return out;
  };

  std::vector<std::uint64_t> comps = comps_of(subset);
  if (comps.size() > 1) {
    bool ok = true;
    for (std::uint64_t comp : comps) ok = ok && decomposes_rec(ng, comp, memo);
    return memo[subset] = ok;
  }

  // Search for a nonempty clique separator: enumerate clique subsets of the
  // subset and test whether removing one disconnects the rest.
  std::vector<int> members;
  for (std::uint64_t m = subset; m; m &= m - 1) members.push_back(std::countr_zero(m));
  const int k = static_cast<int>(members.size());
  for (std::uint64_t sel = 1; sel < (std::uint64_t{1} << k); ++sel) {
    std::uint64_t delta = 0;
    for (int t = 0; t < k; ++t)
      if ((sel >> t) & 1u) delta |= bit(members[t]);
    if (delta == subset || !is_clique_mask(ng, delta)) continue;
    std::vector<std::uint64_t> parts = comps_of(subset & ~delta);
    if (parts.size() < 2) continue;
    bool ok = true;
    for (std::uint64_t part : parts) ok = ok && decomposes_rec(ng, part | delta, memo);
    if (ok) return memo[subset] = true;
  }
  return memo[subset] = false;
}

}  // namespace

bool clique_separator_decomposes(const NaiveGraph& ng) {
  std::map<std::uint64_t, bool> memo;
  const std::uint64_t all = (ng.size() == 64) ? ~std::uint64_t{0} : (bit(ng.size()) - 1);
  return decomposes_rec(ng, all, memo);
}

bool has_triangle(const NaiveGraph& ng) {
  for (int i = 0; i < ng.size(); ++i)
    for (int j = i + 1; j < ng.size(); ++j)
      if (ng.adjacent(i, j) && (ng.adj_mask(i) & ng.adj_mask(j))) return true;
  return false;
}

}  // namespace orraag
