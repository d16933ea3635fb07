// graph.cpp — oriented/naive graph types and surgery operations.

#include "orraag/graph.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace orraag {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

}  // namespace

const char* to_string(VertexKind k) {
  return k == VertexKind::Ordinary ? "ordinary" : "special";
}

const char* to_string(ViolationCode c) {
  switch (c) {
    case ViolationCode::LoopArc: return "LoopArc";
    case ViolationCode::SpecialOrigin: return "SpecialOrigin";
    case ViolationCode::DanglingEndpoint: return "DanglingEndpoint";
    case ViolationCode::DuplicateVertex: return "DuplicateVertex";
    case ViolationCode::EmptyVertexSet: return "EmptyVertexSet";
    case ViolationCode::EmptyVertexId: return "EmptyVertexId";
    case ViolationCode::VertexCapExceeded: return "VertexCapExceeded";
  }
  return "?";
}

// --- OrientedGraph ----------------------------------------------------------

OrientedGraph::OrientedGraph(std::vector<Vertex> vertices, const std::vector<Arc>& arcs) {
  ValidationResult res = validate(RawOrientedGraph{std::move(vertices), arcs});
  if (!res.ok()) {
    std::ostringstream msg;
    msg << "invalid oriented graph:";
    for (const Violation& v : res.violations) msg << " [" << to_string(v.code) << "] " << v.detail;
    throw error(error::Code::InvalidGraph, msg.str());
  }
  *this = std::move(*res.graph);
}

OrientedGraph OrientedGraph::from_adjacency(std::vector<Vertex> vertices,
                                            std::vector<std::uint64_t> out) {
  const int n = static_cast<int>(vertices.size());
  if (n == 0 || n > kVertexCap || static_cast<int>(out.size()) != n)
    throw error(error::Code::InvalidGraph, "from_adjacency: bad vertex or mask count");
  const std::uint64_t all = (n == 64) ? ~std::uint64_t{0} : (bit(n) - 1);
  OrientedGraph g;
  g.in_.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    if (out[i] & ~all)
      throw error(error::Code::InvalidGraph, "from_adjacency: arc to missing vertex");
    if (out[i] & bit(i)) throw error(error::Code::InvalidGraph, "from_adjacency: loop arc");
    if (out[i] && vertices[i].kind == VertexKind::Special)
      throw error(error::Code::InvalidGraph, "from_adjacency: special origin");
    for (std::uint64_t m = out[i]; m; m &= m - 1) g.in_[std::countr_zero(m)] |= bit(i);
  }
  g.vertices_ = std::move(vertices);
  g.out_ = std::move(out);
  return g;
}

std::optional<int> OrientedGraph::index_of(std::string_view id) const {
  for (int i = 0; i < size(); ++i)
    if (vertices_[i].id == id) return i;
  return std::nullopt;
}

std::vector<Arc> OrientedGraph::arcs() const {
  std::vector<Arc> out;
  for (int i = 0; i < size(); ++i)
    for (std::uint64_t m = out_[i]; m; m &= m - 1)
      out.push_back({vertices_[i].id, vertices_[std::countr_zero(m)].id});
  std::sort(out.begin(), out.end());
  return out;
}

int OrientedGraph::arc_count() const {
  int c = 0;
  for (std::uint64_t m : out_) c += std::popcount(m);
  return c;
}

bool OrientedGraph::same_graph(const OrientedGraph& other) const {
  if (size() != other.size()) return false;
  auto key = [](const OrientedGraph& g) {
    std::vector<std::pair<std::string, VertexKind>> vs;
    for (const Vertex& v : g.vertices_) vs.emplace_back(v.id, v.kind);
    std::sort(vs.begin(), vs.end());
    return vs;
  };
  return key(*this) == key(other) && arcs() == other.arcs();
}

ValidationResult validate(const RawOrientedGraph& raw) {
  ValidationResult res;
  auto add = [&res](ViolationCode code, std::string detail) {
    res.violations.push_back({code, std::move(detail)});
  };

  if (raw.vertices.empty()) {
    add(ViolationCode::EmptyVertexSet, "an oriented graph needs at least one vertex");
    return res;
  }
  if (static_cast<int>(raw.vertices.size()) > kVertexCap) {
    add(ViolationCode::VertexCapExceeded,
        std::to_string(raw.vertices.size()) + " vertices exceed the cap of " +
            std::to_string(kVertexCap));
    return res;
  }

  std::map<std::string, int> index;
  for (int i = 0; i < static_cast<int>(raw.vertices.size()); ++i) {
    const Vertex& v = raw.vertices[i];
    if (v.id.empty()) {
      add(ViolationCode::EmptyVertexId, "vertex #" + std::to_string(i) + " has an empty id");
      continue;
    }
    if (!index.emplace(v.id, i).second)
      add(ViolationCode::DuplicateVertex, "vertex id '" + v.id + "' appears more than once");
  }

  std::vector<std::uint64_t> out(raw.vertices.size(), 0);
  for (const Arc& a : raw.arcs) {
    auto from = index.find(a.from);
    auto to = index.find(a.to);
    if (from == index.end())
      add(ViolationCode::DanglingEndpoint, "arc (" + a.from + ", " + a.to + "): unknown origin");
    if (to == index.end())
      add(ViolationCode::DanglingEndpoint, "arc (" + a.from + ", " + a.to + "): unknown terminus");
    if (from == index.end() || to == index.end()) continue;
    if (from->second == to->second) {
      add(ViolationCode::LoopArc, "loop arc at vertex '" + a.from + "'");
      continue;
    }
    if (raw.vertices[from->second].kind == VertexKind::Special)
      add(ViolationCode::SpecialOrigin,
          "arc (" + a.from + ", " + a.to + ") originates at a special vertex");
    out[from->second] |= bit(to->second);  // duplicate arcs coalesce
  }

  if (res.violations.empty())
    res.graph = OrientedGraph::from_adjacency(raw.vertices, std::move(out));
  return res;
}

// --- NaiveGraph -------------------------------------------------------------

NaiveGraph::NaiveGraph(std::vector<std::string> ids,
                       const std::vector<std::pair<std::string, std::string>>& edges) {
  const int n = static_cast<int>(ids.size());
  if (n == 0) throw error(error::Code::InvalidGraph, "a naive graph needs at least one vertex");
  if (n > kVertexCap)
    throw error(error::Code::InvalidGraph, "more than " + std::to_string(kVertexCap) + " vertices");
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) {
    if (ids[i].empty()) throw error(error::Code::InvalidGraph, "empty vertex id");
    if (!index.emplace(ids[i], i).second)
      throw error(error::Code::InvalidGraph, "duplicate vertex id '" + ids[i] + "'");
  }
  adj_.assign(n, 0);
  for (const auto& [a, b] : edges) {
    auto ia = index.find(a), ib = index.find(b);
    if (ia == index.end() || ib == index.end())
      throw error(error::Code::UnknownVertex, "edge {" + a + ", " + b + "}: unknown endpoint");
    if (ia->second == ib->second)
      throw error(error::Code::InvalidGraph, "loop edge at vertex '" + a + "'");
    adj_[ia->second] |= bit(ib->second);
    adj_[ib->second] |= bit(ia->second);
  }
  ids_ = std::move(ids);
}

std::optional<int> NaiveGraph::index_of(std::string_view id) const {
  for (int i = 0; i < size(); ++i)
    if (ids_[i] == id) return i;
  return std::nullopt;
}

int NaiveGraph::degree(int i) const { return std::popcount(adj_[i]); }

std::vector<std::pair<std::string, std::string>> NaiveGraph::edges() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = i + 1; j < size(); ++j)
      if (adjacent(i, j)) {
        std::pair<std::string, std::string> e{ids_[i], ids_[j]};
        if (e.second < e.first) std::swap(e.first, e.second);
        out.push_back(std::move(e));
      }
  std::sort(out.begin(), out.end());
  return out;
}

int NaiveGraph::edge_count() const {
  int c = 0;
  for (std::uint64_t m : adj_) c += std::popcount(m);
  return c / 2;
}

bool NaiveGraph::same_graph(const NaiveGraph& other) const {
  if (size() != other.size()) return false;
  std::vector<std::string> a = ids_, b = other.ids_;
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  return a == b && edges() == other.edges();
}

// --- Edge classification ----------------------------------------------------

EdgeClassification edge_classification(const OrientedGraph& g) {
  EdgeClassification ec;
  for (int i = 0; i < g.size(); ++i)
    for (std::uint64_t m = g.out_mask(i); m; m &= m - 1) {
      int j = std::countr_zero(m);
      Arc a{g.vertex(i).id, g.vertex(j).id};
      (g.has_arc(j, i) ? ec.ordinary : ec.special).push_back(std::move(a));
    }
  std::sort(ec.special.begin(), ec.special.end());
  std::sort(ec.ordinary.begin(), ec.ordinary.end());
  return ec;
}

// --- Surgery ----------------------------------------------------------------

NaiveGraph naive_projection(const OrientedGraph& g) {
  NaiveGraph ng;
  ng.adj_.reserve(g.size());
  for (int i = 0; i < g.size(); ++i) {
    ng.ids_.push_back(g.vertex(i).id);
    ng.adj_.push_back(g.adj_mask(i));
  }
  return ng;
}

namespace {

// Resolve a subset of ids to an ascending index list (host order).
template <typename G>
std::vector<int> resolve_subset(const G& g, const std::vector<std::string>& subset) {
  if (subset.empty())
    throw error(error::Code::EmptySubset, "induced subgraph over the empty vertex set");
  std::set<int> idx;
  for (const std::string& id : subset) {
    auto i = g.index_of(id);
    if (!i) throw error(error::Code::UnknownVertex, "unknown vertex '" + id + "'");
    idx.insert(*i);
  }
  return {idx.begin(), idx.end()};
}

// Compress a full-size mask to subset coordinates.
std::uint64_t compress(std::uint64_t mask, const std::vector<int>& idx) {
  std::uint64_t out = 0;
  for (int k = 0; k < static_cast<int>(idx.size()); ++k)
    if ((mask >> idx[k]) & 1u) out |= std::uint64_t{1} << k;
  return out;
}

}  // namespace

OrientedGraph induced_subgraph(const OrientedGraph& g, const std::vector<std::string>& subset) {
  std::vector<int> idx = resolve_subset(g, subset);
  std::vector<Vertex> vs;
  std::vector<std::uint64_t> out;
  for (int i : idx) {
    vs.push_back(g.vertex(i));
    out.push_back(compress(g.out_mask(i), idx));
  }
  return OrientedGraph::from_adjacency(std::move(vs), std::move(out));
}

NaiveGraph induced_subgraph(const NaiveGraph& ng, const std::vector<std::string>& subset) {
  std::vector<int> idx = resolve_subset(ng, subset);
  NaiveGraph out;
  for (int i : idx) {
    out.ids_.push_back(ng.id(i));
    out.adj_.push_back(compress(ng.adj_mask(i), idx));
  }
  return out;
}

OrientedGraph disjoint_union(const OrientedGraph& g1, const OrientedGraph& g2) {
  bool clash = false;
  for (const Vertex& v : g2.vertices())
    if (g1.index_of(v.id)) { clash = true; break; }

  const int n1 = g1.size(), n = n1 + g2.size();
  if (n > kVertexCap)
    throw error(error::Code::InvalidGraph,
                "disjoint union exceeds the cap of " + std::to_string(kVertexCap) + " vertices");
  std::vector<Vertex> vs;
  std::vector<std::uint64_t> out;
  for (int i = 0; i < n1; ++i) {
    Vertex v = g1.vertex(i);
    if (clash) v.id = "1." + v.id;
    vs.push_back(std::move(v));
    out.push_back(g1.out_mask(i));
  }
  for (int i = 0; i < g2.size(); ++i) {
    Vertex v = g2.vertex(i);
    if (clash) v.id = "2." + v.id;
    vs.push_back(std::move(v));
    out.push_back(g2.out_mask(i) << n1);
  }
  return OrientedGraph::from_adjacency(std::move(vs), std::move(out));
}

OrientedGraph cone(const OrientedGraph& g, const std::string& tip_id) {
  if (g.index_of(tip_id))
    throw error(error::Code::DuplicateVertex, "cone tip '" + tip_id + "' already a vertex");
  const int n = g.size();
  if (n + 1 > kVertexCap)
    throw error(error::Code::InvalidGraph, "cone exceeds the vertex cap");
  std::vector<Vertex> vs = g.vertices();
  vs.push_back({tip_id, VertexKind::Ordinary});
  std::vector<std::uint64_t> out;
  std::uint64_t tip_out = 0;
  for (int i = 0; i < n; ++i) {
    std::uint64_t row = g.out_mask(i);
    if (g.vertex(i).kind == VertexKind::Ordinary) row |= bit(n);  // ordinary base: both arcs
    out.push_back(row);
    tip_out |= bit(i);  // tip reaches every base vertex
  }
  out.push_back(tip_out);
  return OrientedGraph::from_adjacency(std::move(vs), std::move(out));
}

OrientedGraph patching(const OrientedGraph& g1, const OrientedGraph& g2,
                       const std::vector<std::string>& common) {
  // The declared overlap must exist in both graphs and induce the same
  // subgraph; the same is required of any further shared ids, because the
  // result is the plain union of the two graphs.
  if (common.empty()) throw error(error::Code::EmptySubset, "patching along the empty vertex set");
  for (const std::string& id : common)
    if (!g1.index_of(id) || !g2.index_of(id))
      throw error(error::Code::UnknownVertex, "common vertex '" + id + "' missing from a side");

  std::vector<std::string> shared;
  for (const Vertex& v : g2.vertices())
    if (g1.index_of(v.id)) shared.push_back(v.id);
  for (const std::string& id : common)
    if (std::find(shared.begin(), shared.end(), id) == shared.end())
      throw error(error::Code::IncompatibleOverlap, "internal: common id lost");  // unreachable
  if (!shared.empty()) {
    OrientedGraph s1 = induced_subgraph(g1, shared);
    OrientedGraph s2 = induced_subgraph(g2, shared);
    if (!s1.same_graph(s2))
      throw error(error::Code::IncompatibleOverlap,
                  "the shared vertices induce different subgraphs in the two sides");
  }

  std::vector<Vertex> vs = g1.vertices();
  std::vector<int> place_of_g2(g2.size());
  for (int i = 0; i < g2.size(); ++i) {
    auto at = g1.index_of(g2.vertex(i).id);
    if (at) {
      place_of_g2[i] = *at;
    } else {
      place_of_g2[i] = static_cast<int>(vs.size());
      vs.push_back(g2.vertex(i));
    }
  }
  if (static_cast<int>(vs.size()) > kVertexCap)
    throw error(error::Code::InvalidGraph, "patching exceeds the vertex cap");

  std::vector<std::uint64_t> out(vs.size(), 0);
  for (int i = 0; i < g1.size(); ++i) out[i] = g1.out_mask(i);
  for (int i = 0; i < g2.size(); ++i)
    for (std::uint64_t m = g2.out_mask(i); m; m &= m - 1)
      out[place_of_g2[i]] |= bit(place_of_g2[std::countr_zero(m)]);
  return OrientedGraph::from_adjacency(std::move(vs), std::move(out));
}

// --- Isomorphism ------------------------------------------------------------

namespace {

void check_iso_size(int n) {
  if (n > kIsoCap)
    throw error(error::Code::TooLarge,
                "isomorphism testing is capped at " + std::to_string(kIsoCap) + " vertices");
}

}  // namespace

std::optional<IsoWitness> is_isomorphic(const OrientedGraph& g1, const OrientedGraph& g2) {
  check_iso_size(std::max(g1.size(), g2.size()));
  const int n = g1.size();
  if (n != g2.size()) return std::nullopt;

  // Cheap invariants first: kind counts and arc count.
  auto specials = [](const OrientedGraph& g) {
    int c = 0;
    for (const Vertex& v : g.vertices()) c += v.kind == VertexKind::Special;
    return c;
  };
  if (specials(g1) != specials(g2) || g1.arc_count() != g2.arc_count()) return std::nullopt;

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i) {
      if (g1.vertex(i).kind != g2.vertex(perm[i]).kind) { ok = false; break; }
      for (int j = 0; j < n && ok; ++j)
        if (g1.has_arc(i, j) != g2.has_arc(perm[i], perm[j])) ok = false;
    }
    if (ok) {
      IsoWitness w;
      for (int i = 0; i < n; ++i) w.emplace_back(g1.vertex(i).id, g2.vertex(perm[i]).id);
      std::sort(w.begin(), w.end());
      return w;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

std::string canonical_form(const OrientedGraph& g) {
  check_iso_size(g.size());
  const int n = g.size();
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::string best;
  do {
    std::string key;
    key.reserve(n + n * n);
    for (int i = 0; i < n; ++i)
      key.push_back(g.vertex(perm[i]).kind == VertexKind::Special ? 's' : 'o');
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) key.push_back(g.has_arc(perm[i], perm[j]) ? '1' : '0');
    if (best.empty() || key < best) best = std::move(key);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

// --- Connectivity -----------------------------------------------------------

std::vector<std::vector<int>> components(const NaiveGraph& ng) {
  const int n = ng.size();
  std::vector<std::vector<int>> comps;
  std::uint64_t seen = 0;
  for (int s = 0; s < n; ++s) {
    if ((seen >> s) & 1u) continue;
    std::uint64_t comp = bit(s), frontier = bit(s);
    while (frontier) {
      std::uint64_t next = 0;
      for (std::uint64_t m = frontier; m; m &= m - 1) next |= ng.adj_mask(std::countr_zero(m));
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    std::vector<int> members;
    for (std::uint64_t m = comp; m; m &= m - 1) members.push_back(std::countr_zero(m));
    comps.push_back(std::move(members));
  }
  return comps;
}

bool is_connected(const NaiveGraph& ng) { return components(ng).size() == 1; }

bool is_complete(const NaiveGraph& ng) {
  for (int i = 0; i < ng.size(); ++i)
    if (ng.degree(i) != ng.size() - 1) return false;
  return true;
}

}  // namespace orraag
