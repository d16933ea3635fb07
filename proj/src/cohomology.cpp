// cohomology.cpp — Hilbert series of the cohomology ring, three ways.

#include "orraag/cohomology.hpp"

#include <algorithm>
#include <bit>

#include "orraag/chordal.hpp"

namespace orraag {

namespace {

std::uint64_t bit(int i) { return std::uint64_t{1} << i; }

Int binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  Int r = 1;
  for (int i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

void trim(std::vector<Int>& coeffs) {
  while (coeffs.size() > 1 && coeffs.back() == 0) coeffs.pop_back();
}

// Count cliques extending the current partial clique (of size depth) by
// vertices drawn from cand, in ascending index order.  When cand is itself
// a clique every subset extends, which the binomial shortcut absorbs —
// without it dense graphs would take exponential time.
void count_cliques(const NaiveGraph& ng, std::uint64_t cand, int depth, std::vector<Int>& cnt) {
  if (static_cast<int>(cnt.size()) <= depth) cnt.resize(depth + 1, 0);
  cnt[depth] += 1;
  if (!cand) return;

  bool cand_clique = true;
  for (std::uint64_t m = cand; m && cand_clique; m &= m - 1) {
    int v = std::countr_zero(m);
    cand_clique = (cand & ~bit(v) & ~ng.adj_mask(v)) == 0;
  }
  if (cand_clique) {
    const int c = std::popcount(cand);
    if (static_cast<int>(cnt.size()) <= depth + c) cnt.resize(depth + c + 1, 0);
    for (int k = 1; k <= c; ++k) cnt[depth + k] += binomial(c, k);
    return;
  }

  std::uint64_t rest = cand;
  for (std::uint64_t m = cand; m; m &= m - 1) {
    int v = std::countr_zero(m);
    rest &= ~bit(v);
    count_cliques(ng, ng.adj_mask(v) & rest, depth + 1, cnt);
  }
}

HilbertPolynomial binomial_row(int n) {
  HilbertPolynomial h;
  for (int k = 0; k <= n; ++k) h.coeffs.push_back(binomial(n, k));
  return h;
}

// Pointwise sum with the constant term pinned back to 1 (disjoint union /
// free product rule).
HilbertPolynomial combine_disjoint(const std::vector<HilbertPolynomial>& parts) {
  HilbertPolynomial h;
  for (const HilbertPolynomial& p : parts) {
    if (p.coeffs.size() > h.coeffs.size()) h.coeffs.resize(p.coeffs.size(), 0);
    for (std::size_t k = 0; k < p.coeffs.size(); ++k) h.coeffs[k] += p.coeffs[k];
  }
  h.coeffs[0] = 1;
  return h;
}

}  // namespace

HilbertPolynomial stanley_reisner_dims(const NaiveGraph& ng) {
  HilbertPolynomial h;
  const std::uint64_t all = (ng.size() == 64) ? ~std::uint64_t{0} : (bit(ng.size()) - 1);
  count_cliques(ng, all, 0, h.coeffs);
  trim(h.coeffs);
  return h;
}

HilbertPolynomial et_hilbert_recursive(const DecompositionTree& t) {
  if (const auto* leaf = std::get_if<DecompositionTree::Leaf>(&t.node)) {
    (void)leaf;
    return HilbertPolynomial{{1, 1}};
  }
  if (const auto* cn = std::get_if<DecompositionTree::Cone>(&t.node)) {
    HilbertPolynomial h = et_hilbert_recursive(*cn->child);
    HilbertPolynomial out;
    out.coeffs.assign(h.coeffs.size() + 1, 0);
    for (std::size_t k = 0; k < h.coeffs.size(); ++k) {
      out.coeffs[k] += h.coeffs[k];
      out.coeffs[k + 1] += h.coeffs[k];
    }
    return out;
  }
  const auto& dis = std::get<DecompositionTree::Disjoint>(t.node);
  std::vector<HilbertPolynomial> parts;
  for (const DecompositionTree& child : dis.children) parts.push_back(et_hilbert_recursive(child));
  return combine_disjoint(parts);
}

namespace {

HilbertPolynomial mv_rec(const OrientedGraph& g) {
  const NaiveGraph ng = naive_projection(g);
  std::vector<std::vector<int>> comps = components(ng);
  if (comps.size() > 1) {
    std::vector<HilbertPolynomial> parts;
    for (const std::vector<int>& comp : comps) {
      std::vector<std::string> ids;
      for (int i : comp) ids.push_back(g.vertex(i).id);
      parts.push_back(mv_rec(induced_subgraph(g, ids)));
    }
    return combine_disjoint(parts);
  }
  if (is_complete(ng)) return binomial_row(ng.size());

  PatchingSplit split = patching_split(g);
  HilbertPolynomial h1 = mv_rec(split.g1);
  HilbertPolynomial h2 = mv_rec(split.g2);
  HilbertPolynomial hd = binomial_row(static_cast<int>(split.delta.size()));

  HilbertPolynomial h;
  h.coeffs.assign(std::max(h1.coeffs.size(), h2.coeffs.size()), 0);
  for (std::size_t k = 0; k < h.coeffs.size(); ++k) {
    if (k < h1.coeffs.size()) h.coeffs[k] += h1.coeffs[k];
    if (k < h2.coeffs.size()) h.coeffs[k] += h2.coeffs[k];
    if (k < hd.coeffs.size()) h.coeffs[k] -= hd.coeffs[k];
  }
  trim(h.coeffs);
  return h;
}

}  // namespace

HilbertPolynomial chordal_hilbert_mv(const OrientedGraph& g, const LinearOrientation&) {
  if (!is_specially_oriented(g).specially_oriented)
    throw error(error::Code::NotSpeciallyOriented,
                "the Mayer-Vietoris route needs a specially oriented graph");
  if (!is_chordal(naive_projection(g)).chordal)
    throw error(error::Code::NotChordal, "the Mayer-Vietoris route needs a chordal graph");
  return mv_rec(g);
}

PowerSeriesPrefix quadratic_dual_series(const HilbertPolynomial& h, int degree) {
  if (h.coeffs.empty() || h.coeffs[0] != 1)
    throw error(error::Code::InvalidGraph, "Hilbert series must have constant term 1");
  PowerSeriesPrefix g;
  g.coeffs.assign(degree + 1, 0);
  g.coeffs[0] = 1;
  for (int n = 1; n <= degree; ++n) {
    Int acc = 0;
    for (int i = 1; i <= n && i < static_cast<int>(h.coeffs.size()); ++i) {
      const Int term = h.coeffs[i] * g.coeffs[n - i];
      if (i % 2 == 1)
        acc += term;
      else
        acc -= term;
    }
    g.coeffs[n] = acc;
  }
  return g;
}

}  // namespace orraag
