// cohomology.hpp — Hilbert series of the mod-ℓ cohomology ring.
//
// The basis in degree n is the set of n-cliques of the naive projection, so
// the Hilbert polynomial is the clique polynomial.  Three independent routes
// compute it: direct clique counting (stanley_reisner_dims), the cone /
// disjoint-union recursion along a decomposition tree (et_hilbert_recursive),
// and a Mayer–Vietoris recursion along clique separators (chordal_hilbert_mv).
// The clique identification is a theorem in degrees <= 2 for every oriented
// graph and in all degrees for chordal specially oriented graphs; elsewhere
// degrees >= 3 are conjectural and callers label the output accordingly.

#pragma once

#include <vector>

#include "orraag/classify.hpp"
#include "orraag/graph.hpp"
#include "orraag/orientation.hpp"

namespace orraag {

struct HilbertPolynomial {
  std::vector<Int> coeffs;  // coeffs[k] = dimension in degree k; top = clique number
  friend bool operator==(const HilbertPolynomial&, const HilbertPolynomial&) = default;
};

// Number of k-cliques of ng for every k (degree 0 counts the empty clique).
HilbertPolynomial stanley_reisner_dims(const NaiveGraph& ng);

// Recursion over a decomposition tree: a leaf contributes 1 + t, a cone
// multiplies by 1 + t, and a disjoint union adds the children pointwise
// with the constant term pinned back to 1.
HilbertPolynomial et_hilbert_recursive(const DecompositionTree& t);

// Mayer–Vietoris along patching splits: h(g) = h(g1) + h(g2) - h(delta),
// with complete graphs contributing binomial coefficients and disconnected
// graphs combining like disjoint unions.  Requires a chordal, specially
// oriented graph (throws NotChordal / NotSpeciallyOriented); the orientation
// certifies the group-theoretic hypotheses and plays no numeric role.
HilbertPolynomial chordal_hilbert_mv(const OrientedGraph& g, const LinearOrientation& lambda);

struct PowerSeriesPrefix {
  std::vector<Int> coeffs;
  friend bool operator==(const PowerSeriesPrefix&, const PowerSeriesPrefix&) = default;
};

// First degree+1 coefficients of 1 / h(-t), the candidate quadratic-dual
// growth series: g_0 = 1, g_n = sum_{i=1..n} (-1)^{i+1} h_i g_{n-i}.
PowerSeriesPrefix quadratic_dual_series(const HilbertPolynomial& h, int degree);

}  // namespace orraag
