// group_model.cpp — presentations, abelianization, classification report.

#include "orraag/group_model.hpp"

#include <algorithm>
#include <bit>
#include <tuple>

#include "orraag/chordal.hpp"

namespace orraag {

Presentation presentation(const OrientedGraph& g, const LinearOrientation& lambda) {
  Presentation p;
  for (const Vertex& v : g.vertices())
    p.generators.push_back({v.id, v.kind == VertexKind::Special ? lambda.c() : Int(1)});

  // One relator per adjacent pair, walked in sorted id-pair order.
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < g.size(); ++i)
    for (int j = i + 1; j < g.size(); ++j)
      if (g.adjacent(i, j)) pairs.emplace_back(i, j);
  std::sort(pairs.begin(), pairs.end(), [&g](auto x, auto y) {
    auto key = [&g](std::pair<int, int> p) {
      std::pair<std::string, std::string> ids{g.vertex(p.first).id, g.vertex(p.second).id};
      if (ids.second < ids.first) std::swap(ids.first, ids.second);
      return ids;
    };
    return key(x) < key(y);
  });

  for (auto [i, j] : pairs) {
    if (g.has_arc(i, j) && g.has_arc(j, i)) {
      std::string a = g.vertex(i).id, b = g.vertex(j).id;
      if (b < a) std::swap(a, b);
      p.relators.push_back({Presentation::Relator::Kind::Commute, a, b, 0});
    } else {
      // Special edge (origin, terminus): the terminus conjugates the origin.
      const int origin = g.has_arc(i, j) ? i : j;
      const int terminus = origin == i ? j : i;
      p.relators.push_back({Presentation::Relator::Kind::Conjugate, g.vertex(terminus).id,
                            g.vertex(origin).id, lambda.c()});
    }
  }
  return p;
}

LabelledGraph to_labelled_graph(const OrientedGraph& g, const LinearOrientation& lambda) {
  LabelledGraph lg;
  for (const Vertex& v : g.vertices()) lg.vertices.push_back(v.id);
  for (int i = 0; i < g.size(); ++i)
    for (int j = 0; j < g.size(); ++j) {
      if (!g.has_arc(i, j)) continue;
      if (g.has_arc(j, i)) {
        if (i < j) {
          std::string a = g.vertex(i).id, b = g.vertex(j).id;
          if (b < a) std::swap(a, b);
          lg.arcs.push_back({a, b, 0, 0});
        }
      } else {
        lg.arcs.push_back({g.vertex(i).id, g.vertex(j).id, lambda.c() - 1, 0});
      }
    }
  std::sort(lg.arcs.begin(), lg.arcs.end(), [](const auto& x, const auto& y) {
    return std::tie(x.from, x.to) < std::tie(y.from, y.to);
  });
  return lg;
}

AbelianInvariants abelianization_formula(const OrientedGraph& g, const LinearOrientation& lambda) {
  int origins = 0;
  for (int i = 0; i < g.size(); ++i) {
    bool originates_special = false;
    for (int j = 0; j < g.size() && !originates_special; ++j)
      originates_special = g.special_arc(i, j);
    origins += originates_special;
  }
  AbelianInvariants inv;
  inv.free_rank = g.size() - origins;
  inv.torsion_exponents.assign(origins, lambda.depth());
  return inv;
}

AbelianInvariants abelianization_oracle(const Presentation& p, const LinearOrientation& lambda) {
  const int n = static_cast<int>(p.generators.size());
  auto col_of = [&p](const std::string& id) {
    for (int j = 0; j < static_cast<int>(p.generators.size()); ++j)
      if (p.generators[j].id == id) return j;
    throw error(error::Code::UnknownVertex, "relator mentions unknown generator '" + id + "'");
  };

  // Exponent-sum rows.  Commutators abelianize to nothing; a conjugation
  // relator a b a^{-1} b^{-c} leaves (1 - c) on the b column, recorded up to
  // sign as c - 1.
  std::vector<std::vector<Int>> rows;
  for (const Presentation::Relator& r : p.relators) {
    if (r.kind != Presentation::Relator::Kind::Conjugate) continue;
    std::vector<Int> row(n, 0);
    row[col_of(r.b)] = r.exponent - 1;
    rows.push_back(std::move(row));
  }

  // Smith-style elimination over the ℓ-local integers: pick the entry of
  // minimal valuation as pivot, clear its row and column with exact integer
  // operations (rows only ever get scaled by ℓ-units), and read the
  // invariant factors off the pivot valuations.
  const long ell = lambda.ell();
  const int N = lambda.precision();
  std::vector<char> row_done(rows.size(), 0), col_done(n, 0);
  std::vector<int> pivot_valuations;

  for (;;) {
    int pr = -1, pc = -1, pv = kValuationInfinity;
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (row_done[r]) continue;
      for (int c = 0; c < n; ++c) {
        if (col_done[c] || rows[r][c] == 0) continue;
        int v = valuation(rows[r][c], ell);
        if (v < pv) { pv = v; pr = r; pc = c; }
      }
    }
    if (pr < 0) break;
    pivot_valuations.push_back(pv);

    const Int pivot_unit = rows[pr][pc] / pow_int(ell, pv);  // an ℓ-unit
    for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
      if (r == pr || row_done[r] || rows[r][pc] == 0) continue;
      const Int q = rows[r][pc] / pow_int(ell, pv);  // integral: v(entry) >= pv
      for (int c = 0; c < n; ++c)
        if (!col_done[c]) rows[r][c] = pivot_unit * rows[r][c] - q * rows[pr][c];
    }
    for (int c = 0; c < n; ++c) {
      if (c == pc || col_done[c] || rows[pr][c] == 0) continue;
      const Int q = rows[pr][c] / pow_int(ell, pv);
      for (int r = 0; r < static_cast<int>(rows.size()); ++r)
        if (!row_done[r]) rows[r][c] = pivot_unit * rows[r][c] - q * rows[r][pc];
    }
    row_done[pr] = 1;
    col_done[pc] = 1;
  }

  AbelianInvariants inv;
  int pivoted_cols = 0;
  for (int v : pivot_valuations) {
    ++pivoted_cols;
    if (v == 0) continue;                       // the generator dies outright
    if (v < N) inv.torsion_exponents.push_back(v);
    else inv.precision_limited = true;          // looks free at precision ℓ^N
  }
  inv.free_rank = n - pivoted_cols +
                  static_cast<int>(std::count_if(pivot_valuations.begin(), pivot_valuations.end(),
                                                 [N](int v) { return v >= N; }));
  std::sort(inv.torsion_exponents.begin(), inv.torsion_exponents.end());
  return inv;
}

LocallyUniformQuotientData locally_uniform_quotient(const OrientedGraph& g,
                                                    const LinearOrientation& lambda) {
  if (!is_specially_oriented(g).specially_oriented)
    throw error(error::Code::NotSpeciallyOriented,
                "the locally uniform quotient needs a specially oriented graph");
  LocallyUniformQuotientData d;
  for (const Vertex& v : g.vertices()) d.acts = d.acts || v.kind == VertexKind::Special;
  d.abelian_rank = d.acts ? g.size() - 1 : g.size();
  d.action_unit = lambda.c();
  d.depth = lambda.depth();
  return d;
}

// --- Classification report ----------------------------------------------------

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    case Verdict::Unknown: return "unknown";
  }
  return "?";
}

namespace {

VerdictEntry entry(Verdict v, std::string citation,
                   std::optional<ForbiddenWitness> witness = std::nullopt) {
  return {v, std::move(citation), std::move(witness)};
}

Verdict from_bool(bool b) { return b ? Verdict::Yes : Verdict::No; }

}  // namespace

ClassificationReport classification_report(const OrientedGraph& g,
                                           const LinearOrientation& lambda) {
  (void)lambda;  // the orientation's invariants certify the theorem hypotheses
  const NaiveGraph ng = naive_projection(g);
  const SpecialOrientationResult so = is_specially_oriented(g);
  const ChordalityResult ch = is_chordal(ng);
  const EtCheckResult et = is_elementary_type_forbidden(g);
  const bool triangle_free = !has_triangle(ng);
  const bool chordal_so = ch.chordal && so.specially_oriented;

  // A non-chordal verdict gets a witness only when the cycle is a 4-cycle,
  // the one chordality obstruction among the four witness patterns.
  std::optional<ForbiddenWitness> chordal_witness;
  if (!ch.chordal && ch.witness_cycle.size() == 4) {
    ForbiddenWitness w;
    w.kind = ForbiddenWitness::Kind::InducedC4;
    w.vertices = ch.witness_cycle;
    std::sort(w.vertices.begin(), w.vertices.end());
    std::uint64_t sub = 0;
    for (const std::string& id : w.vertices) sub |= std::uint64_t{1} << *g.index_of(id);
    for (int i = 0; i < g.size(); ++i) {
      if (!((sub >> i) & 1u)) continue;
      for (int j = 0; j < g.size(); ++j)
        if (((sub >> j) & 1u) && g.has_arc(i, j))
          w.arcs.push_back({g.vertex(i).id, g.vertex(j).id});
    }
    std::sort(w.arcs.begin(), w.arcs.end());
    chordal_witness = std::move(w);
  }

  const bool lambda_s_witness =
      et.witness && et.witness->kind == ForbiddenWitness::Kind::InducedLambdaS;

  ClassificationReport r;
  r.valid = entry(Verdict::Yes, "§2.2");
  r.specially_oriented = entry(from_bool(so.specially_oriented), "§2.3", so.witness);
  r.chordal = entry(from_bool(ch.chordal), "Def. 2.12", chordal_witness);
  r.elementary_type = entry(from_bool(et.elementary_type), "§2.4", et.witness);

  r.kummerian = entry(from_bool(so.specially_oriented), "Thm. 4.6", so.witness);

  const bool lu = so.specially_oriented && is_complete(ng);
  r.locally_uniform = entry(from_bool(lu), "Cor. 4.10",
                            so.specially_oriented ? std::nullopt : so.witness);

  r.bloch_kato = entry(from_bool(et.elementary_type),
                       lambda_s_witness ? "Thm. 1.1(ii); Prop. 6.1" : "Thm. 1.1(ii)", et.witness);
  r.one_cyclotomic =
      entry(from_bool(et.elementary_type),
            lambda_s_witness ? "Thm. 1.1(iii); Prop. 6.5" : "Thm. 1.1(iii)", et.witness);
  r.galois_realizable = entry(from_bool(et.elementary_type), "Thm. 1.1(i)", et.witness);
  r.subgroups_are_orRAAGs = entry(from_bool(et.elementary_type), "Thm. 1.1(v)", et.witness);

  if (chordal_so)
    r.bogomolov_positselski = entry(Verdict::Yes, "Thm. 1.3(i)");
  else if (!so.specially_oriented)
    r.bogomolov_positselski = entry(Verdict::No, "§7.4 (Kummerian prerequisite, Thm. 4.6)",
                                    so.witness);
  else
    r.bogomolov_positselski = entry(Verdict::Unknown, "§1 (speculation)");

  r.coherent_fp_infinity = chordal_so ? entry(Verdict::Yes, "Thm. 1.3(ii)")
                                      : entry(Verdict::Unknown, "§1 (speculation)");

  if (chordal_so)
    r.cohomology_quadratic = entry(Verdict::Yes, "Thm. 1.3(iii)");
  else if (triangle_free)
    r.cohomology_quadratic = entry(Verdict::Yes, "§4.6 (triangle-free)");
  else
    r.cohomology_quadratic = entry(Verdict::Unknown, "Question 1.4");

  return r;
}

ClassificationReport report_for_invalid() {
  ClassificationReport r;
  r.valid = entry(Verdict::No, "§2.2");
  for (VerdictEntry* e :
       {&r.specially_oriented, &r.chordal, &r.elementary_type, &r.kummerian, &r.locally_uniform,
        &r.bloch_kato, &r.one_cyclotomic, &r.galois_realizable, &r.subgroups_are_orRAAGs,
        &r.bogomolov_positselski, &r.coherent_fp_infinity, &r.cohomology_quadratic})
    *e = entry(Verdict::Unknown, "§2.2 (invalid input)");
  return r;
}

}  // namespace orraag
