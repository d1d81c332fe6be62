#include "gridhfk/legendrian.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <string>
#include <utility>

#include "gridhfk/errors.hpp"
#include "gridhfk/util.hpp"

namespace gridhfk {

// ---------------------------------------------------------------------------
// Canonical cycles.

CanonicalCycles canonical_cycles(const GridDiagram& g) {
  CanonicalCycles out;
  const int n = g.n;
  out.plus_rows.assign(n, 0);
  for (int c = 0; c < n; ++c)
    out.plus_rows[(c + 1) % n] = (g.x_rows[c] + 1) % n;
  out.minus_rows = g.x_rows;

  out.maslov_plus = maslov(g, out.plus_rows);
  out.maslov_minus = maslov(g, out.minus_rows);
  out.alexander2_plus = alexander2(g, out.plus_rows);
  out.alexander2_minus = alexander2(g, out.minus_rows);
  out.is_cycle_plus = boundary(g, out.plus_rows, Variant::Minus).empty();
  out.is_cycle_minus = boundary(g, out.minus_rows, Variant::Minus).empty();

  const ClassicalInvariants inv = classical_invariants(g);
  const int ell = inv.component_count;
  out.predicted_alexander2_plus.resize(ell);
  out.predicted_alexander2_minus.resize(ell);
  long long sum2p = 0;
  long long sum2m = 0;
  for (int j = 0; j < ell; ++j) {
    out.predicted_alexander2_plus[j] = inv.tb[j] - inv.rot[j] + 1;
    out.predicted_alexander2_minus[j] = inv.tb[j] + inv.rot[j] + 1;
    sum2p += out.predicted_alexander2_plus[j];
    sum2m += out.predicted_alexander2_minus[j];
  }
  // M = 2 * sum_j A_j + 1 - #components, and the stored A's are doubled.
  out.predicted_maslov_plus = static_cast<int>(sum2p) + 1 - ell;
  out.predicted_maslov_minus = static_cast<int>(sum2m) + 1 - ell;
  return out;
}

bool isolated(const GridDiagram& g, const std::vector<int>& rows) {
  const int n = g.n;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      std::vector<int> y = rows;
      std::swap(y[i], y[j]);
      for (const EmptyRect& er : empty_rectangles(g, y)) {
        if (er.to_rows != rows) continue;
        if (rect_mark_count(g, er.rect, /*x_marks=*/true) == 0 &&
            rect_mark_count(g, er.rect, /*x_marks=*/false) == 0)
          return false;
      }
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Class equality.

ClassesEqualResult classes_equal(const GridDiagram& g, int max_u,
                                 const HomologyLimits& limits) {
  ClassesEqualResult out;
  const CanonicalCycles cc = canonical_cycles(g);
  if (cc.plus_rows == cc.minus_rows) {
    out.equal = true;
    return out;
  }
  if (cc.maslov_plus != cc.maslov_minus ||
      cc.alexander2_plus != cc.alexander2_minus) {
    out.equal = std::nullopt;
    return out;
  }
  FormalChain target =
      make_chain(g, {ChainTerm{cc.plus_rows, {}}, ChainTerm{cc.minus_rows, {}}});
  WitnessResult wr = bounds_witness(g, target, max_u, limits);
  out.equal = wr.found;
  out.witness = std::move(wr.witness);
  return out;
}

// ---------------------------------------------------------------------------
// Pentagon transport.
//
// Commuting columns c and c+1 replaces the vertical circle between them by a
// curve that crosses it twice: once in the gap where, walking upward, the
// left column's pair of marks ends and the right column's begins, and once
// in the opposite gap.  Counting empty pentagons against that curve gives a
// chain map.  All heights below are scaled by 4 so that lattice heights
// (4r), mark heights (4r+2) and the transition crossing (odd offsets) are
// distinct exact integers mod 4n.

namespace {

struct PentagonContext {
  int n = 0;
  int c = 0;       // left column of the commutation
  int c2 = 0;      // right column, (c+1) mod n
  int bi = 0;      // vertical circle between the columns (index == c2)
  long long h_a = 0;  // scaled height of the transition crossing (G -> H)
  long long sx = 0, so = 0;    // scaled mark heights in column c
  long long tx = 0, to_ = 0;   // scaled mark heights in column c2
};

PentagonContext make_context(const GridDiagram& g, int c) {
  PentagonContext P;
  P.n = g.n;
  P.c = c;
  P.c2 = cyc(c + 1, g.n);
  P.bi = P.c2;
  P.sx = 4LL * g.x_rows[P.c] + 2;
  P.so = 4LL * g.o_rows[P.c] + 2;
  P.tx = 4LL * g.x_rows[P.c2] + 2;
  P.to_ = 4LL * g.o_rows[P.c2] + 2;

  // Locate the upward gap from the left column's marks to the right
  // column's: the left-column height whose nearest height above (among all
  // four) belongs to the right column.  Legality guarantees the four heights
  // are distinct and non-interleaved, so the gap is unique.
  const long long N4 = 4LL * g.n;
  auto up_dist = [&](long long from, long long to) {
    return ((to - from) % N4 + N4) % N4;
  };
  const long long svals[2] = {P.sx, P.so};
  const long long tvals[2] = {P.tx, P.to_};
  P.h_a = -1;
  for (long long s : svals) {
    long long best = N4 + 1;
    bool best_is_t = false;
    for (long long h : {P.sx, P.so, P.tx, P.to_}) {
      if (h == s) continue;
      const long long d = up_dist(s, h);
      if (d < best) {
        best = d;
        best_is_t = (h == tvals[0] || h == tvals[1]);
      }
    }
    if (best_is_t) {
      // The crossing may sit anywhere in the gap band without changing the
      // map on generators whose middle-circle point lies outside the band.
      // When the left column's X borders the gap, the plus cycle's point
      // sits at s + 2, inside the band: the crossing must go above it
      // (s + 3), or a pentagon into the wrong cycle is counted.  The minus
      // cycle's point can only enter the band at the top (t - 2, when the
      // right column's X borders it), which stays above the crossing except
      // in the degenerate adjacency t == s + 4 where both cycle points
      // coincide and no placement serves both; the plus cycle wins there
      // and the minus image is then off by an explicit boundary.
      P.h_a = (s == P.sx ? s + 3 : s + 1) % N4;
      break;
    }
  }
  assert(P.h_a >= 0);
  return P;
}

// Transports one monomial through the commutation, appending images to
// `out`.  Input indices follow G; output rows and U-exponents follow H
// (whose columns c and c2 hold the other diagram's marks).
void transport_term(const GridDiagram& g, const PentagonContext& P,
                    const ChainTerm& t, std::vector<ChainTerm>& out) {
  const int n = P.n;
  const long long N4 = 4LL * n;
  auto cyc4 = [&](long long v) { return ((v % N4) + N4) % N4; };
  const std::vector<int>& rows = t.rows;
  const long long r_b = 4LL * rows[P.bi];

  // Base U-exponents with the two special columns exchanged.
  std::vector<uint8_t> base_u(n, 0);
  if (!t.u_exp.empty()) {
    for (int k = 0; k < n; ++k) base_u[k] = t.u_exp[k];
    std::swap(base_u[P.c], base_u[P.c2]);
  }

  for (int d = 0; d < n; ++d) {
    if (d == P.bi) continue;
    const long long p_d = 4LL * rows[d];

    // Case R: companion circle to the right of the middle one.  The region
    // spans columns [bi, d) between heights row(bi) and row(d); its left
    // wall below the transition crossing is the straight circle, above it
    // the interpolating curve.
    const long long da = cyc4(P.h_a - r_b);
    const long long dp = cyc4(p_d - r_b);
    // Case L: companion to the left; region spans [d, bi) between heights
    // row(d) and row(bi).
    const long long de = cyc4(P.h_a - p_d);
    const long long dr = cyc4(r_b - p_d);

    const bool case_r = da < dp;
    const bool case_l = de < dr;
    if (!case_r && !case_l) continue;
    assert(!(case_r && case_l));

    const int w = case_r ? cyc(d - P.bi, n) : cyc(P.bi - d, n);
    const long long lo = case_r ? r_b : p_d;     // scaled base height
    const long long span = case_r ? dp : dr;     // scaled height extent

    // Interior generator points block the pentagon.
    bool blocked = false;
    for (int k = 0; k < n && !blocked; ++k) {
      if (k == P.bi || k == d) continue;
      const int off = case_r ? cyc(k - P.bi, n) : cyc(k - d, n);
      if (off <= 0 || off >= w) continue;
      if (cyc4(4LL * rows[k] - lo) < span) blocked = true;
    }
    if (blocked) continue;

    std::vector<uint8_t> u = base_u;
    bool has_x = false;

    // Ordinary columns: covered on the full height range of the region.
    for (int k = 0; k < n && !has_x; ++k) {
      if (k == P.c || k == P.c2) continue;
      const int off = case_r ? cyc(k - P.bi, n) : cyc(k - d, n);
      const bool inside = case_r ? (off >= 1 && off <= w - 1)
                                 : (off >= 0 && off <= w - 2);
      if (!inside) continue;
      if (cyc4(4LL * g.x_rows[k] + 2 - lo) < span) {
        has_x = true;
        break;
      }
      if (cyc4(4LL * g.o_rows[k] + 2 - lo) < span) ++u[k];
    }
    if (has_x) continue;

    // The left column's marks sit under the curve's own wall: covered
    // exactly on the height range between the transition crossing and the
    // far edge of the region.
    const long long s_span = case_r ? dp - da : dr - de;
    if (cyc4(P.sx - P.h_a) < s_span) continue;  // X mark covered
    if (cyc4(P.so - P.h_a) < s_span) ++u[P.c2];

    // The right column's marks are covered between the near edge and the
    // transition crossing.
    const long long t_span = case_r ? da : de;
    if (cyc4(P.tx - lo) < t_span) continue;
    if (cyc4(P.to_ - lo) < t_span) ++u[P.c];

    ChainTerm img;
    img.rows = rows;
    std::swap(img.rows[P.bi], img.rows[d]);
    if (std::any_of(u.begin(), u.end(), [](uint8_t v) { return v != 0; }))
      img.u_exp = std::move(u);
    out.push_back(std::move(img));
  }
}

std::vector<ChainTerm> transport_cols(const GridDiagram& g, int index,
                                      const std::vector<ChainTerm>& terms) {
  if (index < 0 || index >= g.n)
    throw ValidationError("commutation index out of range");
  if (!columns_commute(g, index))
    throw NotACommutationPair("columns " + std::to_string(index) + "," +
                              std::to_string(cyc(index + 1, g.n)) +
                              " do not commute");
  const PentagonContext P = make_context(g, index);
  std::vector<ChainTerm> out;
  for (const ChainTerm& t : terms) transport_term(g, P, t, out);
  return chain_add(std::move(out), {});
}

// Row commutations reduce to column ones on the transposed diagram.  A
// generator point on circle k at height rows[k] transposes to the point on
// circle rows[k] at height k, i.e. the inverse permutation; the U-exponent
// of a column follows its O mark.
std::vector<int> invert_perm(const std::vector<int>& p) {
  std::vector<int> q(p.size());
  for (size_t i = 0; i < p.size(); ++i) q[p[i]] = static_cast<int>(i);
  return q;
}

ChainTerm transpose_term(const ChainTerm& t, const std::vector<int>& o_cols) {
  ChainTerm out;
  out.rows = invert_perm(t.rows);
  if (!t.u_exp.empty()) {
    out.u_exp.assign(t.u_exp.size(), 0);
    for (size_t j = 0; j < t.u_exp.size(); ++j)
      out.u_exp[j] = t.u_exp[o_cols[j]];
    if (std::all_of(out.u_exp.begin(), out.u_exp.end(),
                    [](uint8_t v) { return v == 0; }))
      out.u_exp.clear();
  }
  return out;
}

}  // namespace

std::vector<ChainTerm> pentagon_transport(const GridDiagram& g, MoveKind kind,
                                          int index,
                                          const std::vector<ChainTerm>& terms) {
  if (kind == MoveKind::CommuteCols) return transport_cols(g, index, terms);
  if (kind != MoveKind::CommuteRows)
    throw ValidationError("pentagon transport applies to commutations only");
  if (index < 0 || index >= g.n)
    throw ValidationError("commutation index out of range");
  if (!rows_commute(g, index))
    throw NotACommutationPair("rows " + std::to_string(index) + "," +
                              std::to_string(cyc(index + 1, g.n)) +
                              " do not commute");
  const GridDiagram gt = transpose_grid(g);
  std::vector<ChainTerm> terms_t;
  terms_t.reserve(terms.size());
  const std::vector<int> o_cols_g = g.o_cols();
  for (const ChainTerm& t : terms) terms_t.push_back(transpose_term(t, o_cols_g));
  std::vector<ChainTerm> image_t = transport_cols(gt, index, terms_t);
  // Map back through the transpose of the commuted diagram.
  const GridDiagram h = apply_move(g, Move{MoveKind::CommuteRows, 0, index});
  const std::vector<int> o_cols_h = transpose_grid(h).o_cols();
  std::vector<ChainTerm> image;
  image.reserve(image_t.size());
  for (const ChainTerm& t : image_t) image.push_back(transpose_term(t, o_cols_h));
  return chain_add(std::move(image), {});
}

// ---------------------------------------------------------------------------
// Destabilization transport.

DestabTransportResult destabilization_transport(const GridDiagram& g, int col,
                                                int row) {
  DestabTransportResult out;
  out.type = classify_destabilization(g, col, row);
  if (out.type.mark != MarkKind::X)
    throw UnsupportedType(
        "canonical-cycle transport supports X-flavoured corners only");
  out.destabilized = apply_move(g, Move{MoveKind::Destabilize, 0, col, row});
  switch (out.type.dir) {
    case StabDir::NW:
    case StabDir::SE:
      break;
    case StabDir::SW:
      out.u_power_minus = 1;
      break;
    case StabDir::NE:
      out.u_power_plus = 1;
      break;
  }
  // The corner normalizes to positive coordinates before the block column
  // collapses into its left neighbour.
  const int col_norm = (col == 0) ? 1 : col;
  out.component =
      trace_components(out.destabilized).component_of_column[col_norm - 1];

  // Audit: the stabilized classes match the destabilized ones shifted by
  // the U-powers (Maslov drops 2 per power, total Alexander drops 1).
  const CanonicalCycles big = canonical_cycles(g);
  const CanonicalCycles small = canonical_cycles(out.destabilized);
  const long long a2p_big =
      std::accumulate(big.alexander2_plus.begin(), big.alexander2_plus.end(), 0LL);
  const long long a2m_big = std::accumulate(big.alexander2_minus.begin(),
                                            big.alexander2_minus.end(), 0LL);
  const long long a2p_small = std::accumulate(small.alexander2_plus.begin(),
                                              small.alexander2_plus.end(), 0LL);
  const long long a2m_small = std::accumulate(small.alexander2_minus.begin(),
                                              small.alexander2_minus.end(), 0LL);
  if (big.maslov_plus != small.maslov_plus - 2 * out.u_power_plus ||
      big.maslov_minus != small.maslov_minus - 2 * out.u_power_minus ||
      a2p_big != a2p_small - 2 * out.u_power_plus ||
      a2m_big != a2m_small - 2 * out.u_power_minus)
    throw DimensionMismatch("destabilization transport grading audit failed");
  return out;
}

// ---------------------------------------------------------------------------
// Symmetry transport.

SymmetryTransportResult symmetry_transport(const GridDiagram& g,
                                           MoveKind kind) {
  if (kind != MoveKind::ReflectAnti && kind != MoveKind::Rotate180)
    throw UnsupportedType(
        "class-exchanging transport supports reflect-ad and rot180 only");
  SymmetryTransportResult out;
  out.image = apply_symmetry(g, kind);
  const int n = g.n;
  const CanonicalCycles cg = canonical_cycles(g);

  auto map_point = [&](int circle, int height) {
    // (x, y) -> (n - y, n - x) for the antidiagonal reflection,
    // (x, y) -> (n - x, n - y) for the half turn; coordinates mod n.
    if (kind == MoveKind::ReflectAnti)
      return std::pair<int, int>(cyc(n - height, n), cyc(n - circle, n));
    return std::pair<int, int>(cyc(n - circle, n), cyc(n - height, n));
  };
  auto map_rows = [&](const std::vector<int>& rows) {
    std::vector<int> mapped(n, 0);
    for (int i = 0; i < n; ++i) {
      auto [ci, hi] = map_point(i, rows[i]);
      mapped[ci] = hi;
    }
    return mapped;
  };

  out.mapped_plus = map_rows(cg.plus_rows);
  out.mapped_minus = map_rows(cg.minus_rows);
  const CanonicalCycles ch = canonical_cycles(out.image);
  out.plus_to_minus = (out.mapped_plus == ch.minus_rows);
  out.minus_to_plus = (out.mapped_minus == ch.plus_rows);

  // Gradings travel with the classes; component numbering may permute, so
  // compare sorted Alexander multisets.
  auto sorted = [](std::vector<long long> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  out.gradings_consistent =
      cg.maslov_plus == ch.maslov_minus && cg.maslov_minus == ch.maslov_plus &&
      sorted(cg.alexander2_plus) == sorted(ch.alexander2_minus) &&
      sorted(cg.alexander2_minus) == sorted(ch.alexander2_plus);
  return out;
}

// ---------------------------------------------------------------------------
// The combined report.

LambdaReport lambda_report(const GridDiagram& g, int depth,
                           const HomologyLimits& limits) {
  LambdaReport out;
  out.classical = classical_invariants(g);
  out.cycles = canonical_cycles(g);
  out.isolated_plus = isolated(g, out.cycles.plus_rows);
  out.isolated_minus = isolated(g, out.cycles.minus_rows);
  ClassesEqualResult eq = classes_equal(g, 64, limits);
  out.equal_classes = eq.equal;
  out.witness = std::move(eq.witness);

  const ComponentPartition part = trace_components(g);
  const int k = part.distinguished_column[0];
  out.nonvanishing_checked_to = 0;
  for (int d = 1; d <= depth; ++d) {
    for (const std::vector<int>* rows :
         {&out.cycles.plus_rows, &out.cycles.minus_rows}) {
      ChainTerm t;
      t.rows = *rows;
      t.u_exp.assign(g.n, 0);
      t.u_exp[k] = static_cast<uint8_t>(d);
      FormalChain target = make_chain(g, {t});
      WitnessResult wr = bounds_witness(g, target, 64, limits);
      if (wr.found) {
        out.vanished_at = d;
        return out;
      }
    }
    out.nonvanishing_checked_to = d;
  }
  return out;
}

}  // namespace gridhfk
