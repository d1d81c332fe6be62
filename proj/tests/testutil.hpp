// Small helpers shared by the test binaries: mod-2 chain-term bookkeeping,
// permutation utilities, one-move stabilization, and the predicate for the
// single commutation layout where the minus cycle is transported only up to
// an explicit boundary.
#pragma once

#include <algorithm>
#include <cstdint>
#include <set>
#include <utility>
#include <vector>

#include "gridhfk/complex.hpp"
#include "gridhfk/grid.hpp"
#include "gridhfk/moves.hpp"

namespace testutil {

// Normalized term identity: an all-zero exponent vector and an empty one are
// the same monomial.
using TermKey = std::pair<std::vector<int>, std::vector<std::uint8_t>>;

inline TermKey term_key(const gridhfk::ChainTerm& t) {
  std::vector<std::uint8_t> u = t.u_exp;
  if (std::all_of(u.begin(), u.end(), [](std::uint8_t v) { return v == 0; }))
    u.clear();
  return {t.rows, u};
}

inline std::set<TermKey> term_set(const std::vector<gridhfk::ChainTerm>& terms) {
  std::set<TermKey> out;
  for (const auto& t : terms) {
    auto key = term_key(t);
    auto it = out.find(key);
    if (it == out.end())
      out.insert(key);
    else
      out.erase(it);  // mod-2 cancellation
  }
  return out;
}

inline gridhfk::ChainTerm plain_term(const std::vector<int>& rows) {
  gridhfk::ChainTerm t;
  t.rows = rows;
  return t;
}

inline std::vector<int> inverse_perm(const std::vector<int>& p) {
  std::vector<int> inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

inline gridhfk::GridDiagram stabilized(const gridhfk::GridDiagram& g,
                                       gridhfk::MarkKind mark,
                                       gridhfk::StabDir dir, int col) {
  gridhfk::Move m;
  m.kind = gridhfk::MoveKind::Stabilize;
  m.mark = mark;
  m.dir = dir;
  m.index = col;
  return gridhfk::apply_move(g, m);
}

// The one layout where no crossing placement preserves both cycles at chain
// level: walking upward from the left column's X, the very next mark is the
// right column's X one row above, so both cycles' middle-circle points
// collide inside the commutation gap.
inline bool degenerate_commutation_cols(const gridhfk::GridDiagram& g, int c) {
  const int n = g.n, c2 = (c + 1) % n;
  const long long N4 = 4LL * n;
  const long long sx = 4LL * g.x_rows[c] + 2, so = 4LL * g.o_rows[c] + 2;
  const long long tx = 4LL * g.x_rows[c2] + 2, to2 = 4LL * g.o_rows[c2] + 2;
  auto up = [&](long long a, long long b) { return ((b - a) % N4 + N4) % N4; };
  for (long long s : {sx, so}) {
    long long best = N4 + 1, arg = -1;
    for (long long h : {sx, so, tx, to2}) {
      if (h == s) continue;
      if (up(s, h) < best) {
        best = up(s, h);
        arg = h;
      }
    }
    if (arg == tx || arg == to2) return s == sx && arg == tx && best == 4;
  }
  return false;
}

inline bool degenerate_commutation(const gridhfk::GridDiagram& g,
                                   gridhfk::MoveKind kind, int index) {
  return kind == gridhfk::MoveKind::CommuteCols
             ? degenerate_commutation_cols(g, index)
             : degenerate_commutation_cols(gridhfk::transpose_grid(g), index);
}

}  // namespace testutil
