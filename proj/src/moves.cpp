// Move calculus on grid diagrams.

#include "gridhfk/moves.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

#include "gridhfk/util.hpp"

namespace gridhfk {

namespace {

const char* dir_name(StabDir d) {
  switch (d) {
    case StabDir::NW: return "NW";
    case StabDir::NE: return "NE";
    case StabDir::SW: return "SW";
    case StabDir::SE: return "SE";
  }
  return "?";
}

StabDir dir_from_name(const std::string& s) {
  if (s == "NW") return StabDir::NW;
  if (s == "NE") return StabDir::NE;
  if (s == "SW") return StabDir::SW;
  if (s == "SE") return StabDir::SE;
  throw SyntaxError("unknown stabilization direction '" + s + "'");
}

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int arg_int(const std::vector<std::string>& words, std::size_t i,
            const std::string& tok) {
  if (i >= words.size())
    throw SyntaxError("move '" + tok + "' is missing an argument");
  try {
    std::size_t pos = 0;
    int v = std::stoi(words[i], &pos);
    if (pos != words[i].size()) throw std::invalid_argument("trail");
    return v;
  } catch (const std::exception&) {
    throw SyntaxError("bad integer argument in move '" + tok + "'");
  }
}

void check_count(const std::vector<std::string>& words, std::size_t expected,
                 const std::string& tok) {
  if (words.size() != expected)
    throw SyntaxError("wrong number of arguments in move '" + tok + "'");
}

}  // namespace

Move parse_move(const std::string& token) {
  const std::string tok = trim(token);
  std::vector<std::string> words;
  std::stringstream ss(tok);
  std::string w;
  while (ss >> w) words.push_back(w);
  if (words.empty()) throw SyntaxError("empty move token");
  Move m;
  const std::string& head = words[0];
  if (head == "cyc-row") {
    check_count(words, 2, tok);
    m.kind = MoveKind::CyclicRows;
    m.amount = arg_int(words, 1, tok);
  } else if (head == "cyc-col") {
    check_count(words, 2, tok);
    m.kind = MoveKind::CyclicCols;
    m.amount = arg_int(words, 1, tok);
  } else if (head == "comm-col") {
    check_count(words, 2, tok);
    m.kind = MoveKind::CommuteCols;
    m.index = arg_int(words, 1, tok);
  } else if (head == "comm-row") {
    check_count(words, 2, tok);
    m.kind = MoveKind::CommuteRows;
    m.index = arg_int(words, 1, tok);
  } else if (head == "stab") {
    check_count(words, 3, tok);
    m.kind = MoveKind::Stabilize;
    const std::string& spec = words[1];
    auto colon = spec.find(':');
    if (colon == std::string::npos)
      throw SyntaxError("stab flavour must look like X:SW in '" + tok + "'");
    const std::string mark = spec.substr(0, colon);
    if (mark == "X")
      m.mark = MarkKind::X;
    else if (mark == "O")
      m.mark = MarkKind::O;
    else
      throw SyntaxError("stab mark must be X or O in '" + tok + "'");
    m.dir = dir_from_name(spec.substr(colon + 1));
    m.index = arg_int(words, 2, tok);
  } else if (head == "destab") {
    check_count(words, 3, tok);
    m.kind = MoveKind::Destabilize;
    m.index = arg_int(words, 1, tok);
    m.index2 = arg_int(words, 2, tok);
  } else if (head == "reflect-ad") {
    check_count(words, 1, tok);
    m.kind = MoveKind::ReflectAnti;
  } else if (head == "reflect-d") {
    check_count(words, 1, tok);
    m.kind = MoveKind::ReflectDiag;
  } else if (head == "rot180") {
    check_count(words, 1, tok);
    m.kind = MoveKind::Rotate180;
  } else {
    throw SyntaxError("unknown move '" + head + "'");
  }
  return m;
}

std::vector<Move> parse_move_script(const std::string& script) {
  std::vector<Move> moves;
  std::string cur;
  auto flush = [&] {
    const std::string t = trim(cur);
    if (!t.empty()) moves.push_back(parse_move(t));
    cur.clear();
  };
  for (char ch : script) {
    if (ch == ';' || ch == '\n')
      flush();
    else
      cur += ch;
  }
  flush();
  if (moves.empty()) throw SyntaxError("empty move script");
  return moves;
}

std::string move_to_string(const Move& m) {
  switch (m.kind) {
    case MoveKind::CyclicRows: return "cyc-row " + std::to_string(m.amount);
    case MoveKind::CyclicCols: return "cyc-col " + std::to_string(m.amount);
    case MoveKind::CommuteCols: return "comm-col " + std::to_string(m.index);
    case MoveKind::CommuteRows: return "comm-row " + std::to_string(m.index);
    case MoveKind::Stabilize:
      return std::string("stab ") + (m.mark == MarkKind::X ? "X:" : "O:") +
             dir_name(m.dir) + " " + std::to_string(m.index);
    case MoveKind::Destabilize:
      return "destab " + std::to_string(m.index) + " " +
             std::to_string(m.index2);
    case MoveKind::ReflectDiag: return "reflect-d";
    case MoveKind::ReflectAnti: return "reflect-ad";
    case MoveKind::Rotate180: return "rot180";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Cyclic moves.

namespace {

GridDiagram cyclic_rows(const GridDiagram& g, int k) {
  GridDiagram out = g;
  for (int c = 0; c < g.n; ++c) {
    out.x_rows[c] = cyc(g.x_rows[c] + k, g.n);
    out.o_rows[c] = cyc(g.o_rows[c] + k, g.n);
  }
  return out;
}

GridDiagram cyclic_cols(const GridDiagram& g, int k) {
  GridDiagram out = g;
  for (int c = 0; c < g.n; ++c) {
    out.x_rows[cyc(c + k, g.n)] = g.x_rows[c];
    out.o_rows[cyc(c + k, g.n)] = g.o_rows[c];
  }
  return out;
}

// True when value m lies in the open cyclic interval (a, b) walked upward
// from a.
bool in_open_cyclic(int m, int a, int b, int n) {
  return cyc(m - a, n) != 0 && cyc(m - a, n) < cyc(b - a, n);
}

// Shared legality core: pair {a1,b1} in one line, {a2,b2} in the adjacent
// line; all four positions distinct and the pairs not cyclically interleaved.
bool pairs_commute(int a1, int b1, int a2, int b2, int n) {
  if (a1 == a2 || a1 == b2 || b1 == a2 || b1 == b2) return false;
  const bool a_in = in_open_cyclic(a2, a1, b1, n);
  const bool b_in = in_open_cyclic(b2, a1, b1, n);
  return a_in == b_in;
}

}  // namespace

bool columns_commute(const GridDiagram& g, int col) {
  const int c = cyc(col, g.n);
  const int c2 = cyc(col + 1, g.n);
  return pairs_commute(g.x_rows[c], g.o_rows[c], g.x_rows[c2], g.o_rows[c2],
                       g.n);
}

bool rows_commute(const GridDiagram& g, int row) {
  const auto xc = g.x_cols();
  const auto oc = g.o_cols();
  const int r = cyc(row, g.n);
  const int r2 = cyc(row + 1, g.n);
  return pairs_commute(xc[r], oc[r], xc[r2], oc[r2], g.n);
}

namespace {

GridDiagram commute_cols(const GridDiagram& g, int col) {
  const int c = cyc(col, g.n);
  if (!columns_commute(g, c))
    throw IllegalMove("columns " + std::to_string(c) + "," +
                      std::to_string(cyc(c + 1, g.n)) +
                      " do not commute (shared or interleaved mark rows)");
  GridDiagram out = g;
  const int c2 = cyc(c + 1, g.n);
  std::swap(out.x_rows[c], out.x_rows[c2]);
  std::swap(out.o_rows[c], out.o_rows[c2]);
  return out;
}

GridDiagram commute_rows(const GridDiagram& g, int row) {
  const int r = cyc(row, g.n);
  if (!rows_commute(g, r))
    throw IllegalMove("rows " + std::to_string(r) + "," +
                      std::to_string(cyc(r + 1, g.n)) +
                      " do not commute (shared or interleaved mark columns)");
  GridDiagram out = g;
  const int r2 = cyc(r + 1, g.n);
  for (int c = 0; c < g.n; ++c) {
    if (out.x_rows[c] == r)
      out.x_rows[c] = r2;
    else if (out.x_rows[c] == r2)
      out.x_rows[c] = r;
    if (out.o_rows[c] == r)
      out.o_rows[c] = r2;
    else if (out.o_rows[c] == r2)
      out.o_rows[c] = r;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Stabilization.
//
// The mark M of column c0 (at row r0) is replaced by a 2x2 block occupying
// new columns cL=c0, cR=c0+1 and new rows bot=r0, top=r0+1.  The block holds
// two marks of M's kind on a diagonal plus one mark of the other kind; the
// blank cell sits in the requested direction from the block's center corner.
// The column's other mark moves to cL or cR and the row's other mark to bot
// or top, the unique placements that keep every row and column of the result
// carrying exactly one X and one O.

struct StabPattern {
  // Cells within the block, as (dc, dr) offsets with dc,dr in {0,1}.
  int same1_dc, same1_dr;   // first mark of the stabilized kind
  int same2_dc, same2_dr;   // second mark of the stabilized kind
  int other_dc, other_dr;   // the single mark of the opposite kind
  int col_mate_dc;          // which split column receives the old column mate
  int row_mate_dr;          // which split row receives the old row mate
};

StabPattern stab_pattern(StabDir dir) {
  switch (dir) {
    case StabDir::NW:  // blank at (0,1)
      return {0, 0, 1, 1, 1, 0, /*col_mate*/ 0, /*row_mate*/ 1};
    case StabDir::NE:  // blank at (1,1)
      return {0, 1, 1, 0, 0, 0, /*col_mate*/ 1, /*row_mate*/ 1};
    case StabDir::SW:  // blank at (0,0)
      return {0, 1, 1, 0, 1, 1, /*col_mate*/ 0, /*row_mate*/ 0};
    case StabDir::SE:  // blank at (1,0)
      return {0, 0, 1, 1, 0, 1, /*col_mate*/ 1, /*row_mate*/ 0};
  }
  return {};
}

GridDiagram stabilize(const GridDiagram& g, const Move& m) {
  if (m.index < 0 || m.index >= g.n)
    throw ValidationError("stabilization column out of range");
  const int c0 = m.index;
  const bool stab_x = (m.mark == MarkKind::X);
  const int r0 = stab_x ? g.x_rows[c0] : g.o_rows[c0];
  const int n2 = g.n + 1;
  const StabPattern pat = stab_pattern(m.dir);

  GridDiagram out;
  out.n = n2;
  out.x_rows.assign(n2, -1);
  out.o_rows.assign(n2, -1);

  auto new_col = [&](int c) { return c <= c0 ? c : c + 1; };
  auto new_row = [&](int r) { return r <= r0 ? r : r + 1; };

  // Marks untouched by the split (every mark except the split one, the old
  // column mate and the old row mate keeps its cell, reindexed).
  const int col_mate_row = stab_x ? g.o_rows[c0] : g.x_rows[c0];
  const int row_mate_col = stab_x ? g.o_cols()[r0] : g.x_cols()[r0];
  for (int c = 0; c < g.n; ++c) {
    if (c != c0) {
      out.x_rows[new_col(c)] = new_row(g.x_rows[c]);
      out.o_rows[new_col(c)] = new_row(g.o_rows[c]);
    }
  }

  auto& same_rows = stab_x ? out.x_rows : out.o_rows;
  auto& other_rows = stab_x ? out.o_rows : out.x_rows;
  // The split column's mate and the split row's mate land per pattern; the
  // generic placement above already put the row mate at new_row(r0) = r0
  // (wrong when the pattern sends it to the top row) so overwrite both.
  same_rows[c0 + pat.same1_dc] = r0 + pat.same1_dr;
  same_rows[c0 + pat.same2_dc] = r0 + pat.same2_dr;
  other_rows[c0 + pat.other_dc] = r0 + pat.other_dr;
  other_rows[c0 + pat.col_mate_dc] = new_row(col_mate_row);
  // Row mate: it sits in some other column (already reindexed); fix its row.
  {
    const int nc = new_col(row_mate_col);
    if (stab_x)
      out.o_rows[nc] = r0 + pat.row_mate_dr;
    else
      out.x_rows[nc] = r0 + pat.row_mate_dr;
  }

  validate_grid(out);
  return out;
}

// ---------------------------------------------------------------------------
// Destabilization.

GridDiagram destabilize(const GridDiagram& g, int col, int row);

}  // namespace

DestabType classify_destabilization(const GridDiagram& g, int col, int row) {
  if (col < 0 || col >= g.n || row < 0 || row >= g.n)
    throw ValidationError("destabilization corner out of range");
  const int cl = cyc(col - 1, g.n), cr = col;
  const int rb = cyc(row - 1, g.n), rt = row;
  auto mark_at = [&](int c, int r) -> int {
    if (g.x_rows[c] == r) return 1;
    if (g.o_rows[c] == r) return 2;
    return 0;
  };
  // Block cells counterclockwise from SW: (cl,rb) (cr,rb) (cl,rt) (cr,rt).
  const int m00 = mark_at(cl, rb), m10 = mark_at(cr, rb);
  const int m01 = mark_at(cl, rt), m11 = mark_at(cr, rt);
  int marks = (m00 != 0) + (m10 != 0) + (m01 != 0) + (m11 != 0);
  if (marks != 3)
    throw IllegalMove("destabilization corner block must hold exactly three "
                      "marks, found " + std::to_string(marks));
  int xs = (m00 == 1) + (m10 == 1) + (m01 == 1) + (m11 == 1);
  DestabType t;
  t.mark = (xs == 2) ? MarkKind::X : MarkKind::O;
  if (m00 == 0) t.dir = StabDir::SW;
  else if (m10 == 0) t.dir = StabDir::SE;
  else if (m01 == 0) t.dir = StabDir::NW;
  else t.dir = StabDir::NE;
  return t;
}

namespace {

GridDiagram destabilize(const GridDiagram& g, int col, int row) {
  if (g.n <= 2) throw IllegalMove("cannot destabilize a grid of size 2");
  // Normalize a wrapping block by cyclic moves; the result then differs from
  // a direct toroidal collapse only by a cyclic relabeling, which is itself
  // a move.  This keeps the collapse arithmetic planar.
  if (col == 0) return destabilize(cyclic_cols(g, 1), 1, row);
  if (row == 0) return destabilize(cyclic_rows(g, 1), col, 1);

  classify_destabilization(g, col, row);  // throws when illegal

  const int cl = col - 1, cr = col, rb = row - 1, rt = row;
  struct Cell { int c, r; bool is_x; };
  std::vector<Cell> marks;
  marks.reserve(2 * g.n - 2);
  auto in_block = [&](int c, int r) {
    return (c == cl || c == cr) && (r == rb || r == rt);
  };
  // Keep every mark outside the block; inside, keep the doubled kind (its two
  // diagonal cells collapse to one) and drop the single opposite mark.
  const DestabType t = classify_destabilization(g, col, row);
  const bool keep_x = (t.mark == MarkKind::X);
  bool kept_double = false;
  for (int c = 0; c < g.n; ++c) {
    for (int pass = 0; pass < 2; ++pass) {
      const bool is_x = (pass == 0);
      const int r = is_x ? g.x_rows[c] : g.o_rows[c];
      if (in_block(c, r)) {
        if (is_x != keep_x) continue;         // the lone opposite mark dies
        if (kept_double) continue;            // second diagonal copy merges
        kept_double = true;
        marks.push_back({cl, rb, is_x});      // collapsed position
      } else {
        marks.push_back({c >= col ? c - 1 : c, r >= row ? r - 1 : r, is_x});
      }
    }
  }

  GridDiagram out;
  out.n = g.n - 1;
  out.x_rows.assign(out.n, -1);
  out.o_rows.assign(out.n, -1);
  for (const auto& cell : marks) {
    auto& rows = cell.is_x ? out.x_rows : out.o_rows;
    assert(rows[cell.c] == -1);
    rows[cell.c] = cell.r;
  }
  validate_grid(out);
  return out;
}

}  // namespace

GridDiagram apply_move(const GridDiagram& g, const Move& m) {
  switch (m.kind) {
    case MoveKind::CyclicRows: return cyclic_rows(g, m.amount);
    case MoveKind::CyclicCols: return cyclic_cols(g, m.amount);
    case MoveKind::CommuteCols:
      if (m.index < 0 || m.index >= g.n)
        throw ValidationError("commutation column out of range");
      return commute_cols(g, m.index);
    case MoveKind::CommuteRows:
      if (m.index < 0 || m.index >= g.n)
        throw ValidationError("commutation row out of range");
      return commute_rows(g, m.index);
    case MoveKind::Stabilize: return stabilize(g, m);
    case MoveKind::Destabilize: return destabilize(g, m.index, m.index2);
    case MoveKind::ReflectDiag:
    case MoveKind::ReflectAnti:
    case MoveKind::Rotate180: return apply_symmetry(g, m.kind);
  }
  throw ValidationError("unknown move kind");
}

GridDiagram apply_moves(const GridDiagram& g, const std::vector<Move>& script) {
  GridDiagram cur = g;
  for (const auto& m : script) cur = apply_move(cur, m);
  return cur;
}

GridDiagram apply_symmetry(const GridDiagram& g, MoveKind kind) {
  switch (kind) {
    case MoveKind::ReflectDiag: return transpose_grid(g);
    case MoveKind::ReflectAnti: return reflect_antidiagonal(g);
    case MoveKind::Rotate180: return rotate180(g);
    default:
      throw ValidationError("apply_symmetry expects a symmetry move kind");
  }
}

}  // namespace gridhfk
