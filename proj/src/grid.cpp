// Grid diagram core: validation, I/O, components, corners, crossings,
// classical invariants.

#include "gridhfk/grid.hpp"

#include <algorithm>
#include <cassert>
#include <fstream>
#include <sstream>

#include "gridhfk/util.hpp"
#include "json.hpp"

namespace gridhfk {

std::vector<int> GridDiagram::x_cols() const {
  std::vector<int> inv(n, -1);
  for (int c = 0; c < n; ++c) inv[x_rows[c]] = c;
  return inv;
}

std::vector<int> GridDiagram::o_cols() const {
  std::vector<int> inv(n, -1);
  for (int c = 0; c < n; ++c) inv[o_rows[c]] = c;
  return inv;
}

void validate_grid(const GridDiagram& g) {
  if (g.n < 2) throw ValidationError("grid size must be at least 2");
  if (static_cast<int>(g.x_rows.size()) != g.n ||
      static_cast<int>(g.o_rows.size()) != g.n)
    throw ValidationError("mark arrays must have length n");
  std::vector<bool> seen_x(g.n, false), seen_o(g.n, false);
  for (int c = 0; c < g.n; ++c) {
    int xr = g.x_rows[c], orow = g.o_rows[c];
    if (xr < 0 || xr >= g.n || orow < 0 || orow >= g.n)
      throw ValidationError("mark row out of range in column " +
                            std::to_string(c));
    if (seen_x[xr])
      throw ValidationError("two X marks share row " + std::to_string(xr));
    if (seen_o[orow])
      throw ValidationError("two O marks share row " + std::to_string(orow));
    seen_x[xr] = true;
    seen_o[orow] = true;
    if (xr == orow)
      throw ValidationError("X and O coincide in column " + std::to_string(c));
  }
}

GridDiagram make_grid(int n, std::vector<int> x_rows, std::vector<int> o_rows) {
  GridDiagram g{n, std::move(x_rows), std::move(o_rows)};
  validate_grid(g);
  return g;
}

// ---------------------------------------------------------------------------
// Serialization.

namespace {

std::string trim(const std::string& s) {
  auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

int parse_int(const std::string& tok, const char* what) {
  const std::string t = trim(tok);
  if (t.empty()) throw SyntaxError(std::string("empty ") + what);
  std::size_t pos = 0;
  int v = 0;
  try {
    v = std::stoi(t, &pos);
  } catch (const std::exception&) {
    throw SyntaxError(std::string("bad integer '") + t + "' for " + what);
  }
  if (pos != t.size())
    throw SyntaxError(std::string("trailing characters in integer '") + t +
                      "' for " + what);
  return v;
}

std::vector<int> parse_int_list(const std::string& body, const char* what) {
  std::vector<int> out;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(parse_int(tok, what));
  return out;
}

GridDiagram parse_grid_text(const std::string& input) {
  // Expected shape: n=<int>;X=<list>;O=<list>
  std::vector<std::string> parts;
  std::stringstream ss(trim(input));
  std::string tok;
  while (std::getline(ss, tok, ';')) {
    tok = trim(tok);
    if (!tok.empty()) parts.push_back(tok);
  }
  if (parts.size() != 3)
    throw SyntaxError("expected three ';'-separated fields n=, X=, O=");
  int n = -1;
  std::vector<int> x, o;
  bool saw_n = false, saw_x = false, saw_o = false;
  for (const auto& p : parts) {
    auto eq = p.find('=');
    if (eq == std::string::npos)
      throw SyntaxError("field without '=': '" + p + "'");
    std::string key = trim(p.substr(0, eq));
    std::string val = p.substr(eq + 1);
    if (key == "n") {
      n = parse_int(val, "n");
      saw_n = true;
    } else if (key == "X") {
      x = parse_int_list(val, "X");
      saw_x = true;
    } else if (key == "O") {
      o = parse_int_list(val, "O");
      saw_o = true;
    } else {
      throw SyntaxError("unknown field '" + key + "'");
    }
  }
  if (!saw_n || !saw_x || !saw_o)
    throw SyntaxError("missing one of the fields n=, X=, O=");
  return make_grid(n, std::move(x), std::move(o));
}

GridDiagram parse_grid_json(const std::string& input) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(input);
  } catch (const nlohmann::json::parse_error& e) {
    throw SyntaxError(std::string("JSON parse error: ") + e.what());
  }
  if (!j.is_object() || !j.contains("n") || !j.contains("x") ||
      !j.contains("o"))
    throw SyntaxError("JSON grid must be an object with keys n, x, o");
  if (!j["n"].is_number_integer() || !j["x"].is_array() || !j["o"].is_array())
    throw SyntaxError("JSON grid fields have wrong types");
  std::vector<int> x, o;
  for (const auto& v : j["x"]) {
    if (!v.is_number_integer()) throw SyntaxError("non-integer entry in x");
    x.push_back(v.get<int>());
  }
  for (const auto& v : j["o"]) {
    if (!v.is_number_integer()) throw SyntaxError("non-integer entry in o");
    o.push_back(v.get<int>());
  }
  return make_grid(j["n"].get<int>(), std::move(x), std::move(o));
}

}  // namespace

GridDiagram parse_grid(const std::string& input) {
  const std::string t = trim(input);
  if (t.empty()) throw SyntaxError("empty grid input");
  if (t.front() == '{') return parse_grid_json(t);
  return parse_grid_text(t);
}

GridDiagram parse_grid_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw SyntaxError("cannot open file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_grid(buf.str());
}

std::string to_text(const GridDiagram& g) {
  std::string s = "n=" + std::to_string(g.n) + ";X=";
  for (int c = 0; c < g.n; ++c)
    s += (c ? "," : "") + std::to_string(g.x_rows[c]);
  s += ";O=";
  for (int c = 0; c < g.n; ++c)
    s += (c ? "," : "") + std::to_string(g.o_rows[c]);
  return s;
}

std::string to_json(const GridDiagram& g) {
  nlohmann::ordered_json j;
  j["n"] = g.n;
  j["x"] = g.x_rows;
  j["o"] = g.o_rows;
  return j.dump();
}

std::string to_ascii(const GridDiagram& g) {
  std::string out;
  for (int r = g.n - 1; r >= 0; --r) {
    for (int c = 0; c < g.n; ++c) {
      char ch = '.';
      if (g.x_rows[c] == r) ch = 'X';
      if (g.o_rows[c] == r) ch = 'O';
      out += ch;
      if (c + 1 < g.n) out += ' ';
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Components.

ComponentPartition trace_components(const GridDiagram& g) {
  ComponentPartition part;
  part.component_of_column.assign(g.n, -1);
  const auto xc = g.x_cols();
  for (int start = 0; start < g.n; ++start) {
    if (part.component_of_column[start] >= 0) continue;
    const int id = part.count++;
    std::vector<int> cols;
    int c = start;
    do {
      part.component_of_column[c] = id;
      cols.push_back(c);
      // Vertical strand X->O inside column c, then the horizontal strand of
      // the O's row leads to the X in that row, i.e. to its column.
      c = xc[g.o_rows[c]];
    } while (c != start);
    std::sort(cols.begin(), cols.end());
    part.distinguished_column.push_back(cols.front());
    part.size.push_back(static_cast<int>(cols.size()));
    part.columns.push_back(std::move(cols));
  }
  return part;
}

// ---------------------------------------------------------------------------
// Corners and crossings.

namespace {

CornerSite site_from_arms(bool arm_right, bool arm_up) {
  // The two strand arms leaving a mark point either right or left
  // (horizontal arm) and up or down (vertical arm).  The corner they form
  // opens toward the arms, so the mark sits at the opposite corner of the
  // bend: arms right+up bend at a SW corner, etc.
  if (arm_right && arm_up) return CornerSite::SW;
  if (arm_right && !arm_up) return CornerSite::NW;
  if (!arm_right && arm_up) return CornerSite::SE;
  return CornerSite::NE;
}

}  // namespace

std::vector<MarkCorner> classify_corners(const GridDiagram& g) {
  const auto xc = g.x_cols();
  const auto oc = g.o_cols();
  const auto part = trace_components(g);
  std::vector<MarkCorner> out;
  out.reserve(2 * g.n);
  for (int pass = 0; pass < 2; ++pass) {
    const bool is_x = (pass == 0);
    for (int c = 0; c < g.n; ++c) {
      MarkCorner mc;
      mc.col = c;
      mc.row = is_x ? g.x_rows[c] : g.o_rows[c];
      mc.is_x = is_x;
      mc.component = part.component_of_column[c];
      // Horizontal arm points toward the other mark of this row; vertical
      // arm toward the other mark of this column.  The planar diagram never
      // wraps, so plain coordinate comparison decides the direction.
      const int other_col = is_x ? oc[mc.row] : xc[mc.row];
      const int other_row = is_x ? g.o_rows[c] : g.x_rows[c];
      const bool arm_right = other_col > c;
      const bool arm_up = other_row > mc.row;
      mc.site = site_from_arms(arm_right, arm_up);
      mc.is_cusp = (mc.site == CornerSite::NE || mc.site == CornerSite::SW);
      if (mc.is_cusp) {
        // Orientation runs O -> X horizontally and X -> O vertically.  At a
        // cusp the strand reverses horizontal direction; whether it opens up
        // or down depends on the mark type and corner:
        //   X at SW (arms right+up):  comes in leftward, leaves upward  -> up
        //   X at NE (arms left+down): comes in rightward, leaves down   -> down
        //   O at SW (arms right+up):  comes in downward, leaves right   -> down
        //   O at NE (arms left+down): comes in upward, leaves left      -> up
        if (is_x)
          mc.cusp_up = (mc.site == CornerSite::SW);
        else
          mc.cusp_up = (mc.site == CornerSite::NE);
      }
      out.push_back(mc);
    }
  }
  return out;
}

std::vector<CrossingInfo> planar_crossings(const GridDiagram& g) {
  const auto xc = g.x_cols();
  const auto oc = g.o_cols();
  const auto part = trace_components(g);
  std::vector<CrossingInfo> out;
  for (int c = 0; c < g.n; ++c) {
    const int vlo = std::min(g.x_rows[c], g.o_rows[c]);
    const int vhi = std::max(g.x_rows[c], g.o_rows[c]);
    for (int r = vlo + 1; r < vhi; ++r) {
      const int hlo = std::min(xc[r], oc[r]);
      const int hhi = std::max(xc[r], oc[r]);
      if (hlo < c && c < hhi) {
        CrossingInfo ci;
        ci.col = c;
        ci.row = r;
        // Vertical strand runs X -> O, horizontal runs O -> X.
        const int dv = (g.o_rows[c] > g.x_rows[c]) ? +1 : -1;
        const int dh = (xc[r] > oc[r]) ? +1 : -1;
        // Positive crossing: (over, under) is a positive frame, i.e.
        // det[(0,dv);(dh,0)] = -dv*dh > 0.
        ci.sign = -dv * dh;
        ci.component_vertical = part.component_of_column[c];
        ci.component_horizontal = part.component_of_column[xc[r]];
        out.push_back(ci);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Classical invariants.

ClassicalInvariants classical_invariants(const GridDiagram& g) {
  validate_grid(g);
  const auto part = trace_components(g);
  const auto corners = classify_corners(g);
  const auto crossings = planar_crossings(g);

  ClassicalInvariants inv;
  inv.component_count = part.count;
  inv.cusps_up.assign(part.count, 0);
  inv.cusps_down.assign(part.count, 0);
  inv.tb.assign(part.count, 0);
  inv.rot.assign(part.count, 0);

  for (const auto& mc : corners) {
    if (!mc.is_cusp) continue;
    if (mc.cusp_up)
      ++inv.cusps_up[mc.component];
    else
      ++inv.cusps_down[mc.component];
  }

  std::vector<int> self_grid(part.count, 0);
  std::vector<int> inter_grid(part.count, 0);
  for (const auto& ci : crossings) {
    inv.writhe_grid += ci.sign;
    if (ci.component_vertical == ci.component_horizontal) {
      self_grid[ci.component_vertical] += ci.sign;
    } else {
      inter_grid[ci.component_vertical] += ci.sign;
      inter_grid[ci.component_horizontal] += ci.sign;
    }
  }
  inv.writhe_front = -inv.writhe_grid;

  for (int i = 0; i < part.count; ++i) {
    const int cusps = inv.cusps_up[i] + inv.cusps_down[i];
    // Per component the cusp count and the signed inter-component crossing
    // sum are both even (the latter because it is twice a linking number).
    assert(cusps % 2 == 0);
    assert(inter_grid[i] % 2 == 0);
    // Front writhe / linking flip sign relative to the grid projection.
    inv.tb[i] = -self_grid[i] + (-inter_grid[i]) / 2 - cusps / 2;
    inv.rot[i] = (inv.cusps_down[i] - inv.cusps_up[i]) / 2;
  }
  if (part.count == 1) inv.sl = inv.tb[0] - inv.rot[0];
  return inv;
}

// ---------------------------------------------------------------------------
// Symmetries.

GridDiagram transpose_grid(const GridDiagram& g) {
  GridDiagram t;
  t.n = g.n;
  t.x_rows = g.x_cols();
  t.o_rows = g.o_cols();
  return t;
}

GridDiagram reflect_antidiagonal(const GridDiagram& g) {
  // Cell (c, r) -> (n-1-r, n-1-c).
  GridDiagram out;
  out.n = g.n;
  out.x_rows.assign(g.n, -1);
  out.o_rows.assign(g.n, -1);
  for (int c = 0; c < g.n; ++c) {
    out.x_rows[g.n - 1 - g.x_rows[c]] = g.n - 1 - c;
    out.o_rows[g.n - 1 - g.o_rows[c]] = g.n - 1 - c;
  }
  return out;
}

GridDiagram rotate180(const GridDiagram& g) {
  GridDiagram out;
  out.n = g.n;
  out.x_rows.assign(g.n, -1);
  out.o_rows.assign(g.n, -1);
  for (int c = 0; c < g.n; ++c) {
    out.x_rows[g.n - 1 - c] = g.n - 1 - g.x_rows[c];
    out.o_rows[g.n - 1 - c] = g.n - 1 - g.o_rows[c];
  }
  return out;
}

GridDiagram row_flip(const GridDiagram& g) {
  GridDiagram out;
  out.n = g.n;
  out.x_rows.resize(g.n);
  out.o_rows.resize(g.n);
  for (int c = 0; c < g.n; ++c) {
    out.x_rows[c] = g.n - 1 - g.x_rows[c];
    out.o_rows[c] = g.n - 1 - g.o_rows[c];
  }
  return out;
}

}  // namespace gridhfk
