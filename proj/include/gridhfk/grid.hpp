// Grid diagrams on the torus: representation, validation, serialization,
// component tracing, and the classical Legendrian invariants read off the
// associated front projection.
//
// Conventions (fixed across the whole library):
//  - columns 0..n-1 left to right, rows 0..n-1 bottom to top;
//  - the mark of column c sits in the open cell [c,c+1] x [r,r+1], drawn at
//    the cell center (c+1/2, r+1/2);
//  - x_rows and o_rows are permutations of {0..n-1} with x_rows[c] != o_rows[c];
//  - the planar link diagram joins O to X horizontally in each row and X to O
//    vertically in each column, vertical strands crossing over horizontal;
//  - the front projection is the diagram tilted 45 degrees clockwise, with
//    NW/SE mark corners smoothed and NE/SW mark corners becoming cusps.  The
//    tilt turns every planar crossing into its opposite, so the front
//    presents the mirror image of the planar diagram's link type and
//    writhe_front = -writhe_grid.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridhfk/errors.hpp"

namespace gridhfk {

struct GridDiagram {
  int n = 0;
  std::vector<int> x_rows;  // column c -> row of its X mark
  std::vector<int> o_rows;  // column c -> row of its O mark

  bool operator==(const GridDiagram&) const = default;

  // Inverse lookups: row r -> column of the X (resp. O) mark in that row.
  std::vector<int> x_cols() const;
  std::vector<int> o_cols() const;
};

// Validates (n >= 2, both arrays permutations of 0..n-1, no column with
// X and O in the same cell) and returns the diagram.  Throws ValidationError.
GridDiagram make_grid(int n, std::vector<int> x_rows, std::vector<int> o_rows);
void validate_grid(const GridDiagram& g);

// Serialization.  Text: "n=4;X=0,2,1,3;O=1,3,2,0" (x_rows/o_rows per column).
// JSON: {"n":4,"x":[0,2,1,3],"o":[1,3,2,0]}.  parse_grid sniffs the format
// by the first non-space byte.  Parse failures throw SyntaxError; structural
// failures throw ValidationError.
GridDiagram parse_grid(const std::string& input);
GridDiagram parse_grid_file(const std::string& path);
std::string to_text(const GridDiagram& g);
std::string to_json(const GridDiagram& g);
// Human-oriented picture, top row first; 'X', 'O' and '.' cells.
std::string to_ascii(const GridDiagram& g);

// ---------------------------------------------------------------------------
// Link components.

struct ComponentPartition {
  int count = 0;                             // number of link components
  std::vector<int> component_of_column;      // size n
  std::vector<std::vector<int>> columns;     // per component, sorted
  std::vector<int> size;                     // columns per component (n_i)
  // Per component, the lowest-indexed column; the O mark of that column is
  // the distinguished one used by the hat-variant differential.
  std::vector<int> distinguished_column;
};

// Components are numbered by their smallest column index (component 0 owns
// column 0).  Deterministic.
ComponentPartition trace_components(const GridDiagram& g);

// ---------------------------------------------------------------------------
// Corner and crossing classification of the planar diagram.

enum class CornerSite { NW, NE, SW, SE };

struct MarkCorner {
  int col = 0;
  int row = 0;
  bool is_x = false;    // X mark or O mark
  int component = 0;
  CornerSite site = CornerSite::NW;
  bool is_cusp = false;  // true exactly for NE and SW corners
  bool cusp_up = false;  // orientation of the cusp, meaningful when is_cusp
};

// One entry per mark (2n total), X marks of columns 0..n-1 first, then O
// marks of columns 0..n-1.
std::vector<MarkCorner> classify_corners(const GridDiagram& g);

struct CrossingInfo {
  int col = 0;   // vertical strand's column (over)
  int row = 0;   // horizontal strand's row (under)
  int sign = 0;  // +1 iff the under direction, rotated 90 degrees clockwise,
                 // aligns with the over direction (right-handed crossing)
  int component_vertical = 0;
  int component_horizontal = 0;
};

std::vector<CrossingInfo> planar_crossings(const GridDiagram& g);

// ---------------------------------------------------------------------------
// Classical invariants of the front projection.

struct ClassicalInvariants {
  int component_count = 0;
  int writhe_grid = 0;
  int writhe_front = 0;           // = -writhe_grid
  std::vector<int> cusps_up;      // per component
  std::vector<int> cusps_down;    // per component
  std::vector<int> tb;            // per component (includes linking with the
                                  // other components, front convention)
  std::vector<int> rot;           // per component, (down - up)/2
  std::optional<int> sl;          // knots only: tb - rot
};

ClassicalInvariants classical_invariants(const GridDiagram& g);

// ---------------------------------------------------------------------------
// Lattice symmetries and the test-only mirror.

// Reflection across the diagonal x = y: marks (c, r) -> (r, c).
GridDiagram transpose_grid(const GridDiagram& g);
// Reflection across the antidiagonal x = -y: marks (c, r) -> (n-1-r, n-1-c).
GridDiagram reflect_antidiagonal(const GridDiagram& g);
// Half turn: marks (c, r) -> (n-1-c, n-1-r).
GridDiagram rotate180(const GridDiagram& g);
// Row flip (c, r) -> (c, n-1-r).  Presents the mirror image of the planar
// link type; not one of the symmetry moves, provided for tests and the
// mirror bookkeeping of slice-genus bounds.
GridDiagram row_flip(const GridDiagram& g);

}  // namespace gridhfk
