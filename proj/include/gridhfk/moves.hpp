// Grid moves: cyclic permutations, commutations, (de)stabilizations and the
// three lattice symmetries, plus the move-script grammar used by the CLI.
//
// Script grammar, one move per ';'- or newline-separated token:
//   cyc-row K | cyc-col K | comm-col C | comm-row R |
//   stab <X|O>:<NW|NE|SW|SE> COL | destab COL ROW |
//   reflect-ad | reflect-d | rot180
#pragma once

#include <string>
#include <vector>

#include "gridhfk/grid.hpp"

namespace gridhfk {

enum class MoveKind {
  CyclicRows,    // shift all rows up by `amount` (mod n)
  CyclicCols,    // shift all columns right by `amount` (mod n)
  CommuteCols,   // swap columns index, index+1 (cyclic)
  CommuteRows,   // swap rows index, index+1 (cyclic)
  Stabilize,     // split the mark of column `index` into a 2x2 corner block
  Destabilize,   // collapse the 2x2 block around lattice corner (index,index2)
  ReflectDiag,   // reflect across x = y
  ReflectAnti,   // reflect across x = -y
  Rotate180,     // half turn
};

enum class MarkKind { X, O };
enum class StabDir { NW, NE, SW, SE };

struct Move {
  MoveKind kind = MoveKind::CyclicRows;
  int amount = 0;              // cyclic shifts
  int index = 0;               // column / row / corner column
  int index2 = 0;              // corner row (Destabilize)
  MarkKind mark = MarkKind::X; // stabilization flavour
  StabDir dir = StabDir::NW;
};

// Stabilization flavour detected at a legal destabilization corner:
// the doubled mark kind plus the blank cell's direction from the corner.
struct DestabType {
  MarkKind mark = MarkKind::X;
  StabDir dir = StabDir::NW;
};

// Parses one move token ("stab X:SW 0") or a whole script.  SyntaxError on
// malformed input.
Move parse_move(const std::string& token);
std::vector<Move> parse_move_script(const std::string& script);
std::string move_to_string(const Move& m);

// Applies one move.  Throws IllegalMove when the legality conditions fail
// (commutation with shared or interleaved mark rows, destabilization at a
// corner whose 2x2 block does not hold exactly three marks) and
// ValidationError for out-of-range indices.
GridDiagram apply_move(const GridDiagram& g, const Move& m);
GridDiagram apply_moves(const GridDiagram& g, const std::vector<Move>& script);

// The three lattice symmetries as named operations.
GridDiagram apply_symmetry(const GridDiagram& g, MoveKind kind);

// Legality probes (no mutation).
bool columns_commute(const GridDiagram& g, int col);
bool rows_commute(const GridDiagram& g, int row);

// Classifies the corner (col,row) for destabilization; throws IllegalMove if
// the block does not hold exactly three marks.
DestabType classify_destabilization(const GridDiagram& g, int col, int row);

}  // namespace gridhfk
