// Canonical cycles of a grid diagram and their invariance transports.
//
// Every grid diagram carries two distinguished generators: the points sitting
// at the upper-right corners of the X cells (plus cycle) and at their
// lower-left corners (minus cycle).  Both are cycles for the O-powered
// X-avoiding differential, and their homology classes transform predictably
// under commutations, stabilizations and the orientation symmetries.  The
// chain-level maps realizing those transports are implemented here.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gridhfk/complex.hpp"
#include "gridhfk/grid.hpp"
#include "gridhfk/homology.hpp"
#include "gridhfk/moves.hpp"

namespace gridhfk {

// ---------------------------------------------------------------------------
// Canonical cycles.

struct CanonicalCycles {
  std::vector<int> plus_rows;   // upper-right corners of the X cells
  std::vector<int> minus_rows;  // lower-left corners of the X cells
  int maslov_plus = 0;
  int maslov_minus = 0;
  std::vector<long long> alexander2_plus;   // doubled, per component
  std::vector<long long> alexander2_minus;  // doubled, per component
  bool is_cycle_plus = false;   // O-powered X-avoiding boundary vanishes
  bool is_cycle_minus = false;
  // Values predicted by the classical invariants:
  //   A_j(plus)  = (tb_j - rot_j + 1)/2,  A_j(minus) = (tb_j + rot_j + 1)/2,
  //   M = 2*sum_j A_j + 1 - #components.
  int predicted_maslov_plus = 0;
  int predicted_maslov_minus = 0;
  std::vector<long long> predicted_alexander2_plus;
  std::vector<long long> predicted_alexander2_minus;
};

// Computes both cycles with their gradings and the cycle audit.  The
// gradings are computed from the pair-counting form; the predicted values
// come from classical_invariants.  (Their equality is a theorem; the caller
// or the test-suite asserts it.)
CanonicalCycles canonical_cycles(const GridDiagram& g);

// True when no generator maps to `rows` through a rectangle free of every
// mark: the class of `rows` then cannot cancel against anything at the next
// Maslov level without a U-power.
bool isolated(const GridDiagram& g, const std::vector<int>& rows);

// ---------------------------------------------------------------------------
// Class equality.

struct ClassesEqualResult {
  // nullopt when the two cycles sit in different bigradings (then they are
  // trivially distinct as classes and not directly comparable).
  std::optional<bool> equal;
  // When equal == true and the cycles differ as chains: a verified chain Y
  // with dY = plus + minus.
  std::vector<ChainTerm> witness;
};

ClassesEqualResult classes_equal(const GridDiagram& g, int max_u = 64,
                                 const HomologyLimits& limits = {});

// ---------------------------------------------------------------------------
// Transports.

// Chain map C(G) -> C(H) for the commutation of columns index,index+1 (kind
// CommuteCols) or rows (kind CommuteRows), counting empty X-avoiding
// pentagons against the interpolating curve of the commutation.  U-exponents
// are re-indexed to H's columns.  Throws NotACommutationPair when the move
// is illegal, ValidationError for other kinds.
//
// The curve's crossing is placed so the plus cycle maps to the plus cycle
// term for term, with no U-power.  The minus cycle maps to the minus cycle
// the same way except in one degenerate layout: walking upward from the
// left column's X, the very next mark is the right column's X one row
// above.  Both cycles' points on the middle circle then collide inside the
// commutation gap, no crossing placement serves both, and the minus image
// instead differs from the minus cycle of H by an explicit boundary (the
// homology class is still carried correctly).  For row commutations read
// the same condition on the transposed diagram.
std::vector<ChainTerm> pentagon_transport(const GridDiagram& g, MoveKind kind,
                                          int index,
                                          const std::vector<ChainTerm>& terms);

struct DestabTransportResult {
  DestabType type;
  GridDiagram destabilized;
  int component = 0;      // component (in the destabilized grid) that shrinks
  int u_power_plus = 0;   // plus class of H maps to U^u * plus class of G
  int u_power_minus = 0;
};

// Transport data for destabilizing the X-flavoured corner (col,row) of g.
// The corner patterns that reverse an X stabilization map canonical cycles
// to canonical cycles with the U-powers {NW,SE: 0/0; SW: 0/1; NE: 1/0}.
// O-flavoured corners are not supported at the canonical-cycle level (route
// them through a commutation script instead): UnsupportedType.
DestabTransportResult destabilization_transport(const GridDiagram& g, int col,
                                                int row);

struct SymmetryTransportResult {
  GridDiagram image;
  std::vector<int> mapped_plus;   // image of the plus cycle, as a generator
  std::vector<int> mapped_minus;  // image of the minus cycle
  bool plus_to_minus = false;     // mapped_plus == plus/minus cycle of image
  bool minus_to_plus = false;
  bool gradings_consistent = false;
};

// Point-wise generator correspondence for the antidiagonal reflection and
// the half turn; both exchange the plus and minus cycles and negate every
// rotation number.  Other kinds: UnsupportedType.
SymmetryTransportResult symmetry_transport(const GridDiagram& g, MoveKind kind);

// ---------------------------------------------------------------------------
// The combined report.

struct LambdaReport {
  ClassicalInvariants classical;
  CanonicalCycles cycles;
  bool isolated_plus = false;
  bool isolated_minus = false;
  std::optional<bool> equal_classes;
  std::vector<ChainTerm> witness;
  // Largest d <= requested depth with U_k^d * (plus|minus) verified nonzero
  // in homology (k = the distinguished O column of component 0).
  int nonvanishing_checked_to = 0;
  // Set when some power unexpectedly bounds (then nonvanishing_checked_to
  // stopped just below it); a theorem says this never happens.
  std::optional<int> vanished_at;
};

LambdaReport lambda_report(const GridDiagram& g, int depth = 3,
                           const HomologyLimits& limits = {});

}  // namespace gridhfk
