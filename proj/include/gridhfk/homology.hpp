// Homology over GF(2): sparse column reduction, the fully-blocked homology
// table of the mark-free differential, exact boundary-membership solving
// with certificates, and the concordance invariant tau extracted from the
// Alexander-filtered O-free complex.
#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gridhfk/complex.hpp"
#include "gridhfk/grid.hpp"

namespace gridhfk {

// ---------------------------------------------------------------------------
// Sparse GF(2) linear algebra.

struct SparseGF2Matrix {
  int rows = 0;
  // Each column is a strictly ascending list of row indices.
  std::vector<std::vector<int>> cols;
};

struct ReduceResult {
  int rank = 0;
  // pivot_col_of_row[r] = index of the reduced column whose lowest (largest)
  // row index is r, or -1.  Filled for rows seen as pivots.
  std::vector<int> pivot_col_of_row;
};

// In-place left-to-right column reduction with "low" = largest row index.
// Deterministic; the classic persistence-style reduction, also used for
// plain rank computation.
ReduceResult reduce(SparseGF2Matrix& m);

// Solves  M z = t  over GF(2).  Returns the support of one solution z
// (column indices), or nullopt when t is not in the column span.
std::optional<std::vector<int>> solve_gf2(const SparseGF2Matrix& m,
                                          const std::vector<int>& t);

// ---------------------------------------------------------------------------
// Homology table of the mark-free (tilde) differential.

struct BigradedKey {
  int maslov = 0;
  std::vector<long long> alexander2;  // doubled, per component
  bool operator<(const BigradedKey& o) const {
    if (maslov != o.maslov) return maslov < o.maslov;
    return alexander2 < o.alexander2;
  }
  bool operator==(const BigradedKey&) const = default;
};

struct BigradedTable {
  int n = 0;
  int components = 0;
  std::map<BigradedKey, long long> ranks;  // only nonzero entries
  long long total() const;
  bool operator==(const BigradedTable&) const = default;
};

struct HomologyLimits {
  int max_n = 10;               // factorial guard for generator enumeration
  long long max_bucket = 1000000;  // guard on solver basis size
};

// Ranks of the homology of the fully-blocked differential in every
// bigrading.  Deterministic; parallelizes over Alexander blocks.
BigradedTable tilde_homology_table(const GridDiagram& g,
                                   const HomologyLimits& limits = {});

// ---------------------------------------------------------------------------
// Exact boundary-membership test with certificate.

struct WitnessResult {
  bool found = false;
  // When found: a primitive chain Y with dY = target under the O-powered
  // X-avoiding differential, already verified term-by-term.
  std::vector<ChainTerm> witness;
};

// Decides exactly whether `target` (a chain in one bigrading bucket of the
// O-powered complex) is a boundary.  The candidate basis is every monomial
// U^u * h in the bucket one Maslov grading up; its U-powers are forced by
// the gradings, so a negative answer is definitive.  max_u caps the total
// U-power of a candidate (LimitExceeded beyond it, as for max_bucket).
WitnessResult bounds_witness(const GridDiagram& g, const FormalChain& target,
                             int max_u = 64,
                             const HomologyLimits& limits = {});

// ---------------------------------------------------------------------------
// tau.

struct TauResult {
  long long tau_tilde = 0;  // min Alexander birth of a never-dying class
  long long tau = 0;        // tau_tilde + n - 1
  std::vector<int> witness_rows;  // generator achieving the minimum
};

// Concordance invariant of the knot type presented by the planar diagram.
// Computed from the O-free complex (X marks allowed in rectangles, so the
// Alexander grading is a filtration), by persistence-style reduction in the
// order (Alexander asc, Maslov asc, lex).  Knots only: NotAKnot otherwise.
TauResult tau(const GridDiagram& g, const HomologyLimits& limits = {});

}  // namespace gridhfk
