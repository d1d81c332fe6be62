// The combinatorial chain complex of a grid diagram: generators (one point on
// each vertical and horizontal circle), the planar pair-counting form used
// for the Maslov and Alexander gradings, empty rectangles, and the three
// differential variants.
//
// Gradings are exact: Maslov values are integers, Alexander values are
// rationals with denominator at most 2 and are stored doubled (A2 = 2*A).
// U-variables are indexed by column: U_k tracks the O mark of column k.
#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "gridhfk/grid.hpp"

namespace gridhfk {

// ---------------------------------------------------------------------------
// Generators.

struct Generator {
  // rows[c] = the row of the point on vertical circle c; a permutation.
  std::vector<int> rows;
  bool operator==(const Generator&) const = default;
  bool operator<(const Generator& o) const { return rows < o.rows; }
};

// Calls fn for every permutation of {0..n-1} in lexicographic order.
void for_each_generator(int n, const std::function<void(const std::vector<int>&)>& fn);

// Materializes the full lexicographic list.  Throws LimitExceeded when
// g.n > max_n (guards the factorial blowup).
std::vector<Generator> enumerate_generators(const GridDiagram& g, int max_n = 10);

// ---------------------------------------------------------------------------
// Pair-counting form.
//
// A weighted planar point: coordinates are stored doubled so mark centers
// (c+1/2, r+1/2) stay integral; weight is a (possibly negative) multiplicity.

struct WPoint {
  int x2 = 0;
  int y2 = 0;
  int w = 1;
};

// Doubled value of the symmetrized pair-counting form:
//   jfun2(A,B) = I(A,B) + I(B,A),
// where I counts weighted pairs (a,b) with a strictly southwest of b.
// The form itself is jfun2/2; it is bilinear in formal point differences.
long long jfun2(const std::vector<WPoint>& a, const std::vector<WPoint>& b);

// Which square fundamental domain the generator points are read in.
// LowLeft uses coordinates in [0,n)^2; HighRight maps coordinate 0 to n
// (marks are untouched, their coordinates are interior).  The gradings are
// theorems-equal across the two; both are exposed for the convention audit.
enum class Domain { LowLeft, HighRight };

// Maslov grading of a generator with respect to the O marks (the grading of
// the complex) or the X marks (used by the grading cross-checks).
int maslov(const GridDiagram& g, const std::vector<int>& rows,
           bool with_respect_to_x = false, Domain domain = Domain::LowLeft);

// Alexander multi-grading, doubled, one entry per link component (component
// numbering as in trace_components).
std::vector<long long> alexander2(const GridDiagram& g,
                                  const std::vector<int>& rows);

// Sum of the entries of alexander2 (doubled total Alexander grading).
long long alexander2_total(const GridDiagram& g, const std::vector<int>& rows);

// ---------------------------------------------------------------------------
// Rectangles.

struct Rectangle {
  int col = 0;     // vertical circle of the southwest corner
  int row = 0;     // horizontal circle of the southwest corner
  int width = 0;   // cyclic extent rightward, 1..n-1
  int height = 0;  // cyclic extent upward, 1..n-1
};

// True when the lattice point (c, r) lies strictly inside r.
bool point_in_rectangle(const Rectangle& r, int c, int row, int n);
// True when the cell (k, l) (its center) is covered by r.
bool cell_in_rectangle(const Rectangle& r, int k, int l, int n);

// Number of X (or O) marks covered by r.
int rect_mark_count(const GridDiagram& g, const Rectangle& r, bool x_marks);
// Per-column U-exponents: entry k is 1 iff the O of column k is covered.
std::vector<uint8_t> rect_o_exponents(const GridDiagram& g, const Rectangle& r);

// All rectangles from `rows` whose interior misses every generator point.
// Each connects `rows` to the generator that swaps the two corner columns.
struct EmptyRect {
  Rectangle rect;
  std::vector<int> to_rows;  // the target generator
};
std::vector<EmptyRect> empty_rectangles(const GridDiagram& g,
                                        const std::vector<int>& rows);

// ---------------------------------------------------------------------------
// Differentials.

enum class Variant { Tilde, Hat, Minus };

Variant variant_from_name(const std::string& name);  // SyntaxError on unknown
const char* variant_name(Variant v);

struct ChainTerm {
  std::vector<int> rows;
  // U-exponent per column; empty means all zero.  Only the Minus and Hat
  // variants ever populate it.
  std::vector<uint8_t> u_exp;
  bool operator==(const ChainTerm&) const = default;
  bool operator<(const ChainTerm& o) const {
    if (rows != o.rows) return rows < o.rows;
    return u_exp < o.u_exp;
  }
};

// A chain supported in a single bigrading bucket.
struct FormalChain {
  int maslov = 0;
  std::vector<long long> alexander2;  // doubled, per component
  std::vector<ChainTerm> terms;       // sorted, mod-2 reduced
};

// Differential of a single generator:
//  - Minus: empty rectangles covering no X mark; u_exp = covered O marks.
//  - Hat:   Minus terms that avoid every distinguished O (one per component,
//           in the component's lowest column).
//  - Tilde: empty rectangles covering no mark at all (u_exp left empty).
std::vector<ChainTerm> boundary(const GridDiagram& g,
                                const std::vector<int>& rows, Variant variant);

// Mod-2 sum of term lists (symmetric difference after sorting).
std::vector<ChainTerm> chain_add(std::vector<ChainTerm> a,
                                 std::vector<ChainTerm> b);

// Applies `boundary` to every term of a chain, multiplying U-exponents.
std::vector<ChainTerm> boundary_of_terms(const GridDiagram& g,
                                         const std::vector<ChainTerm>& terms,
                                         Variant variant);

// Gradings of a monomial term: Maslov drops 2 per U-power, the Alexander
// entry of O_k's component drops 1 per power of U_k.
int term_maslov(const GridDiagram& g, const ComponentPartition& part,
                const ChainTerm& t);
std::vector<long long> term_alexander2(const GridDiagram& g,
                                       const ComponentPartition& part,
                                       const ChainTerm& t);

// Wraps terms into a FormalChain, checking every term shares one bigrading.
// Throws DimensionMismatch otherwise.  An empty term list yields the bucket
// passed in `maslov`/`alexander2`.
FormalChain make_chain(const GridDiagram& g, std::vector<ChainTerm> terms);

}  // namespace gridhfk
