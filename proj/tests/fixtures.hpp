// Shared example diagrams with hand-derived classical data, used across the
// test binaries.  The expected values quoted in comments were worked out on
// paper from the front-projection conventions (vertical strands cross over
// horizontal ones in the planar diagram; fronts are read off the mirror).
#pragma once

#include "gridhfk/grid.hpp"

namespace fixtures {

// Minimal 2x2 unknot.  tb = -1, rot = 0, one up cusp, one down cusp,
// no crossings.  Canonical generators coincide: x+ = x- = {rows [1, 0]}.
inline gridhfk::GridDiagram g0() {
  return gridhfk::make_grid(2, {1, 0}, {0, 1});
}

// g0 after an X:SW stabilization at column 0: a negatively stabilized
// unknot.  tb = -2, rot = -1, three up cusps, one down cusp.
inline gridhfk::GridDiagram g0_neg() {
  return gridhfk::make_grid(3, {2, 1, 0}, {0, 2, 1});
}

// g0 after an O:SW stabilization at column 0: a positively stabilized
// unknot.  tb = -2, rot = +1, one up cusp, three down cusps.
inline gridhfk::GridDiagram g0_pos() {
  return gridhfk::make_grid(3, {2, 1, 0}, {1, 0, 2});
}

// 5x5 torus-style trefoil grid: X on the shifted diagonal, O on the
// diagonal.  Planar (vertical-over) type: left-handed trefoil, grid writhe
// -3.  Front type: right-handed trefoil with front writhe +3, two up and two
// down cusps, tb = 1, rot = 0, sl = 1 (the maximal representative).
inline gridhfk::GridDiagram trefoil() {
  return gridhfk::make_grid(5, {2, 3, 4, 0, 1}, {0, 1, 2, 3, 4});
}

// 4x4 Hopf link grid (columns {0,2} and {1,3} are the two components).
// Two grid crossings, both negative: grid writhe -2.  Per component:
// tb_i = 0, rot_i = 0, one up and one down cusp.
inline gridhfk::GridDiagram hopf() {
  return gridhfk::make_grid(4, {2, 3, 0, 1}, {0, 1, 2, 3});
}

// 4x4 split union of two 2x2 unknots (columns {0,1} and {2,3}).
// No crossings; each component: tb_i = -1, rot_i = 0.
inline gridhfk::GridDiagram split_two() {
  return gridhfk::make_grid(4, {1, 0, 3, 2}, {0, 1, 2, 3});
}

// The next two diagrams present the same knot with the same classical data
// (tb = 1, rot = 0, so M(x+/-) = 2 and doubled Alexander grading 2) but are
// distinguished by the canonical classes, exhibiting a knot that classical
// invariants cannot tell apart from itself in a second presentation.  Both
// were found by exhaustive lexicographic search over 7x7 diagrams and are the
// smallest grids with their respective properties among those whose tilde
// homology matches the common table (rank 2/3/2 in doubled Alexander gradings
// 2/0/-2 at Maslov 2/1/0, tensored with six two-step factors; total 448) and
// whose tau is -1 (front type +1, so the Bennequin bound |rot| + tb <= 2*tau
// - 1 is tight).
//
// g52_distinct: both canonical cycles are isolated (no empty mark-free
// rectangle ends on either), hence their classes differ.
inline gridhfk::GridDiagram g52_distinct() {
  return gridhfk::make_grid(7, {0, 1, 2, 5, 6, 3, 4}, {2, 3, 6, 0, 4, 5, 1});
}

// g52_equal: the generator y = {0,1,2,3,4,5,6} satisfies dy = x+ + x- in the
// minus complex with no U powers, so the canonical classes coincide.
inline gridhfk::GridDiagram g52_equal() {
  return gridhfk::make_grid(7, {0, 1, 2, 3, 4, 6, 5}, {2, 4, 6, 5, 0, 3, 1});
}

// Two-component analogue of the pair above: both 8x8 diagrams present a
// two-component link with tb_i = 1 and rot_i = 0 on each component (so
// M(x+/-) = 3 and doubled Alexander grading 2 per component), and the two
// carry identical bigraded tilde tables (total 1536), yet the canonical
// classes behave oppositely.  Found by exhaustive lexicographic search over
// translation-canonical 8x8 diagrams: link_distinct is the smallest with both
// cycles isolated, link_equal the smallest whose table matches it and whose
// classes are merged by a single generator y with dy = x+ + x-.
inline gridhfk::GridDiagram link_distinct() {
  return gridhfk::make_grid(8, {0, 1, 2, 3, 6, 7, 4, 5},
                            {3, 4, 7, 0, 2, 5, 6, 1});
}

inline gridhfk::GridDiagram link_equal() {
  return gridhfk::make_grid(8, {0, 1, 2, 3, 4, 5, 7, 6},
                            {3, 5, 7, 0, 6, 2, 4, 1});
}

}  // namespace fixtures
