// Move grammar, legality rules, round trips, and the effect of each move on
// the classical invariants.
#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "gridhfk/grid.hpp"
#include "gridhfk/moves.hpp"
#include "oracles.hpp"

using namespace gridhfk;

namespace {

// 4x4 knot with two nested-interval column pairs, used as the canonical
// commutable example: column 0 holds marks in rows {0,3}, column 1 in {1,2}.
GridDiagram nested4() { return make_grid(4, {3, 1, 0, 2}, {0, 2, 3, 1}); }

std::vector<std::pair<int, int>> sorted_tb_rot(const GridDiagram& g) {
  const auto ci = classical_invariants(g);
  std::vector<std::pair<int, int>> v;
  for (size_t i = 0; i < ci.tb.size(); ++i) v.push_back({ci.tb[i], ci.rot[i]});
  std::sort(v.begin(), v.end());
  return v;
}

const std::vector<std::pair<MarkKind, StabDir>> kAllStabTypes = {
    {MarkKind::X, StabDir::NW}, {MarkKind::X, StabDir::NE},
    {MarkKind::X, StabDir::SW}, {MarkKind::X, StabDir::SE},
    {MarkKind::O, StabDir::NW}, {MarkKind::O, StabDir::NE},
    {MarkKind::O, StabDir::SW}, {MarkKind::O, StabDir::SE},
};

Move stab_move(MarkKind mark, StabDir dir, int col) {
  Move m;
  m.kind = MoveKind::Stabilize;
  m.mark = mark;
  m.dir = dir;
  m.index = col;
  return m;
}

Move destab_move(int col, int row) {
  Move m;
  m.kind = MoveKind::Destabilize;
  m.index = col;
  m.index2 = row;
  return m;
}

}  // namespace

TEST_CASE("move grammar round-trips") {
  const std::vector<std::string> tokens = {
      "cyc-row 3",    "cyc-col 1",    "comm-col 2",  "comm-row 0",
      "stab X:NW 4",  "stab X:NE 0",  "stab X:SW 1", "stab X:SE 2",
      "stab O:NW 3",  "stab O:SW 5",  "destab 2 3",  "reflect-ad",
      "reflect-d",    "rot180",
  };
  for (const auto& t : tokens) CHECK(move_to_string(parse_move(t)) == t);

  CHECK_THROWS_AS(parse_move(""), SyntaxError);
  CHECK_THROWS_AS(parse_move("frob 1"), SyntaxError);
  CHECK_THROWS_AS(parse_move("stab Y:NW 0"), SyntaxError);
  CHECK_THROWS_AS(parse_move("stab X:N 0"), SyntaxError);
  CHECK_THROWS_AS(parse_move("stab X:NW"), SyntaxError);
  CHECK_THROWS_AS(parse_move("destab 1"), SyntaxError);
  CHECK_THROWS_AS(parse_move("cyc-row"), SyntaxError);
  CHECK_THROWS_AS(parse_move("cyc-row x"), SyntaxError);
  CHECK_THROWS_AS(parse_move("rot180 1"), SyntaxError);
}

TEST_CASE("script parsing splits on semicolons and newlines") {
  const auto script = parse_move_script("cyc-row 1; comm-col 0\nstab X:SW 2");
  REQUIRE(script.size() == 3);
  CHECK(script[0].kind == MoveKind::CyclicRows);
  CHECK(script[1].kind == MoveKind::CommuteCols);
  CHECK(script[2].kind == MoveKind::Stabilize);
  CHECK_THROWS_AS(parse_move_script(""), SyntaxError);
  CHECK_THROWS_AS(parse_move_script(" ;\n; "), SyntaxError);
  CHECK_THROWS_AS(parse_move_script("cyc-row 1; nope"), SyntaxError);
}

TEST_CASE("cyclic moves translate marks and preserve everything classical") {
  std::mt19937 rng(42);
  for (int trial = 0; trial < 60; ++trial) {
    const GridDiagram g = oracle::random_grid(rng, 2 + trial % 7);
    const int n = g.n;
    Move up;
    up.kind = MoveKind::CyclicRows;
    up.amount = 1 + trial % (n == 1 ? 1 : n);
    const GridDiagram h = apply_move(g, up);
    CHECK_NOTHROW(validate_grid(h));
    for (int c = 0; c < n; ++c) {
      CHECK(h.x_rows[c] == (g.x_rows[c] + up.amount) % n);
      CHECK(h.o_rows[c] == (g.o_rows[c] + up.amount) % n);
    }
    CHECK(sorted_tb_rot(g) == sorted_tb_rot(h));

    Move right;
    right.kind = MoveKind::CyclicCols;
    right.amount = 1 + trial % n;
    const GridDiagram v = apply_move(g, right);
    CHECK_NOTHROW(validate_grid(v));
    for (int c = 0; c < n; ++c) {
      CHECK(v.x_rows[(c + right.amount) % n] == g.x_rows[c]);
      CHECK(v.o_rows[(c + right.amount) % n] == g.o_rows[c]);
    }
    CHECK(sorted_tb_rot(g) == sorted_tb_rot(v));

    // n iterations of a unit shift return the original diagram.
    GridDiagram w = g;
    Move unit;
    unit.kind = MoveKind::CyclicRows;
    unit.amount = 1;
    for (int i = 0; i < n; ++i) w = apply_move(w, unit);
    CHECK(w == g);
  }
}

TEST_CASE("commutation legality: shared and interleaved rows are rejected") {
  // In a 2x2 grid every pair of columns shares a row.
  CHECK_FALSE(columns_commute(fixtures::g0(), 0));
  CHECK_FALSE(columns_commute(fixtures::g0(), 1));
  CHECK_THROWS_AS(apply_move(fixtures::g0(), parse_move("comm-col 0")),
                  IllegalMove);

  // The torus trefoil grid has only interleaved adjacent columns and rows.
  const GridDiagram tre = fixtures::trefoil();
  for (int c = 0; c < tre.n; ++c) {
    CHECK_FALSE(columns_commute(tre, c));
    CHECK_FALSE(rows_commute(tre, c));
  }

  // Nested intervals commute.
  const GridDiagram g = nested4();
  CHECK(columns_commute(g, 0));
  CHECK(columns_commute(g, 1));

  CHECK_THROWS_AS(apply_move(g, parse_move("comm-col 7")), ValidationError);
}

TEST_CASE("commutation applies, swaps the two columns, and is an involution") {
  const GridDiagram g = nested4();
  const GridDiagram h = apply_move(g, parse_move("comm-col 0"));
  CHECK_NOTHROW(validate_grid(h));
  CHECK(h.x_rows == std::vector<int>{1, 3, 0, 2});
  CHECK(h.o_rows == std::vector<int>{2, 0, 3, 1});
  CHECK(apply_move(h, parse_move("comm-col 0")) == g);
  CHECK(sorted_tb_rot(g) == sorted_tb_rot(h));
}

TEST_CASE("no commutation is legal below grid size four") {
  // Two adjacent lines hold four marks; with n <= 3 rows the pigeonhole
  // principle forces a shared line, so every candidate is rejected.
  for (int n = 2; n <= 3; ++n) {
    oracle::for_each_grid(n, [&](const GridDiagram& g) {
      for (int i = 0; i < n; ++i) {
        CHECK_FALSE(columns_commute(g, i));
        CHECK_FALSE(rows_commute(g, i));
      }
    });
  }
}

TEST_CASE("commutations preserve classical invariants everywhere they apply") {
  std::mt19937 rng(4242);
  int applied = 0;
  for (int trial = 0; trial < 2000 && applied < 200; ++trial) {
    const GridDiagram g = oracle::random_grid(rng, 4 + trial % 5);
    for (int c = 0; c < g.n && applied < 200; ++c) {
      if (columns_commute(g, c)) {
        Move m;
        m.kind = MoveKind::CommuteCols;
        m.index = c;
        const GridDiagram h = apply_move(g, m);
        CHECK(sorted_tb_rot(g) == sorted_tb_rot(h));
        CHECK(apply_move(h, m) == g);
        ++applied;
      }
      if (rows_commute(g, c) && applied < 200) {
        Move m;
        m.kind = MoveKind::CommuteRows;
        m.index = c;
        const GridDiagram h = apply_move(g, m);
        CHECK(sorted_tb_rot(g) == sorted_tb_rot(h));
        CHECK(apply_move(h, m) == g);
        ++applied;
      }
    }
  }
  CHECK(applied == 200);
}

TEST_CASE("row commutation agrees with transposed column commutation") {
  std::mt19937 rng(991);
  for (int trial = 0; trial < 100; ++trial) {
    const GridDiagram g = oracle::random_grid(rng, 3 + trial % 6);
    for (int r = 0; r < g.n; ++r) {
      CHECK(rows_commute(g, r) == columns_commute(transpose_grid(g), r));
    }
  }
}

TEST_CASE("stabilization produces the documented block and round-trips") {
  std::mt19937 rng(77);
  for (int trial = 0; trial < 120; ++trial) {
    const GridDiagram g = oracle::random_grid(rng, 2 + trial % 6);
    const auto [mark, dir] = kAllStabTypes[trial % kAllStabTypes.size()];
    const int c0 = trial % g.n;
    const int r0 =
        (mark == MarkKind::X) ? g.x_rows[c0] : g.o_rows[c0];

    const GridDiagram h = apply_move(g, stab_move(mark, dir, c0));
    CHECK_NOTHROW(validate_grid(h));
    CHECK(h.n == g.n + 1);

    // The corner between the doubled marks classifies back to the same type.
    const auto type = classify_destabilization(h, c0 + 1, r0 + 1);
    CHECK(type.mark == mark);
    CHECK(type.dir == dir);

    // Destabilizing there restores the original diagram.
    CHECK(apply_move(h, destab_move(c0 + 1, r0 + 1)) == g);
  }
}

TEST_CASE("destabilization rejects corners without a three-mark block") {
  CHECK_THROWS_AS(apply_move(fixtures::g0(), destab_move(0, 0)), IllegalMove);
  CHECK_THROWS_AS(apply_move(fixtures::g0(), destab_move(1, 1)), IllegalMove);
  const GridDiagram tre = fixtures::trefoil();
  for (int c = 0; c < tre.n; ++c)
    for (int r = 0; r < tre.n; ++r)
      CHECK_THROWS_AS(apply_move(tre, destab_move(c, r)), IllegalMove);
  CHECK_THROWS_AS(apply_move(tre, destab_move(9, 0)), ValidationError);
}

TEST_CASE("stabilization type controls the classical invariant shift") {
  // On knots: NW and SE flavours are planar isotopies of the front; X:SW and
  // O:NE add a down-left kink (tb-1, rot-1); X:NE and O:SW add an up-left
  // kink (tb-1, rot+1).
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 160; ++trial) {
    const GridDiagram g = oracle::random_knot(rng, 2 + trial % 5);
    const auto ci = classical_invariants(g);
    const auto [mark, dir] = kAllStabTypes[trial % kAllStabTypes.size()];
    const int c0 = (trial / 7) % g.n;
    const GridDiagram h = apply_move(g, stab_move(mark, dir, c0));
    const auto cj = classical_invariants(h);
    REQUIRE(cj.component_count == 1);

    int dtb = 0, drot = 0;
    if (dir == StabDir::SW) {
      dtb = -1;
      drot = (mark == MarkKind::X) ? -1 : +1;
    } else if (dir == StabDir::NE) {
      dtb = -1;
      drot = (mark == MarkKind::X) ? +1 : -1;
    }
    CHECK(cj.tb[0] == ci.tb[0] + dtb);
    CHECK(cj.rot[0] == ci.rot[0] + drot);
  }
}

TEST_CASE("destabilization works across the torus seam") {
  std::mt19937 rng(31337);
  for (int trial = 0; trial < 80; ++trial) {
    const GridDiagram g = oracle::random_grid(rng, 2 + trial % 5);
    const auto [mark, dir] = kAllStabTypes[trial % kAllStabTypes.size()];
    const int c0 = trial % g.n;
    const int r0 = (mark == MarkKind::X) ? g.x_rows[c0] : g.o_rows[c0];
    const GridDiagram h = apply_move(g, stab_move(mark, dir, c0));

    // Translate so that the doubled block straddles the column seam, then
    // destabilize at the wrapped corner.
    const int shift = h.n - c0 - 1;  // moves the corner column to 0
    Move t;
    t.kind = MoveKind::CyclicCols;
    t.amount = shift;
    const GridDiagram hk = apply_move(h, t);
    const GridDiagram back = apply_move(hk, destab_move(0, r0 + 1));

    // The result is the original up to a cyclic column translation.
    bool matches = false;
    for (int j = 0; j < g.n && !matches; ++j) {
      Move tj;
      tj.kind = MoveKind::CyclicCols;
      tj.amount = j;
      if (apply_move(g, tj) == back) matches = true;
    }
    CHECK(matches);
  }
}

TEST_CASE("symmetry moves match the library symmetries") {
  std::mt19937 rng(8);
  for (int trial = 0; trial < 40; ++trial) {
    const GridDiagram g = oracle::random_grid(rng, 2 + trial % 6);
    CHECK(apply_move(g, parse_move("reflect-d")) == transpose_grid(g));
    CHECK(apply_move(g, parse_move("reflect-ad")) == reflect_antidiagonal(g));
    CHECK(apply_move(g, parse_move("rot180")) == rotate180(g));
    CHECK(apply_symmetry(g, MoveKind::ReflectDiag) == transpose_grid(g));
  }
}

TEST_CASE("apply_moves composes scripts left to right") {
  const GridDiagram g = fixtures::g0();
  const auto script = parse_move_script("stab X:SW 0; destab 1 2");
  CHECK(apply_moves(g, script) == g);

  const GridDiagram h = apply_moves(g, parse_move_script("stab X:SW 0"));
  CHECK(h == fixtures::g0_neg());

  const GridDiagram p = apply_moves(g, parse_move_script("stab O:SW 0"));
  CHECK(p == fixtures::g0_pos());
}
