// Gradings, rectangles, and differentials, cross-checked against the naive
// oracle implementations.
#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <tuple>
#include <vector>

#include "doctest.h"
#include "fixtures.hpp"
#include "gridhfk/complex.hpp"
#include "gridhfk/grid.hpp"
#include "oracles.hpp"

using namespace gridhfk;

namespace {

// Canonical generators, computed inline from their defining corners:
// x+ takes the northeast corner of every X cell, x- the southwest corner.
std::vector<int> plus_rows(const GridDiagram& g) {
  std::vector<int> rows(g.n);
  for (int c = 0; c < g.n; ++c)
    rows[(c + 1) % g.n] = (g.x_rows[c] + 1) % g.n;
  return rows;
}

std::vector<int> minus_rows(const GridDiagram& g) { return g.x_rows; }

std::set<std::tuple<int, int, int, int, std::vector<int>>> rect_set(
    const std::vector<EmptyRect>& v) {
  std::set<std::tuple<int, int, int, int, std::vector<int>>> s;
  for (const auto& e : v)
    s.insert({e.rect.col, e.rect.row, e.rect.width, e.rect.height, e.to_rows});
  return s;
}

std::set<std::tuple<int, int, int, int, std::vector<int>>> rect_set(
    const std::vector<oracle::ORect>& v) {
  std::set<std::tuple<int, int, int, int, std::vector<int>>> s;
  for (const auto& e : v) s.insert({e.col, e.row, e.width, e.height, e.to});
  return s;
}

oracle::Flavor flavor_of(Variant v) {
  switch (v) {
    case Variant::Tilde: return oracle::Flavor::Tilde;
    case Variant::Hat: return oracle::Flavor::Hat;
    default: return oracle::Flavor::Minus;
  }
}

std::vector<ChainTerm> oracle_boundary(const GridDiagram& g,
                                       const std::vector<int>& rows,
                                       Variant v) {
  return oracle::boundary(g, rows, flavor_of(v),
                          trace_components(g).distinguished_column);
}

}  // namespace

TEST_CASE("generator enumeration is lexicographic and guarded") {
  const GridDiagram g = fixtures::hopf();
  const auto gens = enumerate_generators(g);
  CHECK(gens.size() == 24);
  CHECK(std::is_sorted(gens.begin(), gens.end()));
  CHECK(gens.front().rows == std::vector<int>{0, 1, 2, 3});
  CHECK(gens.back().rows == std::vector<int>{3, 2, 1, 0});

  int count = 0;
  for_each_generator(3, [&](const std::vector<int>&) { ++count; });
  CHECK(count == 6);

  CHECK_THROWS_AS(enumerate_generators(fixtures::trefoil(), 4), LimitExceeded);
}

TEST_CASE("variant names round-trip") {
  CHECK(variant_from_name("tilde") == Variant::Tilde);
  CHECK(variant_from_name("hat") == Variant::Hat);
  CHECK(variant_from_name("minus") == Variant::Minus);
  CHECK(variant_name(Variant::Tilde) == std::string("tilde"));
  CHECK(variant_name(Variant::Hat) == std::string("hat"));
  CHECK(variant_name(Variant::Minus) == std::string("minus"));
  CHECK_THROWS_AS(variant_from_name("plus"), SyntaxError);
}

TEST_CASE("maslov agrees with the oracle, exhaustively for small grids") {
  for (int n = 2; n <= 4; ++n) {
    oracle::for_each_grid(n, [&](const GridDiagram& g) {
      oracle::for_each_permutation(n, [&](const std::vector<int>& rows) {
        CHECK(maslov(g, rows) == oracle::maslov(g, rows, false));
        CHECK(maslov(g, rows, true) == oracle::maslov(g, rows, true));
      });
    });
  }
}

TEST_CASE("maslov agrees with the oracle on random generators") {
  std::mt19937 rng(1001);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 5 + trial % 4;  // 5..8
    const GridDiagram g = oracle::random_grid(rng, n);
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(maslov(g, rows) == oracle::maslov(g, rows, false));
    CHECK(maslov(g, rows, true) == oracle::maslov(g, rows, true));
  }
}

TEST_CASE("the two fundamental domains give the same gradings") {
  std::mt19937 rng(1002);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 7;
    const GridDiagram g = oracle::random_grid(rng, n);
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(maslov(g, rows, false, Domain::LowLeft) ==
          maslov(g, rows, false, Domain::HighRight));
    CHECK(maslov(g, rows, true, Domain::LowLeft) ==
          maslov(g, rows, true, Domain::HighRight));
  }
}

TEST_CASE("alexander agrees with the oracle, exhaustively for small grids") {
  for (int n = 2; n <= 4; ++n) {
    oracle::for_each_grid(n, [&](const GridDiagram& g) {
      oracle::for_each_permutation(n, [&](const std::vector<int>& rows) {
        CHECK(alexander2(g, rows) == oracle::alexander2(g, rows));
      });
    });
  }
}

TEST_CASE("alexander agrees with the oracle on random generators") {
  std::mt19937 rng(1003);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 5 + trial % 4;
    const GridDiagram g = oracle::random_grid(rng, n);
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(alexander2(g, rows) == oracle::alexander2(g, rows));
    CHECK(alexander2_total(g, rows) == oracle::alexander2_total(g, rows));
  }
}

TEST_CASE("total alexander equals the Maslov difference formula") {
  // 2*A_total = M_O(x) - M_X(x) - (n - ell) with ell the component count,
  // doubled on both sides.
  std::mt19937 rng(1004);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + trial % 7;
    const GridDiagram g = oracle::random_grid(rng, n);
    const int ell = trace_components(g).count;
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    const long long lhs = alexander2_total(g, rows);
    const long long rhs =
        maslov(g, rows, false) - maslov(g, rows, true) - (n - ell);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("alexander gradings of knots are integers (even doubled values)") {
  std::mt19937 rng(1005);
  for (int trial = 0; trial < 200; ++trial) {
    const GridDiagram g = oracle::random_knot(rng, 3 + trial % 5);
    std::vector<int> rows(g.n);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    const auto a = alexander2(g, rows);
    REQUIRE(a.size() == 1);
    CHECK(a[0] % 2 == 0);
  }
}

TEST_CASE("x+ has Maslov -n+1 with respect to the X marks") {
  std::mt19937 rng(1006);
  for (int trial = 0; trial < 200; ++trial) {
    const GridDiagram g = oracle::random_grid(rng, 2 + trial % 7);
    CHECK(maslov(g, plus_rows(g), true) == -g.n + 1);
  }
}

TEST_CASE("rectangle primitives") {
  const int n = 5;
  Rectangle r;
  r.col = 3;
  r.row = 4;
  r.width = 3;
  r.height = 2;
  // Interior lattice points: columns 4,0 (cyclic), rows 0 (cyclic).
  CHECK(point_in_rectangle(r, 4, 0, n));
  CHECK(point_in_rectangle(r, 0, 0, n));
  CHECK_FALSE(point_in_rectangle(r, 3, 0, n));   // on the left edge
  CHECK_FALSE(point_in_rectangle(r, 1, 0, n));   // right corner column
  CHECK_FALSE(point_in_rectangle(r, 4, 4, n));   // on the bottom edge
  CHECK_FALSE(point_in_rectangle(r, 4, 1, n));   // above the top edge
  // Covered cells: columns 3,4,0 x rows 4,0.
  CHECK(cell_in_rectangle(r, 3, 4, n));
  CHECK(cell_in_rectangle(r, 0, 0, n));
  CHECK_FALSE(cell_in_rectangle(r, 1, 4, n));
  CHECK_FALSE(cell_in_rectangle(r, 3, 1, n));
}

TEST_CASE("rect mark counting matches cell coverage") {
  std::mt19937 rng(1007);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 + trial % 6;
    const GridDiagram g = oracle::random_grid(rng, n);
    std::uniform_int_distribution<int> dn(0, n - 1), ds(1, n - 1);
    Rectangle r;
    r.col = dn(rng);
    r.row = dn(rng);
    r.width = ds(rng);
    r.height = ds(rng);
    int xs = 0, os = 0;
    std::vector<uint8_t> expect_u(n, 0);
    for (int c = 0; c < n; ++c) {
      if (cell_in_rectangle(r, c, g.x_rows[c], n)) ++xs;
      if (cell_in_rectangle(r, c, g.o_rows[c], n)) {
        ++os;
        expect_u[c] = 1;
      }
    }
    CHECK(rect_mark_count(g, r, true) == xs);
    CHECK(rect_mark_count(g, r, false) == os);
    CHECK(rect_o_exponents(g, r) == expect_u);
  }
}

TEST_CASE("empty rectangles agree with the exhaustive oracle") {
  for (int n = 2; n <= 4; ++n) {
    oracle::for_each_grid(n, [&](const GridDiagram& g) {
      oracle::for_each_permutation(n, [&](const std::vector<int>& rows) {
        CHECK(rect_set(empty_rectangles(g, rows)) ==
              rect_set(oracle::empty_rectangles(g, rows)));
      });
    });
  }
  std::mt19937 rng(1008);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 5 + trial % 3;
    const GridDiagram g = oracle::random_grid(rng, n);
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(rect_set(empty_rectangles(g, rows)) ==
          rect_set(oracle::empty_rectangles(g, rows)));
  }
}

TEST_CASE("boundary agrees with the oracle in all variants") {
  const std::vector<Variant> variants = {Variant::Tilde, Variant::Hat,
                                         Variant::Minus};
  for (int n = 2; n <= 3; ++n) {
    oracle::for_each_grid(n, [&](const GridDiagram& g) {
      oracle::for_each_permutation(n, [&](const std::vector<int>& rows) {
        for (Variant v : variants)
          CHECK(boundary(g, rows, v) == oracle_boundary(g, rows, v));
      });
    });
  }
  std::mt19937 rng(1009);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 4 + trial % 3;  // 4..6
    const GridDiagram g = oracle::random_grid(rng, n);
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    for (int rep = 0; rep < 6; ++rep) {
      std::shuffle(rows.begin(), rows.end(), rng);
      for (Variant v : variants)
        CHECK(boundary(g, rows, v) == oracle_boundary(g, rows, v));
    }
  }
}

TEST_CASE("differential terms drop Maslov by one and preserve Alexander") {
  const std::vector<Variant> variants = {Variant::Tilde, Variant::Hat,
                                         Variant::Minus};
  std::mt19937 rng(1010);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 2 + trial % 6;
    const GridDiagram g = oracle::random_grid(rng, n);
    const auto part = trace_components(g);
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    const int m = maslov(g, rows);
    const auto a2 = alexander2(g, rows);
    for (Variant v : variants) {
      for (const auto& t : boundary(g, rows, v)) {
        CHECK(term_maslov(g, part, t) == m - 1);
        CHECK(term_alexander2(g, part, t) == a2);
      }
    }
  }
}

TEST_CASE("term gradings extend the plain gradings") {
  std::mt19937 rng(1011);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + trial % 6;
    const GridDiagram g = oracle::random_grid(rng, n);
    const auto part = trace_components(g);
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);

    ChainTerm plain;
    plain.rows = rows;
    CHECK(term_maslov(g, part, plain) == maslov(g, rows));
    CHECK(term_alexander2(g, part, plain) == alexander2(g, rows));

    // One U-power on a random column: Maslov -2, that component's A2 -2.
    ChainTerm powered = plain;
    powered.u_exp.assign(n, 0);
    const int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
    powered.u_exp[k] = 1;
    CHECK(term_maslov(g, part, powered) == maslov(g, rows) - 2);
    auto expect = alexander2(g, rows);
    expect[part.component_of_column[k]] -= 2;
    CHECK(term_alexander2(g, part, powered) == expect);
  }
}

TEST_CASE("boundary squares to zero (smoke; the full audit is elsewhere)") {
  const std::vector<Variant> variants = {Variant::Tilde, Variant::Hat,
                                         Variant::Minus};
  oracle::for_each_grid(3, [&](const GridDiagram& g) {
    oracle::for_each_permutation(3, [&](const std::vector<int>& rows) {
      for (Variant v : variants) {
        const auto once = boundary(g, rows, v);
        CHECK(boundary_of_terms(g, once, v).empty());
      }
    });
  });
  std::mt19937 rng(1012);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 4 + trial % 3;
    const GridDiagram g = oracle::random_grid(rng, n);
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);
    for (Variant v : variants)
      CHECK(boundary_of_terms(g, boundary(g, rows, v), v).empty());
  }
}

TEST_CASE("U-powers distribute over the differential") {
  std::mt19937 rng(1013);
  for (int trial = 0; trial < 80; ++trial) {
    const int n = 2 + trial % 6;
    const GridDiagram g = oracle::random_grid(rng, n);
    std::vector<int> rows(n);
    std::iota(rows.begin(), rows.end(), 0);
    std::shuffle(rows.begin(), rows.end(), rng);

    ChainTerm t;
    t.rows = rows;
    t.u_exp.assign(n, 0);
    const int k = std::uniform_int_distribution<int>(0, n - 1)(rng);
    t.u_exp[k] = 2;

    auto expected = boundary(g, rows, Variant::Minus);
    for (auto& e : expected) {
      if (e.u_exp.empty()) e.u_exp.assign(n, 0);
      e.u_exp[k] = static_cast<uint8_t>(e.u_exp[k] + 2);
    }
    std::sort(expected.begin(), expected.end());
    CHECK(boundary_of_terms(g, {t}, Variant::Minus) == expected);
  }
}

TEST_CASE("canonical generators have no outgoing differential at all") {
  // Every rectangle leaving x+ covers the X cell hugging its northeast
  // corner; every rectangle leaving x- covers the X cell at its southwest
  // corner.  So both are cycles in every variant, term-by-term.
  const std::vector<Variant> variants = {Variant::Tilde, Variant::Hat,
                                         Variant::Minus};
  std::mt19937 rng(1014);
  for (int trial = 0; trial < 150; ++trial) {
    const GridDiagram g = oracle::random_grid(rng, 2 + trial % 7);
    for (Variant v : variants) {
      CHECK(boundary(g, plus_rows(g), v).empty());
      CHECK(boundary(g, minus_rows(g), v).empty());
    }
  }
}

TEST_CASE("chain_add cancels duplicates mod 2") {
  GridDiagram g = fixtures::g0();
  const auto terms = boundary(g, {0, 1}, Variant::Minus);
  CHECK_FALSE(terms.empty());
  CHECK(chain_add(terms, terms).empty());
  const auto same = chain_add(terms, {});
  CHECK(same == terms);
}

TEST_CASE("make_chain enforces a single bigrading bucket") {
  const GridDiagram g = fixtures::trefoil();
  // Two generators differing by a rectangle have different Maslov gradings.
  std::vector<int> a(g.n);
  std::iota(a.begin(), a.end(), 0);
  const auto rects = empty_rectangles(g, a);
  REQUIRE_FALSE(rects.empty());
  ChainTerm ta, tb;
  ta.rows = a;
  tb.rows = rects.front().to_rows;

  CHECK_NOTHROW(make_chain(g, {ta}));
  const auto chain = make_chain(g, {ta});
  CHECK(chain.maslov == maslov(g, a));
  CHECK(chain.alexander2 == alexander2(g, a));
  CHECK_THROWS_AS(make_chain(g, {ta, tb}), DimensionMismatch);
}
