// Chain complex of a grid diagram: gradings, rectangles, differentials.

#include "gridhfk/complex.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

#include "gridhfk/util.hpp"

namespace gridhfk {

void for_each_generator(int n,
                        const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  do {
    fn(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
}

std::vector<Generator> enumerate_generators(const GridDiagram& g, int max_n) {
  if (g.n > max_n)
    throw LimitExceeded("generator enumeration requires n <= " +
                        std::to_string(max_n) + ", got n = " +
                        std::to_string(g.n) +
                        " (raise the limit explicitly to proceed)");
  std::vector<Generator> out;
  for_each_generator(g.n, [&](const std::vector<int>& p) {
    out.push_back(Generator{p});
  });
  return out;
}

// ---------------------------------------------------------------------------
// Pair counting.

namespace {

long long ifun_weighted(const std::vector<WPoint>& a,
                        const std::vector<WPoint>& b) {
  long long total = 0;
  for (const auto& p : a)
    for (const auto& q : b)
      if (p.x2 < q.x2 && p.y2 < q.y2)
        total += static_cast<long long>(p.w) * q.w;
  return total;
}

std::vector<WPoint> generator_points(const GridDiagram& g,
                                     const std::vector<int>& rows,
                                     Domain domain, int weight = 1) {
  std::vector<WPoint> pts;
  pts.reserve(g.n);
  for (int c = 0; c < g.n; ++c) {
    int x = c, y = rows[c];
    if (domain == Domain::HighRight) {
      if (x == 0) x = g.n;
      if (y == 0) y = g.n;
    }
    pts.push_back({2 * x, 2 * y, weight});
  }
  return pts;
}

std::vector<WPoint> mark_points(const GridDiagram& g, bool x_marks,
                                int weight = 1) {
  std::vector<WPoint> pts;
  pts.reserve(g.n);
  const auto& rows = x_marks ? g.x_rows : g.o_rows;
  for (int c = 0; c < g.n; ++c)
    pts.push_back({2 * c + 1, 2 * rows[c] + 1, weight});
  return pts;
}

}  // namespace

long long jfun2(const std::vector<WPoint>& a, const std::vector<WPoint>& b) {
  return ifun_weighted(a, b) + ifun_weighted(b, a);
}

int maslov(const GridDiagram& g, const std::vector<int>& rows,
           bool with_respect_to_x, Domain domain) {
  const auto xs = generator_points(g, rows, domain);
  const auto ms = mark_points(g, with_respect_to_x);
  // M(x) = J(x,x) - 2 J(x,S) + J(S,S) + 1 with S the chosen mark set; the
  // doubled form keeps all arithmetic integral.
  const long long jxx2 = jfun2(xs, xs);    // even: both I terms coincide
  const long long jxs2 = jfun2(xs, ms);    // possibly odd
  const long long jss2 = jfun2(ms, ms);    // even
  const long long doubled = jxx2 - 2 * jxs2 + jss2 + 2;
  assert(doubled % 2 == 0);
  return static_cast<int>(doubled / 2);
}

std::vector<long long> alexander2(const GridDiagram& g,
                                  const std::vector<int>& rows) {
  const auto part = trace_components(g);
  // P = x - (X + O)/2 with doubled weights: generator points get +2, every
  // mark -1.  Then 2*A_i = jfun2(P, Q_i)/2 - (n_i - 1) with Q_i the signed
  // component marks (X_i - O_i), all of it integral after the final halving.
  std::vector<WPoint> p = generator_points(g, rows, Domain::LowLeft, 2);
  {
    auto mx = mark_points(g, true, -1);
    auto mo = mark_points(g, false, -1);
    p.insert(p.end(), mx.begin(), mx.end());
    p.insert(p.end(), mo.begin(), mo.end());
  }
  std::vector<long long> a2(part.count, 0);
  for (int i = 0; i < part.count; ++i) {
    std::vector<WPoint> q;
    for (int c : part.columns[i]) {
      q.push_back({2 * c + 1, 2 * g.x_rows[c] + 1, +1});
      q.push_back({2 * c + 1, 2 * g.o_rows[c] + 1, -1});
    }
    const long long j4 = jfun2(p, q);  // 4*J(x - (X+O)/2, X_i - O_i)
    const long long doubled = j4 / 2 - (part.size[i] - 1);
    assert(j4 % 2 == 0);
    a2[i] = doubled;
  }
  return a2;
}

long long alexander2_total(const GridDiagram& g, const std::vector<int>& rows) {
  const auto a2 = alexander2(g, rows);
  return std::accumulate(a2.begin(), a2.end(), 0LL);
}

// ---------------------------------------------------------------------------
// Rectangles.

bool point_in_rectangle(const Rectangle& r, int c, int row, int n) {
  const int dc = cyc(c - r.col, n);
  const int dr = cyc(row - r.row, n);
  return dc >= 1 && dc <= r.width - 1 && dr >= 1 && dr <= r.height - 1;
}

bool cell_in_rectangle(const Rectangle& r, int k, int l, int n) {
  return cyc(k - r.col, n) <= r.width - 1 && cyc(l - r.row, n) <= r.height - 1;
}

int rect_mark_count(const GridDiagram& g, const Rectangle& r, bool x_marks) {
  const auto& rows = x_marks ? g.x_rows : g.o_rows;
  int count = 0;
  for (int k = 0; k < g.n; ++k)
    if (cell_in_rectangle(r, k, rows[k], g.n)) ++count;
  return count;
}

std::vector<uint8_t> rect_o_exponents(const GridDiagram& g,
                                      const Rectangle& r) {
  std::vector<uint8_t> u(g.n, 0);
  for (int k = 0; k < g.n; ++k)
    if (cell_in_rectangle(r, k, g.o_rows[k], g.n)) u[k] = 1;
  return u;
}

std::vector<EmptyRect> empty_rectangles(const GridDiagram& g,
                                        const std::vector<int>& rows) {
  const int n = g.n;
  std::vector<EmptyRect> out;
  for (int c1 = 0; c1 < n; ++c1) {
    for (int c2 = c1 + 1; c2 < n; ++c2) {
      // The two torus rectangles whose southwest/northeast corners sit on
      // the points of `rows` at columns c1 and c2.
      for (int swap = 0; swap < 2; ++swap) {
        const int i = swap ? c2 : c1;
        const int j = swap ? c1 : c2;
        Rectangle r;
        r.col = i;
        r.row = rows[i];
        r.width = cyc(j - i, n);
        r.height = cyc(rows[j] - rows[i], n);
        bool empty = true;
        for (int k = 0; k < n && empty; ++k)
          if (point_in_rectangle(r, k, rows[k], n)) empty = false;
        if (!empty) continue;
        EmptyRect er;
        er.rect = r;
        er.to_rows = rows;
        std::swap(er.to_rows[c1], er.to_rows[c2]);
        out.push_back(std::move(er));
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Differentials.

Variant variant_from_name(const std::string& name) {
  if (name == "tilde") return Variant::Tilde;
  if (name == "hat") return Variant::Hat;
  if (name == "minus") return Variant::Minus;
  throw SyntaxError("unknown complex variant '" + name +
                    "' (expected tilde, hat or minus)");
}

const char* variant_name(Variant v) {
  switch (v) {
    case Variant::Tilde: return "tilde";
    case Variant::Hat: return "hat";
    case Variant::Minus: return "minus";
  }
  return "?";
}

std::vector<ChainTerm> boundary(const GridDiagram& g,
                                const std::vector<int>& rows, Variant variant) {
  std::vector<ChainTerm> terms;
  const auto rects = empty_rectangles(g, rows);
  std::vector<int> distinguished;
  if (variant == Variant::Hat)
    distinguished = trace_components(g).distinguished_column;
  for (const auto& er : rects) {
    if (rect_mark_count(g, er.rect, /*x_marks=*/true) != 0) continue;
    if (variant == Variant::Tilde) {
      if (rect_mark_count(g, er.rect, /*x_marks=*/false) != 0) continue;
      terms.push_back(ChainTerm{er.to_rows, {}});
      continue;
    }
    auto u = rect_o_exponents(g, er.rect);
    if (variant == Variant::Hat) {
      bool hits_distinguished = false;
      for (int d : distinguished)
        if (u[d]) { hits_distinguished = true; break; }
      if (hits_distinguished) continue;
    }
    // Canonical form: an all-zero exponent vector is stored empty.
    if (std::all_of(u.begin(), u.end(), [](uint8_t v) { return v == 0; }))
      u.clear();
    terms.push_back(ChainTerm{er.to_rows, std::move(u)});
  }
  std::sort(terms.begin(), terms.end());
  // Mod-2 cancellation of coincident terms.
  std::vector<ChainTerm> reduced;
  for (std::size_t i = 0; i < terms.size();) {
    std::size_t j = i;
    while (j < terms.size() && terms[j] == terms[i]) ++j;
    if ((j - i) % 2 == 1) reduced.push_back(terms[i]);
    i = j;
  }
  return reduced;
}

std::vector<ChainTerm> chain_add(std::vector<ChainTerm> a,
                                 std::vector<ChainTerm> b) {
  a.insert(a.end(), b.begin(), b.end());
  std::sort(a.begin(), a.end());
  std::vector<ChainTerm> out;
  for (std::size_t i = 0; i < a.size();) {
    std::size_t j = i;
    while (j < a.size() && a[j] == a[i]) ++j;
    if ((j - i) % 2 == 1) out.push_back(a[i]);
    i = j;
  }
  return out;
}

namespace {

std::vector<uint8_t> add_u(const std::vector<uint8_t>& a,
                           const std::vector<uint8_t>& b, int n) {
  std::vector<uint8_t> out(static_cast<std::size_t>(n), 0);
  for (int k = 0; k < n; ++k) {
    uint8_t va = k < static_cast<int>(a.size()) ? a[k] : 0;
    uint8_t vb = k < static_cast<int>(b.size()) ? b[k] : 0;
    out[k] = static_cast<uint8_t>(va + vb);
  }
  bool all_zero = std::all_of(out.begin(), out.end(),
                              [](uint8_t v) { return v == 0; });
  if (all_zero) out.clear();
  return out;
}

}  // namespace

std::vector<ChainTerm> boundary_of_terms(const GridDiagram& g,
                                         const std::vector<ChainTerm>& terms,
                                         Variant variant) {
  std::vector<ChainTerm> total;
  for (const auto& t : terms) {
    auto d = boundary(g, t.rows, variant);
    for (auto& term : d) term.u_exp = add_u(term.u_exp, t.u_exp, g.n);
    total = chain_add(std::move(total), std::move(d));
  }
  return total;
}

int term_maslov(const GridDiagram& g, const ComponentPartition& part,
                const ChainTerm& t) {
  (void)part;
  int total_u = 0;
  for (uint8_t v : t.u_exp) total_u += v;
  return maslov(g, t.rows) - 2 * total_u;
}

std::vector<long long> term_alexander2(const GridDiagram& g,
                                       const ComponentPartition& part,
                                       const ChainTerm& t) {
  auto a2 = alexander2(g, t.rows);
  for (int k = 0; k < static_cast<int>(t.u_exp.size()); ++k)
    if (t.u_exp[k])
      a2[part.component_of_column[k]] -= 2LL * t.u_exp[k];
  return a2;
}

FormalChain make_chain(const GridDiagram& g, std::vector<ChainTerm> terms) {
  const auto part = trace_components(g);
  FormalChain chain;
  std::sort(terms.begin(), terms.end());
  chain.terms = std::move(terms);
  if (chain.terms.empty()) {
    chain.alexander2.assign(part.count, 0);
    return chain;
  }
  chain.maslov = term_maslov(g, part, chain.terms.front());
  chain.alexander2 = term_alexander2(g, part, chain.terms.front());
  for (const auto& t : chain.terms) {
    if (term_maslov(g, part, t) != chain.maslov ||
        term_alexander2(g, part, t) != chain.alexander2)
      throw DimensionMismatch(
          "chain terms do not share a single bigrading bucket");
  }
  return chain;
}

}  // namespace gridhfk
