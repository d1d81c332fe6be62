// GF(2) homology: sparse column reduction, the blocked homology table,
// boundary-membership certificates, and tau via filtered persistence.

#include "gridhfk/homology.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <unordered_map>

#include "gridhfk/util.hpp"

namespace gridhfk {

namespace {

// Symmetric difference of strictly ascending index vectors.
std::vector<int> xor_cols(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (a[i] < b[j]) out.push_back(a[i++]);
    else if (b[j] < a[i]) out.push_back(b[j++]);
    else { ++i; ++j; }
  }
  out.insert(out.end(), a.begin() + i, a.end());
  out.insert(out.end(), b.begin() + j, b.end());
  return out;
}

// Packs a permutation (n <= 16) into a 64-bit key.
uint64_t pack_perm(const std::vector<int>& rows) {
  uint64_t key = 0;
  for (std::size_t i = 0; i < rows.size(); ++i)
    key |= static_cast<uint64_t>(rows[i] & 0xF) << (4 * i);
  return key;
}

}  // namespace

ReduceResult reduce(SparseGF2Matrix& m) {
  ReduceResult res;
  res.pivot_col_of_row.assign(m.rows, -1);
  for (int j = 0; j < static_cast<int>(m.cols.size()); ++j) {
    auto& col = m.cols[j];
    while (!col.empty()) {
      const int low = col.back();
      const int owner = res.pivot_col_of_row[low];
      if (owner < 0) {
        res.pivot_col_of_row[low] = j;
        ++res.rank;
        break;
      }
      col = xor_cols(col, m.cols[owner]);
    }
  }
  return res;
}

std::optional<std::vector<int>> solve_gf2(const SparseGF2Matrix& m,
                                          const std::vector<int>& t) {
  // Incremental elimination with combination tracking: for each pivot row we
  // remember the reduced column and which original columns sum to it.
  std::unordered_map<int, std::pair<std::vector<int>, std::vector<int>>> pivots;
  for (int j = 0; j < static_cast<int>(m.cols.size()); ++j) {
    std::vector<int> col = m.cols[j];
    std::vector<int> combo = {j};
    while (!col.empty()) {
      auto it = pivots.find(col.back());
      if (it == pivots.end()) {
        pivots.emplace(col.back(), std::make_pair(col, combo));
        break;
      }
      col = xor_cols(col, it->second.first);
      combo = xor_cols(combo, it->second.second);
    }
  }
  std::vector<int> vec = t;
  std::vector<int> combo;
  while (!vec.empty()) {
    auto it = pivots.find(vec.back());
    if (it == pivots.end()) return std::nullopt;
    vec = xor_cols(vec, it->second.first);
    combo = xor_cols(combo, it->second.second);
  }
  return combo;
}

// ---------------------------------------------------------------------------
// Homology table of the mark-free differential.

long long BigradedTable::total() const {
  long long t = 0;
  for (const auto& [k, v] : ranks) t += v;
  return t;
}

BigradedTable tilde_homology_table(const GridDiagram& g,
                                   const HomologyLimits& limits) {
  validate_grid(g);
  const auto part = trace_components(g);
  const auto gens = enumerate_generators(g, limits.max_n);
  const std::size_t count = gens.size();

  // Gradings in parallel (deterministic: pure per-index writes).
  std::vector<int> mas(count);
  std::vector<std::vector<long long>> alex(count);
  parallel_for(count, [&](std::size_t i) {
    mas[i] = maslov(g, gens[i].rows);
    alex[i] = alexander2(g, gens[i].rows);
  });

  // Group by Alexander block, then by Maslov grading inside each block.  The
  // mark-free differential preserves the Alexander multi-grading and drops
  // Maslov by exactly one, so homology splits across these buckets.
  std::map<std::vector<long long>, std::map<int, std::vector<int>>> blocks;
  for (std::size_t i = 0; i < count; ++i)
    blocks[alex[i]][mas[i]].push_back(static_cast<int>(i));
  for (const auto& [a2, by_m] : blocks)
    for (const auto& [m, col_gens] : by_m)
      if (static_cast<long long>(col_gens.size()) > limits.max_bucket)
        throw LimitExceeded("bigraded bucket exceeds max_bucket");

  std::vector<const std::map<int, std::vector<int>>*> block_ptrs;
  std::vector<const std::vector<long long>*> block_keys;
  for (const auto& [a2, by_m] : blocks) {
    block_keys.push_back(&a2);
    block_ptrs.push_back(&by_m);
  }

  std::vector<std::vector<std::pair<int, long long>>> block_ranks(
      block_ptrs.size());
  parallel_for(block_ptrs.size(), [&](std::size_t bi) {
    const auto& by_m = *block_ptrs[bi];
    // Boundary ranks between adjacent Maslov levels within this block.
    std::map<int, int> boundary_rank;  // m -> rank of d : C_m -> C_{m-1}
    for (const auto& [m, col_gens] : by_m) {
      auto below = by_m.find(m - 1);
      if (below == by_m.end()) continue;
      std::unordered_map<uint64_t, int> row_index;
      row_index.reserve(below->second.size() * 2);
      for (std::size_t r = 0; r < below->second.size(); ++r)
        row_index[pack_perm(gens[below->second[r]].rows)] =
            static_cast<int>(r);
      SparseGF2Matrix mat;
      mat.rows = static_cast<int>(below->second.size());
      mat.cols.reserve(col_gens.size());
      for (int gi : col_gens) {
        std::vector<int> col;
        for (const auto& term : boundary(g, gens[gi].rows, Variant::Tilde)) {
          auto it = row_index.find(pack_perm(term.rows));
          assert(it != row_index.end());
          col.push_back(it->second);
        }
        std::sort(col.begin(), col.end());
        mat.cols.push_back(std::move(col));
      }
      boundary_rank[m] = reduce(mat).rank;
    }
    auto rank_of = [&](int m) {
      auto it = boundary_rank.find(m);
      return it == boundary_rank.end() ? 0 : it->second;
    };
    for (const auto& [m, col_gens] : by_m) {
      const long long h =
          static_cast<long long>(col_gens.size()) - rank_of(m) - rank_of(m + 1);
      if (h != 0)
        block_ranks[bi].push_back({m, h});
    }
  });

  BigradedTable table;
  table.n = g.n;
  table.components = part.count;
  for (std::size_t bi = 0; bi < block_ptrs.size(); ++bi)
    for (const auto& [m, h] : block_ranks[bi])
      table.ranks[BigradedKey{m, *block_keys[bi]}] = h;
  return table;
}

// ---------------------------------------------------------------------------
// Boundary-membership certificate.

namespace {

// Enumerates weak compositions of `total` into the slots listed in `cols`,
// writing into u and invoking fn for each complete assignment.
void compositions(const std::vector<int>& cols, std::size_t at, int total,
                  std::vector<uint8_t>& u, const std::function<void()>& fn) {
  if (at + 1 == cols.size()) {
    u[cols[at]] = static_cast<uint8_t>(total);
    fn();
    u[cols[at]] = 0;
    return;
  }
  for (int take = 0; take <= total; ++take) {
    u[cols[at]] = static_cast<uint8_t>(take);
    compositions(cols, at + 1, total - take, u, fn);
  }
  u[cols[at]] = 0;
}

}  // namespace

WitnessResult bounds_witness(const GridDiagram& g, const FormalChain& target,
                             int max_u, const HomologyLimits& limits) {
  validate_grid(g);
  const auto part = trace_components(g);
  if (static_cast<int>(target.alexander2.size()) != part.count)
    throw DimensionMismatch("target bucket has wrong component count");

  WitnessResult res;
  if (target.terms.empty()) {
    res.found = true;  // the zero chain bounds trivially (empty witness)
    return res;
  }
  for (const auto& t : target.terms) {
    if (term_maslov(g, part, t) != target.maslov ||
        term_alexander2(g, part, t) != target.alexander2)
      throw DimensionMismatch("target terms disagree with the stated bucket");
  }

  // Candidate basis: monomials U^u * h with gradings one Maslov level above
  // the target bucket.  The per-component U-total of u is forced by the
  // Alexander gap, and the Maslov gap filters the rest, so this basis spans
  // the entire bucket: a failed solve is a definitive negative.
  struct Candidate {
    std::vector<int> rows;
    std::vector<uint8_t> u;
  };
  std::vector<Candidate> basis;
  for_each_generator(g.n, [&](const std::vector<int>& h) {
    const auto a2 = alexander2(g, h);
    std::vector<int> drop(part.count);
    long long total_drop = 0;
    for (int i = 0; i < part.count; ++i) {
      const long long gap2 = a2[i] - target.alexander2[i];
      if (gap2 < 0 || gap2 % 2 != 0) return;
      drop[i] = static_cast<int>(gap2 / 2);
      total_drop += drop[i];
    }
    if (maslov(g, h) - 2 * total_drop != target.maslov + 1) return;
    if (total_drop > max_u)
      throw LimitExceeded("witness search needs total U-power " +
                          std::to_string(total_drop) + " > max_u");
    // Spread each component's forced U-total over its columns.
    std::vector<uint8_t> u(g.n, 0);
    std::function<void(int)> per_component = [&](int comp) {
      if (comp == part.count) {
        Candidate c;
        c.rows = h;
        c.u = u;
        bool any = false;
        for (uint8_t v : u) any = any || v != 0;
        if (!any) c.u.clear();
        basis.push_back(std::move(c));
        return;
      }
      compositions(part.columns[comp], 0, drop[comp], u,
                   [&] { per_component(comp + 1); });
    };
    per_component(0);
    if (static_cast<long long>(basis.size()) > limits.max_bucket)
      throw LimitExceeded("witness basis exceeds max_bucket");
  });

  // Row space: monomials of the target bucket, indexed on first sight.
  std::map<ChainTerm, int> row_index;
  auto row_of = [&](const ChainTerm& t) {
    auto [it, inserted] = row_index.emplace(t, static_cast<int>(row_index.size()));
    return it->second;
  };

  SparseGF2Matrix mat;
  mat.cols.reserve(basis.size());
  for (const auto& cand : basis) {
    std::vector<ChainTerm> image = boundary_of_terms(
        g, {ChainTerm{cand.rows, cand.u}}, Variant::Minus);
    std::vector<int> col;
    col.reserve(image.size());
    for (const auto& t : image) col.push_back(row_of(t));
    std::sort(col.begin(), col.end());
    mat.cols.push_back(std::move(col));
  }
  std::vector<int> t_vec;
  for (const auto& t : target.terms) t_vec.push_back(row_of(t));
  std::sort(t_vec.begin(), t_vec.end());
  mat.rows = static_cast<int>(row_index.size());

  auto combo = solve_gf2(mat, t_vec);
  if (!combo) return res;

  res.found = true;
  for (int j : *combo)
    res.witness.push_back(ChainTerm{basis[j].rows, basis[j].u});
  std::sort(res.witness.begin(), res.witness.end());
  // Certificate: re-derive the boundary and compare with the target.
  auto check = boundary_of_terms(g, res.witness, Variant::Minus);
  if (check != target.terms)
    throw CycleCheckFailed("witness certificate failed to reproduce target");
  return res;
}

// ---------------------------------------------------------------------------
// tau.

TauResult tau(const GridDiagram& g, const HomologyLimits& limits) {
  validate_grid(g);
  const auto part = trace_components(g);
  if (part.count != 1)
    throw NotAKnot("tau is defined for single-component diagrams only");
  const auto gens = enumerate_generators(g, limits.max_n);
  const std::size_t count = gens.size();

  std::vector<long long> alex(count);
  std::vector<int> mas(count);
  parallel_for(count, [&](std::size_t i) {
    alex[i] = alexander2_total(g, gens[i].rows);
    mas[i] = maslov(g, gens[i].rows);
  });

  // Filtration-compatible basis order: the O-free differential never raises
  // the Alexander filtration and always drops Maslov by one, so sorting by
  // (Alexander asc, Maslov asc, lex) puts every boundary term strictly
  // earlier and the persistence pairing is valid at Alexander granularity.
  std::vector<int> order(count);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (alex[a] != alex[b]) return alex[a] < alex[b];
    if (mas[a] != mas[b]) return mas[a] < mas[b];
    return gens[a].rows < gens[b].rows;
  });
  std::vector<int> position(count);
  for (std::size_t i = 0; i < count; ++i) position[order[i]] = static_cast<int>(i);

  std::unordered_map<uint64_t, int> gen_index;
  gen_index.reserve(count * 2);
  for (std::size_t i = 0; i < count; ++i)
    gen_index[pack_perm(gens[i].rows)] = static_cast<int>(i);

  SparseGF2Matrix mat;
  mat.rows = static_cast<int>(count);
  mat.cols.assign(count, {});
  parallel_for(count, [&](std::size_t pos) {
    const auto& rows = gens[order[pos]].rows;
    std::vector<int> col;
    for (const auto& er : empty_rectangles(g, rows)) {
      if (rect_mark_count(g, er.rect, /*x_marks=*/false) != 0) continue;
      col.push_back(position[gen_index.at(pack_perm(er.to_rows))]);
    }
    std::sort(col.begin(), col.end());
    // Mod-2: coincident targets cancel (two rectangles may share endpoints).
    std::vector<int> dedup;
    for (std::size_t i = 0; i < col.size();) {
      std::size_t j = i;
      while (j < col.size() && col[j] == col[i]) ++j;
      if ((j - i) % 2 == 1) dedup.push_back(col[i]);
      i = j;
    }
    mat.cols[pos] = std::move(dedup);
  });

  const auto res = reduce(mat);
  // Essential classes: columns that reduced to zero and were never killed.
  // The order is Alexander-ascending, so the first essential index realizes
  // the minimal filtration level of a class surviving to the total homology.
  TauResult out;
  for (std::size_t pos = 0; pos < count; ++pos) {
    if (!mat.cols[pos].empty()) continue;             // not a cycle birth
    if (res.pivot_col_of_row[pos] >= 0) continue;     // eventually bounds
    const int gi = order[pos];
    assert(alex[gi] % 2 == 0);
    out.tau_tilde = alex[gi] / 2;
    out.witness_rows = gens[gi].rows;
    out.tau = out.tau_tilde + g.n - 1;
    return out;
  }
  throw CycleCheckFailed("filtered complex reported no surviving class");
}

}  // namespace gridhfk
