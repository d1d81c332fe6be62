#include "gridhfk/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "CLI11.hpp"
#include "gridhfk/complex.hpp"
#include "gridhfk/errors.hpp"
#include "gridhfk/front.hpp"
#include "gridhfk/grid.hpp"
#include "gridhfk/homology.hpp"
#include "gridhfk/legendrian.hpp"
#include "gridhfk/moves.hpp"
#include "gridhfk/util.hpp"
#include "json.hpp"

namespace gridhfk {
namespace {

using ordered_json = nlohmann::ordered_json;

// Half-integer gradings (stored doubled) print as integers when possible.
ordered_json half_json(long long doubled) {
  if (doubled % 2 == 0) return ordered_json(doubled / 2);
  return ordered_json(static_cast<double>(doubled) / 2.0);
}

ordered_json half_list_json(const std::vector<long long>& doubled) {
  ordered_json arr = ordered_json::array();
  for (long long v : doubled) arr.push_back(half_json(v));
  return arr;
}

// Knots report scalars, links report arrays.
ordered_json int_or_list(const std::vector<int>& v) {
  if (v.size() == 1) return ordered_json(v[0]);
  ordered_json arr = ordered_json::array();
  for (int x : v) arr.push_back(x);
  return arr;
}

ordered_json half_or_list(const std::vector<long long>& doubled) {
  if (doubled.size() == 1) return half_json(doubled[0]);
  return half_list_json(doubled);
}

std::string int_list_text(const std::vector<int>& v) {
  if (v.size() == 1) return std::to_string(v[0]);
  std::string s = "[";
  for (size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s + "]";
}

std::string half_list_text(const std::vector<long long>& doubled) {
  if (doubled.size() == 1) return doubled_to_string(doubled[0]);
  std::string s = "[";
  for (size_t i = 0; i < doubled.size(); ++i)
    s += (i ? "," : "") + doubled_to_string(doubled[i]);
  return s + "]";
}

std::string rows_text(const std::vector<int>& rows) {
  std::string s = "(";
  for (size_t i = 0; i < rows.size(); ++i)
    s += (i ? "," : "") + std::to_string(rows[i]);
  return s + ")";
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ValidationError("cannot write file: " + path);
  f << content;
}

// ---------------------------------------------------------------------------
// Subcommand bodies.

int cmd_validate(const std::string& file, std::ostream& out) {
  const GridDiagram g = parse_grid_file(file);
  const ComponentPartition part = trace_components(g);
  out << "valid grid: n=" << g.n << " components=" << part.count << "\n";
  return 0;
}

int cmd_invariants(const std::string& file, bool as_json, std::ostream& out) {
  const GridDiagram g = parse_grid_file(file);
  const ClassicalInvariants inv = classical_invariants(g);
  if (as_json) {
    ordered_json j;
    j["n"] = g.n;
    j["components"] = inv.component_count;
    j["writhe_grid"] = inv.writhe_grid;
    j["writhe_front"] = inv.writhe_front;
    j["tb"] = int_or_list(inv.tb);
    j["rot"] = int_or_list(inv.rot);
    j["cusps_up"] = int_or_list(inv.cusps_up);
    j["cusps_down"] = int_or_list(inv.cusps_down);
    if (inv.sl)
      j["sl"] = *inv.sl;
    else
      j["sl"] = nullptr;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "n=" << g.n << " components=" << inv.component_count << "\n";
  out << "writhe_grid=" << inv.writhe_grid
      << " writhe_front=" << inv.writhe_front << "\n";
  for (int i = 0; i < inv.component_count; ++i)
    out << "component " << i << ": tb=" << inv.tb[i] << " rot=" << inv.rot[i]
        << " cusps_up=" << inv.cusps_up[i] << " cusps_down=" << inv.cusps_down[i]
        << "\n";
  if (inv.sl) out << "sl=" << *inv.sl << "\n";
  return 0;
}

int cmd_gradings(const std::string& file, std::ostream& out) {
  const GridDiagram g = parse_grid_file(file);
  const CanonicalCycles cc = canonical_cycles(g);
  const bool ok = cc.is_cycle_plus && cc.is_cycle_minus &&
                  cc.maslov_plus == cc.predicted_maslov_plus &&
                  cc.maslov_minus == cc.predicted_maslov_minus &&
                  cc.alexander2_plus == cc.predicted_alexander2_plus &&
                  cc.alexander2_minus == cc.predicted_alexander2_minus;
  out << "x_plus:  rows=" << rows_text(cc.plus_rows)
      << " M=" << cc.maslov_plus << " A=" << half_list_text(cc.alexander2_plus)
      << " predicted M=" << cc.predicted_maslov_plus
      << " A=" << half_list_text(cc.predicted_alexander2_plus)
      << " cycle=" << (cc.is_cycle_plus ? "yes" : "NO") << "\n";
  out << "x_minus: rows=" << rows_text(cc.minus_rows)
      << " M=" << cc.maslov_minus
      << " A=" << half_list_text(cc.alexander2_minus)
      << " predicted M=" << cc.predicted_maslov_minus
      << " A=" << half_list_text(cc.predicted_alexander2_minus)
      << " cycle=" << (cc.is_cycle_minus ? "yes" : "NO") << "\n";
  out << "audit: " << (ok ? "OK" : "FAILED") << "\n";
  return ok ? 0 : 1;
}

int cmd_homology(const std::string& file, const std::string& variant,
                 bool as_json, const HomologyLimits& limits, std::ostream& out,
                 std::ostream& err) {
  if (variant != "tilde") {
    err << "only --variant tilde is implemented\n";
    return 2;
  }
  const GridDiagram g = parse_grid_file(file);
  const BigradedTable table = tilde_homology_table(g, limits);
  if (as_json) {
    ordered_json j;
    j["variant"] = variant;
    j["n"] = table.n;
    j["components"] = table.components;
    j["total"] = table.total();
    ordered_json ranks = ordered_json::array();
    for (const auto& [key, rank] : table.ranks) {
      ordered_json entry = ordered_json::array();
      entry.push_back(key.maslov);
      entry.push_back(half_list_json(key.alexander2));
      entry.push_back(rank);
      ranks.push_back(entry);
    }
    j["ranks"] = ranks;
    out << j.dump(2) << "\n";
    return 0;
  }
  out << "variant=" << variant << " n=" << table.n
      << " components=" << table.components << " total=" << table.total()
      << "\n";
  if (table.components == 1) {
    // Aligned grid: rows Maslov descending, columns Alexander ascending.
    std::vector<long long> avals;
    std::vector<int> mvals;
    for (const auto& [key, rank] : table.ranks) {
      avals.push_back(key.alexander2[0]);
      mvals.push_back(key.maslov);
    }
    std::sort(avals.begin(), avals.end());
    avals.erase(std::unique(avals.begin(), avals.end()), avals.end());
    std::sort(mvals.begin(), mvals.end());
    mvals.erase(std::unique(mvals.begin(), mvals.end()), mvals.end());
    size_t width = 5;
    for (long long a : avals)
      width = std::max(width, doubled_to_string(a).size() + 3);
    auto pad = [&](const std::string& s) {
      std::string p(width > s.size() ? width - s.size() : 0, ' ');
      return p + s;
    };
    std::string header = "      ";
    for (long long a : avals) header += pad("A=" + doubled_to_string(a));
    out << header << "\n";
    for (auto it = mvals.rbegin(); it != mvals.rend(); ++it) {
      std::string line = "M=" + std::to_string(*it);
      line += std::string(line.size() < 6 ? 6 - line.size() : 1, ' ');
      for (long long a : avals) {
        auto found = table.ranks.find(BigradedKey{*it, {a}});
        line += pad(found == table.ranks.end() ? "."
                                               : std::to_string(found->second));
      }
      out << line << "\n";
    }
  } else {
    for (const auto& [key, rank] : table.ranks)
      out << "M=" << key.maslov << " A=" << half_list_text(key.alexander2)
          << " rank=" << rank << "\n";
  }
  return 0;
}

ordered_json lambda_json(const GridDiagram& g, const LambdaReport& rep) {
  ordered_json j;
  j["tb"] = int_or_list(rep.classical.tb);
  j["rot"] = int_or_list(rep.classical.rot);
  j["M_plus"] = rep.cycles.maslov_plus;
  j["A_plus"] = half_or_list(rep.cycles.alexander2_plus);
  j["M_minus"] = rep.cycles.maslov_minus;
  j["A_minus"] = half_or_list(rep.cycles.alexander2_minus);
  j["is_cycle_plus"] = rep.cycles.is_cycle_plus;
  j["is_cycle_minus"] = rep.cycles.is_cycle_minus;
  j["isolated_plus"] = rep.isolated_plus;
  j["isolated_minus"] = rep.isolated_minus;
  if (rep.equal_classes)
    j["classes_equal"] = *rep.equal_classes;
  else
    j["classes_equal"] = nullptr;
  j["nonvanishing_depth"] = rep.nonvanishing_checked_to;
  ordered_json theta;
  theta["invariant"] = "transverse";
  theta["M"] = rep.cycles.maslov_plus;
  theta["A"] = half_or_list(rep.cycles.alexander2_plus);
  if (rep.classical.sl)
    theta["sl"] = *rep.classical.sl;
  else
    theta["sl"] = nullptr;
  ordered_json rows = ordered_json::array();
  for (int r : rep.cycles.plus_rows) rows.push_back(r);
  theta["rows"] = rows;
  j["theta"] = theta;
  (void)g;
  return j;
}

int cmd_lambda(const std::string& file, int depth, bool as_json,
               const HomologyLimits& limits, std::ostream& out,
               std::ostream& err) {
  const GridDiagram g = parse_grid_file(file);
  const LambdaReport rep = lambda_report(g, depth, limits);
  if (as_json) {
    out << lambda_json(g, rep).dump(2) << "\n";
  } else {
    out << "tb=" << int_list_text(rep.classical.tb)
        << " rot=" << int_list_text(rep.classical.rot);
    if (rep.classical.sl) out << " sl=" << *rep.classical.sl;
    out << "\n";
    out << "x_plus:  rows=" << rows_text(rep.cycles.plus_rows)
        << " M=" << rep.cycles.maslov_plus
        << " A=" << half_list_text(rep.cycles.alexander2_plus)
        << " cycle=" << (rep.cycles.is_cycle_plus ? "yes" : "NO")
        << " isolated=" << (rep.isolated_plus ? "yes" : "no") << "\n";
    out << "x_minus: rows=" << rows_text(rep.cycles.minus_rows)
        << " M=" << rep.cycles.maslov_minus
        << " A=" << half_list_text(rep.cycles.alexander2_minus)
        << " cycle=" << (rep.cycles.is_cycle_minus ? "yes" : "NO")
        << " isolated=" << (rep.isolated_minus ? "yes" : "no") << "\n";
    out << "classes_equal=";
    if (rep.equal_classes)
      out << (*rep.equal_classes ? "true" : "false");
    else
      out << "incomparable (different bigradings)";
    out << "\n";
    out << "nonvanishing verified to U-power " << rep.nonvanishing_checked_to
        << "\n";
    out << "theta: transverse invariant = x_plus data, M="
        << rep.cycles.maslov_plus
        << " A=" << half_list_text(rep.cycles.alexander2_plus) << "\n";
  }
  if (rep.vanished_at) {
    err << "error: U^" << *rep.vanished_at
        << " multiple of a canonical class bounds; this contradicts the "
           "non-torsion theorem\n";
    return 1;
  }
  return 0;
}

int cmd_distinguish(const std::string& f1, const std::string& f2, bool verbose,
                    const HomologyLimits& limits, std::ostream& out) {
  const GridDiagram g1 = parse_grid_file(f1);
  const GridDiagram g2 = parse_grid_file(f2);
  const ClassicalInvariants i1 = classical_invariants(g1);
  const ClassicalInvariants i2 = classical_invariants(g2);

  auto classical_pairs = [](const ClassicalInvariants& inv) {
    std::vector<std::pair<int, int>> v;
    for (int i = 0; i < inv.component_count; ++i)
      v.emplace_back(inv.tb[i], inv.rot[i]);
    std::sort(v.begin(), v.end());
    return v;
  };

  if (i1.component_count != i2.component_count) {
    out << "distinguished (classical): component counts differ ("
        << i1.component_count << " vs " << i2.component_count << ")\n";
    return 0;
  }
  if (classical_pairs(i1) != classical_pairs(i2)) {
    out << "distinguished (classical): tb/rot differ (tb "
        << int_list_text(i1.tb) << " rot " << int_list_text(i1.rot) << " vs tb "
        << int_list_text(i2.tb) << " rot " << int_list_text(i2.rot) << ")\n";
    return 0;
  }
  bool tables_compared = false;
  if (g1.n == g2.n) {
    const BigradedTable t1 = tilde_homology_table(g1, limits);
    const BigradedTable t2 = tilde_homology_table(g2, limits);
    tables_compared = true;
    if (!(t1 == t2)) {
      out << "distinguished (classical): homology tables differ (totals "
          << t1.total() << " vs " << t2.total() << ")\n";
      return 0;
    }
  } else {
    out << "note: homology tables not compared (different grid sizes)\n";
  }
  const ClassesEqualResult e1 = classes_equal(g1, 64, limits);
  const ClassesEqualResult e2 = classes_equal(g2, 64, limits);
  auto flag_text = [](const std::optional<bool>& b) {
    return !b ? std::string("incomparable") : (*b ? "true" : "false");
  };
  if (e1.equal && e2.equal && *e1.equal != *e2.equal && tables_compared) {
    out << "distinguished (lambda): classes_equal differs ("
        << flag_text(e1.equal) << " vs " << flag_text(e2.equal) << ")\n";
  } else {
    out << "inconclusive (classes_equal " << flag_text(e1.equal) << " vs "
        << flag_text(e2.equal) << ")\n";
  }
  if (verbose)
    out << "note: the distinguished classes are invariants only up to "
           "quasi-isomorphism, not as elements of an abstract homology "
           "group; a sequence of elementary moves from a diagram back to "
           "itself may induce a non-trivial automorphism.\n";
  return 0;
}

int cmd_tau(const std::string& file, const HomologyLimits& limits,
            std::ostream& out) {
  const GridDiagram g = parse_grid_file(file);
  const TauResult t = tau(g, limits);
  out << "{ \"tau_tilde\": " << t.tau_tilde << ", \"tau\": " << t.tau
      << " }\n";
  return 0;
}

// Move scripting with optional canonical-class transport.
int cmd_move(const std::string& file, const std::string& script,
             const std::string& out_path, bool transport, std::ostream& out) {
  GridDiagram g = parse_grid_file(file);
  const std::vector<Move> moves = parse_move_script(script);
  const ClassicalInvariants inv0 = classical_invariants(g);

  int cum_up = 0, cum_um = 0;  // cumulative U-powers on x_plus / x_minus
  int step = 0;
  for (const Move& m : moves) {
    ++step;
    GridDiagram h = apply_move(g, m);
    if (transport) {
      out << "move " << step << ": " << move_to_string(m) << "\n";
      switch (m.kind) {
        case MoveKind::CyclicRows:
        case MoveKind::CyclicCols:
          out << "  transport: torus translation, classes carried\n";
          break;
        case MoveKind::CommuteCols:
        case MoveKind::CommuteRows: {
          const CanonicalCycles cg = canonical_cycles(g);
          const CanonicalCycles ch = canonical_cycles(h);
          const std::vector<ChainTerm> ip = pentagon_transport(
              g, m.kind, m.index, {ChainTerm{cg.plus_rows, {}}});
          const std::vector<ChainTerm> im = pentagon_transport(
              g, m.kind, m.index, {ChainTerm{cg.minus_rows, {}}});
          const bool ok_p =
              ip.size() == 1 && ip[0].rows == ch.plus_rows && ip[0].u_exp.empty();
          const bool ok_m = im.size() == 1 && im[0].rows == ch.minus_rows &&
                            im[0].u_exp.empty();
          if (!ok_p || !ok_m)
            throw CycleCheckFailed(
                "pentagon transport did not fix the canonical classes");
          out << "  transport: pentagon count, x+ -> x+, x- -> x- "
                 "(u-powers 0)\n";
          break;
        }
        case MoveKind::Stabilize: {
          const int r0 =
              (m.mark == MarkKind::X) ? g.x_rows[m.index] : g.o_rows[m.index];
          const DestabTransportResult tr =
              destabilization_transport(h, m.index + 1, r0 + 1);
          if (!(tr.destabilized == g))
            throw CycleCheckFailed("stabilization round-trip failed");
          cum_up += tr.u_power_plus;
          cum_um += tr.u_power_minus;
          out << "  transport: u_power(x+)=" << tr.u_power_plus
              << " u_power(x-)=" << tr.u_power_minus << "\n";
          break;
        }
        case MoveKind::Destabilize: {
          const DestabTransportResult tr =
              destabilization_transport(g, m.index, m.index2);
          cum_up += tr.u_power_plus;
          cum_um += tr.u_power_minus;
          out << "  transport: u_power(x+)=" << tr.u_power_plus
              << " u_power(x-)=" << tr.u_power_minus << "\n";
          break;
        }
        case MoveKind::ReflectDiag: {
          // Transpose fixes both classes point-wise.
          const CanonicalCycles cg = canonical_cycles(g);
          const CanonicalCycles ch = canonical_cycles(h);
          std::vector<int> mapped(g.n);
          for (int i = 0; i < g.n; ++i) mapped[cg.plus_rows[i]] = i;
          if (mapped != ch.plus_rows)
            throw CycleCheckFailed("diagonal reflection did not fix x+");
          out << "  transport: x+ -> x+ pointwise\n";
          break;
        }
        case MoveKind::ReflectAnti:
        case MoveKind::Rotate180: {
          const SymmetryTransportResult tr = symmetry_transport(g, m.kind);
          if (!tr.plus_to_minus || !tr.minus_to_plus ||
              !tr.gradings_consistent)
            throw CycleCheckFailed("symmetry transport audit failed");
          std::swap(cum_up, cum_um);
          out << "  transport: x+ <-> x- exchanged, rot negated\n";
          break;
        }
      }
    }
    g = std::move(h);
  }
  const ClassicalInvariants inv1 = classical_invariants(g);
  if (transport) {
    out << "tb: " << int_list_text(inv0.tb) << " -> " << int_list_text(inv1.tb)
        << "\n";
    out << "rot: " << int_list_text(inv0.rot) << " -> "
        << int_list_text(inv1.rot) << "\n";
    out << "cumulative u_power(x+)=" << cum_up << " u_power(x-)=" << cum_um
        << "\n";
  }
  write_file(out_path, to_text(g) + "\n");
  out << "applied " << moves.size() << " move" << (moves.size() == 1 ? "" : "s")
      << "; wrote " << out_path << "\n";
  return 0;
}

int cmd_front(const std::string& file, const std::string& out_path,
              std::ostream& out) {
  const GridDiagram g = parse_grid_file(file);
  write_file(out_path, render_front(g));
  out << "wrote " << out_path << "\n";
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"grid-diagram knot Floer invariants"};
  app.require_subcommand(1);

  std::string file, file2, script, out_path, variant = "tilde";
  bool as_json = false, verbose = false, transport = false;
  int depth = 3;
  HomologyLimits limits;

  auto add_limits = [&](CLI::App* cmd) {
    cmd->add_option("--max-n", limits.max_n,
                    "largest grid size for enumeration-backed commands");
    cmd->add_option("--max-bucket", limits.max_bucket,
                    "largest linear-algebra bucket the solver accepts");
  };

  CLI::App* validate = app.add_subcommand("validate", "check a diagram file");
  validate->add_option("file", file)->required();

  CLI::App* invariants =
      app.add_subcommand("invariants", "classical invariants");
  invariants->add_option("file", file)->required();
  invariants->add_flag("--json", as_json);

  CLI::App* gradings =
      app.add_subcommand("gradings", "canonical-cycle grading audit");
  gradings->add_option("file", file)->required();

  CLI::App* homology = app.add_subcommand("homology", "bigraded rank table");
  homology->add_option("file", file)->required();
  homology->add_option("--variant", variant, "tilde");
  homology->add_flag("--json", as_json);
  add_limits(homology);

  CLI::App* lambda = app.add_subcommand("lambda", "canonical-class report");
  lambda->add_option("file", file)->required();
  lambda->add_option("--depth", depth, "non-vanishing check depth");
  lambda->add_flag("--json", as_json);
  add_limits(lambda);

  CLI::App* distinguish =
      app.add_subcommand("distinguish", "compare two diagrams");
  distinguish->add_option("file1", file)->required();
  distinguish->add_option("file2", file2)->required();
  distinguish->add_flag("--verbose", verbose);
  add_limits(distinguish);

  CLI::App* tau_cmd = app.add_subcommand("tau", "concordance invariant");
  tau_cmd->add_option("file", file)->required();
  add_limits(tau_cmd);

  CLI::App* move = app.add_subcommand("move", "apply a move script");
  move->add_option("file", file)->required();
  move->add_option("--script", script)->required();
  move->add_option("-o,--output", out_path)->required();
  move->add_flag("--transport", transport);

  CLI::App* front = app.add_subcommand("front", "render the front projection");
  front->add_option("file", file)->required();
  front->add_option("-o,--output", out_path)->required();

  try {
    // CLI11's vector overload consumes arguments back to front.
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    std::ostringstream so, se;
    const int code = app.exit(e, so, se);
    out << so.str();
    err << se.str();
    return (code == 0) ? 0 : 2;
  }

  try {
    if (*validate) return cmd_validate(file, out);
    if (*invariants) return cmd_invariants(file, as_json, out);
    if (*gradings) return cmd_gradings(file, out);
    if (*homology)
      return cmd_homology(file, variant, as_json, limits, out, err);
    if (*lambda) return cmd_lambda(file, depth, as_json, limits, out, err);
    if (*distinguish)
      return cmd_distinguish(file, file2, verbose, limits, out);
    if (*tau_cmd) return cmd_tau(file, limits, out);
    if (*move) return cmd_move(file, script, out_path, transport, out);
    if (*front) return cmd_front(file, out_path, out);
  } catch (const GridError& e) {
    err << "error: " << e.what() << "\n";
    return (e.code() == ErrorCode::LimitExceeded) ? 3 : 1;
  }
  err << "no subcommand selected\n";
  return 2;
}

}  // namespace gridhfk
