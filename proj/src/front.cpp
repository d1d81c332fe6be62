#include "gridhfk/front.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace gridhfk {
namespace {

// Geometry is tracked in grid coordinates (x rightward, y upward) and only
// projected to screen coordinates when emitted: p = x + y runs rightward on
// screen, q = y - x upward, which is the 45-degree clockwise tilt.
struct Pt {
  double x = 0;
  double y = 0;
};

constexpr double kScale = 42.0;   // screen units per grid unit of p/q
constexpr double kMargin = 46.0;  // frame padding, screen units
constexpr double kTrim = 0.22;    // smoothing reach along an arm, grid units
constexpr double kGap = 0.16;     // under-strand half-gap, grid units
constexpr double kLegendLine = 17.0;

const char* kPalette[8] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                           "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

std::string fmt(double v) {
  if (v > -0.0005 && v < 0) v = 0;  // never print -0.000
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Corner {
  Pt pos;
  bool smooth = false;  // northwest / southeast: quarter-circle
  bool left_cusp = false;
  Pt dir_in;   // unit arm directions in grid coordinates
  Pt dir_out;
};

struct Segment {
  Pt a, b;
  bool vertical = false;
  int line = 0;  // column for vertical strands, row for horizontal ones
};

struct Projector {
  double pmin = 0, qmax = 0;
  Pt screen(const Pt& g) const {
    const double p = g.x + g.y;
    const double q = g.y - g.x;
    return {kMargin + kScale * (p - pmin), kMargin + kScale * (qmax - q)};
  }
};

std::string coords(const Projector& pr, const Pt& g) {
  const Pt s = pr.screen(g);
  return fmt(s.x) + " " + fmt(s.y);
}

}  // namespace

std::string render_front(const GridDiagram& g) {
  const int n = g.n;
  const ComponentPartition part = trace_components(g);
  const ClassicalInvariants inv = classical_invariants(g);
  const std::vector<CrossingInfo> crossings = planar_crossings(g);
  const std::vector<int> x_cols = g.x_cols();

  // Corner sites keyed by (is_x, column).
  std::map<std::pair<bool, int>, CornerSite> site_of;
  for (const MarkCorner& mc : classify_corners(g))
    site_of[{mc.is_x, mc.col}] = mc.site;

  // Trace each component once: X -> O vertically inside a column, O -> X
  // horizontally inside a row.
  std::vector<std::vector<Corner>> comp_corners(part.count);
  std::vector<std::vector<Segment>> comp_segs(part.count);
  double pmin = 1e9, pmax = -1e9, qmin = 1e9, qmax = -1e9;
  for (int comp = 0; comp < part.count; ++comp) {
    std::vector<Corner>& corners = comp_corners[comp];
    std::vector<Segment>& segs = comp_segs[comp];
    const int start = part.columns[comp][0];
    int c = start;
    do {
      const Pt px{c + 0.5, g.x_rows[c] + 0.5};
      const Pt po{c + 0.5, g.o_rows[c] + 0.5};
      const int next = x_cols[g.o_rows[c]];
      const Pt pnx{next + 0.5, g.x_rows[next] + 0.5};
      for (bool is_x : {true, false}) {
        Corner cr;
        cr.pos = is_x ? px : po;
        const CornerSite site = site_of[{is_x, c}];
        cr.smooth = (site == CornerSite::NW || site == CornerSite::SE);
        cr.left_cusp = (site == CornerSite::SW);
        corners.push_back(cr);
      }
      segs.push_back({px, po, true, c});
      segs.push_back({po, pnx, false, g.o_rows[c]});
      c = next;
    } while (c != start);
    for (const Corner& cr : corners) {
      pmin = std::min(pmin, cr.pos.x + cr.pos.y);
      pmax = std::max(pmax, cr.pos.x + cr.pos.y);
      qmin = std::min(qmin, cr.pos.y - cr.pos.x);
      qmax = std::max(qmax, cr.pos.y - cr.pos.x);
    }
    // Arm directions at each corner.
    const size_t m = segs.size();
    for (size_t k = 0; k < m; ++k) {
      const Segment& in = segs[(k + m - 1) % m];
      const Segment& out = segs[k];
      auto unit = [](const Pt& a, const Pt& b) {
        const double dx = b.x - a.x, dy = b.y - a.y;
        const double len = std::max(std::abs(dx), std::abs(dy));
        return Pt{dx / len, dy / len};
      };
      corners[k].dir_in = unit(in.a, in.b);
      corners[k].dir_out = unit(out.a, out.b);
    }
  }

  const Projector pr{pmin, qmax};
  const double fig_w = 2 * kMargin + kScale * (pmax - pmin);
  const double fig_h = 2 * kMargin + kScale * (qmax - qmin);
  const double legend_h = kLegendLine * (part.count + 1) + 12.0;
  const double W = fig_w;
  const double H = fig_h + legend_h;

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(W) +
         "\" height=\"" + fmt(H) + "\" viewBox=\"0 0 " + fmt(W) + " " +
         fmt(H) + "\">\n";

  // Machine-readable summary of the render model.
  svg += "<metadata id=\"front-data\">{\"n\":" + std::to_string(n) +
         ",\"components\":" + std::to_string(part.count) +
         ",\"writhe_grid\":" + std::to_string(inv.writhe_grid) +
         ",\"writhe_front\":" + std::to_string(inv.writhe_front) + ",\"tb\":[";
  for (int i = 0; i < part.count; ++i)
    svg += (i ? "," : "") + std::to_string(inv.tb[i]);
  svg += "],\"rot\":[";
  for (int i = 0; i < part.count; ++i)
    svg += (i ? "," : "") + std::to_string(inv.rot[i]);
  svg += "],\"cusps_up\":[";
  for (int i = 0; i < part.count; ++i)
    svg += (i ? "," : "") + std::to_string(inv.cusps_up[i]);
  svg += "],\"cusps_down\":[";
  for (int i = 0; i < part.count; ++i)
    svg += (i ? "," : "") + std::to_string(inv.cusps_down[i]);
  svg += "],\"crossings\":[";
  for (size_t i = 0; i < crossings.size(); ++i) {
    svg += (i ? "," : "");
    svg += "{\"col\":" + std::to_string(crossings[i].col) +
           ",\"row\":" + std::to_string(crossings[i].row) +
           ",\"sign_front\":" + std::to_string(-crossings[i].sign) + "}";
  }
  svg += "]}</metadata>\n";

  svg += "<rect x=\"0\" y=\"0\" width=\"" + fmt(W) + "\" height=\"" + fmt(H) +
         "\" fill=\"#ffffff\"/>\n";

  const double arc_r = kTrim * kScale * std::sqrt(2.0);
  std::string markers;

  for (int comp = 0; comp < part.count; ++comp) {
    const std::vector<Corner>& corners = comp_corners[comp];
    const std::vector<Segment>& segs = comp_segs[comp];
    const char* color = kPalette[comp % 8];
    const size_t m = segs.size();

    auto trimmed = [&](size_t k, bool at_start) {
      const Segment& s = segs[k];
      const Corner& cr = corners[at_start ? k : (k + 1) % m];
      if (!cr.smooth) return at_start ? s.a : s.b;
      const double dx = (s.b.x - s.a.x), dy = (s.b.y - s.a.y);
      const double len = std::max(std::abs(dx), std::abs(dy));
      const double ux = dx / len, uy = dy / len;
      if (at_start) return Pt{s.a.x + ux * kTrim, s.a.y + uy * kTrim};
      return Pt{s.b.x - ux * kTrim, s.b.y - uy * kTrim};
    };

    // Pieces of a segment after the smoothing trim and the crossing gaps.
    auto pieces_of = [&](size_t k) {
      const Segment& s = segs[k];
      const Pt a = trimmed(k, true), b = trimmed(k, false);
      std::vector<std::pair<Pt, Pt>> pieces;
      if (!s.vertical) {
        pieces.emplace_back(a, b);
        return pieces;
      }
      const double dir = (b.y > a.y) ? 1.0 : -1.0;
      const double len = std::abs(b.y - a.y);
      std::vector<std::pair<double, double>> cuts;
      for (const CrossingInfo& cx : crossings) {
        if (cx.col != s.line) continue;
        const double t = ((cx.row + 0.5) - a.y) * dir;
        if (t > 0 && t < len)
          cuts.emplace_back(std::max(0.0, t - kGap), std::min(len, t + kGap));
      }
      std::sort(cuts.begin(), cuts.end());
      double at = 0;
      auto point_at = [&](double t) { return Pt{a.x, a.y + dir * t}; };
      for (const auto& cut : cuts) {
        if (cut.first > at) pieces.emplace_back(point_at(at), point_at(cut.first));
        at = std::max(at, cut.second);
      }
      if (at < len) pieces.emplace_back(point_at(at), point_at(len));
      return pieces;
    };

    std::string d;
    for (size_t k = 0; k < m; ++k) {
      const auto pieces = pieces_of(k);
      for (size_t i = 0; i < pieces.size(); ++i) {
        if (k == 0 && i == 0)
          d += "M" + coords(pr, pieces[i].first);
        else if (i > 0)
          d += "M" + coords(pr, pieces[i].first);
        d += "L" + coords(pr, pieces[i].second);
      }
      // Connector through the corner closing this segment.
      const Corner& cr = corners[(k + 1) % m];
      if (cr.smooth) {
        const Pt to = trimmed((k + 1) % m, true);
        // Sweep by the turn direction in screen coordinates (y downward):
        // screen direction of a grid vector (dx,dy) is (dx+dy, dx-dy).
        const double uix = cr.dir_in.x + cr.dir_in.y;
        const double uiy = cr.dir_in.x - cr.dir_in.y;
        const double uox = cr.dir_out.x + cr.dir_out.y;
        const double uoy = cr.dir_out.x - cr.dir_out.y;
        const int sweep = (uix * uoy - uiy * uox) > 0 ? 1 : 0;
        d += "A" + fmt(arc_r) + " " + fmt(arc_r) + " 0 0 " +
             std::to_string(sweep) + " " + coords(pr, to);
      }
      // Cusps need no connector: neither adjacent segment is trimmed there.
    }
    svg += "<path d=\"" + d + "\" fill=\"none\" stroke=\"" + color +
           "\" stroke-width=\"2.4\" stroke-linecap=\"round\"/>\n";

    for (size_t k = 0; k < corners.size(); ++k) {
      const Corner& cr = corners[k];
      if (cr.smooth) continue;
      const Pt s = pr.screen(cr.pos);
      markers += "<circle class=\"cusp cusp-";
      markers += cr.left_cusp ? "left" : "right";
      markers += "\" cx=\"" + fmt(s.x) + "\" cy=\"" + fmt(s.y) +
                 "\" r=\"3.1\" fill=\"" + std::string(color) + "\"/>\n";
    }
  }
  svg += markers;

  // Legend.
  double ly = fig_h + kLegendLine;
  svg += "<text x=\"" + fmt(kMargin * 0.5) + "\" y=\"" + fmt(ly) +
         "\" font-family=\"monospace\" font-size=\"13\" fill=\"#333333\">"
         "front projection, n=" +
         std::to_string(n) + ", front writhe=" +
         std::to_string(inv.writhe_front) + "</text>\n";
  for (int i = 0; i < part.count; ++i) {
    ly += kLegendLine;
    svg += "<text x=\"" + fmt(kMargin * 0.5) + "\" y=\"" + fmt(ly) +
           "\" font-family=\"monospace\" font-size=\"13\" fill=\"" +
           kPalette[i % 8] + "\">component " + std::to_string(i) +
           ": tb=" + std::to_string(inv.tb[i]) +
           " rot=" + std::to_string(inv.rot[i]) + " cusps=" +
           std::to_string(inv.cusps_up[i] + inv.cusps_down[i]) + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

}  // namespace gridhfk
