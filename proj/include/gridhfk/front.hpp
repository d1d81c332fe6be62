// Front-projection rendering.
//
// The planar link of a grid diagram becomes a Legendrian front by smoothing
// the northwest and southeast corners, treating the northeast and southwest
// corners as cusps, and tilting the picture 45 degrees clockwise.  The
// renderer draws exactly that as a standalone SVG document: quarter-circle
// arcs at smoothed corners, sharp cusp points with markers, gaps in the
// strand that passes underneath at each crossing (the steeper one), one
// color per component, and a legend with the per-component classical
// invariants.  Identical diagrams render to byte-identical documents.
#pragma once

#include <string>

#include "gridhfk/grid.hpp"

namespace gridhfk {

std::string render_front(const GridDiagram& g);

}  // namespace gridhfk
