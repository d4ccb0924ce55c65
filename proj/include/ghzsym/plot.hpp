#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ghzsym/geometry.hpp"

namespace ghzsym {

struct PlotOptions {
    std::vector<SymCoords> markers;
    std::vector<Line> lines;    // drawn clipped to the triangle
    bool pseudo_pure = false;   // magenta mixing segment from the origin to the GHZ_+ corner
    int curve_samples = 512;
};

/// Closed polygon tracing the outer boundary of the region of states of at
/// most the given class. GhzClass yields the full triangle; WClass uses
/// curve_samples points along the upper boundary curve.
std::vector<SymCoords> region_polygon(SloccClass cls, int curve_samples);

/// Signed shoelace area of a closed polygon.
double polygon_area(const std::vector<SymCoords>& poly);

/// Chord of the line inside the triangle, or nothing when the line misses it.
std::optional<std::pair<SymCoords, SymCoords>> clip_line_to_triangle(const Line& l);

/// Standalone SVG 1.1 document of the class diagram: shaded regions, the
/// boundary curve, and the requested overlays. Deterministic for fixed
/// options, byte for byte.
std::string render_svg(const PlotOptions& opts);

} // namespace ghzsym
