#pragma once

#include "cupcap/geometry.hpp"

#include <optional>
#include <string>
#include <vector>

namespace cupcap {

struct SvgOptions {
    // Closed overlay polygons get a fill; open ones stay a polyline.
    std::vector<Point> overlay;
    bool overlay_closed = false;
    std::string overlay_name;
};

// Deterministic SVG: points as circles colored by upper/lower class,
// optional witness polyline or polygon. Coordinates become floating
// point only here, at emission.
std::string render_svg(const PointSet& s, const SvgOptions& options);

} // namespace cupcap
