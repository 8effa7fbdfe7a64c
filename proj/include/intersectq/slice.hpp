#ifndef INTERSECTQ_SLICE_HPP
#define INTERSECTQ_SLICE_HPP

#include "intersectq/honeycomb.hpp"

#include <string>
#include <vector>

namespace intersectq {

/// Rectangle in the two in-plane coordinates (in increasing axis order).
struct SliceWindow {
    Rational umin, umax, vmin, vmax;
};

struct SlicePolygon {
    std::size_t cls = 0;     // class index into the report
    std::size_t cell = 0;    // index into report.cells
    FieldVec translation;    // intersection-lattice vector applied to the canonical cell
    std::vector<FieldVec> vertices;  // counter-clockwise, in-plane coordinates
    QuadElem area;
};

/**
 * Cross-section of a 3-D honeycomb by the plane x_axis = c, clipped to the
 * window. Every translate of every enumerated cell that meets the window in
 * positive area contributes one polygon; zero-area contacts are dropped.
 * A facet lying in the plane is counted once, for the cell on the upper side.
 */
std::vector<SlicePolygon> plane_slice(const Honeycomb& h, const HoneycombReport& report, std::size_t axis,
                                      const Rational& c, const SliceWindow& window);

/// One <polygon> per slice piece, filled by class, 1-based class labels in <title>.
std::string slice_to_svg(const std::vector<SlicePolygon>& polygons, const SliceWindow& window,
                         double pixels_per_unit = 60);

/// Parses "z=0.35" style plane specs into (axis, value).
std::pair<std::size_t, Rational> parse_plane(const std::string& spec);

}  // namespace intersectq

#endif
