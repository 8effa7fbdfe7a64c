#ifndef INTERSECTQ_POLYTOPE_HPP
#define INTERSECTQ_POLYTOPE_HPP

#include "intersectq/exactmath.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace intersectq {

/// Bounding hyperplane normal . x <= offset with the (component, relevant vector) pairs that produced it.
struct Plane {
    FieldVec normal;
    QuadElem offset;
    std::vector<std::pair<std::size_t, std::size_t>> sources;
};

struct Moments {
    QuadElem volume;
    FieldVec centroid;
    /// Integral of |x - centroid|^2 over the polytope.
    QuadElem second_moment;
};

/**
 * Full-dimensional convex polytope with exact vertices and face data.
 *
 * `facets[k]` lists the vertex indices on facet k; `facet_planes[k]` is the
 * index into `planes` of its supporting hyperplane (planes that do not carry
 * a facet are kept, since they still bound the polytope).
 */
struct Polytope {
    std::size_t dim = 0;
    std::vector<Plane> planes;
    std::vector<FieldVec> vertices;
    std::vector<std::vector<std::size_t>> facets;
    std::vector<std::size_t> facet_planes;
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    Moments moments;
};

/**
 * Intersection of halfspaces in R^n. Coincident hyperplanes are merged
 * (source tags concatenated; of two parallel halfspaces the tighter wins).
 * Returns nullopt when the intersection is not full-dimensional.
 * The region must be bounded.
 */
std::optional<Polytope> polytope_from_halfspaces(std::vector<Plane> planes, std::size_t n);

/// Convex hull of a full-dimensional point set (all points must be vertices or are dropped).
Polytope polytope_from_vertices(const std::vector<FieldVec>& points);

/// Volume, centroid and second moment from vertices and facet vertex sets.
Moments polytope_moments(const std::vector<FieldVec>& vertices, const std::vector<std::vector<std::size_t>>& facets,
                         std::size_t n);

/// Dimension of the affine hull of the indexed points.
std::size_t affine_dim(const std::vector<FieldVec>& points, const std::vector<std::size_t>& idx);

/// Polygon vertices in counter-clockwise order (2-D polytopes only).
std::vector<FieldVec> polygon_cycle(const Polytope& p);

}  // namespace intersectq

#endif
