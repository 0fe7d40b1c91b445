#pragma once

#include <span>
#include <vector>

#include "bagwhisker/dataset.hpp"

namespace bagwhisker {

enum class Containment { Inside, OnBoundary, Outside };

// Convex polygon, vertices counterclockwise with no redundant collinear
// vertices. Fewer than 3 vertices marks a degenerate form (segment or point),
// which the bag construction may produce and later thickens.
struct ConvexPolygon {
    std::vector<Point2> vertices;

    bool degenerate() const { return vertices.size() < 3; }
    std::size_t size() const { return vertices.size(); }
};

// Points lying within tol * diameter of the boundary classify as OnBoundary;
// a point exactly on the fence is therefore never an outlier.
constexpr double kContainmentTol = 1e-9;

// Monotone chain; ties broken lexicographically by (x, y). Collinear points
// interior to hull edges are dropped. All inputs collinear yields the extreme
// segment (or a single point) with the degenerate flag implied.
ConvexPolygon convex_hull(std::span<const Point2> points);

double polygon_diameter(const ConvexPolygon& poly);

// Area centroid (vertex mean for degenerate polygons); strictly interior for
// nondegenerate input.
Point2 polygon_centroid(const ConvexPolygon& poly);

Containment containment(const Point2& p, const ConvexPolygon& poly,
                        double rel_tol = kContainmentTol);

// Same test with a precomputed absolute boundary tolerance; avoids the
// per-call diameter scan when classifying many points against one polygon.
Containment containment_abs(const Point2& p, const ConvexPolygon& poly, double abs_tol);

// Unique crossing of the ray center->through with the polygon boundary.
// center must be strictly inside, through distinct from center.
Point2 ray_boundary_intersection(const Point2& center, const Point2& through,
                                 const ConvexPolygon& poly);

// v -> center + factor * (v - center), factor > 0.
ConvexPolygon scale_polygon(const ConvexPolygon& poly, const Point2& center, double factor);

// Blend between nested convex polygons: over the union fan of both polygons'
// vertex rays from center, each boundary radius moves linearly from inner to
// outer with t in [0, 1]. The sampled chain is re-hulled, so the result stays
// convex and nested: inner <= result <= outer.
ConvexPolygon radial_interpolate(const ConvexPolygon& inner, const ConvexPolygon& outer,
                                 double t, const Point2& center);

} // namespace bagwhisker
