#include "bagwhisker/bag.hpp"

#include <algorithm>
#include <cmath>

#include "bagwhisker/errors.hpp"

namespace bagwhisker {

namespace {

constexpr const char* kModule = "bag";

std::size_t count_contained(const Dataset& data, const ConvexPolygon& poly) {
    const double tol = kContainmentTol * polygon_diameter(poly);
    std::size_t count = 0;
    for (const Point2& p : data.points)
        if (containment_abs(p, poly, tol) != Containment::Outside) ++count;
    return count;
}

// Replace a segment (or single point) by a thin rectangle so ray intersection
// and scaling stay well-defined downstream.
ConvexPolygon thicken(const ConvexPolygon& poly, double eps) {
    const Point2 a = poly.vertices.front();
    const Point2 b = poly.vertices.back();
    double nx, ny;
    const double ex = b.x - a.x, ey = b.y - a.y;
    const double len = std::hypot(ex, ey);
    if (len == 0.0) {
        // single point: tiny axis-aligned square
        return ConvexPolygon{{{a.x - eps, a.y - eps},
                              {a.x + eps, a.y - eps},
                              {a.x + eps, a.y + eps},
                              {a.x - eps, a.y + eps}}};
    }
    nx = -ey / len * eps;
    ny = ex / len * eps;
    return convex_hull(std::vector<Point2>{
        {a.x + nx, a.y + ny}, {a.x - nx, a.y - ny}, {b.x + nx, b.y + ny}, {b.x - nx, b.y - ny}});
}

} // namespace

Bag construct_bag(const Dataset& data, const DepthProfile& profile) {
    const std::size_t n = data.size();
    if (n < kMinRows)
        fail(ErrorKind::TooFewRows, kModule, "need at least 4 points to build a bag");
    if (profile.depths.size() != n)
        fail(ErrorKind::BadConfig, kModule, "depth profile was computed on a different dataset");

    const std::size_t target = (n + 1) / 2; // ceil(n/2)

    // |D_k| for every k via a depth histogram and suffix sums
    std::vector<std::size_t> region_size(static_cast<std::size_t>(profile.max_depth) + 2, 0);
    for (int d : profile.depths) ++region_size[static_cast<std::size_t>(d)];
    for (std::size_t k = region_size.size() - 1; k-- > 1;) region_size[k] += region_size[k + 1];

    int k_star = 1;
    for (int k = 1; k <= profile.max_depth; ++k)
        if (region_size[static_cast<std::size_t>(k)] >= target) k_star = k;
    const std::size_t outer_count = region_size[static_cast<std::size_t>(k_star)];
    const std::size_t inner_count =
        (k_star < profile.max_depth) ? region_size[static_cast<std::size_t>(k_star) + 1] : 0;

    const double eps = 1e-9 * std::fmax(data_diameter(data), 1.0);

    Bag bag;
    if (outer_count == target || inner_count == 0) {
        ConvexPolygon hull = depth_region(data, profile, k_star);
        bag.inner_k = k_star;
        bag.interpolation_t = 0.0;
        if (hull.degenerate()) {
            bag.polygon = thicken(hull, eps);
            bag.degenerate = true;
        } else {
            bag.polygon = std::move(hull);
        }
    } else {
        ConvexPolygon inner = depth_region(data, profile, k_star + 1);
        ConvexPolygon outer = depth_region(data, profile, k_star);
        bool patched = false;
        if (outer.degenerate()) {
            // everything at this depth lies on a line; no room to interpolate
            bag.polygon = thicken(outer, eps);
            bag.inner_k = k_star;
            bag.interpolation_t = 0.0;
            bag.degenerate = true;
            bag.contained_count = count_contained(data, bag.polygon);
            return bag;
        }
        if (inner.degenerate()) {
            inner = thicken(inner, eps);
            patched = true;
        }

        // interpolation center: the depth median, or the inner hull's centroid
        // when ties put the median on (or outside) the inner boundary
        Point2 center = profile.median;
        if (containment(center, inner) != Containment::Inside)
            center = polygon_centroid(inner);

        const double t0 = static_cast<double>(target - inner_count) /
                          static_cast<double>(outer_count - inner_count);
        ConvexPolygon blend = radial_interpolate(inner, outer, t0, center);
        double t = t0;

        // The count-linear t can leave fewer than ceil(n/2) points inside
        // (depth-k* points may sit exactly on the outer hull). Containment is
        // monotone in t, so raise t minimally until the count is met.
        if (count_contained(data, blend) < target) {
            double lo = t0, hi = 1.0;
            for (int it = 0; it < 60; ++it) {
                const double mid = 0.5 * (lo + hi);
                if (count_contained(data, radial_interpolate(inner, outer, mid, center)) >= target)
                    hi = mid;
                else
                    lo = mid;
                if (hi - lo < 1e-12) break;
            }
            t = hi;
            blend = radial_interpolate(inner, outer, t, center);
        }

        bag.polygon = std::move(blend);
        bag.inner_k = k_star + 1;
        bag.interpolation_t = t;
        bag.degenerate = patched;
    }

    // the depth median must end up strictly inside; patch pathological ties by
    // widening the bag with a small square around the median (8x the thickening
    // scale so it clears the OnBoundary tolerance)
    if (containment(profile.median, bag.polygon) != Containment::Inside) {
        const double pad = 8.0 * eps;
        std::vector<Point2> pts = bag.polygon.vertices;
        pts.push_back({profile.median.x - pad, profile.median.y - pad});
        pts.push_back({profile.median.x + pad, profile.median.y - pad});
        pts.push_back({profile.median.x + pad, profile.median.y + pad});
        pts.push_back({profile.median.x - pad, profile.median.y + pad});
        bag.polygon = convex_hull(pts);
        bag.degenerate = true;
    }

    bag.contained_count = count_contained(data, bag.polygon);
    return bag;
}

} // namespace bagwhisker
