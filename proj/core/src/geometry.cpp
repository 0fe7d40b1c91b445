#include "bagwhisker/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bagwhisker/errors.hpp"

namespace bagwhisker {

namespace {

constexpr const char* kModule = "geometry";

double cross(const Point2& o, const Point2& a, const Point2& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

double dist(const Point2& a, const Point2& b) { return std::hypot(a.x - b.x, a.y - b.y); }

double point_segment_distance(const Point2& p, const Point2& a, const Point2& b) {
    const double vx = b.x - a.x, vy = b.y - a.y;
    const double wx = p.x - a.x, wy = p.y - a.y;
    const double vv = vx * vx + vy * vy;
    if (vv == 0.0) return dist(p, a);
    double t = (wx * vx + wy * vy) / vv;
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(wx - t * vx, wy - t * vy);
}

// Pseudo-angle over the full circle, strictly monotone in the true angle and
// identical for directions that are exact scalar multiples of each other
// (the vector is first reduced by its largest component, so equal directions
// map to equal keys bit-for-bit). Used to order interpolation fan rays.
double full_circle_key(double dx, double dy) {
    const bool lower = (dy < 0.0) || (dy == 0.0 && dx < 0.0);
    double wx = lower ? -dx : dx;
    double wy = lower ? -dy : dy;
    const double m = std::max(std::fabs(wx), wy);
    wx /= m;
    wy /= m;
    const double upper_key = (wx >= 0.0) ? wy / (wx + wy) : 2.0 - wy / (wy - wx);
    return lower ? upper_key + 2.0 : upper_key;
}

} // namespace

ConvexPolygon convex_hull(std::span<const Point2> points) {
    if (points.empty()) fail(ErrorKind::EmptyInput, kModule, "convex_hull of no points");

    std::vector<Point2> pts(points.begin(), points.end());
    std::sort(pts.begin(), pts.end(),
              [](const Point2& a, const Point2& b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());

    if (pts.size() == 1) return ConvexPolygon{{pts[0]}};

    const std::size_t n = pts.size();
    std::vector<Point2> hull(2 * n);
    std::size_t k = 0;
    for (std::size_t i = 0; i < n; ++i) { // lower chain
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    for (std::size_t i = n - 1, lo = k + 1; i-- > 0;) { // upper chain
        while (k >= lo && cross(hull[k - 2], hull[k - 1], pts[i]) <= 0.0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1); // last point repeats the first; collinear input leaves a segment
    return ConvexPolygon{std::move(hull)};
}

double polygon_diameter(const ConvexPolygon& poly) {
    double best = 0.0;
    for (std::size_t i = 0; i < poly.vertices.size(); ++i)
        for (std::size_t j = i + 1; j < poly.vertices.size(); ++j)
            best = std::max(best, dist(poly.vertices[i], poly.vertices[j]));
    return best;
}

Point2 polygon_centroid(const ConvexPolygon& poly) {
    if (poly.vertices.empty()) fail(ErrorKind::EmptyInput, kModule, "centroid of empty polygon");
    if (poly.degenerate()) {
        double sx = 0.0, sy = 0.0;
        for (const Point2& v : poly.vertices) {
            sx += v.x;
            sy += v.y;
        }
        const double n = static_cast<double>(poly.vertices.size());
        return {sx / n, sy / n};
    }
    // area-weighted fan decomposition about the first vertex
    const Point2& o = poly.vertices[0];
    double area2 = 0.0, cx = 0.0, cy = 0.0;
    for (std::size_t i = 1; i + 1 < poly.vertices.size(); ++i) {
        const Point2& a = poly.vertices[i];
        const Point2& b = poly.vertices[i + 1];
        const double w = cross(o, a, b);
        area2 += w;
        cx += w * (o.x + a.x + b.x);
        cy += w * (o.y + a.y + b.y);
    }
    if (area2 == 0.0) { // numerically flat; fall back to vertex mean
        double sx = 0.0, sy = 0.0;
        for (const Point2& v : poly.vertices) {
            sx += v.x;
            sy += v.y;
        }
        const double n = static_cast<double>(poly.vertices.size());
        return {sx / n, sy / n};
    }
    return {cx / (3.0 * area2), cy / (3.0 * area2)};
}

Containment containment_abs(const Point2& p, const ConvexPolygon& poly, double abs_tol) {
    if (poly.degenerate())
        fail(ErrorKind::DegeneratePolygon, kModule, "containment needs an area-bearing polygon");

    double boundary_dist = std::numeric_limits<double>::infinity();
    bool inside = true;
    const std::size_t n = poly.vertices.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = poly.vertices[i];
        const Point2& b = poly.vertices[(i + 1) % n];
        boundary_dist = std::min(boundary_dist, point_segment_distance(p, a, b));
        if (cross(a, b, p) < 0.0) inside = false;
    }
    if (boundary_dist <= abs_tol) return Containment::OnBoundary;
    return inside ? Containment::Inside : Containment::Outside;
}

Containment containment(const Point2& p, const ConvexPolygon& poly, double rel_tol) {
    if (poly.degenerate())
        fail(ErrorKind::DegeneratePolygon, kModule, "containment needs an area-bearing polygon");
    return containment_abs(p, poly, rel_tol * polygon_diameter(poly));
}

Point2 ray_boundary_intersection(const Point2& center, const Point2& through,
                                 const ConvexPolygon& poly) {
    if (poly.degenerate())
        fail(ErrorKind::DegeneratePolygon, kModule, "ray intersection needs an area-bearing polygon");
    const double dx = through.x - center.x;
    const double dy = through.y - center.y;
    if (dx == 0.0 && dy == 0.0)
        fail(ErrorKind::ZeroDirection, kModule, "ray direction is the zero vector");
    if (containment(center, poly) != Containment::Inside)
        fail(ErrorKind::CenterNotInterior, kModule, "ray center must be strictly inside");

    const std::size_t n = poly.vertices.size();
    double best_t = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = poly.vertices[i];
        const Point2& b = poly.vertices[(i + 1) % n];
        const double ex = b.x - a.x, ey = b.y - a.y;
        const double denom = dx * ey - dy * ex;
        if (denom == 0.0) continue; // ray parallel to this edge
        const double ax = a.x - center.x, ay = a.y - center.y;
        const double t = (ax * ey - ay * ex) / denom;
        const double s = (ax * dy - ay * dx) / denom;
        if (t > 0.0 && s >= -1e-12 && s <= 1.0 + 1e-12) best_t = std::min(best_t, t);
    }
    if (!std::isfinite(best_t))
        fail(ErrorKind::CenterNotInterior, kModule, "ray never crossed the boundary");
    return {center.x + best_t * dx, center.y + best_t * dy};
}

ConvexPolygon scale_polygon(const ConvexPolygon& poly, const Point2& center, double factor) {
    if (!(factor > 0.0))
        fail(ErrorKind::NonPositiveFactor, kModule, "scale factor must be positive");
    ConvexPolygon out;
    out.vertices.reserve(poly.vertices.size());
    for (const Point2& v : poly.vertices)
        out.vertices.push_back(
            {center.x + factor * (v.x - center.x), center.y + factor * (v.y - center.y)});
    return out;
}

ConvexPolygon radial_interpolate(const ConvexPolygon& inner, const ConvexPolygon& outer,
                                 double t, const Point2& center) {
    if (inner.degenerate() || outer.degenerate())
        fail(ErrorKind::DegeneratePolygon, kModule, "interpolation needs area-bearing polygons");
    if (!(t >= 0.0 && t <= 1.0))
        fail(ErrorKind::DomainError, kModule, "interpolation parameter outside [0,1]");
    if (containment(center, inner) != Containment::Inside)
        fail(ErrorKind::CenterNotInterior, kModule, "interpolation center must be inside the inner polygon");
    for (const Point2& v : inner.vertices)
        if (containment(v, outer) == Containment::Outside)
            fail(ErrorKind::NotNested, kModule, "inner polygon is not contained in outer");

    if (t == 0.0) return inner;
    if (t == 1.0) return outer;

    // union fan of both polygons' vertex directions, deduplicated by exact key
    struct Ray {
        double key;
        Point2 dir;
    };
    std::vector<Ray> rays;
    rays.reserve(inner.vertices.size() + outer.vertices.size());
    auto add_rays = [&](const ConvexPolygon& poly) {
        for (const Point2& v : poly.vertices) {
            const double dx = v.x - center.x, dy = v.y - center.y;
            if (dx == 0.0 && dy == 0.0) continue;
            rays.push_back({full_circle_key(dx, dy), {dx, dy}});
        }
    };
    add_rays(inner);
    add_rays(outer);
    std::sort(rays.begin(), rays.end(), [](const Ray& a, const Ray& b) { return a.key < b.key; });
    rays.erase(std::unique(rays.begin(), rays.end(),
                           [](const Ray& a, const Ray& b) { return a.key == b.key; }),
               rays.end());

    std::vector<Point2> blend;
    blend.reserve(rays.size());
    for (const Ray& ray : rays) {
        const Point2 probe{center.x + ray.dir.x, center.y + ray.dir.y};
        const Point2 bi = ray_boundary_intersection(center, probe, inner);
        const Point2 bo = ray_boundary_intersection(center, probe, outer);
        const double ri = dist(bi, center);
        const double ro = dist(bo, center);
        const double r = ri + t * (ro - ri);
        const double len = std::hypot(ray.dir.x, ray.dir.y);
        blend.push_back({center.x + ray.dir.x / len * r, center.y + ray.dir.y / len * r});
    }
    return convex_hull(blend);
}

} // namespace bagwhisker
