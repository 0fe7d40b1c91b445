#include "bagwhisker/depth.hpp"

#include <algorithm>
#include <cmath>

#include "bagwhisker/errors.hpp"

namespace bagwhisker {

namespace {

constexpr const char* kModule = "depth";
constexpr double kPi = 3.14159265358979323846;

// Canonical form of a nonzero direction: a half-plane bit plus a pseudo-angle
// key that is strictly monotone in the angle over [0, pi). The vector is
// normalized to the closed upper halfplane and divided by its largest
// component first, so directions that are exact real multiples of one another
// (same or opposite) produce bit-identical keys. That keeps the sweep exact on
// grid-like data where antipodal and collinear ties are common.
struct DirKey {
    bool lower;  // true when the original vector pointed into the open lower halfplane
    double key;  // pseudo-angle in [0, 2)
};

DirKey canonical_direction(double dx, double dy) {
    const bool lower = (dy < 0.0) || (dy == 0.0 && dx < 0.0);
    double wx = lower ? -dx : dx;
    double wy = lower ? -dy : dy;
    const double m = std::max(std::fabs(wx), wy);
    wx /= m;
    wy /= m;
    const double key = (wx >= 0.0) ? wy / (wx + wy) : 2.0 - wy / (wy - wx);
    return {lower, key};
}

// #elements > x and #elements <= x in a sorted array.
struct SideCounts {
    int above;
    int at_or_below;
};

SideCounts side_counts(const std::vector<double>& sorted, double x) {
    const auto it = std::upper_bound(sorted.begin(), sorted.end(), x);
    const int le = static_cast<int>(it - sorted.begin());
    return {static_cast<int>(sorted.size()) - le, le};
}

// Depth of theta given the canonical directions of all non-coincident points.
// The minimum closed-halfplane count equals m minus the maximum number of
// points inside an open half-circle of directions; every maximal open window
// is anchored at some point's angle, giving the two count families below.
int depth_from_directions(const std::vector<DirKey>& dirs, int coincident) {
    const int m = static_cast<int>(dirs.size());
    if (m == 0) return coincident;

    std::vector<double> upper, lower;
    upper.reserve(dirs.size());
    lower.reserve(dirs.size());
    for (const DirKey& d : dirs) (d.lower ? lower : upper).push_back(d.key);
    std::sort(upper.begin(), upper.end());
    std::sort(lower.begin(), lower.end());

    int max_open = 0;
    for (const DirKey& d : dirs) {
        const std::vector<double>& own = d.lower ? lower : upper;
        const std::vector<double>& opp = d.lower ? upper : lower;
        const SideCounts own_c = side_counts(own, d.key);
        const SideCounts opp_c = side_counts(opp, d.key);
        // window starting just past this angle: (g, g + pi]
        const int after = own_c.above + opp_c.at_or_below;
        // window ending at this angle: (g - pi, g]
        const int until = own_c.at_or_below + opp_c.above;
        max_open = std::max({max_open, after, until});
    }
    return coincident + (m - max_open);
}

} // namespace

DepthOptions default_depth_options(std::size_t n) {
    DepthOptions opts;
    opts.mode = (n > 5000) ? DepthMode::Approx : DepthMode::Exact;
    return opts;
}

int halfspace_depth_exact(const Point2& theta, const Dataset& data) {
    if (data.points.empty()) fail(ErrorKind::EmptyInput, kModule, "depth of empty dataset");
    int coincident = 0;
    std::vector<DirKey> dirs;
    dirs.reserve(data.size());
    for (const Point2& z : data.points) {
        const double dx = z.x - theta.x;
        const double dy = z.y - theta.y;
        if (dx == 0.0 && dy == 0.0) {
            ++coincident; // lies in every closed halfplane through theta
        } else {
            dirs.push_back(canonical_direction(dx, dy));
        }
    }
    return depth_from_directions(dirs, coincident);
}

int halfspace_depth_approx(const Point2& theta, const Dataset& data, int directions) {
    if (data.points.empty()) fail(ErrorKind::EmptyInput, kModule, "depth of empty dataset");
    if (directions < 2)
        fail(ErrorKind::BadDirectionCount, kModule, "need at least 2 directions");

    const int n = static_cast<int>(data.size());
    int best = n;
    for (int k = 0; k < directions && best > 0; ++k) {
        const double phi = kPi * static_cast<double>(k) / static_cast<double>(directions);
        const double ux = std::cos(phi), uy = std::sin(phi);
        const double p0 = ux * theta.x + uy * theta.y;
        int ge = 0, le = 0;
        for (const Point2& z : data.points) {
            const double p = ux * z.x + uy * z.y;
            if (p >= p0) ++ge;
            if (p <= p0) ++le;
        }
        best = std::min({best, ge, le});
    }
    return best;
}

DepthProfile depth_profile(const Dataset& data, const DepthOptions& options) {
    const std::size_t n = data.size();
    DepthProfile profile;
    profile.depths.assign(n, 0);

    if (options.mode == DepthMode::Exact) {
        for (std::size_t i = 0; i < n; ++i)
            profile.depths[i] = halfspace_depth_exact(data[i], data);
    } else {
        const int K = options.directions;
        if (K < 2) fail(ErrorKind::BadDirectionCount, kModule, "need at least 2 directions");
        std::vector<int> best(n, static_cast<int>(n));
        std::vector<double> proj(n), sorted(n);
        for (int k = 0; k < K; ++k) {
            const double phi = kPi * static_cast<double>(k) / static_cast<double>(K);
            const double ux = std::cos(phi), uy = std::sin(phi);
            for (std::size_t i = 0; i < n; ++i)
                proj[i] = ux * data[i].x + uy * data[i].y;
            sorted = proj;
            std::sort(sorted.begin(), sorted.end());
            for (std::size_t i = 0; i < n; ++i) {
                const SideCounts c = side_counts(sorted, proj[i]);
                const int lt = static_cast<int>(
                    std::lower_bound(sorted.begin(), sorted.end(), proj[i]) - sorted.begin());
                const int ge = static_cast<int>(n) - lt;
                best[i] = std::min({best[i], ge, c.at_or_below});
            }
        }
        profile.depths = std::move(best);
    }

    profile.max_depth = *std::max_element(profile.depths.begin(), profile.depths.end());
    for (std::size_t i = 0; i < n; ++i)
        if (profile.depths[i] == profile.max_depth) profile.deepest_set.push_back(i);

    if (options.median_rule == MedianRule::MeanOfDeepest) {
        double sx = 0.0, sy = 0.0;
        for (std::size_t i : profile.deepest_set) {
            sx += data[i].x;
            sy += data[i].y;
        }
        const double m = static_cast<double>(profile.deepest_set.size());
        profile.median = {sx / m, sy / m};
    } else {
        std::vector<double> xs, ys;
        for (std::size_t i : profile.deepest_set) {
            xs.push_back(data[i].x);
            ys.push_back(data[i].y);
        }
        auto med = [](std::vector<double>& v) {
            std::sort(v.begin(), v.end());
            const std::size_t m = v.size();
            return (m % 2 == 1) ? v[m / 2] : 0.5 * (v[m / 2 - 1] + v[m / 2]);
        };
        profile.median = {med(xs), med(ys)};
    }
    return profile;
}

ConvexPolygon depth_region(const Dataset& data, const DepthProfile& profile, int k) {
    std::vector<Point2> pts;
    for (std::size_t i = 0; i < data.size(); ++i)
        if (profile.depths[i] >= k) pts.push_back(data[i]);
    if (pts.empty())
        fail(ErrorKind::EmptyRegion, kModule, "no points with depth >= " + std::to_string(k));
    return convex_hull(pts);
}

} // namespace bagwhisker
