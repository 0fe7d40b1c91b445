#pragma once

#include <vector>

#include "bagwhisker/dataset.hpp"
#include "bagwhisker/geometry.hpp"

namespace bagwhisker {

enum class DepthMode { Exact, Approx };

// Tie rule for the depth median when several points attain the maximum depth.
// MeanOfDeepest is the center-of-gravity rule used throughout; CoordinateWise
// is the alternative reading and must be requested explicitly.
enum class MedianRule { MeanOfDeepest, CoordinateWise };

struct DepthOptions {
    DepthMode mode = DepthMode::Exact;
    int directions = 360; // used by Approx
    MedianRule median_rule = MedianRule::MeanOfDeepest;
};

// Mode picked from the sample size: exact up to 5000 points, 360 directions above.
DepthOptions default_depth_options(std::size_t n);

// Exact halfspace depth of theta: the minimum number of data points in any
// closed halfplane whose boundary passes through theta. O(n log n) via an
// angular sweep; point directions are canonicalized so exact scalar multiples
// (collinear and antipodal configurations) compare equal bit-for-bit.
int halfspace_depth_exact(const Point2& theta, const Dataset& data);

// Directional upper bound: minimum over `directions` equispaced halfplane
// normals of the smaller closed side count. Always >= the exact depth.
int halfspace_depth_approx(const Point2& theta, const Dataset& data, int directions);

struct DepthProfile {
    std::vector<int> depths;              // depth of each data point at itself
    int max_depth = 0;
    std::vector<std::size_t> deepest_set; // argmax indices
    Point2 median;                        // depth median per the tie rule
};

DepthProfile depth_profile(const Dataset& data, const DepthOptions& options);

// Convex hull of all data points with depth >= k.
ConvexPolygon depth_region(const Dataset& data, const DepthProfile& profile, int k);

} // namespace bagwhisker
