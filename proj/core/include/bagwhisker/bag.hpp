#pragma once

#include "bagwhisker/dataset.hpp"
#include "bagwhisker/depth.hpp"
#include "bagwhisker/geometry.hpp"

namespace bagwhisker {

// Central region holding roughly the deepest half of the data. When no depth
// contour matches ceil(n/2) exactly, the bag is a radial blend between the two
// bracketing depth hulls; interpolation_t records the blend actually used.
struct Bag {
    ConvexPolygon polygon;   // always area-bearing (thickened when needed)
    int inner_k = 0;         // depth level of the inner contour of the blend
    double interpolation_t = 0.0;
    std::size_t contained_count = 0; // points Inside-or-OnBoundary
    bool degenerate = false;         // polygon had to be thickened or patched
};

Bag construct_bag(const Dataset& data, const DepthProfile& profile);

} // namespace bagwhisker
