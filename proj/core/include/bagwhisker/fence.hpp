#pragma once

#include <span>
#include <vector>

#include "bagwhisker/bag.hpp"
#include "bagwhisker/dataset.hpp"
#include "bagwhisker/depth.hpp"
#include "bagwhisker/geometry.hpp"
#include "bagwhisker/inference.hpp"
#include "bagwhisker/robust_scatter.hpp"

namespace bagwhisker {

enum class PointClass { InBag, Outer, Outlier };

// Segment from the bag boundary to an outer point, drawn with an opacity ramp.
struct Whisker {
    std::size_t index = 0;
    Point2 from; // intersection of the bag boundary with the ray center->point
    Point2 to;   // the data point itself
};

// Everything one adaptive run produces; the single serializable result object.
struct BagplotModel {
    Dataset data;
    DepthProfile profile;
    Bag bag;
    RobustEstimate estimate;
    TestOutcome outcome;
    double lambda_stat = 0.0;
    double lambda_data = 0.0;
    double lambda = 1.0; // max(lambda_stat, lambda_data, 1)
    ConvexPolygon fence;
    std::vector<PointClass> classification;
    std::vector<Whisker> whiskers;

    std::vector<std::size_t> outlier_indices() const;
};

// Fixed-factor baseline: fence = bag x 3, loop = hull of the non-outliers.
struct ClassicModel {
    Dataset data;
    DepthProfile profile;
    Bag bag;
    ConvexPolygon fence3;
    ConvexPolygon loop_hull;
    std::vector<std::size_t> outliers;
};

// sqrt(d2_adj / median(d2)); even-length median is the midpoint of the two
// central order statistics.
double lambda_stat(double d2_adj, std::span<const double> d2);

// Smallest magnification whose fence encloses every non-rejected point:
// max over i of |z_i - mu| / |b_i - mu| with b_i the bag boundary crossing of
// the ray mu -> z_i. Points coincident with mu contribute 0.
double lambda_data(const Dataset& data, std::span<const std::size_t> non_rejected,
                   const Bag& bag, const Point2& mu);

BagplotModel build_model(Dataset data, DepthProfile profile, Bag bag, RobustEstimate estimate,
                         TestOutcome outcome);

ClassicModel classic_model(Dataset data, DepthProfile profile, Bag bag);

const char* to_string(PointClass c);

} // namespace bagwhisker
