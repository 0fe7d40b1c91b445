#include "bagwhisker/fence.hpp"

#include <algorithm>
#include <cmath>

#include "bagwhisker/errors.hpp"

namespace bagwhisker {

namespace {

constexpr const char* kModule = "fence";

double median_of(std::vector<double> values) {
    std::sort(values.begin(), values.end());
    const std::size_t m = values.size();
    return (m % 2 == 1) ? values[m / 2] : 0.5 * (values[m / 2 - 1] + values[m / 2]);
}

} // namespace

const char* to_string(PointClass c) {
    switch (c) {
        case PointClass::InBag: return "in_bag";
        case PointClass::Outer: return "outer";
        case PointClass::Outlier: return "outlier";
    }
    return "?";
}

std::vector<std::size_t> BagplotModel::outlier_indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < classification.size(); ++i)
        if (classification[i] == PointClass::Outlier) out.push_back(i);
    return out;
}

double lambda_stat(double d2_adj, std::span<const double> d2) {
    if (d2.empty()) fail(ErrorKind::EmptyInput, kModule, "no distances");
    const double med = median_of({d2.begin(), d2.end()});
    if (!(med > 0.0))
        fail(ErrorKind::ZeroMedian, kModule,
             "median squared distance is zero (most points coincide with the center)");
    return std::sqrt(d2_adj / med);
}

double lambda_data(const Dataset& data, std::span<const std::size_t> non_rejected,
                   const Bag& bag, const Point2& mu) {
    if (containment(mu, bag.polygon) != Containment::Inside)
        fail(ErrorKind::CenterNotInterior, kModule, "center must be strictly inside the bag");
    double best = 0.0;
    for (std::size_t i : non_rejected) {
        const Point2& z = data[i];
        if (z.x == mu.x && z.y == mu.y) continue; // contributes 0
        const Point2 b = ray_boundary_intersection(mu, z, bag.polygon);
        const double rz = std::hypot(z.x - mu.x, z.y - mu.y);
        const double rb = std::hypot(b.x - mu.x, b.y - mu.y);
        best = std::fmax(best, rz / rb);
    }
    return best;
}

BagplotModel build_model(Dataset data, DepthProfile profile, Bag bag, RobustEstimate estimate,
                         TestOutcome outcome) {
    const std::size_t n = data.size();
    if (profile.depths.size() != n || outcome.d2.size() != n)
        fail(ErrorKind::BadConfig, kModule, "inputs were computed on different datasets");

    BagplotModel model;
    model.lambda_stat = lambda_stat(outcome.d2_adj, outcome.d2);

    std::vector<bool> rejected(n, false);
    for (std::size_t i : outcome.rejected) rejected[i] = true;
    std::vector<std::size_t> non_rejected;
    non_rejected.reserve(n);
    for (std::size_t i = 0; i < n; ++i)
        if (!rejected[i]) non_rejected.push_back(i);

    const Point2 mu = estimate.location;
    model.lambda_data = lambda_data(data, non_rejected, bag, mu);
    model.lambda = std::fmax(std::fmax(model.lambda_stat, model.lambda_data), 1.0);
    model.fence = scale_polygon(bag.polygon, mu, model.lambda);

    const double bag_tol = kContainmentTol * polygon_diameter(bag.polygon);
    const double fence_tol = kContainmentTol * polygon_diameter(model.fence);
    model.classification.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (containment_abs(data[i], bag.polygon, bag_tol) != Containment::Outside) {
            model.classification[i] = PointClass::InBag;
        } else if (containment_abs(data[i], model.fence, fence_tol) == Containment::Outside) {
            model.classification[i] = PointClass::Outlier;
        } else {
            model.classification[i] = PointClass::Outer;
        }
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (model.classification[i] != PointClass::Outer) continue;
        const Point2 b = ray_boundary_intersection(mu, data[i], bag.polygon);
        model.whiskers.push_back({i, b, data[i]});
    }

    model.data = std::move(data);
    model.profile = std::move(profile);
    model.bag = std::move(bag);
    model.estimate = std::move(estimate);
    model.outcome = std::move(outcome);
    return model;
}

ClassicModel classic_model(Dataset data, DepthProfile profile, Bag bag) {
    const std::size_t n = data.size();
    if (profile.depths.size() != n)
        fail(ErrorKind::BadConfig, kModule, "inputs were computed on different datasets");

    ClassicModel model;
    model.fence3 = scale_polygon(bag.polygon, profile.median, 3.0);

    const double tol = kContainmentTol * polygon_diameter(model.fence3);
    std::vector<Point2> kept;
    kept.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (containment_abs(data[i], model.fence3, tol) == Containment::Outside)
            model.outliers.push_back(i);
        else
            kept.push_back(data[i]);
    }
    if (kept.empty()) fail(ErrorKind::EmptyRegion, kModule, "every point fell outside the fence");
    model.loop_hull = convex_hull(kept);

    model.data = std::move(data);
    model.profile = std::move(profile);
    model.bag = std::move(bag);
    return model;
}

} // namespace bagwhisker
