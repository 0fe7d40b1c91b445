#include "bagwhisker/robust_scatter.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "bagwhisker/errors.hpp"
#include "bagwhisker/inference.hpp"
#include "bagwhisker/prng.hpp"

namespace bagwhisker {

namespace {

constexpr const char* kModule = "robust_scatter";
constexpr int kDim = 2;

struct SubsetEstimate {
    Point2 mean;
    Mat2 cov;
};

// Two-pass mean/covariance with denominator m - 1.
SubsetEstimate estimate_subset(const Dataset& data, const std::vector<std::size_t>& subset) {
    const double m = static_cast<double>(subset.size());
    double sx = 0.0, sy = 0.0;
    for (std::size_t i : subset) {
        sx += data[i].x;
        sy += data[i].y;
    }
    const Point2 mean{sx / m, sy / m};
    double xx = 0.0, xy = 0.0, yy = 0.0;
    for (std::size_t i : subset) {
        const double dx = data[i].x - mean.x;
        const double dy = data[i].y - mean.y;
        xx += dx * dx;
        xy += dx * dy;
        yy += dy * dy;
    }
    return {mean, Mat2{xx / (m - 1.0), xy / (m - 1.0), yy / (m - 1.0)}};
}

bool singular(const Mat2& cov) { return !cov.positive_definite(); }

// determinant-count of C(n, h), saturating at limit + 1
std::uint64_t binomial_capped(std::size_t n, std::size_t h, std::uint64_t limit) {
    const std::size_t k = std::min(h, n - h);
    long double acc = 1.0L;
    for (std::size_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<long double>(n - k + i) / static_cast<long double>(i);
        if (acc > static_cast<long double>(limit) + 1.0L) return limit + 1;
    }
    return static_cast<std::uint64_t>(acc + 0.5L);
}

bool strictly_better(double det, double best, double rel_tol) {
    return det < best - rel_tol * std::fabs(best);
}

struct Candidate {
    std::vector<std::size_t> subset;
    SubsetEstimate est;
    double det = std::numeric_limits<double>::infinity();
};

McdRaw exhaustive_mcd(const Dataset& data, std::size_t h, const McdConfig& config) {
    const std::size_t n = data.size();
    std::vector<std::size_t> idx(h);
    std::iota(idx.begin(), idx.end(), 0);

    auto next_combination = [&]() {
        std::size_t i = h;
        while (i-- > 0) {
            if (idx[i] != i + n - h) {
                ++idx[i];
                for (std::size_t j = i + 1; j < h; ++j) idx[j] = idx[j - 1] + 1;
                return true;
            }
        }
        return false;
    };

    Candidate best;
    bool have_best = false;
    do {
        const SubsetEstimate est = estimate_subset(data, idx);
        const double det = est.cov.det();
        // lexicographic enumeration order: the first subset within tolerance wins
        if (!have_best || strictly_better(det, best.det, config.det_rel_tol)) {
            best = {idx, est, det};
            have_best = true;
        }
    } while (next_combination());

    if (singular(best.est.cov))
        fail(ErrorKind::SingularSubset, kModule,
             "minimum-determinant subset has a singular covariance (collinear data)");
    return {best.subset, best.est.mean, best.est.cov, best.det, true};
}

Candidate run_c_steps_to_convergence(const Dataset& data, Candidate cand, std::size_t h,
                                     double rel_tol) {
    for (int it = 0; it < 200; ++it) {
        CStepResult next = c_step(data, cand.est.mean, cand.est.cov, h);
        const bool converged = next.subset == cand.subset ||
                               std::fabs(cand.det - next.determinant) <=
                                   rel_tol * std::fabs(cand.det);
        cand = {std::move(next.subset), {next.mean, next.cov}, next.determinant};
        if (converged) break;
    }
    return cand;
}

McdRaw fast_mcd(const Dataset& data, std::size_t h, const McdConfig& config) {
    const std::size_t n = data.size();
    Xoshiro256pp rng(config.seed);

    std::vector<Candidate> pool;
    pool.reserve(static_cast<std::size_t>(config.starts));
    std::vector<std::size_t> start;
    for (int s = 0; s < config.starts; ++s) {
        // random (p+1)-subset, extended while its covariance is singular
        start.clear();
        std::vector<bool> used(n, false);
        auto draw = [&]() {
            std::size_t i = rng.below(n);
            while (used[i]) i = rng.below(n);
            used[i] = true;
            start.push_back(i);
        };
        for (int k = 0; k < kDim + 1; ++k) draw();
        std::sort(start.begin(), start.end());
        SubsetEstimate est = estimate_subset(data, start);
        while (singular(est.cov) && start.size() < n) {
            draw();
            std::sort(start.begin(), start.end());
            est = estimate_subset(data, start);
        }
        if (singular(est.cov)) continue; // whole dataset is collinear

        Candidate cand{start, est, est.cov.det()};
        for (int w = 0; w < config.warmup_c_steps; ++w) {
            CStepResult next = c_step(data, cand.est.mean, cand.est.cov, h);
            cand = {std::move(next.subset), {next.mean, next.cov}, next.determinant};
        }
        pool.push_back(std::move(cand));
    }
    if (pool.empty())
        fail(ErrorKind::SingularSubset, kModule, "all start subsets were collinear");

    std::stable_sort(pool.begin(), pool.end(),
                     [](const Candidate& a, const Candidate& b) { return a.det < b.det; });
    if (pool.size() > static_cast<std::size_t>(config.keep))
        pool.resize(static_cast<std::size_t>(config.keep));

    for (Candidate& cand : pool)
        cand = run_c_steps_to_convergence(data, std::move(cand), h, config.det_rel_tol);

    // minimum determinant; ties within tolerance resolve to the smallest subset
    const Candidate* best = &pool.front();
    for (const Candidate& cand : pool) {
        if (strictly_better(cand.det, best->det, config.det_rel_tol)) {
            best = &cand;
        } else if (!strictly_better(best->det, cand.det, config.det_rel_tol) &&
                   cand.subset < best->subset) {
            best = &cand;
        }
    }
    if (singular(best->est.cov))
        fail(ErrorKind::SingularSubset, kModule, "best subset covariance is singular");
    return {best->subset, best->est.mean, best->est.cov, best->det, false};
}

// R's default (type 7) sample quantile.
double quantile_type7(std::vector<double> values, double prob) {
    std::sort(values.begin(), values.end());
    const double pos = (static_cast<double>(values.size()) - 1.0) * prob;
    const std::size_t lo = static_cast<std::size_t>(pos);
    if (lo + 1 >= values.size()) return values.back();
    return values[lo] + (pos - static_cast<double>(lo)) * (values[lo + 1] - values[lo]);
}

} // namespace

std::size_t default_h(std::size_t n) { return (n + kDim + 1) / 2; }

McdRaw mcd_raw(const Dataset& data, std::size_t h, const McdConfig& config) {
    const std::size_t n = data.size();
    if (h < kDim + 1 || h > n)
        fail(ErrorKind::BadSubsetSize, kModule,
             "subset size " + std::to_string(h) + " outside [3, " + std::to_string(n) + "]");
    if (binomial_capped(n, h, config.exhaustive_limit) <= config.exhaustive_limit)
        return exhaustive_mcd(data, h, config);
    return fast_mcd(data, h, config);
}

CStepResult c_step(const Dataset& data, const Point2& mean, const Mat2& cov, std::size_t h) {
    const std::size_t n = data.size();
    if (h < kDim + 1 || h > n)
        fail(ErrorKind::BadSubsetSize, kModule, "subset size outside [3, n]");
    if (singular(cov))
        fail(ErrorKind::SingularCovariance, kModule, "c-step needs a nonsingular covariance");

    std::vector<std::pair<double, std::size_t>> order(n);
    for (std::size_t i = 0; i < n; ++i)
        order[i] = {mahalanobis_sq(data[i], mean, cov), i};
    std::nth_element(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(h) - 1,
                     order.end());
    std::sort(order.begin(), order.begin() + static_cast<std::ptrdiff_t>(h));

    CStepResult result;
    result.subset.reserve(h);
    for (std::size_t i = 0; i < h; ++i) result.subset.push_back(order[i].second);
    std::sort(result.subset.begin(), result.subset.end());
    const SubsetEstimate est = estimate_subset(data, result.subset);
    result.mean = est.mean;
    result.cov = est.cov;
    result.determinant = est.cov.det();
    return result;
}

double consistency_factor(double alpha, int p) {
    if (!(alpha > 0.0 && alpha <= 1.0))
        fail(ErrorKind::DomainError, kModule, "alpha must lie in (0, 1]");
    if (p < 1) fail(ErrorKind::DomainError, kModule, "dimension must be >= 1");
    if (alpha == 1.0) return 1.0;
    const double q = chi2_quantile(alpha, p);
    return alpha / chi2_cdf(q, p + 2);
}

RobustEstimate mcd_reweighted(const Dataset& data, const McdRaw& raw, const Point2& location,
                              ReweightRule rule) {
    const std::size_t n = data.size();
    const std::size_t h = raw.subset.size();
    if (singular(raw.cov))
        fail(ErrorKind::SingularCovariance, kModule, "raw covariance is singular");

    std::vector<double> d2(n);
    std::vector<bool> keep(n, false);
    if (h == n) {
        keep.assign(n, true);
    } else if (rule == ReweightRule::MassCovRob) {
        const double infl = std::pow(1.0 + 15.0 / static_cast<double>(n - kDim), 2.0);
        const Mat2 rcov = raw.cov.scaled(infl);
        for (std::size_t i = 0; i < n; ++i) d2[i] = mahalanobis_sq(data[i], raw.mean, rcov);
        const double q = static_cast<double>(h) / static_cast<double>(n);
        const double cut =
            chi2_quantile(0.975, kDim) * quantile_type7(d2, q) / chi2_quantile(q, kDim);
        for (std::size_t i = 0; i < n; ++i) keep[i] = d2[i] < cut;
    } else {
        const double alpha = static_cast<double>(h) / static_cast<double>(n);
        const Mat2 scaled = raw.cov.scaled(consistency_factor(alpha, kDim));
        const double cut = chi2_quantile(0.975, kDim);
        for (std::size_t i = 0; i < n; ++i) {
            d2[i] = mahalanobis_sq(data[i], raw.mean, scaled);
            keep[i] = d2[i] <= cut;
        }
    }

    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < n; ++i)
        if (keep[i]) kept.push_back(i);
    if (kept.size() < static_cast<std::size_t>(kDim) + 1)
        fail(ErrorKind::TooFewWeighted, kModule,
             "only " + std::to_string(kept.size()) + " points survive the reweighting cut");

    const SubsetEstimate est = estimate_subset(data, kept);
    if (singular(est.cov))
        fail(ErrorKind::SingularCovariance, kModule, "reweighted covariance is singular");

    RobustEstimate out;
    out.location = location;
    out.scatter = est.cov;
    out.h = h;
    out.raw_subset = raw.subset;
    out.raw_determinant = raw.determinant;
    out.reweighted_count = kept.size();
    return out;
}

RobustEstimate robust_scatter(const Dataset& data, const Point2& location,
                              const McdConfig& config, ReweightRule rule) {
    const std::size_t h = config.h.value_or(default_h(data.size()));
    const McdRaw raw = mcd_raw(data, h, config);
    return mcd_reweighted(data, raw, location, rule);
}

} // namespace bagwhisker
