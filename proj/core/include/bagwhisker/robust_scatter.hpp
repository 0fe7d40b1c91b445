#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bagwhisker/dataset.hpp"
#include "bagwhisker/mat2.hpp"

namespace bagwhisker {

struct McdConfig {
    std::uint64_t seed = 20240601;       // subset starts are fully reproducible
    int starts = 500;                    // random (p+1)-point starts
    int keep = 10;                       // best candidates refined to convergence
    int warmup_c_steps = 2;
    double det_rel_tol = 1e-12;          // convergence / tie tolerance on determinants
    std::uint64_t exhaustive_limit = 200000; // enumerate all C(n,h) subsets up to this
    std::optional<std::size_t> h;        // subset size; default floor((n+3)/2)
};

std::size_t default_h(std::size_t n); // floor((n + p + 1)/2) with p = 2

struct McdRaw {
    std::vector<std::size_t> subset; // ascending indices, |subset| = h
    Point2 mean;
    Mat2 cov;          // denominator h - 1
    double determinant;
    bool exhaustive = false;
};

// Minimum covariance determinant subset of size h: exhaustive enumeration when
// C(n, h) is small enough, FAST-MCD (random starts + C-steps) otherwise.
// Determinant ties within det_rel_tol resolve to the lexicographically
// smallest index list.
McdRaw mcd_raw(const Dataset& data, std::size_t h, const McdConfig& config = {});

struct CStepResult {
    std::vector<std::size_t> subset;
    Point2 mean;
    Mat2 cov;
    double determinant;
};

// One concentration step: keep the h points with smallest Mahalanobis
// distance under the current estimate. Never increases the determinant.
CStepResult c_step(const Dataset& data, const Point2& mean, const Mat2& cov, std::size_t h);

// Scaling that makes a (1-alpha)-trimmed normal covariance consistent:
// alpha / F_{chi2_{p+2}}(q_alpha) with q_alpha the alpha-quantile of chi2_p.
double consistency_factor(double alpha, int p);

// How the raw subset estimate is turned into the final scatter.
// MassCovRob reproduces R's MASS::cov.rob reweighting (inflate the raw subset
// covariance by (1 + 15/(n-p))^2, cut at qchisq(.975,p) * quantile(d2, h/n) /
// qchisq(h/n, p), plain covariance of the retained points). Chi2Consistency is
// the fixed-cutoff alternative: consistency_factor(h/n, 2) on the raw
// covariance, cutoff chi2_2(0.975).
enum class ReweightRule { MassCovRob, Chi2Consistency };

struct RobustEstimate {
    Point2 location;                  // depth median, passed through untouched
    Mat2 scatter;                     // reweighted covariance, SPD
    std::size_t h = 0;
    std::vector<std::size_t> raw_subset;
    double raw_determinant = 0.0;
    std::size_t reweighted_count = 0; // points kept by the reweighting cut
};

RobustEstimate mcd_reweighted(const Dataset& data, const McdRaw& raw, const Point2& location,
                              ReweightRule rule = ReweightRule::MassCovRob);

// Convenience: mcd_raw at the default (or configured) h, then reweighting.
RobustEstimate robust_scatter(const Dataset& data, const Point2& location,
                              const McdConfig& config = {},
                              ReweightRule rule = ReweightRule::MassCovRob);

} // namespace bagwhisker
