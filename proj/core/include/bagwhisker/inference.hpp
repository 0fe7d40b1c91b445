#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "bagwhisker/dataset.hpp"
#include "bagwhisker/mat2.hpp"

namespace bagwhisker {

// Squared Mahalanobis distance through the explicit 2x2 inverse.
double mahalanobis_sq(const Point2& z, const Point2& mu, const Mat2& sigma);

// Chi-squared distribution with integer df via the regularized incomplete
// gamma function (series below df+1, continued fraction above). df = 2 is
// closed-form: CDF = 1 - exp(-x/2).
double chi2_cdf(double x, int df);
double chi2_survival(double x, int df);
// Inverse CDF, u in (0,1); bracketed Newton, |CDF(result) - u| <= 1e-10.
double chi2_quantile(double u, int df);

// p_i = exp(-d2_i / 2). Underflow to zero is mapped to the smallest positive
// normal double so log(t_adj) stays finite; occurrences are counted.
std::vector<double> pvalues(std::span<const double> d2, std::size_t* underflow_count = nullptr);

enum class TestMethod { FwerHolm, FdrBH, PferBonferroni };

double default_level(TestMethod method); // fwer 0.1, fdr 0.01, pfer 0.5

struct ThresholdResult {
    double t_adj = 0.0;
    std::vector<std::size_t> rejected; // ascending indices; always {i : p_i <= t_adj}
};

// Holm step-down, Benjamini-Hochberg step-up, or Bonferroni-style per-family
// threshold at level q. Tied p-values are rejected together. When nothing is
// rejected (Holm/BH), t_adj falls back to the first-step threshold q/n.
ThresholdResult adjust_threshold(std::span<const double> pvalues, TestMethod method, double q);

// Bag magnification needed so a p-dimensional normal keeps `target` of its
// mass outside the fence: sqrt(q_{1-target} / q_{0.5}) on chi2_p.
double fixed_proportion_factor(int p, double target);

// Full per-point testing record for one run.
struct TestOutcome {
    std::vector<double> d2;
    std::vector<double> pvalues;
    TestMethod method = TestMethod::FwerHolm;
    double q = 0.1;
    double t_adj = 0.0;
    double d2_adj = 0.0; // -2 ln(t_adj)
    std::vector<std::size_t> rejected;
    std::size_t pvalue_underflows = 0;
};

TestOutcome run_tests(const Dataset& data, const Point2& mu, const Mat2& sigma,
                      TestMethod method, double q);

} // namespace bagwhisker
