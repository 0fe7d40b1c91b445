#include "bagwhisker/inference.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "bagwhisker/errors.hpp"

namespace bagwhisker {

namespace {

constexpr const char* kModule = "inference";

// Regularized lower incomplete gamma P(a, x) by power series; valid for x < a + 1.
double gamma_p_series(double a, double x) {
    if (x <= 0.0) return 0.0;
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 500; ++n) {
        term *= x / (a + n);
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * 1e-17) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

// Regularized upper incomplete gamma Q(a, x) by modified Lentz continued
// fraction; valid for x >= a + 1.
double gamma_q_cf(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -i * (i - a);
        b += 2.0;
        d = an * d + b;
        if (std::fabs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::fabs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1.0) < 1e-16) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

double chi2_pdf(double x, int df) {
    if (x <= 0.0) return 0.0;
    const double a = 0.5 * df;
    return std::exp((a - 1.0) * std::log(x) - 0.5 * x - std::lgamma(a) - a * std::log(2.0));
}

void check_df(int df) {
    if (df < 1) fail(ErrorKind::DomainError, kModule, "degrees of freedom must be >= 1");
}

} // namespace

double mahalanobis_sq(const Point2& z, const Point2& mu, const Mat2& sigma) {
    const double det = sigma.det();
    if (!sigma.positive_definite() || !std::isfinite(det))
        fail(ErrorKind::SingularMatrix, kModule, "scatter matrix is not positive definite");
    const double dx = z.x - mu.x;
    const double dy = z.y - mu.y;
    const double q = (sigma.yy * dx * dx - 2.0 * sigma.xy * dx * dy + sigma.xx * dy * dy) / det;
    return std::fmax(q, 0.0);
}

double chi2_cdf(double x, int df) {
    check_df(df);
    if (!(x >= 0.0)) fail(ErrorKind::DomainError, kModule, "chi2_cdf needs x >= 0");
    if (df == 2) return 1.0 - std::exp(-0.5 * x);
    const double a = 0.5 * df;
    const double xh = 0.5 * x;
    if (xh < a + 1.0) return gamma_p_series(a, xh);
    return 1.0 - gamma_q_cf(a, xh);
}

double chi2_survival(double x, int df) {
    check_df(df);
    if (!(x >= 0.0)) fail(ErrorKind::DomainError, kModule, "chi2_survival needs x >= 0");
    if (df == 2) return std::exp(-0.5 * x);
    const double a = 0.5 * df;
    const double xh = 0.5 * x;
    if (xh < a + 1.0) return 1.0 - gamma_p_series(a, xh);
    return gamma_q_cf(a, xh);
}

double chi2_quantile(double u, int df) {
    check_df(df);
    if (!(u > 0.0 && u < 1.0))
        fail(ErrorKind::DomainError, kModule, "quantile needs u in (0,1)");
    if (df == 2) return -2.0 * std::log1p(-u);

    // bracket
    double lo = 0.0;
    double hi = static_cast<double>(df) + 8.0;
    while (chi2_cdf(hi, df) < u) {
        lo = hi;
        hi *= 2.0;
        if (hi > 1e12) break;
    }
    // Newton from the distribution mean, bisection fallback keeps the bracket.
    // Tolerance is relative to the nearer tail so both extremes stay sharp;
    // when float cancellation blocks it, the bracket-width stop takes over.
    const double tol = 1e-12 * std::fmin(u, 1.0 - u);
    double x = static_cast<double>(df);
    if (!(x > lo && x < hi)) x = 0.5 * (lo + hi);
    for (int it = 0; it < 300; ++it) {
        const double f = chi2_cdf(x, df) - u;
        if (std::fabs(f) <= tol) break;
        if (f > 0.0) hi = x; else lo = x;
        const double deriv = chi2_pdf(x, df);
        double step = (deriv > 0.0) ? x - f / deriv : 0.5 * (lo + hi);
        if (!(step > lo && step < hi)) step = 0.5 * (lo + hi);
        if (step == x || hi - lo <= 1e-15 * x) break;
        x = step;
    }
    return x;
}

std::vector<double> pvalues(std::span<const double> d2, std::size_t* underflow_count) {
    std::size_t underflows = 0;
    std::vector<double> out;
    out.reserve(d2.size());
    for (double v : d2) {
        if (!(v >= 0.0) || !std::isfinite(v))
            fail(ErrorKind::DomainError, kModule, "squared distance must be finite and >= 0");
        double p = std::exp(-0.5 * v);
        if (p <= 0.0) {
            p = std::numeric_limits<double>::min();
            ++underflows;
        }
        out.push_back(p);
    }
    if (underflow_count) *underflow_count = underflows;
    return out;
}

double default_level(TestMethod method) {
    switch (method) {
        case TestMethod::FwerHolm: return 0.1;
        case TestMethod::FdrBH: return 0.01;
        case TestMethod::PferBonferroni: return 0.5;
    }
    return 0.1;
}

ThresholdResult adjust_threshold(std::span<const double> pvals, TestMethod method, double q) {
    if (!(q > 0.0) || !std::isfinite(q))
        fail(ErrorKind::BadLevel, kModule, "level must be positive and finite");
    const std::size_t n = pvals.size();
    if (n == 0) fail(ErrorKind::EmptyInput, kModule, "no p-values");
    for (double p : pvals)
        if (!(p > 0.0 && p <= 1.0))
            fail(ErrorKind::DomainError, kModule, "p-values must lie in (0, 1]");

    std::vector<double> sorted(pvals.begin(), pvals.end());
    std::sort(sorted.begin(), sorted.end());
    const double nd = static_cast<double>(n);

    double t_adj = q / nd;
    switch (method) {
        case TestMethod::FwerHolm: {
            std::size_t k = 0;
            for (std::size_t i = 0; i < n; ++i) {
                if (sorted[i] <= q / (nd - static_cast<double>(i))) k = i + 1;
                else break;
            }
            t_adj = (k > 0) ? sorted[k - 1] : q / nd;
            break;
        }
        case TestMethod::FdrBH: {
            std::size_t k = 0;
            for (std::size_t i = n; i-- > 0;) {
                if (sorted[i] <= (static_cast<double>(i + 1) * q) / nd) {
                    k = i + 1;
                    break;
                }
            }
            t_adj = (k > 0) ? sorted[k - 1] : q / nd;
            break;
        }
        case TestMethod::PferBonferroni:
            t_adj = q / nd;
            break;
    }
    t_adj = std::fmin(t_adj, 1.0);

    ThresholdResult result;
    result.t_adj = t_adj;
    for (std::size_t i = 0; i < n; ++i)
        if (pvals[i] <= t_adj) result.rejected.push_back(i);
    return result;
}

double fixed_proportion_factor(int p, double target) {
    if (p < 1) fail(ErrorKind::DomainError, kModule, "dimension must be >= 1");
    if (!(target > 0.0 && target < 1.0))
        fail(ErrorKind::DomainError, kModule, "target proportion must lie in (0, 1)");
    return std::sqrt(chi2_quantile(1.0 - target, p) / chi2_quantile(0.5, p));
}

TestOutcome run_tests(const Dataset& data, const Point2& mu, const Mat2& sigma,
                      TestMethod method, double q) {
    TestOutcome outcome;
    outcome.method = method;
    outcome.q = q;
    outcome.d2.reserve(data.size());
    for (const Point2& z : data.points) outcome.d2.push_back(mahalanobis_sq(z, mu, sigma));
    outcome.pvalues = pvalues(outcome.d2, &outcome.pvalue_underflows);
    ThresholdResult thr = adjust_threshold(outcome.pvalues, method, q);
    outcome.t_adj = thr.t_adj;
    outcome.rejected = std::move(thr.rejected);
    outcome.d2_adj = -2.0 * std::log(outcome.t_adj);
    return outcome;
}

} // namespace bagwhisker
