#pragma once

#include <cmath>

namespace bagwhisker {

// Symmetric 2x2 matrix (covariance / scatter).
struct Mat2 {
    double xx = 0.0;
    double xy = 0.0;
    double yy = 0.0;

    double det() const { return xx * yy - xy * xy; }
    double trace() const { return xx + yy; }

    Mat2 scaled(double f) const { return {xx * f, xy * f, yy * f}; }

    // both eigenvalues strictly positive, up to a relative floor on the determinant
    bool positive_definite(double rel_eps = 1e-13) const {
        const double scale = std::fmax(std::fmax(std::fabs(xx), std::fabs(yy)), std::fabs(xy));
        return xx > 0.0 && yy > 0.0 && det() > rel_eps * scale * scale;
    }

    // larger eigenvalue magnitude (operator norm for symmetric matrices)
    double operator_norm() const {
        const double h = 0.5 * (xx + yy);
        const double d = std::sqrt(0.25 * (xx - yy) * (xx - yy) + xy * xy);
        return std::fmax(std::fabs(h + d), std::fabs(h - d));
    }
};

} // namespace bagwhisker
