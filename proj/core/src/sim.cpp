#include "bagwhisker/sim.hpp"

#include <cmath>

#include "bagwhisker/errors.hpp"
#include "bagwhisker/prng.hpp"

namespace bagwhisker {

namespace {
constexpr const char* kModule = "sim";
}

LabeledDataset gen_mixture(const MixtureSpec& spec) {
    if (spec.n < kMinRows) fail(ErrorKind::TooFewRows, kModule, "need n >= 4");
    if (!(spec.contamination >= 0.0 && spec.contamination <= 1.0))
        fail(ErrorKind::DomainError, kModule, "contamination probability outside [0, 1]");
    if (!(std::fabs(spec.rho) < 1.0))
        fail(ErrorKind::DomainError, kModule, "|rho| must be < 1");

    Xoshiro256pp rng(spec.seed);
    const double chol = std::sqrt(1.0 - spec.rho * spec.rho);

    LabeledDataset out;
    out.data.points.reserve(spec.n);
    out.labels.reserve(spec.n);
    for (std::size_t i = 0; i < spec.n; ++i) {
        const int label = (rng.uniform() < spec.contamination) ? 1 : 0;
        const double n1 = rng.gauss();
        const double n2 = rng.gauss();
        const Point2& mu = label ? spec.mu1 : spec.mu0;
        out.data.points.push_back({mu.x + n1, mu.y + spec.rho * n1 + chol * n2});
        out.labels.push_back(label);
    }
    return out;
}

Dataset gen_lognormal(std::size_t n, double sigma, std::uint64_t seed) {
    if (n < kMinRows) fail(ErrorKind::TooFewRows, kModule, "need n >= 4");
    if (!(sigma > 0.0)) fail(ErrorKind::DomainError, kModule, "sigma must be positive");

    Xoshiro256pp rng(seed);
    Dataset out;
    out.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = std::exp(sigma * rng.gauss());
        const double y = std::exp(sigma * rng.gauss());
        out.points.push_back({x, y});
    }
    return out;
}

} // namespace bagwhisker
