#pragma once

#include <cstdint>
#include <vector>

#include "bagwhisker/dataset.hpp"

namespace bagwhisker {

// Two-component normal mixture: with probability `contamination` a point is
// drawn around mu1 instead of mu0; both components share unit variances and
// correlation rho. Draws are Box-Muller over xoshiro256++, so a (spec, seed)
// pair regenerates the identical dataset.
struct MixtureSpec {
    std::size_t n = 5000;
    double contamination = 0.05;
    Point2 mu0{100.0, 300.0};
    Point2 mu1{103.0, 298.0};
    double rho = 0.0;
    std::uint64_t seed = 1;
};

struct LabeledDataset {
    Dataset data;
    std::vector<int> labels; // 1 = contaminant component
};

LabeledDataset gen_mixture(const MixtureSpec& spec);

// Independent log-normal(0, sigma) coordinates; skewed and heavy-tailed with
// no true contaminants.
Dataset gen_lognormal(std::size_t n, double sigma, std::uint64_t seed);

} // namespace bagwhisker
