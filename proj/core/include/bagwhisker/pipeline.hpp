#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "bagwhisker/dataset.hpp"
#include "bagwhisker/fence.hpp"
#include "bagwhisker/model_json.hpp"
#include "bagwhisker/render.hpp"
#include "bagwhisker/robust_scatter.hpp"

namespace bagwhisker {

// Full adaptive pipeline: depth profile -> bag -> robust scatter -> tests ->
// fence. Depth options default by sample size (exact up to 5000 points).
BagplotModel compute_model(const Dataset& data, TestMethod method, double q,
                           std::optional<DepthOptions> depth = {},
                           const McdConfig& mcd = {},
                           ReweightRule reweight = ReweightRule::MassCovRob);

// Fixed factor-3 baseline (no scatter estimate, no testing).
ClassicModel compute_classic(const Dataset& data, std::optional<DepthOptions> depth = {});

enum class OutputFormat { Svg, Json, Both };

struct RunConfig {
    enum class Method { Fwer, Fdr, Pfer, Classic };

    std::string input_path;                // "-" reads standard input
    ColumnRef x_col = ColumnRef::by_index(0);
    ColumnRef y_col = ColumnRef::by_index(1);
    Method method = Method::Fwer;
    std::optional<double> level;           // defaults: fwer 0.1, fdr 0.01, pfer 0.5
    std::optional<DepthMode> depth_mode;   // default: exact for n <= 5000, else approx
    int directions = 360;
    MedianRule median_rule = MedianRule::MeanOfDeepest;
    std::uint64_t seed = 20240601;
    OutputFormat format = OutputFormat::Svg;
    std::string output_path;               // empty -> stdout (single formats only)
    bool compare = false;                  // 2x2 sheet: classic, FWER, FDR, PFER
    RenderStyle style;
};

struct RunArtifacts {
    std::string json; // empty when not produced
    std::string svg;
    std::string json_path; // file actually written, empty for stdout
    std::string svg_path;
};

// Executes a configured run and writes the requested artifacts.
RunArtifacts run(const RunConfig& config);

// Command-line front end: flag parsing, BAGWHISKER_SEED override, error
// records on stderr. Exit codes: 0 success, 2 input error, 3 numeric error.
int run_cli(int argc, const char* const* argv);

} // namespace bagwhisker
