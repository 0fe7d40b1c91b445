#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>

#include "bagwhisker/errors.hpp"
#include "bagwhisker/pipeline.hpp"

namespace bagwhisker {

namespace {

void print_error_record(const std::string& kind, const std::string& module,
                        const std::string& message) {
    std::string escaped;
    for (char c : message) {
        if (c == '"' || c == '\\') escaped += '\\';
        if (c == '\n') {
            escaped += "\\n";
            continue;
        }
        escaped += c;
    }
    std::cerr << "{\"error\":{\"kind\":\"" << kind << "\",\"module\":\"" << module
              << "\",\"message\":\"" << escaped << "\"}}\n";
}

} // namespace

int run_cli(int argc, const char* const* argv) {
    CLI::App app{"bag-and-whisker plot: adaptive bivariate bagplots with "
                 "FWER/FDR/PFER-controlled fences"};
    app.get_formatter()->column_width(34);

    RunConfig config;
    std::string input, x_spec = "0", y_spec = "1", method = "fwer", depth_mode, format = "svg";

    app.add_option("-i,--input", input, "input CSV file ('-' for stdin)")->required();
    app.add_option("-x,--x", x_spec, "x column (name or 0-based index)")->capture_default_str();
    app.add_option("-y,--y", y_spec, "y column (name or 0-based index)")->capture_default_str();
    app.add_option("-m,--method", method, "fwer | fdr | pfer | classic")
        ->check(CLI::IsMember({"fwer", "fdr", "pfer", "classic"}))
        ->capture_default_str();
    double level = -1.0;
    app.add_option("-q,--level", level,
                   "error-control level (defaults: fwer 0.1, fdr 0.01, pfer 0.5)");
    app.add_option("--depth-mode", depth_mode, "exact | approx (default by sample size)")
        ->check(CLI::IsMember({"exact", "approx"}));
    app.add_option("--directions", config.directions, "directions for approximate depth")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    std::string median_rule = "mean";
    app.add_option("--median-rule", median_rule, "depth-median tie rule: mean | coordwise")
        ->check(CLI::IsMember({"mean", "coordwise"}));
    app.add_option("--seed", config.seed, "seed for the MCD subset search")
        ->capture_default_str();
    app.add_option("-f,--format", format, "svg | json | both")
        ->check(CLI::IsMember({"svg", "json", "both"}))
        ->capture_default_str();
    app.add_option("-o,--output", config.output_path,
                   "output path (basename with --format both); stdout when omitted");
    app.add_flag("--compare", config.compare,
                 "render a 2x2 sheet: classic, FWER, FDR, PFER");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        print_error_record("BadConfig", "cli", e.what());
        return 2;
    }

    config.input_path = input;
    config.x_col = ColumnRef::parse(x_spec);
    config.y_col = ColumnRef::parse(y_spec);
    if (method == "fwer") config.method = RunConfig::Method::Fwer;
    else if (method == "fdr") config.method = RunConfig::Method::Fdr;
    else if (method == "pfer") config.method = RunConfig::Method::Pfer;
    else config.method = RunConfig::Method::Classic;
    if (level > 0.0) config.level = level;
    if (depth_mode == "exact") config.depth_mode = DepthMode::Exact;
    else if (depth_mode == "approx") config.depth_mode = DepthMode::Approx;
    config.median_rule =
        (median_rule == "coordwise") ? MedianRule::CoordinateWise : MedianRule::MeanOfDeepest;
    if (format == "svg") config.format = OutputFormat::Svg;
    else if (format == "json") config.format = OutputFormat::Json;
    else config.format = OutputFormat::Both;

    if (const char* env_seed = std::getenv("BAGWHISKER_SEED")) {
        try {
            config.seed = std::stoull(env_seed);
        } catch (const std::exception&) {
            print_error_record("BadConfig", "cli", "BAGWHISKER_SEED is not an integer");
            return 2;
        }
    }

    try {
        run(config);
        return 0;
    } catch (const Error& e) {
        print_error_record(to_string(e.kind()), e.module(), e.what());
        return is_input_error(e.kind()) ? 2 : 3;
    } catch (const std::exception& e) {
        print_error_record("Internal", "cli", e.what());
        return 3;
    }
}

} // namespace bagwhisker
