#include "bagwhisker/pipeline.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include "bagwhisker/bag.hpp"
#include "bagwhisker/errors.hpp"

namespace bagwhisker {

namespace {

constexpr const char* kModule = "cli";

DepthOptions resolve_depth(std::optional<DepthOptions> depth, std::size_t n) {
    return depth ? *depth : default_depth_options(n);
}

Dataset load_input(const RunConfig& config) {
    if (config.input_path.empty())
        fail(ErrorKind::BadConfig, kModule, "no input path given");
    if (config.input_path == "-") return parse_csv(std::cin, config.x_col, config.y_col);
    std::ifstream in(config.input_path, std::ios::binary);
    if (!in) fail(ErrorKind::IoError, kModule, "cannot open '" + config.input_path + "'");
    return parse_csv(in, config.x_col, config.y_col);
}

TestMethod to_test_method(RunConfig::Method m) {
    switch (m) {
        case RunConfig::Method::Fwer: return TestMethod::FwerHolm;
        case RunConfig::Method::Fdr: return TestMethod::FdrBH;
        case RunConfig::Method::Pfer: return TestMethod::PferBonferroni;
        case RunConfig::Method::Classic: break;
    }
    fail(ErrorKind::BadConfig, kModule, "classic mode has no test method");
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorKind::IoError, kModule, "cannot write '" + path + "'");
    out << content;
    if (!out) fail(ErrorKind::IoError, kModule, "short write to '" + path + "'");
}

std::string strip_extension(const std::string& path) {
    const std::size_t dot = path.rfind('.');
    const std::size_t sep = path.rfind('/');
    if (dot == std::string::npos || (sep != std::string::npos && dot < sep)) return path;
    const std::string ext = path.substr(dot);
    if (ext == ".svg" || ext == ".json") return path.substr(0, dot);
    return path;
}

std::string compare_sheet(const Dataset& data, const RunConfig& config) {
    DepthOptions depth = resolve_depth(
        config.depth_mode ? std::optional<DepthOptions>(DepthOptions{*config.depth_mode,
                                                                     config.directions,
                                                                     config.median_rule})
                          : std::nullopt,
        data.size());
    depth.median_rule = config.median_rule;

    DepthProfile profile = depth_profile(data, depth);
    Bag bag = construct_bag(data, profile);

    McdConfig mcd;
    mcd.seed = config.seed;
    const RobustEstimate estimate = robust_scatter(data, profile.median, mcd);

    ClassicModel classic = classic_model(data, profile, bag);

    auto adaptive = [&](TestMethod method) {
        const double q = default_level(method);
        TestOutcome outcome = run_tests(data, estimate.location, estimate.scatter, method, q);
        return build_model(data, profile, bag, estimate, std::move(outcome));
    };
    const BagplotModel fwer = adaptive(TestMethod::FwerHolm);
    const BagplotModel fdr = adaptive(TestMethod::FdrBH);
    const BagplotModel pfer = adaptive(TestMethod::PferBonferroni);

    const RenderStyle& s = config.style;
    const int W = s.width, H = s.height;
    std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
                      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
                      std::to_string(2 * W) + "\" height=\"" + std::to_string(2 * H) +
                      "\" viewBox=\"0 0 " + std::to_string(2 * W) + " " + std::to_string(2 * H) +
                      "\">\n";
    out += render_classic_svg_element(classic, s, 0, 0, "classic (factor 3)");
    out += render_svg_element(fwer, s, W, 0, "FWER (Holm), q = " + std::to_string(fwer.outcome.q));
    out += render_svg_element(fdr, s, 0, H, "FDR (BH), q = " + std::to_string(fdr.outcome.q));
    out += render_svg_element(pfer, s, W, H, "PFER, q = " + std::to_string(pfer.outcome.q));
    out += "</svg>\n";
    return out;
}

} // namespace

BagplotModel compute_model(const Dataset& data, TestMethod method, double q,
                           std::optional<DepthOptions> depth, const McdConfig& mcd,
                           ReweightRule reweight) {
    const DepthOptions opts = resolve_depth(depth, data.size());
    DepthProfile profile = depth_profile(data, opts);
    Bag bag = construct_bag(data, profile);
    RobustEstimate estimate = robust_scatter(data, profile.median, mcd, reweight);
    TestOutcome outcome = run_tests(data, estimate.location, estimate.scatter, method, q);
    return build_model(data, std::move(profile), std::move(bag), std::move(estimate),
                       std::move(outcome));
}

ClassicModel compute_classic(const Dataset& data, std::optional<DepthOptions> depth) {
    const DepthOptions opts = resolve_depth(depth, data.size());
    DepthProfile profile = depth_profile(data, opts);
    Bag bag = construct_bag(data, profile);
    return classic_model(data, std::move(profile), std::move(bag));
}

RunArtifacts run(const RunConfig& config) {
    const Dataset data = load_input(config);

    std::optional<DepthOptions> depth;
    if (config.depth_mode)
        depth = DepthOptions{*config.depth_mode, config.directions, config.median_rule};
    else {
        DepthOptions d = default_depth_options(data.size());
        d.directions = config.directions;
        d.median_rule = config.median_rule;
        depth = d;
    }

    RunArtifacts artifacts;
    if (config.compare) {
        if (config.format != OutputFormat::Svg)
            fail(ErrorKind::BadConfig, kModule, "--compare produces SVG only");
        artifacts.svg = compare_sheet(data, config);
    } else if (config.method == RunConfig::Method::Classic) {
        const ClassicModel model = compute_classic(data, depth);
        artifacts.json = model_to_json(model, config.style);
        artifacts.svg = render_classic_svg(model, config.style);
    } else {
        const TestMethod method = to_test_method(config.method);
        const double q = config.level.value_or(default_level(method));
        McdConfig mcd;
        mcd.seed = config.seed;
        const BagplotModel model = compute_model(data, method, q, depth, mcd);
        artifacts.json = model_to_json(model, config.style);
        artifacts.svg = render_svg(model, config.style);
    }

    const bool want_svg = config.format != OutputFormat::Json;
    const bool want_json = config.format != OutputFormat::Svg;
    if (config.format == OutputFormat::Both && config.output_path.empty())
        fail(ErrorKind::BadConfig, kModule, "--format both needs --output");

    if (config.output_path.empty()) {
        if (want_svg) std::cout << artifacts.svg;
        if (want_json) std::cout << artifacts.json;
        return artifacts;
    }

    if (config.format == OutputFormat::Both) {
        const std::string base = strip_extension(config.output_path);
        artifacts.svg_path = base + ".svg";
        artifacts.json_path = base + ".json";
        write_file(artifacts.svg_path, artifacts.svg);
        write_file(artifacts.json_path, artifacts.json);
    } else if (want_svg) {
        artifacts.svg_path = config.output_path;
        write_file(artifacts.svg_path, artifacts.svg);
    } else {
        artifacts.json_path = config.output_path;
        write_file(artifacts.json_path, artifacts.json);
    }
    return artifacts;
}

} // namespace bagwhisker
