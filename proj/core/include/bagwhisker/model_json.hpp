#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "bagwhisker/fence.hpp"
#include "bagwhisker/render.hpp"

namespace bagwhisker {

inline constexpr int kSchemaVersion = 1;

// Every intermediate quantity of a run (depths, d2, p-values, thresholds,
// lambdas, polygons, classification, whiskers) plus the render style, with
// numbers written at 17 significant digits so a parsed model re-renders to the
// byte-identical SVG.
std::string model_to_json(const BagplotModel& model, const RenderStyle& style = {});
std::string model_to_json(const ClassicModel& model, const RenderStyle& style = {});

struct StoredModel {
    std::variant<BagplotModel, ClassicModel> model;
    RenderStyle style;

    bool is_classic() const { return std::holds_alternative<ClassicModel>(model); }
};

StoredModel model_from_json(std::string_view text);

// Render a parsed model with its stored style.
std::string render_stored(const StoredModel& stored);

const char* to_string(TestMethod method); // "fwer" / "fdr" / "pfer"

} // namespace bagwhisker
