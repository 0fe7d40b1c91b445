#pragma once

#include <string>

#include "bagwhisker/fence.hpp"

namespace bagwhisker {

// Visual defaults for the figure. Whiskers fade from alpha_start at the bag
// boundary to alpha_end at the data point, so the eye is drawn outward while
// the dense center stays uncluttered.
struct RenderStyle {
    int width = 800;
    int height = 600;
    double margin = 0.08; // fraction of each canvas dimension

    std::string bag_fill = "#9ecae1";
    double bag_opacity = 0.55;
    std::string bag_stroke = "#4a7fa5";

    std::string fence_stroke = "#c44e52";
    double fence_width = 1.5;
    std::string fence_dash = "7,4";

    std::string whisker_color = "#3b6ea5";
    double whisker_alpha_start = 0.05;
    double whisker_alpha_end = 0.9;
    double whisker_width = 1.2;

    std::string point_color = "#333333";
    double point_radius = 2.5;

    std::string outlier_color = "#d62728";
    double outlier_size = 5.0;

    std::string median_color = "#e6a817";
    double median_size = 8.0;

    std::string loop_fill = "#c7d8e8"; // classic mode only
    double loop_opacity = 0.45;
    std::string loop_stroke = "#6b8cab";
};

// Standalone SVG 1.1 documents; byte-identical for identical inputs.
std::string render_svg(const BagplotModel& model, const RenderStyle& style = {});
std::string render_classic_svg(const ClassicModel& model, const RenderStyle& style = {});

// Same figures as nested <svg> fragments positioned at (x, y); used to build
// multi-panel comparison sheets.
std::string render_svg_element(const BagplotModel& model, const RenderStyle& style, int x, int y,
                               const std::string& caption);
std::string render_classic_svg_element(const ClassicModel& model, const RenderStyle& style,
                                       int x, int y, const std::string& caption);

} // namespace bagwhisker
