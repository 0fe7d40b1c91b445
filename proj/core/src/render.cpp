#include "bagwhisker/render.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include "bagwhisker/errors.hpp"

namespace bagwhisker {

namespace {

constexpr const char* kModule = "render";

std::string fmt(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.6f", v);
    return buf;
}

// data -> pixel mapping: bounding box to the canvas minus margins, y flipped,
// aspect preserved, centered
struct Transform {
    double sx = 1.0; // common scale
    double ox = 0.0, oy = 0.0;
    double x0 = 0.0, y0 = 0.0, bh = 0.0;

    double px(double x) const { return ox + (x - x0) * sx; }
    double py(double y) const { return oy + (bh - (y - y0)) * sx; }
    std::string pt(const Point2& p) const { return fmt(px(p.x)) + "," + fmt(py(p.y)); }
};

struct Box {
    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    bool empty = true;

    void add(const Point2& p) {
        if (empty) {
            xmin = xmax = p.x;
            ymin = ymax = p.y;
            empty = false;
        } else {
            xmin = std::fmin(xmin, p.x);
            xmax = std::fmax(xmax, p.x);
            ymin = std::fmin(ymin, p.y);
            ymax = std::fmax(ymax, p.y);
        }
    }
};

Transform make_transform(const Box& box, const RenderStyle& style) {
    double bw = box.xmax - box.xmin;
    double bh = box.ymax - box.ymin;
    if (!(bw > 0.0)) bw = 1.0;
    if (!(bh > 0.0)) bh = 1.0;
    const double usable_w = style.width * (1.0 - 2.0 * style.margin);
    const double usable_h = style.height * (1.0 - 2.0 * style.margin);
    Transform t;
    t.sx = std::fmin(usable_w / bw, usable_h / bh);
    t.x0 = box.xmin;
    t.y0 = box.ymin;
    t.bh = bh;
    t.ox = 0.5 * (style.width - bw * t.sx);
    t.oy = 0.5 * (style.height - bh * t.sx);
    return t;
}

std::string polygon_element(const ConvexPolygon& poly, const Transform& t,
                            const std::string& attrs) {
    std::string pts;
    for (std::size_t i = 0; i < poly.vertices.size(); ++i) {
        if (i) pts += ' ';
        pts += t.pt(poly.vertices[i]);
    }
    return "<polygon points=\"" + pts + "\" " + attrs + "/>\n";
}

std::string star_path(double cx, double cy, double r) {
    // five-pointed star, tip up: 10 vertices alternating outer/inner radius
    std::string d;
    for (int k = 0; k < 10; ++k) {
        const double a = -1.5707963267948966 + k * 0.6283185307179586;
        const double rad = (k % 2 == 0) ? r : 0.4 * r;
        d += (k == 0 ? "M" : "L");
        d += fmt(cx + rad * std::cos(a)) + "," + fmt(cy + rad * std::sin(a));
    }
    d += "Z";
    return d;
}

std::string data_points_group(const Dataset& data, const Transform& t, const RenderStyle& s) {
    std::string out = "<g class=\"points\">\n";
    for (const Point2& p : data.points) {
        out += "<circle cx=\"" + fmt(t.px(p.x)) + "\" cy=\"" + fmt(t.py(p.y)) + "\" r=\"" +
               fmt(s.point_radius) + "\" fill=\"" + s.point_color + "\"/>\n";
    }
    out += "</g>\n";
    return out;
}

std::string outlier_marker(const Point2& p, const Transform& t, const RenderStyle& s) {
    const double x = t.px(p.x), y = t.py(p.y), r = s.outlier_size;
    return "<path d=\"M" + fmt(x - r) + "," + fmt(y - r) + "L" + fmt(x + r) + "," + fmt(y + r) +
           "M" + fmt(x - r) + "," + fmt(y + r) + "L" + fmt(x + r) + "," + fmt(y - r) +
           "\" stroke=\"" + s.outlier_color + "\" stroke-width=\"1.8\" fill=\"none\"/>\n";
}

std::string median_star(const Point2& p, const Transform& t, const RenderStyle& s) {
    return "<g class=\"median\"><path d=\"" + star_path(t.px(p.x), t.py(p.y), s.median_size) +
           "\" fill=\"" + s.median_color + "\" stroke=\"#7a5c0e\" stroke-width=\"0.8\"/></g>\n";
}

std::string caption_element(const std::string& caption) {
    if (caption.empty()) return {};
    return "<text x=\"12\" y=\"22\" font-family=\"sans-serif\" font-size=\"16\" fill=\"#333333\">" +
           caption + "</text>\n";
}

std::string adaptive_body(const BagplotModel& model, const RenderStyle& style,
                          const std::string& caption) {
    if (model.data.points.empty() || model.fence.degenerate())
        fail(ErrorKind::EmptyModel, kModule, "model has no renderable content");

    Box box;
    for (const Point2& p : model.data.points) box.add(p);
    for (const Point2& p : model.fence.vertices) box.add(p);
    const Transform t = make_transform(box, style);

    std::string out;
    out += "<rect width=\"" + std::to_string(style.width) + "\" height=\"" +
           std::to_string(style.height) + "\" fill=\"#ffffff\"/>\n";

    // one gradient per whisker, oriented along the whisker itself
    if (!model.whiskers.empty()) {
        out += "<defs>\n";
        for (const Whisker& w : model.whiskers) {
            out += "<linearGradient id=\"wg" + std::to_string(w.index) +
                   "\" gradientUnits=\"userSpaceOnUse\" x1=\"" + fmt(t.px(w.from.x)) +
                   "\" y1=\"" + fmt(t.py(w.from.y)) + "\" x2=\"" + fmt(t.px(w.to.x)) +
                   "\" y2=\"" + fmt(t.py(w.to.y)) + "\">\n" +
                   "<stop offset=\"0\" stop-color=\"" + style.whisker_color +
                   "\" stop-opacity=\"" + fmt(style.whisker_alpha_start) + "\"/>\n" +
                   "<stop offset=\"1\" stop-color=\"" + style.whisker_color +
                   "\" stop-opacity=\"" + fmt(style.whisker_alpha_end) + "\"/>\n" +
                   "</linearGradient>\n";
        }
        out += "</defs>\n";
        out += "<g class=\"whiskers\">\n";
        for (const Whisker& w : model.whiskers) {
            out += "<line x1=\"" + fmt(t.px(w.from.x)) + "\" y1=\"" + fmt(t.py(w.from.y)) +
                   "\" x2=\"" + fmt(t.px(w.to.x)) + "\" y2=\"" + fmt(t.py(w.to.y)) +
                   "\" stroke=\"url(#wg" + std::to_string(w.index) + ")\" stroke-width=\"" +
                   fmt(style.whisker_width) + "\"/>\n";
        }
        out += "</g>\n";
    }

    out += "<g class=\"bag\">" +
           polygon_element(model.bag.polygon, t,
                           "fill=\"" + style.bag_fill + "\" fill-opacity=\"" +
                               fmt(style.bag_opacity) + "\" stroke=\"" + style.bag_stroke +
                               "\" stroke-width=\"1\"") +
           "</g>\n";
    out += "<g class=\"fence\">" +
           polygon_element(model.fence, t,
                           "fill=\"none\" stroke=\"" + style.fence_stroke +
                               "\" stroke-width=\"" + fmt(style.fence_width) +
                               "\" stroke-dasharray=\"" + style.fence_dash + "\"") +
           "</g>\n";
    out += data_points_group(model.data, t, style);

    out += "<g class=\"outliers\">\n";
    for (std::size_t i = 0; i < model.classification.size(); ++i)
        if (model.classification[i] == PointClass::Outlier)
            out += outlier_marker(model.data[i], t, style);
    out += "</g>\n";
    out += median_star(model.profile.median, t, style);
    out += caption_element(caption);
    return out;
}

std::string classic_body(const ClassicModel& model, const RenderStyle& style,
                         const std::string& caption) {
    if (model.data.points.empty())
        fail(ErrorKind::EmptyModel, kModule, "model has no renderable content");

    Box box;
    for (const Point2& p : model.data.points) box.add(p);
    for (const Point2& p : model.loop_hull.vertices) box.add(p);
    const Transform t = make_transform(box, style);

    std::string out;
    out += "<rect width=\"" + std::to_string(style.width) + "\" height=\"" +
           std::to_string(style.height) + "\" fill=\"#ffffff\"/>\n";

    // the loop ("bolster"): hull of the non-outliers, drawn behind the bag
    std::string loop;
    if (model.loop_hull.degenerate()) {
        std::string pts;
        for (std::size_t i = 0; i < model.loop_hull.vertices.size(); ++i) {
            if (i) pts += ' ';
            pts += t.pt(model.loop_hull.vertices[i]);
        }
        loop = "<polyline points=\"" + pts + "\" fill=\"none\" stroke=\"" + style.loop_stroke +
               "\" stroke-width=\"1\"/>\n";
    } else {
        loop = polygon_element(model.loop_hull, t,
                               "fill=\"" + style.loop_fill + "\" fill-opacity=\"" +
                                   fmt(style.loop_opacity) + "\" stroke=\"" + style.loop_stroke +
                                   "\" stroke-width=\"1\"");
    }
    out += "<g class=\"loop\">" + loop + "</g>\n";

    out += "<g class=\"bag\">" +
           polygon_element(model.bag.polygon, t,
                           "fill=\"" + style.bag_fill + "\" fill-opacity=\"" +
                               fmt(style.bag_opacity) + "\" stroke=\"" + style.bag_stroke +
                               "\" stroke-width=\"1\"") +
           "</g>\n";
    out += data_points_group(model.data, t, style);

    out += "<g class=\"outliers\">\n";
    for (std::size_t i : model.outliers) out += outlier_marker(model.data[i], t, style);
    out += "</g>\n";
    out += median_star(model.profile.median, t, style);
    out += caption_element(caption);
    return out;
}

std::string document(const std::string& body, const RenderStyle& style) {
    return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
           "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           std::to_string(style.width) + "\" height=\"" + std::to_string(style.height) +
           "\" viewBox=\"0 0 " + std::to_string(style.width) + " " +
           std::to_string(style.height) + "\">\n" +
           body + "</svg>\n";
}

std::string element(const std::string& body, const RenderStyle& style, int x, int y) {
    return "<svg x=\"" + std::to_string(x) + "\" y=\"" + std::to_string(y) + "\" width=\"" +
           std::to_string(style.width) + "\" height=\"" + std::to_string(style.height) +
           "\" viewBox=\"0 0 " + std::to_string(style.width) + " " +
           std::to_string(style.height) + "\">\n" +
           body + "</svg>\n";
}

} // namespace

std::string render_svg(const BagplotModel& model, const RenderStyle& style) {
    return document(adaptive_body(model, style, {}), style);
}

std::string render_classic_svg(const ClassicModel& model, const RenderStyle& style) {
    return document(classic_body(model, style, {}), style);
}

std::string render_svg_element(const BagplotModel& model, const RenderStyle& style, int x, int y,
                               const std::string& caption) {
    return element(adaptive_body(model, style, caption), style, x, y);
}

std::string render_classic_svg_element(const ClassicModel& model, const RenderStyle& style,
                                       int x, int y, const std::string& caption) {
    return element(classic_body(model, style, caption), style, x, y);
}

} // namespace bagwhisker
