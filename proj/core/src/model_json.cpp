#include "bagwhisker/model_json.hpp"

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "bagwhisker/errors.hpp"

namespace bagwhisker {

namespace {

constexpr const char* kModule = "cli";

// --- writer -----------------------------------------------------------------

class Writer {
public:
    std::string take() { return std::move(out_); }

    void raw(const char* s) { out_ += s; }
    void raw(const std::string& s) { out_ += s; }

    void key(const char* name) {
        comma();
        out_ += '"';
        out_ += name;
        out_ += "\":";
        pending_comma_ = false;
    }

    void begin_object() {
        comma();
        out_ += '{';
        pending_comma_ = false;
    }
    void end_object() {
        out_ += '}';
        pending_comma_ = true;
    }
    void begin_array() {
        comma();
        out_ += '[';
        pending_comma_ = false;
    }
    void end_array() {
        out_ += ']';
        pending_comma_ = true;
    }

    void number(double v) {
        if (!std::isfinite(v))
            fail(ErrorKind::DomainError, kModule, "non-finite value in model serialization");
        comma();
        char buf[48];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        out_ += buf;
        pending_comma_ = true;
    }
    void integer(long long v) {
        comma();
        out_ += std::to_string(v);
        pending_comma_ = true;
    }
    void boolean(bool v) {
        comma();
        out_ += v ? "true" : "false";
        pending_comma_ = true;
    }
    void string(const std::string& s) {
        comma();
        out_ += '"';
        for (char c : s) {
            if (c == '"' || c == '\\') out_ += '\\';
            out_ += c;
        }
        out_ += '"';
        pending_comma_ = true;
    }

private:
    void comma() {
        if (pending_comma_) out_ += ',';
    }

    std::string out_;
    bool pending_comma_ = false;
};

void write_point(Writer& w, const Point2& p) {
    w.begin_array();
    w.number(p.x);
    w.number(p.y);
    w.end_array();
}

void write_polygon(Writer& w, const ConvexPolygon& poly) {
    w.begin_array();
    for (const Point2& v : poly.vertices) write_point(w, v);
    w.end_array();
}

void write_indices(Writer& w, const std::vector<std::size_t>& idx) {
    w.begin_array();
    for (std::size_t i : idx) w.integer(static_cast<long long>(i));
    w.end_array();
}

void write_doubles(Writer& w, const std::vector<double>& values) {
    w.begin_array();
    for (double v : values) w.number(v);
    w.end_array();
}

void write_common_head(Writer& w, const char* kind, const Dataset& data,
                       const DepthProfile& profile, const Bag& bag) {
    w.key("schema_version");
    w.integer(kSchemaVersion);
    w.key("kind");
    w.string(kind);
    w.key("points");
    w.begin_array();
    for (const Point2& p : data.points) write_point(w, p);
    w.end_array();
    w.key("profile");
    w.begin_object();
    w.key("depths");
    w.begin_array();
    for (int d : profile.depths) w.integer(d);
    w.end_array();
    w.key("max_depth");
    w.integer(profile.max_depth);
    w.key("deepest_set");
    write_indices(w, profile.deepest_set);
    w.key("median");
    write_point(w, profile.median);
    w.end_object();
    w.key("bag");
    w.begin_object();
    w.key("polygon");
    write_polygon(w, bag.polygon);
    w.key("inner_k");
    w.integer(bag.inner_k);
    w.key("interpolation_t");
    w.number(bag.interpolation_t);
    w.key("contained_count");
    w.integer(static_cast<long long>(bag.contained_count));
    w.key("degenerate");
    w.boolean(bag.degenerate);
    w.end_object();
}

void write_style(Writer& w, const RenderStyle& s) {
    w.key("style");
    w.begin_object();
    w.key("width");
    w.integer(s.width);
    w.key("height");
    w.integer(s.height);
    w.key("margin");
    w.number(s.margin);
    w.key("bag_fill");
    w.string(s.bag_fill);
    w.key("bag_opacity");
    w.number(s.bag_opacity);
    w.key("bag_stroke");
    w.string(s.bag_stroke);
    w.key("fence_stroke");
    w.string(s.fence_stroke);
    w.key("fence_width");
    w.number(s.fence_width);
    w.key("fence_dash");
    w.string(s.fence_dash);
    w.key("whisker_color");
    w.string(s.whisker_color);
    w.key("whisker_alpha_start");
    w.number(s.whisker_alpha_start);
    w.key("whisker_alpha_end");
    w.number(s.whisker_alpha_end);
    w.key("whisker_width");
    w.number(s.whisker_width);
    w.key("point_color");
    w.string(s.point_color);
    w.key("point_radius");
    w.number(s.point_radius);
    w.key("outlier_color");
    w.string(s.outlier_color);
    w.key("outlier_size");
    w.number(s.outlier_size);
    w.key("median_color");
    w.string(s.median_color);
    w.key("median_size");
    w.number(s.median_size);
    w.key("loop_fill");
    w.string(s.loop_fill);
    w.key("loop_opacity");
    w.number(s.loop_opacity);
    w.key("loop_stroke");
    w.string(s.loop_stroke);
    w.end_object();
}

// --- reader -----------------------------------------------------------------

using Json = nlohmann::json;

Point2 read_point(const Json& j) { return {j.at(0).get<double>(), j.at(1).get<double>()}; }

ConvexPolygon read_polygon(const Json& j) {
    ConvexPolygon poly;
    for (const Json& v : j) poly.vertices.push_back(read_point(v));
    return poly;
}

std::vector<std::size_t> read_indices(const Json& j) {
    std::vector<std::size_t> out;
    for (const Json& v : j) out.push_back(v.get<std::size_t>());
    return out;
}

TestMethod method_from_string(const std::string& s) {
    if (s == "fwer") return TestMethod::FwerHolm;
    if (s == "fdr") return TestMethod::FdrBH;
    if (s == "pfer") return TestMethod::PferBonferroni;
    fail(ErrorKind::BadConfig, kModule, "unknown method '" + s + "'");
}

PointClass class_from_string(const std::string& s) {
    if (s == "in_bag") return PointClass::InBag;
    if (s == "outer") return PointClass::Outer;
    if (s == "outlier") return PointClass::Outlier;
    fail(ErrorKind::BadConfig, kModule, "unknown classification '" + s + "'");
}

void read_common(const Json& j, Dataset& data, DepthProfile& profile, Bag& bag) {
    for (const Json& p : j.at("points")) data.points.push_back(read_point(p));
    const Json& prof = j.at("profile");
    for (const Json& d : prof.at("depths")) profile.depths.push_back(d.get<int>());
    profile.max_depth = prof.at("max_depth").get<int>();
    profile.deepest_set = read_indices(prof.at("deepest_set"));
    profile.median = read_point(prof.at("median"));
    const Json& jb = j.at("bag");
    bag.polygon = read_polygon(jb.at("polygon"));
    bag.inner_k = jb.at("inner_k").get<int>();
    bag.interpolation_t = jb.at("interpolation_t").get<double>();
    bag.contained_count = jb.at("contained_count").get<std::size_t>();
    bag.degenerate = jb.at("degenerate").get<bool>();
}

RenderStyle read_style(const Json& j) {
    RenderStyle s;
    s.width = j.at("width").get<int>();
    s.height = j.at("height").get<int>();
    s.margin = j.at("margin").get<double>();
    s.bag_fill = j.at("bag_fill").get<std::string>();
    s.bag_opacity = j.at("bag_opacity").get<double>();
    s.bag_stroke = j.at("bag_stroke").get<std::string>();
    s.fence_stroke = j.at("fence_stroke").get<std::string>();
    s.fence_width = j.at("fence_width").get<double>();
    s.fence_dash = j.at("fence_dash").get<std::string>();
    s.whisker_color = j.at("whisker_color").get<std::string>();
    s.whisker_alpha_start = j.at("whisker_alpha_start").get<double>();
    s.whisker_alpha_end = j.at("whisker_alpha_end").get<double>();
    s.whisker_width = j.at("whisker_width").get<double>();
    s.point_color = j.at("point_color").get<std::string>();
    s.point_radius = j.at("point_radius").get<double>();
    s.outlier_color = j.at("outlier_color").get<std::string>();
    s.outlier_size = j.at("outlier_size").get<double>();
    s.median_color = j.at("median_color").get<std::string>();
    s.median_size = j.at("median_size").get<double>();
    s.loop_fill = j.at("loop_fill").get<std::string>();
    s.loop_opacity = j.at("loop_opacity").get<double>();
    s.loop_stroke = j.at("loop_stroke").get<std::string>();
    return s;
}

} // namespace

const char* to_string(TestMethod method) {
    switch (method) {
        case TestMethod::FwerHolm: return "fwer";
        case TestMethod::FdrBH: return "fdr";
        case TestMethod::PferBonferroni: return "pfer";
    }
    return "?";
}

std::string model_to_json(const BagplotModel& model, const RenderStyle& style) {
    Writer w;
    w.begin_object();
    write_common_head(w, "adaptive", model.data, model.profile, model.bag);

    w.key("estimate");
    w.begin_object();
    w.key("location");
    write_point(w, model.estimate.location);
    w.key("scatter");
    w.begin_array();
    w.begin_array();
    w.number(model.estimate.scatter.xx);
    w.number(model.estimate.scatter.xy);
    w.end_array();
    w.begin_array();
    w.number(model.estimate.scatter.xy);
    w.number(model.estimate.scatter.yy);
    w.end_array();
    w.end_array();
    w.key("h");
    w.integer(static_cast<long long>(model.estimate.h));
    w.key("raw_subset");
    write_indices(w, model.estimate.raw_subset);
    w.key("raw_determinant");
    w.number(model.estimate.raw_determinant);
    w.key("reweighted_count");
    w.integer(static_cast<long long>(model.estimate.reweighted_count));
    w.end_object();

    w.key("outcome");
    w.begin_object();
    w.key("method");
    w.string(to_string(model.outcome.method));
    w.key("q");
    w.number(model.outcome.q);
    w.key("d2");
    write_doubles(w, model.outcome.d2);
    w.key("pvalues");
    write_doubles(w, model.outcome.pvalues);
    w.key("t_adj");
    w.number(model.outcome.t_adj);
    w.key("d2_adj");
    w.number(model.outcome.d2_adj);
    w.key("rejected");
    write_indices(w, model.outcome.rejected);
    w.key("pvalue_underflows");
    w.integer(static_cast<long long>(model.outcome.pvalue_underflows));
    w.end_object();

    w.key("lambda_stat");
    w.number(model.lambda_stat);
    w.key("lambda_data");
    w.number(model.lambda_data);
    w.key("lambda");
    w.number(model.lambda);
    w.key("fence");
    write_polygon(w, model.fence);

    w.key("classification");
    w.begin_array();
    for (PointClass c : model.classification) w.string(to_string(c));
    w.end_array();

    w.key("whiskers");
    w.begin_array();
    for (const Whisker& wh : model.whiskers) {
        w.begin_object();
        w.key("index");
        w.integer(static_cast<long long>(wh.index));
        w.key("from");
        write_point(w, wh.from);
        w.key("to");
        write_point(w, wh.to);
        w.end_object();
    }
    w.end_array();

    w.key("outliers");
    write_indices(w, model.outlier_indices());
    write_style(w, style);
    w.end_object();
    w.raw("\n");
    return w.take();
}

std::string model_to_json(const ClassicModel& model, const RenderStyle& style) {
    Writer w;
    w.begin_object();
    write_common_head(w, "classic", model.data, model.profile, model.bag);
    w.key("fence3");
    write_polygon(w, model.fence3);
    w.key("loop_hull");
    write_polygon(w, model.loop_hull);
    w.key("outliers");
    write_indices(w, model.outliers);
    write_style(w, style);
    w.end_object();
    w.raw("\n");
    return w.take();
}

StoredModel model_from_json(std::string_view text) {
    Json j = Json::parse(text, nullptr, false);
    if (j.is_discarded()) fail(ErrorKind::BadConfig, kModule, "invalid JSON");
    if (!j.contains("schema_version") || j.at("schema_version").get<int>() != kSchemaVersion)
        fail(ErrorKind::BadConfig, kModule, "unsupported schema_version");

    StoredModel stored;
    stored.style = read_style(j.at("style"));
    const std::string kind = j.at("kind").get<std::string>();

    if (kind == "classic") {
        ClassicModel model;
        read_common(j, model.data, model.profile, model.bag);
        model.fence3 = read_polygon(j.at("fence3"));
        model.loop_hull = read_polygon(j.at("loop_hull"));
        model.outliers = read_indices(j.at("outliers"));
        stored.model = std::move(model);
        return stored;
    }
    if (kind != "adaptive") fail(ErrorKind::BadConfig, kModule, "unknown model kind '" + kind + "'");

    BagplotModel model;
    read_common(j, model.data, model.profile, model.bag);
    const Json& je = j.at("estimate");
    model.estimate.location = read_point(je.at("location"));
    model.estimate.scatter.xx = je.at("scatter").at(0).at(0).get<double>();
    model.estimate.scatter.xy = je.at("scatter").at(0).at(1).get<double>();
    model.estimate.scatter.yy = je.at("scatter").at(1).at(1).get<double>();
    model.estimate.h = je.at("h").get<std::size_t>();
    model.estimate.raw_subset = read_indices(je.at("raw_subset"));
    model.estimate.raw_determinant = je.at("raw_determinant").get<double>();
    model.estimate.reweighted_count = je.at("reweighted_count").get<std::size_t>();

    const Json& jo = j.at("outcome");
    model.outcome.method = method_from_string(jo.at("method").get<std::string>());
    model.outcome.q = jo.at("q").get<double>();
    for (const Json& v : jo.at("d2")) model.outcome.d2.push_back(v.get<double>());
    for (const Json& v : jo.at("pvalues")) model.outcome.pvalues.push_back(v.get<double>());
    model.outcome.t_adj = jo.at("t_adj").get<double>();
    model.outcome.d2_adj = jo.at("d2_adj").get<double>();
    model.outcome.rejected = read_indices(jo.at("rejected"));
    model.outcome.pvalue_underflows = jo.at("pvalue_underflows").get<std::size_t>();

    model.lambda_stat = j.at("lambda_stat").get<double>();
    model.lambda_data = j.at("lambda_data").get<double>();
    model.lambda = j.at("lambda").get<double>();
    model.fence = read_polygon(j.at("fence"));
    for (const Json& c : j.at("classification"))
        model.classification.push_back(class_from_string(c.get<std::string>()));
    for (const Json& wj : j.at("whiskers")) {
        Whisker wh;
        wh.index = wj.at("index").get<std::size_t>();
        wh.from = read_point(wj.at("from"));
        wh.to = read_point(wj.at("to"));
        model.whiskers.push_back(wh);
    }
    stored.model = std::move(model);
    return stored;
}

std::string render_stored(const StoredModel& stored) {
    if (stored.is_classic())
        return render_classic_svg(std::get<ClassicModel>(stored.model), stored.style);
    return render_svg(std::get<BagplotModel>(stored.model), stored.style);
}

} // namespace bagwhisker
