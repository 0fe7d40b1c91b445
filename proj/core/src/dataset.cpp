#include "bagwhisker/dataset.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <istream>
#include <optional>
#include <sstream>

#include "bagwhisker/errors.hpp"

namespace bagwhisker {

namespace {

constexpr const char* kModule = "dataset";

std::string trim(std::string_view s) {
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return std::string(s.substr(b, e - b));
}

std::optional<double> parse_number(const std::string& raw) {
    const std::string cell = trim(raw);
    if (cell.empty()) return std::nullopt;
    double value = 0.0;
    const char* first = cell.data();
    const char* last = cell.data() + cell.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc{} || ptr != last) return std::nullopt;
    if (!std::isfinite(value)) return std::nullopt;
    return value;
}

// One RFC-4180 record; quoted fields may contain commas, escaped quotes ("")
// and embedded newlines. Returns false at end of input.
bool read_record(std::istream& in, std::vector<std::string>& fields) {
    fields.clear();
    int c = in.get();
    if (c == EOF) return false;
    std::string field;
    bool quoted = false;
    while (true) {
        if (quoted) {
            if (c == EOF) break; // unterminated quote: accept what we have
            if (c == '"') {
                const int nxt = in.peek();
                if (nxt == '"') {
                    field.push_back('"');
                    in.get();
                } else {
                    quoted = false;
                }
            } else {
                field.push_back(static_cast<char>(c));
            }
        } else {
            if (c == EOF || c == '\n') break;
            if (c == '\r') {
                if (in.peek() == '\n') in.get();
                break;
            }
            if (c == ',') {
                fields.push_back(std::move(field));
                field.clear();
            } else if (c == '"' && field.empty()) {
                quoted = true;
            } else {
                field.push_back(static_cast<char>(c));
            }
        }
        c = in.get();
    }
    fields.push_back(std::move(field));
    return true;
}

std::size_t resolve_column(const ColumnRef& col, const std::vector<std::string>& header,
                           bool have_header) {
    if (!col.is_name()) return col.index;
    if (have_header) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (trim(header[i]) == col.name) return i;
        }
    }
    fail(ErrorKind::MissingColumn, kModule, "no column named '" + col.name + "' in header");
}

} // namespace

ColumnRef ColumnRef::by_name(std::string name) {
    ColumnRef c;
    c.name = std::move(name);
    return c;
}

ColumnRef ColumnRef::by_index(std::size_t index) {
    ColumnRef c;
    c.index = index;
    return c;
}

ColumnRef ColumnRef::parse(const std::string& spec) {
    if (!spec.empty()) {
        bool digits = true;
        for (char ch : spec) digits = digits && std::isdigit(static_cast<unsigned char>(ch));
        if (digits) return by_index(static_cast<std::size_t>(std::stoull(spec)));
    }
    return by_name(spec);
}

std::string ColumnRef::describe() const {
    return is_name() ? "'" + name + "'" : "#" + std::to_string(index);
}

Dataset parse_csv(std::istream& in, const ColumnRef& x_col, const ColumnRef& y_col) {
    std::vector<std::vector<std::string>> rows;
    std::vector<std::string> record;
    while (read_record(in, record)) {
        if (record.size() == 1 && trim(record[0]).empty()) continue; // blank line
        rows.push_back(record);
    }
    if (rows.empty()) fail(ErrorKind::TooFewRows, kModule, "no data rows (need at least 4)");

    // Header detection: with name selectors a header is mandatory; with index
    // selectors the first row is a header iff its selected cells are non-numeric.
    bool have_header;
    if (x_col.is_name() || y_col.is_name()) {
        have_header = true;
    } else {
        const auto& first = rows.front();
        const bool xs_num = x_col.index < first.size() && parse_number(first[x_col.index]).has_value();
        const bool ys_num = y_col.index < first.size() && parse_number(first[y_col.index]).has_value();
        have_header = !(xs_num && ys_num);
    }

    const std::vector<std::string> header = have_header ? rows.front() : std::vector<std::string>{};
    const std::size_t xi = resolve_column(x_col, header, have_header);
    const std::size_t yi = resolve_column(y_col, header, have_header);
    const std::size_t first_data = have_header ? 1 : 0;

    Dataset data;
    data.points.reserve(rows.size() - first_data);
    for (std::size_t r = first_data; r < rows.size(); ++r) {
        const auto& row = rows[r];
        const std::string row_label = "row " + std::to_string(r - first_data + 1);
        auto cell = [&](std::size_t idx, const ColumnRef& col) -> double {
            if (idx >= row.size())
                fail(ErrorKind::MissingColumn, kModule,
                     row_label + " has no column " + col.describe());
            const auto v = parse_number(row[idx]);
            if (!v)
                fail(ErrorKind::NonNumericCell, kModule,
                     row_label + ", column " + col.describe() + ": '" + trim(row[idx]) + "'");
            return *v;
        };
        data.points.push_back(Point2{cell(xi, x_col), cell(yi, y_col)});
    }

    if (data.size() < kMinRows)
        fail(ErrorKind::TooFewRows, kModule,
             "got " + std::to_string(data.size()) + " rows, need at least " +
                 std::to_string(kMinRows));
    return data;
}

Dataset parse_csv(std::string_view text, const ColumnRef& x_col, const ColumnRef& y_col) {
    std::istringstream in{std::string(text)};
    return parse_csv(in, x_col, y_col);
}

std::string to_csv(const Dataset& data) {
    std::string out = "x,y\n";
    char buf[64];
    for (const Point2& p : data.points) {
        std::snprintf(buf, sizeof buf, "%.17g,%.17g\n", p.x, p.y);
        out += buf;
    }
    return out;
}

double data_diameter(const Dataset& data) {
    if (data.points.empty()) return 0.0;
    double xmin = data.points[0].x, xmax = xmin, ymin = data.points[0].y, ymax = ymin;
    for (const Point2& p : data.points) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    return std::hypot(xmax - xmin, ymax - ymin);
}

} // namespace bagwhisker
