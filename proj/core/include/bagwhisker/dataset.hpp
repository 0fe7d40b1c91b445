#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace bagwhisker {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
};

// Ordered bivariate observations. Indices are stable across the whole
// pipeline; duplicates are kept. At least 4 rows (p + 2 with p = 2) so the
// 3-point MCD starts exist and a nondegenerate covariance is possible.
struct Dataset {
    std::vector<Point2> points;

    std::size_t size() const { return points.size(); }
    const Point2& operator[](std::size_t i) const { return points[i]; }
};

constexpr std::size_t kMinRows = 4;

// Selects a CSV column either by header name or by 0-based position.
struct ColumnRef {
    static ColumnRef by_name(std::string name);
    static ColumnRef by_index(std::size_t index);

    // "3" -> index 3, anything else -> name
    static ColumnRef parse(const std::string& spec);

    bool is_name() const { return !name.empty(); }
    std::string describe() const;

    std::string name;
    std::size_t index = 0;
};

// RFC-4180 CSV (comma delimiter, double-quote quoting, '.' decimal point).
// A header row is auto-detected: the first row whose selected cells do not
// parse as numbers. Name selectors require a header. Rows with non-finite
// selected cells (NaN/Inf or garbage) are a hard error, never dropped.
Dataset parse_csv(std::istream& in, const ColumnRef& x_col, const ColumnRef& y_col);
Dataset parse_csv(std::string_view text, const ColumnRef& x_col, const ColumnRef& y_col);

// "x,y" header plus one row per point, 17 significant digits so that
// parse_csv(to_csv(d)) reproduces every coordinate bit-exactly.
std::string to_csv(const Dataset& data);

// Max pairwise coordinate span (bounding-box diagonal); 0 for coincident data.
double data_diameter(const Dataset& data);

} // namespace bagwhisker
