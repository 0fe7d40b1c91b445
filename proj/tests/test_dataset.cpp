#include <doctest.h>

#include <cmath>
#include <functional>

#include "bagwhisker/dataset.hpp"
#include "bagwhisker/errors.hpp"
#include "bagwhisker/prng.hpp"
#include "support/toy.hpp"

using namespace bagwhisker;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("expected an Error");
    return ErrorKind::DomainError;
}

} // namespace

TEST_SUITE("dataset") {

TEST_CASE("toy csv parses in file order") {
    const Dataset d = parse_csv(testdata::toy_csv(), ColumnRef::by_name("x"), ColumnRef::by_name("y"));
    REQUIRE(d.size() == 8);
    CHECK(d[0] == Point2{7, 5});
    CHECK(d[4] == Point2{14, 9});
    CHECK(d[7] == Point2{19, 20});
}

TEST_CASE("too few rows is a hard error") {
    CHECK(kind_of([] {
              parse_csv("x,y\n7,5\n7,7\n", ColumnRef::by_name("x"), ColumnRef::by_name("y"));
          }) == ErrorKind::TooFewRows);
}

TEST_CASE("non-numeric cells are rejected with location") {
    try {
        parse_csv("a,b\n1,2\n3,NaN\n5,6\n7,8\n", ColumnRef::by_name("a"), ColumnRef::by_name("b"));
        FAIL("expected NonNumericCell");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::NonNumericCell);
        CHECK(std::string(e.what()).find("row 2") != std::string::npos);
        CHECK(std::string(e.what()).find("'b'") != std::string::npos);
    }
    // Inf is just as unwelcome as NaN
    CHECK(kind_of([] {
              parse_csv("a,b\n1,2\n3,inf\n5,6\n7,8\n", ColumnRef::by_name("a"),
                        ColumnRef::by_name("b"));
          }) == ErrorKind::NonNumericCell);
}

TEST_CASE("missing columns") {
    CHECK(kind_of([] {
              parse_csv(testdata::toy_csv(), ColumnRef::by_name("nope"), ColumnRef::by_name("y"));
          }) == ErrorKind::MissingColumn);
    CHECK(kind_of([] {
              parse_csv("1,2\n3,4\n5,6\n7,8\n", ColumnRef::by_index(0), ColumnRef::by_index(5));
          }) == ErrorKind::MissingColumn);
}

TEST_CASE("header auto-detection with index selectors") {
    // headerless numeric data
    const Dataset bare = parse_csv("1,2\n3,4\n5,6\n7,8\n", ColumnRef::by_index(0),
                                   ColumnRef::by_index(1));
    CHECK(bare.size() == 4);
    CHECK(bare[0] == Point2{1, 2});
    // header skipped when the selected cells are non-numeric
    const Dataset headed = parse_csv("x,y\n1,2\n3,4\n5,6\n7,8\n", ColumnRef::by_index(0),
                                     ColumnRef::by_index(1));
    CHECK(headed.size() == 4);
    CHECK(headed[0] == Point2{1, 2});
}

TEST_CASE("rfc-4180 quoting") {
    const char* text =
        "label,x,y\n\"al,pha\",\"1\",2\n\"be\"\"ta\",3,4\ngamma,5,6\ndelta,7,8\n";
    const Dataset d = parse_csv(text, ColumnRef::by_name("x"), ColumnRef::by_name("y"));
    REQUIRE(d.size() == 4);
    CHECK(d[0] == Point2{1, 2});
    CHECK(d[3] == Point2{7, 8});
}

TEST_CASE("parsing is deterministic") {
    const Dataset a = parse_csv(testdata::toy_csv(), ColumnRef::by_name("x"), ColumnRef::by_name("y"));
    const Dataset b = parse_csv(testdata::toy_csv(), ColumnRef::by_name("x"), ColumnRef::by_name("y"));
    CHECK(a.points == b.points);
}

TEST_CASE("csv round trip is bit exact") {
    Xoshiro256pp rng(7);
    Dataset d;
    for (int i = 0; i < 50; ++i) {
        const double x = (rng.uniform() - 0.5) * std::pow(10.0, 300.0 * (rng.uniform() - 0.5));
        const double y = rng.gauss() / 3.0;
        d.points.push_back({x, y});
    }
    d.points.push_back({1.0 / 3.0, -0.0});
    d.points.push_back({1e-300, 1e300});
    const Dataset back = parse_csv(to_csv(d), ColumnRef::by_name("x"), ColumnRef::by_name("y"));
    REQUIRE(back.size() == d.size());
    for (std::size_t i = 0; i < d.size(); ++i) {
        CHECK(back[i].x == d[i].x);
        CHECK(back[i].y == d[i].y);
    }
}

} // TEST_SUITE
