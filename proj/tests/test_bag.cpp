#include <doctest.h>

#include "bagwhisker/bag.hpp"
#include "bagwhisker/errors.hpp"
#include "bagwhisker/sim.hpp"
#include "support/oracles.hpp"
#include "support/toy.hpp"

using namespace bagwhisker;

TEST_SUITE("bag") {

TEST_CASE("toy bag is exactly the depth-2 hull") {
    const Dataset d = testdata::toy();
    const DepthProfile p = depth_profile(d, DepthOptions{});
    const Bag bag = construct_bag(d, p);

    REQUIRE(bag.polygon.size() == 3);
    CHECK(bag.polygon.vertices[0] == Point2{5, 4});
    CHECK(bag.polygon.vertices[1] == Point2{9, 4});
    CHECK(bag.polygon.vertices[2] == Point2{7, 7});
    CHECK(bag.inner_k == 2);
    CHECK(bag.interpolation_t == 0.0);
    CHECK(bag.contained_count == 4); // |D_2| = n/2 exactly
    CHECK_FALSE(bag.degenerate);
    CHECK(containment(p.median, bag.polygon) == Containment::Inside);
}

TEST_CASE("all depths equal: bag is the hull of everything") {
    const Dataset d{{{0, 0}, {4, 0}, {4, 4}, {0, 4}}};
    const DepthProfile p = depth_profile(d, DepthOptions{});
    REQUIRE(p.max_depth == 1);
    const Bag bag = construct_bag(d, p);
    CHECK(bag.polygon.size() == 4);
    CHECK(bag.contained_count == 4);
    CHECK(bag.interpolation_t == 0.0);
    CHECK(containment(p.median, bag.polygon) == Containment::Inside);
}

TEST_CASE("collinear data produces a flagged, thickened bag") {
    Dataset d;
    for (int i = 0; i < 6; ++i) d.points.push_back({double(i), 2.0 * i});
    const DepthProfile p = depth_profile(d, DepthOptions{});
    const Bag bag = construct_bag(d, p);
    CHECK(bag.degenerate);
    CHECK_FALSE(bag.polygon.degenerate()); // usable by ray intersection / scaling
    CHECK(containment(p.median, bag.polygon) == Containment::Inside);
}

TEST_CASE("interpolated bags stay nested and hold at least half the data") {
    int interpolated_runs = 0;
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const Dataset d = oracles::random_dataset(31 + 2 * (seed % 3), seed * 613);
        const DepthProfile p = depth_profile(d, DepthOptions{});
        const Bag bag = construct_bag(d, p);
        const std::size_t n = d.size();
        const std::size_t target = (n + 1) / 2;

        CHECK(bag.contained_count >= target);
        CHECK(containment(p.median, bag.polygon) == Containment::Inside);

        if (bag.interpolation_t > 0.0) {
            ++interpolated_runs;
            const ConvexPolygon inner = depth_region(d, p, bag.inner_k);
            const ConvexPolygon outer = depth_region(d, p, bag.inner_k - 1);
            for (const Point2& v : inner.vertices)
                CHECK(containment(v, bag.polygon) != Containment::Outside);
            for (const Point2& v : bag.polygon.vertices)
                CHECK(containment(v, outer) != Containment::Outside);

            // never holds more points than the outer depth region has
            std::size_t outer_count = 0;
            for (int depth : p.depths)
                if (depth >= bag.inner_k - 1) ++outer_count;
            CHECK(bag.contained_count <= outer_count);
        }
    }
    CHECK(interpolated_runs > 0); // the seeds above do exercise the blend path
}

TEST_CASE("simulated designs keep the median interior") {
    MixtureSpec spec;
    spec.n = 200;
    spec.seed = 5;
    const Dataset mix = gen_mixture(spec).data;
    const DepthProfile pm = depth_profile(mix, DepthOptions{});
    const Bag bm = construct_bag(mix, pm);
    CHECK(containment(pm.median, bm.polygon) == Containment::Inside);
    CHECK(bm.contained_count >= 100);

    const Dataset logn = gen_lognormal(101, 0.5, 9);
    const DepthProfile pl = depth_profile(logn, DepthOptions{});
    const Bag bl = construct_bag(logn, pl);
    CHECK(containment(pl.median, bl.polygon) == Containment::Inside);
    CHECK(bl.contained_count >= 51);
}

TEST_CASE("refuses undersized data") {
    Dataset d{{{0, 0}, {1, 0}, {0, 1}}};
    DepthProfile p = depth_profile(d, DepthOptions{});
    CHECK_THROWS_AS((void)construct_bag(d, p), Error);
}

} // TEST_SUITE
