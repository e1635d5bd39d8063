#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builders.hpp"
#include "coarsepath/errors.hpp"
#include "coarsepath/harness.hpp"
#include "coarsepath/layering.hpp"

using namespace coarsepath;

TEST_CASE("plain layering of a cycle") {
    Graph c6 = make_cycle(6);
    Layering l = layering(c6, 0);
    REQUIRE(l.layers.size() == 4);
    CHECK(l.layers[0] == VertexSet::of(6, {0}));
    CHECK(l.layers[1] == VertexSet::of(6, {1, 5}));
    CHECK(l.layers[2] == VertexSet::of(6, {2, 4}));
    CHECK(l.layers[3] == VertexSet::of(6, {3}));
    CHECK(l.length == 2);   // {1,5} and {2,4} have diameter 2 in the cycle
    CHECK(l.breadth == 1);  // each layer sits inside one radius-1 disk
}

TEST_CASE("extended layering of a cycle") {
    Graph c6 = make_cycle(6);
    ExtendedLayering e = extended_layering(c6, 0);
    CHECK(validate(c6, e.decomposition).empty());
    CHECK(e.length == 3);
    CHECK(e.breadth == 2);
}

TEST_CASE("best start vertex") {
    auto best_c6 = best_extended_layering(make_cycle(6));
    CHECK(best_c6.delta == 3);
    CHECK(best_c6.rho == 2);
    CHECK(best_c6.start == 0);  // symmetric, lowest start wins

    auto best_p5 = best_extended_layering(make_path(5));
    CHECK(best_p5.delta == 1);  // from an endpoint the bags are edges
    CHECK(best_p5.rho == 1);
    CHECK(best_p5.start == 0);

    auto best_k5 = best_extended_layering(make_complete(5));
    CHECK(best_k5.delta == 1);
    CHECK(best_k5.rho == 1);

    auto single = best_extended_layering(Graph::from_edges(1, {}));
    CHECK(single.delta == 0);
    CHECK(single.rho == 0);
}

TEST_CASE("caterpillar distances") {
    Caterpillar t;
    t.n = 5;
    t.spine = {0, 1, 2};
    t.attach = {-1, -1, -1, 1, 2};
    CHECK(t.dist(0, 2) == 2);
    CHECK(t.dist(3, 1) == 1);
    CHECK(t.dist(3, 0) == 2);
    CHECK(t.dist(3, 4) == 3);
    CHECK(t.dist(4, 4) == 0);
    auto pos = t.spine_position();
    CHECK(pos[3] == 1);
    CHECK(pos[4] == 2);
    CHECK(pos[0] == 0);
}

TEST_CASE("canonical caterpillar of a path is the path") {
    Graph p5 = make_path(5);
    Caterpillar t = canonical_caterpillar(p5, 0);
    CHECK(t.spine == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(distortion(p5, t) == 0);
    CHECK(approx_adc(p5).distortion == 0);
}

TEST_CASE("exact caterpillar distortion on reference graphs") {
    CHECK(exact_adc(make_path(6)) == 0);
    CHECK(exact_adc(make_star(4)) == 0);
    CHECK(exact_adc(make_complete(4)) == 1);
    CHECK(exact_adc(make_cycle(4)) == 1);
    CHECK(exact_adc(make_cycle(6)) == 2);
    CHECK(exact_adc(make_spider(2)) == 1);  // the middle of a leg must hang off the spine
    CHECK(exact_adc(Graph::from_edges(1, {})) == 0);
    CHECK_THROWS_AS(exact_adc(make_ladder(4)), TooLarge);
}

TEST_CASE("approximation stays within its guarantee") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            int exact = exact_adc(g);
            auto approx = approx_adc(g);
            CHECK(distortion(g, approx.tree) == approx.distortion);
            CHECK(approx.distortion >= exact);
            CHECK(approx.distortion <= 3 * exact + 2);
        }
}

TEST_CASE("decomposition from a caterpillar") {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            auto approx = approx_adc(g);
            int k = approx.distortion;
            PathDecomposition pd = decomposition_from_caterpillar(g, approx.tree, k);
            CHECK(validate(g, pd).empty());
            CHECK(metrics(g, pd).length <= 2 * k + 1);
        }

    Graph c6 = make_cycle(6);
    auto approx = approx_adc(c6);
    REQUIRE(approx.distortion > 0);
    CHECK_THROWS_AS(decomposition_from_caterpillar(c6, approx.tree, approx.distortion - 1),
                    DistortionExceeded);
}
