#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "builders.hpp"
#include "coarsepath/errors.hpp"
#include "coarsepath/graph.hpp"
#include "coarsepath/harness.hpp"

using namespace coarsepath;

TEST_CASE("graph6 decoding of known strings") {
    Graph c6 = decode_graph6("EhEG");
    CHECK(c6.n() == 6);
    CHECK(c6.edge_count() == 6);
    for (int i = 0; i < 6; ++i) CHECK(c6.has_edge(i, (i + 1) % 6));
    CHECK(c6.dist(0, 3) == 3);

    Graph k2 = decode_graph6("A_");
    CHECK(k2.n() == 2);
    CHECK(k2.has_edge(0, 1));

    // optional header prefix and surrounding whitespace are accepted
    CHECK(decode_graph6(">>graph6<<EhEG\n").edge_count() == 6);
}

TEST_CASE("graph6 rejects malformed input") {
    CHECK_THROWS_AS(decode_graph6(""), ParseError);
    CHECK_THROWS_AS(decode_graph6("E"), ParseError);       // truncated body
    CHECK_THROWS_AS(decode_graph6("EhEGG"), ParseError);   // body too long
    CHECK_THROWS_AS(decode_graph6("E\x01\x01\x01"), ParseError);
    CHECK_THROWS_AS(decode_graph6("D?_"), NotConnected);   // P2 + 2 isolated
}

TEST_CASE("encode is the inverse of decode") {
    for (const char* s : {"A_", "Bw", "Ch", "D~{", "EhEG"}) {
        CHECK(encode_graph6(decode_graph6(s)) == s);
    }
}

TEST_CASE("round trip across the whole small corpus") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            std::string s = encode_graph6(g);
            Graph back = decode_graph6(s);
            CHECK(encode_graph6(back) == s);
            CHECK(back.edge_count() == g.edge_count());
        }
}

TEST_CASE("edge list parsing") {
    Graph g = parse_edgelist("0 1\n1 2\n# comment\n\n2 3\n");
    CHECK(g.n() == 4);
    CHECK(g.dist(0, 3) == 3);
    CHECK_THROWS_AS(parse_edgelist("0 1 2\n"), ParseError);
    CHECK_THROWS_AS(parse_edgelist("zero one\n"), ParseError);
    CHECK_THROWS_AS(parse_edgelist(""), ParseError);
    CHECK_THROWS_AS(parse_edgelist("0 0\n"), NotSimple);
    CHECK_THROWS_AS(parse_edgelist("0 1\n1 0\n"), NotSimple);
    CHECK_THROWS_AS(parse_edgelist("0 1\n2 3\n"), NotConnected);
}

TEST_CASE("distances, eccentricity, diameter, radius") {
    Graph c6 = make_cycle(6);
    CHECK(c6.diameter() == 3);
    CHECK(c6.radius() == 3);
    Graph p4 = make_path(4);
    CHECK(p4.eccentricity(0) == 3);
    CHECK(p4.eccentricity(1) == 2);
    CHECK(p4.diameter() == 3);
    CHECK(p4.radius() == 2);
}

TEST_CASE("graph powers") {
    Graph c6 = make_cycle(6);
    Graph c6sq = power(c6, 2);
    CHECK(c6sq.has_edge(0, 2));
    CHECK(!c6sq.has_edge(0, 3));
    CHECK(power(c6, 3).edge_count() == 15);  // diameter 3 makes it complete
    CHECK_THROWS_AS(power(c6, 0), InvalidK);

    // monotone: each power's edges survive into the next
    for (int k = 1; k < 3; ++k)
        for (auto [u, v] : power(c6, k).edges()) CHECK(power(c6, k + 1).has_edge(u, v));
}

TEST_CASE("disks nest and match distances") {
    Graph g = make_spider(3);
    for (int r = 0; r < 4; ++r) {
        VertexSet inner = disk(g, 0, r);
        VertexSet outer = disk(g, 0, r + 1);
        CHECK(inner.is_subset_of(outer));
    }
    CHECK(disk(g, 0, 0).size() == 1);
    CHECK(disk(g, 0, 3).size() == g.n());
}

TEST_CASE("connectivity after deleting a set") {
    Graph c6 = make_cycle(6);
    CHECK(connected_avoiding(c6, 0, 2, VertexSet::of(6, {1})));
    CHECK(!connected_avoiding(c6, 0, 2, VertexSet::of(6, {1, 4})));
    // endpoint inside the removed set counts as disconnected
    CHECK(!connected_avoiding(c6, 0, 2, VertexSet::of(6, {0})));

    auto path = shortest_path_avoiding(c6, 0, 2, VertexSet::of(6, {1}));
    CHECK(path == std::vector<int>{0, 5, 4, 3, 2});
    CHECK(shortest_path_avoiding(c6, 0, 2, VertexSet::of(6, {1, 4})).empty());
}

TEST_CASE("construction guards") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), NotSimple);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}}), NotConnected);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 5}}), ParseError);
    CHECK(Graph::from_edges(1, {}).n() == 1);
}
