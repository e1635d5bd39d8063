#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <set>

#include "builders.hpp"
#include "coarsepath/errors.hpp"
#include "coarsepath/harness.hpp"

using namespace coarsepath;

TEST_CASE("connected graph counts per isomorphism class") {
    const int expected[] = {1, 1, 2, 6, 21, 112, 853};
    for (int n = 1; n <= 7; ++n) {
        auto corpus = enumerate_connected_graphs(n);
        CHECK(static_cast<int>(corpus.size()) == expected[n - 1]);
        std::set<std::string> codes;
        for (const auto& g : corpus) {
            CHECK(g.n() == n);
            codes.insert(encode_graph6(g));
        }
        CHECK(codes.size() == corpus.size());  // pairwise distinct representatives
    }
    CHECK_THROWS_AS(enumerate_connected_graphs(9), TooLarge);
}

TEST_CASE("eight-vertex corpus") {
    CHECK(enumerate_connected_graphs(8).size() == 11117);
}

TEST_CASE("random graphs are reproducible") {
    Graph a = random_connected_graph(9, 0.3, 123);
    Graph b = random_connected_graph(9, 0.3, 123);
    CHECK(encode_graph6(a) == encode_graph6(b));
    Graph c = random_connected_graph(9, 0.3, 124);
    CHECK(encode_graph6(a) != encode_graph6(c));  // overwhelmingly likely

    CHECK(random_connected_graph(5, 1.0, 7).edge_count() == 10);
    CHECK(random_connected_graph(1, 0.5, 7).n() == 1);
    CHECK_THROWS_AS(random_connected_graph(3, 0.0, 7), std::invalid_argument);
}

TEST_CASE("full report on a six-cycle") {
    Graph c6 = make_cycle(6);
    ParameterReport r = compute_all_parameters(c6);
    CHECK(r.graph6 == "EhEG");
    REQUIRE(r.pl);
    CHECK(r.pl->value == 3);
    REQUIRE(r.pb);
    CHECK(r.pb->value == 2);
    CHECK(r.layering.delta == 3);
    CHECK(r.layering.rho == 2);
    REQUIRE(r.adc);
    CHECK(*r.adc == 2);
    CHECK(r.pat.k == 2);
    CHECK(r.pcc == 2);
    CHECK(r.dpr.k == 1);
    REQUIRE(r.dsp);
    CHECK(r.dsp->k == 1);
    CHECK(r.mci.r == 2);
    CHECK(r.mfi_lower == 0);  // interception index below the extraction threshold
    CHECK(!r.mfi_witness);
}

TEST_CASE("caps make parameters absent instead of wrong") {
    Caps caps;
    caps.pl_max_n = 3;
    caps.adc_max_n = 3;
    caps.dsp_path_cap = 2;
    ParameterReport r = compute_all_parameters(make_cycle(6), caps);
    CHECK(!r.pl);
    CHECK(!r.pb);
    CHECK(!r.adc);
    CHECK(!r.dsp);
    CHECK(r.mci.r == 2);  // uncapped parameters still present
}

TEST_CASE("report values by ledger name") {
    ParameterReport r = compute_all_parameters(make_cycle(6));
    CHECK(report_value(r, "pl") == 3);
    CHECK(report_value(r, "pb") == 2);
    CHECK(report_value(r, "delta") == 3);
    CHECK(report_value(r, "rho") == 2);
    CHECK(report_value(r, "adc") == 2);
    CHECK(report_value(r, "pat") == 2);
    CHECK(report_value(r, "pcc") == 2);
    CHECK(report_value(r, "dpr") == 1);
    CHECK(report_value(r, "dsp") == 1);
    CHECK(report_value(r, "mci") == 2);
    CHECK(report_value(r, "mfi_lb") == 0);
}

TEST_CASE("ledger loading") {
    const auto& ledger = default_ledger();
    CHECK(ledger.rows.size() == 45);
    CHECK(!ledger.excluded.empty());

    auto custom = load_ledger(R"({
      "rows": [{"name": "demo",
                "lhs": {"param": "pb"},
                "rhs": {"param": "pl", "scale": 2},
                "guards": [{"param": "pl", "min": 1}]}],
      "excluded": []
    })");
    REQUIRE(custom.rows.size() == 1);
    CHECK(custom.rows[0].lhs.param == "pb");
    CHECK(custom.rows[0].rhs.scale == 2);
    CHECK(custom.rows[0].guards[0].min == 1);

    CHECK_THROWS_AS(load_ledger("not json"), ParseError);
    CHECK_THROWS_AS(load_ledger(R"({"rows": [{"name": "x",
        "lhs": {"param": "nope"}, "rhs": {"param": "pl"}}], "excluded": []})"),
                    ParseError);
}

TEST_CASE("inequality checking mechanics") {
    ParameterReport r = compute_all_parameters(make_cycle(6));

    auto clean = check_inequalities(r);
    CHECK(clean.violations.empty());
    CHECK(clean.checked > 0);

    auto impossible = load_ledger(R"({
      "rows": [{"name": "broken",
                "lhs": {"param": "pl"},
                "rhs": {"param": "pb", "scale": 0}, "guards": []}],
      "excluded": []
    })");
    auto outcome = check_inequalities(r, impossible);
    REQUIRE(outcome.violations.size() == 1);
    CHECK(outcome.violations[0].rule == "broken");
    CHECK(outcome.violations[0].lhs == 3);
    CHECK(outcome.violations[0].rhs == 0);
    CHECK(outcome.violations[0].graph6 == "EhEG");

    auto guarded = load_ledger(R"({
      "rows": [{"name": "dormant",
                "lhs": {"param": "pl"},
                "rhs": {"param": "pb", "scale": 0},
                "guards": [{"param": "pl", "min": 99}]}],
      "excluded": []
    })");
    auto idle = check_inequalities(r, guarded);
    CHECK(idle.violations.empty());
    CHECK(idle.skipped == 1);

    // rows touching an absent parameter are skipped, not failed
    Caps caps;
    caps.pl_max_n = 3;
    auto capped = check_inequalities(compute_all_parameters(make_cycle(6), caps),
                                     impossible);
    CHECK(capped.violations.empty());
    CHECK(capped.skipped == 1);
}

TEST_CASE("the whole small corpus satisfies the ledger") {
    for (int n = 1; n <= 6; ++n)
        for (const auto& g : enumerate_connected_graphs(n))
            CHECK(check_inequalities(compute_all_parameters(g)).violations.empty());
}

TEST_CASE("parallel map covers every index once") {
    std::vector<std::atomic<int>> hits(257);
    parallel_for(257, [&](int i) { hits[i]++; });
    for (auto& h : hits) CHECK(h.load() == 1);
    CHECK(thread_budget() >= 1);
}
