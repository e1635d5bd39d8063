// End-to-end acceptance checks. Takes the CLI binary path as argv[1] and
// prints one pass/fail line per criterion.
#include <cstdio>
#include <functional>
#include <iostream>
#include <memory>
#include <string>
#include <vector>

#include "coarsepath/domination.hpp"
#include "coarsepath/errors.hpp"
#include "coarsepath/harness.hpp"
#include "coarsepath/mccarty.hpp"
#include "coarsepath/orderings.hpp"
#include "coarsepath/quasi_isometry.hpp"

using namespace coarsepath;

namespace {

std::string g_cli;

struct CliResult {
    int status = -1;
    std::string output;
};

CliResult run_cli(const std::string& args) {
    CliResult res;
    std::string cmd = g_cli + " " + args + " 2>&1";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    if (!pipe) return res;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe.get()))
        res.output.append(buf, got);
    int raw = pclose(pipe.release());
    res.status = (raw >= 0 && WIFEXITED(raw)) ? WEXITSTATUS(raw) : -1;
    return res;
}

Graph make_cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
    return Graph::from_edges(n, e);
}

Graph make_complete(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) e.emplace_back(i, j);
    return Graph::from_edges(n, e);
}

Graph make_spider(int leg) {
    std::vector<std::pair<int, int>> e;
    int next = 1;
    for (int l = 0; l < 3; ++l) {
        int prev = 0;
        for (int i = 0; i < leg; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
    }
    return Graph::from_edges(3 * leg + 1, e);
}

int g_failures = 0;

void criterion(const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    if (ok) {
        std::cout << "PASS: " << name << "\n";
    } else {
        std::cout << "FAIL: " << name << (detail.empty() ? "" : " [" + detail + "]")
                  << "\n";
        ++g_failures;
    }
}

bool closed_form_values(std::string& detail) {
    for (int n = 2; n <= 7; ++n)
        if (exact_path_length(make_complete(n)).value != 1) {
            detail = "complete graph on " + std::to_string(n) + " vertices";
            return false;
        }
    for (int half = 2; half <= 4; ++half)
        if (exact_path_length(make_cycle(2 * half)).value != half) {
            detail = "cycle on " + std::to_string(2 * half) + " vertices";
            return false;
        }
    return true;
}

bool at_free_bound(std::string& detail) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            if (find_asteroidal_triple(g)) continue;
            int pl = exact_path_length(g).value;
            if (pl > 2) {
                detail = encode_graph6(g) + " has value " + std::to_string(pl);
                return false;
            }
        }
    return true;
}

bool exhaustive_cli_run(std::string& detail) {
    auto res = run_cli("verify --exhaustive 7");
    if (res.status != 0) {
        detail = "exit " + std::to_string(res.status);
        return false;
    }
    if (res.output.find("violations: 0") == std::string::npos) {
        detail = "summary did not report zero violations";
        return false;
    }
    return true;
}

bool constructive_witnesses(std::string& detail) {
    for (int n = 2; n <= 6; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            std::string code = encode_graph6(g);

            auto approx = approx_adc(g);
            int k = approx.distortion;
            auto pd = decomposition_from_caterpillar(g, approx.tree, k);
            if (metrics(g, pd).length > 2 * k + 1) {
                detail = "caterpillar decomposition too long on " + code;
                return false;
            }

            auto qi = quasi_isometry_to_path(g);
            auto qpd = decomposition_from_qi(g, qi.path, qi.map);
            Rational bound = qi.map.L * (qi.map.L + Rational{2} * qi.map.C);
            if (Rational{metrics(g, qpd).length} > bound) {
                detail = "projection decomposition too long on " + code;
                return false;
            }

            auto plres = exact_path_length(g);
            auto from_pd = ccp_from_decomposition(g, plres.witness);
            if (from_pd.mu != std::max(1, 2 * plres.value)) {
                detail = "decomposition layout radius on " + code;
                return false;
            }

            auto from_cat = ccp_from_caterpillar(g, approx.tree);
            if (from_cat.mu != 3 * k + 2) {
                detail = "caterpillar layout radius on " + code;
                return false;
            }

            auto dsp = exact_dsp(g);
            int dk = std::max(1, dsp.k);
            auto from_path = ccp_from_dominating_path(g, dsp.path, dk);
            if (from_path.mu != 6 * dk) {
                detail = "dominating path layout radius on " + code;
                return false;
            }

            auto grown = caterpillar_from_dominating_path(g, dsp.path);
            if (distortion(g, grown) > 2 * dsp.k + 2) {
                detail = "dominating path caterpillar distortion on " + code;
                return false;
            }
        }
    return true;
}

bool fat_minor_extraction(std::string& detail) {
    std::vector<Graph> corpus;
    for (int n = 1; n <= 7; ++n)
        for (auto& g : enumerate_connected_graphs(n)) corpus.push_back(std::move(g));
    corpus.push_back(make_cycle(12));
    corpus.push_back(make_cycle(16));
    for (int leg = 4; leg <= 6; ++leg) corpus.push_back(make_spider(leg));

    bool any = false;
    for (const auto& g : corpus) {
        int r = mci(g).r;
        if (r < 4) continue;
        any = true;
        int K = r / 4;
        auto w = extract_fat_minor(g, K);
        auto verdict = verify_fat_minor(g, w);
        if (!verdict.ok || w.K != K) {
            detail = "extraction failed on " + encode_graph6(g) + ": " +
                     verdict.violation;
            return false;
        }
    }
    if (!any) {
        detail = "no corpus graph reached the extraction threshold";
        return false;
    }
    return true;
}

bool layering_sandwich(std::string& detail) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            int pl = exact_path_length(g).value;
            int pb = exact_path_breadth(g).value;
            auto best = best_extended_layering(g);
            if (!(pl <= best.delta && best.delta <= 2 * pl)) {
                detail = "length bounds on " + encode_graph6(g);
                return false;
            }
            if (!(pb <= best.rho && best.rho <= 3 * pb)) {
                detail = "breadth bounds on " + encode_graph6(g);
                return false;
            }
        }
    return true;
}

bool roundtrip_and_determinism(std::string& detail) {
    for (int n = 1; n <= 7; ++n)
        for (const auto& g : enumerate_connected_graphs(n)) {
            std::string code = encode_graph6(g);
            if (encode_graph6(decode_graph6(code)) != code) {
                detail = "round trip broke " + code;
                return false;
            }
        }
    auto first = run_cli("verify --random 30 --seed 5 --n-min 8 --n-max 11");
    auto second = run_cli("verify --random 30 --seed 5 --n-min 8 --n-max 11");
    if (first.status != 0 || first.status != second.status ||
        first.output != second.output) {
        detail = "repeated verification runs disagreed";
        return false;
    }
    auto p1 = run_cli("params --inline EhEG");
    auto p2 = run_cli("params --inline EhEG");
    if (p1.status != 0 || p1.output != p2.output) {
        detail = "repeated parameter reports disagreed";
        return false;
    }
    return true;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 2) {
        std::cerr << "usage: acceptance <cli-binary>\n";
        return 2;
    }
    g_cli = argv[1];

    criterion("closed-form optima for complete graphs and even cycles",
              closed_form_values);
    criterion("asteroidal-triple-free graphs have decompositions of length at most 2",
              at_free_bound);
    criterion("CLI verifies every inequality over the exhaustive 7-vertex corpus",
              exhaustive_cli_run);
    criterion("constructive witnesses meet their stated guarantees",
              constructive_witnesses);
    criterion("fat minor extraction succeeds above the interception threshold",
              fat_minor_extraction);
    criterion("layerings sandwich the exact decomposition optima", layering_sandwich);
    criterion("graph6 round trip and byte-identical repeated runs",
              roundtrip_and_determinism);

    if (g_failures) {
        std::cout << g_failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all criteria passed\n";
    return 0;
}
