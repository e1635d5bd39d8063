#include "coarsepath/harness.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <random>
#include <set>
#include <stdexcept>
#include <thread>

#include <json.hpp>

#include "coarsepath/errors.hpp"
#include "ledger_data.hpp"

namespace coarsepath {

namespace {

// adjacency rows as bitmasks; bit order matches graph6 (columns j=1..n-1,
// rows i<j)
using AdjRows = std::vector<unsigned>;

std::vector<std::pair<int, int>> rows_to_edges(int n, const AdjRows& adj) {
    std::vector<std::pair<int, int>> edges;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            if (adj[i] & (1u << j)) edges.emplace_back(i, j);
    return edges;
}

bool rows_connected(int n, const AdjRows& adj) {
    unsigned seen = 1, frontier = 1;
    while (frontier) {
        unsigned next = 0;
        for (int v = 0; v < n; ++v)
            if (frontier & (1u << v)) next |= adj[v];
        frontier = next & ~seen;
        seen |= next;
    }
    return seen == (1u << n) - 1;
}

std::vector<unsigned char> rows_to_bits(int n, const AdjRows& adj) {
    std::vector<unsigned char> bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i)
            bits.push_back((adj[i] >> j) & 1u);
    return bits;
}

// true iff some relabeling yields a lexicographically smaller bitstring
bool smaller_labeling_exists(int n, const AdjRows& adj,
                             const std::vector<unsigned char>& bits) {
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);

    // depth k: perm[0..k-1] fixed, compare the column of candidate p against
    // bits starting at k(k-1)/2
    auto dfs = [&](auto&& self, int k) -> bool {
        if (k == n) return false;
        int base = k * (k - 1) / 2;
        for (int p = 0; p < n; ++p) {
            if (used[p]) continue;
            int cmp = 0;  // -1 smaller, 0 equal, +1 larger
            for (int i = 0; i < k; ++i) {
                int nb = (adj[perm[i]] >> p) & 1;
                if (nb != bits[base + i]) {
                    cmp = nb < bits[base + i] ? -1 : 1;
                    break;
                }
            }
            if (cmp < 0) return true;
            if (cmp > 0) continue;
            perm[k] = p;
            used[p] = true;
            bool found = self(self, k + 1);
            used[p] = false;
            if (found) return true;
        }
        return false;
    };
    return dfs(dfs, 0);
}

// lexicographically smallest bitstring over all relabelings
std::vector<unsigned char> canonical_bits(int n, const AdjRows& adj) {
    std::vector<unsigned char> best = rows_to_bits(n, adj);
    std::vector<int> perm(n, -1);
    std::vector<bool> used(n, false);
    std::vector<unsigned char> cur(best.size());

    // strictly_less: cur[0..base) already beats the incumbent somewhere, so
    // no column can be pruned against it
    auto dfs = [&](auto&& self, int k, bool strictly_less) -> void {
        if (k == n) {
            if (std::lexicographical_compare(cur.begin(), cur.end(), best.begin(),
                                             best.end()))
                best = cur;
            return;
        }
        int base = k * (k - 1) / 2;
        for (int p = 0; p < n; ++p) {
            if (used[p]) continue;
            int cmp = 0;
            for (int i = 0; i < k; ++i) {
                cur[base + i] = (adj[perm[i]] >> p) & 1;
                if (cmp == 0 && cur[base + i] != best[base + i])
                    cmp = cur[base + i] < best[base + i] ? -1 : 1;
            }
            if (!strictly_less && cmp > 0) continue;
            perm[k] = p;
            used[p] = true;
            self(self, k + 1, strictly_less || cmp < 0);
            used[p] = false;
        }
    };
    dfs(dfs, 0, false);
    return best;
}

Graph graph_from_bits(int n, const std::vector<unsigned char>& bits) {
    std::vector<std::pair<int, int>> edges;
    int t = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if (bits[t]) edges.emplace_back(i, j);
    return Graph::from_edges(n, edges);
}

}  // namespace

std::vector<Graph> enumerate_connected_graphs(int n) {
    if (n < 1 || n > 8)
        throw TooLarge("enumeration supports 1 to 8 vertices, got " +
                       std::to_string(n));
    std::vector<Graph> out;

    if (n <= 7) {
        const int nbits = n * (n - 1) / 2;
        for (unsigned long long mask = 0; mask < (1ull << nbits); ++mask) {
            AdjRows adj(n, 0);
            int t = 0;
            for (int j = 1; j < n; ++j)
                for (int i = 0; i < j; ++i, ++t)
                    if ((mask >> t) & 1) {
                        adj[i] |= 1u << j;
                        adj[j] |= 1u << i;
                    }
            if (!rows_connected(n, adj)) continue;
            auto bits = rows_to_bits(n, adj);
            if (smaller_labeling_exists(n, adj, bits)) continue;
            out.push_back(graph_from_bits(n, bits));
        }
        return out;
    }

    // n = 8: every connected graph keeps a connected 7-vertex subgraph when a
    // non-cut vertex is removed, so augmenting the 7-vertex corpus by one
    // vertex with every nonempty attachment reaches every class
    std::set<std::vector<unsigned char>> canon;
    for (const auto& g7 : enumerate_connected_graphs(7)) {
        AdjRows base(8, 0);
        for (auto [u, v] : g7.edges()) {
            base[u] |= 1u << v;
            base[v] |= 1u << u;
        }
        for (unsigned s = 1; s < (1u << 7); ++s) {
            AdjRows adj = base;
            adj[7] = s;
            for (int v = 0; v < 7; ++v)
                if (s & (1u << v)) adj[v] |= 1u << 7;
            canon.insert(canonical_bits(8, adj));
        }
    }
    for (const auto& bits : canon) out.push_back(graph_from_bits(8, bits));
    return out;
}

Graph random_connected_graph(int n, double p, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("vertex count must be positive");
    if (!(p > 0.0 && p <= 1.0))
        throw std::invalid_argument("edge probability must be in (0,1]");
    std::mt19937_64 rng(seed);
    for (;;) {
        std::vector<std::pair<int, int>> edges;
        for (int j = 1; j < n; ++j)
            for (int i = 0; i < j; ++i) {
                // top 53 bits as a uniform double in [0,1)
                double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;
                if (u < p) edges.emplace_back(i, j);
            }
        try {
            return Graph::from_edges(n, edges);
        } catch (const NotConnected&) {
        }
    }
}

ParameterReport compute_all_parameters(const Graph& g, const Caps& caps) {
    ParameterReport r;
    r.graph6 = encode_graph6(g);
    if (g.n() <= caps.pl_max_n) {
        r.pl = exact_path_length(g, caps.pl_max_n);
        r.pb = exact_path_breadth(g, caps.pl_max_n);
    }
    r.layering = best_extended_layering(g);
    if (g.n() <= caps.adc_max_n) r.adc = exact_adc(g, caps.adc_max_n);
    r.pat = pat(g);
    r.pcc = pcc(g);
    r.dpr = dpr(g);
    try {
        r.dsp = exact_dsp(g, caps.dsp_path_cap);
    } catch (const TooManyPaths&) {
    }
    r.mci = mci(g);
    for (int K = r.mci.r / 4; K >= 1; --K) {
        try {
            r.mfi_witness = extract_fat_minor(g, K);
            r.mfi_lower = K;
            break;
        } catch (const std::logic_error&) {
        }
    }
    return r;
}

namespace {

const std::set<std::string>& known_params() {
    static const std::set<std::string> names{"pl",  "pb",  "delta", "rho",
                                            "adc", "pat", "pcc",   "dpr",
                                            "dsp", "mci", "mfi_lb"};
    return names;
}

LedgerTerm parse_term(const nlohmann::json& j) {
    LedgerTerm t;
    t.param = j.at("param").get<std::string>();
    if (!known_params().count(t.param))
        throw ParseError("unknown parameter in ledger: " + t.param);
    t.scale = j.value("scale", 1);
    t.offset = j.value("offset", 0);
    return t;
}

}  // namespace

InequalityLedger load_ledger(const std::string& json_text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("ledger JSON: ") + e.what());
    }
    InequalityLedger ledger;
    try {
        for (const auto& row : j.at("rows")) {
            LedgerRow r;
            r.name = row.at("name").get<std::string>();
            r.lhs = parse_term(row.at("lhs"));
            r.rhs = parse_term(row.at("rhs"));
            if (row.contains("guards"))
                for (const auto& gd : row["guards"]) {
                    LedgerGuard guard;
                    guard.param = gd.at("param").get<std::string>();
                    if (!known_params().count(guard.param))
                        throw ParseError("unknown parameter in guard: " + guard.param);
                    guard.min = gd.at("min").get<long long>();
                    r.guards.push_back(guard);
                }
            ledger.rows.push_back(std::move(r));
        }
        if (j.contains("excluded"))
            for (const auto& e : j["excluded"])
                ledger.excluded.push_back(e.get<std::string>());
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("ledger JSON: ") + e.what());
    }
    return ledger;
}

const InequalityLedger& default_ledger() {
    static const InequalityLedger ledger = load_ledger(detail::kDefaultLedgerJson);
    return ledger;
}

std::optional<long long> report_value(const ParameterReport& r,
                                      const std::string& param) {
    if (param == "pl") return r.pl ? std::optional<long long>(r.pl->value) : std::nullopt;
    if (param == "pb") return r.pb ? std::optional<long long>(r.pb->value) : std::nullopt;
    if (param == "delta") return r.layering.delta;
    if (param == "rho") return r.layering.rho;
    if (param == "adc") return r.adc ? std::optional<long long>(*r.adc) : std::nullopt;
    if (param == "pat") return r.pat.k;
    if (param == "pcc") return r.pcc;
    if (param == "dpr") return r.dpr.k;
    if (param == "dsp") return r.dsp ? std::optional<long long>(r.dsp->k) : std::nullopt;
    if (param == "mci") return r.mci.r;
    if (param == "mfi_lb") return r.mfi_lower;
    throw std::invalid_argument("unknown parameter: " + param);
}

CheckOutcome check_inequalities(const ParameterReport& report,
                                const InequalityLedger& ledger) {
    CheckOutcome out;
    for (const auto& row : ledger.rows) {
        auto lv = report_value(report, row.lhs.param);
        auto rv = report_value(report, row.rhs.param);
        bool active = lv && rv;
        for (const auto& guard : row.guards) {
            auto gv = report_value(report, guard.param);
            if (!gv || *gv < guard.min) active = false;
        }
        if (!active) {
            ++out.skipped;
            continue;
        }
        ++out.checked;
        long long lhs = row.lhs.scale * *lv + row.lhs.offset;
        long long rhs = row.rhs.scale * *rv + row.rhs.offset;
        if (lhs > rhs) out.violations.push_back({row.name, lhs, rhs, report.graph6});
    }
    return out;
}

int thread_budget() {
    if (const char* env = std::getenv("COARSEPATH_THREADS")) {
        char* end = nullptr;
        long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 1) return static_cast<int>(v);
    }
    unsigned hw = std::thread::hardware_concurrency();
    return hw ? static_cast<int>(hw) : 1;
}

void parallel_for(int count, const std::function<void(int)>& fn) {
    int workers = std::min(count, thread_budget());
    if (workers <= 1) {
        for (int i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w)
        pool.emplace_back([&] {
            for (int i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
        });
    for (auto& t : pool) t.join();
}

}  // namespace coarsepath
