#ifndef COARSEPATH_HARNESS_HPP
#define COARSEPATH_HARNESS_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "coarsepath/decomposition.hpp"
#include "coarsepath/domination.hpp"
#include "coarsepath/graph.hpp"
#include "coarsepath/layering.hpp"
#include "coarsepath/mccarty.hpp"
#include "coarsepath/orderings.hpp"

namespace coarsepath {

// Every connected graph on n vertices, one per isomorphism class (canonical
// representatives, ascending adjacency bitstring). Throws TooLarge for n > 8.
std::vector<Graph> enumerate_connected_graphs(int n);

// G(n,p) conditioned on connectivity by rejection; identical (n,p,seed)
// always yields the same graph.
Graph random_connected_graph(int n, double p, std::uint64_t seed);

struct Caps {
    int pl_max_n = 9;
    int adc_max_n = 7;
    long long dsp_path_cap = 1000000;
};

struct ParameterReport {
    std::string graph6;
    std::optional<DecompositionSearchResult> pl;  // absent past pl_max_n
    std::optional<DecompositionSearchResult> pb;
    BestExtendedLayering layering;                // delta, rho
    std::optional<int> adc;                       // absent past adc_max_n
    PatResult pat;
    int pcc = 1;
    DominatingPair dpr;
    std::optional<DominatingPath> dsp;  // absent when the path cap trips
    MciResult mci;
    int mfi_lower = 0;
    std::optional<FatMinorWitness> mfi_witness;
};

ParameterReport compute_all_parameters(const Graph& g, const Caps& caps = {});

// One inequality a*lhs_param + b <= c*rhs_param + d, active only when every
// guard parameter is present and at or above its threshold.
struct LedgerTerm {
    std::string param;
    long long scale = 1;
    long long offset = 0;
};

struct LedgerGuard {
    std::string param;
    long long min = 0;
};

struct LedgerRow {
    std::string name;
    LedgerTerm lhs;
    LedgerTerm rhs;
    std::vector<LedgerGuard> guards;
};

struct InequalityLedger {
    std::vector<LedgerRow> rows;
    std::vector<std::string> excluded;  // rows left out, with reasons
};

InequalityLedger load_ledger(const std::string& json_text);  // throws ParseError
const InequalityLedger& default_ledger();

struct Violation {
    std::string rule;
    long long lhs = 0;
    long long rhs = 0;
    std::string graph6;
};

struct CheckOutcome {
    std::vector<Violation> violations;
    int checked = 0;
    int skipped = 0;  // rows with an absent parameter or inactive guard
};

CheckOutcome check_inequalities(const ParameterReport& report,
                                const InequalityLedger& ledger = default_ledger());

// Parameter value by ledger name (pl, pb, delta, rho, adc, pat, pcc, dpr,
// dsp, mci, mfi_lb); absent when capped out.
std::optional<long long> report_value(const ParameterReport& report,
                                      const std::string& param);

// Parallelism bound: COARSEPATH_THREADS when set, else the hardware count.
int thread_budget();

// Runs fn(index) for 0..count-1 across the thread budget; results land in
// index order.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace coarsepath

#endif
