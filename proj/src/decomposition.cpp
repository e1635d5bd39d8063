#include "coarsepath/decomposition.hpp"

#include <algorithm>
#include <limits>

#include "coarsepath/errors.hpp"

namespace coarsepath {

std::string ValidationIssue::describe() const {
    switch (kind) {
        case MissingVertex:
            return "vertex " + std::to_string(a) + " is in no bag";
        case UncoveredEdge:
            return "edge " + std::to_string(a) + "-" + std::to_string(b) +
                   " is in no bag";
        case ContiguityBreak:
            return "vertex " + std::to_string(a) + " is in bags " +
                   std::to_string(b) + " and " + std::to_string(c) +
                   " but misses a bag in between";
    }
    return "";
}

std::vector<ValidationIssue> validate(const Graph& g, const PathDecomposition& pd) {
    std::vector<ValidationIssue> issues;
    const int q = static_cast<int>(pd.bags.size());
    for (int v = 0; v < g.n(); ++v) {
        int first = -1, last = -1;
        bool gap = false;
        int gap_prev = -1;
        for (int i = 0; i < q; ++i) {
            if (!pd.bags[i].contains(v)) continue;
            if (first < 0) first = i;
            if (last >= 0 && i > last + 1 && !gap) {
                gap = true;
                gap_prev = last;
                issues.push_back({ValidationIssue::ContiguityBreak, v, gap_prev, i});
            }
            last = i;
        }
        if (first < 0) issues.push_back({ValidationIssue::MissingVertex, v});
    }
    for (auto [u, v] : g.edges()) {
        bool covered = false;
        for (const auto& bag : pd.bags)
            if (bag.contains(u) && bag.contains(v)) {
                covered = true;
                break;
            }
        if (!covered) issues.push_back({ValidationIssue::UncoveredEdge, u, v});
    }
    return issues;
}

namespace {

int bag_diameter(const Graph& g, const std::vector<int>& bag) {
    int d = 0;
    for (std::size_t i = 0; i < bag.size(); ++i)
        for (std::size_t j = i + 1; j < bag.size(); ++j)
            d = std::max(d, g.dist(bag[i], bag[j]));
    return d;
}

int bag_breadth(const Graph& g, const std::vector<int>& bag) {
    int best = std::numeric_limits<int>::max();
    for (int c = 0; c < g.n(); ++c) {
        int ecc = 0;
        for (int u : bag) ecc = std::max(ecc, g.dist(c, u));
        best = std::min(best, ecc);
    }
    return best;
}

}  // namespace

DecompositionMetrics metrics(const Graph& g, const PathDecomposition& pd) {
    auto issues = validate(g, pd);
    if (!issues.empty())
        throw InvalidDecomposition("invalid decomposition: " + issues.front().describe());

    DecompositionMetrics m;
    for (const auto& bag_set : pd.bags) {
        auto bag = bag_set.to_vector();
        m.length = std::max(m.length, bag_diameter(g, bag));
        m.breadth = std::max(m.breadth, bag_breadth(g, bag));

        // distances inside G[X_i], via BFS restricted to the bag
        VertexSet outside = g.full_set();
        for (int v : bag) outside.erase(v);
        int inner_len = 0;
        int inner_rad = std::numeric_limits<int>::max();
        for (int u : bag) {
            auto d = bfs_avoiding(g, u, outside);
            int ecc = 0;
            for (int v : bag) {
                if (d[v] < 0)
                    m.disconnected_bag = true;
                else
                    ecc = std::max(ecc, d[v]);
            }
            inner_len = std::max(inner_len, ecc);
            inner_rad = std::min(inner_rad, ecc);
        }
        m.inner_length = std::max(m.inner_length, inner_len);
        m.inner_breadth = std::max(m.inner_breadth, bag.empty() ? 0 : inner_rad);
    }

    // strong breadth: smallest r with every bag exactly equal to some disk
    // D(v,r), v inside the bag; absent when no common r works
    for (int r = 0; r <= g.n() && !m.strong_breadth; ++r) {
        bool all = true;
        for (const auto& bag : pd.bags) {
            bool found = false;
            for (int v = 0; v < g.n() && !found; ++v)
                if (bag.contains(v) && disk(g, v, r) == bag) found = true;
            if (!found) {
                all = false;
                break;
            }
        }
        if (all) m.strong_breadth = r;
    }
    return m;
}

PathDecomposition from_order(const Graph& g, const std::vector<int>& sigma) {
    const int n = g.n();
    if (static_cast<int>(sigma.size()) != n) throw NotAPermutation();
    std::vector<int> pos(n, -1);
    for (int i = 0; i < n; ++i) {
        int v = sigma[i];
        if (v < 0 || v >= n || pos[v] >= 0) throw NotAPermutation();
        pos[v] = i;
    }
    PathDecomposition pd;
    pd.bags.reserve(n);
    for (int i = 0; i < n; ++i) {
        VertexSet bag(n);
        bag.insert(sigma[i]);
        for (int j = 0; j < i; ++j) {
            int u = sigma[j];
            for (int w : g.neighbors(u))
                if (pos[w] >= i) {
                    bag.insert(u);
                    break;
                }
        }
        pd.bags.push_back(bag);
    }
    return pd;
}

namespace {

// Branch-and-bound over orderings. cost(bag) is length or breadth of the
// bag generated at each position; a prefix is abandoned once its running
// maximum reaches the best complete value found so far.
template <class BagCost>
DecompositionSearchResult search_orderings(const Graph& g, int max_n, BagCost cost) {
    const int n = g.n();
    if (n > max_n)
        throw TooLarge("graph on " + std::to_string(n) +
                       " vertices exceeds the oracle cap " + std::to_string(max_n));

    std::vector<int> prefix;
    std::vector<bool> used(n, false);
    std::vector<int> best_order;
    int best = std::numeric_limits<int>::max();

    // bag for the next position given the current prefix
    auto make_bag = [&](int v) {
        std::vector<int> bag{v};
        for (int u : prefix) {
            bool keeps = false;
            for (int w : g.neighbors(u))
                if (!used[w] || w == v) {
                    keeps = true;
                    break;
                }
            if (keeps) bag.push_back(u);
        }
        return bag;
    };

    auto rec = [&](auto&& self, int depth, int running_max) -> void {
        if (depth == n) {
            if (running_max < best) {
                best = running_max;
                best_order = prefix;
            }
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            auto bag = make_bag(v);
            int c = std::max(running_max, cost(bag));
            if (c >= best && best != std::numeric_limits<int>::max()) continue;
            used[v] = true;
            prefix.push_back(v);
            self(self, depth + 1, c);
            prefix.pop_back();
            used[v] = false;
        }
    };
    rec(rec, 0, 0);

    DecompositionSearchResult res;
    res.value = best;
    res.order = best_order;
    res.witness = from_order(g, best_order);
    return res;
}

}  // namespace

DecompositionSearchResult exact_path_length(const Graph& g, int max_n) {
    return search_orderings(g, max_n, [&](const std::vector<int>& bag) {
        return bag_diameter(g, bag);
    });
}

DecompositionSearchResult exact_path_breadth(const Graph& g, int max_n) {
    return search_orderings(g, max_n, [&](const std::vector<int>& bag) {
        return bag_breadth(g, bag);
    });
}

}  // namespace coarsepath
