#include "coarsepath/domination.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "coarsepath/errors.hpp"

namespace coarsepath {

namespace {

void require_path(const Graph& g, const std::vector<int>& path) {
    if (path.empty()) throw NotAPath("empty vertex list");
    const int n = g.n();
    std::vector<bool> seen(n, false);
    for (int v : path) {
        if (v < 0 || v >= n) throw NotAPath("vertex out of range");
        if (seen[v]) throw NotAPath("repeated vertex");
        seen[v] = true;
    }
    for (std::size_t i = 0; i + 1 < path.size(); ++i)
        if (!g.has_edge(path[i], path[i + 1]))
            throw NotAPath("consecutive vertices are not adjacent");
}

}  // namespace

int path_eccentricity(const Graph& g, const std::vector<int>& path) {
    require_path(g, path);
    int ecc = 0;
    for (int v = 0; v < g.n(); ++v) {
        int d = std::numeric_limits<int>::max();
        for (int x : path) d = std::min(d, g.dist(v, x));
        ecc = std::max(ecc, d);
    }
    return ecc;
}

void require_shortest_path(const Graph& g, const std::vector<int>& path) {
    require_path(g, path);
    // endpoint distance equal to the hop count forces every sub-distance
    if (g.dist(path.front(), path.back()) != static_cast<int>(path.size()) - 1)
        throw NotShortestPath();
}

bool is_k_dominating_pair(const Graph& g, int x, int y, int k) {
    if (x == y) throw std::invalid_argument("pair endpoints must differ");
    VertexSet covered = disk(g, x, k) | disk(g, y, k);
    for (int w = 0; w < g.n(); ++w) {
        if (covered.contains(w)) continue;
        if (connected_avoiding(g, x, y, disk(g, w, k))) return false;
    }
    return true;
}

DominatingPair dpr(const Graph& g) {
    const int n = g.n();
    if (n == 1) return {};
    for (int k = 0;; ++k)
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y)
                if (is_k_dominating_pair(g, x, y, k)) return {k, {x, y}};
}

namespace {

// DFS over the shortest-path predecessor structure toward a, emitting every
// geodesic from a to b
struct GeodesicEnumerator {
    const Graph& g;
    int a;
    long long budget;
    int best_ecc = std::numeric_limits<int>::max();
    std::vector<int> best_path;
    std::vector<int> stack;

    void visit(int v) {
        stack.push_back(v);
        if (v == a) {
            if (--budget < 0)
                throw TooManyPaths("geodesic enumeration exceeded the path cap");
            std::vector<int> path(stack.rbegin(), stack.rend());
            int ecc = path_eccentricity(g, path);
            if (ecc < best_ecc) {
                best_ecc = ecc;
                best_path = path;
            }
        } else {
            for (int u : g.neighbors(v))
                if (g.dist(a, u) == g.dist(a, v) - 1) visit(u);
        }
        stack.pop_back();
    }
};

}  // namespace

DominatingPath exact_dsp(const Graph& g, long long path_cap) {
    const int n = g.n();
    DominatingPath best;
    best.k = std::numeric_limits<int>::max();
    long long budget = path_cap;
    for (int a = 0; a < n && best.k > 0; ++a)
        for (int b = a; b < n && best.k > 0; ++b) {
            GeodesicEnumerator walk{g, a, budget};
            walk.visit(b);
            budget = walk.budget;
            if (walk.best_ecc < best.k) {
                best.k = walk.best_ecc;
                best.path = walk.best_path;
            }
        }
    return best;
}

DominatingPath heuristic_dsp(const Graph& g) {
    const int n = g.n();
    int delta = std::numeric_limits<int>::max();
    std::vector<int> lengths(n);
    for (int s = 0; s < n; ++s) {
        lengths[s] = extended_layering(g, s).length;
        delta = std::min(delta, lengths[s]);
    }
    DominatingPath best;
    best.k = std::numeric_limits<int>::max();
    VertexSet nothing(n);
    for (int s = 0; s < n; ++s) {
        if (lengths[s] != delta) continue;
        int ecc = g.eccentricity(s);
        for (int t = 0; t < n; ++t) {
            if (g.dist(s, t) != ecc) continue;
            auto path = shortest_path_avoiding(g, s, t, nothing);
            int k = path_eccentricity(g, path);
            if (k < best.k) {
                best.k = k;
                best.path = path;
            }
        }
    }
    return best;
}

Caterpillar caterpillar_from_dominating_path(const Graph& g,
                                             const std::vector<int>& path) {
    require_shortest_path(g, path);
    const int n = g.n();
    Caterpillar cat;
    cat.n = n;
    cat.spine = path;
    cat.attach.assign(n, -1);
    std::vector<bool> on_path(n, false);
    for (int x : path) on_path[x] = true;
    for (int v = 0; v < n; ++v) {
        if (on_path[v]) continue;
        int bd = std::numeric_limits<int>::max();
        for (int x : path)
            if (g.dist(v, x) < bd) {
                bd = g.dist(v, x);
                cat.attach[v] = x;
            }
    }
    int k = path_eccentricity(g, path);
    if (distortion(g, cat) > 2 * k + 2)
        throw std::logic_error("dominating-path caterpillar exceeds 2k+2 distortion");
    return cat;
}

}  // namespace coarsepath
