#include "coarsepath/orderings.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <stdexcept>

#include "coarsepath/domination.hpp"
#include "coarsepath/errors.hpp"

namespace coarsepath {

namespace {

VertexSet closed_neighborhood(const Graph& g, int v) {
    VertexSet s(g.n());
    s.insert(v);
    for (int w : g.neighbors(v)) s.insert(w);
    return s;
}

}  // namespace

std::optional<std::array<int, 3>> find_asteroidal_triple(const Graph& g) {
    const int n = g.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            for (int w = v + 1; w < n; ++w) {
                if (g.has_edge(u, w) || g.has_edge(v, w)) continue;
                if (connected_avoiding(g, u, v, closed_neighborhood(g, w)) &&
                    connected_avoiding(g, u, w, closed_neighborhood(g, v)) &&
                    connected_avoiding(g, v, w, closed_neighborhood(g, u)))
                    return std::array<int, 3>{u, v, w};
            }
        }
    return std::nullopt;
}

std::optional<int> find_admissible_vertex(const Graph& g) {
    const int n = g.n();
    for (int v = 0; v < n; ++v) {
        bool admissible = true;
        for (int x = 0; x < n && admissible; ++x) {
            if (x == v) continue;
            for (int y = x + 1; y < n && admissible; ++y) {
                if (y == v) continue;
                // x,y unrelated w.r.t. v: x reaches v outside N[y] and
                // y reaches v outside N[x]
                if (connected_avoiding(g, x, v, closed_neighborhood(g, y)) &&
                    connected_avoiding(g, y, v, closed_neighborhood(g, x)))
                    admissible = false;
            }
        }
        if (admissible) return v;
    }
    return std::nullopt;
}

PatResult pat(const Graph& g) {
    for (int k = 1;; ++k) {
        Graph gk = power(g, k);
        if (!find_asteroidal_triple(gk)) {
            auto adm = find_admissible_vertex(gk);
            if (!adm) throw std::logic_error("AT-free power has no admissible vertex");
            return {k, *adm};
        }
    }
}

std::optional<LinearLayout> cocomparability_layout(const Graph& g) {
    const int n = g.n();
    // complement; may be disconnected, so work on a raw adjacency matrix
    std::vector<std::pair<int, int>> comp_edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) comp_edges.emplace_back(u, v);

    // Forcing-class orientation: orient the least unoriented complement edge,
    // close under the Gamma relation, fail on conflict. A final transitivity
    // check rejects non-comparability complements.
    std::vector<std::pair<int, int>> arcs;
    if (!comp_edges.empty()) {
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (auto [u, v] : comp_edges) adj[u][v] = adj[v][u] = true;
        std::map<std::pair<int, int>, int> dir;
        auto key = [](int a, int b) {
            return std::pair<int, int>{std::min(a, b), std::max(a, b)};
        };
        for (auto [a0, b0] : comp_edges) {
            if (dir.count(key(a0, b0))) continue;
            std::deque<std::pair<int, int>> queue{{a0, b0}};
            dir[key(a0, b0)] = 1;
            while (!queue.empty()) {
                auto [x, y] = queue.front();
                queue.pop_front();
                auto force = [&](int from, int to) -> bool {
                    auto k = key(from, to);
                    int want = from < to ? 1 : -1;
                    auto it = dir.find(k);
                    if (it == dir.end()) {
                        dir[k] = want;
                        queue.emplace_back(from, to);
                        return true;
                    }
                    return it->second == want;
                };
                for (int c = 0; c < n; ++c) {
                    if (c == x || c == y) continue;
                    if (adj[x][c] && !adj[y][c])
                        if (!force(x, c)) return std::nullopt;
                    if (adj[c][y] && !adj[c][x])
                        if (!force(c, y)) return std::nullopt;
                }
            }
        }
        for (auto& [k, d] : dir)
            arcs.emplace_back(d > 0 ? k.first : k.second, d > 0 ? k.second : k.first);
        std::vector<std::vector<bool>> has(n, std::vector<bool>(n, false));
        for (auto [a, b] : arcs) has[a][b] = true;
        for (auto [a, b] : arcs)
            for (int c = 0; c < n; ++c)
                if (has[b][c] && !has[a][c]) return std::nullopt;
    }

    // topological order of the orientation, smallest vertex first
    std::vector<int> indeg(n, 0);
    std::vector<std::vector<int>> out(n);
    for (auto [a, b] : arcs) {
        out[a].push_back(b);
        ++indeg[b];
    }
    LinearLayout layout;
    layout.mu = 1;
    std::vector<bool> done(n, false);
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n && pick < 0; ++v)
            if (!done[v] && indeg[v] == 0) pick = v;
        if (pick < 0) return std::nullopt;  // cycle: orientation unusable
        done[pick] = true;
        layout.sigma.push_back(pick);
        for (int w : out[pick]) --indeg[w];
    }
    auto verdict = verify_ccp(g, layout.sigma, 1);
    if (!verdict.ok) throw std::logic_error("transitive orientation gave a bad layout");
    return layout;
}

int pcc(const Graph& g) {
    for (int k = 1;; ++k)
        if (cocomparability_layout(power(g, k))) return k;
}

CcpVerdict verify_ccp(const Graph& g, const std::vector<int>& sigma, int mu) {
    if (mu < 1) throw InvalidK();
    const int n = g.n();
    if (static_cast<int>(sigma.size()) != n) throw NotAPermutation();
    std::vector<bool> seen(n, false);
    for (int v : sigma) {
        if (v < 0 || v >= n || seen[v]) throw NotAPermutation();
        seen[v] = true;
    }
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c) {
                int x = sigma[a], y = sigma[b], z = sigma[c];
                if (g.dist(x, z) <= mu && g.dist(x, y) > mu && g.dist(y, z) > mu)
                    return {false, {x, y, z}};
            }
    return {};
}

LinearLayout ccp_from_decomposition(const Graph& g, const PathDecomposition& pd) {
    auto m = metrics(g, pd);  // throws InvalidDecomposition
    const int n = g.n();
    std::vector<int> leftmost(n, -1);
    for (int i = 0; i < static_cast<int>(pd.bags.size()); ++i)
        pd.bags[i].for_each([&](int v) {
            if (leftmost[v] < 0) leftmost[v] = i;
        });
    LinearLayout layout;
    layout.sigma.resize(n);
    for (int v = 0; v < n; ++v) layout.sigma[v] = v;
    std::stable_sort(layout.sigma.begin(), layout.sigma.end(),
                     [&](int a, int b) { return leftmost[a] < leftmost[b]; });
    layout.mu = std::max(1, 2 * m.length);
    auto verdict = verify_ccp(g, layout.sigma, layout.mu);
    if (!verdict.ok)
        throw std::logic_error("leftmost-bag layout failed ccp verification");
    return layout;
}

LinearLayout ccp_from_caterpillar(const Graph& g, const Caterpillar& t) {
    int delta = distortion(g, t);
    LinearLayout layout;
    layout.mu = 3 * delta + 2;
    for (std::size_t i = 0; i < t.spine.size(); ++i) {
        layout.sigma.push_back(t.spine[i]);
        for (int v = 0; v < t.n; ++v)
            if (t.attach[v] == t.spine[i]) layout.sigma.push_back(v);
    }
    auto verdict = verify_ccp(g, layout.sigma, layout.mu);
    if (!verdict.ok)
        throw std::logic_error("caterpillar squeeze layout failed ccp verification");
    return layout;
}

LinearLayout ccp_from_dominating_path(const Graph& g, const std::vector<int>& path,
                                      int k) {
    if (k < 1) throw NotDominating("domination radius must be >= 1");
    require_shortest_path(g, path);
    if (path_eccentricity(g, path) > k)
        throw NotDominating("path does not dominate within radius " + std::to_string(k));

    // BFS(P)-tree: multi-source BFS from the path; root[v] = the path vertex
    // whose branch contains v (lowest-index parent tie-break)
    const int n = g.n();
    std::vector<int> d(n, -1), root(n, -1);
    std::deque<int> q;
    for (int x : path) {
        d[x] = 0;
        root[x] = x;
        q.push_back(x);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.neighbors(u))
            if (d[w] < 0) {
                d[w] = d[u] + 1;
                root[w] = root[u];
                q.push_back(w);
            }
    }

    LinearLayout layout;
    layout.mu = 6 * k;
    for (int x : path) {
        layout.sigma.push_back(x);
        for (int v = 0; v < n; ++v)
            if (v != x && root[v] == x) layout.sigma.push_back(v);
    }
    auto verdict = verify_ccp(g, layout.sigma, layout.mu);
    if (!verdict.ok)
        throw std::logic_error("BFS(P)-tree layout failed ccp verification");
    return layout;
}

}  // namespace coarsepath
