#include "coarsepath/layering.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "coarsepath/errors.hpp"

namespace coarsepath {

Layering layering(const Graph& g, int s) {
    const int n = g.n();
    if (s < 0 || s >= n) throw std::out_of_range("start vertex out of range");
    Layering lay;
    lay.source = s;
    int q = g.eccentricity(s);
    lay.layers.assign(q + 1, VertexSet(n));
    for (int v = 0; v < n; ++v) lay.layers[g.dist(s, v)].insert(v);
    for (int i = 1; i <= q; ++i) {
        auto layer = lay.layers[i].to_vector();
        int diam = 0;
        for (std::size_t a = 0; a < layer.size(); ++a)
            for (std::size_t b = a + 1; b < layer.size(); ++b)
                diam = std::max(diam, g.dist(layer[a], layer[b]));
        lay.length = std::max(lay.length, diam);
        int rad = std::numeric_limits<int>::max();
        for (int c = 0; c < n; ++c) {
            int ecc = 0;
            for (int u : layer) ecc = std::max(ecc, g.dist(c, u));
            rad = std::min(rad, ecc);
        }
        lay.breadth = std::max(lay.breadth, rad);
    }
    return lay;
}

ExtendedLayering extended_layering(const Graph& g, int s) {
    auto lay = layering(g, s);
    const int n = g.n();
    ExtendedLayering ext;
    const int q = static_cast<int>(lay.layers.size()) - 1;
    if (q == 0) {
        VertexSet bag(n);
        bag.insert(s);
        ext.decomposition.bags.push_back(bag);
        return ext;
    }
    for (int i = 1; i <= q; ++i) {
        VertexSet bag = lay.layers[i];
        lay.layers[i].for_each([&](int v) {
            for (int u : g.neighbors(v))
                if (g.dist(s, u) == i - 1) bag.insert(u);
        });
        ext.decomposition.bags.push_back(bag);
    }
    auto m = metrics(g, ext.decomposition);
    ext.length = m.length;
    ext.breadth = m.breadth;
    return ext;
}

BestExtendedLayering best_extended_layering(const Graph& g) {
    BestExtendedLayering best;
    best.delta = std::numeric_limits<int>::max();
    best.rho = std::numeric_limits<int>::max();
    for (int s = 0; s < g.n(); ++s) {
        auto ext = extended_layering(g, s);
        if (ext.length < best.delta) {
            best.delta = ext.length;
            best.start = s;
        }
        best.rho = std::min(best.rho, ext.breadth);
    }
    return best;
}

std::vector<int> Caterpillar::spine_position() const {
    std::vector<int> pos(n, -1);
    for (int i = 0; i < static_cast<int>(spine.size()); ++i) pos[spine[i]] = i;
    for (int v = 0; v < n; ++v)
        if (pos[v] < 0) pos[v] = pos[attach[v]];
    return pos;
}

int Caterpillar::dist(int u, int v) const {
    if (u == v) return 0;
    auto anchor = [&](int x) { return attach[x] < 0 ? x : attach[x]; };
    // positions along the spine
    int pu = -1, pv = -1;
    for (int i = 0; i < static_cast<int>(spine.size()); ++i) {
        if (spine[i] == anchor(u)) pu = i;
        if (spine[i] == anchor(v)) pv = i;
    }
    return std::abs(pu - pv) + (attach[u] < 0 ? 0 : 1) + (attach[v] < 0 ? 0 : 1);
}

namespace {

// O(1) caterpillar distances given precomputed anchor positions
struct CaterpillarMetric {
    std::vector<int> pos;
    std::vector<int> off;
    explicit CaterpillarMetric(const Caterpillar& t) : pos(t.spine_position()), off(t.n) {
        for (int v = 0; v < t.n; ++v) off[v] = t.attach[v] < 0 ? 0 : 1;
    }
    int operator()(int u, int v) const {
        if (u == v) return 0;
        return std::abs(pos[u] - pos[v]) + off[u] + off[v];
    }
};

}  // namespace

Caterpillar canonical_caterpillar(const Graph& g, int s) {
    const int n = g.n();
    int q = g.eccentricity(s);
    // lowest-index endpoint in the farthest layer, lowest-index parents
    int t = -1;
    for (int v = 0; v < n && t < 0; ++v)
        if (g.dist(s, v) == q) t = v;
    std::vector<int> spine(q + 1, -1);
    spine[q] = t;
    for (int i = q; i > 0; --i) {
        for (int u : g.neighbors(spine[i]))
            if (g.dist(s, u) == i - 1) {
                spine[i - 1] = u;
                break;
            }
    }
    Caterpillar cat;
    cat.n = n;
    cat.spine = spine;
    cat.attach.assign(n, -1);
    std::vector<bool> on_spine(n, false);
    for (int x : spine) on_spine[x] = true;
    for (int v = 0; v < n; ++v)
        if (!on_spine[v]) cat.attach[v] = spine[g.dist(s, v) - 1];
    return cat;
}

int distortion(const Graph& g, const Caterpillar& t) {
    CaterpillarMetric dt(t);
    int k = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            k = std::max(k, std::abs(g.dist(u, v) - dt(u, v)));
    return k;
}

AdcApproximation approx_adc(const Graph& g) {
    AdcApproximation best;
    best.distortion = std::numeric_limits<int>::max();
    for (int s = 0; s < g.n(); ++s) {
        auto cat = canonical_caterpillar(g, s);
        int k = distortion(g, cat);
        if (k < best.distortion) {
            best.distortion = k;
            best.tree = cat;
        }
    }
    return best;
}

namespace {

// distortion of a candidate caterpillar, aborting once >= bound
int distortion_bounded(const Graph& g, const std::vector<int>& pos,
                       const std::vector<int>& off, int bound) {
    int k = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v) {
            int dt = std::abs(pos[u] - pos[v]) + off[u] + off[v];
            k = std::max(k, std::abs(g.dist(u, v) - dt));
            if (k >= bound) return k;
        }
    return k;
}

}  // namespace

int exact_adc(const Graph& g, int max_n) {
    const int n = g.n();
    if (n > max_n)
        throw TooLarge("graph on " + std::to_string(n) +
                       " vertices exceeds the adc oracle cap " + std::to_string(max_n));
    if (n <= 2) return 0;

    int best = std::numeric_limits<int>::max();
    std::vector<int> pos(n), off(n);

    // spines of size >= 2 cover every caterpillar on >= 2 vertices (a star's
    // spine can absorb one leaf); orderings canonicalized up to reversal
    for (int p = 2; p <= n; ++p) {
        std::vector<bool> pick(n, false);
        std::fill(pick.end() - p, pick.end(), true);
        do {
            std::vector<int> subset, rest;
            for (int v = 0; v < n; ++v) (pick[v] ? subset : rest).push_back(v);
            std::vector<int> perm = subset;
            do {
                if (perm.front() > perm.back()) continue;
                // spine-only distortion is a lower bound for every attachment
                for (int i = 0; i < p; ++i) pos[perm[i]] = i;
                int spine_only = 0;
                for (int a = 0; a < p; ++a)
                    for (int b = a + 1; b < p; ++b)
                        spine_only = std::max(
                            spine_only, std::abs(g.dist(perm[a], perm[b]) - (b - a)));
                if (spine_only >= best) continue;

                for (int v : subset) off[v] = 0;
                for (int v : rest) off[v] = 1;
                std::vector<int> digit(rest.size(), 0);
                while (true) {
                    for (std::size_t i = 0; i < rest.size(); ++i) pos[rest[i]] = digit[i];
                    best = std::min(best, distortion_bounded(g, pos, off, best));
                    // odometer over attachment choices
                    std::size_t i = 0;
                    while (i < digit.size() && ++digit[i] == p) digit[i++] = 0;
                    if (i == digit.size()) break;
                    if (best == 0) break;
                }
            } while (std::next_permutation(perm.begin(), perm.end()));
        } while (std::next_permutation(pick.begin(), pick.end()));
    }
    return best;
}

PathDecomposition decomposition_from_caterpillar(const Graph& g, const Caterpillar& t,
                                                 int k) {
    if (distortion(g, t) > k)
        throw DistortionExceeded("caterpillar distortion exceeds the declared bound " +
                                 std::to_string(k));
    const int n = g.n();
    PathDecomposition pd;

    if (k == 0) {
        // distortion 0 means G equals the caterpillar; its edge bags form a
        // clique path already
        if (n == 1) {
            pd.bags.push_back(VertexSet::of(1, {0}));
            return pd;
        }
        const int q = static_cast<int>(t.spine.size());
        for (int i = 0; i < q; ++i) {
            int x = t.spine[i];
            for (int v = 0; v < n; ++v)
                if (t.attach[v] == x) {
                    VertexSet bag(n);
                    bag.insert(x);
                    bag.insert(v);
                    pd.bags.push_back(bag);
                }
            if (i + 1 < q) {
                VertexSet bag(n);
                bag.insert(x);
                bag.insert(t.spine[i + 1]);
                pd.bags.push_back(bag);
            }
        }
        if (pd.bags.empty()) pd.bags.push_back(g.full_set());
    } else {
        // exact interval model of T^{k+1}: vertex u gets
        //   [2 j_u + 2 off_u, 2 j_u + 2(k+1) - 2 off_u]
        // and intervals intersect iff d_T(u,v) <= k+1
        auto pos = t.spine_position();
        std::vector<int> lo(n), hi(n);
        std::vector<int> events;
        for (int u = 0; u < n; ++u) {
            int off = t.attach[u] < 0 ? 0 : 1;
            lo[u] = 2 * pos[u] + 2 * off;
            hi[u] = 2 * pos[u] + 2 * (k + 1) - 2 * off;
            events.push_back(lo[u]);
            events.push_back(hi[u]);
        }
        std::sort(events.begin(), events.end());
        events.erase(std::unique(events.begin(), events.end()), events.end());
        for (int c : events) {
            VertexSet bag(n);
            for (int u = 0; u < n; ++u)
                if (lo[u] <= c && c <= hi[u]) bag.insert(u);
            if (pd.bags.empty() || !(bag == pd.bags.back())) pd.bags.push_back(bag);
        }
        // drop bags subsumed by a neighbor
        bool changed = true;
        while (changed) {
            changed = false;
            for (std::size_t i = 0; i < pd.bags.size(); ++i) {
                bool sub = (i > 0 && pd.bags[i].is_subset_of(pd.bags[i - 1])) ||
                           (i + 1 < pd.bags.size() && pd.bags[i].is_subset_of(pd.bags[i + 1]));
                if (sub) {
                    pd.bags.erase(pd.bags.begin() + static_cast<long>(i));
                    changed = true;
                    break;
                }
            }
        }
    }

    // every bag must be a clique of T^{k+1}
    CaterpillarMetric dt(t);
    for (const auto& bag_set : pd.bags) {
        auto bag = bag_set.to_vector();
        for (std::size_t a = 0; a < bag.size(); ++a)
            for (std::size_t b = a + 1; b < bag.size(); ++b)
                if (dt(bag[a], bag[b]) > k + 1)
                    throw std::logic_error("caterpillar clique-path bag is not a clique");
    }
    if (!validate(g, pd).empty())
        throw std::logic_error("caterpillar clique-path failed validation");
    return pd;
}

}  // namespace coarsepath
