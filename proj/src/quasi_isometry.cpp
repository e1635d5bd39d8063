#include "coarsepath/quasi_isometry.hpp"

#include <algorithm>
#include <stdexcept>

#include "coarsepath/errors.hpp"
#include "coarsepath/layering.hpp"

namespace coarsepath {

Rational WeightedPath::dist(int i, int j) const {
    if (i > j) std::swap(i, j);
    Rational d{0};
    for (int e = i; e < j; ++e) d += weights[e];
    return d;
}

WeightedPath WeightedPath::unweighted(int nodes) {
    WeightedPath p;
    p.weights.assign(std::max(0, nodes - 1), Rational{1});
    return p;
}

QiVerdict verify_qi(const Graph& g, const WeightedPath& p, const QuasiIsometryMap& m) {
    QiVerdict verdict;
    const int n = g.n();
    if (static_cast<int>(m.psi.size()) != n) {
        verdict.ok = false;
        verdict.violation = "psi is not total on V(G)";
        return verdict;
    }
    for (int v = 0; v < n; ++v)
        if (m.psi[v] < 0 || m.psi[v] >= p.node_count()) {
            verdict.ok = false;
            verdict.violation = "psi maps vertex " + std::to_string(v) +
                                " outside the path";
            verdict.u = v;
            return verdict;
        }
    if (m.L < 1 || m.C < 0) {
        verdict.ok = false;
        verdict.violation = "constants must satisfy L >= 1, C >= 0";
        return verdict;
    }
    for (const auto& w : p.weights)
        if (w <= 0) {
            verdict.ok = false;
            verdict.violation = "path edge weights must be positive";
            return verdict;
        }

    Rational worst{0};
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            Rational dg{g.dist(u, v)};
            Rational dp = p.dist(m.psi[u], m.psi[v]);
            Rational lower = dg / m.L - m.C;
            Rational upper = m.L * dg + m.C;
            Rational slack{0};
            if (dp < lower) slack = lower - dp;
            if (dp > upper) slack = std::max(slack, dp - upper);
            if (slack > worst) {
                worst = slack;
                verdict.u = u;
                verdict.v = v;
            }
        }
    if (worst > 0) {
        verdict.ok = false;
        verdict.slack = worst;
        verdict.violation = "condition (i) fails for pair (" +
                            std::to_string(verdict.u) + "," +
                            std::to_string(verdict.v) + ")";
        return verdict;
    }
    for (int y = 0; y < p.node_count(); ++y) {
        Rational nearest{-1};
        for (int v = 0; v < n; ++v) {
            Rational d = p.dist(m.psi[v], y);
            if (nearest < 0 || d < nearest) nearest = d;
        }
        if (nearest > m.C) {
            verdict.ok = false;
            verdict.v = y;
            verdict.slack = nearest - m.C;
            verdict.violation = "condition (ii) fails for path node " + std::to_string(y);
            return verdict;
        }
    }
    return verdict;
}

QiToPath quasi_isometry_to_path(const Graph& g) {
    auto approx = approx_adc(g);
    const auto& cat = approx.tree;
    auto pos = cat.spine_position();

    QiToPath out;
    out.path = WeightedPath::unweighted(static_cast<int>(cat.spine.size()));
    out.map.psi.assign(g.n(), 0);
    for (int v = 0; v < g.n(); ++v) out.map.psi[v] = pos[v];
    out.map.L = Rational{1};

    // smallest C that certifies; projection is onto the spine, so condition
    // (ii) already holds with C = 0
    long long c = 0;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            c = std::max(c, std::abs(static_cast<long long>(g.dist(u, v)) -
                                     (pos[u] > pos[v] ? pos[u] - pos[v]
                                                      : pos[v] - pos[u])));
    out.map.C = Rational{c};

    auto verdict = verify_qi(g, out.path, out.map);
    if (!verdict.ok || out.map.C > Rational{approx.distortion + 2})
        throw std::logic_error("spine projection failed its own certificate");
    return out;
}

PathDecomposition decomposition_from_qi(const Graph& g, const WeightedPath& p,
                                        const QuasiIsometryMap& m) {
    auto verdict = verify_qi(g, p, m);
    if (!verdict.ok) throw QiInvalid("quasi-isometry invalid: " + verdict.violation);

    // contract path nodes outside the image (sum the weights between
    // surviving nodes)
    std::vector<bool> in_image(p.node_count(), false);
    for (int v = 0; v < g.n(); ++v) in_image[m.psi[v]] = true;
    std::vector<int> keep;
    for (int i = 0; i < p.node_count(); ++i)
        if (in_image[i]) keep.push_back(i);
    WeightedPath q;
    for (std::size_t i = 0; i + 1 < keep.size(); ++i)
        q.weights.push_back(p.dist(keep[i], keep[i + 1]));
    std::vector<int> remap(p.node_count(), -1);
    for (std::size_t i = 0; i < keep.size(); ++i) remap[keep[i]] = static_cast<int>(i);
    std::vector<int> psi(g.n());
    for (int v = 0; v < g.n(); ++v) psi[v] = remap[m.psi[v]];

    const Rational ell = m.L + m.C;
    PathDecomposition pd;
    for (int i = 0; i < q.node_count(); ++i) {
        VertexSet bag(g.n());
        for (int u = 0; u < g.n(); ++u)
            if (psi[u] >= i && q.dist(i, psi[u]) <= ell) bag.insert(u);
        if (!bag.empty()) pd.bags.push_back(bag);
    }
    if (!validate(g, pd).empty())
        throw std::logic_error("quasi-isometry decomposition failed validation");
    return pd;
}

std::string rational_to_string(const Rational& r) {
    return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Rational rational_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational{std::stoll(s)};
        long long num = std::stoll(s.substr(0, slash));
        long long den = std::stoll(s.substr(slash + 1));
        if (den == 0) throw ParseError("rational with zero denominator: " + s);
        return Rational{num, den};
    } catch (const std::invalid_argument&) {
        throw ParseError("malformed rational: " + s);
    } catch (const std::out_of_range&) {
        throw ParseError("rational out of range: " + s);
    }
}

}  // namespace coarsepath
