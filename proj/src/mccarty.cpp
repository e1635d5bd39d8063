#include "coarsepath/mccarty.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

#include "coarsepath/errors.hpp"

namespace coarsepath {

bool disk_intercepts(const Graph& g, int center, int r, int a, int b) {
    return !connected_avoiding(g, a, b, disk(g, center, r));
}

namespace {

// lex smallest triple where no member intercepts at radius r
std::optional<std::array<int, 3>> violating_triple(const Graph& g, int r) {
    const int n = g.n();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            for (int w = v + 1; w < n; ++w)
                if (!disk_intercepts(g, w, r, u, v) &&
                    !disk_intercepts(g, u, r, v, w) &&
                    !disk_intercepts(g, v, r, u, w))
                    return std::array<int, 3>{u, v, w};
    return std::nullopt;
}

MciCertificate certificate_at(const Graph& g, const std::array<int, 3>& t, int r) {
    auto [u, v, w] = t;
    MciCertificate cert;
    cert.triple = t;
    cert.paths[0] = shortest_path_avoiding(g, u, v, disk(g, w, r));
    cert.paths[1] = shortest_path_avoiding(g, v, w, disk(g, u, r));
    cert.paths[2] = shortest_path_avoiding(g, u, w, disk(g, v, r));
    return cert;
}

}  // namespace

MciResult mci(const Graph& g) {
    if (g.n() < 3) return {};
    for (int r = 0;; ++r) {
        if (!violating_triple(g, r)) {
            MciResult out;
            out.r = r;
            if (r > 0) out.certificate = certificate_at(g, *violating_triple(g, r - 1), r - 1);
            return out;
        }
    }
}

namespace {

int set_distance(const Graph& g, const std::vector<int>& a, const std::vector<int>& b) {
    int d = std::numeric_limits<int>::max();
    for (int x : a)
        for (int y : b) d = std::min(d, g.dist(x, y));
    return d;
}

bool induces_connected(const Graph& g, const VertexSet& s) {
    auto verts = s.to_vector();
    if (verts.empty()) return false;
    VertexSet outside = g.full_set();
    s.for_each([&](int v) { outside.erase(v); });
    auto d = bfs_avoiding(g, verts[0], outside);
    for (int v : verts)
        if (d[v] < 0) return false;
    return true;
}

std::optional<std::string> check_simple_path(const Graph& g, const std::vector<int>& p) {
    if (p.empty()) return "empty path";
    std::vector<bool> seen(g.n(), false);
    for (int v : p) {
        if (v < 0 || v >= g.n()) return "path vertex out of range";
        if (seen[v]) return "path repeats a vertex";
        seen[v] = true;
    }
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!g.has_edge(p[i], p[i + 1])) return "path vertices not adjacent";
    return std::nullopt;
}

int count_in(const std::vector<int>& p, const VertexSet& s) {
    int c = 0;
    for (int v : p)
        if (s.contains(v)) ++c;
    return c;
}

}  // namespace

FatVerdict verify_fat_minor(const Graph& g, const FatMinorWitness& w) {
    const bool star = w.kind == FatMinorWitness::Kind::K13;
    const std::size_t sets = star ? 4 : 3;
    if (w.branch_sets.size() != sets || w.paths.size() != 3)
        return {false, "wrong number of branch sets or paths"};
    if (w.K < 1) return {false, "fatness constant must be positive"};

    std::vector<std::vector<int>> members;
    for (const auto& h : w.branch_sets) {
        if (!induces_connected(g, h))
            return {false, "branch set empty or not connected"};
        members.push_back(h.to_vector());
    }
    for (std::size_t i = 0; i < sets; ++i)
        for (std::size_t j = i + 1; j < sets; ++j)
            if (set_distance(g, members[i], members[j]) < w.K)
                return {false, "branch sets closer than K"};

    // path p joins sets ends[p][0], ends[p][1]; far[p] = sets that must stay
    // K away from the path
    std::array<std::array<int, 2>, 3> ends;
    std::array<std::vector<int>, 3> far;
    if (star) {
        for (int i = 0; i < 3; ++i) {
            ends[i] = {i + 1, 0};
            for (int k = 1; k <= 3; ++k)
                if (k != i + 1) far[i].push_back(k);
        }
    } else {
        ends = {{{0, 1}, {0, 2}, {1, 2}}};
        far = {std::vector<int>{2}, std::vector<int>{1}, std::vector<int>{0}};
    }

    for (int p = 0; p < 3; ++p) {
        const auto& path = w.paths[p];
        if (auto bad = check_simple_path(g, path)) return {false, *bad};
        const auto& ha = w.branch_sets[ends[p][0]];
        const auto& hb = w.branch_sets[ends[p][1]];
        bool oriented = ha.contains(path.front()) && hb.contains(path.back());
        bool reversed = hb.contains(path.front()) && ha.contains(path.back());
        if (!oriented && !reversed)
            return {false, "path ends outside its branch sets"};
        if (count_in(path, ha) != 1 || count_in(path, hb) != 1)
            return {false, "path meets an end branch set more than once"};
        for (int k : far[p])
            if (set_distance(g, path, members[k]) < w.K)
                return {false, "path closer than K to a non-end branch set"};
    }
    for (int p = 0; p < 3; ++p)
        for (int q = p + 1; q < 3; ++q)
            if (set_distance(g, w.paths[p], w.paths[q]) < w.K)
                return {false, "two paths closer than K"};
    return {};
}

namespace {

struct MiddlePiece {
    std::vector<int> sub;  // subpath between the two frontier vertices
    int near_a = -1;       // frontier of endpoint a (= sub.front())
    int near_b = -1;       // frontier of endpoint b (= sub.back())
};

// cut the a-b path at the radius-f frontier of each endpoint, keeping the
// farthest-along-path member of each disk
MiddlePiece middle_piece(const Graph& g, const std::vector<int>& path, int a, int b,
                         int f) {
    int lo = -1, hi = -1;
    for (int i = 0; i < static_cast<int>(path.size()); ++i) {
        if (g.dist(a, path[i]) == f) lo = i;  // keep the last such index
        if (g.dist(b, path[i]) == f && hi < 0) hi = i;
    }
    if (lo < 0 || hi < 0 || lo >= hi)
        throw std::logic_error("frontier vertices out of order on an avoidance path");
    MiddlePiece m;
    m.sub.assign(path.begin() + lo, path.begin() + hi + 1);
    m.near_a = path[lo];
    m.near_b = path[hi];
    return m;
}

}  // namespace

FatMinorWitness extract_fat_minor(const Graph& g, int K) {
    if (K < 1) throw std::invalid_argument("fatness constant must be positive");
    if (mci(g).r <= 4 * K - 1)
        throw PreconditionFailed("interception index too small for fatness " +
                                 std::to_string(K));
    const int r = 4 * K - 1;
    auto triple = violating_triple(g, r);
    auto cert = certificate_at(g, *triple, r);
    auto [u, v, w] = cert.triple;
    const int f = 3 * K / 2;

    // middle pieces of P(u,v), P(v,w), P(u,w)
    std::array<MiddlePiece, 3> mid = {middle_piece(g, cert.paths[0], u, v, f),
                                      middle_piece(g, cert.paths[1], v, w, f),
                                      middle_piece(g, cert.paths[2], u, w, f)};

    // first pair of middle pieces closer than K, scanned in index order
    int pa = -1, pb = -1;
    for (int i = 0; i < 3 && pa < 0; ++i)
        for (int j = i + 1; j < 3 && pa < 0; ++j)
            if (set_distance(g, mid[i].sub, mid[j].sub) < K) {
                pa = i;
                pb = j;
            }

    FatMinorWitness out;
    out.K = K;
    const int n = g.n();
    VertexSet nothing(n);

    if (pa < 0) {
        out.kind = FatMinorWitness::Kind::K3;
        out.branch_sets = {disk(g, u, f), disk(g, v, f), disk(g, w, f)};
        // branch order (u,v,w); piece 0 joins u,v; piece 2 joins u,w;
        // piece 1 joins v,w
        out.paths = {mid[0].sub, mid[2].sub, mid[1].sub};
    } else {
        out.kind = FatMinorWitness::Kind::K13;
        // closest vertex pair across the two chosen pieces, path order
        int bx = -1, by = -1, bd = std::numeric_limits<int>::max();
        for (int x : mid[pa].sub)
            for (int y : mid[pb].sub)
                if (g.dist(x, y) < bd) {
                    bd = g.dist(x, y);
                    bx = x;
                    by = y;
                }
        VertexSet hub(n);
        for (int x : mid[pa].sub) hub.insert(x);
        for (int x : mid[pb].sub) hub.insert(x);
        for (int x : shortest_path_avoiding(g, bx, by, nothing)) hub.insert(x);

        out.branch_sets = {hub, VertexSet::of(n, {u}), VertexSet::of(n, {v}),
                           VertexSet::of(n, {w})};
        // each triple member owns a frontier endpoint on a hub piece: piece 0
        // touches u and v, piece 1 touches v and w, piece 2 touches u and w
        auto frontier_in_hub = [&](int t) -> int {
            for (int i : {pa, pb}) {
                int a = (i == 0 || i == 2) ? u : v;
                int b = (i == 0) ? v : w;
                if (t == a) return mid[i].near_a;
                if (t == b) return mid[i].near_b;
            }
            throw std::logic_error("triple member has no frontier on the hub");
        };
        for (int t : {u, v, w}) {
            auto spoke = shortest_path_avoiding(g, t, frontier_in_hub(t), nothing);
            // trim at the first hub vertex so the spoke meets the hub once
            std::size_t cut = 0;
            while (cut < spoke.size() && !hub.contains(spoke[cut])) ++cut;
            spoke.resize(cut + 1);
            out.paths.push_back(std::move(spoke));
        }
    }

    auto verdict = verify_fat_minor(g, out);
    if (!verdict.ok)
        throw std::logic_error("extracted fat minor failed verification: " +
                               verdict.violation);
    return out;
}

}  // namespace coarsepath
