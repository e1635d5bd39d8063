#include "coarsepath/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

#include "coarsepath/errors.hpp"

namespace coarsepath {

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw ParseError("graph must have at least one vertex");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError("edge endpoint out of range");
        if (u == v) throw NotSimple("loop at vertex " + std::to_string(u));
        auto key = std::minmax(u, v);
        if (!seen.insert(key).second)
            throw NotSimple("multi-edge " + std::to_string(key.first) + "-" +
                            std::to_string(key.second));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.m_ = static_cast<int>(seen.size());
    for (auto& nb : g.adj_) std::sort(nb.begin(), nb.end());

    g.dist_.assign(n, std::vector<int>(n, -1));
    for (int s = 0; s < n; ++s) {
        auto& d = g.dist_[s];
        d[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int u = q.front();
            q.pop_front();
            for (int w : g.adj_[u])
                if (d[w] < 0) {
                    d[w] = d[u] + 1;
                    q.push_back(w);
                }
        }
        for (int v = 0; v < n; ++v)
            if (d[v] < 0) throw NotConnected();
    }
    return g;
}

int Graph::eccentricity(int v) const {
    return *std::max_element(dist_[v].begin(), dist_[v].end());
}

int Graph::diameter() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, eccentricity(v));
    return d;
}

int Graph::radius() const {
    int r = n_;
    for (int v = 0; v < n_; ++v) r = std::min(r, eccentricity(v));
    return r;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

VertexSet Graph::full_set() const {
    VertexSet s(n_);
    for (int v = 0; v < n_; ++v) s.insert(v);
    return s;
}

Graph load_graph(const std::string& text, GraphFormat format) {
    return format == GraphFormat::graph6 ? decode_graph6(text) : parse_edgelist(text);
}

namespace {

std::string strip(const std::string& s) {
    auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos) return "";
    auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

}  // namespace

Graph decode_graph6(const std::string& text) {
    std::string s = strip(text);
    if (s.rfind(">>graph6<<", 0) == 0) s = s.substr(10);
    if (s.empty()) throw ParseError("empty graph6 string");
    std::size_t pos = 0;
    long long n;
    auto byte = [&](std::size_t i) -> int {
        int c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw ParseError("graph6 character out of range");
        return c - 63;
    };
    if (byte(0) < 63) {
        n = byte(0);
        pos = 1;
    } else {
        // 126 prefix: 18-bit (or 36-bit with a second 126) vertex count.
        if (s.size() >= 2 && s[1] != '~') {
            if (s.size() < 4) throw ParseError("truncated graph6 header");
            n = (static_cast<long long>(byte(1)) << 12) | (byte(2) << 6) | byte(3);
            pos = 4;
        } else {
            if (s.size() < 8) throw ParseError("truncated graph6 header");
            n = 0;
            for (int i = 2; i < 8; ++i) n = (n << 6) | byte(i);
            pos = 8;
        }
    }
    if (n < 1) throw ParseError("graph6 with zero vertices is not supported");
    if (n > 100000) throw ParseError("graph6 vertex count too large");
    long long nbits = n * (n - 1) / 2;
    long long nbytes = (nbits + 5) / 6;
    if (static_cast<long long>(s.size()) - static_cast<long long>(pos) != nbytes)
        throw ParseError("graph6 body has wrong length");
    std::vector<std::pair<int, int>> edges;
    long long bit = 0;
    // Upper triangle, column by column: (0,1),(0,2),(1,2),(0,3),...
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++bit) {
            int b = byte(pos + bit / 6);
            if ((b >> (5 - bit % 6)) & 1) edges.emplace_back(i, j);
        }
    return Graph::from_edges(static_cast<int>(n), edges);
}

std::string encode_graph6(const Graph& g) {
    int n = g.n();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 63) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 63) + 63));
        out.push_back(static_cast<char>((n & 63) + 63));
    }
    long long nbits = static_cast<long long>(n) * (n - 1) / 2;
    std::vector<int> bits;
    bits.reserve(nbits);
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? 1 : 0);
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int b = 0;
        for (int t = 0; t < 6; ++t)
            b = (b << 1) | (k + t < bits.size() ? bits[k + t] : 0);
        out.push_back(static_cast<char>(b + 63));
    }
    return out;
}

Graph parse_edgelist(const std::string& text) {
    std::istringstream in(text);
    std::vector<std::pair<int, int>> edges;
    int maxv = -1;
    std::string line;
    while (std::getline(in, line)) {
        line = strip(line);
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ls(line);
        long long u, v;
        if (!(ls >> u >> v)) throw ParseError("malformed edge list line: " + line);
        std::string rest;
        if (ls >> rest) throw ParseError("trailing tokens on edge list line: " + line);
        if (u < 0 || v < 0) throw ParseError("negative vertex id");
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        maxv = std::max(maxv, static_cast<int>(std::max(u, v)));
    }
    if (maxv < 0) throw ParseError("edge list is empty");
    return Graph::from_edges(maxv + 1, edges);
}

Graph power(const Graph& g, int k) {
    if (k < 1) throw InvalidK();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < g.n(); ++u)
        for (int v = u + 1; v < g.n(); ++v)
            if (g.dist(u, v) <= k) edges.emplace_back(u, v);
    return Graph::from_edges(g.n(), edges);
}

VertexSet disk(const Graph& g, int s, int r) {
    VertexSet out(g.n());
    for (int v = 0; v < g.n(); ++v)
        if (g.dist(s, v) <= r) out.insert(v);
    return out;
}

std::vector<int> bfs_avoiding(const Graph& g, int s, const VertexSet& removed) {
    std::vector<int> d(g.n(), -1);
    if (removed.contains(s)) return d;
    d[s] = 0;
    std::deque<int> q{s};
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : g.neighbors(u))
            if (d[w] < 0 && !removed.contains(w)) {
                d[w] = d[u] + 1;
                q.push_back(w);
            }
    }
    return d;
}

bool connected_avoiding(const Graph& g, int a, int b, const VertexSet& removed) {
    if (removed.contains(a) || removed.contains(b)) return false;
    return bfs_avoiding(g, a, removed)[b] >= 0;
}

std::vector<int> shortest_path_avoiding(const Graph& g, int a, int b,
                                        const VertexSet& removed) {
    auto d = bfs_avoiding(g, a, removed);
    if (b >= static_cast<int>(d.size()) || d[b] < 0) return {};
    std::vector<int> path{b};
    int cur = b;
    while (cur != a) {
        for (int w : g.neighbors(cur))
            if (d[w] == d[cur] - 1 && !removed.contains(w)) {
                cur = w;
                break;
            }
        path.push_back(cur);
    }
    std::reverse(path.begin(), path.end());
    return path;
}

}  // namespace coarsepath
