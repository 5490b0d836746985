#include "asymgraph/graph.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>

namespace asymgraph {

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    adj_.assign(n, {});
    std::set<std::pair<int, int>> seen;
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" +
                                        std::to_string(u + 1) + "," + std::to_string(v + 1) + ")");
        if (u == v)
            throw std::invalid_argument("self-loop at v" + std::to_string(u + 1));
        std::pair<int, int> key{std::min(u, v), std::max(u, v)};
        if (!seen.insert(key).second)
            throw std::invalid_argument("duplicate edge (" + std::to_string(key.first + 1) +
                                        "," + std::to_string(key.second + 1) + ")");
        adj_[u].push_back(v);
        adj_[v].push_back(u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    edge_count_ = static_cast<int>(seen.size());
}

bool Graph::has_edge(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& nb = adj_[u].size() <= adj_[v].size() ? adj_[u] : adj_[v];
    int other = adj_[u].size() <= adj_[v].size() ? v : u;
    return std::binary_search(nb.begin(), nb.end(), other);
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::degree_sequence() const {
    std::vector<int> d(n_);
    for (int v = 0; v < n_; ++v) d[v] = degree(v);
    std::sort(d.begin(), d.end());
    return d;
}

int Graph::min_degree() const {
    int m = n_ == 0 ? 0 : degree(0);
    for (int v = 1; v < n_; ++v) m = std::min(m, degree(v));
    return m;
}

int Graph::max_degree() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
    return m;
}

bool Graph::is_connected() const {
    if (n_ <= 1) return true;
    auto dist = bfs_distances(*this, 0);
    return std::find(dist.begin(), dist.end(), -1) == dist.end();
}

Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges_1based) {
    if (n < 0) throw std::invalid_argument("vertex count must be nonnegative");
    std::vector<std::pair<int, int>> internal;
    internal.reserve(edges_1based.size());
    for (auto [u, v] : edges_1based) {
        if (u < 1 || u > n || v < 1 || v > n)
            throw std::invalid_argument("vertex name out of range: v" + std::to_string(u) +
                                        " or v" + std::to_string(v) + " with n=" + std::to_string(n));
        internal.emplace_back(u - 1, v - 1);
    }
    return Graph(n, internal);
}

Graph complement(const Graph& g) {
    int n = g.vertex_count();
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v)) edges.emplace_back(u, v);
    return Graph(n, edges);
}

std::vector<int> bfs_distances(const Graph& g, int src) {
    std::vector<int> dist(g.vertex_count(), -1);
    std::deque<int> queue{src};
    dist[src] = 0;
    while (!queue.empty()) {
        int u = queue.front();
        queue.pop_front();
        for (int v : g.neighbors(u))
            if (dist[v] < 0) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
    }
    return dist;
}

std::optional<int> distance(const Graph& g, int u, int v) {
    if (u < 0 || u >= g.vertex_count() || v < 0 || v >= g.vertex_count())
        throw std::invalid_argument("distance: vertex out of range");
    int d = bfs_distances(g, u)[v];
    if (d < 0) return std::nullopt;
    return d;
}

std::optional<int> edge_to_set_distance(const Graph& g, std::pair<int, int> e,
                                        const std::vector<int>& verts) {
    std::optional<int> best;
    for (int endpoint : {e.first, e.second}) {
        auto dist = bfs_distances(g, endpoint);
        for (int w : verts)
            if (dist[w] >= 0 && (!best || dist[w] < *best)) best = dist[w];
    }
    return best;
}

namespace {

// Simple u-v paths avoiding the edge uv itself: the current path still needs
// `more` internal vertices before closing at v. Each closed path plus the
// edge uv is one cycle through the edge; sorted vertex sets dedup traversals.
void edge_path_dfs(const Graph& g, int v, int cur, int more,
                   std::vector<int>& path, std::vector<char>& used,
                   std::set<std::vector<int>>& vertex_sets) {
    if (more == 0) {
        if (g.has_edge(cur, v)) {
            std::vector<int> s = path;
            s.push_back(v);
            std::sort(s.begin(), s.end());
            vertex_sets.insert(std::move(s));
        }
        return;
    }
    for (int w : g.neighbors(cur)) {
        if (used[w] || w == v) continue;
        used[w] = 1;
        path.push_back(w);
        edge_path_dfs(g, v, w, more - 1, path, used, vertex_sets);
        path.pop_back();
        used[w] = 0;
    }
}

// Cycle enumeration with the usual canonical-traversal cut: the start vertex
// is the cycle minimum and the second vertex is smaller than the last.
void cycle_dfs(const Graph& g, int start, int cur, int len, int lmax,
               std::vector<int>& path, std::vector<char>& used,
               std::map<int, std::set<std::vector<int>>>& out) {
    for (int w : g.neighbors(cur)) {
        if (w == start && len >= 3) {
            if (path[1] > path.back()) continue;  // keep one traversal direction
            std::vector<int> s = path;
            std::sort(s.begin(), s.end());
            out[len].insert(std::move(s));
            continue;
        }
        if (w <= start || used[w] || len + 1 > lmax) continue;
        used[w] = 1;
        path.push_back(w);
        cycle_dfs(g, start, w, len + 1, lmax, path, used, out);
        path.pop_back();
        used[w] = 0;
    }
}

}  // namespace

std::map<int, std::vector<std::vector<int>>> enumerate_cycles(const Graph& g, int lmax) {
    std::map<int, std::set<std::vector<int>>> sets;
    std::vector<char> used(g.vertex_count(), 0);
    std::vector<int> path;
    for (int s = 0; s < g.vertex_count(); ++s) {
        used[s] = 1;
        path = {s};
        cycle_dfs(g, s, s, 1, lmax, path, used, sets);
        used[s] = 0;
    }
    std::map<int, std::vector<std::vector<int>>> out;
    for (auto& [len, ss] : sets) out[len] = std::vector<std::vector<int>>(ss.begin(), ss.end());
    return out;
}

std::vector<std::vector<int>> triangles(const Graph& g) {
    auto cycles = enumerate_cycles(g, 3);
    auto it = cycles.find(3);
    return it == cycles.end() ? std::vector<std::vector<int>>{} : it->second;
}

EdgeCycleProfile edge_cycle_profile(const Graph& g, std::pair<int, int> e,
                                    int lmax, int incident_dist) {
    int u = std::min(e.first, e.second);
    int v = std::max(e.first, e.second);
    if (!g.has_edge(u, v))
        throw std::invalid_argument("edge_cycle_profile: (" + std::to_string(u + 1) + "," +
                                    std::to_string(v + 1) + ") is not an edge");
    if (lmax < 3 || lmax > 8)
        throw std::invalid_argument("edge_cycle_profile: lmax must be in 3..8");

    EdgeCycleProfile prof;
    prof.edge = {u, v};

    std::vector<char> used(g.vertex_count(), 0);
    std::vector<int> path;
    for (int len = 3; len <= lmax; ++len) {
        std::set<std::vector<int>> sets;
        used.assign(g.vertex_count(), 0);
        used[u] = 1;
        path = {u};
        edge_path_dfs(g, v, u, len - 2, path, used, sets);
        prof.in_cycles[len] = static_cast<long long>(sets.size());
    }

    auto all = enumerate_cycles(g, lmax);
    auto du = bfs_distances(g, u);
    auto dv = bfs_distances(g, v);
    for (int len = 3; len <= lmax; ++len) {
        long long count = 0;
        auto it = all.find(len);
        if (it != all.end()) {
            for (const auto& verts : it->second) {
                int best = -1;
                for (int w : verts) {
                    for (int d : {du[w], dv[w]})
                        if (d >= 0 && (best < 0 || d < best)) best = d;
                }
                if (best >= 0 && best <= incident_dist) ++count;
            }
        }
        prof.incident_cycles[len] = count;
    }
    return prof;
}

namespace {

bool ham_dfs(const Graph& g, std::vector<int>& path, std::vector<char>& used, int n) {
    if (static_cast<int>(path.size()) == n)
        return g.has_edge(path.back(), path.front());
    // Degree pruning: every unused vertex still needs two free cycle slots.
    for (int w = 0; w < n; ++w) {
        if (used[w]) continue;
        int free_nb = 0;
        for (int x : g.neighbors(w))
            if (!used[x] || x == path.back() || x == path.front()) ++free_nb;
        if (free_nb < 2) return false;
    }
    for (int w : g.neighbors(path.back())) {
        if (used[w]) continue;
        used[w] = 1;
        path.push_back(w);
        if (ham_dfs(g, path, used, n)) return true;
        path.pop_back();
        used[w] = 0;
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> find_hamiltonian_cycle(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) return std::nullopt;  // cycles need three distinct vertices
    if (!g.is_connected() || g.min_degree() < 2) return std::nullopt;
    std::vector<int> path{0};
    std::vector<char> used(n, 0);
    used[0] = 1;
    if (ham_dfs(g, path, used, n)) return path;
    return std::nullopt;
}

bool dirac_guarantees_hamiltonian(const Graph& g) {
    int n = g.vertex_count();
    if (n < 3) throw std::invalid_argument("dirac_guarantees_hamiltonian requires n >= 3");
    return 2 * g.min_degree() >= n;
}

namespace {

void append_size(std::string& out, int n) {
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        // 4-byte extension: '~' then 18 bits, 6 per byte.
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    }
}

}  // namespace

std::string encode_graph6(const Graph& g) {
    int n = g.vertex_count();
    if (n > 258047) throw std::invalid_argument("encode_graph6: n too large for 3-byte size");
    std::string out;
    append_size(out, n);
    int bit = 5;
    unsigned char cur = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if (g.has_edge(i, j)) cur |= static_cast<unsigned char>(1u << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                cur = 0;
                bit = 5;
            }
        }
    }
    if (n >= 2 && bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

Graph decode_graph6(const std::string& bytes) {
    size_t pos = 0;
    auto need = [&](size_t k) {
        if (bytes.size() < pos + k) throw std::runtime_error("decode_graph6: truncated input");
    };
    auto val = [&](size_t i) -> int {
        unsigned char c = static_cast<unsigned char>(bytes[i]);
        if (c < 63 || c > 126) throw std::runtime_error("decode_graph6: byte out of range");
        return c - 63;
    };
    need(1);
    long long n;
    if (bytes[pos] == 126) {
        need(2);
        if (bytes[pos + 1] == 126) throw std::runtime_error("decode_graph6: 8-byte sizes unsupported");
        need(4);
        n = (static_cast<long long>(val(pos + 1)) << 12) | (val(pos + 2) << 6) | val(pos + 3);
        pos += 4;
    } else {
        n = val(pos);
        pos += 1;
    }
    long long pairs = n * (n - 1) / 2;
    size_t body = static_cast<size_t>((pairs + 5) / 6);
    need(body);
    if (bytes.size() != pos + body)
        throw std::runtime_error("decode_graph6: trailing bytes after graph data");

    std::vector<std::pair<int, int>> edges;
    long long idx = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++idx) {
            int b = val(pos + idx / 6);
            if ((b >> (5 - idx % 6)) & 1) edges.emplace_back(i, j);
        }
    }
    // Padding bits past the last pair must be zero.
    for (long long k = idx; k < static_cast<long long>(body) * 6; ++k) {
        if ((val(pos + k / 6) >> (5 - k % 6)) & 1)
            throw std::runtime_error("decode_graph6: nonzero padding bits");
    }
    return Graph(static_cast<int>(n), edges);
}

std::string to_dot(const Graph& g, const std::string& name) {
    std::string out = "graph " + name + " {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out += "  v" + std::to_string(v + 1) + ";\n";
    for (auto [u, v] : g.edges())
        out += "  v" + std::to_string(u + 1) + " -- v" + std::to_string(v + 1) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace asymgraph
