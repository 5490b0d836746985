#ifndef ASYMGRAPH_GRAPH_HPP
#define ASYMGRAPH_GRAPH_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace asymgraph {

/// Undirected simple graph on vertices 0..n-1. Immutable after construction;
/// all operations below are pure. The external 1-based name v_k corresponds
/// to internal index k-1 throughout.
class Graph {
public:
    Graph() = default;
    /// Edges are internal 0-based pairs. Throws std::invalid_argument on
    /// self-loops, duplicates or out-of-range endpoints.
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return edge_count_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }

    /// All edges as (u, v) with u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> edges() const;
    std::vector<int> degree_sequence() const;  // sorted ascending
    int min_degree() const;
    int max_degree() const;
    bool is_connected() const;

    bool operator==(const Graph& other) const {
        return n_ == other.n_ && adj_ == other.adj_;
    }
    bool operator!=(const Graph& other) const { return !(*this == other); }

private:
    int n_ = 0;
    int edge_count_ = 0;
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
};

/// Builds a graph from 1-based vertex pairs (the v_1..v_n naming).
Graph build_graph(int n, const std::vector<std::pair<int, int>>& edges_1based);

Graph complement(const Graph& g);

/// BFS hop count; std::nullopt when v is unreachable from u.
std::optional<int> distance(const Graph& g, int u, int v);

/// BFS distances from src to every vertex; -1 marks unreachable.
std::vector<int> bfs_distances(const Graph& g, int src);

/// Distance from an edge to a vertex set: min over (endpoint, member) pairs.
/// Members of the set containing an endpoint give distance 0.
std::optional<int> edge_to_set_distance(const Graph& g, std::pair<int, int> e,
                                        const std::vector<int>& verts);

/// Cycle census of an edge. Cycles are identified by their vertex set: two
/// traversals (or two distinct cycles on the same vertices) count once.
struct EdgeCycleProfile {
    std::pair<int, int> edge;             // internal 0-based, u < v
    std::map<int, long long> in_cycles;   // length -> #cycles through the edge
    std::map<int, long long> incident_cycles;  // length -> #cycles at distance <= d
};

/// Exact per-length counts for L in 3..lmax (lmax <= 8). `incident_dist` is
/// the d in "cycles at distance <= d from the edge"; d = 0 means sharing a
/// vertex, which includes the containing cycles themselves.
EdgeCycleProfile edge_cycle_profile(const Graph& g, std::pair<int, int> e,
                                    int lmax = 6, int incident_dist = 0);

/// Vertex sets (sorted) of all cycles of each length 3..lmax.
std::map<int, std::vector<std::vector<int>>> enumerate_cycles(const Graph& g, int lmax);

/// Vertex sets of all triangles, sorted.
std::vector<std::vector<int>> triangles(const Graph& g);

/// Deterministic backtracking search (smallest start, ascending neighbor
/// order). Returns the cycle as a vertex sequence, first vertex 0, or
/// std::nullopt. Intended for n <= 64.
std::optional<std::vector<int>> find_hamiltonian_cycle(const Graph& g);

/// True iff min degree >= n/2 (sufficient condition only). Throws for n < 3.
bool dirac_guarantees_hamiltonian(const Graph& g);

/// Bit-exact graph6: upper-triangle column-major bits, bytes offset by 63,
/// 4-byte size extension above n = 62.
std::string encode_graph6(const Graph& g);
Graph decode_graph6(const std::string& bytes);

/// DOT export with vertex labels "v1".."vn".
std::string to_dot(const Graph& g, const std::string& name = "G");

}  // namespace asymgraph

#endif
