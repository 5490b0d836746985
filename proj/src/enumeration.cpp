#include "asymgraph/enumeration.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

#include "asymgraph/constructions.hpp"

namespace asymgraph {

std::uint64_t q_distinct(int m) {
    if (m < 0) throw std::invalid_argument("q_distinct: m must be nonnegative");
    // 0/1 knapsack over parts 1..m
    std::vector<std::uint64_t> ways(m + 1, 0);
    ways[0] = 1;
    for (int part = 1; part <= m; ++part)
        for (int s = m; s >= part; --s) ways[s] += ways[s - part];
    return ways[m];
}

namespace {

void gen_partitions(int remaining, int max_part, std::vector<int>& cur,
                    std::vector<DistinctPartition>& out, int min_parts, int total) {
    if (remaining == 0) {
        if (static_cast<int>(cur.size()) >= min_parts) out.push_back({cur, total});
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        cur.push_back(p);
        gen_partitions(remaining - p, p - 1, cur, out, min_parts, total);
        cur.pop_back();
    }
}

}  // namespace

std::vector<DistinctPartition> distinct_partitions(int m, int min_parts) {
    if (m < 1) throw std::invalid_argument("distinct_partitions: m must be >= 1");
    if (min_parts < 1) throw std::invalid_argument("distinct_partitions: min_parts must be >= 1");
    std::vector<DistinctPartition> out;
    std::vector<int> cur;
    gen_partitions(m, m, cur, out, min_parts, m);
    std::sort(out.begin(), out.end(),
              [](const DistinctPartition& a, const DistinctPartition& b) {
                  return a.parts < b.parts;
              });
    return out;
}

AsdsCount count_asds(int n) {
    if (n < 4) throw std::invalid_argument("count_asds: n must be >= 4");
    AsdsCount r;
    r.n = n;
    r.formula_value = static_cast<long long>(q_distinct(n - 1)) - (n - 1) / 2;
    r.exact_value = static_cast<long long>(distinct_partitions(n - 1, 3).size());
    r.discrepancy = r.formula_value - r.exact_value;

    // Confirmation pass: every distinct-part arm multiset is built and put
    // through the solver; the asymmetric ones must be exactly the >=3-part
    // partitions.
    long long solver_count = 0;
    for (const auto& part : distinct_partitions(n - 1, 1))
        if (is_asymmetric(subdivided_star(part.parts))) ++solver_count;
    if (solver_count != r.exact_value)
        throw std::runtime_error("count_asds: solver count " + std::to_string(solver_count) +
                                 " disagrees with partition count " +
                                 std::to_string(r.exact_value) + " at n=" + std::to_string(n));
    return r;
}

namespace {

// Perfect matchings on {0..n-1} avoiding cycle-adjacent pairs; each matching
// yields C_n plus chords, i.e. one labeled cubic Hamiltonian graph.
void matchings_rec(int n, std::vector<int>& mate, std::vector<std::pair<int, int>>& cur,
                   const std::function<void(const std::vector<std::pair<int, int>>&)>& emit) {
    int u = -1;
    for (int v = 0; v < n; ++v)
        if (mate[v] < 0) {
            u = v;
            break;
        }
    if (u < 0) {
        emit(cur);
        return;
    }
    for (int v = u + 1; v < n; ++v) {
        if (mate[v] >= 0) continue;
        int diff = (v - u) % n;
        if (diff == 1 || diff == n - 1) continue;  // cycle edges are not chords
        mate[u] = v;
        mate[v] = u;
        cur.emplace_back(u, v);
        matchings_rec(n, mate, cur, emit);
        cur.pop_back();
        mate[u] = -1;
        mate[v] = -1;
    }
}

using InvariantKey = std::tuple<std::vector<int>, int, int>;

InvariantKey invariant_key(const Graph& g) {
    auto cycles = enumerate_cycles(g, 4);
    std::vector<int> tri_per_vertex(g.vertex_count(), 0);
    int c3 = 0, c4 = 0;
    if (cycles.count(3)) {
        c3 = static_cast<int>(cycles[3].size());
        for (const auto& t : cycles[3])
            for (int v : t) ++tri_per_vertex[v];
    }
    if (cycles.count(4)) c4 = static_cast<int>(cycles[4].size());
    std::sort(tri_per_vertex.begin(), tri_per_vertex.end());
    return {tri_per_vertex, c3, c4};
}

}  // namespace

CensusReport enumerate_cubic_hamiltonian(int n) {
    if (n % 2 != 0) throw std::invalid_argument("enumerate_cubic_hamiltonian: no cubic graph on odd n");
    if (n < 4 || n > 16)
        throw std::invalid_argument("enumerate_cubic_hamiltonian: supported range is even 4..16");

    std::vector<std::pair<int, int>> cycle;
    for (int v = 0; v < n; ++v) cycle.emplace_back(v, (v + 1) % n);

    // invariant buckets first, canonical forms inside each bucket
    std::map<InvariantKey, std::set<std::string>> buckets;
    std::vector<int> mate(n, -1);
    std::vector<std::pair<int, int>> chords;
    matchings_rec(n, mate, chords,
                  [&](const std::vector<std::pair<int, int>>& matching) {
                      auto edges = cycle;
                      edges.insert(edges.end(), matching.begin(), matching.end());
                      Graph g(n, edges);
                      buckets[invariant_key(g)].insert(canonical_form(g));
                  });

    CensusReport rep;
    rep.n = n;
    for (auto& [key, canons] : buckets)
        for (const auto& canon : canons) {
            CensusEntry e;
            e.canonical = canon;
            auto aut = automorphism_group(decode_graph6(canon));
            e.group_order = aut.group_order;
            e.is_asymmetric = aut.is_asymmetric;
            rep.entries.push_back(std::move(e));
        }
    std::sort(rep.entries.begin(), rep.entries.end(),
              [](const CensusEntry& a, const CensusEntry& b) { return a.canonical < b.canonical; });
    rep.total_count = static_cast<long long>(rep.entries.size());
    for (const auto& e : rep.entries)
        if (e.is_asymmetric) ++rep.asymmetric_count;
    return rep;
}

std::vector<std::string> enumerate_trees(int n) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("enumerate_trees: supported range is 1..12");
    // leaf augmentation: every tree on k+1 vertices is a tree on k vertices
    // plus a pendant vertex
    std::vector<Graph> level = {Graph(1, {})};
    for (int k = 1; k < n; ++k) {
        std::set<std::string> next_canon;
        std::vector<Graph> next;
        for (const Graph& t : level) {
            for (int v = 0; v < k; ++v) {
                std::vector<std::pair<int, int>> edges = t.edges();
                edges.emplace_back(v, k);
                Graph bigger(k + 1, edges);
                if (next_canon.insert(canonical_form(bigger)).second)
                    next.push_back(std::move(bigger));
            }
        }
        level = std::move(next);
    }
    std::vector<std::string> out;
    out.reserve(level.size());
    for (const Graph& t : level) out.push_back(canonical_form(t));
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::string> enumerate_asymmetric_trees(int n) {
    std::vector<std::string> out;
    for (const auto& canon : enumerate_trees(n))
        if (is_asymmetric(decode_graph6(canon))) out.push_back(canon);
    return out;
}

bool is_subdivided_star(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    if (g.edge_count() != n - 1 || !g.is_connected()) return false;  // not a tree
    int high = 0;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 3) ++high;
    return high <= 1;
}

}  // namespace asymgraph
