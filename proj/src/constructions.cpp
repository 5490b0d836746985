#include "asymgraph/constructions.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "asymgraph/automorphism.hpp"

namespace asymgraph {

std::string family_name(Family f) {
    switch (f) {
        case Family::subdivided_star: return "subdivided-star";
        case Family::fig3_tree: return "fig3-tree";
        case Family::cubic: return "cubic";
        case Family::quartic: return "quartic";
        case Family::complement_cubic: return "complement-cubic";
        case Family::complement_quartic: return "complement-quartic";
    }
    throw std::logic_error("unknown family");
}

Family family_from_name(const std::string& name) {
    for (Family f : {Family::subdivided_star, Family::fig3_tree, Family::cubic,
                     Family::quartic, Family::complement_cubic, Family::complement_quartic})
        if (family_name(f) == name) return f;
    // accept underscores as separators too
    std::string alt = name;
    std::replace(alt.begin(), alt.end(), '_', '-');
    if (alt != name) return family_from_name(alt);
    throw std::invalid_argument("unknown family: " + name);
}

static void require_even_ge12(int n, const char* what) {
    if (n < 12 || n % 2 != 0)
        throw std::invalid_argument(std::string(what) + " requires even n >= 12, got n=" +
                                    std::to_string(n));
}

void ConstructionSpec::validate() const {
    switch (family) {
        case Family::subdivided_star:
            if (arms.empty()) throw std::invalid_argument("subdivided-star needs at least one arm");
            for (int a : arms)
                if (a < 1) throw std::invalid_argument("arm lengths must be >= 1");
            break;
        case Family::fig3_tree:
            break;
        case Family::cubic:
        case Family::quartic:
        case Family::complement_cubic:
        case Family::complement_quartic:
            require_even_ge12(n, family_name(family).c_str());
            break;
    }
}

Graph ConstructionSpec::build() const {
    validate();
    switch (family) {
        case Family::subdivided_star: return subdivided_star(arms);
        case Family::fig3_tree: return fig3_tree();
        case Family::cubic: return cubic_family(n);
        case Family::quartic: return quartic_family(n);
        case Family::complement_cubic: return higher_regular_family(n, RegularSource::cubic);
        case Family::complement_quartic: return higher_regular_family(n, RegularSource::quartic);
    }
    throw std::logic_error("unknown family");
}

Graph subdivided_star(const std::vector<int>& arms) {
    if (arms.empty()) throw std::invalid_argument("subdivided_star: empty arm list");
    for (int a : arms)
        if (a < 1) throw std::invalid_argument("subdivided_star: arm length must be >= 1");
    int n = 1;
    for (int a : arms) n += a;
    std::vector<std::pair<int, int>> edges;
    int next = 2;
    for (int a : arms) {
        int prev = 1;  // center
        for (int i = 0; i < a; ++i) {
            edges.emplace_back(prev, next);
            prev = next++;
        }
    }
    return build_graph(n, edges);
}

Graph fig3_tree() {
    // Two adjacent centers: v1 carries arms of lengths 1 (v6) and 3
    // (v7-v8-v9), v2 carries arms of lengths 2 (v3-v4) and 1 (v5).
    return build_graph(9, {{1, 2}, {2, 3}, {3, 4}, {2, 5}, {1, 6}, {1, 7}, {7, 8}, {8, 9}});
}

Graph cubic_family(int n) {
    require_even_ge12(n, "cubic_family");
    std::vector<std::pair<int, int>> edges;
    for (int k = 1; k < n; ++k) edges.emplace_back(k, k + 1);
    edges.emplace_back(n, 1);
    edges.emplace_back(n, n / 2 - 1);
    edges.emplace_back(1, n - 2);
    edges.emplace_back(n - 1, n - 3);
    for (int k = 2; k <= n / 2 - 2; ++k) edges.emplace_back(k, n - 2 - k);
    return build_graph(n, edges);
}

Graph quartic_family(int n) {
    require_even_ge12(n, "quartic_family");
    Graph base = cubic_family(n);
    auto wrap = [n](int k) {  // 1..n with residue 0 mapped to v_n
        int r = ((k % n) + n) % n;
        return r == 0 ? n : r;
    };
    std::vector<std::pair<int, int>> added;
    if (n % 4 == 0) {
        added.emplace_back(n / 4, 3 * n / 4);
        for (int i = 1; i <= n / 2 - 1; ++i)
            added.emplace_back(wrap(n / 4 + i), wrap(n / 4 - i));
    } else {
        added.emplace_back(1, n / 2 + 1);
        for (int i = 1; i <= n / 2 - 1; ++i)
            added.emplace_back(wrap(1 + i), wrap(1 - i));
    }
    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : base.edges()) edges.emplace_back(u + 1, v + 1);
    for (auto [u, v] : added) {
        if (base.has_edge(u - 1, v - 1))
            throw std::runtime_error("quartic_family: chord v" + std::to_string(u) + "v" +
                                     std::to_string(v) + " collides with an existing edge");
        edges.emplace_back(u, v);
    }
    Graph g = build_graph(n, edges);  // rejects duplicates within the matching too
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != 4)
            throw std::runtime_error("quartic_family: v" + std::to_string(v + 1) +
                                     " has degree " + std::to_string(g.degree(v)));
    return g;
}

namespace {

struct ClassPredicates {
    const Graph& g;
    std::vector<std::vector<int>> tris;  // the family has exactly two

    // Triangles not containing both endpoints of e.
    std::vector<const std::vector<int>*> other_triangles(std::pair<int, int> e) const {
        std::vector<const std::vector<int>*> out;
        for (const auto& t : tris) {
            bool has_u = std::find(t.begin(), t.end(), e.first) != t.end();
            bool has_v = std::find(t.begin(), t.end(), e.second) != t.end();
            if (!(has_u && has_v)) out.push_back(&t);
        }
        return out;
    }

    bool endpoint_at_distance_two(std::pair<int, int> e) const {
        for (const auto* t : other_triangles(e))
            for (int x : {e.first, e.second}) {
                auto dist = bfs_distances(g, x);
                for (int w : *t)
                    if (dist[w] == 2) return true;
            }
        return false;
    }

    int triangle_distance(std::pair<int, int> e) const {
        int best = -1;
        for (const auto& t : tris) {
            auto d = edge_to_set_distance(g, e, t);
            if (d && (best < 0 || *d < best)) best = *d;
        }
        return best;
    }

    bool holds(int roman, std::pair<int, int> e) const {
        auto prof = edge_cycle_profile(g, e, 6, 0);
        long long in3 = prof.in_cycles[3], in4 = prof.in_cycles[4], in5 = prof.in_cycles[5];
        long long inc4 = prof.incident_cycles[4];
        switch (roman) {
            case 1:  // not in a C4, touching exactly two C4s
                return in4 == 0 && inc4 == 2;
            case 2:  // in a C4 and in a C5
                return in4 >= 1 && in5 >= 1;
            case 3:  // in a C3, an endpoint at distance 2 from the other C3
                return in3 >= 1 && endpoint_at_distance_two(e);
            case 4:  // in a C3, no endpoint at distance 2 from the other C3
                return in3 >= 1 && !endpoint_at_distance_two(e);
            case 5:
                // Touching but not in a C3, and in no C4. A C5 exclusion
                // would be false here: v_{n-3}v_{n-4} always lies on the
                // cycle v_1 v_2 v_{n-4} v_{n-3} v_{n-2}.
                return in3 == 0 && triangle_distance(e) == 0 && in4 == 0;
            case 6:  // in exactly two C4s and no C5
                return in4 == 2 && in5 == 0;
            case 7:  // in a C4 and touching a further C4
                return in4 >= 1 && inc4 >= in4 + 1;
        }
        throw std::logic_error("bad class index");
    }
};

}  // namespace

EdgeClassification classify_cubic_edges(const Graph& g, int n) {
    require_even_ge12(n, "classify_cubic_edges");
    if (g != cubic_family(n))
        throw std::invalid_argument("classify_cubic_edges: graph is not cubic_family(" +
                                    std::to_string(n) + ")");

    auto norm = [](int u, int v) { return std::pair<int, int>(std::min(u, v), std::max(u, v)); };
    EdgeClassification cls;
    cls.classes[0] = {norm(1, 2)};
    cls.classes[1] = {norm(n, n - 1), norm(n, 1), norm(1, n - 2), norm(2, n - 4),
                      norm(n / 2 - 3, n / 2 + 1)};
    cls.classes[2] = {norm(n - 2, n - 1), norm(n - 1, n - 3), norm(n / 2 - 1, n / 2),
                      norm(n / 2 - 1, n / 2 - 2)};
    cls.classes[3] = {norm(n - 3, n - 2), norm(n / 2 - 2, n / 2)};
    cls.classes[4] = {norm(n, n / 2 - 1), norm(n - 3, n - 4)};
    // Class VI starts at k=3: the k=2 chord v_2 v_{n-4} already sits in
    // class II, and the classes must partition E(G).
    for (int k = 3; k <= n / 2 - 4; ++k) cls.classes[5].push_back(norm(k, n - 2 - k));
    for (int k = 2; k <= n / 2 - 3; ++k) cls.classes[6].push_back(norm(k, k + 1));
    for (int k = n / 2; k <= n - 5; ++k) cls.classes[6].push_back(norm(k, k + 1));

    // partition audit
    std::set<std::pair<int, int>> assigned;
    for (const auto& cl : cls.classes)
        for (auto e : cl)
            if (!assigned.insert(e).second)
                throw std::runtime_error("classify_cubic_edges: edge assigned twice");
    for (auto [u, v] : g.edges()) {
        auto e = norm(u + 1, v + 1);
        if (!assigned.count(e)) cls.leftover.push_back(e);
        assigned.erase(e);
    }
    if (!assigned.empty())
        throw std::runtime_error("classify_cubic_edges: class contains a non-edge");
    if (!cls.leftover.empty())
        throw std::runtime_error("classify_cubic_edges: " +
                                 std::to_string(cls.leftover.size()) + " edges unclassified");

    ClassPredicates pred{g, triangles(g)};
    if (pred.tris.size() != 2)
        throw std::runtime_error("classify_cubic_edges: expected exactly two triangles, found " +
                                 std::to_string(pred.tris.size()));
    for (int roman = 1; roman <= 7; ++roman)
        for (auto [u, v] : cls.of(roman))
            if (!pred.holds(roman, {u - 1, v - 1}))
                throw std::runtime_error("classify_cubic_edges: edge v" + std::to_string(u) +
                                         "v" + std::to_string(v) + " fails the class " +
                                         std::to_string(roman) + " predicate");
    return cls;
}

Graph extend_asymmetric(const Graph& g) {
    if (!is_asymmetric(g))
        throw std::invalid_argument("extend_asymmetric: input graph is not asymmetric");
    int n = g.vertex_count();

    std::vector<int> degree_one;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 1) degree_one.push_back(v);

    int attach;
    if (degree_one.empty()) {
        attach = 0;
        for (int v = 1; v < n; ++v)
            if (g.degree(v) > g.degree(attach)) attach = v;
    } else {
        std::vector<int> high;  // vertices of degree > 2
        for (int v = 0; v < n; ++v)
            if (g.degree(v) > 2) high.push_back(v);
        attach = -1;
        int best = -1;
        for (int u : degree_one) {
            auto dist = bfs_distances(g, u);
            int score = -1;
            if (!high.empty()) {
                for (int h : high)
                    if (dist[h] >= 0 && (score < 0 || dist[h] < score)) score = dist[h];
            } else {
                for (int d : dist) score = std::max(score, d);  // eccentricity
            }
            if (score > best) {
                best = score;
                attach = u;
            }
        }
    }

    std::vector<std::pair<int, int>> edges;
    for (auto [u, v] : g.edges()) edges.emplace_back(u, v);
    edges.emplace_back(attach, n);
    Graph extended(n + 1, edges);
    if (!is_asymmetric(extended))
        throw std::runtime_error(
            "extend_asymmetric: post-verification failed; attaching a vertex to v" +
            std::to_string(attach + 1) + " yields group order " +
            automorphism_group(extended).group_order.to_string() +
            " (extension-theorem counterexample)");
    return extended;
}

Graph higher_regular_family(int n, RegularSource source) {
    require_even_ge12(n, "higher_regular_family");
    Graph g = complement(source == RegularSource::cubic ? cubic_family(n) : quartic_family(n));
    int want = source == RegularSource::cubic ? n - 4 : n - 5;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) != want)
            throw std::runtime_error("higher_regular_family: degree " +
                                     std::to_string(g.degree(v)) + " at v" +
                                     std::to_string(v + 1) + ", expected " + std::to_string(want));
    if (!is_asymmetric(g))
        throw std::runtime_error("higher_regular_family: complement is not asymmetric for n=" +
                                 std::to_string(n));
    return g;
}

namespace {

// explicit Fisher-Yates so that fixed seeds reproduce across platforms
template <typename Rng>
void shuffle_vec(std::vector<int>& v, Rng& rng) {
    for (size_t i = v.size(); i > 1; --i)
        std::swap(v[i - 1], v[rng() % i]);
}

}  // namespace

std::optional<Graph> search_5regular_asymmetric_hamiltonian(int n, std::uint64_t seed,
                                                            std::uint64_t budget) {
    require_even_ge12(n, "search_5regular_asymmetric_hamiltonian");
    std::mt19937_64 rng(seed);
    std::vector<int> order(n);

    for (std::uint64_t trial = 0; trial < budget; ++trial) {
        std::set<std::pair<int, int>> used;
        auto add = [&](int u, int v) {
            std::pair<int, int> e{std::min(u, v), std::max(u, v)};
            return e.first != e.second && used.insert(e).second;
        };
        bool ok = true;
        for (int i = 0; i < n; ++i) add(i, (i + 1) % n);  // seeded C_n, always fresh

        // second cycle on a shuffled order: the 2-regular supplement
        for (int i = 0; i < n; ++i) order[i] = i;
        shuffle_vec(order, rng);
        for (int i = 0; i < n && ok; ++i) ok = add(order[i], order[(i + 1) % n]);
        if (!ok) continue;

        // perfect matching on a fresh shuffle
        for (int i = 0; i < n; ++i) order[i] = i;
        shuffle_vec(order, rng);
        for (int i = 0; i < n && ok; i += 2) ok = add(order[i], order[i + 1]);
        if (!ok) continue;

        Graph g(n, std::vector<std::pair<int, int>>(used.begin(), used.end()));
        if (g.min_degree() == 5 && g.max_degree() == 5 && is_asymmetric(g)) return g;
    }
    return std::nullopt;
}

}  // namespace asymgraph
