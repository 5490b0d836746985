#include <doctest.h>

#include <random>

#include "asymgraph/constructions.hpp"
#include "asymgraph/graph.hpp"
#include "oracles.hpp"

using namespace asymgraph;

TEST_CASE("build_graph basics and error paths") {
    Graph k3 = build_graph(3, {{1, 2}, {2, 3}, {1, 3}});
    CHECK(k3.vertex_count() == 3);
    CHECK(k3.edge_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(k3.degree(v) == 2);

    Graph single = build_graph(1, {});
    CHECK(single.vertex_count() == 1);
    CHECK(single.edge_count() == 0);

    CHECK_THROWS_AS(build_graph(3, {{1, 4}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{2, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(build_graph(3, {{1, 2}, {2, 1}}), std::invalid_argument);
}

TEST_CASE("figure-1 tree degrees") {
    Graph t = subdivided_star({1, 2, 3});
    CHECK(t.vertex_count() == 7);
    std::vector<int> want{1, 1, 1, 2, 2, 2, 3};
    CHECK(t.degree_sequence() == want);
}

TEST_CASE("handshake identity on random graphs") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Graph g = oracles::random_graph(3 + static_cast<int>(rng() % 10),
                                        static_cast<int>(rng() % 100), rng);
        long long total = 0;
        for (int v = 0; v < g.vertex_count(); ++v) total += g.degree(v);
        CHECK(total == 2LL * g.edge_count());
    }
}

TEST_CASE("complement") {
    Graph c5 = oracles::cycle_graph(5);
    Graph cc = complement(c5);
    CHECK(cc.edge_count() == 5);
    CHECK(complement(cc) == c5);

    Graph k4c = complement(oracles::complete_graph(4));
    CHECK(k4c.edge_count() == 0);

    Graph cubic12 = cubic_family(12);
    Graph comp = complement(cubic12);
    for (int v = 0; v < 12; ++v) CHECK(comp.degree(v) == 8);

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 2 + static_cast<int>(rng() % 10);
        Graph g = oracles::random_graph(n, 50, rng);
        Graph gc = complement(g);
        CHECK(complement(gc) == g);
        for (int v = 0; v < n; ++v) CHECK(g.degree(v) + gc.degree(v) == n - 1);
    }
}

TEST_CASE("distance") {
    Graph p4 = oracles::path_graph(4);
    CHECK(distance(p4, 0, 3) == 3);
    CHECK(distance(p4, 1, 1) == 0);

    Graph two_triangles =
        oracles::disjoint_union(oracles::complete_graph(3), oracles::complete_graph(3));
    CHECK_FALSE(distance(two_triangles, 0, 4).has_value());

    // Figure-1 tree: the far leaf of the length-3 arm is 3 steps from the center
    Graph t = subdivided_star({1, 2, 3});
    CHECK(distance(t, 0, t.vertex_count() - 1) == 3);

    SUBCASE("triangle inequality on connected random graphs") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 40; ++trial) {
            int n = 3 + static_cast<int>(rng() % 10);
            Graph g = oracles::random_graph(n, 60, rng);
            if (!g.is_connected()) continue;
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b)
                    for (int c = 0; c < n; ++c)
                        CHECK(*distance(g, a, c) <= *distance(g, a, b) + *distance(g, b, c));
        }
    }
}

TEST_CASE("edge cycle profile small cases") {
    Graph k3 = oracles::complete_graph(3);
    auto p = edge_cycle_profile(k3, {0, 1}, 3);
    CHECK(p.in_cycles[3] == 1);

    Graph c4 = oracles::cycle_graph(4);
    auto p4 = edge_cycle_profile(c4, {0, 1}, 5);
    CHECK(p4.in_cycles[3] == 0);
    CHECK(p4.in_cycles[4] == 1);
    CHECK(p4.in_cycles[5] == 0);

    CHECK_THROWS_AS(edge_cycle_profile(c4, {0, 2}, 5), std::invalid_argument);
}

TEST_CASE("edge v1v2 of the 12-vertex cubic family: no containing C4, two touching") {
    Graph g = cubic_family(12);
    auto p = edge_cycle_profile(g, {0, 1}, 5);
    CHECK(p.in_cycles[4] == 0);
    CHECK(p.incident_cycles[4] == 2);
}

TEST_CASE("incident distance widens the cycle neighborhood") {
    // triangle 0-1-2 with a pendant path 2-3-4
    Graph g(5, {{0, 1}, {1, 2}, {0, 2}, {2, 3}, {3, 4}});
    auto near = edge_cycle_profile(g, {2, 3}, 3, 0);
    CHECK(near.incident_cycles[3] == 1);  // shares vertex 2
    auto far0 = edge_cycle_profile(g, {3, 4}, 3, 0);
    CHECK(far0.incident_cycles[3] == 0);
    auto far1 = edge_cycle_profile(g, {3, 4}, 3, 1);
    CHECK(far1.incident_cycles[3] == 1);  // endpoint 3 is one step from the triangle
}

TEST_CASE("cycle profile agrees with the subset oracle") {
    // exhaustive-by-construction sample: all graphs on <= 5 vertices plus
    // random graphs on 6..8
    std::vector<Graph> pool;
    for (int n = 3; n <= 5; ++n) {
        int pairs = n * (n - 1) / 2;
        for (int mask = 0; mask < (1 << pairs); ++mask) {
            std::vector<std::pair<int, int>> e;
            int bit = 0;
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v, ++bit)
                    if (mask & (1 << bit)) e.emplace_back(u, v);
            pool.emplace_back(n, e);
        }
    }
    std::mt19937_64 rng(19);
    for (int trial = 0; trial < 60; ++trial)
        pool.push_back(oracles::random_graph(6 + static_cast<int>(rng() % 3),
                                             30 + static_cast<int>(rng() % 50), rng));

    for (const Graph& g : pool) {
        for (auto e : g.edges()) {
            auto prof = edge_cycle_profile(g, e, 6, 0);
            for (int len = 3; len <= 6; ++len) {
                auto oracle = oracles::subset_cycle_oracle(g, len, e);
                CHECK(prof.in_cycles[len] == static_cast<long long>(oracle.through_edge.size()));
                long long incident = 0;
                for (const auto& verts : oracle.spanning) {
                    auto d = edge_to_set_distance(g, e, verts);
                    if (d && *d == 0) ++incident;
                }
                CHECK(prof.incident_cycles[len] == incident);
            }
        }
    }
}

TEST_CASE("hamiltonian cycle search") {
    Graph c6 = oracles::cycle_graph(6);
    auto cyc = find_hamiltonian_cycle(c6);
    REQUIRE(cyc.has_value());
    CHECK(*cyc == std::vector<int>{0, 1, 2, 3, 4, 5});

    CHECK_FALSE(find_hamiltonian_cycle(oracles::petersen()).has_value());

    auto fam = find_hamiltonian_cycle(cubic_family(14));
    REQUIRE(fam.has_value());
    std::vector<int> expect(14);
    for (int i = 0; i < 14; ++i) expect[i] = i;
    CHECK(*fam == expect);  // the construction's own C_n comes first

    SUBCASE("existence matches the permutation oracle") {
        std::mt19937_64 rng(23);
        for (int trial = 0; trial < 120; ++trial) {
            int n = 3 + static_cast<int>(rng() % 7);  // up to the oracle's n <= 9 range
            Graph g = oracles::random_graph(n, 20 + static_cast<int>(rng() % 60), rng);
            auto found = find_hamiltonian_cycle(g);
            CHECK(found.has_value() == oracles::naive_hamiltonian(g));
            if (found) {
                CHECK(found->size() == static_cast<size_t>(n));
                for (int i = 0; i < n; ++i)
                    CHECK(g.has_edge((*found)[i], (*found)[(i + 1) % n]));
            }
        }
    }
}

TEST_CASE("dirac condition") {
    CHECK(dirac_guarantees_hamiltonian(oracles::complete_graph(4)));
    CHECK_FALSE(dirac_guarantees_hamiltonian(oracles::cycle_graph(8)));
    CHECK(find_hamiltonian_cycle(oracles::cycle_graph(8)).has_value());  // one-sided
    CHECK(dirac_guarantees_hamiltonian(complement(cubic_family(12))));
    CHECK_THROWS_AS(dirac_guarantees_hamiltonian(oracles::path_graph(2)), std::invalid_argument);
}

TEST_CASE("graph6 codec") {
    CHECK(encode_graph6(Graph(1, {})) == "@");

    Graph c5 = oracles::cycle_graph(5);
    CHECK(decode_graph6(encode_graph6(c5)) == c5);

    SUBCASE("round trip on random graphs across the size range") {
        std::mt19937_64 rng(41);
        for (int trial = 0; trial < 1000; ++trial) {
            int n = 1 + static_cast<int>(rng() % 62);
            Graph g = oracles::random_graph(n, static_cast<int>(rng() % 100), rng);
            CHECK(decode_graph6(encode_graph6(g)) == g);
        }
    }

    SUBCASE("round trip above the one-byte size limit") {
        std::mt19937_64 rng(43);
        Graph g = oracles::random_graph(70, 10, rng);
        std::string enc = encode_graph6(g);
        CHECK(enc[0] == 126);
        CHECK(decode_graph6(enc) == g);
    }

    SUBCASE("injective on labeled graphs of fixed n") {
        for (int n = 1; n <= 5; ++n) {
            int pairs = n * (n - 1) / 2;
            std::set<std::string> seen;
            for (int mask = 0; mask < (1 << pairs); ++mask) {
                std::vector<std::pair<int, int>> e;
                int bit = 0;
                for (int u = 0; u < n; ++u)
                    for (int v = u + 1; v < n; ++v, ++bit)
                        if (mask & (1 << bit)) e.emplace_back(u, v);
                CHECK(seen.insert(encode_graph6(Graph(n, e))).second);
            }
        }
    }

    SUBCASE("malformed input") {
        CHECK_THROWS_AS(decode_graph6(""), std::runtime_error);
        CHECK_THROWS_AS(decode_graph6("D"), std::runtime_error);    // truncated body
        CHECK_THROWS_AS(decode_graph6("D???"), std::runtime_error); // trailing garbage
        CHECK_THROWS_AS(decode_graph6(std::string(1, '\x1f')), std::runtime_error);
        CHECK_THROWS_AS(decode_graph6(std::string(1, '\x7f')), std::runtime_error);
        CHECK_THROWS_AS(decode_graph6("B" + std::string(1, static_cast<char>(63 + 7))),
                        std::runtime_error);  // nonzero padding bits
        CHECK_NOTHROW(decode_graph6("D??"));  // empty graph on 5 vertices is fine
    }
}

TEST_CASE("dot export") {
    Graph p3 = oracles::path_graph(3);
    std::string dot = to_dot(p3);
    CHECK(dot.find("graph G {") == 0);
    CHECK(dot.find("v1 -- v2;") != std::string::npos);
    CHECK(dot.find("v2 -- v3;") != std::string::npos);
    CHECK(dot.find("v3;") != std::string::npos);
}
