#ifndef ASYMGRAPH_ENUMERATION_HPP
#define ASYMGRAPH_ENUMERATION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "asymgraph/automorphism.hpp"
#include "asymgraph/graph.hpp"

namespace asymgraph {

/// Number of partitions of m into distinct positive parts; q(0) = 1.
std::uint64_t q_distinct(int m);

struct DistinctPartition {
    std::vector<int> parts;  // strictly decreasing
    int sum = 0;
};

/// Every partition of m into at least min_parts distinct parts, each exactly
/// once, in lexicographic order of the decreasing part sequences.
std::vector<DistinctPartition> distinct_partitions(int m, int min_parts);

/// The counting-formula value q(n-1) - floor((n-1)/2) next to the exact
/// count of asymmetric subdivided stars on n vertices. The exact count is the
/// number of partitions of n-1 into >= 3 distinct parts and is re-confirmed
/// here by building every candidate star and running the solver. The formula
/// misses the single-part partition (a path) when n-1 is odd, hence the
/// discrepancy of 1 at even n.
struct AsdsCount {
    int n = 0;
    long long formula_value = 0;
    long long exact_value = 0;
    long long discrepancy = 0;  // formula_value - exact_value
};
AsdsCount count_asds(int n);

struct CensusEntry {
    std::string canonical;  // graph6 of the canonical representative
    BigCount group_order;
    bool is_asymmetric = false;
};

/// Isomorphism-free census of cubic Hamiltonian graphs on n vertices: every
/// such graph is C_n plus a perfect matching of chords, so all matchings of
/// non-cycle pairs are generated and deduplicated by canonical form.
/// Entries are sorted by canonical string. Supported domain: even 4..16.
struct CensusReport {
    int n = 0;
    long long total_count = 0;
    long long asymmetric_count = 0;
    std::vector<CensusEntry> entries;
};
CensusReport enumerate_cubic_hamiltonian(int n);

/// All non-isomorphic trees on n vertices (canonical forms, sorted),
/// generated by leaf augmentation with canonical deduplication. n <= 12.
std::vector<std::string> enumerate_trees(int n);

/// The asymmetric subset of enumerate_trees(n), sorted.
std::vector<std::string> enumerate_asymmetric_trees(int n);

/// True iff g is a tree with at most one vertex of degree >= 3 (paths count
/// as subdivided stars with k <= 2 arms).
bool is_subdivided_star(const Graph& g);

}  // namespace asymgraph

#endif
