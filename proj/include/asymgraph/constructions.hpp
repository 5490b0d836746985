#ifndef ASYMGRAPH_CONSTRUCTIONS_HPP
#define ASYMGRAPH_CONSTRUCTIONS_HPP

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "asymgraph/graph.hpp"

namespace asymgraph {

enum class Family {
    subdivided_star,
    fig3_tree,
    cubic,
    quartic,
    complement_cubic,
    complement_quartic,
};

std::string family_name(Family f);
Family family_from_name(const std::string& name);

/// Named, parameterized recipe that deterministically yields a graph.
struct ConstructionSpec {
    Family family = Family::cubic;
    int n = 0;                       // target vertex count where applicable
    std::vector<int> arms;           // pendant path lengths, subdivided_star only
    std::uint64_t seed = 0;          // search families only
    std::uint64_t budget = 0;

    /// Throws std::invalid_argument when parameters violate the family domain.
    void validate() const;
    Graph build() const;
};

/// Star with a degree-k center and pendant paths of the given lengths.
/// Center is v1; arm i occupies the next arms[i] consecutive names.
Graph subdivided_star(const std::vector<int>& arms);

/// The 9-vertex tree with two adjacent degree-3 vertices, one carrying
/// pendant paths of lengths 1 and 2, the other of lengths 1 and 3.
Graph fig3_tree();

/// C_n plus the chords v_n v_{n/2-1}, v_1 v_{n-2}, v_{n-1} v_{n-3} and
/// v_k v_{n-2-k} for 2 <= k <= n/2-2. 3-regular, Hamiltonian, asymmetric,
/// with exactly two triangles. Requires even n >= 12.
Graph cubic_family(int n);

/// cubic_family(n) plus a perfect matching of "reflection" chords; the
/// matching depends on n mod 4. 4-regular and Hamiltonian. A collision of an
/// added chord with an existing edge is a hard error.
Graph quartic_family(int n);

/// Partition of the cubic family's edges into the seven structural classes.
/// Edges are 1-based (u, v) pairs with u < v.
struct EdgeClassification {
    std::array<std::vector<std::pair<int, int>>, 7> classes;  // [0] = I .. [6] = VII
    std::vector<std::pair<int, int>> leftover;                // must be empty

    const std::vector<std::pair<int, int>>& of(int roman) const { return classes[roman - 1]; }
};

/// Classifies by the explicit index formulas and cross-checks every class
/// against its cycle-membership predicate via edge_cycle_profile. Throws when
/// g is not cubic_family(n) or a predicate fails.
EdgeClassification classify_cubic_edges(const Graph& g, int n);

/// Adds one vertex preserving asymmetry: to the max-degree vertex when no
/// degree-1 vertex exists, else to the degree-1 vertex farthest from a vertex
/// of degree > 2 (lowest 1-based index on ties). The result is re-verified by
/// the solver; failure throws with a counterexample diagnostic.
Graph extend_asymmetric(const Graph& g);

enum class RegularSource { cubic, quartic };

/// Complement of the chosen family: (n-4)- or (n-5)-regular, asymmetric
/// (solver-verified), and Dirac-Hamiltonian over the family domain.
Graph higher_regular_family(int n, RegularSource source);

/// Randomized reconstruction of a 5-regular asymmetric Hamiltonian graph:
/// C_n plus a random 2-regular chord supplement plus a perfect matching,
/// filtered by the solver. Deterministic for a fixed seed; std::nullopt when
/// the trial budget is exhausted.
std::optional<Graph> search_5regular_asymmetric_hamiltonian(int n, std::uint64_t seed,
                                                            std::uint64_t budget);

}  // namespace asymgraph

#endif
