#ifndef ASYMGRAPH_AUTOMORPHISM_HPP
#define ASYMGRAPH_AUTOMORPHISM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "asymgraph/graph.hpp"

namespace asymgraph {

/// Bijection on vertex indices; image[v] is where v goes.
class Permutation {
public:
    Permutation() = default;
    explicit Permutation(std::vector<int> image);
    static Permutation identity(int n);

    int size() const { return static_cast<int>(image_.size()); }
    int operator()(int v) const { return image_[v]; }
    const std::vector<int>& image() const { return image_; }

    Permutation inverse() const;
    /// (a.compose(b))(v) = a(b(v)).
    Permutation compose(const Permutation& b) const;
    bool is_identity() const;
    bool is_automorphism(const Graph& g) const;

    /// One-line cycle notation with 1-based names, e.g. "(1 2 3)(5 6)";
    /// "()" for the identity.
    std::string cycle_notation() const;

    bool operator==(const Permutation& o) const { return image_ == o.image_; }

private:
    std::vector<int> image_;
};

/// Relabels: vertex v of g becomes p(v).
Graph apply_permutation(const Graph& g, const Permutation& p);

/// Ordered partition of {0..n-1}; refinement and search state.
class Coloring {
public:
    Coloring() = default;
    explicit Coloring(std::vector<std::vector<int>> cells, int n);
    static Coloring unit(int n);

    int vertex_count() const { return n_; }
    const std::vector<std::vector<int>>& cells() const { return cells_; }
    int cell_of(int v) const { return cell_of_[v]; }
    bool is_discrete() const;
    /// Every pair of vertices in one cell has, for each cell, equally many
    /// neighbors there.
    bool is_equitable(const Graph& g) const;
    /// True iff every cell of *this is contained in a cell of `coarser`.
    bool refines(const Coloring& coarser) const;

private:
    int n_ = 0;
    std::vector<std::vector<int>> cells_;
    std::vector<int> cell_of_;
};

/// Coarsest equitable refinement of c; deterministic: split fragments are
/// ordered by neighbor count descending.
Coloring refine(const Graph& g, const Coloring& c);

/// Exact nonnegative integer for automorphism group orders (64! overflows
/// built-in types). Base 10^9 limbs.
class BigCount {
public:
    BigCount() : limbs_{0} {}
    BigCount(std::uint64_t v);  // implicit: counts promote from integers
    BigCount& operator*=(std::uint64_t f);
    bool operator==(const BigCount& o) const { return limbs_ == o.limbs_; }
    bool operator!=(const BigCount& o) const { return !(*this == o); }
    bool operator==(std::uint64_t v) const { return *this == BigCount(v); }
    bool fits_uint64() const;
    std::uint64_t to_uint64() const;  // throws if it does not fit
    std::string to_string() const;

private:
    std::vector<std::uint32_t> limbs_;  // little-endian, base 1e9
};

struct AutReport {
    int n = 0;
    BigCount group_order;
    std::vector<Permutation> generators;
    std::vector<std::vector<int>> orbits;  // sorted cells, ordered by minimum
    bool is_asymmetric = false;
};

/// Full automorphism group via refinement-guided individualize-and-refine
/// backtracking; exact order by orbit counting along the first search path.
AutReport automorphism_group(const Graph& g);

bool is_asymmetric(const Graph& g);

/// Counts automorphisms by checking all n! permutations. Internal oracle,
/// n <= 9 intended.
std::uint64_t brute_force_automorphism_count(const Graph& g);

/// Isomorphism oracle by exhaustive bijection search, n <= 8 intended.
bool brute_force_isomorphic(const Graph& g, const Graph& h);

/// graph6 encoding of a canonically relabeled copy: equal strings iff
/// isomorphic. Best leaf = lexicographically least relabeled adjacency
/// encoding over the individualize-and-refine tree.
std::string canonical_form(const Graph& g);

/// The relabeling realizing canonical_form: apply_permutation(g, p) encodes
/// to canonical_form(g).
Permutation canonical_labeling(const Graph& g);

bool are_isomorphic(const Graph& g, const Graph& h);

}  // namespace asymgraph

#endif
