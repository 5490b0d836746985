#include "asymgraph/automorphism.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace asymgraph {

// ---------------------------------------------------------------- Permutation

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
    std::vector<char> seen(image_.size(), 0);
    for (int v : image_) {
        if (v < 0 || v >= static_cast<int>(image_.size()) || seen[v])
            throw std::invalid_argument("Permutation: image is not a bijection");
        seen[v] = 1;
    }
}

Permutation Permutation::identity(int n) {
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
    std::vector<int> inv(image_.size());
    for (int v = 0; v < size(); ++v) inv[image_[v]] = v;
    return Permutation(std::move(inv));
}

Permutation Permutation::compose(const Permutation& b) const {
    if (size() != b.size()) throw std::invalid_argument("compose: size mismatch");
    std::vector<int> img(image_.size());
    for (int v = 0; v < size(); ++v) img[v] = image_[b(v)];
    return Permutation(std::move(img));
}

bool Permutation::is_identity() const {
    for (int v = 0; v < size(); ++v)
        if (image_[v] != v) return false;
    return true;
}

bool Permutation::is_automorphism(const Graph& g) const {
    if (size() != g.vertex_count()) return false;
    for (auto [u, v] : g.edges())
        if (!g.has_edge(image_[u], image_[v])) return false;
    return true;  // bijection preserving all edges preserves non-edges too
}

std::string Permutation::cycle_notation() const {
    std::string out;
    std::vector<char> seen(image_.size(), 0);
    for (int v = 0; v < size(); ++v) {
        if (seen[v] || image_[v] == v) continue;
        out += "(";
        int w = v;
        bool first = true;
        while (!seen[w]) {
            seen[w] = 1;
            if (!first) out += " ";
            out += std::to_string(w + 1);
            first = false;
            w = image_[w];
        }
        out += ")";
    }
    return out.empty() ? "()" : out;
}

Graph apply_permutation(const Graph& g, const Permutation& p) {
    if (p.size() != g.vertex_count())
        throw std::invalid_argument("apply_permutation: size mismatch");
    std::vector<std::pair<int, int>> edges;
    edges.reserve(g.edge_count());
    for (auto [u, v] : g.edges()) edges.emplace_back(p(u), p(v));
    return Graph(g.vertex_count(), edges);
}

// ------------------------------------------------------------------- Coloring

Coloring::Coloring(std::vector<std::vector<int>> cells, int n)
    : n_(n), cells_(std::move(cells)), cell_of_(n, -1) {
    for (int ci = 0; ci < static_cast<int>(cells_.size()); ++ci) {
        if (cells_[ci].empty()) throw std::invalid_argument("Coloring: empty cell");
        for (int v : cells_[ci]) {
            if (v < 0 || v >= n || cell_of_[v] != -1)
                throw std::invalid_argument("Coloring: cells must partition 0..n-1");
            cell_of_[v] = ci;
        }
    }
    for (int v = 0; v < n; ++v)
        if (cell_of_[v] == -1) throw std::invalid_argument("Coloring: uncovered vertex");
}

Coloring Coloring::unit(int n) {
    if (n == 0) return Coloring({}, 0);
    std::vector<int> all(n);
    std::iota(all.begin(), all.end(), 0);
    return Coloring({all}, n);
}

bool Coloring::is_discrete() const {
    return static_cast<int>(cells_.size()) == n_;
}

bool Coloring::is_equitable(const Graph& g) const {
    for (const auto& cell : cells_) {
        for (const auto& other : cells_) {
            int expected = -1;
            for (int v : cell) {
                int cnt = 0;
                for (int w : g.neighbors(v))
                    if (cell_of_[w] == cell_of_[other[0]]) ++cnt;
                if (expected < 0) expected = cnt;
                else if (cnt != expected) return false;
            }
        }
    }
    return true;
}

bool Coloring::refines(const Coloring& coarser) const {
    if (n_ != coarser.n_) return false;
    for (const auto& cell : cells_) {
        int target = coarser.cell_of(cell[0]);
        for (int v : cell)
            if (coarser.cell_of(v) != target) return false;
    }
    return true;
}

// ------------------------------------------------------------------ refinement

namespace {

// Splits every cell by neighbor counts into the splitters until equitable.
// Fragments replace their parent in place, ordered by count descending;
// within a fragment the parent's vertex order is kept (ascending throughout
// the solver). Deterministic and label-invariant.
void refine_cells(const Graph& g, std::vector<std::vector<int>>& cells,
                  std::deque<std::vector<int>> work) {
    const int n = g.vertex_count();
    std::vector<char> mark(n, 0);
    std::vector<int> cnt(n, 0);
    while (!work.empty()) {
        if (static_cast<int>(cells.size()) == n) break;  // discrete
        std::vector<int> splitter = std::move(work.front());
        work.pop_front();
        for (int v : splitter) mark[v] = 1;

        for (size_t ci = 0; ci < cells.size(); ++ci) {
            if (cells[ci].size() <= 1) continue;
            int lo = INT32_MAX, hi = INT32_MIN;
            for (int v : cells[ci]) {
                int c = 0;
                for (int w : g.neighbors(v)) c += mark[w];
                cnt[v] = c;
                lo = std::min(lo, c);
                hi = std::max(hi, c);
            }
            if (lo == hi) continue;

            std::vector<std::vector<int>> frags;
            for (int c = hi; c >= lo; --c) {
                std::vector<int> frag;
                for (int v : cells[ci])
                    if (cnt[v] == c) frag.push_back(v);
                if (!frag.empty()) frags.push_back(std::move(frag));
            }
            for (const auto& f : frags) work.push_back(f);
            cells[ci] = std::move(frags[0]);
            cells.insert(cells.begin() + ci + 1,
                         std::make_move_iterator(frags.begin() + 1),
                         std::make_move_iterator(frags.end()));
            ci += frags.size() - 1;  // fragments are uniform w.r.t. this splitter
        }
        for (int v : splitter) mark[v] = 0;
    }
}

}  // namespace

Coloring refine(const Graph& g, const Coloring& c) {
    if (c.vertex_count() != g.vertex_count())
        throw std::invalid_argument("refine: coloring size mismatch");
    auto cells = c.cells();
    refine_cells(g, cells, std::deque<std::vector<int>>(cells.begin(), cells.end()));
    return Coloring(std::move(cells), g.vertex_count());
}

// ------------------------------------------------------------------- BigCount

BigCount::BigCount(std::uint64_t v) {
    if (v == 0) {
        limbs_ = {0};
        return;
    }
    while (v > 0) {
        limbs_.push_back(static_cast<std::uint32_t>(v % 1000000000ull));
        v /= 1000000000ull;
    }
}

BigCount& BigCount::operator*=(std::uint64_t f) {
    if (f >= 1000000000ull)
        throw std::invalid_argument("BigCount: factor must be below 1e9");
    std::uint64_t carry = 0;
    for (auto& limb : limbs_) {
        std::uint64_t cur = static_cast<std::uint64_t>(limb) * f + carry;
        limb = static_cast<std::uint32_t>(cur % 1000000000ull);
        carry = cur / 1000000000ull;
    }
    while (carry > 0) {
        limbs_.push_back(static_cast<std::uint32_t>(carry % 1000000000ull));
        carry /= 1000000000ull;
    }
    if (limbs_.size() > 1 && limbs_.back() == 0) {
        // normalize: only possible when multiplying by 0
        while (limbs_.size() > 1 && limbs_.back() == 0) limbs_.pop_back();
    }
    return *this;
}

bool BigCount::fits_uint64() const {
    if (limbs_.size() > 3) return false;
    unsigned __int128 acc = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it)
        acc = acc * 1000000000u + *it;
    return acc <= static_cast<unsigned __int128>(UINT64_MAX);
}

std::uint64_t BigCount::to_uint64() const {
    if (!fits_uint64()) throw std::overflow_error("BigCount: does not fit uint64");
    std::uint64_t acc = 0;
    for (auto it = limbs_.rbegin(); it != limbs_.rend(); ++it)
        acc = acc * 1000000000ull + *it;
    return acc;
}

std::string BigCount::to_string() const {
    std::string out = std::to_string(limbs_.back());
    for (auto it = limbs_.rbegin() + 1; it != limbs_.rend(); ++it) {
        std::string part = std::to_string(*it);
        out += std::string(9 - part.size(), '0') + part;
    }
    return out;
}

// ------------------------------------------------- individualize-and-refine

namespace {

using Cells = std::vector<std::vector<int>>;

std::vector<int> shape_of(const Cells& cells) {
    std::vector<int> s;
    s.reserve(cells.size());
    for (const auto& c : cells) s.push_back(static_cast<int>(c.size()));
    return s;
}

// First smallest non-singleton cell; -1 if discrete.
int target_cell(const Cells& cells) {
    int best = -1;
    size_t best_size = SIZE_MAX;
    for (int ci = 0; ci < static_cast<int>(cells.size()); ++ci) {
        size_t s = cells[ci].size();
        if (s > 1 && s < best_size) {
            best_size = s;
            best = ci;
        }
    }
    return best;
}

// Search engine shared by the group computation and canonical labeling.
class IRSolver {
public:
    explicit IRSolver(const Graph& g) : g_(g), n_(g.vertex_count()) {}

    AutReport automorphism_report() {
        run_aut_search();
        AutReport rep;
        rep.n = n_;
        rep.group_order = BigCount(1);
        for (std::uint64_t c : level_counts_) rep.group_order *= c;
        rep.generators = gens_;
        rep.orbits = orbits_from_generators();
        rep.is_asymmetric = rep.group_order == 1;
        return rep;
    }

    // (graph6 payload of the best leaf, its labeling lab[pos] = vertex).
    // One combined traversal: automorphisms discovered from leaves matching
    // the leftmost leaf prune later branches and trigger backjumps.
    std::pair<std::string, std::vector<int>> canonical_leaf() {
        best_cert_.clear();
        best_lab_.clear();
        canon_shapes_.clear();
        canon_first_lab_.clear();
        canon_first_cert_.clear();
        if (n_ == 0) return {"", {}};
        canon_pool_ = gens_;  // whatever a prior group computation left behind
        Cells cells = {ascending(n_)};
        refine_cells(g_, cells, {cells[0]});
        prefix_.clear();
        canon_node(cells, 0, true, true, -1);
        return {best_cert_, best_lab_};
    }

private:
    static std::vector<int> ascending(int n) {
        std::vector<int> v(n);
        std::iota(v.begin(), v.end(), 0);
        return v;
    }

    std::vector<int> leaf_labeling(const Cells& cells) const {
        std::vector<int> lab;
        lab.reserve(n_);
        for (const auto& c : cells) lab.push_back(c[0]);
        return lab;
    }

    // graph6 payload bits of the relabeled adjacency (upper triangle,
    // column-major); lexicographic string order equals bit order.
    std::string cert_of(const std::vector<int>& lab) const {
        std::string out;
        int bit = 5;
        unsigned char cur = 0;
        for (int j = 1; j < n_; ++j) {
            for (int i = 0; i < j; ++i) {
                if (g_.has_edge(lab[i], lab[j])) cur |= static_cast<unsigned char>(1u << bit);
                if (--bit < 0) {
                    out.push_back(static_cast<char>(cur + 63));
                    cur = 0;
                    bit = 5;
                }
            }
        }
        if (n_ >= 2 && bit != 5) out.push_back(static_cast<char>(cur + 63));
        return out;
    }

    static Cells individualize(const Cells& cells, int ci, int v) {
        Cells out = cells;
        std::vector<int> rest;
        rest.reserve(cells[ci].size() - 1);
        for (int w : cells[ci])
            if (w != v) rest.push_back(w);
        out[ci] = {v};
        out.insert(out.begin() + ci + 1, std::move(rest));
        return out;
    }

    void refine_after_split(Cells& cells, int ci) const {
        std::deque<std::vector<int>> seed;
        seed.push_back(cells[ci]);
        seed.push_back(cells[ci + 1]);
        refine_cells(g_, cells, std::move(seed));
    }

    // Orbit of v under the pool generators that fix `prefix_` pointwise.
    std::vector<int> orbit_of(int v, const std::vector<Permutation>& pool) const {
        std::vector<const Permutation*> useful;
        for (const auto& p : pool) {
            bool fixes = true;
            for (int b : prefix_)
                if (p(b) != b) {
                    fixes = false;
                    break;
                }
            if (fixes) useful.push_back(&p);
        }
        std::vector<int> orbit{v};
        std::vector<char> in_orbit(n_, 0);
        in_orbit[v] = 1;
        for (size_t i = 0; i < orbit.size(); ++i)
            for (const auto* p : useful) {
                int w = (*p)(orbit[i]);
                if (!in_orbit[w]) {
                    in_orbit[w] = 1;
                    orbit.push_back(w);
                }
            }
        return orbit;
    }

    bool covered(int v, const std::vector<char>& explored,
                 const std::vector<Permutation>& pool) const {
        for (int w : orbit_of(v, pool))
            if (explored[w]) return true;
        return false;
    }

    void add_generator(const std::vector<int>& leaf_lab) {
        std::vector<int> img(n_);
        for (int pos = 0; pos < n_; ++pos) img[leaf_lab[pos]] = first_lab_[pos];
        Permutation p(std::move(img));
        if (p.is_identity()) return;
        for (const auto& q : gens_)
            if (q == p) return;
        gens_.push_back(std::move(p));
    }

    void run_aut_search() {
        if (aut_done_) return;
        aut_done_ = true;
        if (n_ == 0) return;
        Cells cells = {ascending(n_)};
        refine_cells(g_, cells, {cells[0]});
        prefix_.clear();
        first_path(cells, 0);
    }

    // Leftmost path defines the base and the first leaf; sibling subtrees are
    // searched for one automorphism each. The orbit of the base vertex under
    // prefix-fixing generators, taken when the cell is exhausted, is the
    // orbit-stabilizer factor for this level.
    void first_path(const Cells& cells, int depth) {
        first_shapes_.push_back(shape_of(cells));
        if (static_cast<int>(cells.size()) == n_) {
            first_lab_ = leaf_labeling(cells);
            first_cert_ = cert_of(first_lab_);
            return;
        }
        int ci = target_cell(cells);
        const std::vector<int> cell = cells[ci];
        int base = cell[0];

        Cells child = individualize(cells, ci, base);
        refine_after_split(child, ci);
        prefix_.push_back(base);
        first_path(child, depth + 1);
        prefix_.pop_back();

        for (size_t k = 1; k < cell.size(); ++k) {
            int v = cell[k];
            {
                auto orbit = orbit_of(base, gens_);
                if (std::find(orbit.begin(), orbit.end(), v) != orbit.end()) continue;
            }
            Cells sib = individualize(cells, ci, v);
            refine_after_split(sib, ci);
            prefix_.push_back(v);
            subtree_search(sib, depth + 1);
            prefix_.pop_back();
        }
        level_counts_.push_back(orbit_of(base, gens_).size());
    }

    // Exhaustive search of one sibling subtree; stops at the first leaf whose
    // refinement trace and certificate both match the first leaf. Nodes whose
    // shape leaves the first path's trace cannot host such a leaf.
    bool subtree_search(const Cells& cells, int depth) {
        if (depth >= static_cast<int>(first_shapes_.size()) ||
            shape_of(cells) != first_shapes_[depth])
            return false;
        if (static_cast<int>(cells.size()) == n_) {
            auto lab = leaf_labeling(cells);
            if (cert_of(lab) == first_cert_) {
                add_generator(lab);
                return true;
            }
            return false;
        }
        int ci = target_cell(cells);
        const std::vector<int> cell = cells[ci];
        std::vector<char> explored(n_, 0);
        for (int v : cell) {
            if (covered(v, explored, gens_)) continue;
            Cells child = individualize(cells, ci, v);
            refine_after_split(child, ci);
            prefix_.push_back(v);
            bool found = subtree_search(child, depth + 1);
            prefix_.pop_back();
            if (found) return true;
            explored[v] = 1;
        }
        return false;
    }

    static constexpr int kNoJump = INT32_MAX;

    // Canonical search with first-leaf automorphism discovery. `on_first`
    // marks the leftmost chain; `trace_ok` tracks whether the path's shape
    // trace still matches it (only such leaves can certify an automorphism);
    // `div_depth` is the node where this path left the leftmost chain. A leaf
    // matching the first leaf yields a generator whose image subtree is the
    // fully explored first branch of the divergence node, so the search jumps
    // back there.
    int canon_node(const Cells& cells, int depth, bool on_first, bool trace_ok, int div_depth) {
        if (on_first) {
            canon_shapes_.push_back(shape_of(cells));
        } else if (trace_ok) {
            trace_ok = depth < static_cast<int>(canon_shapes_.size()) &&
                       shape_of(cells) == canon_shapes_[depth];
        }
        if (static_cast<int>(cells.size()) == n_) {
            auto lab = leaf_labeling(cells);
            auto cert = cert_of(lab);
            if (best_lab_.empty() || cert < best_cert_) {
                best_cert_ = cert;
                best_lab_ = lab;
            }
            if (on_first) {
                canon_first_lab_ = std::move(lab);
                canon_first_cert_ = std::move(cert);
            } else if (trace_ok && cert == canon_first_cert_) {
                std::vector<int> img(n_);
                for (int pos = 0; pos < n_; ++pos) img[lab[pos]] = canon_first_lab_[pos];
                Permutation p(std::move(img));
                if (!p.is_identity()) {
                    canon_pool_.push_back(std::move(p));
                    return div_depth;
                }
            }
            return kNoJump;
        }
        int ci = target_cell(cells);
        const std::vector<int> cell = cells[ci];
        std::vector<char> explored(n_, 0);
        bool first_child = true;
        for (int v : cell) {
            if (covered(v, explored, canon_pool_)) continue;
            Cells child = individualize(cells, ci, v);
            refine_after_split(child, ci);
            bool child_on_first = on_first && first_child;
            int child_div = child_on_first ? -1 : (on_first ? depth : div_depth);
            prefix_.push_back(v);
            int jump = canon_node(child, depth + 1, child_on_first, trace_ok, child_div);
            prefix_.pop_back();
            explored[v] = 1;
            first_child = false;
            if (jump < depth) return jump;  // pass the backjump upward
        }
        return kNoJump;
    }

    std::vector<std::vector<int>> orbits_from_generators() const {
        std::vector<int> parent(n_);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (const auto& p : gens_)
            for (int v = 0; v < n_; ++v) {
                int a = find(v), b = find(p(v));
                if (a != b) parent[a] = b;
            }
        std::vector<std::vector<int>> groups(n_);
        for (int v = 0; v < n_; ++v) groups[find(v)].push_back(v);
        std::vector<std::vector<int>> orbits;
        for (auto& gvec : groups)
            if (!gvec.empty()) orbits.push_back(std::move(gvec));
        return orbits;
    }

    const Graph& g_;
    int n_;
    bool aut_done_ = false;

    std::vector<int> prefix_;
    std::vector<Permutation> gens_;
    std::vector<std::uint64_t> level_counts_;
    std::vector<std::vector<int>> first_shapes_;
    std::vector<int> first_lab_;
    std::string first_cert_;

    std::vector<Permutation> canon_pool_;
    std::vector<std::vector<int>> canon_shapes_;
    std::vector<int> canon_first_lab_;
    std::string canon_first_cert_;
    std::string best_cert_;
    std::vector<int> best_lab_;
};

}  // namespace

AutReport automorphism_group(const Graph& g) {
    IRSolver solver(g);
    return solver.automorphism_report();
}

bool is_asymmetric(const Graph& g) {
    return automorphism_group(g).group_order == 1;
}

std::uint64_t brute_force_automorphism_count(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return 1;
    std::vector<char> adj(static_cast<size_t>(n) * n, 0);
    for (auto [u, v] : g.edges()) adj[u * n + v] = adj[v * n + u] = 1;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t count = 0;
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n; ++v)
                if (adj[u * n + v] != adj[perm[u] * n + perm[v]]) {
                    ok = false;
                    break;
                }
        if (ok) ++count;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

bool brute_force_isomorphic(const Graph& g, const Graph& h) {
    int n = g.vertex_count();
    if (n != h.vertex_count() || g.edge_count() != h.edge_count()) return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (auto [u, v] : g.edges())
            if (!h.has_edge(perm[u], perm[v])) {
                ok = false;
                break;
            }
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return n == 0;  // two empty graphs
}

std::string canonical_form(const Graph& g) {
    IRSolver solver(g);
    auto [payload, lab] = solver.canonical_leaf();
    (void)lab;
    int n = g.vertex_count();
    std::string out;
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else {
        out.push_back(126);
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + 63));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + 63));
        out.push_back(static_cast<char>((n & 0x3f) + 63));
    }
    return out + payload;
}

Permutation canonical_labeling(const Graph& g) {
    IRSolver solver(g);
    auto [payload, lab] = solver.canonical_leaf();
    (void)payload;
    if (g.vertex_count() == 0) return Permutation::identity(0);
    std::vector<int> img(g.vertex_count());
    for (int pos = 0; pos < g.vertex_count(); ++pos) img[lab[pos]] = pos;
    return Permutation(std::move(img));
}

bool are_isomorphic(const Graph& g, const Graph& h) {
    if (g.vertex_count() != h.vertex_count() || g.edge_count() != h.edge_count())
        return false;
    if (g.degree_sequence() != h.degree_sequence()) return false;
    // per-vertex triangle counts as a cheap second filter
    auto tri_counts = [](const Graph& x) {
        std::vector<int> t(x.vertex_count(), 0);
        for (auto verts : triangles(x))
            for (int v : verts) ++t[v];
        std::sort(t.begin(), t.end());
        return t;
    };
    if (tri_counts(g) != tri_counts(h)) return false;
    return canonical_form(g) == canonical_form(h);
}

}  // namespace asymgraph
