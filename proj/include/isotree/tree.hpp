#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "isotree/errors.hpp"

namespace isotree {

/// Subset of vertices 0..universe-1 with bitset semantics.
class VertexSet {
public:
    VertexSet() = default;
    explicit VertexSet(int universe) : universe_(universe), bits_((universe + 63) / 64, 0) {}

    static VertexSet of(int universe, std::initializer_list<int> vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }
    static VertexSet from(int universe, const std::vector<int>& vs) {
        VertexSet s(universe);
        for (int v : vs) s.insert(v);
        return s;
    }
    static VertexSet full(int universe) {
        VertexSet s(universe);
        for (int v = 0; v < universe; ++v) s.insert(v);
        return s;
    }

    int universe() const { return universe_; }

    bool contains(int v) const {
        if (v < 0 || v >= universe_) return false;
        return (bits_[v >> 6] >> (v & 63)) & 1u;
    }
    void insert(int v) {
        check(v);
        bits_[v >> 6] |= std::uint64_t{1} << (v & 63);
    }
    void erase(int v) {
        check(v);
        bits_[v >> 6] &= ~(std::uint64_t{1} << (v & 63));
    }

    int size() const {
        int c = 0;
        for (auto w : bits_) c += __builtin_popcountll(w);
        return c;
    }
    bool empty() const {
        for (auto w : bits_) if (w) return false;
        return true;
    }

    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(size());
        for (int v = 0; v < universe_; ++v)
            if (contains(v)) out.push_back(v);
        return out;
    }

    VertexSet& operator|=(const VertexSet& o) {
        align(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] |= o.bits_[i];
        return *this;
    }
    VertexSet& operator&=(const VertexSet& o) {
        align(o);
        for (std::size_t i = 0; i < bits_.size(); ++i) bits_[i] &= o.bits_[i];
        return *this;
    }
    VertexSet operator|(const VertexSet& o) const { VertexSet r = *this; r |= o; return r; }
    VertexSet operator&(const VertexSet& o) const { VertexSet r = *this; r &= o; return r; }
    /// Set difference.
    VertexSet minus(const VertexSet& o) const {
        align(o);
        VertexSet r = *this;
        for (std::size_t i = 0; i < bits_.size(); ++i) r.bits_[i] &= ~o.bits_[i];
        return r;
    }
    VertexSet complement() const {
        VertexSet r(universe_);
        for (int v = 0; v < universe_; ++v)
            if (!contains(v)) r.insert(v);
        return r;
    }

    bool intersects(const VertexSet& o) const {
        align(o);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & o.bits_[i]) return true;
        return false;
    }
    bool is_subset_of(const VertexSet& o) const {
        align(o);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (bits_[i] & ~o.bits_[i]) return false;
        return true;
    }

    bool operator==(const VertexSet& o) const { return universe_ == o.universe_ && bits_ == o.bits_; }
    bool operator!=(const VertexSet& o) const { return !(*this == o); }

private:
    void check(int v) const {
        if (v < 0 || v >= universe_)
            throw PreconditionError("vertex " + std::to_string(v) + " outside universe of size " +
                                    std::to_string(universe_));
    }
    void align(const VertexSet& o) const {
        if (universe_ != o.universe_)
            throw PreconditionError("vertex sets over different universes");
    }

    int universe_ = 0;
    std::vector<std::uint64_t> bits_;
};

/// Connected acyclic simple graph over vertex ids 0..n-1 with sorted
/// adjacency lists. Immutable after construction; construction validates all
/// invariants.
class Tree {
public:
    Tree() : n_(1), adj_(1) {}  // K_1

    static Tree from_edges(int n, const std::vector<std::pair<int, int>>& edges);
    static Tree path(int n);
    static Tree star(int leaves);  // center is vertex 0

    int order() const { return n_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    int degree(int v) const { return static_cast<int>(adj_[v].size()); }
    int max_degree() const;
    bool has_edge(int u, int v) const;
    /// Edges as (u,v) with u<v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    bool is_path() const { return max_degree() <= 2; }
    bool is_star() const;  // some vertex adjacent to all others (n >= 3)

    bool operator==(const Tree& o) const { return n_ == o.n_ && adj_ == o.adj_; }

private:
    int n_;
    std::vector<std::vector<int>> adj_;
};

struct ForestComponent {
    Tree tree;
    std::vector<int> to_original;  // local id -> original id, ascending
};

/// Components of an induced subgraph, with id-maps back to the host tree.
struct Forest {
    std::vector<ForestComponent> components;
};

/// The two sides of T - xy.
struct EdgeSplit {
    int x = 0;
    int y = 0;
    VertexSet side_x;
    VertexSet side_y;
};

struct KBranch {
    int branch_vertex = 0;  // end of the cut edge inside the order-k component
    int core_vertex = 0;    // the other end
    VertexSet component;
};

struct BranchReport {
    std::vector<KBranch> branches;
    VertexSet core_vertices;
};

/// One maximal subtree of core vertices with its bipartition, labelled so
/// that b_branches >= r_branches.
struct CoreSubtree {
    VertexSet core;
    VertexSet b_side;
    VertexSet r_side;  // empty when the subtree is a single vertex
    int b_branches = 0;
    int r_branches = 0;
};

/// Rooted view of a tree: BFS order from the root, parents, subtree sizes.
struct Rooted {
    int root = 0;
    std::vector<int> parent;        // parent[root] == -1
    std::vector<int> bfs_order;     // root first
    std::vector<std::vector<int>> children;
    std::vector<int> subtree_size;
};

Rooted root_at(const Tree& t, int root);

// -- parsing / serialization ------------------------------------------------

/// One "u v" pair per line, 0-indexed; '#' starts a comment; a single line
/// "1" denotes K_1.
Tree parse_edge_list(const std::string& text);
std::string serialize_edge_list(const Tree& t);
/// Graphviz output; when classes is given, vertices are filled by class.
std::string dot_export(const Tree& t, const std::vector<int>* classes = nullptr);

// -- structural primitives --------------------------------------------------

VertexSet closed_neighborhood(const Tree& t, const VertexSet& s);
/// Components of T - N[S] with original-id maps.
Forest remnant(const Tree& t, const VertexSet& s);
/// Vertex minimizing the maximum component order of T - v; ties to lowest id.
int centroid(const Tree& t);
/// All vertices realizing that minimum (one or two, ascending).
std::vector<int> centroid_candidates(const Tree& t);
/// Maximum component order of T - v.
int max_component_after_removal(const Tree& t, int v);

EdgeSplit edge_split(const Tree& t, int x, int y);
BranchReport k_branches(const Tree& t, int k);
std::vector<std::pair<int, int>> large_edges(const Tree& t, int k);
/// Requires at least one k-branch.
std::vector<CoreSubtree> core_subtree_bipartition(const Tree& t, int k);

/// Components of the subgraph induced on `keep`, ordered by smallest member;
/// each component's vertex list ascending.
std::vector<std::vector<int>> components_of(const Tree& t, const VertexSet& keep);
/// Extract a connected vertex set as a tree; local ids follow the ascending
/// order of `vertices`.
std::pair<Tree, std::vector<int>> induced_subtree(const Tree& t, const std::vector<int>& vertices);

/// Endpoints u,v of a longest path plus its vertex count; deterministic.
struct DiameterInfo {
    int endpoint_a = 0;
    int endpoint_b = 0;
    int vertex_count = 1;
};
DiameterInfo diameter_path(const Tree& t);

}  // namespace isotree
