#include "isotree/oracle.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <set>
#include <unordered_set>

namespace isotree {

namespace {

int oracle_cap(const IsolationSpec& spec) {
    return spec.kind == IsolationSpec::Kind::Pattern ? caps().oracle_pattern : caps().oracle_allk;
}

struct MinSearch {
    const Tree& t;
    const IsolationSpec& spec;
    bool independent;
    int n;
    VertexSet witness;
    std::unordered_set<std::uint64_t> seen;  // masks already explored at this depth budget

    MinSearch(const Tree& t, const IsolationSpec& spec, bool independent)
        : t(t), spec(spec), independent(independent), n(t.order()), witness(t.order()) {}

    std::uint64_t mask_of(const VertexSet& s) const {
        std::uint64_t m = 0;
        for (int v : s.members()) m |= std::uint64_t{1} << v;
        return m;
    }

    // First violating component (ascending smallest member), or empty.
    std::vector<int> first_violation(const VertexSet& s) const {
        for (const auto& comp : remnant(t, s).components)
            if (component_violates(spec, comp.tree)) return comp.to_original;
        return {};
    }

    bool search(VertexSet& s, int budget) {
        // Within one target size the budget is determined by |s|, so the mask
        // alone keys visited states.
        if (n <= 64 && !seen.insert(mask_of(s)).second) return false;
        auto violation = first_violation(s);
        if (violation.empty()) {
            witness = s;
            return true;
        }
        if (budget == 0) return false;
        // Only a vertex whose closed neighborhood meets the component can fix it.
        VertexSet cands = VertexSet::from(n, violation);
        for (int v : violation)
            for (int w : t.neighbors(v)) cands.insert(w);
        for (int w : cands.members()) {
            if (s.contains(w)) continue;
            if (independent) {
                bool adj = false;
                for (int u : t.neighbors(w))
                    if (s.contains(u)) { adj = true; break; }
                if (adj) continue;
            }
            s.insert(w);
            if (search(s, budget - 1)) return true;
            s.erase(w);
        }
        return false;
    }
};

}  // namespace

SolveResult min_isolating_set(const Tree& t, const IsolationSpec& spec, bool independent) {
    if (t.order() > oracle_cap(spec))
        throw CapExceeded("min_isolating_set: order " + std::to_string(t.order()) +
                          " above cap " + std::to_string(oracle_cap(spec)));
    MinSearch ms(t, spec, independent);
    for (int target = 0; target <= t.order(); ++target) {
        ms.seen.clear();
        VertexSet s(t.order());
        if (ms.search(s, target)) {
            SolveResult r;
            r.value = ms.witness.size();
            r.witness = ms.witness;
            return r;
        }
    }
    throw InternalCheckError("min_isolating_set: no isolating set found, but S = V always isolates");
}

namespace {

struct DisjointSearch {
    const Tree& t;
    const IsolationSpec& spec;
    int p;
    int n;
    std::vector<int> label;  // 0 = unused
    std::vector<VertexSet> found;

    DisjointSearch(const Tree& t, const IsolationSpec& spec, int p)
        : t(t), spec(spec), p(p), n(t.order()), label(t.order(), 0) {}

    // Class i together with all still-unassigned vertices; monotone upper bound.
    bool completable(int next_vertex) const {
        for (int i = 1; i <= p; ++i) {
            VertexSet s(n);
            for (int v = 0; v < n; ++v)
                if (label[v] == i || (v >= next_vertex)) s.insert(v);
            if (!is_isolating(t, s, spec).valid) return false;
        }
        return true;
    }

    bool run(int v, int max_used) {
        if (!completable(v)) return false;
        if (v == n) {
            found.clear();
            for (int i = 1; i <= p; ++i) {
                VertexSet s(n);
                for (int u = 0; u < n; ++u)
                    if (label[u] == i) s.insert(u);
                found.push_back(std::move(s));
            }
            return true;
        }
        for (int c = 0; c <= std::min(p, max_used + 1); ++c) {
            label[v] = c;
            if (run(v + 1, std::max(max_used, c))) return true;
        }
        label[v] = 0;
        return false;
    }
};

}  // namespace

DisjointFamilyResult max_disjoint_isolating_sets(const Tree& t, const IsolationSpec& spec,
                                                 int p_cap) {
    if (t.order() > caps().disjoint)
        throw CapExceeded("max_disjoint_isolating_sets: order " + std::to_string(t.order()) +
                          " above cap " + std::to_string(caps().disjoint));
    DisjointFamilyResult best;
    for (int p = 1; p <= p_cap; ++p) {
        DisjointSearch ds(t, spec, p);
        if (!ds.run(0, 0)) break;
        best.count = p;
        best.family = std::move(ds.found);
    }
    return best;
}

std::string rooted_canonical_form(const Tree& t, int root) {
    Rooted r = root_at(t, root);
    int n = t.order();
    std::vector<std::string> enc(n);
    for (auto it = r.bfs_order.rbegin(); it != r.bfs_order.rend(); ++it) {
        int v = *it;
        std::vector<std::string> parts;
        parts.reserve(r.children[v].size());
        for (int c : r.children[v]) parts.push_back(enc[c]);
        std::sort(parts.begin(), parts.end());
        std::string s = "(";
        for (auto& p : parts) s += p;
        s += ")";
        enc[v] = std::move(s);
    }
    return enc[root];
}

std::string canonical_form(const Tree& t) {
    std::string best;
    for (int c : centroid_candidates(t)) {
        std::string s = rooted_canonical_form(t, c);
        if (best.empty() || s < best) best = std::move(s);
    }
    return best;
}

std::vector<Tree> enumerate_trees(int n) {
    if (n < 1) throw PreconditionError("enumerate_trees: n >= 1 required");
    if (n > caps().enumerate_n)
        throw CapExceeded("enumerate_trees: n " + std::to_string(n) + " above cap " +
                          std::to_string(caps().enumerate_n));
    std::vector<Tree> current = {Tree()};
    for (int m = 2; m <= n; ++m) {
        std::vector<Tree> next;
        std::set<std::string> seen;
        for (const Tree& t : current) {
            auto base_edges = t.edges();
            for (int v = 0; v < m - 1; ++v) {
                auto edges = base_edges;
                edges.emplace_back(v, m - 1);
                Tree grown = Tree::from_edges(m, edges);
                if (seen.insert(canonical_form(grown)).second) next.push_back(std::move(grown));
            }
        }
        current = std::move(next);
    }
    return current;
}

Tree tree_from_pruefer(const std::vector<int>& seq) {
    int n = static_cast<int>(seq.size()) + 2;
    if (n == 2) return Tree::from_edges(2, {{0, 1}});
    std::vector<int> deg(n, 1);
    for (int v : seq) {
        if (v < 0 || v >= n) throw PreconditionError("pruefer entry out of range");
        ++deg[v];
    }
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (deg[v] == 1) leaves.insert(v);
    std::vector<std::pair<int, int>> edges;
    for (int v : seq) {
        int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, v);
        if (--deg[v] == 1) leaves.insert(v);
    }
    int a = *leaves.begin();
    int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Tree::from_edges(n, edges);
}

Tree random_tree(int n, std::uint64_t seed) {
    if (n < 1) throw PreconditionError("random_tree: n >= 1 required");
    if (n == 1) return Tree();
    if (n == 2) return Tree::from_edges(2, {{0, 1}});
    std::mt19937_64 rng(seed);
    std::vector<int> seq(n - 2);
    for (auto& v : seq) v = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
    return tree_from_pruefer(seq);
}

}  // namespace isotree
