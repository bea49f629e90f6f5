#include "isotree/constructive.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>

namespace isotree {

const char* proof_case_name(ProofCase c) {
    switch (c) {
        case ProofCase::BaseSmall: return "BASE_SMALL";
        case ProofCase::Case1a: return "CASE_1A";
        case ProofCase::Case1b: return "CASE_1B";
        case ProofCase::Case2a: return "CASE_2A";
        case ProofCase::Case2b: return "CASE_2B";
    }
    return "?";
}

VertexSet small_components(const Tree& t, const VertexSet& j, int k) {
    VertexSet out(t.order());
    for (const auto& comp : remnant(t, j).components)
        if (comp.tree.order() < k)
            for (int v : comp.to_original) out.insert(v);
    return out;
}

namespace {

struct Work {
    Tree tree;
    std::vector<int> to_original;
};

void check(bool ok, const char* what) {
    if (!ok) throw InternalCheckError(std::string("constructive: ") + what);
}

// End of a longest path of the subgraph induced by the large edges, found by
// a double breadth-first sweep; ties to the smallest id, then the smaller of
// the two path endpoints.
int large_edge_path_end(const Tree& t, const std::vector<std::pair<int, int>>& large) {
    std::map<int, std::vector<int>> adj;
    for (auto [u, v] : large) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    for (auto& [v, nb] : adj) std::sort(nb.begin(), nb.end());
    auto farthest = [&](int s) {
        std::map<int, int> dist;
        std::queue<int> q;
        q.push(s);
        dist[s] = 0;
        int best = s;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : adj.at(v)) {
                if (dist.count(w)) continue;
                dist[w] = dist[v] + 1;
                if (dist[w] > dist[best] || (dist[w] == dist[best] && w < best)) best = w;
                q.push(w);
            }
        }
        return best;
    };
    (void)t;
    int start = adj.begin()->first;
    int a = farthest(start);
    int b = farthest(a);
    return std::min(a, b);
}

}  // namespace

ConstructiveResult independent_allk_set(const Tree& t, int k) {
    if (k < 2)
        throw PreconditionError("independent_allk_set requires k >= 2 (k = 1 is the exact_dp "
                                "independent domination route)");
    int n = t.order();
    if (n == k)
        throw TheoremException("the n/(k+1) bound excludes trees of order exactly k");

    ConstructiveResult result;
    result.set = VertexSet(n);
    result.bound = n / (k + 1);

    std::deque<Work> queue;
    queue.push_back({t, [&] {
                         std::vector<int> ids(n);
                         for (int i = 0; i < n; ++i) ids[i] = i;
                         return ids;
                     }()});
    bool top_level = true;

    while (!queue.empty()) {
        Work w = std::move(queue.front());
        queue.pop_front();
        const Tree& sub = w.tree;
        int m = sub.order();
        if (!top_level) check(m != k, "recursion produced a component of order exactly k");
        top_level = false;

        auto to_orig = [&](const VertexSet& local) {
            VertexSet s(n);
            for (int v : local.members()) s.insert(w.to_original[v]);
            return s;
        };

        if (m < k) {
            StepTrace st;
            st.proof_case = ProofCase::BaseSmall;
            st.chosen = VertexSet(n);
            st.t_j = m;
            result.trace.push_back(std::move(st));
            continue;
        }

        VertexSet j(m);
        ProofCase proof_case;
        int psi = -1;
        bool terminal = false;

        if (m <= 2 * k + 1) {
            j.insert(centroid(sub));
            proof_case = ProofCase::BaseSmall;
            terminal = true;
        } else {
            BranchReport branches = k_branches(sub, k);
            if (branches.branches.empty()) {
                auto large = large_edges(sub, k);
                if (large.empty()) {
                    j.insert(centroid(sub));
                    proof_case = ProofCase::Case1a;
                    terminal = true;
                } else {
                    int v = large_edge_path_end(sub, large);
                    int incident = 0;
                    for (auto [a, b] : large)
                        if (a == v || b == v) ++incident;
                    check(incident == 1,
                          "end of a longest large-edge path incident to more than one large edge");
                    j.insert(v);
                    proof_case = ProofCase::Case1b;
                }
            } else {
                // Count incident k-branches per core vertex.
                std::map<int, int> core_count;
                for (const auto& br : branches.branches) core_count[br.core_vertex]++;
                int lonely_core = -1;
                for (const auto& [core, count] : core_count)
                    if (count == 1) { lonely_core = core; break; }
                if (lonely_core >= 0) {
                    for (const auto& br : branches.branches)
                        if (br.core_vertex == lonely_core) { j.insert(br.branch_vertex); break; }
                    proof_case = ProofCase::Case2a;
                } else {
                    auto subtrees = core_subtree_bipartition(sub, k);
                    const CoreSubtree& ct = subtrees.front();  // contains the smallest core id
                    for (int v : ct.b_side.members()) j.insert(v);
                    for (const auto& br : branches.branches)
                        if (ct.r_side.contains(br.core_vertex)) j.insert(br.branch_vertex);
                    psi = -k * ct.b_side.size() + ct.r_side.size() + k * ct.b_branches -
                          ct.r_branches;
                    check(psi >= 0, "psi < 0 in Case 2b");
                    proof_case = ProofCase::Case2b;
                }
            }
        }

        check(is_independent(sub, j), "chosen J is not independent");

        if (terminal) {
            check(is_isolating(sub, j, IsolationSpec::all_k(k)).valid,
                  "terminal centroid set is not all-k-isolating");
            StepTrace st;
            st.proof_case = proof_case;
            st.chosen = to_orig(j);
            st.t_j = m;
            result.trace.push_back(std::move(st));
            for (int v : j.members()) result.set.insert(w.to_original[v]);
            continue;
        }

        VertexSet nbhd = closed_neighborhood(sub, j);
        VertexSet small(m);
        std::vector<std::vector<int>> recurse_on;
        for (auto& comp : components_of(sub, nbhd.complement())) {
            int order = static_cast<int>(comp.size());
            check(order != k, "remnant of J has a component of order exactly k");
            if (order < k) {
                for (int v : comp) small.insert(v);
            } else {
                recurse_on.push_back(std::move(comp));
            }
        }
        int t_j = nbhd.size() + small.size();
        check(t_j >= (k + 1) * j.size(), "t_J < (k+1)|J|");
        if (proof_case == ProofCase::Case1b)
            check(t_j > k + 1, "Case 1b requires |N[v] v S_k({v})| > k+1");

        StepTrace st;
        st.proof_case = proof_case;
        st.chosen = to_orig(j);
        st.t_j = t_j;
        st.psi = psi;
        result.trace.push_back(std::move(st));
        for (int v : j.members()) result.set.insert(w.to_original[v]);

        for (auto& comp : recurse_on) {
            auto [comp_tree, local_map] = induced_subtree(sub, comp);
            std::vector<int> composed(local_map.size());
            for (std::size_t i = 0; i < local_map.size(); ++i)
                composed[i] = w.to_original[local_map[i]];
            queue.push_back({std::move(comp_tree), std::move(composed)});
        }
    }

    check(is_independent(t, result.set), "final set is not independent");
    check(is_isolating(t, result.set, IsolationSpec::all_k(k)).valid,
          "final set is not all-k-isolating");
    check(result.set.size() <= result.bound, "final set exceeds floor(n/(k+1))");
    return result;
}

}  // namespace isotree
