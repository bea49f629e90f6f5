#include "isotree/families.hpp"

#include <algorithm>
#include <functional>

namespace isotree {

Tree gen_extremal(const ExtremalRecipe& recipe) {
    int m = recipe.base.order();
    int k = recipe.k;
    if (k < 1) throw PreconditionError("gen_extremal: k >= 1 required");
    if (static_cast<int>(recipe.attachments.size()) != m)
        throw PreconditionError("gen_extremal: need exactly one attachment per base vertex");
    for (const auto& att : recipe.attachments) {
        if (att.pattern.order() != k)
            throw PreconditionError("gen_extremal: attachment of wrong order (expected " +
                                    std::to_string(k) + ", got " +
                                    std::to_string(att.pattern.order()) + ")");
        if (att.attach_vertex < 0 || att.attach_vertex >= k)
            throw PreconditionError("gen_extremal: attach vertex outside the attachment");
    }
    std::vector<std::pair<int, int>> edges = recipe.base.edges();
    int offset = m;
    for (int v = 0; v < m; ++v) {
        const auto& att = recipe.attachments[v];
        for (auto [a, b] : att.pattern.edges()) edges.emplace_back(offset + a, offset + b);
        edges.emplace_back(v, offset + att.attach_vertex);
        offset += k;
    }
    return Tree::from_edges(m * (k + 1), edges);
}

namespace {

// Rooted decomposition roles, computed post-order:
//   b_done  — vertex is base and its subtree is fully decomposed
//   b_wait  — vertex is base but its own attachment must come from above
//   up_ok   — the entire subtree is one piece of an attachment owned above
//   a_down  — vertex is inside an attachment whose owner is below; the set of
//             feasible piece sizes within the subtree
struct TkSolver {
    const Tree& t;
    int k;
    Rooted rooted;
    std::vector<char> b_done, b_wait, up_ok;
    std::vector<std::vector<char>> a_down;  // index by size 0..k

    VertexSet base;
    std::vector<TkAttachment> attachments;

    TkSolver(const Tree& t, int k) : t(t), k(k), rooted(root_at(t, 0)), base(t.order()) {}

    bool solve() {
        int n = t.order();
        b_done.assign(n, 0);
        b_wait.assign(n, 0);
        up_ok.assign(n, 0);
        a_down.assign(n, std::vector<char>(k + 1, 0));
        for (auto it = rooted.bfs_order.rbegin(); it != rooted.bfs_order.rend(); ++it)
            compute(*it);
        int root = rooted.root;
        if (b_done[root]) {
            assign_b_done(root);
            return true;
        }
        if (a_down[root][k]) {
            VertexSet piece(n);
            reconstruct_a_down(root, k, piece);
            return true;
        }
        return false;
    }

    void compute(int v) {
        const auto& kids = rooted.children[v];
        bool all_up = true, all_bdone = true;
        for (int c : kids) {
            all_up = all_up && up_ok[c];
            all_bdone = all_bdone && b_done[c];
        }
        up_ok[v] = all_up && rooted.subtree_size[v] <= k;
        b_wait[v] = all_bdone;
        // b_done: exactly one child is a complete attachment, the rest are done base.
        for (int c : kids) {
            if (!(up_ok[c] && rooted.subtree_size[c] == k)) continue;
            bool rest = true;
            for (int d : kids)
                if (d != c && !b_done[d]) { rest = false; break; }
            if (rest) { b_done[v] = 1; break; }
        }
        // a_down: pick a carrier child (owner side), all other children join the piece.
        for (int carrier : kids) {
            bool others_up = true;
            int others_size = 0;
            for (int d : kids) {
                if (d == carrier) continue;
                if (!up_ok[d]) { others_up = false; break; }
                others_size += rooted.subtree_size[d];
            }
            if (!others_up) continue;
            int base_size = 1 + others_size;
            if (b_wait[carrier] && base_size <= k) a_down[v][base_size] = 1;
            for (int tsz = 1; tsz <= k - 1; ++tsz)
                if (a_down[carrier][tsz] && base_size + tsz <= k) a_down[v][base_size + tsz] = 1;
        }
    }

    void collect_subtree(int v, VertexSet& into) {
        into.insert(v);
        for (int c : rooted.children[v]) collect_subtree(c, into);
    }

    void assign_b_done(int v) {
        base.insert(v);
        const auto& kids = rooted.children[v];
        for (int c : kids) {
            if (!(up_ok[c] && rooted.subtree_size[c] == k)) continue;
            bool rest = true;
            for (int d : kids)
                if (d != c && !b_done[d]) { rest = false; break; }
            if (!rest) continue;
            TkAttachment att;
            att.owner = v;
            att.attach_vertex = c;
            att.vertices = VertexSet(t.order());
            collect_subtree(c, att.vertices);
            attachments.push_back(std::move(att));
            for (int d : kids)
                if (d != c) assign_b_done(d);
            return;
        }
        throw InternalCheckError("Tk reconstruct: b_done has no valid attachment child");
    }

    void assign_b_wait(int v) {
        base.insert(v);
        for (int c : rooted.children[v]) assign_b_done(c);
    }

    // Accumulate the attachment piece of size `s` hanging above its owner.
    void reconstruct_a_down(int v, int s, VertexSet& piece) {
        piece.insert(v);
        const auto& kids = rooted.children[v];
        for (int carrier : kids) {
            bool others_up = true;
            int others_size = 0;
            for (int d : kids) {
                if (d == carrier) continue;
                if (!up_ok[d]) { others_up = false; break; }
                others_size += rooted.subtree_size[d];
            }
            if (!others_up) continue;
            int base_size = 1 + others_size;
            auto take_others = [&] {
                for (int d : kids)
                    if (d != carrier) collect_subtree(d, piece);
            };
            if (b_wait[carrier] && base_size == s) {
                take_others();
                TkAttachment att;
                att.owner = carrier;
                att.attach_vertex = v;
                att.vertices = piece;
                attachments.push_back(std::move(att));
                assign_b_wait(carrier);
                return;
            }
            for (int tsz = 1; tsz <= k - 1; ++tsz) {
                if (a_down[carrier][tsz] && base_size + tsz == s) {
                    take_others();
                    reconstruct_a_down(carrier, tsz, piece);
                    return;
                }
            }
        }
        throw InternalCheckError("Tk reconstruct: a_down has no valid carrier");
    }
};

}  // namespace

TkResult is_member_Tk(const Tree& t, int k) {
    if (k < 2) throw PreconditionError("is_member_Tk requires k >= 2");
    TkResult result;
    int n = t.order();
    if (n % (k + 1) != 0) {
        result.member = false;
        result.refutation = "order " + std::to_string(n) + " not divisible by " +
                            std::to_string(k + 1);
        return result;
    }
    TkSolver solver(t, k);
    if (!solver.solve()) {
        result.member = false;
        result.refutation = "no base-plus-pendant-attachments decomposition exists";
        return result;
    }
    TkDecomposition dec;
    dec.base = solver.base;
    dec.attachments = std::move(solver.attachments);
    // Sanity: blocks partition V, every attachment has order k and one per base vertex.
    int covered = dec.base.size();
    for (const auto& att : dec.attachments) {
        if (att.vertices.size() != k)
            throw InternalCheckError("Tk decomposition: attachment of wrong order");
        if (!dec.base.contains(att.owner))
            throw InternalCheckError("Tk decomposition: owner outside base");
        covered += att.vertices.size();
    }
    if (covered != n || static_cast<int>(dec.attachments.size()) != dec.base.size())
        throw InternalCheckError("Tk decomposition: blocks do not partition the tree");
    result.member = true;
    result.decomposition = std::move(dec);
    return result;
}

HkTree gen_counterexample_Hk(int k) {
    if (k < 7) throw PreconditionError("gen_counterexample_Hk requires k >= 7");
    std::vector<int> legs;
    if (k % 2 == 1) {
        int len = 1 + (k - 3) / 2;  // (k-1)/2 edges per leg
        legs = {len, len, len};
    } else {
        legs = {1 + (k - 2) / 2, 1 + (k - 2) / 2, 1 + (k - 4) / 2};
    }
    std::vector<std::pair<int, int>> edges;
    int next = 1;
    int first_leg_end = -1;
    for (std::size_t i = 0; i < legs.size(); ++i) {
        int prev = 0;
        for (int j = 0; j < legs[i]; ++j) {
            edges.emplace_back(prev, next);
            prev = next;
            ++next;
        }
        if (i == 0) first_leg_end = prev;
    }
    HkTree hk;
    hk.tree = Tree::from_edges(next, edges);
    hk.center = 0;
    hk.attach_end = first_leg_end;
    int expected = (k % 2 == 1) ? (3 * k - 1) / 2 : 3 * k / 2;
    if (hk.tree.order() != expected)
        throw InternalCheckError("H_k has unexpected order");
    return hk;
}

HkReport verify_Hk_key_observation(int k, const Tree& t0) {
    if (k != 7 && k != 8)
        throw PreconditionError("verify_Hk_key_observation covers k = 7 and k = 8");
    if (t0.order() > caps().hk_t0)
        throw CapExceeded("verify_Hk_key_observation: |T_0| above cap " +
                          std::to_string(caps().hk_t0));
    HkTree hk = gen_counterexample_Hk(k);
    int t = t0.order();
    int h = hk.tree.order();
    int n = t + h;

    std::vector<std::pair<int, int>> edges = t0.edges();
    for (auto [a, b] : hk.tree.edges()) edges.emplace_back(t + a, t + b);
    edges.emplace_back(t + hk.attach_end, 0);  // join w to vertex 0 of T_0
    Tree combined = Tree::from_edges(n, edges);

    int center = t + hk.center;
    HkReport report;
    report.k = k;
    report.hk_order = h;
    report.t_order = n;
    report.privileged = VertexSet(n);
    report.privileged.insert(center);
    for (int w : combined.neighbors(center)) report.privileged.insert(w);
    report.privileged.insert(0);  // the neighbor of w inside T_0
    if (report.privileged.size() != 5)
        throw InternalCheckError("privileged set should have exactly 5 vertices");

    VertexSet hk_vertices(n);
    for (int v = t; v < n; ++v) hk_vertices.insert(v);

    IsolationSpec spec = IsolationSpec::pattern(Tree::path(k));
    int min_in_hk = n + 1;
    int min_in_hk_overall = n + 1;
    std::vector<int> bad_witness;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
        VertexSet s(n);
        for (int v = 0; v < n; ++v)
            if ((mask >> v) & 1) s.insert(v);
        if (!is_isolating(combined, s, spec).valid) continue;
        int in_hk = (s & hk_vertices).size();
        min_in_hk_overall = std::min(min_in_hk_overall, in_hk);
        if (s.intersects(report.privileged)) continue;
        if (in_hk < min_in_hk) {
            min_in_hk = in_hk;
            if (in_hk < 2) bad_witness = s.members();
        }
    }
    if (min_in_hk_overall < 1)
        throw InternalCheckError("a P_k-isolating set avoided H_k entirely");

    report.min_in_hk = min_in_hk;
    report.disjoint_bound = 5 + (h - 5) / 2;
    int formula = (k % 2 == 1) ? (3 * k + 9) / 4 : (3 * k + 10) / 4;
    if (report.disjoint_bound != formula)
        throw InternalCheckError("disjoint bound arithmetic mismatch");

    report.certificate.valid = (min_in_hk >= 2) && (report.disjoint_bound < k + 1);
    if (!report.certificate.valid) {
        Violation v;
        v.kind = "witness";
        v.vertices = bad_witness;
        report.certificate.violations.push_back(std::move(v));
    }
    return report;
}

Tree gen_gap_gadget(const GapGadgetRecipe& recipe) {
    if (recipe.b < 1) throw PreconditionError("gen_gap_gadget: b >= 1 required");
    int f = recipe.pattern.order();
    if (recipe.root < 0 || recipe.root >= f)
        throw PreconditionError("gen_gap_gadget: root outside pattern");
    std::vector<std::pair<int, int>> edges = {{0, 1}};  // x -- y
    for (int copy = 0; copy < 2 * recipe.b; ++copy) {
        int offset = 2 + copy * f;
        for (auto [a, c] : recipe.pattern.edges()) edges.emplace_back(offset + a, offset + c);
        edges.emplace_back(copy < recipe.b ? 0 : 1, offset + recipe.root);
    }
    return Tree::from_edges(2 + 2 * recipe.b * f, edges);
}

}  // namespace isotree
