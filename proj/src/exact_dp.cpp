#include "isotree/exact_dp.hpp"

#include <algorithm>
#include <limits>
#include <vector>

namespace isotree {

namespace {

constexpr long long kInf = std::numeric_limits<long long>::max() / 4;

// Cheapest state a child may take under an IN parent. The child's live piece
// is finalized by the parent's domination: FREE(j) pieces have j < k by state,
// FREE_BIG splits into its sub-k internal pieces. IN children only when the
// independence flag is off.
long long best_under_in(const DpTable& tb, int child) {
    const auto& c = tb.cost[child];
    long long best = kInf;
    if (!tb.independent) best = std::min(best, c[tb.state_in()]);
    best = std::min(best, c[tb.state_dom()]);
    for (int j = 1; j <= tb.k - 1; ++j) best = std::min(best, c[tb.state_free(j)]);
    best = std::min(best, c[tb.state_free_big()]);
    return best;
}

// Cheapest non-IN state a child may take under a DOM parent. FREE_BIG is
// illegal: its live piece (order >= k) would finalize when the parent leaves
// the remnant.
long long best_non_in_under_dom(const DpTable& tb, int child) {
    const auto& c = tb.cost[child];
    long long best = c[tb.state_dom()];
    for (int j = 1; j <= tb.k - 1; ++j) best = std::min(best, c[tb.state_free(j)]);
    return best;
}

// Knapsack over children of the undominated states: accumulated live-piece
// size (capped at k) -> cheapest cost. Children contribute either nothing
// (DOM: the child left the remnant) or their FREE piece.
std::vector<long long> free_knap(const DpTable& tb, int v,
                                 std::vector<std::vector<long long>>* stages = nullptr) {
    int k = tb.k;
    std::vector<long long> arr(k + 1, kInf);
    arr[std::min(1, k)] = 0;
    if (stages) stages->push_back(arr);
    for (int child : tb.rooted.children[v]) {
        const auto& c = tb.cost[child];
        std::vector<long long> next(k + 1, kInf);
        for (int s = 1; s <= k; ++s) {
            if (arr[s] >= kInf) continue;
            if (c[tb.state_dom()] < kInf)
                next[s] = std::min(next[s], arr[s] + c[tb.state_dom()]);
            for (int j = 1; j <= k - 1; ++j) {
                if (c[tb.state_free(j)] >= kInf) continue;
                int s2 = std::min(s + j, k);
                next[s2] = std::min(next[s2], arr[s] + c[tb.state_free(j)]);
            }
        }
        arr = std::move(next);
        if (stages) stages->push_back(arr);
    }
    return arr;
}

}  // namespace

DpTable solve_table(const Tree& t, int k, bool independent) {
    if (k < 1) throw PreconditionError("zeta_k requires k >= 1");
    DpTable tb;
    tb.k = k;
    tb.independent = independent;
    tb.n = t.order();
    tb.num_states = k + 2;
    tb.rooted = root_at(t, 0);
    tb.cost.assign(tb.n, std::vector<long long>(tb.num_states, kInf));

    for (auto it = tb.rooted.bfs_order.rbegin(); it != tb.rooted.bfs_order.rend(); ++it) {
        int v = *it;
        auto& cv = tb.cost[v];
        const auto& kids = tb.rooted.children[v];

        // IN
        long long in_cost = 1;
        for (int c : kids) {
            long long b = best_under_in(tb, c);
            if (b >= kInf) { in_cost = kInf; break; }
            in_cost += b;
        }
        cv[tb.state_in()] = in_cost;

        // DOM: at least one child IN
        if (!kids.empty()) {
            long long total = 0;
            long long penalty = kInf;
            bool feasible = true;
            for (int c : kids) {
                long long b = best_non_in_under_dom(tb, c);
                long long ci = tb.cost[c][tb.state_in()];
                long long m = std::min(b, ci);
                if (m >= kInf) { feasible = false; break; }
                total += m;
                if (ci < kInf) penalty = std::min(penalty, ci - m);
            }
            if (feasible && penalty < kInf) cv[tb.state_dom()] = total + penalty;
        }

        // FREE(j) / FREE_BIG
        auto knap = free_knap(tb, v);
        for (int j = 1; j <= k - 1; ++j) cv[tb.state_free(j)] = knap[j];
        cv[tb.state_free_big()] = knap[k];
    }
    return tb;
}

namespace {

long long root_answer(const DpTable& tb, int* best_state) {
    const auto& c = tb.cost[tb.rooted.root];
    long long best = kInf;
    int state = -1;
    auto consider = [&](int s) {
        if (c[s] < best) { best = c[s]; state = s; }
    };
    consider(tb.state_in());
    consider(tb.state_dom());
    for (int j = 1; j <= tb.k - 1; ++j) consider(tb.state_free(j));
    if (best_state) *best_state = state;
    return best;
}

// Deterministically re-derive the child states realizing cost[v][state].
std::vector<std::pair<int, int>> child_states_for(const DpTable& tb, int v, int state) {
    const auto& kids = tb.rooted.children[v];
    std::vector<std::pair<int, int>> out;
    out.reserve(kids.size());
    auto argmin_under_in = [&](int c) {
        const auto& cc = tb.cost[c];
        long long best = best_under_in(tb, c);
        if (!tb.independent && cc[tb.state_in()] == best) return tb.state_in();
        if (cc[tb.state_dom()] == best) return tb.state_dom();
        for (int j = 1; j <= tb.k - 1; ++j)
            if (cc[tb.state_free(j)] == best) return tb.state_free(j);
        return tb.state_free_big();
    };
    auto argmin_non_in = [&](int c) {
        const auto& cc = tb.cost[c];
        long long best = best_non_in_under_dom(tb, c);
        if (cc[tb.state_dom()] == best) return tb.state_dom();
        for (int j = 1; j <= tb.k - 1; ++j)
            if (cc[tb.state_free(j)] == best) return tb.state_free(j);
        throw InternalCheckError("dp reconstruct: no non-IN child state matches");
    };

    if (state == tb.state_in()) {
        for (int c : kids) out.emplace_back(c, argmin_under_in(c));
        return out;
    }
    if (state == tb.state_dom()) {
        // Mirror the cost computation: children take min(IN, non-IN); if none
        // took IN, the child with minimal IN-penalty is forced.
        bool have_in = false;
        std::vector<int> chosen(kids.size());
        for (std::size_t i = 0; i < kids.size(); ++i) {
            int c = kids[i];
            long long b = best_non_in_under_dom(tb, c);
            long long ci = tb.cost[c][tb.state_in()];
            if (ci <= b) {
                chosen[i] = tb.state_in();
                have_in = true;
            } else {
                chosen[i] = argmin_non_in(c);
            }
        }
        if (!have_in) {
            long long best_pen = kInf;
            std::size_t best_i = 0;
            for (std::size_t i = 0; i < kids.size(); ++i) {
                int c = kids[i];
                long long pen = tb.cost[c][tb.state_in()] - best_non_in_under_dom(tb, c);
                if (pen < best_pen) { best_pen = pen; best_i = i; }
            }
            chosen[best_i] = tb.state_in();
        }
        for (std::size_t i = 0; i < kids.size(); ++i) out.emplace_back(kids[i], chosen[i]);
        return out;
    }

    // FREE(j) or FREE_BIG: backtrack the knapsack.
    int k = tb.k;
    int target = (state == tb.state_free_big()) ? k : state - 1;
    std::vector<std::vector<long long>> stages;
    free_knap(tb, v, &stages);
    int s_cur = target;
    std::vector<int> picked(kids.size(), -1);
    for (int i = static_cast<int>(kids.size()) - 1; i >= 0; --i) {
        const auto& before = stages[i];
        const auto& after = stages[i + 1];
        const auto& cc = tb.cost[kids[i]];
        bool found = false;
        for (int s_prev = 1; s_prev <= k && !found; ++s_prev) {
            if (before[s_prev] >= kInf) continue;
            if (std::min(s_prev + 0, k) == s_cur && cc[tb.state_dom()] < kInf &&
                before[s_prev] + cc[tb.state_dom()] == after[s_cur]) {
                picked[i] = tb.state_dom();
                s_cur = s_prev;
                found = true;
                break;
            }
            for (int j = 1; j <= k - 1; ++j) {
                if (cc[tb.state_free(j)] >= kInf) continue;
                if (std::min(s_prev + j, k) != s_cur) continue;
                if (before[s_prev] + cc[tb.state_free(j)] != after[s_cur]) continue;
                picked[i] = tb.state_free(j);
                s_cur = s_prev;
                found = true;
                break;
            }
        }
        if (!found) throw InternalCheckError("dp reconstruct: knapsack backtrack failed");
    }
    if (s_cur != std::min(1, k))
        throw InternalCheckError("dp reconstruct: knapsack did not return to base");
    for (std::size_t i = 0; i < kids.size(); ++i) out.emplace_back(kids[i], picked[i]);
    return out;
}

}  // namespace

VertexSet reconstruct_witness(const DpTable& tb) {
    int root_state;
    long long best = root_answer(tb, &root_state);
    if (best >= kInf || root_state < 0)
        throw InternalCheckError("dp reconstruct: no feasible root state");
    VertexSet witness(tb.n);
    std::vector<std::pair<int, int>> stack = {{tb.rooted.root, root_state}};
    while (!stack.empty()) {
        auto [v, state] = stack.back();
        stack.pop_back();
        if (state == tb.state_in()) witness.insert(v);
        for (auto& vs : child_states_for(tb, v, state)) stack.push_back(vs);
    }
    return witness;
}

SolveResult zeta_k(const Tree& t, int k, bool independent) {
    DpTable tb = solve_table(t, k, independent);
    SolveResult r;
    r.value = static_cast<int>(root_answer(tb, nullptr));
    r.witness = reconstruct_witness(tb);
    if (r.witness.size() != r.value)
        throw InternalCheckError("dp witness size differs from reported value");
    return r;
}

}  // namespace isotree
