#pragma once

#include "isotree/oracle.hpp"
#include "isotree/tree.hpp"

namespace isotree {

/// Solved table of the rooted all-k-isolation DP. States per vertex:
///   IN        — vertex chosen into S
///   DOM       — not in S, dominated by a child in S
///   FREE(j)   — not in S, undominated so far; the live remnant piece through
///               the vertex has order j (1 <= j < k)
///   FREE_BIG  — undominated, live piece of order >= k but every child-side
///               piece < k; the parent is forced into S
/// Child piece sizes are convolved with a cap at k, which is what keeps the
/// table O(n*k).
struct DpTable {
    int k = 1;
    bool independent = false;
    int n = 0;
    int num_states = 0;  // k + 2
    Rooted rooted;
    std::vector<std::vector<long long>> cost;  // per vertex, per state

    // state indices
    int state_in() const { return 0; }
    int state_dom() const { return 1; }
    int state_free(int j) const { return 1 + j; }  // 1 <= j <= k-1
    int state_free_big() const { return k + 1; }
};

DpTable solve_table(const Tree& t, int k, bool independent);
VertexSet reconstruct_witness(const DpTable& table);

/// Exact zeta_k / zeta_k^i with witness.
SolveResult zeta_k(const Tree& t, int k, bool independent);

}  // namespace isotree
