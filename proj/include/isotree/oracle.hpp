#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "isotree/predicates.hpp"
#include "isotree/tree.hpp"

namespace isotree {

struct SolveResult {
    int value = 0;
    VertexSet witness;
};

/// Exact minimum (independent) isolating set by cardinality-ascending search,
/// branching on vertices able to fix the first violating component.
SolveResult min_isolating_set(const Tree& t, const IsolationSpec& spec, bool independent);

struct DisjointFamilyResult {
    int count = 0;
    std::vector<VertexSet> family;
};

/// Largest p <= p_cap admitting p pairwise-disjoint isolating sets.
DisjointFamilyResult max_disjoint_isolating_sets(const Tree& t, const IsolationSpec& spec,
                                                 int p_cap);

/// Every isomorphism class of trees on n vertices exactly once (n <= cap).
std::vector<Tree> enumerate_trees(int n);

/// AHU encoding rooted at the canonical centroid; equal strings iff isomorphic.
std::string canonical_form(const Tree& t);
/// AHU encoding for a fixed root; equal strings iff rooted-isomorphic.
std::string rooted_canonical_form(const Tree& t, int root);

/// Uniform over labelled trees on n vertices; deterministic per seed.
Tree random_tree(int n, std::uint64_t seed);

/// Decode a Pruefer sequence (entries in 0..n-1 with n = length + 2).
Tree tree_from_pruefer(const std::vector<int>& seq);

}  // namespace isotree
