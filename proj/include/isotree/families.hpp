#pragma once

#include <optional>
#include <string>
#include <vector>

#include "isotree/predicates.hpp"
#include "isotree/tree.hpp"

namespace isotree {

struct ExtremalAttachment {
    Tree pattern;       // order exactly k
    int attach_vertex = 0;  // vertex of the pattern joined to the base vertex
};

/// Base tree plus one pendant order-k tree per base vertex.
struct ExtremalRecipe {
    Tree base;
    int k = 2;
    std::vector<ExtremalAttachment> attachments;  // one per base vertex, in id order
};

/// Tree of order |base|*(k+1); base keeps ids 0..|base|-1, attachments are
/// appended in base-vertex order.
Tree gen_extremal(const ExtremalRecipe& recipe);

struct TkAttachment {
    int owner = 0;          // base vertex
    int attach_vertex = 0;  // attachment vertex adjacent to the owner
    VertexSet vertices;
};

struct TkDecomposition {
    VertexSet base;
    std::vector<TkAttachment> attachments;
};

struct TkResult {
    bool member = false;
    std::optional<TkDecomposition> decomposition;
    std::string refutation;
};

/// Decides membership in the extremal family: T decomposes into a base tree
/// with one pendant order-k subtree per base vertex. Rooted decomposition
/// search with memoization on (vertex, role).
TkResult is_member_Tk(const Tree& t, int k);

struct HkTree {
    Tree tree;
    int center = 0;      // the K_{1,3} center
    int attach_end = 0;  // designated leg endpoint for joining onto a host
};

/// The subdivided-star counterexample: odd k gives order (3k-1)/2, even k
/// gives order 3k/2. Requires k >= 7.
HkTree gen_counterexample_Hk(int k);

struct HkReport {
    Certificate certificate;
    int k = 0;
    int hk_order = 0;
    int t_order = 0;
    int min_in_hk = 0;      // min |S ^ V(H_k)| over P_k-isolating S avoiding the privileged set
    int disjoint_bound = 0;  // 5 + (|H_k|-5)/2, floored
    VertexSet privileged;
};

/// Builds T = T_0 + H_k joined at the designated end, enumerates every subset,
/// and certifies the key observation: any P_k-isolating set avoiding the five
/// privileged vertices contains at least two vertices of H_k. Reports the
/// resulting bound on disjoint P_k-isolating families.
HkReport verify_Hk_key_observation(int k, const Tree& t0);

struct GapGadgetRecipe {
    Tree pattern;  // F
    int root = 0;  // designated root f of F
    int b = 1;     // copies per side
};

/// Edge xy with x adjacent to the roots of b copies of F and y to the roots
/// of the other b copies; order 2 + 2b|F|. x = 0, y = 1.
Tree gen_gap_gadget(const GapGadgetRecipe& recipe);

}  // namespace isotree
