#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "isotree/tree.hpp"

namespace isotree {

/// What must not survive in the remnant T - N[S]: any component of order >= k
/// (AllK), a star K_{1,k-1} (Star), or an arbitrary pattern tree (Pattern).
struct IsolationSpec {
    enum class Kind { AllK, Star, Pattern };

    Kind kind = Kind::AllK;
    int k = 1;
    std::shared_ptr<const Tree> pattern_tree;  // Pattern only

    static IsolationSpec all_k(int k);
    static IsolationSpec star(int k);  // forbids K_{1,k-1}; k >= 2
    static IsolationSpec pattern(Tree f);

    const Tree& pattern() const { return *pattern_tree; }
    std::string describe() const;
};

/// Total assignment of colors 1..ell; classes may be empty.
struct Coloring {
    int ell = 0;
    std::vector<int> color;  // per vertex

    int n() const { return static_cast<int>(color.size()); }
    VertexSet color_class(int i) const {
        VertexSet s(n());
        for (int v = 0; v < n(); ++v)
            if (color[v] == i) s.insert(v);
        return s;
    }
};

struct Violation {
    std::string kind;           // "component" | "improper-edge"
    int color = 0;              // 0 when not a coloring violation
    std::vector<int> vertices;  // witness, ascending
};

struct Certificate {
    bool valid = true;
    std::vector<Violation> violations;
};

/// Does this connected remnant component violate the spec?
bool component_violates(const IsolationSpec& spec, const Tree& component);

/// True iff pattern is isomorphic to a subgraph of host (both trees).
/// Rooted DP with maximum bipartite matching over child assignments.
bool subtree_contains(const Tree& host, const Tree& pattern);

Certificate is_isolating(const Tree& t, const VertexSet& s, const IsolationSpec& spec);

bool is_independent(const Tree& t, const VertexSet& s);

/// Valid iff the coloring is proper and every color class is isolating.
Certificate certify_coloring(const Tree& t, const Coloring& c, const IsolationSpec& spec);

/// Every vertex sees min(d(v), ell-1) distinct colors in its open neighborhood.
bool is_dynamic(const Tree& t, const Coloring& c);

}  // namespace isotree
