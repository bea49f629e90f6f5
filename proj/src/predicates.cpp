#include "isotree/predicates.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace isotree {

IsolationSpec IsolationSpec::all_k(int k) {
    if (k < 1) throw PreconditionError("AllK requires k >= 1");
    IsolationSpec s;
    s.kind = Kind::AllK;
    s.k = k;
    return s;
}

IsolationSpec IsolationSpec::star(int k) {
    if (k < 2) throw PreconditionError("Star requires k >= 2");
    IsolationSpec s;
    s.kind = Kind::Star;
    s.k = k;
    return s;
}

IsolationSpec IsolationSpec::pattern(Tree f) {
    IsolationSpec s;
    s.kind = Kind::Pattern;
    s.k = f.order();
    s.pattern_tree = std::make_shared<const Tree>(std::move(f));
    return s;
}

std::string IsolationSpec::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::AllK: out << "all-" << k << "-isolation"; break;
        case Kind::Star: out << "K_{1," << k - 1 << "}-isolation"; break;
        case Kind::Pattern: out << "pattern-isolation (order " << k << ")"; break;
    }
    return out.str();
}

namespace {

// Can the pattern rooted at proot embed into host rooted at hroot with
// proot -> hroot? Children of a pattern vertex must map to distinct children
// of the image; decided by Kuhn's matching in ascending vertex order.
bool rooted_embeds(const Tree& host, const Rooted& hr, const Tree& pattern, const Rooted& pr,
                   std::vector<std::vector<signed char>>& memo, int hv, int pv) {
    signed char& m = memo[hv][pv];
    if (m != -1) return m != 0;
    const auto& pc = pr.children[pv];
    const auto& hc = hr.children[hv];
    bool ok;
    if (pc.empty()) {
        ok = true;
    } else if (pc.size() > hc.size()) {
        ok = false;
    } else {
        std::vector<int> match(hc.size(), -1);  // host child index -> pattern child index
        std::function<bool(int, std::vector<char>&)> augment = [&](int pi, std::vector<char>& used) {
            for (std::size_t hi = 0; hi < hc.size(); ++hi) {
                if (used[hi]) continue;
                if (!rooted_embeds(host, hr, pattern, pr, memo, hc[hi], pc[pi])) continue;
                used[hi] = 1;
                if (match[hi] < 0 || augment(match[hi], used)) {
                    match[hi] = pi;
                    return true;
                }
            }
            return false;
        };
        ok = true;
        for (std::size_t pi = 0; pi < pc.size() && ok; ++pi) {
            std::vector<char> used(hc.size(), 0);
            ok = augment(static_cast<int>(pi), used);
        }
    }
    m = ok ? 1 : 0;
    return ok;
}

}  // namespace

bool subtree_contains(const Tree& host, const Tree& pattern) {
    int np = pattern.order();
    int nh = host.order();
    if (np > nh) return false;
    if (np == 1) return true;
    if (pattern.max_degree() <= 2)  // pattern is a path
        return diameter_path(host).vertex_count >= np;
    int proot = centroid(pattern);
    Rooted pr = root_at(pattern, proot);
    for (int h0 = 0; h0 < nh; ++h0) {
        Rooted hr = root_at(host, h0);
        std::vector<std::vector<signed char>> memo(nh, std::vector<signed char>(np, -1));
        if (rooted_embeds(host, hr, pattern, pr, memo, h0, proot)) return true;
    }
    return false;
}

bool component_violates(const IsolationSpec& spec, const Tree& component) {
    switch (spec.kind) {
        case IsolationSpec::Kind::AllK:
            return component.order() >= spec.k;
        case IsolationSpec::Kind::Star:
            return component.max_degree() >= spec.k - 1;
        case IsolationSpec::Kind::Pattern:
            return subtree_contains(component, spec.pattern());
    }
    return false;
}

Certificate is_isolating(const Tree& t, const VertexSet& s, const IsolationSpec& spec) {
    Certificate cert;
    for (const auto& comp : remnant(t, s).components) {
        if (component_violates(spec, comp.tree)) {
            Violation v;
            v.kind = "component";
            v.vertices = comp.to_original;
            cert.violations.push_back(std::move(v));
        }
    }
    cert.valid = cert.violations.empty();
    return cert;
}

bool is_independent(const Tree& t, const VertexSet& s) {
    for (int v : s.members())
        for (int w : t.neighbors(v))
            if (w > v && s.contains(w)) return false;
    return true;
}

Certificate certify_coloring(const Tree& t, const Coloring& c, const IsolationSpec& spec) {
    if (c.n() != t.order())
        throw PreconditionError("coloring size does not match tree order");
    if (c.ell < 1) throw PreconditionError("coloring needs at least one color");
    for (int v = 0; v < t.order(); ++v)
        if (c.color[v] < 1 || c.color[v] > c.ell)
            throw PreconditionError("vertex " + std::to_string(v) + " has color outside 1.." +
                                    std::to_string(c.ell));
    Certificate cert;
    for (auto [u, v] : t.edges()) {
        if (c.color[u] == c.color[v]) {
            Violation viol;
            viol.kind = "improper-edge";
            viol.color = c.color[u];
            viol.vertices = {u, v};
            cert.violations.push_back(std::move(viol));
        }
    }
    for (int i = 1; i <= c.ell; ++i) {
        Certificate sub = is_isolating(t, c.color_class(i), spec);
        for (auto& viol : sub.violations) {
            viol.color = i;
            cert.violations.push_back(std::move(viol));
        }
    }
    cert.valid = cert.violations.empty();
    return cert;
}

bool is_dynamic(const Tree& t, const Coloring& c) {
    if (c.n() != t.order())
        throw PreconditionError("coloring size does not match tree order");
    for (int v = 0; v < t.order(); ++v) {
        std::set<int> seen;
        for (int w : t.neighbors(v)) seen.insert(c.color[w]);
        if (static_cast<int>(seen.size()) != std::min(t.degree(v), c.ell - 1)) return false;
    }
    return true;
}

}  // namespace isotree
