#include "isotree/tree.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <queue>
#include <sstream>

namespace isotree {

namespace {

const Caps* g_caps_override = nullptr;

struct Dsu {
    std::vector<int> p;
    explicit Dsu(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
    int find(int x) {
        while (p[x] != x) x = p[x] = p[p[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        p[b] = a;
        return true;
    }
};

}  // namespace

Caps Caps::from_env() {
    Caps c;
    const char* env = std::getenv("ISO_TREES_CAPS");
    if (!env) return c;
    std::stringstream ss(env);
    std::string item;
    while (std::getline(ss, item, ',')) {
        auto eq = item.find('=');
        if (eq == std::string::npos) continue;
        std::string key = item.substr(0, eq);
        int value = std::atoi(item.c_str() + eq + 1);
        if (value <= 0) continue;
        if (key == "oracle_allk") c.oracle_allk = value;
        else if (key == "oracle_pattern") c.oracle_pattern = value;
        else if (key == "disjoint") c.disjoint = value;
        else if (key == "enumerate_n") c.enumerate_n = value;
        else if (key == "search_coloring") c.search_coloring = value;
        else if (key == "hk_t0") c.hk_t0 = value;
    }
    return c;
}

const Caps& caps() {
    static Caps c = Caps::from_env();
    return g_caps_override ? *g_caps_override : c;
}

Tree Tree::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 1) throw PreconditionError("tree order must be at least 1");
    Tree t;
    t.n_ = n;
    t.adj_.assign(n, {});
    Dsu dsu(n);
    std::vector<std::vector<char>> small_seen;  // avoid O(n^2) only for big n
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw ParseError(ParseError::Kind::MalformedLine,
                             "vertex id out of range 0.." + std::to_string(n - 1));
        if (u == v)
            throw ParseError(ParseError::Kind::SelfLoop, "edge " + std::to_string(u) + "-" + std::to_string(v));
        for (int w : t.adj_[u])
            if (w == v)
                throw ParseError(ParseError::Kind::DuplicateEdge,
                                 std::to_string(u) + " " + std::to_string(v));
        if (!dsu.unite(u, v))
            throw ParseError(ParseError::Kind::Cycle,
                             "adding edge " + std::to_string(u) + " " + std::to_string(v) +
                                 " closes a cycle");
        t.adj_[u].push_back(v);
        t.adj_[v].push_back(u);
    }
    if (static_cast<int>(edges.size()) != n - 1)
        throw ParseError(ParseError::Kind::Disconnected,
                         std::to_string(n) + " vertices but " + std::to_string(edges.size()) +
                             " edges");
    for (auto& a : t.adj_) std::sort(a.begin(), a.end());
    return t;
}

Tree Tree::path(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < n; ++i) e.emplace_back(i, i + 1);
    return from_edges(n, e);
}

Tree Tree::star(int leaves) {
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= leaves; ++i) e.emplace_back(0, i);
    return from_edges(leaves + 1, e);
}

int Tree::max_degree() const {
    int m = 0;
    for (int v = 0; v < n_; ++v) m = std::max(m, degree(v));
    return m;
}

bool Tree::has_edge(int u, int v) const {
    const auto& a = adj_[u];
    return std::binary_search(a.begin(), a.end(), v);
}

std::vector<std::pair<int, int>> Tree::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(n_ - 1);
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Tree::is_star() const {
    if (n_ < 3) return false;
    return max_degree() == n_ - 1;
}

Rooted root_at(const Tree& t, int root) {
    int n = t.order();
    Rooted r;
    r.root = root;
    r.parent.assign(n, -1);
    r.children.assign(n, {});
    r.bfs_order.reserve(n);
    std::vector<char> seen(n, 0);
    std::queue<int> q;
    q.push(root);
    seen[root] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        r.bfs_order.push_back(v);
        for (int w : t.neighbors(v)) {
            if (seen[w]) continue;
            seen[w] = 1;
            r.parent[w] = v;
            r.children[v].push_back(w);
            q.push(w);
        }
    }
    r.subtree_size.assign(n, 1);
    for (auto it = r.bfs_order.rbegin(); it != r.bfs_order.rend(); ++it) {
        int v = *it;
        if (r.parent[v] >= 0) r.subtree_size[r.parent[v]] += r.subtree_size[v];
    }
    return r;
}

Tree parse_edge_list(const std::string& text) {
    std::vector<std::pair<int, int>> edges;
    std::vector<long> singles;
    std::istringstream in(text);
    std::string line;
    int max_id = -1;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::vector<std::string> tokens;
        std::string tok;
        while (ls >> tok) tokens.push_back(tok);
        if (tokens.empty()) continue;
        auto parse_int = [&](const std::string& s) -> long {
            std::size_t pos = 0;
            long value;
            try {
                value = std::stol(s, &pos);
            } catch (const std::exception&) {
                throw ParseError(ParseError::Kind::MalformedLine, "'" + line + "'");
            }
            if (pos != s.size() || value < 0)
                throw ParseError(ParseError::Kind::MalformedLine, "'" + line + "'");
            return value;
        };
        if (tokens.size() == 1) {
            singles.push_back(parse_int(tokens[0]));
            continue;
        }
        if (tokens.size() != 2)
            throw ParseError(ParseError::Kind::MalformedLine, "'" + line + "'");
        long u = parse_int(tokens[0]);
        long v = parse_int(tokens[1]);
        edges.emplace_back(static_cast<int>(u), static_cast<int>(v));
        max_id = std::max(max_id, static_cast<int>(std::max(u, v)));
    }
    if (!singles.empty()) {
        if (edges.empty() && singles.size() == 1 && singles[0] == 1)
            return Tree();  // K_1
        throw ParseError(ParseError::Kind::MalformedLine,
                         "single-token line allowed only as '1' for K_1");
    }
    if (edges.empty())
        throw ParseError(ParseError::Kind::MalformedLine, "empty input");
    return Tree::from_edges(max_id + 1, edges);
}

std::string serialize_edge_list(const Tree& t) {
    if (t.order() == 1) return "1\n";
    std::ostringstream out;
    for (auto [u, v] : t.edges()) out << u << " " << v << "\n";
    return out.str();
}

std::string dot_export(const Tree& t, const std::vector<int>* classes) {
    static const char* palette[] = {"#e6194b", "#3cb44b", "#4363d8", "#f58231",
                                    "#911eb4", "#46f0f0", "#f032e6", "#bcf60c",
                                    "#fabebe", "#008080"};
    std::ostringstream out;
    out << "graph T {\n";
    if (classes) out << "  node [style=filled];\n";
    for (int v = 0; v < t.order(); ++v) {
        out << "  " << v;
        if (classes) {
            int c = (*classes)[v];
            out << " [label=\"" << v << "\\nc" << c << "\" fillcolor=\""
                << palette[((c - 1) % 10 + 10) % 10] << "\"]";
        }
        out << ";\n";
    }
    for (auto [u, v] : t.edges()) out << "  " << u << " -- " << v << ";\n";
    out << "}\n";
    return out.str();
}

VertexSet closed_neighborhood(const Tree& t, const VertexSet& s) {
    if (s.universe() != t.order())
        throw PreconditionError("vertex set universe does not match tree order");
    VertexSet out = s;
    for (int v : s.members())
        for (int w : t.neighbors(v)) out.insert(w);
    return out;
}

std::vector<std::vector<int>> components_of(const Tree& t, const VertexSet& keep) {
    int n = t.order();
    std::vector<std::vector<int>> comps;
    std::vector<char> seen(n, 0);
    for (int v = 0; v < n; ++v) {
        if (!keep.contains(v) || seen[v]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(v);
        seen[v] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int w : t.neighbors(u)) {
                if (!keep.contains(w) || seen[w]) continue;
                seen[w] = 1;
                q.push(w);
            }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

std::pair<Tree, std::vector<int>> induced_subtree(const Tree& t, const std::vector<int>& vertices) {
    std::vector<int> verts = vertices;
    std::sort(verts.begin(), verts.end());
    std::vector<int> local(t.order(), -1);
    for (std::size_t i = 0; i < verts.size(); ++i) local[verts[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : verts)
        for (int w : t.neighbors(u))
            if (u < w && local[w] >= 0) edges.emplace_back(local[u], local[w]);
    return {Tree::from_edges(static_cast<int>(verts.size()), edges), verts};
}

Forest remnant(const Tree& t, const VertexSet& s) {
    VertexSet removed = closed_neighborhood(t, s);
    VertexSet keep = removed.complement();
    Forest f;
    for (auto& comp : components_of(t, keep)) {
        auto [sub, map] = induced_subtree(t, comp);
        f.components.push_back({std::move(sub), std::move(map)});
    }
    return f;
}

int max_component_after_removal(const Tree& t, int v) {
    VertexSet keep = VertexSet::full(t.order());
    keep.erase(v);
    int best = 0;
    for (auto& comp : components_of(t, keep)) best = std::max<int>(best, comp.size());
    return best;
}

std::vector<int> centroid_candidates(const Tree& t) {
    int n = t.order();
    Rooted r = root_at(t, 0);
    std::vector<int> maxcomp(n, 0);
    for (int v = 0; v < n; ++v) {
        int m = n - r.subtree_size[v];
        for (int c : r.children[v]) m = std::max(m, r.subtree_size[c]);
        maxcomp[v] = m;
    }
    int best = *std::min_element(maxcomp.begin(), maxcomp.end());
    std::vector<int> out;
    for (int v = 0; v < n; ++v)
        if (maxcomp[v] == best) out.push_back(v);
    return out;
}

int centroid(const Tree& t) { return centroid_candidates(t).front(); }

EdgeSplit edge_split(const Tree& t, int x, int y) {
    if (!t.has_edge(x, y)) throw PreconditionError("edge_split: not an edge");
    EdgeSplit s;
    s.x = x;
    s.y = y;
    s.side_x = VertexSet(t.order());
    s.side_y = VertexSet(t.order());
    // BFS from x avoiding the edge to y.
    std::vector<char> seen(t.order(), 0);
    std::queue<int> q;
    q.push(x);
    seen[x] = 1;
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        s.side_x.insert(v);
        for (int w : t.neighbors(v)) {
            if (v == x && w == y) continue;
            if (!seen[w]) {
                seen[w] = 1;
                q.push(w);
            }
        }
    }
    s.side_y = s.side_x.complement();
    return s;
}

BranchReport k_branches(const Tree& t, int k) {
    int n = t.order();
    BranchReport rep;
    rep.core_vertices = VertexSet(n);
    if (n < 2 || k < 1 || k > n - 1) return rep;
    Rooted r = root_at(t, 0);
    auto collect_subtree = [&](int c) {
        VertexSet comp(n);
        std::queue<int> q;
        q.push(c);
        comp.insert(c);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : r.children[v]) {
                comp.insert(w);
                q.push(w);
            }
        }
        return comp;
    };
    for (auto [u, v] : t.edges()) {
        int child = (r.parent[v] == u) ? v : u;
        int par = (child == v) ? u : v;
        int below = r.subtree_size[child];
        if (below == k) {
            KBranch b;
            b.branch_vertex = child;
            b.core_vertex = par;
            b.component = collect_subtree(child);
            rep.core_vertices.insert(par);
            rep.branches.push_back(std::move(b));
        }
        if (n - below == k) {
            KBranch b;
            b.branch_vertex = par;
            b.core_vertex = child;
            b.component = collect_subtree(child).complement();
            rep.core_vertices.insert(child);
            rep.branches.push_back(std::move(b));
        }
    }
    return rep;
}

std::vector<std::pair<int, int>> large_edges(const Tree& t, int k) {
    int n = t.order();
    std::vector<std::pair<int, int>> out;
    if (n < 2) return out;
    Rooted r = root_at(t, 0);
    for (auto [u, v] : t.edges()) {
        int child = (r.parent[v] == u) ? v : u;
        int below = r.subtree_size[child];
        if (below >= k + 1 && n - below >= k + 1) out.emplace_back(u, v);
    }
    return out;
}

std::vector<CoreSubtree> core_subtree_bipartition(const Tree& t, int k) {
    BranchReport rep = k_branches(t, k);
    if (rep.branches.empty())
        throw PreconditionError("core_subtree_bipartition: no k-branch exists");
    int n = t.order();
    std::vector<CoreSubtree> out;
    for (auto& comp : components_of(t, rep.core_vertices)) {
        CoreSubtree cs;
        cs.core = VertexSet::from(n, comp);
        cs.b_side = VertexSet(n);
        cs.r_side = VertexSet(n);
        if (comp.size() == 1) {
            cs.b_side.insert(comp[0]);
        } else {
            // 2-color by BFS parity from the smallest vertex.
            std::vector<int> parity(n, -1);
            std::queue<int> q;
            q.push(comp[0]);
            parity[comp[0]] = 0;
            while (!q.empty()) {
                int v = q.front();
                q.pop();
                for (int w : t.neighbors(v)) {
                    if (!cs.core.contains(w) || parity[w] >= 0) continue;
                    parity[w] = 1 - parity[v];
                    q.push(w);
                }
            }
            for (int v : comp) (parity[v] == 0 ? cs.b_side : cs.r_side).insert(v);
        }
        int count_b = 0, count_r = 0;
        for (const auto& br : rep.branches) {
            if (cs.b_side.contains(br.core_vertex)) ++count_b;
            else if (cs.r_side.contains(br.core_vertex)) ++count_r;
        }
        cs.b_branches = count_b;
        cs.r_branches = count_r;
        bool swap_sides;
        if (count_b != count_r) {
            swap_sides = count_r > count_b;
        } else {
            // tie: the side holding the smaller vertex id becomes B
            int min_b = cs.b_side.empty() ? n : cs.b_side.members().front();
            int min_r = cs.r_side.empty() ? n : cs.r_side.members().front();
            swap_sides = min_r < min_b;
        }
        if (swap_sides) {
            std::swap(cs.b_side, cs.r_side);
            std::swap(cs.b_branches, cs.r_branches);
        }
        out.push_back(std::move(cs));
    }
    return out;
}

DiameterInfo diameter_path(const Tree& t) {
    auto farthest = [&](int s) {
        std::vector<int> dist(t.order(), -1);
        std::queue<int> q;
        q.push(s);
        dist[s] = 0;
        int best = s;
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : t.neighbors(v)) {
                if (dist[w] >= 0) continue;
                dist[w] = dist[v] + 1;
                if (dist[w] > dist[best] || (dist[w] == dist[best] && w < best)) best = w;
                q.push(w);
            }
        }
        return std::make_pair(best, dist[best]);
    };
    DiameterInfo info;
    auto [a, da] = farthest(0);
    (void)da;
    auto [b, db] = farthest(a);
    info.endpoint_a = a;
    info.endpoint_b = b;
    info.vertex_count = db + 1;
    return info;
}

}  // namespace isotree
