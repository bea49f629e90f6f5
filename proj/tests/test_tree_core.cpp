#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <tuple>

#include "isotree/oracle.hpp"
#include "isotree/tree.hpp"

using namespace isotree;

TEST_CASE("parse_edge_list basics") {
    Tree p3 = parse_edge_list("0 1\n1 2");
    CHECK(p3.order() == 3);
    CHECK(p3.degree(1) == 2);

    Tree star = parse_edge_list("0 1\n0 2\n0 3");
    CHECK(star.order() == 4);
    CHECK(star.degree(0) == 3);

    Tree k1 = parse_edge_list("1");
    CHECK(k1.order() == 1);

    Tree commented = parse_edge_list("# a path\n0 1  # first edge\n\n1 2\n");
    CHECK(commented.order() == 3);
}

TEST_CASE("parse_edge_list error kinds are distinct") {
    auto kind_of = [](const std::string& text) {
        try {
            parse_edge_list(text);
        } catch (const ParseError& e) {
            return e.kind();
        }
        FAIL("expected a parse error");
        return ParseError::Kind::MalformedLine;
    };
    CHECK(kind_of("0 1\n2 3") == ParseError::Kind::Disconnected);
    CHECK(kind_of("0 1\n1 2\n2 0") == ParseError::Kind::Cycle);
    CHECK(kind_of("0 1\n1 0") == ParseError::Kind::DuplicateEdge);
    CHECK(kind_of("0 x") == ParseError::Kind::MalformedLine);
    CHECK(kind_of("0 1 2") == ParseError::Kind::MalformedLine);
    CHECK(kind_of("3") == ParseError::Kind::MalformedLine);
    CHECK(kind_of("") == ParseError::Kind::MalformedLine);
    CHECK(kind_of("1 1") == ParseError::Kind::SelfLoop);
}

TEST_CASE("serialize round-trips the canonical form") {
    for (int n = 1; n <= 8; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            std::string text = serialize_edge_list(t);
            CHECK(serialize_edge_list(parse_edge_list(text)) == text);
        }
    }
}

TEST_CASE("closed_neighborhood") {
    Tree p5 = Tree::path(5);
    CHECK(closed_neighborhood(p5, VertexSet::of(5, {2})) == VertexSet::of(5, {1, 2, 3}));
    CHECK(closed_neighborhood(p5, VertexSet(5)) == VertexSet(5));
    Tree star = Tree::star(3);
    CHECK(closed_neighborhood(star, VertexSet::of(4, {0})) == VertexSet::full(4));
}

TEST_CASE("closed_neighborhood is monotone") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        Tree t = random_tree(2 + static_cast<int>(rng() % 12), rng());
        VertexSet a(t.order()), b(t.order());
        for (int v = 0; v < t.order(); ++v) {
            if (rng() % 3 == 0) a.insert(v);
            if (a.contains(v) || rng() % 3 == 0) b.insert(v);
        }
        CHECK(closed_neighborhood(t, a).is_subset_of(closed_neighborhood(t, b)));
    }
}

TEST_CASE("remnant components and order bookkeeping") {
    Tree p7 = Tree::path(7);
    Forest f = remnant(p7, VertexSet::of(7, {3}));
    REQUIRE(f.components.size() == 2);
    CHECK(f.components[0].to_original == std::vector<int>{0, 1});
    CHECK(f.components[1].to_original == std::vector<int>{5, 6});

    Forest whole = remnant(p7, VertexSet(7));
    REQUIRE(whole.components.size() == 1);
    CHECK(whole.components[0].tree.order() == 7);

    Forest single = remnant(p7, VertexSet::of(7, {1, 5}));
    REQUIRE(single.components.size() == 1);
    CHECK(single.components[0].to_original == std::vector<int>{3});
}

TEST_CASE("remnant orders sum to n minus |N[S]|") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        Tree t = random_tree(1 + static_cast<int>(rng() % 14), rng());
        VertexSet s(t.order());
        for (int v = 0; v < t.order(); ++v)
            if (rng() % 4 == 0) s.insert(v);
        int total = 0;
        for (const auto& c : remnant(t, s).components) total += c.tree.order();
        CHECK(total == t.order() - closed_neighborhood(t, s).size());
    }
}

TEST_CASE("centroid") {
    CHECK(centroid(Tree::path(5)) == 2);
    CHECK(centroid(Tree::path(4)) == 1);  // tie broken to lower id
    CHECK(centroid(Tree::star(3)) == 0);
}

TEST_CASE("centroid max component is at most n/2, exhaustively to n = 10") {
    for (int n = 1; n <= 10; ++n)
        for (const Tree& t : enumerate_trees(n))
            CHECK(max_component_after_removal(t, centroid(t)) <= n / 2);
}

namespace {

// Reference: try every edge, measure both sides.
std::vector<KBranch> branches_by_bruteforce(const Tree& t, int k) {
    std::vector<KBranch> out;
    for (auto [u, v] : t.edges()) {
        EdgeSplit s = edge_split(t, u, v);
        if (s.side_x.size() == k) out.push_back({u, v, s.side_x});
        if (s.side_y.size() == k) out.push_back({v, u, s.side_y});
    }
    return out;
}

}  // namespace

TEST_CASE("k_branches on paths") {
    Tree p7 = Tree::path(7);
    BranchReport rep = k_branches(p7, 3);
    REQUIRE(rep.branches.size() == 2);
    CHECK(rep.branches[0].component == VertexSet::of(7, {0, 1, 2}));
    CHECK(rep.branches[0].core_vertex == 3);
    CHECK(rep.branches[1].component == VertexSet::of(7, {4, 5, 6}));
    CHECK(rep.branches[1].core_vertex == 3);
    CHECK(rep.core_vertices == VertexSet::of(7, {3}));

    // P_5 with k = 3: both middle edges split off an order-3 side.
    BranchReport p5 = k_branches(Tree::path(5), 3);
    REQUIRE(p5.branches.size() == 2);
    CHECK(p5.branches[0].branch_vertex == 2);
    CHECK(p5.branches[0].core_vertex == 1);
    CHECK(p5.branches[0].component == VertexSet::of(5, {2, 3, 4}));
    CHECK(p5.branches[1].branch_vertex == 2);
    CHECK(p5.branches[1].core_vertex == 3);
    CHECK(p5.branches[1].component == VertexSet::of(5, {0, 1, 2}));

    CHECK(k_branches(p7, 7).branches.empty());
    CHECK(k_branches(p7, 12).branches.empty());
}

TEST_CASE("k_branches agrees with the per-edge split enumeration") {
    for (int n = 2; n <= 8; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            for (int k = 1; k <= 5; ++k) {
                auto got = k_branches(t, k).branches;
                auto expected = branches_by_bruteforce(t, k);
                REQUIRE(got.size() == expected.size());
                auto key = [](const KBranch& b) {
                    return std::make_tuple(b.branch_vertex, b.core_vertex, b.component.members());
                };
                std::vector<std::tuple<int, int, std::vector<int>>> a, b;
                for (const auto& x : got) a.push_back(key(x));
                for (const auto& x : expected) b.push_back(key(x));
                std::sort(a.begin(), a.end());
                std::sort(b.begin(), b.end());
                CHECK(a == b);
            }
        }
    }
}

TEST_CASE("large_edges") {
    Tree p7 = Tree::path(7);
    CHECK(large_edges(p7, 2) == std::vector<std::pair<int, int>>{{2, 3}, {3, 4}});
    CHECK(large_edges(p7, 3).empty());
    for (int leaves = 2; leaves <= 6; ++leaves)
        for (int k = 1; k <= 4; ++k)
            CHECK(large_edges(Tree::star(leaves), k).empty());
}

TEST_CASE("edge classification: a k-branch edge is never large for n >= 2k+2") {
    for (int n = 2; n <= 9; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            for (int k = 1; k <= 4; ++k) {
                std::set<std::pair<int, int>> large;
                for (auto e : large_edges(t, k)) large.insert(e);
                for (const auto& b : k_branches(t, k).branches) {
                    auto e = std::minmax(b.branch_vertex, b.core_vertex);
                    if (n >= 2 * k + 2) CHECK(!large.count({e.first, e.second}));
                }
            }
        }
    }
}

TEST_CASE("core_subtree_bipartition") {
    // Spider: center 0 carries three pendant paths of two vertices.
    Tree spider = Tree::from_edges(7, {{0, 1}, {1, 2}, {0, 3}, {3, 4}, {0, 5}, {5, 6}});
    auto subtrees = core_subtree_bipartition(spider, 2);
    REQUIRE(subtrees.size() == 1);
    CHECK(subtrees[0].core == VertexSet::of(7, {0}));
    CHECK(subtrees[0].b_side == VertexSet::of(7, {0}));
    CHECK(subtrees[0].r_side.empty());
    CHECK(subtrees[0].b_branches == 3);
    CHECK(subtrees[0].r_branches == 0);

    // Two adjacent core vertices, two 2-branches each.
    Tree twin = Tree::from_edges(
        10, {{0, 1}, {0, 2}, {2, 3}, {0, 4}, {4, 5}, {1, 6}, {6, 7}, {1, 8}, {8, 9}});
    auto twin_subtrees = core_subtree_bipartition(twin, 2);
    REQUIRE(twin_subtrees.size() == 1);
    CHECK(twin_subtrees[0].core == VertexSet::of(10, {0, 1}));
    CHECK(twin_subtrees[0].b_side.size() == 1);
    CHECK(twin_subtrees[0].r_side.size() == 1);
    CHECK(twin_subtrees[0].b_branches == 2);
    CHECK(twin_subtrees[0].r_branches == 2);
    CHECK(twin_subtrees[0].b_side.contains(0));  // tie goes to the smaller id

    // K_{1,3} has no split side of order exactly 2.
    CHECK_THROWS_AS(core_subtree_bipartition(Tree::star(3), 2), PreconditionError);
}

TEST_CASE("core subtrees always report b >= r") {
    for (int n = 4; n <= 9; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (int k = 1; k <= 3; ++k) {
                if (k_branches(t, k).branches.empty()) continue;
                for (const auto& cs : core_subtree_bipartition(t, k))
                    CHECK(cs.b_branches >= cs.r_branches);
            }
}

TEST_CASE("edge_split partitions the tree into connected sides") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 30; ++trial) {
        Tree t = random_tree(2 + static_cast<int>(rng() % 12), rng());
        auto edges = t.edges();
        auto [u, v] = edges[rng() % edges.size()];
        EdgeSplit s = edge_split(t, u, v);
        CHECK(s.side_x.contains(u));
        CHECK(s.side_y.contains(v));
        CHECK(s.side_x.size() + s.side_y.size() == t.order());
        CHECK(!s.side_x.intersects(s.side_y));
        CHECK(components_of(t, s.side_x).size() == 1);
        CHECK(components_of(t, s.side_y).size() == 1);
    }
}

TEST_CASE("dot export mentions every edge") {
    Tree t = Tree::path(4);
    std::string plain = dot_export(t);
    CHECK(plain.find("graph T {") == 0);
    CHECK(plain.find("1 -- 2;") != std::string::npos);
    std::vector<int> classes = {1, 2, 1, 2};
    std::string colored = dot_export(t, &classes);
    CHECK(colored.find("fillcolor") != std::string::npos);
}
