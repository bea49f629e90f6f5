#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <map>
#include <random>
#include <set>

#include "isotree/oracle.hpp"

using namespace isotree;

TEST_CASE("min_isolating_set on paths") {
    Tree p7 = Tree::path(7);
    SolveResult r3 = min_isolating_set(p7, IsolationSpec::all_k(3), false);
    CHECK(r3.value == 1);
    CHECK(is_isolating(p7, r3.witness, IsolationSpec::all_k(3)).valid);

    SolveResult r2 = min_isolating_set(p7, IsolationSpec::all_k(2), false);
    CHECK(r2.value == 2);

    // order below k: the empty set already isolates
    SolveResult r0 = min_isolating_set(Tree::path(3), IsolationSpec::all_k(5), false);
    CHECK(r0.value == 0);
    CHECK(r0.witness.empty());
}

TEST_CASE("oracle witnesses always re-certify") {
    for (int n = 1; n <= 7; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (int k = 1; k <= 4; ++k)
                for (bool ind : {false, true}) {
                    SolveResult r = min_isolating_set(t, IsolationSpec::all_k(k), ind);
                    CHECK(is_isolating(t, r.witness, IsolationSpec::all_k(k)).valid);
                    CHECK(r.witness.size() == r.value);
                    if (ind) CHECK(is_independent(t, r.witness));
                }
}

TEST_CASE("independent optimum dominates the plain optimum") {
    for (int n = 1; n <= 8; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (int k = 1; k <= 4; ++k)
                CHECK(min_isolating_set(t, IsolationSpec::all_k(k), true).value >=
                      min_isolating_set(t, IsolationSpec::all_k(k), false).value);
}

TEST_CASE("tree bound holds for every pattern of order at most 4") {
    std::vector<Tree> patterns;
    for (int k = 2; k <= 4; ++k)
        for (const Tree& f : enumerate_trees(k)) patterns.push_back(f);
    for (const Tree& f : patterns) {
        int k = f.order();
        IsolationSpec spec = IsolationSpec::pattern(f);
        for (int n = 1; n <= 8; ++n) {
            if (n == k) continue;
            for (const Tree& t : enumerate_trees(n))
                CHECK(min_isolating_set(t, spec, true).value <= n / (k + 1));
        }
    }
}

TEST_CASE("oracle rejects instances above the cap") {
    Tree big = Tree::path(19);
    CHECK_THROWS_AS(min_isolating_set(big, IsolationSpec::all_k(2), false), CapExceeded);
    Tree mid = Tree::path(15);
    CHECK_THROWS_AS(min_isolating_set(mid, IsolationSpec::pattern(Tree::path(2)), false),
                    CapExceeded);
    CHECK_NOTHROW(min_isolating_set(mid, IsolationSpec::all_k(2), false));
}

TEST_CASE("max_disjoint_isolating_sets on P_6") {
    Tree p6 = Tree::path(6);
    DisjointFamilyResult r = max_disjoint_isolating_sets(p6, IsolationSpec::all_k(2), 3);
    CHECK(r.count == 3);
    REQUIRE(r.family.size() == 3);
    for (std::size_t i = 0; i < r.family.size(); ++i) {
        CHECK(is_isolating(p6, r.family[i], IsolationSpec::all_k(2)).valid);
        for (std::size_t j = i + 1; j < r.family.size(); ++j)
            CHECK(!r.family[i].intersects(r.family[j]));
    }
    // Exhaustive: no fourth disjoint all-2-isolating set exists in P_6.
    CHECK(max_disjoint_isolating_sets(p6, IsolationSpec::all_k(2), 4).count == 3);
    // The full vertex set always isolates, so at least one set exists.
    CHECK(max_disjoint_isolating_sets(Tree::path(4), IsolationSpec::all_k(2), 1).count == 1);
    CHECK_THROWS_AS(max_disjoint_isolating_sets(Tree::path(14), IsolationSpec::all_k(2), 2),
                    CapExceeded);
}

TEST_CASE("enumerate_trees reproduces the free-tree counts") {
    const std::vector<std::size_t> counts = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106};
    for (int n = 1; n <= 10; ++n) CHECK(enumerate_trees(n).size() == counts[n - 1]);
    CHECK_THROWS_AS(enumerate_trees(11), CapExceeded);
    // Pairwise non-isomorphic.
    for (int n = 1; n <= 8; ++n) {
        std::set<std::string> forms;
        for (const Tree& t : enumerate_trees(n)) forms.insert(canonical_form(t));
        CHECK(forms.size() == counts[n - 1]);
    }
}

TEST_CASE("enumeration matches a full Pruefer sweep at n = 7") {
    // Decode all 7^5 sequences; count classes by pairwise isomorphism tests
    // against the representatives (equal order + mutual containment).
    std::vector<Tree> reps;
    std::vector<int> seq(5, 0);
    bool done = false;
    while (!done) {
        Tree t = tree_from_pruefer(seq);
        bool known = false;
        for (const Tree& r : reps)
            if (subtree_contains(r, t) && subtree_contains(t, r)) { known = true; break; }
        if (!known) reps.push_back(t);
        int pos = 0;
        while (pos < 5 && ++seq[pos] == 7) seq[pos++] = 0;
        done = pos == 5;
    }
    CHECK(reps.size() == enumerate_trees(7).size());
}

TEST_CASE("canonical_form invariance and separation") {
    CHECK(canonical_form(Tree::from_edges(3, {{0, 1}, {1, 2}})) ==
          canonical_form(Tree::from_edges(3, {{2, 0}, {0, 1}})));
    CHECK(canonical_form(Tree::path(4)) != canonical_form(Tree::star(3)));

    std::mt19937_64 rng(5150);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 9);
        Tree t = random_tree(n, rng());
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        std::shuffle(perm.begin(), perm.end(), rng);
        std::vector<std::pair<int, int>> edges;
        for (auto [u, v] : t.edges()) edges.emplace_back(perm[u], perm[v]);
        CHECK(canonical_form(t) == canonical_form(Tree::from_edges(n, edges)));
    }
}

TEST_CASE("random_tree determinism and distribution") {
    CHECK(random_tree(2, 17).edges() == std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(random_tree(9, 12345) == random_tree(9, 12345));

    // n = 5: compare sampled bucket frequencies against the exact
    // distribution over all 5^3 Pruefer sequences.
    std::map<std::string, int> exact;
    for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b)
            for (int c = 0; c < 5; ++c) exact[serialize_edge_list(tree_from_pruefer({a, b, c}))]++;
    std::map<std::string, int> sampled;
    const int samples = 10000;
    for (int i = 0; i < samples; ++i) sampled[serialize_edge_list(random_tree(5, 900 + i))]++;
    for (const auto& [key, count] : exact) {
        double p = count / 125.0;
        double expect = samples * p;
        double sigma = std::sqrt(samples * p * (1 - p));
        CHECK(std::abs(sampled[key] - expect) <= 5 * sigma);
    }

    // n = 9: the probability that vertex 0 is a leaf is (8/9)^7 exactly.
    int leaf0 = 0;
    for (int i = 0; i < samples; ++i)
        if (random_tree(9, 40000 + i).degree(0) == 1) ++leaf0;
    double p = std::pow(8.0 / 9.0, 7);
    double sigma = std::sqrt(samples * p * (1 - p));
    CHECK(std::abs(leaf0 - samples * p) <= 5 * sigma);
}
