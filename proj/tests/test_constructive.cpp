#include <doctest.h>

#include <random>
#include <set>

#include "isotree/constructive.hpp"
#include "isotree/exact_dp.hpp"
#include "isotree/families.hpp"
#include "isotree/oracle.hpp"

using namespace isotree;

TEST_CASE("small_components") {
    Tree p7 = Tree::path(7);
    CHECK(small_components(p7, VertexSet::of(7, {3}), 3) == VertexSet::of(7, {0, 1, 5, 6}));
    CHECK(small_components(Tree::path(3), VertexSet(3), 5) == VertexSet::full(3));
    CHECK(small_components(p7, VertexSet::full(7), 3) == VertexSet(7));
}

TEST_CASE("base case picks the centroid") {
    ConstructiveResult r = independent_allk_set(Tree::path(5), 3);
    CHECK(r.set == VertexSet::of(5, {2}));
    REQUIRE(r.trace.size() == 1);
    CHECK(r.trace[0].proof_case == ProofCase::BaseSmall);
}

TEST_CASE("extremal trees force the exact bound") {
    // Base P_2, a pendant P_2 on each base vertex, k = 2: order 6 and the
    // minimum independent all-2-isolating set has size exactly 6/3 = 2.
    ExtremalRecipe recipe;
    recipe.base = Tree::path(2);
    recipe.k = 2;
    recipe.attachments = {{Tree::path(2), 0}, {Tree::path(2), 0}};
    Tree t = gen_extremal(recipe);
    CHECK(t.order() == 6);
    CHECK(min_isolating_set(t, IsolationSpec::all_k(2), true).value == 2);
    ConstructiveResult r = independent_allk_set(t, 2);
    CHECK(r.set.size() == 2);
}

TEST_CASE("theorem exception and k = 1 routing") {
    CHECK_THROWS_AS(independent_allk_set(Tree::path(3), 3), TheoremException);
    CHECK_THROWS_AS(independent_allk_set(Tree::path(5), 1), PreconditionError);
}

TEST_CASE("exhaustive check to n = 9 with trace invariants") {
    std::set<ProofCase> seen;
    for (int n = 1; n <= 9; ++n) {
        for (const Tree& t : enumerate_trees(n)) {
            for (int k = 2; k <= 6; ++k) {
                if (n == k) continue;
                ConstructiveResult r = independent_allk_set(t, k);
                CHECK(is_independent(t, r.set));
                CHECK(is_isolating(t, r.set, IsolationSpec::all_k(k)).valid);
                CHECK(r.set.size() <= n / (k + 1));
                for (const auto& st : r.trace) {
                    seen.insert(st.proof_case);
                    if (st.proof_case == ProofCase::Case2b) CHECK(st.psi >= 0);
                    int j_size = st.chosen.size();
                    if (st.proof_case != ProofCase::BaseSmall &&
                        st.proof_case != ProofCase::Case1a)
                        CHECK(st.t_j >= (k + 1) * j_size);
                }
            }
        }
    }
    CHECK(seen.count(ProofCase::Case1b));
    CHECK(seen.count(ProofCase::Case2a));
    CHECK(seen.count(ProofCase::Case2b));
}

TEST_CASE("construction is an upper bound for the independent optimum") {
    for (int n = 1; n <= 8; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (int k = 2; k <= 5; ++k) {
                if (n == k) continue;
                CHECK(independent_allk_set(t, k).set.size() >= zeta_k(t, k, true).value);
            }
}

TEST_CASE("randomized larger trees stay within the bound") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 199);
        int k = 2 + static_cast<int>(rng() % 5);
        if (n == k) ++n;
        Tree t = random_tree(n, rng());
        ConstructiveResult r = independent_allk_set(t, k);
        CHECK(is_independent(t, r.set));
        CHECK(is_isolating(t, r.set, IsolationSpec::all_k(k)).valid);
        CHECK(r.set.size() <= n / (k + 1));
    }
}

TEST_CASE("trace sets are disjoint and union to the answer") {
    Tree t = random_tree(60, 2024);
    ConstructiveResult r = independent_allk_set(t, 3);
    VertexSet acc(t.order());
    for (const auto& st : r.trace) {
        CHECK(!acc.intersects(st.chosen));
        acc |= st.chosen;
    }
    CHECK(acc == r.set);
}
