#include <doctest.h>

#include <chrono>
#include <iostream>

#include "isotree/exact_dp.hpp"
#include "isotree/oracle.hpp"

using namespace isotree;

TEST_CASE("dp equals the oracle on all small trees") {
    for (int n = 1; n <= 8; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (int k = 1; k <= 6; ++k)
                for (bool ind : {false, true}) {
                    SolveResult dp = zeta_k(t, k, ind);
                    SolveResult oracle = min_isolating_set(t, IsolationSpec::all_k(k), ind);
                    CHECK(dp.value == oracle.value);
                }
}

TEST_CASE("the centroid of P_{2k+1} is a singleton solution") {
    for (int k = 2; k <= 5; ++k) CHECK(zeta_k(Tree::path(2 * k + 1), k, false).value == 1);
}

TEST_CASE("order below k needs nothing") {
    for (int k = 2; k <= 6; ++k)
        for (int n = 1; n < k; ++n) {
            SolveResult r = zeta_k(Tree::path(n), k, false);
            CHECK(r.value == 0);
            CHECK(r.witness.empty());
        }
}

TEST_CASE("witnesses certify, respect independence, and match the value") {
    for (int n = 1; n <= 8; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (int k = 1; k <= 5; ++k)
                for (bool ind : {false, true}) {
                    SolveResult r = zeta_k(t, k, ind);
                    CHECK(is_isolating(t, r.witness, IsolationSpec::all_k(k)).valid);
                    CHECK(r.witness.size() == r.value);
                    if (ind) CHECK(is_independent(t, r.witness));
                }
}

TEST_CASE("value is non-increasing in k") {
    for (int n = 1; n <= 8; ++n)
        for (const Tree& t : enumerate_trees(n))
            for (bool ind : {false, true})
                for (int k = 1; k <= 5; ++k)
                    CHECK(zeta_k(t, k + 1, ind).value <= zeta_k(t, k, ind).value);
}

TEST_CASE("k = 1 is domination") {
    // gamma(P_n) = ceil(n/3)
    for (int n = 1; n <= 12; ++n)
        CHECK(zeta_k(Tree::path(n), 1, false).value == (n + 2) / 3);
    CHECK(zeta_k(Tree::star(5), 1, false).value == 1);
    CHECK(zeta_k(Tree::path(4), 1, true).value == 2);
}

TEST_CASE("table and reconstruct are exposed separately") {
    Tree t = Tree::path(9);
    DpTable table = solve_table(t, 3, true);
    VertexSet witness = reconstruct_witness(table);
    CHECK(is_isolating(t, witness, IsolationSpec::all_k(3)).valid);
    CHECK(is_independent(t, witness));
}

TEST_CASE("deep path and large random tree stay fast") {
    // Explicit-stack traversal: a 10^5-vertex path must not overflow, and a
    // random tree of the same size should solve in seconds.
    auto start = std::chrono::steady_clock::now();
    Tree path = Tree::path(100000);
    SolveResult rp = zeta_k(path, 5, true);
    CHECK(rp.value > 0);
    CHECK(is_isolating(path, rp.witness, IsolationSpec::all_k(5)).valid);

    Tree t = random_tree(100000, 777);
    SolveResult r = zeta_k(t, 5, true);
    CHECK(r.value > 0);
    CHECK(is_isolating(t, r.witness, IsolationSpec::all_k(5)).valid);
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    CHECK(secs < 20.0);
    std::cout << "n=1e5 path+random solve with witnesses: " << secs << "s\n";
}
