#include <doctest.h>

#include <random>

#include "isotree/families.hpp"
#include "isotree/oracle.hpp"

using namespace isotree;

TEST_CASE("gen_extremal") {
    ExtremalRecipe p3_recipe;
    p3_recipe.base = Tree();  // K_1
    p3_recipe.k = 2;
    p3_recipe.attachments = {{Tree::path(2), 0}};
    Tree p3 = gen_extremal(p3_recipe);
    CHECK(canonical_form(p3) == canonical_form(Tree::path(3)));
    CHECK(min_isolating_set(p3, IsolationSpec::all_k(2), false).value == 1);

    ExtremalRecipe order8;
    order8.base = Tree::path(2);
    order8.k = 3;
    order8.attachments = {{Tree::path(3), 0}, {Tree::path(3), 0}};
    Tree t8 = gen_extremal(order8);
    CHECK(t8.order() == 8);
    CHECK(min_isolating_set(t8, IsolationSpec::all_k(3), false).value == 2);

    ExtremalRecipe wrong;
    wrong.base = Tree();
    wrong.k = 3;
    wrong.attachments = {{Tree::path(2), 0}};
    CHECK_THROWS_AS(gen_extremal(wrong), PreconditionError);
}

TEST_CASE("generated extremal trees are members of the family") {
    std::mt19937_64 rng(808);
    for (int trial = 0; trial < 40; ++trial) {
        int k = 2 + static_cast<int>(rng() % 3);
        auto shapes = enumerate_trees(k);
        ExtremalRecipe recipe;
        recipe.k = k;
        int base_n = 1 + static_cast<int>(rng() % 4);
        recipe.base = random_tree(base_n, rng());
        for (int i = 0; i < base_n; ++i) {
            const Tree& shape = shapes[rng() % shapes.size()];
            recipe.attachments.push_back({shape, static_cast<int>(rng() % k)});
        }
        Tree t = gen_extremal(recipe);
        CHECK(t.order() == base_n * (k + 1));
        TkResult m = is_member_Tk(t, k);
        CHECK(m.member);
    }
}

TEST_CASE("is_member_Tk") {
    TkResult p3 = is_member_Tk(Tree::path(3), 2);
    CHECK(p3.member);
    REQUIRE(p3.decomposition.has_value());
    CHECK(p3.decomposition->base.size() == 1);
    REQUIRE(p3.decomposition->attachments.size() == 1);
    CHECK(p3.decomposition->attachments[0].vertices.size() == 2);

    CHECK(!is_member_Tk(Tree::path(4), 2).member);  // divisibility
    CHECK(!is_member_Tk(Tree::star(5), 2).member);

    // Order-6 trees: membership coincides with hitting the oracle bound.
    for (const Tree& t : enumerate_trees(6)) {
        bool member = is_member_Tk(t, 2).member;
        bool extremal = min_isolating_set(t, IsolationSpec::all_k(2), false).value == 2;
        CHECK(member == extremal);
    }
}

TEST_CASE("Tk decompositions are structurally sound") {
    for (const Tree& t : enumerate_trees(9)) {
        TkResult r = is_member_Tk(t, 2);
        if (!r.member) continue;
        const TkDecomposition& d = *r.decomposition;
        int covered = d.base.size();
        for (const auto& att : d.attachments) {
            covered += att.vertices.size();
            CHECK(att.vertices.size() == 2);
            CHECK(d.base.contains(att.owner));
            CHECK(att.vertices.contains(att.attach_vertex));
            CHECK(t.has_edge(att.owner, att.attach_vertex));
            // pendant: exactly one edge leaves the attachment
            int crossing = 0;
            for (int v : att.vertices.members())
                for (int w : t.neighbors(v))
                    if (!att.vertices.contains(w)) ++crossing;
            CHECK(crossing == 1);
        }
        CHECK(covered == t.order());
    }
}

TEST_CASE("gen_counterexample_Hk") {
    HkTree h7 = gen_counterexample_Hk(7);
    CHECK(h7.tree.order() == 10);
    CHECK(h7.tree.degree(h7.center) == 3);
    CHECK(h7.tree.degree(h7.attach_end) == 1);

    HkTree h8 = gen_counterexample_Hk(8);
    CHECK(h8.tree.order() == 12);
    // legs of lengths 4, 4, 3
    std::vector<int> leg_lengths;
    for (int w : h8.tree.neighbors(h8.center)) {
        int len = 0, prev = h8.center, cur = w;
        while (cur >= 0) {
            ++len;
            int next = -1;
            for (int u : h8.tree.neighbors(cur))
                if (u != prev) next = u;
            prev = cur;
            cur = next;
        }
        leg_lengths.push_back(len);
    }
    std::sort(leg_lengths.begin(), leg_lengths.end());
    CHECK(leg_lengths == std::vector<int>{3, 4, 4});

    CHECK_THROWS_AS(gen_counterexample_Hk(6), PreconditionError);
}

TEST_CASE("verify_Hk_key_observation") {
    HkReport r7 = verify_Hk_key_observation(7, Tree());
    CHECK(r7.certificate.valid);
    CHECK(r7.min_in_hk == 2);
    CHECK(r7.disjoint_bound == 7);
    CHECK(r7.hk_order == 10);
    CHECK(r7.privileged.size() == 5);

    HkReport r8 = verify_Hk_key_observation(8, Tree());
    CHECK(r8.certificate.valid);
    CHECK(r8.disjoint_bound == 8);

    // A slightly larger host keeps the observation intact.
    HkReport r7b = verify_Hk_key_observation(7, Tree::path(2));
    CHECK(r7b.certificate.valid);

    CHECK_THROWS_AS(verify_Hk_key_observation(9, Tree()), PreconditionError);
    CHECK_THROWS_AS(verify_Hk_key_observation(7, Tree::path(5)), CapExceeded);
}

TEST_CASE("gen_gap_gadget") {
    GapGadgetRecipe recipe;
    recipe.pattern = Tree::path(2);
    recipe.root = 0;
    recipe.b = 2;
    Tree g2 = gen_gap_gadget(recipe);
    CHECK(g2.order() == 10);
    IsolationSpec spec = IsolationSpec::pattern(Tree::path(2));
    CHECK(min_isolating_set(g2, spec, false).value == 2);
    CHECK(min_isolating_set(g2, spec, true).value == 3);

    recipe.b = 3;
    Tree g3 = gen_gap_gadget(recipe);
    CHECK(g3.order() == 14);
    CHECK(min_isolating_set(g3, spec, true).value == 4);

    recipe.b = 1;
    CHECK(gen_gap_gadget(recipe).order() == 6);

    recipe.b = 0;
    CHECK_THROWS_AS(gen_gap_gadget(recipe), PreconditionError);
}

TEST_CASE("gap between the two isolation numbers grows with b") {
    IsolationSpec spec = IsolationSpec::pattern(Tree::path(2));
    for (int b = 2; b <= 3; ++b) {
        GapGadgetRecipe recipe;
        recipe.pattern = Tree::path(2);
        recipe.b = b;
        Tree g = gen_gap_gadget(recipe);
        int plain = min_isolating_set(g, spec, false).value;
        int indep = min_isolating_set(g, spec, true).value;
        CHECK(indep - plain == b - 1);
    }
}
