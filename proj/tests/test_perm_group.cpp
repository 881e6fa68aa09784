#include <doctest.h>

#include <algorithm>
#include <set>

#include "zonodt/errors.hpp"
#include "zonodt/perm_group.hpp"

using namespace zonodt;

TEST_CASE("permutation primitives") {
    CHECK(identity_perm(4) == Perm{0, 1, 2, 3});

    const Perm f{1, 2, 0};  // 0->1->2->0
    const Perm g{1, 0, 2};  // swap 0,1
    CHECK(compose_perms(f, g) == Perm{2, 1, 0});
    CHECK(compose_perms(g, f) == Perm{0, 2, 1});
    CHECK(compose_perms(f, inverse_perm(f)) == identity_perm(3));
    CHECK(inverse_perm(f) == Perm{2, 0, 1});

    CHECK(perm_sign(identity_perm(5)) == 1);
    CHECK(perm_sign(g) == -1);
    CHECK(perm_sign(f) == 1);
    CHECK(perm_sign(Perm{3, 2, 1, 0}) == 1);    // two disjoint swaps
    CHECK(perm_sign(Perm{1, 2, 3, 0}) == -1);   // 4-cycle
}

TEST_CASE("group construction rejects bad generators") {
    CHECK_THROWS_AS(PermGroup(3, {{0, 1}}), ValidationError);
    CHECK_THROWS_AS(PermGroup(3, {{0, 0, 1}}), ValidationError);
    CHECK_THROWS_AS(PermGroup(3, {{0, 1, 3}}), ValidationError);
    CHECK_THROWS_AS(PermGroup(0, {}), ValidationError);
}

TEST_CASE("young subgroups") {
    const PermGroup grp = young_subgroup({2, 3});
    CHECK(grp.degree() == 5);
    CHECK(grp.young_blocks() == std::vector<int>{2, 3});
    CHECK(grp.order(100) == 12);
    CHECK_FALSE(grp.is_full_symmetric());
    CHECK(young_subgroup({4}).is_full_symmetric());
    CHECK(young_subgroup({1, 1, 1}).order(100) == 1);

    const auto elems = grp.elements(100);
    REQUIRE(elems.size() == 12);
    CHECK(std::is_sorted(elems.begin(), elems.end()));
    for (const Perm& p : elems) {
        // Block structure is preserved.
        CHECK(((p[0] < 2) && (p[1] < 2)));
        for (int i = 2; i < 5; ++i) CHECK(p[i] >= 2);
    }
}

TEST_CASE("young fast path agrees with generic closure") {
    const PermGroup young = young_subgroup({2, 2});
    // Same group, but assembled from raw generators (no block tag).
    const PermGroup generic(4, {{1, 0, 2, 3}, {0, 1, 3, 2}});
    CHECK(generic.young_blocks().empty());
    CHECK(young.elements(100) == generic.elements(100));
    CHECK(generic.order(100) == 4);
}

TEST_CASE("full symmetric group from a transposition and a cycle") {
    const PermGroup s4(4, {{1, 0, 2, 3}, {1, 2, 3, 0}});
    CHECK(s4.order(100) == 24);
    // The tag is only set by young_subgroup, generic generators don't carry it.
    CHECK_FALSE(s4.is_full_symmetric());
    CHECK(s4.elements(100) == young_subgroup({4}).elements(100));

    int neg = 0;
    for (const Perm& p : s4.elements(100)) neg += perm_sign(p) < 0;
    CHECK(neg == 12);
}

TEST_CASE("order cap") {
    const PermGroup s5(5, {{1, 0, 2, 3, 4}, {1, 2, 3, 4, 0}});
    CHECK_THROWS_AS(s5.elements(100), CapExceeded);
    CHECK(s5.order(120) == 120);
    CHECK_THROWS_AS(young_subgroup({5}).elements(119), CapExceeded);
}
