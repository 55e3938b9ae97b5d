#include <doctest.h>

#include <map>
#include <numeric>
#include <set>

#include "common.hpp"

using namespace gti;
using namespace gti::testing;

TEST_CASE("cyclic groups") {
    GroupPtr z6 = FiniteGroup::cyclic(6);
    CHECK(z6->order() == 6);
    CHECK(z6->identity() == 0);
    CHECK(z6->mul(4, 5) == 3);
    CHECK(z6->inv(2) == 4);
    CHECK(z6->power(5, 7) == 5);
    CHECK(z6->power(2, -1) == 4);
    CHECK(z6->element_order(1) == 6);
    CHECK(z6->element_order(3) == 2);
    CHECK(z6->is_cyclic_canonical());
    CHECK(FiniteGroup::trivial()->order() == 1);
}

TEST_CASE("bad multiplication table is rejected") {
    // row 1 is not a bijection
    CHECK_THROWS_AS(FiniteGroup::from_mul_table({{0, 1}, {1, 1}}), ValidationError);
    // not associative: "multiplication" by lookup in a latin square that is no group
    CHECK_THROWS_AS(FiniteGroup::from_mul_table({{0, 1, 2, 3, 4},
                                                 {1, 0, 3, 4, 2},
                                                 {2, 4, 0, 1, 3},
                                                 {3, 2, 4, 0, 1},
                                                 {4, 3, 1, 2, 0}}),
                    ValidationError);
}

TEST_CASE("permutation closure") {
    GroupPtr s3 = make_s3();
    REQUIRE(s3->order() == 6);
    CHECK_FALSE(s3->is_cyclic_canonical());
    std::multiset<int> orders;
    for (Elem x = 0; x < 6; ++x) orders.insert(s3->element_order(x));
    CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 3});

    CHECK(make_d4()->order() == 8);
    CHECK(make_a4()->order() == 12);

    GroupPtr q8 = make_q8();
    REQUIRE(q8->order() == 8);
    std::multiset<int> q8_orders;
    for (Elem x = 0; x < 8; ++x) q8_orders.insert(q8->element_order(x));
    CHECK(q8_orders == std::multiset<int>{1, 2, 4, 4, 4, 4, 4, 4}); // only -1 has order two

    CHECK_THROWS_AS(group_from_permutations(8, {{1, 2, 3, 0, 5, 6, 7, 4}, {4, 7, 6, 5, 2, 1, 0, 3}}, 4),
                    SizeLimitError);
}

TEST_CASE("conjugation and classes") {
    GroupPtr s3 = make_s3();
    ClassDecomposition classes = conjugacy_classes(s3);
    std::multiset<int> sizes;
    std::map<Elem, int> count;
    for (Elem x = 0; x < 6; ++x) ++count[classes.rep_of[x]];
    for (auto& [rep, n] : count) sizes.insert(n);
    CHECK(sizes == std::multiset<int>{1, 2, 3});
    CHECK(classes.representatives.size() == 3);
    CHECK(conjugacy_classes(make_d4()).representatives.size() == 5);
    CHECK(conjugacy_classes(make_q8()).representatives.size() == 5);
    CHECK(conjugacy_classes(make_a4()).representatives.size() == 4);

    for (Elem x = 0; x < 6; ++x)
        for (Elem g = 0; g < 6; ++g)
            CHECK(s3->conj(x, g) == s3->mul(s3->mul(x, g), s3->inv(x)));

    GroupPtr d4 = make_d4();
    Elem r = element_of_order(d4, 4);
    CHECK(centralizer(d4, r).size() == 4);
    Elem r2 = d4->mul(r, r);
    Subgroup klein = klein_in_d4(d4);
    for (Elem refl : klein.elements())
        if (refl != 0 && refl != r2) CHECK(centralizer(d4, refl).size() == 4);
    CHECK(centralizer(d4, r2).size() == 8);
    CHECK(centralizer(d4, d4->identity()).size() == 8);
}

TEST_CASE("subgroups") {
    GroupPtr s3 = make_s3();
    Subgroup a3 = subgroup_closure(s3, {element_of_order(s3, 3)});
    CHECK(a3.size() == 3);
    CHECK(a3.contains(0));
    CHECK(a3.local_index(a3.elements()[1]) == 1);
    CHECK_THROWS_AS(a3.local_index(element_of_order(s3, 2)), ContractError);
    CHECK(Subgroup::full(s3).size() == 6);
    CHECK(Subgroup::trivial(s3).size() == 1);
    CHECK(klein_in_d4(make_d4()).size() == 4);
}

TEST_CASE("direct products") {
    GroupPtr s3 = make_s3();
    GroupPtr z2 = FiniteGroup::cyclic(2);
    DirectProduct prod = direct_product(s3, z2);
    CHECK(prod.group->order() == 12);
    for (Elem a = 0; a < 6; ++a)
        for (Elem b = 0; b < 2; ++b) {
            Elem x = prod.pair(a, b);
            CHECK(prod.unpair(x) == std::pair<Elem, Elem>{a, b});
            CHECK(prod.proj_left(x) == a);
            CHECK(prod.proj_right(x) == b);
        }
    CHECK(prod.group->mul(prod.pair(1, 1), prod.pair(2, 1)) == prod.pair(s3->mul(1, 2), 0));
    CHECK(prod.inj_left(3) == prod.pair(3, 0));
    CHECK(prod.inj_right(1) == prod.pair(0, 1));

    DirectProduct sq = direct_product(z2, z2);
    CHECK(diagonal_subgroup(sq).size() == 2);
}

TEST_CASE("homomorphism validation") {
    GroupPtr s3 = make_s3();
    GroupPtr z2 = FiniteGroup::cyclic(2);
    std::vector<Elem> sign(6);
    for (Elem x = 0; x < 6; ++x) sign[x] = s3->element_order(x) == 2 ? 1 : 0;
    CHECK_NOTHROW(GroupHom(s3, z2, sign));
    std::vector<Elem> bad = sign;
    bad[0] = 1;
    CHECK_THROWS_AS(GroupHom(s3, z2, bad), ValidationError);

    GroupPtr a4 = make_a4();
    Subgroup v4(a4, involutions(a4));
    GroupHom q = quotient_to_cyclic(a4, v4);
    CHECK(q.target->order() == 3);
    for (Elem x : v4.elements()) CHECK(q(x) == 0);
}

TEST_CASE("cosets and stabilizers") {
    GroupPtr s3 = make_s3();
    Subgroup a3 = subgroup_closure(s3, {element_of_order(s3, 3)});
    CosetDecomposition cosets = right_cosets(s3, a3);
    CHECK(cosets.representatives == std::vector<Elem>{0, 1});
    for (Elem x = 0; x < 6; ++x) CHECK(cosets.rep_of[x] == (a3.contains(x) ? 0 : 1));

    Subgroup t = subgroup_closure(s3, {element_of_order(s3, 2)});
    CosetDecomposition tcosets = right_cosets(s3, t);
    CHECK(tcosets.representatives.size() == 3);
    // S3 = T u T g T for any 3-cycle g: two double cosets
    DoubleCosetDecomposition dc = double_cosets(s3, t);
    CHECK(dc.representatives.size() == 2);
    CHECK(dc.representatives[0] == 0);

    for (Elem g : dc.representatives) {
        Subgroup s = stabilizer_of_coset(s3, t, g);
        for (Elem h : s.elements()) {
            CHECK(t.contains(h));
            CHECK(tcosets.rep_of[s3->mul(h, g)] == tcosets.rep_of[g]);
        }
        std::vector<Elem> coset = coset_elements(s3, t, g);
        CHECK(std::is_sorted(coset.begin(), coset.end()));
        CHECK(static_cast<int>(coset.size()) == t.size());

        auto orbits = adjoint_orbit_representatives(s, coset);
        int total = 0;
        for (const auto& o : orbits) {
            CHECK(o.orbit_size * o.stabilizer_size == s.size());
            total += o.orbit_size;
        }
        CHECK(total == static_cast<int>(coset.size()));
    }
}
