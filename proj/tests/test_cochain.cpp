#include <doctest.h>

#include <array>
#include <random>

#include "common.hpp"
#include "gti/cochain.hpp"

using namespace gti;
using namespace gti::testing;

namespace {

Cochain random_table_cochain(const GroupPtr& g, int arity, int denominator, uint64_t seed) {
    std::mt19937_64 rng(seed);
    Cochain::Table table;
    std::vector<Elem> args(arity);
    auto rec = [&](auto&& self, int pos) -> void {
        if (pos == arity) {
            bool normalized = false;
            for (Elem a : args) normalized = normalized || a == g->identity();
            if (!normalized)
                table[Cochain::pack_key(args)] =
                    UnitScalar::from_exponent(static_cast<long long>(rng() % denominator), denominator);
            return;
        }
        for (args[pos] = 0; args[pos] < g->order(); ++args[pos]) self(self, pos + 1);
    };
    rec(rec, 0);
    return Cochain::from_table(g, arity, std::move(table));
}

} // namespace

TEST_CASE("unit scalars") {
    UnitScalar one = UnitScalar::one();
    CHECK(one.is_one());
    CHECK(UnitScalar::minus_one().pow(2).is_one());
    CHECK(UnitScalar::i() * UnitScalar::i() == UnitScalar::minus_one());
    UnitScalar z = UnitScalar::from_exponent(5, 12);
    CHECK(z.num() == 5);
    CHECK(z.den() == 12);
    CHECK((z * z.inverse()).is_one());
    CHECK(z.pow(12).is_one());
    CHECK(UnitScalar::from_exponent(14, 12) == UnitScalar::from_exponent(1, 6));
    CHECK(UnitScalar::from_exponent(-1, 4) == UnitScalar::i().inverse());
    CHECK(approx(z.value(), std::polar(1.0, 2.0 * 3.14159265358979323846 * 5 / 12), 1e-12));
    CHECK(UnitScalar::from_exponent(1, 2).str() == "1/2");
}

TEST_CASE("basic cochain algebra") {
    GroupPtr z4 = FiniteGroup::cyclic(4);
    Cochain one = Cochain::trivial(z4, 3);
    CHECK(one(1, 2, 3).is_one());
    CHECK(one.arity() == 3);

    Cochain kappa = Cochain::cyclic_kappa(z4);
    CHECK(is_cocycle(kappa));
    // kappa(a,b,c) = e^{2 pi i c(a + b - [a+b]) / 16}
    CHECK(kappa(2, 3, 1) == UnitScalar::from_exponent(4, 16));
    CHECK(kappa(1, 2, 3).is_one());
    CHECK(kappa(3, 3, 3) == UnitScalar::from_exponent(12, 16));
    CHECK(kappa(1, 0, 3).is_one());
    CHECK(is_cocycle(Cochain::cyclic_kappa(z4, 3)));
    CHECK(Cochain::cyclic_kappa(z4, 2)(3, 3, 3) == UnitScalar::from_exponent(24, 16));

    GroupPtr z2 = FiniteGroup::cyclic(2);
    CHECK(Cochain::cyclic_kappa(z2)(1, 1, 1) == UnitScalar::minus_one());

    Cochain prod = kappa * kappa.inverse();
    for (Elem a = 0; a < 4; ++a)
        for (Elem b = 0; b < 4; ++b)
            for (Elem c = 0; c < 4; ++c) CHECK(prod(a, b, c).is_one());
    CHECK(kappa.pow(2)(3, 3, 3) == kappa(3, 3, 3) * kappa(3, 3, 3));
    CHECK(kappa.pow(-1)(3, 3, 3) == kappa(3, 3, 3).inverse());
}

TEST_CASE("tables and keys") {
    GroupPtr z3 = FiniteGroup::cyclic(3);
    std::array<Elem, 2> key{1, 2};
    Cochain::Table table{{Cochain::pack_key(key), UnitScalar::minus_one()}};
    Cochain c = Cochain::from_table(z3, 2, table);
    CHECK(c(1, 2) == UnitScalar::minus_one());
    CHECK(c(2, 1).is_one()); // absent entries default to one

    std::array<Elem, 3> a{1, 2, 3}, b{1, 2, 4};
    CHECK(Cochain::pack_key(a) != Cochain::pack_key(b));

    Cochain k = Cochain::cyclic_kappa(z3);
    Cochain::Table dense = k.materialize_table();
    std::array<Elem, 3> probe{2, 2, 2};
    CHECK(dense.at(Cochain::pack_key(probe)) == k(2, 2, 2));
}

TEST_CASE("coboundaries square to zero") {
    GroupPtr s3 = make_s3();
    for (uint64_t seed : {1u, 2u}) {
        Cochain theta = random_table_cochain(s3, 1, 8, seed);
        Cochain beta = theta.boundary();
        CHECK(beta.arity() == 2);
        // d(theta)(g,h) = theta(h) theta(gh)^-1 theta(g)
        for (Elem g = 0; g < 6; ++g)
            for (Elem h = 0; h < 6; ++h)
                CHECK(beta(g, h) == theta(h) * theta(s3->mul(g, h)).inverse() * theta(g));
        CHECK(is_cocycle(beta));

        Cochain eta = random_table_cochain(s3, 2, 8, seed + 10);
        Cochain omega = eta.boundary();
        // d(eta)(g,h,k) = eta(h,k) eta(gh,k)^-1 eta(g,hk) eta(g,h)^-1
        for (Elem g = 0; g < 6; ++g)
            for (Elem h = 0; h < 6; ++h)
                for (Elem k = 0; k < 6; ++k)
                    CHECK(omega(g, h, k) == eta(h, k) * eta(s3->mul(g, h), k).inverse() *
                                                eta(g, s3->mul(h, k)) * eta(g, h).inverse());
        CHECK(is_cocycle(omega));
    }
}

TEST_CASE("inflation") {
    GroupPtr s3 = make_s3();
    GroupPtr z2 = FiniteGroup::cyclic(2);
    std::vector<Elem> sign(6);
    for (Elem x = 0; x < 6; ++x) sign[x] = s3->element_order(x) == 2 ? 1 : 0;
    GroupHom p(s3, z2, sign);
    Cochain omega = Cochain::inflate(Cochain::cyclic_kappa(z2), p);
    CHECK(is_cocycle(omega));
    for (Elem a = 0; a < 6; ++a)
        for (Elem b = 0; b < 6; ++b)
            for (Elem c = 0; c < 6; ++c)
                CHECK(omega(a, b, c) == Cochain::cyclic_kappa(z2)(sign[a], sign[b], sign[c]));
    Subgroup a3 = subgroup_closure(s3, {element_of_order(s3, 3)});
    CHECK(is_adapted(omega, a3));
    CHECK(is_trivial_on(omega, a3));
    CHECK_FALSE(is_adapted(omega, Subgroup::full(s3)));
}

TEST_CASE("doubled cocycle") {
    GroupPtr z2 = FiniteGroup::cyclic(2);
    DirectProduct prod = direct_product(z2, z2);
    Cochain kappa = Cochain::cyclic_kappa(z2);
    Cochain dbl = Cochain::double_cocycle(kappa, prod);
    CHECK(is_cocycle(dbl));
    for (Elem x : {0, 1})
        for (Elem f : {0, 1})
            for (Elem y : {0, 1})
                for (Elem g = 0; g < 2; ++g)
                    for (Elem z = 0; z < 2; ++z)
                        for (Elem h = 0; h < 2; ++h)
                            CHECK(dbl(prod.pair(x, f), prod.pair(y, g), prod.pair(z, h)) ==
                                  kappa(x, y, z) * kappa(f, g, h).inverse());
    CHECK(is_trivial_on(dbl, diagonal_subgroup(prod)));
}

TEST_CASE("memoized evaluation agrees") {
    GroupPtr z8 = FiniteGroup::cyclic(8);
    Cochain k = Cochain::cyclic_kappa(z8, 3);
    Cochain m = k.memoized();
    for (Elem a = 0; a < 8; ++a)
        for (Elem b = 0; b < 8; ++b)
            for (Elem c = 0; c < 8; ++c) CHECK(m(a, b, c) == k(a, b, c));
}

TEST_CASE("coboundary solving") {
    GroupPtr s3 = make_s3();
    Subgroup full = Subgroup::full(s3);

    Cochain theta0 = random_table_cochain(s3, 1, 8, 42);
    auto theta = solve_coboundary(theta0.boundary(), full);
    REQUIRE(theta.has_value());
    Cochain check = theta->boundary();
    for (Elem g = 0; g < 6; ++g)
        for (Elem h = 0; h < 6; ++h) CHECK(check(g, h) == theta0.boundary()(g, h));

    auto trivial = solve_coboundary(Cochain::trivial(s3, 2), full);
    REQUIRE(trivial.has_value());
    for (Elem g = 0; g < 6; ++g)
        for (Elem h = 0; h < 6; ++h) CHECK(trivial->boundary()(g, h).is_one());

    // the nontrivial pairing class on Z2 x Z2 has no primitive
    GroupPtr z2 = FiniteGroup::cyclic(2);
    DirectProduct prod = direct_product(z2, z2);
    Cochain::Table entries;
    for (Elem x : {1, 3})
        for (Elem y : {2, 3}) {
            std::array<Elem, 2> key{x, y};
            entries.emplace(Cochain::pack_key(key), UnitScalar::minus_one());
        }
    Cochain pairing = Cochain::from_table(prod.group, 2, std::move(entries));
    CHECK(is_cocycle(pairing));
    CHECK_FALSE(solve_coboundary(pairing, Subgroup::full(prod.group)).has_value());
}

TEST_CASE("prime power linear solver") {
    // x + 2y = 3, 2x + 3y = 1 over Z/8
    auto sol = solve_mod_prime_power({{1, 2}, {2, 3}}, {3, 1}, 2, 8);
    REQUIRE(sol.has_value());
    CHECK(((*sol)[0] + 2 * (*sol)[1]) % 8 == 3);
    CHECK((2 * (*sol)[0] + 3 * (*sol)[1]) % 8 == 1);
    // 2x = 1 has no solution mod 8
    CHECK_FALSE(solve_mod_prime_power({{2}}, {1}, 2, 8).has_value());
    // 2x = 6 does
    auto sol2 = solve_mod_prime_power({{2}}, {6}, 2, 8);
    REQUIRE(sol2.has_value());
    CHECK((2 * (*sol2)[0]) % 8 == 6);
}
