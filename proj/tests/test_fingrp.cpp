#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "modcat/fingrp.hpp"
#include "modcat/error.hpp"

using namespace modcat;

namespace {

// Quaternion group of order 8 as +-{1,i,j,k}: indices 1,i,j,k,-1,-i,-j,-k.
FiniteGroup quaternion8() {
    // sign bit s in {0,1}, symbol in {1,i,j,k}
    auto mul = [](int a, int b) {
        int sa = a / 4, xa = a % 4, sb = b / 4, xb = b % 4;
        static const int sym[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
        static const int sgn[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
        int x = sym[xa][xb];
        int s = (sa + sb + sgn[xa][xb]) % 2;
        return s * 4 + x;
    };
    std::vector<std::vector<long long>> t(8, std::vector<long long>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
    return FiniteGroup::from_table(t);
}

FiniteGroup dihedral8() {
    // r^4 = s^2 = 1, s r s = r^-1; index = s*4 + r
    auto mul = [](int a, int b) {
        int ra = a % 4, sa = a / 4, rb = b % 4, sb = b / 4;
        // (r^ra s^sa)(r^rb s^sb) = r^(ra + rb*(-1)^sa) s^(sa+sb)
        int r = ((ra + (sa ? -rb : rb)) % 4 + 4) % 4;
        int s = (sa + sb) % 2;
        return s * 4 + r;
    };
    std::vector<std::vector<long long>> t(8, std::vector<long long>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
    return FiniteGroup::from_table(t);
}

} // namespace

TEST_CASE("abelian groups have singleton classes") {
    FiniteGroup g = FiniteGroup::cyclic(6);
    CHECK(g.is_abelian());
    CHECK(g.conj_classes().size() == 6);
    CHECK(g.exponent() == 6);
}

TEST_CASE("quaternion group has 5 classes, center of dihedral has order 2") {
    FiniteGroup q8 = quaternion8();
    CHECK(q8.size() == 8);
    CHECK(!q8.is_abelian());
    CHECK(q8.conj_classes().size() == 5);
    FiniteGroup d8 = dihedral8();
    CHECK(d8.center().size() == 2);
    // |class| * |centralizer| = |G|
    for (const auto& cl : q8.conj_classes())
        CHECK((long long)cl.size() * (long long)q8.centralizer(cl[0]).size() == 8);
}

TEST_CASE("automorphism groups of small groups") {
    auto a4 = automorphisms(FiniteGroup::cyclic(4));
    CHECK(a4.all.size() == 2);
    CHECK(a4.inner.size() == 1);
    auto v4 = automorphisms(
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2)));
    CHECK(v4.all.size() == 6);
    // inner automorphisms of an abelian group are trivial
    CHECK(v4.inner.size() == 1);
    // every map multiplicative and bijective; closed under composition
    auto q8 = automorphisms(quaternion8());
    CHECK(q8.all.size() == 24);
    for (const auto& m : q8.all) CHECK(m.is_bijective());
    CHECK(q8.inner.size() == 4); // Q8/Z(Q8)
    CHECK(q8.coset_reps.size() == 6); // Out(Q8) = S3
}

TEST_CASE("character table of Z/2 and the Burnside identity") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    const auto& ct = z2.character_table();
    REQUIRE(ct.rows.size() == 2);
    CHECK(ct.rows[0][0] == CycloNumber(1));
    CHECK(ct.rows[0][1] == CycloNumber(1));
    CHECK(ct.rows[1][0] == CycloNumber(1));
    CHECK(ct.rows[1][1] == CycloNumber(-1));

    for (auto g : {FiniteGroup::cyclic(12), quaternion8(), dihedral8()}) {
        long long s = 0;
        for (long long d : g.character_table().dims) s += d * d;
        CHECK(s == g.size());
    }
}

TEST_CASE("quaternion character table via Dixon") {
    FiniteGroup q8 = quaternion8();
    const auto& ct = q8.character_table();
    REQUIRE(ct.dims.size() == 5);
    int ones = 0, twos = 0;
    for (long long d : ct.dims) (d == 1 ? ones : twos)++;
    CHECK(ones == 4);
    CHECK(twos == 1);
    // exact row orthogonality with class sizes
    for (size_t i = 0; i < ct.rows.size(); ++i)
        for (size_t j = 0; j < ct.rows.size(); ++j) {
            CycloNumber acc;
            for (size_t k = 0; k < ct.class_reps.size(); ++k)
                acc += CycloNumber(ct.class_sizes[k]) * ct.rows[i][k] *
                       ct.rows[j][k].conjugate();
            CHECK(acc == CycloNumber(i == j ? 8 : 0));
        }
}

TEST_CASE("character table row orthogonality for a nonabelian group with irrationalities") {
    // dihedral of order 16 has characters in Q(zeta_8 + zeta_8^-1)
    auto mul = [](int a, int b) {
        int ra = a % 8, sa = a / 8, rb = b % 8, sb = b / 8;
        int r = ((ra + (sa ? -rb : rb)) % 8 + 8) % 8;
        return (sa + sb) % 2 * 8 + r;
    };
    std::vector<std::vector<long long>> t(16, std::vector<long long>(16));
    for (int a = 0; a < 16; ++a)
        for (int b = 0; b < 16; ++b) t[a][b] = mul(a, b);
    FiniteGroup d16 = FiniteGroup::from_table(t);
    const auto& ct = d16.character_table();
    CHECK(ct.dims.size() == 7);
    for (size_t i = 0; i < ct.rows.size(); ++i)
        for (size_t j = 0; j < ct.rows.size(); ++j) {
            CycloNumber acc;
            for (size_t k = 0; k < ct.class_reps.size(); ++k)
                acc += CycloNumber(ct.class_sizes[k]) * ct.rows[i][k] *
                       ct.rows[j][k].conjugate();
            CHECK(acc == CycloNumber(i == j ? 16 : 0));
        }
}

TEST_CASE("projective irreps: trivial cocycle gives ordinary irreps") {
    FiniteGroup d8 = dihedral8();
    std::vector<std::vector<RootExponent>> tau(8, std::vector<RootExponent>(8));
    auto irr = projective_irreps(d8, tau);
    CHECK(irr.size() == d8.character_table().rows.size());
    long long s = 0;
    for (auto& pi : irr) s += pi.dim * pi.dim;
    CHECK(s == 8);
}

TEST_CASE("projective irreps: nondegenerate alternating cocycle on (Z/2)^2") {
    FiniteGroup v4 =
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2));
    // element index = 2*a + b for (a,b); alternating form tau((a,b),(c,d)) = ad/2
    std::vector<std::vector<RootExponent>> tau(4, std::vector<RootExponent>(4));
    for (int x = 0; x < 4; ++x)
        for (int y = 0; y < 4; ++y) tau[x][y] = RootExponent((x / 2) * (y % 2), 2);
    auto irr = projective_irreps(v4, tau);
    REQUIRE(irr.size() == 1);
    CHECK(irr[0].dim == 2);
    long long s = 0;
    for (auto& pi : irr) s += pi.dim * pi.dim;
    CHECK(s == 4);
}

TEST_CASE("isomorphism testing distinguishes D8 from Q8") {
    CHECK(groups_isomorphic(quaternion8(), quaternion8()));
    CHECK(!groups_isomorphic(quaternion8(), dihedral8()));
    CHECK(groups_isomorphic(FiniteGroup::cyclic(4),
                            FiniteGroup::from_permutations({{1, 2, 3, 0}})));
    CHECK(!groups_isomorphic(
        FiniteGroup::cyclic(4),
        FiniteGroup::direct_product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(2))));
}

TEST_CASE("abelian basis decomposition") {
    FiniteGroup g = FiniteGroup::direct_product(FiniteGroup::cyclic(4), FiniteGroup::cyclic(2));
    AbelianBasis ab = abelian_basis(g);
    long long prod = 1;
    for (long long o : ab.orders) prod *= o;
    CHECK(prod == 8);
    std::multiset<long long> os(ab.orders.begin(), ab.orders.end());
    CHECK(os == std::multiset<long long>{2, 4});
}

TEST_CASE("permutation group construction") {
    // S3 on 3 points
    FiniteGroup s3 = FiniteGroup::from_permutations({{1, 0, 2}, {1, 2, 0}});
    CHECK(s3.size() == 6);
    CHECK(s3.conj_classes().size() == 3);
}
