#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "modcat/frobalg.hpp"
#include "modcat/metric.hpp"

using namespace modcat;

namespace {

MetricGroup toric_form() {
    // (Z/2)^2 with q = {0,0,0,1/2} on components 00,01,10,11
    FinAbGroup a({2, 2});
    std::vector<RootExponent> vals(4);
    vals[a.index_of({1, 1})] = RootExponent(1, 2);
    return validate_metric(a, vals);
}

MetricGroup z3_square_form() {
    FinAbGroup a({3});
    std::vector<RootExponent> vals(3);
    for (long long x = 0; x < 3; ++x) vals[x] = RootExponent(x * x, 3);
    return validate_metric(a, vals);
}

} // namespace

TEST_CASE("validation accepts the toric and Z/3 forms, rejects uneven tables") {
    MetricGroup t = toric_form();
    CHECK(t.nondegenerate());
    MetricGroup z3 = z3_square_form();
    CHECK(z3.nondegenerate());
    // Z/4 with q(1)=1/4, q(3)=1/2 is not even
    FinAbGroup a({4});
    std::vector<RootExponent> bad(4);
    bad[1] = RootExponent(1, 4);
    bad[3] = RootExponent(1, 2);
    CHECK_THROWS_WITH_AS(validate_metric(a, bad), doctest::Contains("q(a) != q(-a)"), Error);
}

TEST_CASE("gauss sums: trivial group, norm forms, toric form") {
    MetricGroup triv = validate_metric(FinAbGroup(), {RootExponent()});
    CHECK(gauss_sum(triv, +1) == CycloNumber(1));
    CHECK(gauss_sum(norm_form(2), +1) == CycloNumber(-2));
    CHECK(gauss_sum(norm_form(3), +1) == CycloNumber(-3));
    CHECK(gauss_sum(toric_form(), +1) == CycloNumber(2));
}

TEST_CASE("|tau|^2 = |A| for nondegenerate forms") {
    std::vector<MetricGroup> fixtures{toric_form(), z3_square_form(), norm_form(2), norm_form(3),
                                      hyperbolic_form(FinAbGroup({4})),
                                      hyperbolic_form(FinAbGroup({2, 2}))};
    for (const auto& m : fixtures) {
        CycloNumber t = gauss_sum(m, +1);
        CHECK(t * t.conjugate() == CycloNumber(m.group().size()));
        CHECK(gauss_sum(m, -1) == t.conjugate());
    }
}

TEST_CASE("isotropic subgroups of the toric form") {
    auto iso = isotropic_subgroups(toric_form());
    // {0}, and the two order-2 subgroups away from the q=1/2 element
    int order2 = 0;
    for (auto& i : iso) order2 += i.sub.elements.size() == 2;
    CHECK(order2 == 2);
    CHECK(iso.size() == 3);
    for (auto& i : iso)
        if (i.sub.elements.size() == 2) CHECK(i.maximal);
}

TEST_CASE("norm + norm with the swap action of Z/2") {
    for (long long p : {2, 3}) {
        MetricGroup m = orthogonal_sum(norm_form(p), norm_form(p));
        const FinAbGroup& a = m.group();
        // swap action: coordinates (x1,x2,y1,y2) -> (y1,y2,x1,x2)
        std::vector<std::vector<long long>> mat(4, std::vector<long long>(4, 0));
        mat[0][2] = mat[1][3] = mat[2][0] = mat[3][1] = 1;
        AbHom swap(a, a, mat);
        AbAction act(FiniteGroup::cyclic(2), a, {AbHom::identity(a), swap});
        auto iso = isotropic_subgroups(m, &act);
        if (p == 2) {
            // the diagonal is an invariant isotropic Lagrangian:
            // q(x,x) = 2 Nm(x)/2 = 0
            bool diag = false;
            for (auto& i : iso) {
                if (i.sub.elements.size() != 4) continue;
                bool is_diag = true;
                for (long long e : i.sub.elements) {
                    AbElt v = a.element(e);
                    is_diag = is_diag && v[0] == v[2] && v[1] == v[3];
                }
                diag |= is_diag && i.maximal;
            }
            CHECK(diag);
        } else {
            // for odd p a swap-invariant subgroup splits into diagonal and
            // antidiagonal eigenparts, both anisotropic: only {0} is
            // invariant and isotropic
            CHECK(iso.size() == 1);
            CHECK(iso[0].sub.elements.size() == 1);
        }
    }
}

TEST_CASE("subquotient: by zero, by toric line, by the diagonal Lagrangian") {
    MetricGroup t = toric_form();
    AbSubgroup zero;
    zero.elements = {0};
    auto sq0 = subquotient(t, zero);
    CHECK(metric_isomorphic(sq0.metric, t));
    // order-2 isotropic: B-perp = B, residue trivial
    for (auto& i : isotropic_subgroups(t))
        if (i.sub.elements.size() == 2) {
            auto sq = subquotient(t, i.sub);
            CHECK(sq.metric.group().size() == 1);
        }
    // norm+norm by an invariant Lagrangian gives the trivial group
    MetricGroup nn = orthogonal_sum(norm_form(2), norm_form(2));
    for (auto& i : isotropic_subgroups(nn))
        if (i.sub.elements.size() == 4) {
            auto sq = subquotient(nn, i.sub);
            CHECK(sq.metric.group().size() == 1);
        }
    // non-isotropic subgroup is rejected
    MetricGroup n2 = norm_form(2);
    AbSubgroup line = closure_subgroup(n2.group(), {1});
    CHECK_THROWS_AS(subquotient(n2, line), Error);
}

TEST_CASE("witt reduction fixed points and collapses") {
    CHECK(witt_reduce(toric_form()).residue.group().size() == 1);
    for (long long p : {2, 3}) {
        WittWitness w = witt_reduce(norm_form(p));
        CHECK(w.chain.empty());
        CHECK(metric_isomorphic(w.residue, norm_form(p)));
        WittWitness w2 = witt_reduce(orthogonal_sum(norm_form(p), norm_form(p)));
        CHECK(w2.residue.group().size() == 1);
    }
}

TEST_CASE("witt residue independent of maximal chain (exhaustive, small forms)") {
    std::vector<MetricGroup> fixtures{toric_form(), hyperbolic_form(FinAbGroup({2, 2})),
                                      orthogonal_sum(norm_form(2), toric_form()),
                                      hyperbolic_form(FinAbGroup({4})),
                                      orthogonal_sum(z3_square_form(), z3_square_form())};
    std::function<void(const MetricGroup&, const MetricGroup&)> all_chains =
        [&](const MetricGroup& m, const MetricGroup& expect) {
            auto iso = isotropic_subgroups(m);
            bool any = false;
            for (auto& i : iso) {
                if (!i.maximal || i.sub.elements.size() == 1) continue;
                any = true;
                all_chains(subquotient(m, i.sub).metric, expect);
            }
            if (!any) CHECK(metric_isomorphic(m, expect));
        };
    for (const auto& m : fixtures) all_chains(m, witt_reduce(m).residue);
}

TEST_CASE("orthogonal sums") {
    MetricGroup triv = validate_metric(FinAbGroup(), {RootExponent()});
    MetricGroup n2 = norm_form(2);
    CHECK(metric_isomorphic(orthogonal_sum(n2, triv), n2));
    for (long long p : {2, 3}) {
        MetricGroup nn = orthogonal_sum(norm_form(p), norm_form(p));
        CHECK(gauss_sum(nn, +1) == CycloNumber(p * p));
        CHECK(nn.group().size() == norm_form(p).group().size() * norm_form(p).group().size());
    }
}

TEST_CASE("p^r A isotropic for odd p when 2r >= n") {
    // Z/9 with q = x^2/9: n = 2, r = 1
    FinAbGroup a({9});
    std::vector<RootExponent> vals(9);
    for (long long x = 0; x < 9; ++x) vals[x] = RootExponent(x * x, 9);
    MetricGroup m = validate_metric(a, vals);
    CHECK(m.nondegenerate());
    AbSubgroup sub = multiples_subgroup(a, 3);
    CHECK(sub.elements.size() == 3);
    for (long long e : sub.elements) CHECK(m.form.values[e].is_zero());
}

TEST_CASE("witt-level classifier") {
    CHECK(classify_cp_witt(toric_form()) == WittClass::CpPlusCompatible);
    for (long long p : {2, 3, 5})
        CHECK(classify_cp_witt(norm_form(p)) == WittClass::CpMinusCompatible);
    CHECK(classify_cp_witt(z3_square_form()) == WittClass::Neither);
    // mirror of the Deligne-product direction at the Witt level
    std::vector<MetricGroup> fixtures{toric_form(), norm_form(2), norm_form(3),
                                      hyperbolic_form(FinAbGroup({2, 2})), z3_square_form(),
                                      orthogonal_sum(norm_form(3), norm_form(3))};
    for (const auto& m : fixtures) {
        long long n = m.group().size();
        long long p = 2;
        while (n % p) ++p;
        bool minus = classify_cp_witt(m) == WittClass::CpMinusCompatible;
        bool plus_after = classify_cp_witt(orthogonal_sum(m, norm_form(p))) ==
                          WittClass::CpPlusCompatible;
        CHECK(minus == plus_after);
    }
}
