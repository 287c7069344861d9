#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "modcat/centerdata.hpp"
#include "modcat/frobalg.hpp"
#include "modcat/groupcoh.hpp"

using namespace modcat;

namespace {

MetricGroup toric_form() {
    FinAbGroup a({2, 2});
    std::vector<RootExponent> vals(4);
    vals[a.index_of({1, 1})] = RootExponent(1, 2);
    return validate_metric(a, vals);
}

MetricGroup trivial_metric() { return validate_metric(FinAbGroup(), {RootExponent()}); }

FiniteGroup dihedral8() {
    auto mul = [](int a, int b) {
        int ra = a % 4, sa = a / 4, rb = b % 4, sb = b / 4;
        int r = ((ra + (sa ? -rb : rb)) % 4 + 4) % 4;
        return (sa + sb) % 2 * 4 + r;
    };
    std::vector<std::vector<long long>> t(8, std::vector<long long>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) t[a][b] = mul(a, b);
    return FiniteGroup::from_table(t);
}

QzCocycle3 zero_omega(const FiniteGroup& g) { return QzCocycle3(g); }

} // namespace

TEST_CASE("pointed data: trivial group and the toric form") {
    ModularData triv = pointed_modular_data(trivial_metric());
    CHECK(triv.size() == 1);
    CHECK(gauss_charge(triv).tau_plus == CycloNumber(1));
    ModularData t = pointed_modular_data(toric_form());
    std::multiset<std::string> tw;
    for (auto& q : t.twists) tw.insert(q.str());
    CHECK(tw == std::multiset<std::string>{"0/1", "0/1", "0/1", "1/2"});
    GaussCharge gc = gauss_charge(t);
    CHECK(gc.tau_plus == CycloNumber(2));
    CHECK(gc.charge == Charge::Plus);
    CHECK(gc.fpdim == 4);
}

TEST_CASE("pointed norm form: tau = -p, charge -1") {
    for (long long p : {2, 3, 5}) {
        ModularData d = pointed_modular_data(norm_form(p));
        GaussCharge gc = gauss_charge(d);
        CHECK(gc.tau_plus == CycloNumber(-p));
        CHECK(gc.tau_minus == CycloNumber(-p));
        CHECK(gc.charge == Charge::Minus);
        CHECK(gc.fpdim == p * p);
    }
}

TEST_CASE("untwisted double of Z/2 equals the toric pointed data") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    ModularData d = double_modular_data(z2, zero_omega(z2));
    CHECK(d.size() == 4);
    for (long long dim : d.dims) CHECK(dim == 1);
    std::multiset<std::string> tw;
    for (auto& q : d.twists) tw.insert(q.str());
    CHECK(tw == std::multiset<std::string>{"0/1", "0/1", "0/1", "1/2"});
    GaussCharge gc = gauss_charge(d);
    CHECK(gc.tau_plus == CycloNumber(2));
    CHECK(gc.tau_minus == CycloNumber(2));
    // label-for-label match with the pointed hyperbolic oracle
    ModularData oracle = pointed_modular_data(toric_form());
    auto m = match_labels(d, oracle);
    CHECK(m.has_value());
}

TEST_CASE("twisted double of Z/2: the double semion") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    QzCocycle3 omega(z2);
    omega.at(1, 1, 1) = RootExponent(1, 2);
    omega.validate();
    ModularData d = double_modular_data(z2, omega);
    CHECK(d.size() == 4);
    std::multiset<std::string> tw;
    for (auto& q : d.twists) tw.insert(q.str());
    CHECK(tw == std::multiset<std::string>{"0/1", "0/1", "1/4", "3/4"});
    GaussCharge gc = gauss_charge(d);
    CHECK(gc.tau_plus == CycloNumber(2));
    CHECK(gc.tau_minus == CycloNumber(2));
    CHECK(gc.charge == Charge::Plus);
    auto fus = verlinde_fusion(d);
    CHECK(fus.pointed_like);
}

TEST_CASE("untwisted double of the dihedral group of order 8") {
    FiniteGroup d8 = dihedral8();
    ModularData d = double_modular_data(d8, zero_omega(d8));
    CHECK(d.size() == 22);
    CHECK(d.fpdim() == 64);
    GaussCharge gc = gauss_charge(d);
    CHECK(gc.tau_plus == CycloNumber(8));
    CHECK(gc.charge == Charge::Plus);
    auto fus = verlinde_fusion(d); // validates unitarity + integrality
    CHECK(!fus.pointed_like);
    // associativity of the fusion ring on a sample of triples
    long long n = d.size();
    for (long long i : {1, 5, 9})
        for (long long j : {2, 7, 21})
            for (long long k : {0, 3, 11})
                for (long long l : {1, 13}) {
                    long long lhs = 0, rhs = 0;
                    for (long long t = 0; t < n; ++t) {
                        lhs += fus.coeff(i, j, t) * fus.coeff(t, k, l);
                        rhs += fus.coeff(j, k, t) * fus.coeff(i, t, l);
                    }
                    CHECK(lhs == rhs);
                }
}

TEST_CASE("abelian doubles match hyperbolic pointed oracles") {
    std::vector<FinAbGroup> groups{FinAbGroup({2}), FinAbGroup({4}), FinAbGroup({2, 2}),
                                   FinAbGroup({3})};
    for (const FinAbGroup& a : groups) {
        FiniteGroup gamma = a.as_finite_group();
        ModularData d = double_modular_data(gamma, zero_omega(gamma));
        ModularData oracle = pointed_modular_data(hyperbolic_form(a));
        auto m = match_labels(d, oracle);
        REQUIRE(m.has_value());
        // the bijection preserves twists, dims and S
        for (long long i = 0; i < d.size(); ++i) {
            CHECK(d.twists[i] == oracle.twists[(*m)[i]]);
            for (long long j = 0; j < d.size(); ++j)
                CHECK(d.s[i][j] == oracle.s[(*m)[i]][(*m)[j]]);
        }
    }
}

TEST_CASE("twisted doubles of Z/4 and (Z/2)^2 over every class at n=1") {
    for (auto a : {FinAbGroup({4}), FinAbGroup({2, 2})}) {
        FiniteGroup gamma = a.as_finite_group();
        // sweep omega over representatives built from H^3(Gamma, Z/2)
        AbAction mod(gamma, FinAbGroup({2}));
        auto h3 = cohomology_group(mod, 3);
        for (const Cochain& w : h3.all_classes()) {
            QzCocycle3 omega(gamma);
            for (long long x = 0; x < gamma.size(); ++x)
                for (long long y = 0; y < gamma.size(); ++y)
                    for (long long z = 0; z < gamma.size(); ++z)
                        omega.at(x, y, z) =
                            RootExponent(w.value(std::vector<long long>{x, y, z})[0], 2);
            ModularData d = double_modular_data(gamma, omega);
            CHECK(d.fpdim() == gamma.size() * gamma.size());
            GaussCharge gc = gauss_charge(d);
            CHECK(gc.tau_plus == CycloNumber(gamma.size()));
            CHECK(gc.tau_minus == CycloNumber(gamma.size()));
            CHECK(gc.charge == Charge::Plus);
            verlinde_fusion(d);
            CHECK(check_cp_criteria(d, 2).kind == CpVerdict::CpPlus);
        }
    }
}

TEST_CASE("cp criteria verdicts") {
    CHECK(check_cp_criteria(pointed_modular_data(norm_form(2)), 2).kind ==
          CpVerdict::CpMinus);
    CHECK(check_cp_criteria(pointed_modular_data(norm_form(3)), 3).kind ==
          CpVerdict::CpMinus);
    // (Z/3, x^2/3): FPdim 3 is an odd power
    FinAbGroup z3({3});
    std::vector<RootExponent> vals(3);
    for (long long x = 0; x < 3; ++x) vals[x] = RootExponent(x * x, 3);
    ModularData d3 = pointed_modular_data(validate_metric(z3, vals));
    CHECK(check_cp_criteria(d3, 3).kind == CpVerdict::FailsCriterion1);
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    CHECK(check_cp_criteria(double_modular_data(z2, zero_omega(z2)), 2).kind ==
          CpVerdict::CpPlus);
}

TEST_CASE("verlinde of pointed data is the group law") {
    MetricGroup t = toric_form();
    ModularData d = pointed_modular_data(t);
    FusionTensor f = verlinde_fusion(d);
    REQUIRE(f.pointed_like);
    const FinAbGroup& a = t.group();
    for (long long i = 0; i < 4; ++i)
        for (long long j = 0; j < 4; ++j)
            CHECK(f.product[i * 4 + j] == a.index_of(a.add(a.element(i), a.element(j))));
}

TEST_CASE("deligne products") {
    ModularData triv = pointed_modular_data(trivial_metric());
    ModularData n2 = pointed_modular_data(norm_form(2));
    auto m = match_labels(deligne_product(n2, triv), n2);
    CHECK(m.has_value());
    // tau multiplies
    for (long long p : {2, 3}) {
        ModularData np = pointed_modular_data(norm_form(p));
        ModularData sq = deligne_product(np, np);
        GaussCharge gc = gauss_charge(sq);
        CHECK(gc.tau_plus == CycloNumber(p * p));
        CHECK(gc.charge == Charge::Plus);
        CHECK(check_cp_criteria(sq, p).kind == CpVerdict::CpPlus);
    }
    // D CpMinus iff D x pointed(norm) CpPlus over a small corpus
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    std::vector<ModularData> corpus{pointed_modular_data(norm_form(2)),
                                    pointed_modular_data(toric_form()),
                                    double_modular_data(z2, zero_omega(z2))};
    for (const ModularData& d : corpus) {
        bool minus = check_cp_criteria(d, 2).kind == CpVerdict::CpMinus;
        bool plus_after =
            check_cp_criteria(deligne_product(d, pointed_modular_data(norm_form(2))), 2)
                .kind == CpVerdict::CpPlus;
        CHECK(minus == plus_after);
    }
}

TEST_CASE("tau+ tau- = sum of dims^2 exactly on every produced object") {
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    FiniteGroup d8 = dihedral8();
    QzCocycle3 om(z2);
    om.at(1, 1, 1) = RootExponent(1, 2);
    std::vector<ModularData> corpus{
        pointed_modular_data(norm_form(2)), pointed_modular_data(norm_form(3)),
        pointed_modular_data(toric_form()), double_modular_data(z2, zero_omega(z2)),
        double_modular_data(z2, om), double_modular_data(d8, zero_omega(d8))};
    for (const ModularData& d : corpus) {
        GaussCharge gc = gauss_charge(d);
        CHECK(gc.tau_plus * gc.tau_minus == CycloNumber(d.fpdim()));
    }
}
