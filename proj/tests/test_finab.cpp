#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "modcat/finab.hpp"
#include "modcat/modsolve.hpp"

using namespace modcat;

TEST_CASE("subgroup counts: chain of Z/4 and the five subgroups of (Z/2)^2") {
    CHECK(subgroups(FinAbGroup({4})).size() == 3);
    CHECK(subgroups(FinAbGroup({2, 2})).size() == 5);
    // oracle for (Z/2)^3: 1 + 7 + 7 + 1 = 16 subgroups
    CHECK(subgroups(FinAbGroup({2, 2, 2})).size() == 16);
}

TEST_CASE("every reported subgroup is closed under addition and negation") {
    FinAbGroup g({2, 4});
    for (const auto& s : subgroups(g)) {
        for (long long e1 : s.elements)
            for (long long e2 : s.elements)
                CHECK(subgroup_contains(s, g.index_of(g.add(g.element(e1), g.element(e2)))));
        for (long long e : s.elements)
            CHECK(subgroup_contains(s, g.index_of(g.neg(g.element(e)))));
    }
}

TEST_CASE("swap-invariant subgroups of (Z/2)^2") {
    FinAbGroup g({2, 2});
    FiniteGroup z2 = FiniteGroup::cyclic(2);
    AbHom swap(g, g, {{0, 1}, {1, 0}});
    AbAction act(z2, g, {AbHom::identity(g), swap});
    auto inv = subgroups(g, &act);
    // oracle: exhaustive setwise-invariance check over the full subgroup list
    auto all = subgroups(g);
    size_t expect = 0;
    for (const auto& s : all) {
        bool ok = true;
        for (long long e : s.elements)
            ok = ok && subgroup_contains(s, g.index_of(swap.apply(g.element(e))));
        expect += ok;
    }
    CHECK(inv.size() == expect);
    // the diagonal survives, the two axes do not
    CHECK(expect == 3);
    bool diag_in = false;
    for (const auto& s : inv)
        diag_in |= s.elements == std::vector<long long>{0, g.index_of({1, 1})};
    CHECK(diag_in);
}

TEST_CASE("quotients: Z/4 by 2Z/4, trivial subgroup, diagonal") {
    {
        FinAbGroup g({4});
        auto subs = subgroups(g);
        // subs[1] is the order-2 subgroup {0, 2}
        REQUIRE(subs[1].elements.size() == 2);
        auto q = quotient(g, subs[1]);
        CHECK(q.quotient.size() == 2);
        CHECK(q.quotient.orders() == std::vector<long long>{2});
    }
    {
        FinAbGroup g({2, 4});
        AbSubgroup triv;
        triv.elements = {0};
        auto q = quotient(g, triv);
        CHECK(q.quotient.size() == 8);
        // projection is bijective
        CHECK(q.projection.is_bijective());
    }
    {
        FinAbGroup g({2, 2});
        auto diag = closure_subgroup(g, {g.index_of({1, 1})});
        auto q = quotient(g, diag);
        CHECK(q.quotient.size() == 2);
    }
    // |A| = |B| * |A/B| over all subgroups of a mixed group
    FinAbGroup g({2, 4});
    for (const auto& s : subgroups(g)) {
        auto q = quotient(g, s);
        CHECK(g.size() == (long long)s.elements.size() * q.quotient.size());
        // section is a right inverse
        for (long long qi = 0; qi < q.quotient.size(); ++qi)
            CHECK(q.quotient.index_of(q.projection.apply(q.section[qi])) == qi);
    }
}

TEST_CASE("solve_mod basics") {
    // 2x = 2 (mod 4): x = 1, kernel {0, 2}
    ModSystem sys;
    sys.nrows = 1;
    sys.ncols = 1;
    sys.row_mod = {4};
    sys.var_mod = {4};
    sys.add(0, 0, 2);
    auto res = solve_linear(sys, {{2}, {1}});
    REQUIRE(res.solutions[0].has_value());
    CHECK(((*res.solutions[0])[0] * 2) % 4 == 2);
    CHECK(!res.solutions[1].has_value()); // 2x = 1 (mod 4) has no solution
    // kernel generated by 2
    bool has2 = false;
    for (auto& k : res.kernel) has2 |= k[0] == 2;
    CHECK(has2);
}

TEST_CASE("solve_mod identity system and mixed moduli") {
    ModSystem sys;
    sys.nrows = 2;
    sys.ncols = 2;
    sys.row_mod = {6, 4};
    sys.var_mod = {6, 4};
    sys.add(0, 0, 1);
    sys.add(1, 1, 1);
    auto res = solve_linear(sys, {{5, 3}});
    REQUIRE(res.solutions[0].has_value());
    CHECK((*res.solutions[0])[0] == 5);
    CHECK((*res.solutions[0])[1] == 3);
    CHECK(res.kernel.empty());
}

TEST_CASE("solve_mod exhaustive cross-check on random small systems") {
    // brute-force oracle: enumerate all x in prod Z/var_mod
    std::mt19937_64 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        long long mods[] = {2, 3, 4, 8, 9, 6};
        ModSystem sys;
        sys.nrows = 2 + (long long)(rng() % 2);
        sys.ncols = 2 + (long long)(rng() % 2);
        for (long long i = 0; i < sys.nrows; ++i) sys.row_mod.push_back(mods[rng() % 6]);
        for (long long j = 0; j < sys.ncols; ++j) sys.var_mod.push_back(mods[rng() % 6]);
        for (long long i = 0; i < sys.nrows; ++i)
            for (long long j = 0; j < sys.ncols; ++j) {
                // keep the system well defined on the quotients:
                // coeff * var_mod = 0 mod row_mod
                long long c = (long long)(rng() % 12);
                long long need = sys.row_mod[i] / std::gcd(sys.row_mod[i], sys.var_mod[j]);
                c -= c % need;
                sys.add(i, j, c);
            }
        std::vector<long long> rhs(sys.nrows);
        for (auto& v : rhs) v = (long long)(rng() % 12);
        auto res = solve_linear(sys, {rhs});

        // oracle
        long long total = 1;
        for (long long m : sys.var_mod) total *= m;
        std::vector<std::vector<long long>> sols;
        for (long long idx = 0; idx < total; ++idx) {
            std::vector<long long> x(sys.ncols);
            long long r = idx;
            for (long long j = 0; j < sys.ncols; ++j) {
                x[j] = r % sys.var_mod[j];
                r /= sys.var_mod[j];
            }
            std::vector<long long> acc(sys.nrows, 0);
            for (auto& e : sys.entries) acc[e.row] += e.coeff * x[e.col];
            bool ok = true;
            for (long long i = 0; i < sys.nrows; ++i)
                ok = ok && ((acc[i] - rhs[i]) % sys.row_mod[i] + sys.row_mod[i]) %
                                   sys.row_mod[i] ==
                               0;
            if (ok) sols.push_back(x);
        }
        CHECK(res.solutions[0].has_value() == !sols.empty());
        if (!sols.empty()) {
            // kernel span size must equal the solution count
            std::set<std::vector<long long>> span;
            std::vector<std::vector<long long>> frontier{std::vector<long long>(sys.ncols, 0)};
            span.insert(frontier[0]);
            while (!frontier.empty()) {
                auto cur = frontier.back();
                frontier.pop_back();
                for (auto& k : res.kernel) {
                    std::vector<long long> nxt(sys.ncols);
                    for (long long j = 0; j < sys.ncols; ++j)
                        nxt[j] = (cur[j] + k[j]) % sys.var_mod[j];
                    if (span.insert(nxt).second) frontier.push_back(nxt);
                }
            }
            CHECK(span.size() == sols.size());
        }
    }
}

TEST_CASE("quotient_presentation matches brute force on small cases") {
    // Z/4 x Z/2 modulo the diagonal of order 2: expect Z/4
    auto pres = quotient_presentation({4, 2}, {{2, 1}});
    REQUIRE(pres.factors.size() == 1);
    CHECK(pres.factors[0] == 4);
    // (Z/2)^2 modulo nothing
    auto pres2 = quotient_presentation({2, 2}, {});
    CHECK(pres2.factors == std::vector<long long>{2, 2});
}
