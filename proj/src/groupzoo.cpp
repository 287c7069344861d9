#include "modcat/groupzoo.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "modcat/groupcoh.hpp"

namespace modcat {

namespace {

void partitions_into_factors(long long p, long long k, std::vector<long long>& cur,
                             std::vector<std::vector<long long>>& out, long long max_part) {
    if (k == 0) {
        out.push_back(cur);
        return;
    }
    for (long long part = std::min(k, max_part); part >= 1; --part) {
        long long o = 1;
        for (long long i = 0; i < part; ++i) o *= p;
        cur.push_back(o);
        partitions_into_factors(p, k - part, cur, out, part);
        cur.pop_back();
    }
}

} // namespace

std::vector<FiniteGroup> p_groups_of_order(long long n) {
    long long p = 0, k = 0, t = n;
    for (long long d = 2; d <= t; ++d)
        if (t % d == 0) {
            p = d;
            break;
        }
    check(p >= 2, errc::bad_input, "order must be a prime power > 1");
    while (t % p == 0) {
        t /= p;
        ++k;
    }
    check(t == 1, errc::bad_input, "order must be a prime power");
    check(n <= 16 || (p == 3 && n <= 27), errc::cap_exceeded,
          "group catalogue limited to order 16 (27 for p = 3)");

    if (k == 1) return {FiniteGroup::cyclic(p)};

    std::vector<FiniteGroup> found;
    auto add_unique = [&](const FiniteGroup& g) {
        for (const auto& h : found)
            if (groups_isomorphic(g, h)) return;
        found.push_back(g);
    };

    std::vector<std::vector<long long>> parts;
    std::vector<long long> cur;
    partitions_into_factors(p, k - 1, cur, parts, k - 1);
    FiniteGroup zp = FiniteGroup::cyclic(p);
    for (const auto& orders : parts) {
        FinAbGroup a(orders);
        FiniteGroup a_grp = a.as_finite_group();
        AutomorphismData auts = automorphisms(a_grp);
        for (const GroupMap& sigma : auts.all) {
            // order of sigma must divide p
            GroupMap pw = sigma;
            bool ok = true;
            for (long long i = 1; i < p; ++i) pw = pw.compose(sigma);
            for (long long x = 0; x < a_grp.size(); ++x) ok = ok && pw(x) == x;
            if (!ok) continue;
            // as an AbHom on A (indices match between a and a_grp)
            std::vector<std::vector<long long>> mat(a.rank(), std::vector<long long>(a.rank()));
            for (long long j = 0; j < a.rank(); ++j) {
                AbElt ej(a.rank(), 0);
                ej[j] = 1;
                AbElt img = a.element(sigma(a.index_of(ej)));
                for (long long i = 0; i < a.rank(); ++i) mat[i][j] = img[i];
            }
            std::vector<AbHom> maps{AbHom::identity(a)};
            AbHom s(a, a, mat);
            AbHom acc = s;
            for (long long i = 1; i < p; ++i) {
                maps.push_back(acc);
                acc = s.compose(acc);
            }
            AbAction action(zp, a, maps);
            auto h2 = cohomology_group(action, 2);
            for (const Cochain& f : h2.all_classes())
                add_unique(extension_from_cocycle(action, f).total);
        }
    }
    // deterministic order: abelian first, then by class count and order stats
    std::sort(found.begin(), found.end(), [](const FiniteGroup& x, const FiniteGroup& y) {
        if (x.is_abelian() != y.is_abelian()) return x.is_abelian();
        if (x.conj_classes().size() != y.conj_classes().size())
            return x.conj_classes().size() > y.conj_classes().size();
        std::multiset<long long> ox, oy;
        for (long long e = 0; e < x.size(); ++e) ox.insert(x.order_of(e));
        for (long long e = 0; e < y.size(); ++e) oy.insert(y.order_of(e));
        return ox < oy;
    });
    return found;
}

} // namespace modcat
