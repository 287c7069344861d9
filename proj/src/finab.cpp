#include "modcat/finab.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "modcat/modsolve.hpp"

namespace modcat {

FinAbGroup::FinAbGroup(std::vector<long long> orders) : orders_(std::move(orders)) {
    for (long long o : orders_) check(o >= 2, errc::bad_input, "cyclic factor order must be > 1");
    std::sort(orders_.begin(), orders_.end());
    size_ = 1;
    for (long long o : orders_) {
        check(size_ <= (1ll << 31) / o, errc::cap_exceeded, "abelian group too large");
        size_ *= o;
    }
}

long long FinAbGroup::exponent() const {
    long long e = 1;
    for (long long o : orders_) e = std::lcm(e, o);
    return e;
}

long long FinAbGroup::index_of(const AbElt& e) const {
    check((long long)e.size() == rank(), errc::bad_input, "element of wrong rank");
    long long idx = 0;
    for (size_t i = 0; i < orders_.size(); ++i) {
        long long c = e[i] % orders_[i];
        if (c < 0) c += orders_[i];
        idx = idx * orders_[i] + c;
    }
    return idx;
}

AbElt FinAbGroup::element(long long index) const {
    AbElt e(orders_.size());
    for (size_t i = orders_.size(); i-- > 0;) {
        e[i] = index % orders_[i];
        index /= orders_[i];
    }
    return e;
}

AbElt FinAbGroup::reduce(AbElt e) const {
    for (size_t i = 0; i < orders_.size(); ++i) {
        e[i] %= orders_[i];
        if (e[i] < 0) e[i] += orders_[i];
    }
    return e;
}

AbElt FinAbGroup::add(const AbElt& a, const AbElt& b) const {
    AbElt c(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i) c[i] = (a[i] + b[i]) % orders_[i];
    return c;
}

AbElt FinAbGroup::neg(const AbElt& a) const {
    AbElt c(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i) c[i] = (orders_[i] - a[i] % orders_[i]) % orders_[i];
    return c;
}

AbElt FinAbGroup::smul(long long k, const AbElt& a) const {
    AbElt c(orders_.size());
    for (size_t i = 0; i < orders_.size(); ++i) {
        long long v = (k % orders_[i]) * (a[i] % orders_[i]) % orders_[i];
        c[i] = v < 0 ? v + orders_[i] : v;
    }
    return c;
}

long long FinAbGroup::order_of(const AbElt& a) const {
    long long o = 1;
    for (size_t i = 0; i < orders_.size(); ++i) {
        long long c = ((a[i] % orders_[i]) + orders_[i]) % orders_[i];
        o = std::lcm(o, orders_[i] / std::gcd(orders_[i], c));
    }
    return o;
}

bool FinAbGroup::is_zero(const AbElt& a) const {
    for (size_t i = 0; i < orders_.size(); ++i)
        if (a[i] % orders_[i] != 0) return false;
    return true;
}

FiniteGroup FinAbGroup::as_finite_group() const {
    long long n = size_;
    check(n <= 4096, errc::cap_exceeded, "abelian group too large for a table");
    std::vector<std::vector<long long>> table(n, std::vector<long long>(n));
    for (long long i = 0; i < n; ++i) {
        AbElt a = element(i);
        for (long long j = 0; j < n; ++j) table[i][j] = index_of(add(a, element(j)));
    }
    return FiniteGroup::from_table(table);
}

AbHom::AbHom(FinAbGroup src, FinAbGroup tgt, std::vector<std::vector<long long>> matrix,
             bool validate)
    : src_(std::move(src)), tgt_(std::move(tgt)), mat_(std::move(matrix)) {
    check((long long)mat_.size() == tgt_.rank(), errc::bad_input, "hom matrix of wrong shape");
    for (auto& row : mat_)
        check((long long)row.size() == src_.rank(), errc::bad_input, "hom matrix of wrong shape");
    if (!validate) return;
    // well-definedness: src.orders[j] * column_j = 0 in target
    for (long long j = 0; j < src_.rank(); ++j)
        for (long long i = 0; i < tgt_.rank(); ++i)
            check((__int128)src_.orders()[j] * mat_[i][j] % tgt_.orders()[i] == 0, errc::bad_input,
                  "hom not well defined on cyclic factors");
}

AbHom AbHom::identity(const FinAbGroup& g) {
    std::vector<std::vector<long long>> m(g.rank(), std::vector<long long>(g.rank(), 0));
    for (long long i = 0; i < g.rank(); ++i) m[i][i] = 1;
    return AbHom(g, g, std::move(m), false);
}

AbHom AbHom::zero(const FinAbGroup& src, const FinAbGroup& tgt) {
    return AbHom(src, tgt, std::vector<std::vector<long long>>(tgt.rank(), std::vector<long long>(src.rank(), 0)),
                 false);
}

AbElt AbHom::apply(const AbElt& e) const {
    AbElt out(tgt_.rank(), 0);
    for (long long i = 0; i < tgt_.rank(); ++i) {
        __int128 acc = 0;
        for (long long j = 0; j < src_.rank(); ++j) acc += (__int128)mat_[i][j] * e[j];
        long long m = tgt_.orders()[i];
        out[i] = (long long)(((acc % m) + m) % m);
    }
    return out;
}

AbHom AbHom::compose(const AbHom& inner) const {
    check(inner.tgt_ == src_, errc::bad_input, "hom composition mismatch");
    std::vector<std::vector<long long>> m(tgt_.rank(), std::vector<long long>(inner.src_.rank(), 0));
    for (long long i = 0; i < tgt_.rank(); ++i)
        for (long long j = 0; j < inner.src_.rank(); ++j) {
            __int128 acc = 0;
            for (long long t = 0; t < src_.rank(); ++t)
                acc += (__int128)mat_[i][t] * inner.mat_[t][j];
            long long mm = tgt_.orders()[i];
            m[i][j] = (long long)(((acc % mm) + mm) % mm);
        }
    return AbHom(inner.src_, tgt_, std::move(m), false);
}

bool AbHom::is_identity() const {
    if (!(src_ == tgt_)) return false;
    for (long long i = 0; i < tgt_.rank(); ++i)
        for (long long j = 0; j < src_.rank(); ++j) {
            long long want = i == j ? 1 : 0;
            long long got = ((mat_[i][j] % tgt_.orders()[i]) + tgt_.orders()[i]) % tgt_.orders()[i];
            if (got != want % tgt_.orders()[i]) return false;
        }
    return true;
}

bool AbHom::is_bijective() const {
    if (src_.size() != tgt_.size()) return false;
    std::vector<char> hit(tgt_.size(), 0);
    for (long long i = 0; i < src_.size(); ++i) {
        long long img = tgt_.index_of(apply(src_.element(i)));
        if (hit[img]) return false;
        hit[img] = 1;
    }
    return true;
}

std::optional<AbHom> AbHom::inverse() const {
    if (!is_bijective()) return std::nullopt;
    // invert on generators: solve apply(x) = e_i for each target generator
    std::vector<std::vector<long long>> m(src_.rank(), std::vector<long long>(tgt_.rank(), 0));
    for (long long i = 0; i < tgt_.rank(); ++i) {
        AbElt target(tgt_.rank(), 0);
        target[i] = 1;
        bool found = false;
        for (long long x = 0; x < src_.size() && !found; ++x) {
            if (tgt_.index_of(apply(src_.element(x))) == tgt_.index_of(target)) {
                AbElt xe = src_.element(x);
                for (long long t = 0; t < src_.rank(); ++t) m[t][i] = xe[t];
                found = true;
            }
        }
        if (!found) return std::nullopt;
    }
    return AbHom(tgt_, src_, std::move(m), true);
}

AbAction::AbAction(FiniteGroup gamma, FinAbGroup module)
    : gamma_(std::move(gamma)), module_(std::move(module)) {
    maps_.assign(gamma_.size(), AbHom::identity(module_));
}

AbAction::AbAction(FiniteGroup gamma, FinAbGroup module, std::vector<AbHom> maps, bool validate)
    : gamma_(std::move(gamma)), module_(std::move(module)), maps_(std::move(maps)) {
    check((long long)maps_.size() == gamma_.size(), errc::bad_input, "action map count mismatch");
    if (!validate) return;
    check(maps_[0].is_identity(), errc::bad_input, "identity must act as identity");
    for (long long g = 0; g < gamma_.size(); ++g)
        check(maps_[g].is_bijective(), errc::bad_input, "action by a non-automorphism");
    for (long long g = 0; g < gamma_.size(); ++g)
        for (long long h = 0; h < gamma_.size(); ++h) {
            AbHom comp = maps_[g].compose(maps_[h]);
            check(comp == maps_[gamma_.mul(g, h)], errc::bad_input,
                  "action is not a homomorphism");
        }
}

bool AbAction::is_trivial() const {
    for (const auto& m : maps_)
        if (!m.is_identity()) return false;
    return true;
}

AbSubgroup closure_subgroup(const FinAbGroup& g, const std::vector<long long>& gen_indices) {
    std::vector<char> in(g.size(), 0);
    in[0] = 1;
    std::vector<long long> elements{0};
    for (long long gen : gen_indices) {
        if (in[gen]) continue;
        // subgroup + new generator: union of translates by powers of gen
        AbElt ge = g.element(gen);
        std::vector<long long> current = elements;
        AbElt p = ge;
        while (!g.is_zero(p)) {
            for (long long e : current) {
                long long y = g.index_of(g.add(g.element(e), p));
                if (!in[y]) {
                    in[y] = 1;
                    elements.push_back(y);
                }
            }
            p = g.add(p, ge);
        }
    }
    std::sort(elements.begin(), elements.end());
    AbSubgroup s;
    s.gens = gen_indices;
    s.elements = std::move(elements);
    return s;
}

bool subgroup_contains(const AbSubgroup& s, long long elt_index) {
    return std::binary_search(s.elements.begin(), s.elements.end(), elt_index);
}

bool is_subgroup_of(const AbSubgroup& a, const AbSubgroup& b) {
    return std::includes(b.elements.begin(), b.elements.end(), a.elements.begin(),
                         a.elements.end());
}

std::vector<AbSubgroup> subgroups(const FinAbGroup& g, const AbAction* invariant_under,
                                  long long cap) {
    check(g.size() <= cap, errc::cap_exceeded, "subgroup enumeration above cap");
    std::map<std::vector<long long>, std::vector<long long>> seen; // elements -> gens
    AbSubgroup triv = closure_subgroup(g, {});
    seen[triv.elements] = {};
    std::vector<std::vector<long long>> frontier{triv.elements};
    std::map<std::vector<long long>, std::vector<long long>> gens_of;
    gens_of[triv.elements] = {};
    while (!frontier.empty()) {
        std::vector<long long> cur = frontier.back();
        frontier.pop_back();
        std::vector<long long> cur_gens = gens_of[cur];
        std::vector<char> in(g.size(), 0);
        for (long long e : cur) in[e] = 1;
        for (long long a = 0; a < g.size(); ++a) {
            if (in[a]) continue;
            // extend cur by a: union of translates of cur by powers of a
            std::vector<long long> elements = cur;
            std::vector<char> nin = in;
            AbElt ae = g.element(a);
            AbElt p = ae;
            while (!g.is_zero(p)) {
                for (long long t : cur) {
                    long long y = g.index_of(g.add(g.element(t), p));
                    if (!nin[y]) {
                        nin[y] = 1;
                        elements.push_back(y);
                    }
                }
                p = g.add(p, ae);
            }
            std::sort(elements.begin(), elements.end());
            if (!seen.count(elements)) {
                std::vector<long long> gens = cur_gens;
                gens.push_back(a);
                seen[elements] = gens;
                gens_of[elements] = gens;
                frontier.push_back(elements);
            }
        }
    }
    std::vector<AbSubgroup> out;
    for (auto& [elems, gens] : seen) {
        AbSubgroup s;
        s.elements = elems;
        s.gens = gens;
        out.push_back(std::move(s));
    }
    std::sort(out.begin(), out.end(), [](const AbSubgroup& a, const AbSubgroup& b) {
        if (a.elements.size() != b.elements.size()) return a.elements.size() < b.elements.size();
        return a.elements < b.elements;
    });
    if (invariant_under) {
        std::vector<AbSubgroup> kept;
        const FiniteGroup& gam = invariant_under->group();
        for (auto& s : out) {
            bool inv = true;
            for (long long gi = 0; gi < gam.size() && inv; ++gi) {
                for (long long e : s.elements) {
                    long long img = g.index_of(invariant_under->act(gi, g.element(e)));
                    if (!subgroup_contains(s, img)) {
                        inv = false;
                        break;
                    }
                }
            }
            if (inv) kept.push_back(s);
        }
        return kept;
    }
    return out;
}

QuotientResult quotient(const FinAbGroup& a, const AbSubgroup& b) {
    // validate subgroup
    for (long long e : b.elements)
        check(e >= 0 && e < a.size(), errc::not_a_subgroup, "subgroup element out of range");
    for (long long e1 : b.elements)
        for (long long e2 : b.elements)
            check(subgroup_contains(b, a.index_of(a.add(a.element(e1), a.element(e2)))),
                  errc::not_a_subgroup, "set not closed under addition");
    check(subgroup_contains(b, 0), errc::not_a_subgroup, "subgroup must contain zero");

    // present A/B on the standard generators of A with relations = B gens
    std::vector<std::vector<long long>> rels;
    for (long long e : b.elements) rels.push_back(a.element(e));
    PresentationResult pres = quotient_presentation(a.orders(), rels);

    std::vector<long long> qorders;
    std::vector<AbElt> qgens; // expressed in A
    for (size_t i = 0; i < pres.factors.size(); ++i) {
        if (pres.factors[i] <= 1) continue;
        qorders.push_back(pres.factors[i]);
        qgens.push_back(a.reduce(pres.factor_gens[i]));
    }
    FinAbGroup q(qorders);
    // FinAbGroup sorts orders ascending; realign generators accordingly
    {
        std::vector<size_t> perm(qorders.size());
        std::iota(perm.begin(), perm.end(), 0);
        std::stable_sort(perm.begin(), perm.end(),
                         [&](size_t x, size_t y) { return qorders[x] < qorders[y]; });
        std::vector<AbElt> rg(qgens.size());
        for (size_t i = 0; i < perm.size(); ++i) rg[i] = qgens[perm[i]];
        qgens = std::move(rg);
    }

    // projection: map each generator of A to its coset coordinates; found by
    // enumerating the quotient combinations of qgens and matching cosets.
    // coset id: least element index of x + B
    auto coset_rep = [&](const AbElt& x) {
        long long best = -1;
        for (long long e : b.elements) {
            long long idx = a.index_of(a.add(x, a.element(e)));
            if (best < 0 || idx < best) best = idx;
        }
        return best;
    };
    std::map<long long, AbElt> rep_to_q; // coset rep -> quotient tuple
    std::vector<AbElt> section(q.size());
    for (long long qi = 0; qi < q.size(); ++qi) {
        AbElt tup = q.element(qi);
        AbElt x(a.rank(), 0);
        for (size_t i = 0; i < qgens.size(); ++i) x = a.add(x, a.smul(tup[i], qgens[i]));
        long long rep = coset_rep(x);
        check(!rep_to_q.count(rep), errc::bad_input, "quotient presentation collision");
        rep_to_q[rep] = tup;
        section[qi] = x;
    }
    check((long long)rep_to_q.size() * (long long)b.elements.size() == a.size(),
          errc::bad_input, "quotient size mismatch");
    std::vector<std::vector<long long>> pmat(q.rank(), std::vector<long long>(a.rank(), 0));
    for (long long j = 0; j < a.rank(); ++j) {
        AbElt ej(a.rank(), 0);
        ej[j] = 1;
        const AbElt& tup = rep_to_q.at(coset_rep(ej));
        for (long long i = 0; i < q.rank(); ++i) pmat[i][j] = tup[i];
    }
    QuotientResult out{q, AbHom(a, q, std::move(pmat), true), std::move(section)};
    // the projection must indeed send section(q) to q
    for (long long qi = 0; qi < q.size(); ++qi)
        check(q.index_of(out.projection.apply(out.section[qi])) == qi, errc::bad_input,
              "quotient section mismatch");
    return out;
}

AbSubgroup image_subgroup(const AbHom& h) {
    std::vector<long long> gens;
    for (long long j = 0; j < h.source().rank(); ++j) {
        AbElt ej(h.source().rank(), 0);
        ej[j] = 1;
        gens.push_back(h.target().index_of(h.apply(ej)));
    }
    return closure_subgroup(h.target(), gens);
}

AbSubgroup kernel_subgroup(const AbHom& h) {
    std::vector<long long> members;
    for (long long i = 0; i < h.source().size(); ++i)
        if (h.target().is_zero(h.apply(h.source().element(i)))) members.push_back(i);
    AbSubgroup s;
    s.elements = std::move(members);
    std::sort(s.elements.begin(), s.elements.end());
    s.gens = s.elements; // generating set: all members (callers rarely need minimal)
    return s;
}

SubgroupBasis subgroup_as_finab(const FinAbGroup& a, const AbSubgroup& s) {
    // backtracking cyclic-basis search on the subgroup elements, highest
    // order first (same scheme as abelian_basis on full tables)
    std::vector<long long> by_order = s.elements;
    std::sort(by_order.begin(), by_order.end(), [&](long long x, long long y) {
        long long ox = a.order_of(a.element(x)), oy = a.order_of(a.element(y));
        if (ox != oy) return ox > oy;
        return x < y;
    });
    long long target = (long long)s.elements.size();
    std::vector<long long> basis;
    std::set<long long> span{0};
    std::function<bool()> grow = [&]() -> bool {
        if ((long long)span.size() == target) return true;
        for (long long cand : by_order) {
            if (span.count(cand)) continue;
            long long o = a.order_of(a.element(cand));
            std::set<long long> nspan = span;
            AbElt ce = a.element(cand);
            AbElt p = ce;
            bool direct = true;
            std::vector<long long> powers;
            for (long long e = 1; e < o && direct; ++e) {
                long long pi = a.index_of(p);
                if (span.count(pi)) direct = false;
                powers.push_back(pi);
                p = a.add(p, ce);
            }
            if (!direct) continue;
            for (long long pw : powers)
                for (long long old : span) {
                    long long y = a.index_of(a.add(a.element(pw), a.element(old)));
                    nspan.insert(y);
                }
            if ((long long)nspan.size() != (long long)span.size() * o) continue;
            basis.push_back(cand);
            std::swap(span, nspan);
            if (grow()) return true;
            basis.pop_back();
            std::swap(span, nspan);
        }
        return false;
    };
    check(grow(), errc::not_a_subgroup, "subgroup basis search failed");
    std::vector<long long> orders;
    for (long long b : basis) orders.push_back(a.order_of(a.element(b)));
    // FinAbGroup sorts ascending; keep generators aligned
    std::vector<size_t> perm(orders.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](size_t x, size_t y) { return orders[x] < orders[y]; });
    std::vector<long long> sorted_basis(basis.size());
    for (size_t i = 0; i < perm.size(); ++i) sorted_basis[i] = basis[perm[i]];
    FinAbGroup sub(orders);
    std::vector<std::vector<long long>> emb(a.rank(), std::vector<long long>(sub.rank(), 0));
    for (long long j = 0; j < sub.rank(); ++j) {
        AbElt be = a.element(sorted_basis[j]);
        for (long long i = 0; i < a.rank(); ++i) emb[i][j] = be[i];
    }
    SubgroupBasis out{sub, AbHom(sub, a, std::move(emb), true), {}};
    out.to_sub.assign(a.size(), -1);
    for (long long si = 0; si < sub.size(); ++si) {
        long long pi = a.index_of(out.embedding.apply(sub.element(si)));
        out.to_sub[pi] = si;
    }
    // every subgroup element must be hit
    for (long long e : s.elements)
        check(out.to_sub[e] >= 0, errc::not_a_subgroup, "subgroup basis does not span");
    return out;
}

} // namespace modcat
