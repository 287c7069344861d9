#include "modcat/metric.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "modcat/frobalg.hpp"

namespace modcat {

RootExponent QuadraticForm::bilinear(long long a, long long c) const {
    long long sum = group.index_of(group.add(group.element(a), group.element(c)));
    return values[sum] - values[a] - values[c];
}

MetricGroup validate_metric(const FinAbGroup& a, std::vector<RootExponent> values) {
    check((long long)values.size() == a.size(), errc::bad_input, "value table not total");
    QuadraticForm f{a, std::move(values)};
    check(f.values[0].is_zero(), errc::not_bilinear, "q(0) must vanish");
    for (long long x = 0; x < a.size(); ++x) {
        long long nx = a.index_of(a.neg(a.element(x)));
        check(f.values[x] == f.values[nx], errc::not_even, "q(a) != q(-a) at element " +
                                               std::to_string(x));
    }
    // biadditivity on generators: b(e_i + x, y) = b(e_i, y) + b(x, y)
    for (long long i = 0; i < a.rank(); ++i) {
        AbElt gen(a.rank(), 0);
        gen[i] = 1;
        long long gi = a.index_of(gen);
        for (long long x = 0; x < a.size(); ++x) {
            long long xg = a.index_of(a.add(a.element(x), gen));
            for (long long y = 0; y < a.size(); ++y)
                check(f.bilinear(xg, y) == f.bilinear(gi, y) + f.bilinear(x, y),
                      errc::not_bilinear, "polarization is not biadditive");
        }
    }
    MetricGroup m{std::move(f), {}};
    for (long long x = 0; x < a.size(); ++x) {
        bool rad = true;
        for (long long i = 0; i < a.rank() && rad; ++i) {
            AbElt gen(a.rank(), 0);
            gen[i] = 1;
            rad = m.form.bilinear(x, a.index_of(gen)).is_zero();
        }
        if (rad) m.radical.push_back(x);
    }
    return m;
}

void require_nondegenerate(const MetricGroup& m) {
    check(m.nondegenerate(), errc::degenerate,
          "form is degenerate with radical of order " + std::to_string(m.radical.size()));
}

CycloNumber gauss_sum(const MetricGroup& m, int sign) {
    CycloNumber acc;
    for (long long x = 0; x < m.group().size(); ++x) {
        RootExponent e = sign >= 0 ? m.form.values[x] : -m.form.values[x];
        acc += CycloNumber::root_of_unity(e);
    }
    return acc;
}

std::vector<IsotropicSubgroup> isotropic_subgroups(const MetricGroup& m, const AbAction* action,
                                                   long long cap) {
    auto all = subgroups(m.group(), nullptr, cap);
    std::vector<AbSubgroup> iso;
    for (auto& s : all) {
        bool ok = true;
        for (long long e : s.elements) ok = ok && m.form.values[e].is_zero();
        if (ok) iso.push_back(std::move(s));
    }
    std::vector<char> maximal(iso.size(), 1);
    for (size_t i = 0; i < iso.size(); ++i)
        for (size_t j = 0; j < iso.size(); ++j)
            if (i != j && iso[i].elements.size() < iso[j].elements.size() &&
                is_subgroup_of(iso[i], iso[j]))
                maximal[i] = 0;
    std::vector<IsotropicSubgroup> out;
    for (size_t i = 0; i < iso.size(); ++i) {
        if (action) {
            bool inv = true;
            const FiniteGroup& gam = action->group();
            for (long long gi = 0; gi < gam.size() && inv; ++gi)
                for (long long e : iso[i].elements) {
                    long long img = m.group().index_of(action->act(gi, m.group().element(e)));
                    if (!subgroup_contains(iso[i], img)) {
                        inv = false;
                        break;
                    }
                }
            if (!inv) continue;
        }
        out.push_back({iso[i], maximal[i] != 0});
    }
    return out;
}

AbSubgroup perp_subgroup(const MetricGroup& m, const AbSubgroup& b) {
    std::vector<long long> members;
    for (long long x = 0; x < m.group().size(); ++x) {
        bool perp = true;
        for (long long g : b.gens.empty() ? b.elements : b.gens)
            if (!m.form.bilinear(x, g).is_zero()) {
                perp = false;
                break;
            }
        if (perp) members.push_back(x);
    }
    AbSubgroup s;
    s.elements = std::move(members);
    s.gens = s.elements;
    return s;
}

SubquotientResult subquotient(const MetricGroup& m, const AbSubgroup& b) {
    for (long long e : b.elements)
        check(m.form.values[e].is_zero(), errc::not_isotropic,
              "subgroup is not isotropic at element " + std::to_string(e));
    AbSubgroup perp = perp_subgroup(m, b);
    check(is_subgroup_of(b, perp), errc::not_isotropic, "B not contained in B-perp");
    SubgroupBasis pb = subgroup_as_finab(m.group(), perp);
    // B inside perp coordinates
    AbSubgroup b_in;
    for (long long e : b.elements) b_in.elements.push_back(pb.to_sub[e]);
    std::sort(b_in.elements.begin(), b_in.elements.end());
    b_in.gens = b_in.elements;
    QuotientResult q = quotient(pb.group, b_in);
    // induced form: q'(coset) = q(any representative); verify independence
    std::vector<RootExponent> vals(q.quotient.size());
    for (long long qi = 0; qi < q.quotient.size(); ++qi) {
        AbElt rep_in_perp = q.section[qi];
        long long rep_parent = m.group().index_of(pb.embedding.apply(rep_in_perp));
        vals[qi] = m.form.values[rep_parent];
    }
    for (long long pi = 0; pi < pb.group.size(); ++pi) {
        long long qi = q.quotient.index_of(q.projection.apply(pb.group.element(pi)));
        long long parent = m.group().index_of(pb.embedding.apply(pb.group.element(pi)));
        check(m.form.values[parent] == vals[qi], errc::not_isotropic,
              "induced form depends on the coset representative");
    }
    MetricGroup out = validate_metric(q.quotient, std::move(vals));
    if (m.nondegenerate()) require_nondegenerate(out);
    return SubquotientResult{std::move(out), std::move(q), std::move(perp)};
}

namespace {

// Induced action on the subquotient along an invariant isotropic subgroup.
AbAction descend_action(const AbAction& act, const MetricGroup& m, const AbSubgroup& b,
                        const SubquotientResult& sq) {
    const FinAbGroup& quot = sq.metric.group();
    SubgroupBasis pb = subgroup_as_finab(m.group(), sq.perp);
    std::vector<AbHom> maps;
    for (long long g = 0; g < act.group().size(); ++g) {
        std::vector<std::vector<long long>> mat(quot.rank(), std::vector<long long>(quot.rank()));
        for (long long j = 0; j < quot.rank(); ++j) {
            AbElt ej(quot.rank(), 0);
            ej[j] = 1;
            // lift to perp, act in the parent, project back
            AbElt lift = sq.structure.section[quot.index_of(ej)];
            AbElt parent = pb.embedding.apply(lift);
            AbElt acted = act.act(g, parent);
            long long sub = pb.to_sub[m.group().index_of(acted)];
            check(sub >= 0, errc::bad_input, "action does not preserve B-perp");
            AbElt img = sq.structure.projection.apply(pb.group.element(sub));
            for (long long i = 0; i < quot.rank(); ++i) mat[i][j] = img[i];
        }
        maps.emplace_back(quot, quot, std::move(mat), true);
    }
    (void)b;
    return AbAction(act.group(), quot, std::move(maps), true);
}

} // namespace

namespace {

// Greedy maximal isotropic subgroup: repeatedly adjoin the least element
// that keeps the subgroup isotropic (with an action, adjoin whole orbits).
// A subgroup that cannot be extended this way is maximal among all
// (respectively all invariant) isotropic subgroups, since any larger
// isotropic subgroup would supply an extension element.
AbSubgroup greedy_maximal_isotropic(const MetricGroup& m, const AbAction* action) {
    const FinAbGroup& a = m.group();
    AbSubgroup b;
    b.elements = {0};
    for (;;) {
        bool extended = false;
        for (long long x = 1; x < a.size() && !extended; ++x) {
            if (subgroup_contains(b, x)) continue;
            if (!m.form.values[x].is_zero()) continue;
            std::vector<long long> gens = b.gens;
            gens.push_back(x);
            if (action) {
                for (long long g = 0; g < action->group().size(); ++g)
                    gens.push_back(a.index_of(action->act(g, a.element(x))));
            } else {
                // cheap pre-check: x must be perpendicular to b
                bool perp = true;
                for (long long e : b.elements)
                    if (!m.form.bilinear(x, e).is_zero()) {
                        perp = false;
                        break;
                    }
                if (!perp) continue;
            }
            AbSubgroup cand = closure_subgroup(a, gens);
            bool iso = true;
            for (long long e : cand.elements)
                if (!m.form.values[e].is_zero()) {
                    iso = false;
                    break;
                }
            if (iso) {
                b = std::move(cand);
                extended = true;
            }
        }
        if (!extended) break;
    }
    return b;
}

} // namespace

WittWitness witt_reduce(const MetricGroup& m, const AbAction* action, long long cap) {
    check(m.group().size() <= cap, errc::cap_exceeded, "witt reduction above cap");
    WittWitness w;
    w.stages.push_back(m);
    MetricGroup cur = m;
    AbAction cur_action;
    if (action) cur_action = *action;
    for (;;) {
        AbSubgroup chosen = greedy_maximal_isotropic(cur, action ? &cur_action : nullptr);
        if (chosen.elements.size() == 1) break;
        SubquotientResult sq = subquotient(cur, chosen);
        if (action) cur_action = descend_action(cur_action, cur, chosen, sq);
        w.chain.push_back(std::move(chosen));
        cur = sq.metric;
        w.stages.push_back(cur);
    }
    w.residue = cur;
    return w;
}

MetricGroup orthogonal_sum(const MetricGroup& m1, const MetricGroup& m2) {
    const FinAbGroup& a1 = m1.group();
    const FinAbGroup& a2 = m2.group();
    std::vector<long long> concat = a1.orders();
    concat.insert(concat.end(), a2.orders().begin(), a2.orders().end());
    // FinAbGroup sorts orders; track where each original coordinate lands
    std::vector<size_t> perm(concat.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](size_t x, size_t y) { return concat[x] < concat[y]; });
    std::vector<size_t> pos(concat.size()); // original index -> sorted position
    for (size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;
    FinAbGroup sum(concat);
    std::vector<RootExponent> vals(sum.size());
    for (long long x = 0; x < sum.size(); ++x) {
        AbElt e = sum.element(x);
        AbElt e1(a1.rank()), e2(a2.rank());
        for (long long i = 0; i < a1.rank(); ++i) e1[i] = e[pos[i]];
        for (long long i = 0; i < a2.rank(); ++i) e2[i] = e[pos[a1.rank() + i]];
        vals[x] = m1.form.q(e1) + m2.form.q(e2);
    }
    return validate_metric(sum, std::move(vals));
}

namespace {

bool metric_iso_search(const MetricGroup& m1, const MetricGroup& m2, size_t gi,
                       std::vector<AbElt>& images) {
    const FinAbGroup& a1 = m1.group();
    const FinAbGroup& a2 = m2.group();
    if ((long long)gi == a1.rank()) {
        std::vector<std::vector<long long>> mat(a2.rank(), std::vector<long long>(a1.rank()));
        for (long long j = 0; j < a1.rank(); ++j)
            for (long long i = 0; i < a2.rank(); ++i) mat[i][j] = images[j][i];
        // wrong shapes / ill-defined columns simply fail the candidate
        for (long long j = 0; j < a1.rank(); ++j)
            for (long long i = 0; i < a2.rank(); ++i)
                if ((__int128)a1.orders()[j] * mat[i][j] % a2.orders()[i] != 0) return false;
        AbHom h(a1, a2, std::move(mat), false);
        if (!h.is_bijective()) return false;
        for (long long x = 0; x < a1.size(); ++x)
            if (!(m1.form.values[x] == m2.form.q(h.apply(a1.element(x))))) return false;
        return true;
    }
    AbElt gen(a1.rank(), 0);
    gen[gi] = 1;
    long long gidx = a1.index_of(gen);
    for (long long y = 0; y < a2.size(); ++y) {
        AbElt ye = a2.element(y);
        if (a2.order_of(ye) != a1.orders()[gi]) continue;
        if (!(m2.form.values[y] == m1.form.values[gidx])) continue;
        bool ok = true;
        for (size_t j = 0; j < gi && ok; ++j) {
            AbElt gj(a1.rank(), 0);
            gj[j] = 1;
            RootExponent b1 = m1.form.bilinear(gidx, a1.index_of(gj));
            RootExponent b2 = m2.form.bilinear(y, a2.index_of(images[j]));
            ok = b1 == b2;
        }
        if (!ok) continue;
        images.push_back(ye);
        if (metric_iso_search(m1, m2, gi + 1, images)) return true;
        images.pop_back();
    }
    return false;
}

} // namespace

bool metric_isomorphic(const MetricGroup& m1, const MetricGroup& m2) {
    if (m1.group().size() != m2.group().size()) return false;
    if (m1.group().orders() != m2.group().orders()) return false;
    std::multiset<std::pair<long long, long long>> v1, v2;
    for (long long x = 0; x < m1.group().size(); ++x)
        v1.insert({m1.form.values[x].num(), m1.form.values[x].den()});
    for (long long x = 0; x < m2.group().size(); ++x)
        v2.insert({m2.form.values[x].num(), m2.form.values[x].den()});
    if (v1 != v2) return false;
    std::vector<AbElt> images;
    return metric_iso_search(m1, m2, 0, images);
}

const char* witt_class_name(WittClass c) {
    switch (c) {
        case WittClass::CpPlusCompatible: return "CpPlusCompatible";
        case WittClass::CpMinusCompatible: return "CpMinusCompatible";
        case WittClass::Neither: return "Neither";
    }
    return "?";
}

WittClass classify_cp_witt(const MetricGroup& m, long long cap) {
    long long n = m.group().size();
    if (n > 1) {
        long long p = 0;
        long long t = n;
        for (long long d = 2; d * d <= t; ++d)
            if (t % d == 0) {
                p = d;
                break;
            }
        if (p == 0) p = t;
        while (t % p == 0) t /= p;
        check(t == 1, errc::bad_input, "not a metric p-group");
        WittWitness w = witt_reduce(m, nullptr, cap);
        if (w.residue.group().size() == 1) return WittClass::CpPlusCompatible;
        if (metric_isomorphic(w.residue, norm_form(p))) return WittClass::CpMinusCompatible;
        return WittClass::Neither;
    }
    return WittClass::CpPlusCompatible;
}

MetricGroup hyperbolic_form(const FinAbGroup& a) {
    std::vector<long long> concat = a.orders();
    concat.insert(concat.end(), a.orders().begin(), a.orders().end());
    std::vector<size_t> perm(concat.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](size_t x, size_t y) { return concat[x] < concat[y]; });
    std::vector<size_t> pos(concat.size());
    for (size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;
    FinAbGroup h(concat);
    std::vector<RootExponent> vals(h.size());
    for (long long x = 0; x < h.size(); ++x) {
        AbElt e = h.element(x);
        RootExponent q;
        for (long long i = 0; i < a.rank(); ++i)
            q = q + RootExponent(e[pos[i]] * e[pos[a.rank() + i]], a.orders()[i]);
        vals[x] = q;
    }
    return validate_metric(h, std::move(vals));
}

AbSubgroup multiples_subgroup(const FinAbGroup& a, long long k) {
    std::vector<long long> gens;
    for (long long i = 0; i < a.rank(); ++i) {
        AbElt e(a.rank(), 0);
        e[i] = k % a.orders()[i];
        gens.push_back(a.index_of(e));
    }
    return closure_subgroup(a, gens);
}

} // namespace modcat
