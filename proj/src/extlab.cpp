#include "modcat/extlab.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace modcat {

void LocalSystemDatum::validate() const {
    extension.validate();
    const FinAbGroup& c = extension.sub.module();
    check(c.rank() == 1, errc::bad_input, "kernel of a local system must be cyclic");
    check(chi_gen.order() == c.orders()[0], errc::bad_input,
          "character of the kernel must be faithful");
    check(extension.sub.is_trivial(), errc::bad_input,
          "Gamma must act trivially on the kernel");
}

LocalSystemDatum induced_local_system(const FiniteGroup& gamma, long long p, long long n) {
    LocalSystemDatum out{induced_module_ses(gamma, p, n), RootExponent(1, 1)};
    long long pn = out.extension.sub.module().orders()[0];
    out.chi_gen = RootExponent(1, pn);
    out.validate();
    return out;
}

LocalSystemDatum cyclic_local_system(const FiniteGroup& gamma, long long a, long long b) {
    check(a >= 2 && b >= 2, errc::bad_input, "cyclic local system needs orders > 1");
    FinAbGroup c({a}), mid({a * b}), n({b});
    AbHom incl(c, mid, {{b}});
    AbHom proj(mid, n, {{1}});
    std::vector<AbElt> section(b);
    for (long long i = 0; i < b; ++i) section[i] = AbElt{i};
    LocalSystemDatum out{SESData{AbAction(gamma, c), AbAction(gamma, mid), AbAction(gamma, n),
                                 incl, proj, std::move(section)},
                         RootExponent(1, a)};
    out.validate();
    return out;
}

LocalSystemDatum trace_local_system(const FiniteGroup& gamma, const FiniteField& field) {
    long long p = field.p(), m = field.degree();
    FinAbGroup n(std::vector<long long>(m, p));
    FinAbGroup big(std::vector<long long>(m, p * p));
    // K0 = { p * lift(x) : Tr(x) = 0 }
    std::vector<long long> k0_gens;
    for (long long i = 0; i < field.size(); ++i) {
        FFElt x = field.from_index(i);
        if (field.trace(x) != 0) continue;
        AbElt v(m);
        for (long long j = 0; j < m; ++j) v[j] = p * x[j];
        k0_gens.push_back(big.index_of(v));
    }
    AbSubgroup k0 = closure_subgroup(big, k0_gens);
    QuotientResult q = quotient(big, k0);
    const FinAbGroup& mid = q.quotient;
    // inclusion of C = Z/p: generator = image of p * lift(t), Tr(t) = 1
    FFElt t = field.zero();
    for (long long i = 0; i < field.size(); ++i)
        if (field.trace(field.from_index(i)) == 1) {
            t = field.from_index(i);
            break;
        }
    check(field.trace(t) == 1, errc::bad_input, "trace is not surjective");
    AbElt pt(m);
    for (long long j = 0; j < m; ++j) pt[j] = p * t[j];
    AbElt cgen = q.projection.apply(pt);
    FinAbGroup c({p});
    std::vector<std::vector<long long>> incl_mat(mid.rank(), std::vector<long long>(1));
    for (long long i = 0; i < mid.rank(); ++i) incl_mat[i][0] = cgen[i];
    AbHom incl(c, mid, std::move(incl_mat), true);
    // projection mid -> N: reduce a representative mod p
    std::vector<std::vector<long long>> proj_mat(m, std::vector<long long>(mid.rank()));
    for (long long j = 0; j < mid.rank(); ++j) {
        AbElt ej(mid.rank(), 0);
        ej[j] = 1;
        const AbElt& rep = q.section[mid.index_of(ej)];
        for (long long i = 0; i < m; ++i) proj_mat[i][j] = rep[i] % p;
    }
    AbHom proj(mid, n, std::move(proj_mat), true);
    // section: x -> image of its coordinate lift
    std::vector<AbElt> section(n.size());
    for (long long i = 0; i < n.size(); ++i) {
        AbElt x = n.element(i);
        section[i] = q.projection.apply(x); // lift has the same coordinates in big
    }
    LocalSystemDatum out{SESData{AbAction(gamma, c), AbAction(gamma, mid), AbAction(gamma, n),
                                 incl, proj, std::move(section)},
                         RootExponent(1, p)};
    out.validate();
    return out;
}

LocalSystemDatum split_local_system(long long c_order, const AbAction& n_action) {
    const FiniteGroup& gamma = n_action.group();
    const FinAbGroup& n = n_action.module();
    FinAbGroup c({c_order});
    std::vector<long long> mid_orders = n.orders();
    mid_orders.push_back(c_order);
    // FinAbGroup sorts; track where the C coordinate lands
    std::vector<long long> concat = mid_orders;
    std::vector<size_t> perm(concat.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](size_t x, size_t y) { return concat[x] < concat[y]; });
    std::vector<size_t> pos(concat.size());
    for (size_t i = 0; i < perm.size(); ++i) pos[perm[i]] = i;
    size_t c_pos = pos[n.rank()];
    FinAbGroup mid(concat);
    std::vector<std::vector<long long>> incl_mat(mid.rank(), std::vector<long long>(1, 0));
    incl_mat[c_pos][0] = 1;
    std::vector<std::vector<long long>> proj_mat(n.rank(),
                                                 std::vector<long long>(mid.rank(), 0));
    for (long long i = 0; i < n.rank(); ++i) proj_mat[i][pos[i]] = 1;
    std::vector<AbElt> section(n.size());
    for (long long i = 0; i < n.size(); ++i) {
        AbElt x = n.element(i);
        AbElt s(mid.rank(), 0);
        for (long long j = 0; j < n.rank(); ++j) s[pos[j]] = x[j];
        section[i] = s;
    }
    std::vector<AbHom> mid_maps;
    for (long long g = 0; g < gamma.size(); ++g) {
        std::vector<std::vector<long long>> mat(mid.rank(),
                                                std::vector<long long>(mid.rank(), 0));
        mat[c_pos][c_pos] = 1;
        const auto& nm = n_action.map(g).matrix();
        for (long long i = 0; i < n.rank(); ++i)
            for (long long j = 0; j < n.rank(); ++j) mat[pos[i]][pos[j]] = nm[i][j];
        mid_maps.emplace_back(mid, mid, std::move(mat), false);
    }
    LocalSystemDatum out{SESData{AbAction(gamma, c), AbAction(gamma, mid, std::move(mid_maps)),
                                 n_action, AbHom(c, mid, std::move(incl_mat)),
                                 AbHom(mid, n, std::move(proj_mat)), std::move(section)},
                         RootExponent(1, c_order)};
    out.validate();
    return out;
}

void ClassTwoData::validate() const {
    check((long long)n_to_h.size() == n.size(), errc::bad_input, "N map of wrong size");
    check((long long)h_to_n.size() == h.size(), errc::bad_input, "N map of wrong size");
    // embedding is a homomorphism onto a central subgroup
    for (long long i = 0; i < n.size(); ++i) {
        for (long long j = 0; j < n.size(); ++j) {
            long long sum = n.index_of(n.add(n.element(i), n.element(j)));
            check(h.mul(n_to_h[i], n_to_h[j]) == n_to_h[sum], errc::bad_input,
                  "N embedding is not a homomorphism");
        }
        for (long long a = 0; a < h.size(); ++a)
            check(h.mul(a, n_to_h[i]) == h.mul(n_to_h[i], a), errc::bad_input,
                  "N is not central");
        check(h_to_n[n_to_h[i]] == i, errc::bad_input, "N maps are not inverse");
    }
    // H/N commutative: all commutators land in N
    for (long long a = 0; a < h.size(); ++a)
        for (long long b = a + 1; b < h.size(); ++b)
            check(h_to_n[h.commutator(a, b)] >= 0, errc::bad_input, "H/N is not abelian");
}

AbElt ClassTwoData::commutator_in_n(long long a, long long k) const {
    long long c = h.commutator(a, k);
    check(h_to_n[c] >= 0, errc::bad_input, "commutator outside N");
    return n.element(h_to_n[c]);
}

SplittingWitness pullback_trivial(const LocalSystemDatum& l, const FiniteGroup& h,
                                  const std::vector<AbElt>& phi) {
    const FinAbGroup& ngrp = l.n_group();
    const FinAbGroup& mid = l.extension.mid.module();
    const FinAbGroup& c = l.extension.sub.module();
    check((long long)phi.size() == h.size(), errc::bad_input, "phi table of wrong size");
    // phi must be a homomorphism
    for (long long a = 0; a < h.size(); ++a)
        for (long long b = 0; b < h.size(); ++b) {
            AbElt want = ngrp.add(phi[a], phi[b]);
            check(ngrp.is_zero(ngrp.sub(phi[h.mul(a, b)], want)), errc::bad_input,
                  "phi is not a homomorphism");
        }
    // factor through the abelianization (any hom to an abelian group does)
    auto derived = commutator_subgroup(h);
    QuotientGroup hab = quotient_group(h, derived);
    for (long long x : derived)
        check(ngrp.is_zero(phi[x]), errc::bad_input, "phi does not kill commutators");

    // unknowns: correction c(hbar) for each nonidentity coset, valued in C;
    // u(h) = s(phi(h)) + incl(c(h)) must be a homomorphism.
    long long q = hab.group.size();
    long long crank = c.rank(); // = 1
    ModSystem sys;
    sys.ncols = q * crank;
    sys.var_mod.assign(sys.ncols, c.orders()[0]);
    for (long long j = 0; j < crank; ++j) sys.var_mod[0 * crank + j] = 1; // c(1) = 0
    sys.nrows = q * q * crank;
    sys.row_mod.assign(sys.nrows, c.orders()[0]);
    std::vector<long long> rhs(sys.nrows, 0);
    // c(ab) - c(a) - c(b) = -(s(phi a) + s(phi b) - s(phi ab)) read in C
    std::map<AbElt, AbElt> to_c;
    for (long long i = 0; i < c.size(); ++i)
        to_c[mid.reduce(l.extension.incl.apply(c.element(i)))] = c.element(i);
    auto sec = [&](long long hab_elt) -> const AbElt& {
        return l.extension.section[ngrp.index_of(phi[hab.reps[hab_elt]])];
    };
    for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b) {
            long long ab = hab.group.mul(a, b);
            long long row = (a * q + b) * crank;
            sys.add(row, ab * crank, 1);
            sys.add(row, a * crank, -1);
            sys.add(row, b * crank, -1);
            AbElt t = mid.sub(mid.add(sec(a), sec(b)), sec(ab));
            auto it = to_c.find(mid.reduce(t));
            check(it != to_c.end(), errc::bad_input, "section defect outside C");
            for (long long j = 0; j < crank; ++j) rhs[row + j] = -it->second[j];
        }
    auto sol = solve_linear_one(sys, rhs);
    SplittingWitness out;
    if (!sol.has_value()) return out;
    out.trivial = true;
    out.lift.resize(h.size());
    for (long long x = 0; x < h.size(); ++x) {
        long long hb = hab.coset_of[x];
        AbElt corr(crank);
        for (long long j = 0; j < crank; ++j) corr[j] = (*sol)[hb * crank + j];
        out.lift[x] = mid.add(l.extension.section[ngrp.index_of(phi[x])],
                              l.extension.incl.apply(corr));
    }
    // verify: u is a homomorphism lifting phi
    for (long long a = 0; a < h.size(); ++a) {
        check(ngrp.index_of(l.extension.proj.apply(out.lift[a])) == ngrp.index_of(phi[a]),
              errc::bad_input, "witness does not lift phi");
        for (long long b = 0; b < h.size(); ++b)
            check(mid.is_zero(mid.sub(out.lift[h.mul(a, b)],
                                      mid.add(out.lift[a], out.lift[b]))),
                  errc::bad_input, "witness is not a homomorphism");
    }
    return out;
}

std::vector<long long> radical_k(const ClassTwoData& data, const LocalSystemDatum& l) {
    check(l.n_group() == data.n, errc::bad_input, "local system on the wrong group");
    std::vector<long long> out;
    for (long long k = 0; k < data.h.size(); ++k) {
        std::vector<AbElt> phi(data.h.size());
        for (long long a = 0; a < data.h.size(); ++a) phi[a] = data.commutator_in_n(a, k);
        if (pullback_trivial(l, data.h, phi).trivial) out.push_back(k);
    }
    // K is a subgroup containing N
    for (long long i = 0; i < data.n.size(); ++i)
        check(std::binary_search(out.begin(), out.end(), data.n_to_h[i]), errc::bad_input,
              "radical does not contain N");
    for (long long a : out)
        for (long long b : out)
            check(std::binary_search(out.begin(), out.end(), data.h.mul(a, b)),
                  errc::bad_input, "radical is not a subgroup");
    return out;
}

void OuterActionData::validate() const {
    base.validate();
    loc.validate();
    check(loc.n_group() == base.n, errc::bad_input, "local system on the wrong group");
    check((long long)reps.size() == gamma.size(), errc::bad_input, "one rep per element");
    check(reps[0].images.size() == (size_t)base.h.size(), errc::bad_input, "rep size");
    const FiniteGroup& h = base.h;
    for (long long g = 0; g < gamma.size(); ++g) {
        const GroupMap& a = reps[g];
        check(a.is_bijective(), errc::bad_input, "rep is not an automorphism");
        // preserves N, inducing the action carried by the local system
        for (long long i = 0; i < base.n.size(); ++i) {
            long long img = a(base.n_to_h[i]);
            check(base.h_to_n[img] >= 0, errc::bad_input, "rep does not preserve N");
            AbElt want = loc.n_action().act(g, base.n.element(i));
            check(base.h_to_n[img] == base.n.index_of(want), errc::bad_input,
                  "rep action on N does not match the local system");
        }
        // trivial on H/N
        for (long long x = 0; x < h.size(); ++x)
            check(base.h_to_n[h.mul(a(x), h.inv(x))] >= 0, errc::bad_input,
                  "rep is not trivial on H/N");
    }
    // gamma -> Out(H): alpha_a alpha_b alpha_{ab}^{-1} inner
    for (long long a = 0; a < gamma.size(); ++a)
        for (long long b = 0; b < gamma.size(); ++b) {
            GroupMap comp = reps[a].compose(reps[b]);
            // find x with comp = conj_x o reps[ab]
            long long ab = gamma.mul(a, b);
            bool inner = false;
            for (long long x = 0; x < h.size() && !inner; ++x) {
                bool same = true;
                for (long long t = 0; t < h.size() && same; ++t)
                    same = comp(t) == h.conj(x, reps[ab](t));
                inner = same;
            }
            check(inner, errc::bad_input, "cosets do not form a homomorphism to Out(H)");
        }
    check(reps[0] == GroupMap::identity(h), errc::bad_input,
          "identity must be represented by the identity automorphism");
}

namespace {

// c_{alpha}(h) = h * alpha(h^{-1}), valued in N.
std::vector<AbElt> twisted_commutator(const ClassTwoData& base, const GroupMap& alpha) {
    std::vector<AbElt> phi(base.h.size());
    for (long long x = 0; x < base.h.size(); ++x) {
        long long v = base.h.mul(x, alpha(base.h.inv(x)));
        check(base.h_to_n[v] >= 0, errc::bad_input, "twisted commutator outside N");
        phi[x] = base.n.element(base.h_to_n[v]);
    }
    return phi;
}

} // namespace

CentralExtensionResult central_extension(const OuterActionData& data) {
    data.validate();
    const FiniteGroup& h = data.base.h;
    const FiniteGroup& gamma = data.gamma;

    // enumerate Inn(H) once
    std::vector<GroupMap> inners;
    std::map<std::vector<long long>, long long> seen;
    for (long long x = 0; x < h.size(); ++x) {
        GroupMap cx = inner_automorphism(h, x);
        if (!seen.count(cx.images)) {
            seen[cx.images] = (long long)inners.size();
            inners.push_back(std::move(cx));
        }
    }

    CentralExtensionResult out;
    std::vector<std::pair<long long, GroupMap>> elements; // (gamma, automorphism)
    std::map<std::pair<long long, std::vector<long long>>, long long> index;
    for (long long g = 0; g < gamma.size(); ++g) {
        std::vector<GroupMap> fiber;
        for (const auto& inn : inners) {
            GroupMap cand = data.reps[g].compose(inn);
            auto phi = twisted_commutator(data.base, cand);
            if (pullback_trivial(data.loc, h, phi).trivial) fiber.push_back(std::move(cand));
        }
        check(!fiber.empty(), errc::empty_fiber,
              "no lift over gamma element " + std::to_string(g) +
                  " pulls the local system back trivially");
        // canonical order inside the fiber: identity first over gamma = 0,
        // otherwise lexicographically least images first
        std::sort(fiber.begin(), fiber.end(),
                  [](const GroupMap& a, const GroupMap& b) { return a.images < b.images; });
        if (g == 0) {
            auto id = GroupMap::identity(h);
            auto it = std::find(fiber.begin(), fiber.end(), id);
            check(it != fiber.end(), errc::bad_input, "identity not in the unit fiber");
            std::rotate(fiber.begin(), it, it + 1);
        }
        for (auto& a : fiber) {
            index[{g, a.images}] = (long long)elements.size();
            elements.push_back({g, std::move(a)});
        }
    }
    long long n = (long long)elements.size();
    // multiplication: compose automorphisms, multiply the gamma parts
    std::vector<std::vector<long long>> table(n, std::vector<long long>(n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            long long g = gamma.mul(elements[i].first, elements[j].first);
            GroupMap comp = elements[i].second.compose(elements[j].second);
            auto it = index.find({g, comp.images});
            check(it != index.end(), errc::bad_input, "fibers are not closed under composition");
            table[i][j] = it->second;
        }
    out.k_gamma = FiniteGroup::from_table(table);
    for (auto& [g, a] : elements) {
        out.fiber_of.push_back(g);
        out.autos.push_back(a);
    }
    // the twisted-cocycle relation c_{ab}(x) = c_a(x) + a(c_b(x))
    {
        std::vector<std::vector<AbElt>> tc(n);
        for (long long i = 0; i < n; ++i)
            tc[i] = twisted_commutator(data.base, elements[i].second);
        for (long long i = 0; i < n; ++i)
            for (long long j = 0; j < n; ++j) {
                auto cab = twisted_commutator(data.base,
                                              elements[i].second.compose(elements[j].second));
                for (long long x = 0; x < h.size(); ++x) {
                    AbElt want = data.base.n.add(
                        tc[i][x], data.loc.n_action().act(elements[i].first, tc[j][x]));
                    check(data.base.n.is_zero(data.base.n.sub(cab[x], want)), errc::bad_input,
                          "twisted commutator relation fails");
                }
            }
    }

    // K = radical, K/N model
    out.k_elements = radical_k(data.base, data.loc);
    SubgroupGroup ksub = subgroup_as_group(h, out.k_elements);
    std::vector<long long> n_in_k;
    for (long long i = 0; i < data.base.n.size(); ++i)
        n_in_k.push_back(ksub.to_sub[data.base.n_to_h[i]]);
    QuotientGroup kq = quotient_group(ksub.group, n_in_k);
    check(kq.group.is_abelian(), errc::bad_input, "K/N is not abelian");
    AbelianBasis ab = abelian_basis(kq.group);
    std::vector<size_t> perm(ab.orders.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](size_t a, size_t b) { return ab.orders[a] < ab.orders[b]; });
    out.kn = FinAbGroup(ab.orders);
    auto kq_to_kn = [&](long long kq_elt) {
        AbElt v(out.kn.rank());
        for (long long i = 0; i < out.kn.rank(); ++i) v[i] = ab.coords[kq_elt][perm[i]];
        return v;
    };
    out.kn_to_h.resize(out.kn.size());
    {
        std::map<AbElt, long long> kn_index;
        for (long long e = 0; e < kq.group.size(); ++e)
            kn_index[kq_to_kn(e)] = ksub.from_sub[kq.reps[e]];
        for (long long i = 0; i < out.kn.size(); ++i)
            out.kn_to_h[i] = kn_index.at(out.kn.element(i));
    }

    // K_1 must be exactly the inner automorphisms by elements of K
    {
        std::map<std::vector<long long>, long long> k1_as_kn;
        for (long long k : out.k_elements)
            k1_as_kn[inner_automorphism(h, k).images] =
                out.kn.index_of(kq_to_kn(kq.coset_of[ksub.to_sub[k]]));
        long long count = 0;
        for (long long i = 0; i < n; ++i)
            if (out.fiber_of[i] == 0) {
                check(k1_as_kn.count(out.autos[i].images), errc::bad_input,
                      "unit fiber contains a non-inner automorphism");
                ++count;
            }
        check(count == out.kn.size(), errc::bad_input, "unit fiber is not K/N");
    }

    // chosen lifts and the extracted 2-cocycle, valued in K/N with the
    // trivial Gamma-action
    out.lifts.assign(gamma.size(), -1);
    for (long long i = 0; i < n; ++i)
        if (out.lifts[out.fiber_of[i]] < 0) out.lifts[out.fiber_of[i]] = i;
    std::map<std::vector<long long>, long long> inner_to_kn;
    for (long long k : out.k_elements)
        inner_to_kn[inner_automorphism(h, k).images] =
            out.kn.index_of(kq_to_kn(kq.coset_of[ksub.to_sub[k]]));
    AbAction kn_action(gamma, out.kn);
    Cochain f(kn_action, 2);
    for (long long a = 0; a < gamma.size(); ++a)
        for (long long b = 0; b < gamma.size(); ++b) {
            long long ab_elt = out.lifts[gamma.mul(a, b)];
            long long prod = out.k_gamma.mul(out.lifts[a], out.lifts[b]);
            long long d = out.k_gamma.mul(prod, out.k_gamma.inv(ab_elt));
            check(out.fiber_of[d] == 0, errc::bad_input, "cocycle defect outside K_1");
            auto it = inner_to_kn.find(out.autos[d].images);
            check(it != inner_to_kn.end(), errc::bad_input, "cocycle defect not inner");
            f.set_value(std::vector<long long>{a, b}, out.kn.element(it->second));
        }
    check(f.is_normalized() && is_cocycle(f), errc::bad_input,
          "extracted central-extension cocycle invalid");
    out.f = std::move(f);
    return out;
}

std::vector<std::vector<long long>> default_f_lift(const OuterActionData& data,
                                                   const CentralExtensionResult& ce) {
    // F(a,b) = the canonical H-representative of f(a,b) in K
    long long q = data.gamma.size();
    std::vector<std::vector<long long>> out(q, std::vector<long long>(q));
    for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b) {
            long long kn_idx = ce.kn.index_of(ce.f.value(std::vector<long long>{a, b}));
            out[a][b] = ce.kn_to_h[kn_idx];
        }
    return out;
}

Cochain obstruction_omega(const OuterActionData& data, const CentralExtensionResult& ce,
                          const std::vector<std::vector<long long>>& f_lift) {
    const FiniteGroup& h = data.base.h;
    const FiniteGroup& gamma = data.gamma;
    long long q = gamma.size();
    check((long long)f_lift.size() == q, errc::lift_invalid, "lift of wrong shape");
    // each F(a,b) must be in K and reduce to f(a,b) in K/N
    std::map<std::vector<long long>, long long> inner_to_idx;
    for (long long a = 0; a < q; ++a) {
        check((long long)f_lift[a].size() == q, errc::lift_invalid, "lift of wrong shape");
        for (long long b = 0; b < q; ++b) {
            long long x = f_lift[a][b];
            check(std::binary_search(ce.k_elements.begin(), ce.k_elements.end(), x),
                  errc::lift_invalid, "lift value outside K");
            long long want = ce.kn.index_of(ce.f.value(std::vector<long long>{a, b}));
            long long have = ce.kn_to_h[want];
            // same coset of N?
            long long diff = h.mul(x, h.inv(have));
            check(data.base.h_to_n[diff] >= 0, errc::lift_invalid,
                  "lift does not reduce to f in K/N");
        }
    }
    AbAction n_act = data.loc.n_action();
    Cochain omega(n_act, 3);
    for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b)
            for (long long c = 0; c < q; ++c) {
                // omega = a~(F(b,c)) F(a,bc) (F(a,b) F(ab,c))^{-1}
                const GroupMap& atil = ce.autos[ce.lifts[a]];
                long long lhs = h.mul(atil(f_lift[b][c]), f_lift[a][gamma.mul(b, c)]);
                long long rhs = h.mul(f_lift[a][b], f_lift[gamma.mul(a, b)][c]);
                long long w = h.mul(lhs, h.inv(rhs));
                check(data.base.h_to_n[w] >= 0, errc::bad_input,
                      "obstruction value outside N");
                omega.set_value(std::vector<long long>{a, b, c},
                                data.base.n.element(data.base.h_to_n[w]));
            }
    check(omega.is_normalized(), errc::bad_input, "omega is not normalized");
    check(is_cocycle(omega), errc::bad_input, "omega is not a 3-cocycle");
    return omega;
}

Cochain beta_obstruction(const OuterActionData& data, const Cochain& omega) {
    Cochain b = connecting_map(data.loc.extension, omega);
    check(is_cocycle(b), errc::not_a_cocycle, "beta is not a cocycle");
    return b;
}

Cochain associator_from_extension(const CocycleExtension& ext, const SESData& ses) {
    const FiniteGroup& gamma = ext.module.group();
    // recover the cocycle by multiplying section elements in the extension
    Cochain f(ses.quot, 2);
    for (long long a = 0; a < gamma.size(); ++a)
        for (long long b = 0; b < gamma.size(); ++b) {
            auto prod = ext.mul(ext.section(a), ext.section(b));
            auto defect = ext.mul(prod, ext.inv(ext.section(gamma.mul(a, b))));
            check(defect.second == 0, errc::section_invalid, "section defect off the fiber");
            f.set_value(std::vector<long long>{a, b}, defect.first);
        }
    check(is_cocycle(f), errc::bad_input, "recovered extension cocycle invalid");
    return connecting_map(ses, f);
}

Cochain associator_from_extension(const ExtensionData& ext, const SESData& ses) {
    const FiniteGroup& gamma = ext.module.group();
    const FinAbGroup& m = ext.module.module();
    const FiniteGroup& g = ext.total;
    std::map<long long, long long> g_to_m;
    for (long long i = 0; i < m.size(); ++i) g_to_m[ext.module_elt[i]] = i;
    Cochain f(ses.quot, 2);
    for (long long a = 0; a < gamma.size(); ++a)
        for (long long b = 0; b < gamma.size(); ++b) {
            long long ab = gamma.mul(a, b);
            long long x = g.mul(g.mul(ext.section[a], ext.section[b]), g.inv(ext.section[ab]));
            auto it = g_to_m.find(x);
            check(it != g_to_m.end(), errc::section_invalid, "section defect off the fiber");
            f.set_value(std::vector<long long>{a, b}, m.element(it->second));
        }
    check(is_cocycle(f), errc::bad_input, "recovered extension cocycle invalid");
    return connecting_map(ses, f);
}

} // namespace modcat
