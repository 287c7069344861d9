#include "modcat/groupcoh.hpp"

#include "modcat/frobalg.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace modcat {

namespace {

long long pow_ll(long long b, long long e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

void check_cohomology_caps(const FiniteGroup& gamma, long long degree) {
    long long n = gamma.size();
    check(degree >= 0 && degree <= 4, errc::cap_exceeded, "cochain degree out of range");
    if (degree <= 3)
        check(n <= 16, errc::cap_exceeded, "|Gamma| above cap 16 for degree <= 3");
    else
        check(n <= 8, errc::cap_exceeded, "|Gamma| above cap 8 for degree 4");
}

} // namespace

Cochain::Cochain(AbAction module, long long degree)
    : module_(std::move(module)), degree_(degree) {
    check(degree >= 0, errc::bad_input, "negative cochain degree");
    long long n = module_.group().size();
    long long size = 1;
    for (long long i = 0; i < degree; ++i) {
        check(size <= (1ll << 24) / n, errc::cap_exceeded, "cochain table too large");
        size *= n;
    }
    values_.assign(size, module_.module().zero());
}

long long Cochain::tuple_index(const std::vector<long long>& tuple) const {
    check((long long)tuple.size() == degree_, errc::bad_input, "tuple of wrong arity");
    long long n = module_.group().size();
    long long idx = 0;
    for (long long g : tuple) {
        check(g >= 0 && g < n, errc::bad_input, "tuple entry out of range");
        idx = idx * n + g;
    }
    return idx;
}

std::vector<long long> Cochain::tuple_of(long long index) const {
    long long n = module_.group().size();
    std::vector<long long> tuple(degree_);
    for (long long i = degree_; i-- > 0;) {
        tuple[i] = index % n;
        index /= n;
    }
    return tuple;
}

void Cochain::set_value(long long tuple_index, AbElt v) {
    values_[tuple_index] = module_.module().reduce(std::move(v));
}

void Cochain::set_value(const std::vector<long long>& tuple, AbElt v) {
    set_value(tuple_index(tuple), std::move(v));
}

bool Cochain::is_zero() const {
    for (const auto& v : values_)
        if (!module_.module().is_zero(v)) return false;
    return true;
}

bool Cochain::is_normalized() const {
    for (long long idx = 0; idx < table_size(); ++idx) {
        std::vector<long long> t = tuple_of(idx);
        bool has_id = false;
        for (long long g : t) has_id |= g == 0;
        if (has_id && !module_.module().is_zero(values_[idx])) return false;
    }
    return true;
}

Cochain Cochain::operator+(const Cochain& o) const {
    check(degree_ == o.degree_, errc::bad_input, "cochain degree mismatch");
    Cochain out = *this;
    for (long long i = 0; i < table_size(); ++i)
        out.values_[i] = module_.module().add(values_[i], o.values_[i]);
    return out;
}

Cochain Cochain::operator-(const Cochain& o) const {
    check(degree_ == o.degree_, errc::bad_input, "cochain degree mismatch");
    Cochain out = *this;
    for (long long i = 0; i < table_size(); ++i)
        out.values_[i] = module_.module().sub(values_[i], o.values_[i]);
    return out;
}

bool Cochain::operator==(const Cochain& o) const {
    if (degree_ != o.degree_ || table_size() != o.table_size()) return false;
    for (long long i = 0; i < table_size(); ++i)
        if (!module_.module().is_zero(module_.module().sub(values_[i], o.values_[i])))
            return false;
    return true;
}

std::vector<long long> Cochain::flat() const {
    long long rank = module_.module().rank();
    std::vector<long long> out(table_size() * rank);
    for (long long i = 0; i < table_size(); ++i)
        for (long long j = 0; j < rank; ++j) out[i * rank + j] = values_[i][j];
    return out;
}

Cochain Cochain::from_flat(const AbAction& module, long long degree,
                           const std::vector<long long>& coords) {
    Cochain c(module, degree);
    long long rank = module.module().rank();
    check((long long)coords.size() == c.table_size() * rank, errc::bad_input,
          "flat coordinate size mismatch");
    for (long long i = 0; i < c.table_size(); ++i) {
        AbElt v(rank);
        for (long long j = 0; j < rank; ++j) v[j] = coords[i * rank + j];
        c.values_[i] = module.module().reduce(std::move(v));
    }
    return c;
}

Cochain coboundary(const Cochain& c) {
    const FiniteGroup& gamma = c.gamma();
    const FinAbGroup& m = c.module().module();
    long long n = gamma.size();
    long long deg = c.degree();
    Cochain out(c.module(), deg + 1);
    std::vector<long long> t(deg + 1, 0);
    for (long long idx = 0; idx < out.table_size(); ++idx) {
        t = out.tuple_of(idx);
        // g0 . c(g1..gn)
        std::vector<long long> head(t.begin() + 1, t.end());
        AbElt acc = c.module().act(t[0], c.value(head));
        // alternating inner face maps
        long long sign = -1;
        for (long long i = 1; i <= deg; ++i) {
            std::vector<long long> face;
            face.reserve(deg);
            for (long long j = 0; j < i - 1; ++j) face.push_back(t[j]);
            face.push_back(gamma.mul(t[i - 1], t[i]));
            for (long long j = i + 1; j <= deg; ++j) face.push_back(t[j]);
            const AbElt& v = c.value(face);
            acc = sign > 0 ? m.add(acc, v) : m.sub(acc, v);
            sign = -sign;
        }
        // last face drops g_n
        std::vector<long long> tail(t.begin(), t.end() - 1);
        const AbElt& v = c.value(tail);
        acc = sign > 0 ? m.add(acc, v) : m.sub(acc, v);
        out.set_value(idx, std::move(acc));
    }
    return out;
}

bool is_cocycle(const Cochain& c) { return coboundary(c).is_zero(); }

ModSystem coboundary_system(const AbAction& module, long long degree) {
    // unknowns: normalized (degree)-cochains; equations: value of the
    // coboundary at every tuple of non-identity elements of degree+1.
    const FiniteGroup& gamma = module.group();
    const FinAbGroup& m = module.module();
    long long n = gamma.size();
    long long rank = m.rank();
    Cochain uk(module, degree);     // for indexing only
    Cochain eq(module, degree + 1); // for indexing only

    ModSystem sys;
    sys.ncols = uk.table_size() * rank;
    sys.nrows = eq.table_size() * rank;
    sys.var_mod.reserve(sys.ncols);
    for (long long i = 0; i < uk.table_size(); ++i)
        for (long long j = 0; j < rank; ++j) sys.var_mod.push_back(m.orders()[j]);
    sys.row_mod.reserve(sys.nrows);
    for (long long i = 0; i < eq.table_size(); ++i)
        for (long long j = 0; j < rank; ++j) sys.row_mod.push_back(m.orders()[j]);

    // normalized unknowns: pin identity-containing tuples to zero by giving
    // them var_mod 1? No: keep full moduli, and add the normalization rows.
    std::vector<char> norm_tuple(uk.table_size(), 0);
    for (long long i = 0; i < uk.table_size(); ++i) {
        auto t = uk.tuple_of(i);
        for (long long g : t) norm_tuple[i] |= g == 0;
        if (norm_tuple[i])
            for (long long j = 0; j < rank; ++j) sys.var_mod[i * rank + j] = 1;
    }

    for (long long idx = 0; idx < eq.table_size(); ++idx) {
        std::vector<long long> t = eq.tuple_of(idx);
        bool has_id = false;
        for (long long g : t) has_id |= g == 0;
        if (has_id) continue; // normalized subcomplex: rows vanish identically
        // g0 . x(g1..gn): action matrix entries
        {
            std::vector<long long> head(t.begin() + 1, t.end());
            long long col_t = uk.tuple_index(head);
            if (!norm_tuple[col_t]) {
                const auto& mat = module.map(t[0]).matrix();
                for (long long i = 0; i < rank; ++i)
                    for (long long j = 0; j < rank; ++j)
                        sys.add(idx * rank + i, col_t * rank + j, mat[i][j]);
            }
        }
        long long sign = -1;
        for (long long i = 1; i <= degree; ++i) {
            std::vector<long long> face;
            for (long long j = 0; j < i - 1; ++j) face.push_back(t[j]);
            face.push_back(gamma.mul(t[i - 1], t[i]));
            for (long long j = i + 1; j <= degree; ++j) face.push_back(t[j]);
            long long col_t = uk.tuple_index(face);
            if (!norm_tuple[col_t])
                for (long long r = 0; r < rank; ++r)
                    sys.add(idx * rank + r, col_t * rank + r, sign);
            sign = -sign;
        }
        {
            std::vector<long long> tail(t.begin(), t.end() - 1);
            long long col_t = uk.tuple_index(tail);
            if (!norm_tuple[col_t])
                for (long long r = 0; r < rank; ++r)
                    sys.add(idx * rank + r, col_t * rank + r, sign);
        }
    }
    return sys;
}

CocycleComparison cocycle_tests(const Cochain& c1, const Cochain& c2) {
    check(c1.degree() == c2.degree(), errc::bad_input, "cocycle degree mismatch");
    CocycleComparison out;
    out.first_is_cocycle = is_cocycle(c1);
    out.second_is_cocycle = is_cocycle(c2);
    Cochain diff = c1 - c2;
    check(diff.is_normalized(), errc::bad_input, "cochains must be normalized");
    if (c1.degree() == 0) {
        out.witness = diff.is_zero() ? std::optional<Cochain>(Cochain(c1.module(), 0))
                                     : std::nullopt;
        return out;
    }
    ModSystem sys = coboundary_system(c1.module(), c1.degree() - 1);
    // rhs: diff at non-identity tuples (identity rows are zero on both sides)
    std::vector<long long> rhs(sys.nrows, 0);
    long long rank = c1.module().module().rank();
    for (long long i = 0; i < diff.table_size(); ++i)
        for (long long j = 0; j < rank; ++j) rhs[i * rank + j] = diff.value(i)[j];
    auto sol = solve_linear_one(sys, rhs);
    if (sol.has_value()) {
        Cochain beta = Cochain::from_flat(c1.module(), c1.degree() - 1, *sol);
        check(coboundary(beta) == diff, errc::bad_input, "witness verification failed");
        out.witness = std::move(beta);
    }
    return out;
}

std::vector<Cochain> CohomologyGroup::all_classes() const {
    std::vector<Cochain> out;
    if (generators.empty()) {
        out.emplace_back(module, degree);
        return out;
    }
    long long total = order();
    for (long long idx = 0; idx < total; ++idx) {
        long long rem = idx;
        Cochain acc(module, degree);
        for (size_t i = 0; i < generators.size(); ++i) {
            long long c = rem % invariant_factors[i];
            rem /= invariant_factors[i];
            for (long long rep = 0; rep < c; ++rep) acc = acc + generators[i];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

CohomologyGroup cohomology_group(const AbAction& module, long long degree) {
    check(degree >= 1, errc::bad_input, "cohomology degree must be >= 1");
    check_cohomology_caps(module.group(), degree);
    const FinAbGroup& m = module.module();
    long long rank = m.rank();

    // kernel of d^degree
    ModSystem sys = coboundary_system(module, degree);
    ModSolveResult hom = solve_linear(sys, {});
    std::vector<std::vector<long long>>& kergens = hom.kernel;

    // image of d^{degree-1}: coboundaries of basis cochains
    std::vector<std::vector<long long>> image;
    {
        Cochain basis(module, degree - 1);
        for (long long i = 0; i < basis.table_size(); ++i) {
            auto t = basis.tuple_of(i);
            bool has_id = false;
            for (long long g : t) has_id |= g == 0;
            if (has_id) continue;
            for (long long j = 0; j < rank; ++j) {
                Cochain e(module, degree - 1);
                AbElt v = m.zero();
                v[j] = 1;
                e.set_value(i, v);
                image.push_back(coboundary(e).flat());
            }
        }
    }

    // express image generators over the kernel generators
    ModSystem expr;
    expr.ncols = (long long)kergens.size();
    expr.nrows = sys.ncols;
    expr.row_mod = sys.var_mod;
    long long exp = std::max<long long>(1, m.exponent());
    expr.var_mod.assign(kergens.size(), exp);
    for (size_t t = 0; t < kergens.size(); ++t)
        for (long long i = 0; i < sys.ncols; ++i)
            if (kergens[t][i]) expr.add(i, (long long)t, kergens[t][i]);
    ModSolveResult img_expr = solve_linear(expr, image);

    std::vector<std::vector<long long>> relations;
    for (auto& s : img_expr.solutions) {
        check(s.has_value(), errc::bad_input, "image not contained in kernel");
        relations.push_back(*s);
    }
    // relations of the kernel generators themselves
    for (auto& kr : img_expr.kernel) relations.push_back(kr);

    std::vector<long long> gen_orders(kergens.size(), exp);
    PresentationResult pres = quotient_presentation(gen_orders, relations);

    CohomologyGroup out;
    out.module = module;
    out.degree = degree;
    for (size_t i = 0; i < pres.factors.size(); ++i) {
        if (pres.factors[i] <= 1) continue;
        out.invariant_factors.push_back(pres.factors[i]);
        std::vector<long long> coords(sys.ncols, 0);
        for (size_t t = 0; t < kergens.size(); ++t) {
            long long c = pres.factor_gens[i][t];
            if (!c) continue;
            for (long long j = 0; j < sys.ncols; ++j)
                coords[j] += c * kergens[t][j];
        }
        Cochain g = Cochain::from_flat(module, degree, coords);
        check(is_cocycle(g), errc::bad_input, "cohomology generator is not a cocycle");
        out.generators.push_back(std::move(g));
    }
    return out;
}

void SESData::validate() const {
    const FinAbGroup& c = sub.module();
    const FinAbGroup& md = mid.module();
    const FinAbGroup& q = quot.module();
    check(incl.source() == c && incl.target() == md, errc::bad_input, "inclusion shape");
    check(proj.source() == md && proj.target() == q, errc::bad_input, "projection shape");
    // injectivity of incl
    for (long long i = 1; i < c.size(); ++i)
        check(!md.is_zero(incl.apply(c.element(i))), errc::bad_input,
              "inclusion is not injective");
    // image(incl) = kernel(proj), surjectivity by counting
    long long ker = 0;
    for (long long i = 0; i < md.size(); ++i)
        if (q.is_zero(proj.apply(md.element(i)))) ++ker;
    check(ker == c.size(), errc::bad_input, "kernel of projection mismatch");
    for (long long i = 0; i < c.size(); ++i)
        check(q.is_zero(proj.apply(incl.apply(c.element(i)))), errc::bad_input,
              "inclusion image not killed by projection");
    check(md.size() == c.size() * q.size(), errc::bad_input, "size exactness fails");
    // section: right inverse of proj
    check((long long)section.size() == q.size(), errc::bad_input, "section table size");
    for (long long i = 0; i < q.size(); ++i)
        check(q.index_of(proj.apply(section[i])) == i, errc::bad_input,
              "section is not a right inverse");
    // equivariance of incl and proj
    const FiniteGroup& gamma = sub.group();
    for (long long g = 0; g < gamma.size(); ++g) {
        for (long long j = 0; j < c.rank(); ++j) {
            AbElt e(c.rank(), 0);
            e[j] = 1;
            AbElt lhs = incl.apply(sub.act(g, e));
            AbElt rhs = mid.act(g, incl.apply(e));
            check(md.is_zero(md.sub(lhs, rhs)), errc::bad_input,
                  "inclusion is not equivariant");
        }
        for (long long j = 0; j < md.rank(); ++j) {
            AbElt e(md.rank(), 0);
            e[j] = 1;
            AbElt lhs = proj.apply(mid.act(g, e));
            AbElt rhs = quot.act(g, proj.apply(e));
            check(q.is_zero(q.sub(lhs, rhs)), errc::bad_input,
                  "projection is not equivariant");
        }
    }
}

Cochain connecting_map(const SESData& ses, const Cochain& f) {
    check(is_cocycle(f), errc::not_a_cocycle, "connecting map of a non-cocycle");
    const FinAbGroup& q = ses.quot.module();
    const FinAbGroup& md = ses.mid.module();
    const FinAbGroup& c = ses.sub.module();
    // lift pointwise via the section
    Cochain lift(ses.mid, f.degree());
    for (long long i = 0; i < f.table_size(); ++i)
        lift.set_value(i, ses.section[q.index_of(f.value(i))]);
    check(lift.is_normalized(), errc::bad_input, "section must send 0 to 0");
    Cochain d = coboundary(lift);
    // values must land in C
    std::map<AbElt, AbElt> to_c;
    for (long long i = 0; i < c.size(); ++i) {
        AbElt ce = c.element(i);
        to_c[md.reduce(ses.incl.apply(ce))] = ce;
    }
    Cochain out(ses.sub, f.degree() + 1);
    for (long long i = 0; i < d.table_size(); ++i) {
        auto it = to_c.find(md.reduce(d.value(i)));
        check(it != to_c.end(), errc::bad_input,
              "coboundary of the lift does not land in the subgroup");
        out.set_value(i, it->second);
    }
    check(is_cocycle(out), errc::bad_input, "connecting map output is not a cocycle");
    return out;
}

SESData induced_module_ses(const FiniteGroup& gamma, long long p, long long n) {
    check(is_prime(p), errc::not_prime, "induced module needs a prime p");
    check(n >= 1 && n <= 4, errc::cap_exceeded, "coefficient exponent out of range");
    long long g = gamma.size();
    long long pn = pow_ll(p, n);
    // Mid = maps Gamma -> Z/p^n with (gamma . phi)(x) = phi(gamma^{-1} x)
    FinAbGroup mid_grp(std::vector<long long>(g, pn));
    std::vector<AbHom> mid_maps;
    for (long long a = 0; a < g; ++a) {
        std::vector<std::vector<long long>> mat(g, std::vector<long long>(g, 0));
        for (long long x = 0; x < g; ++x) {
            // e_x -> e_{a x}: coordinate (a.phi)(ax) = phi(x)
            mat[gamma.mul(a, x)][x] = 1;
        }
        mid_maps.emplace_back(mid_grp, mid_grp, std::move(mat), false);
    }
    AbAction mid(gamma, mid_grp, std::move(mid_maps), true);
    // C = diagonal Z/p^n, trivial action
    FinAbGroup c_grp({pn});
    AbAction sub(gamma, c_grp);
    std::vector<std::vector<long long>> incl_mat(g, std::vector<long long>(1, 1));
    AbHom incl(c_grp, mid_grp, std::move(incl_mat), true);
    // Q coordinates: phi(x) - phi(1) for x != 1; Gamma-action transported
    FinAbGroup q_grp(g >= 2 ? std::vector<long long>(g - 1, pn) : std::vector<long long>{});
    std::vector<std::vector<long long>> proj_mat(q_grp.rank(),
                                                 std::vector<long long>(g, 0));
    for (long long x = 1; x < g; ++x) {
        proj_mat[x - 1][x] = 1;
        proj_mat[x - 1][0] = -1;
    }
    AbHom proj(mid_grp, q_grp, std::move(proj_mat), true);
    // section: h -> phi with phi(1) = 0, phi(x) = h_{x-1}
    std::vector<AbElt> section(q_grp.size());
    for (long long i = 0; i < q_grp.size(); ++i) {
        AbElt h = q_grp.element(i);
        AbElt phi(g, 0);
        for (long long x = 1; x < g; ++x) phi[x] = h[x - 1];
        section[i] = phi;
    }
    // action on Q via the projection of the action on lifted elements
    std::vector<AbHom> q_maps;
    for (long long a = 0; a < g; ++a) {
        std::vector<std::vector<long long>> mat(q_grp.rank(),
                                                std::vector<long long>(q_grp.rank(), 0));
        for (long long j = 0; j < q_grp.rank(); ++j) {
            AbElt h(q_grp.rank(), 0);
            h[j] = 1;
            AbElt img = proj.apply(mid.act(a, section[q_grp.index_of(h)]));
            for (long long i = 0; i < q_grp.rank(); ++i) mat[i][j] = img[i];
        }
        q_maps.emplace_back(q_grp, q_grp, std::move(mat), false);
    }
    AbAction quot(gamma, q_grp, std::move(q_maps), true);
    SESData ses{sub, mid, quot, incl, proj, std::move(section)};
    ses.validate();
    return ses;
}

std::vector<Cochain> shapiro_lift_batch(const SESData& induced,
                                        const std::vector<Cochain>& omegas) {
    const FinAbGroup& c = induced.sub.module();
    const FinAbGroup& md = induced.mid.module();
    long long rank = md.rank();
    ModSystem sys = coboundary_system(induced.mid, 2);
    std::vector<std::vector<long long>> rhs_list;
    std::vector<Cochain> mids;
    for (const Cochain& omega : omegas) {
        check(is_cocycle(omega), errc::not_a_cocycle, "omega must be a cocycle");
        check(omega.degree() == 3, errc::bad_input, "shapiro lift expects a 3-cocycle");
        Cochain omega_mid(induced.mid, 3);
        for (long long i = 0; i < omega.table_size(); ++i)
            omega_mid.set_value(i, induced.incl.apply(c.reduce(omega.value(i))));
        std::vector<long long> rhs(sys.nrows, 0);
        for (long long i = 0; i < omega_mid.table_size(); ++i)
            for (long long j = 0; j < rank; ++j) rhs[i * rank + j] = omega_mid.value(i)[j];
        rhs_list.push_back(std::move(rhs));
        mids.push_back(std::move(omega_mid));
    }
    ModSolveResult res = solve_linear(sys, rhs_list);
    std::vector<Cochain> out;
    for (size_t t = 0; t < omegas.size(); ++t) {
        check(res.solutions[t].has_value(), errc::bad_input,
              "Shapiro vanishing failed: d(g) = omega unsolvable in the induced module");
        Cochain g = Cochain::from_flat(induced.mid, 2, *res.solutions[t]);
        check(coboundary(g) == mids[t], errc::bad_input, "lift verification failed");
        Cochain f(induced.quot, 2);
        for (long long i = 0; i < f.table_size(); ++i)
            f.set_value(i, induced.proj.apply(g.value(i)));
        check(is_cocycle(f), errc::bad_input, "projected lift is not a cocycle");
        out.push_back(std::move(f));
    }
    return out;
}

Cochain shapiro_lift(const SESData& induced, const Cochain& omega) {
    return shapiro_lift_batch(induced, {omega})[0];
}

CocycleExtension structured_extension(const AbAction& module, const Cochain& f) {
    check(f.degree() == 2, errc::not_a_cocycle, "extension needs a 2-cocycle");
    check(f.is_normalized(), errc::not_a_cocycle, "extension cocycle must be normalized");
    check(is_cocycle(f), errc::not_a_cocycle, "extension datum is not a cocycle");
    return CocycleExtension{module, f};
}

CocycleExtension::Elt CocycleExtension::mul(const Elt& a, const Elt& b) const {
    const FinAbGroup& m = module.module();
    AbElt part = m.add(a.first, module.act(a.second, b.first));
    part = m.add(part, f.value(std::vector<long long>{a.second, b.second}));
    return {part, module.group().mul(a.second, b.second)};
}

CocycleExtension::Elt CocycleExtension::inv(const Elt& a) const {
    const FinAbGroup& m = module.module();
    long long gi = module.group().inv(a.second);
    // (m, g)^{-1} = (-g^{-1}.m - f(g^{-1}, g), g^{-1})
    AbElt part = m.neg(m.add(module.act(gi, a.first),
                             f.value(std::vector<long long>{gi, a.second})));
    return {part, gi};
}

ExtensionData extension_from_cocycle(const AbAction& module, const Cochain& f, long long cap) {
    CocycleExtension ext = structured_extension(module, f);
    const FinAbGroup& m = module.module();
    const FiniteGroup& gamma = module.group();
    long long n = m.size() * gamma.size();
    check(n <= cap, errc::cap_exceeded, "extension above table cap");
    auto index = [&](const CocycleExtension::Elt& e) {
        return m.index_of(e.first) * gamma.size() + e.second;
    };
    auto elt = [&](long long i) {
        return CocycleExtension::Elt{m.element(i / gamma.size()), i % gamma.size()};
    };
    std::vector<std::vector<long long>> table(n, std::vector<long long>(n));
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) table[i][j] = index(ext.mul(elt(i), elt(j)));
    ExtensionData out{FiniteGroup::from_table(table), module, f, {}, {}, {}};
    out.proj.resize(n);
    for (long long i = 0; i < n; ++i) out.proj[i] = i % gamma.size();
    out.section.resize(gamma.size());
    for (long long g = 0; g < gamma.size(); ++g) out.section[g] = index(ext.section(g));
    out.module_elt.resize(m.size());
    for (long long i = 0; i < m.size(); ++i)
        out.module_elt[i] = index({m.element(i), 0});
    return out;
}

ExtensionAnalysis cocycle_from_extension(const FiniteGroup& g,
                                         const std::vector<long long>& normal_abelian,
                                         const std::vector<long long>& section) {
    // set up M
    SubgroupGroup msub = subgroup_as_group(g, normal_abelian);
    check(msub.group.is_abelian(), errc::bad_input, "designated subgroup is not abelian");
    for (long long x = 0; x < g.size(); ++x)
        for (long long e : msub.from_sub)
            check(msub.to_sub[g.conj(x, e)] >= 0, errc::not_a_subgroup,
                  "designated subgroup is not normal");
    AbelianBasis ab = abelian_basis(msub.group);
    FinAbGroup m(ab.orders.empty() ? std::vector<long long>{} : ab.orders);
    // align with FinAbGroup's ascending sort
    std::vector<size_t> perm(ab.orders.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::stable_sort(perm.begin(), perm.end(),
                     [&](size_t a, size_t b) { return ab.orders[a] < ab.orders[b]; });
    // map sub element -> FinAb element and back
    auto sub_to_m = [&](long long sub_idx) {
        AbElt v(m.rank());
        for (long long i = 0; i < m.rank(); ++i) v[i] = ab.coords[sub_idx][perm[i]];
        return v;
    };
    std::map<AbElt, long long> m_to_sub;
    for (long long s = 0; s < msub.group.size(); ++s) m_to_sub[sub_to_m(s)] = s;

    long long q = g.size() / (long long)normal_abelian.size();
    check((long long)section.size() == q, errc::section_invalid, "section of wrong size");
    check(section[0] == 0, errc::section_invalid, "section must start at the identity");
    // cosets: each section element must sit in a distinct coset
    std::vector<long long> coset_of(g.size(), -1);
    for (long long c = 0; c < q; ++c) {
        for (long long e : msub.from_sub) {
            long long x = g.mul(e, section[c]);
            check(coset_of[x] == -1, errc::section_invalid,
                  "section elements are not coset representatives");
            coset_of[x] = c;
        }
    }
    for (long long x = 0; x < g.size(); ++x)
        check(coset_of[x] >= 0, errc::section_invalid, "cosets do not cover the group");
    // quotient group table on coset indices
    std::vector<std::vector<long long>> qt(q, std::vector<long long>(q));
    for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b) qt[a][b] = coset_of[g.mul(section[a], section[b])];
    FiniteGroup gamma = FiniteGroup::from_table(qt);
    // conjugation action of gamma on M via the section
    std::vector<AbHom> maps;
    for (long long a = 0; a < q; ++a) {
        std::vector<std::vector<long long>> mat(m.rank(), std::vector<long long>(m.rank(), 0));
        for (long long j = 0; j < m.rank(); ++j) {
            AbElt ej(m.rank(), 0);
            ej[j] = 1;
            long long sub_idx = m_to_sub.at(m.reduce(ej));
            long long conj = g.conj(section[a], msub.from_sub[sub_idx]);
            long long conj_sub = msub.to_sub[conj];
            check(conj_sub >= 0, errc::bad_input, "conjugation leaves the subgroup");
            AbElt img = sub_to_m(conj_sub);
            for (long long i = 0; i < m.rank(); ++i) mat[i][j] = img[i];
        }
        maps.emplace_back(m, m, std::move(mat), false);
    }
    AbAction action(gamma, m, std::move(maps), true);
    // f(a,b) = s(a) s(b) s(ab)^{-1}
    Cochain f(action, 2);
    for (long long a = 0; a < q; ++a)
        for (long long b = 0; b < q; ++b) {
            long long ab_coset = gamma.mul(a, b);
            long long x = g.mul(g.mul(section[a], section[b]), g.inv(section[ab_coset]));
            long long sub_idx = msub.to_sub[x];
            check(sub_idx >= 0, errc::section_invalid, "cocycle value outside the subgroup");
            f.set_value(std::vector<long long>{a, b}, sub_to_m(sub_idx));
        }
    check(f.is_normalized(), errc::section_invalid, "extracted cocycle is not normalized");
    check(is_cocycle(f), errc::bad_input, "extracted table is not a cocycle");
    ExtensionAnalysis out{gamma, action, f, std::move(coset_of), {}, {}};
    out.m_to_total.resize(m.size());
    out.total_to_m.assign(g.size(), -1);
    for (long long i = 0; i < m.size(); ++i) {
        long long sub_idx = m_to_sub.at(m.element(i));
        out.m_to_total[i] = msub.from_sub[sub_idx];
        out.total_to_m[msub.from_sub[sub_idx]] = i;
    }
    return out;
}

} // namespace modcat
