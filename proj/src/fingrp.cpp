#include "modcat/fingrp.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "modcat/error.hpp"

namespace modcat {

struct FiniteGroup::Core {
    long long n = 1;
    std::vector<uint16_t> table;
    std::vector<uint16_t> invs;
    std::vector<long long> orders;
    std::vector<std::vector<long long>> classes;
    std::vector<long long> class_of;
    bool abelian = true;

    mutable std::once_flag chtab_once;
    mutable CharacterTable chtab;

    long long mul(long long a, long long b) const { return table[a * n + b]; }
};

namespace {

constexpr long long kTableCap = 4096;

void build_conjugacy(FiniteGroup::Core& c) {
    long long n = c.n;
    c.class_of.assign(n, -1);
    std::vector<std::vector<long long>> classes;
    for (long long a = 0; a < n; ++a) {
        if (c.class_of[a] >= 0) continue;
        std::vector<long long> cl;
        std::vector<char> seen(n, 0);
        for (long long g = 0; g < n; ++g) {
            long long x = c.table[c.table[g * n + a] * n + c.invs[g]];
            if (!seen[x]) {
                seen[x] = 1;
                cl.push_back(x);
            }
        }
        std::sort(cl.begin(), cl.end());
        for (long long x : cl) c.class_of[x] = (long long)classes.size();
        classes.push_back(std::move(cl));
    }
    // Canonical order: by (element order, least member), identity first.
    std::vector<long long> perm(classes.size());
    std::iota(perm.begin(), perm.end(), 0);
    std::sort(perm.begin(), perm.end(), [&](long long i, long long j) {
        long long oi = c.orders[classes[i][0]], oj = c.orders[classes[j][0]];
        if (oi != oj) return oi < oj;
        return classes[i][0] < classes[j][0];
    });
    c.classes.clear();
    for (long long k : perm) c.classes.push_back(classes[k]);
    for (size_t k = 0; k < c.classes.size(); ++k)
        for (long long x : c.classes[k]) c.class_of[x] = (long long)k;
}

std::shared_ptr<FiniteGroup::Core> make_core(const std::vector<uint16_t>& table, long long n) {
    check(n >= 1 && n <= kTableCap, errc::cap_exceeded, "group order out of range");
    auto c = std::make_shared<FiniteGroup::Core>();
    c->n = n;
    c->table = table;
    // identity at index 0
    for (long long a = 0; a < n; ++a)
        check(c->mul(0, a) == a && c->mul(a, 0) == a, errc::bad_input,
              "index 0 is not a two-sided identity");
    // two-sided inverses
    c->invs.assign(n, 0);
    for (long long a = 0; a < n; ++a) {
        long long inv = -1;
        for (long long b = 0; b < n; ++b)
            if (c->mul(a, b) == 0 && c->mul(b, a) == 0) {
                inv = b;
                break;
            }
        check(inv >= 0, errc::bad_input, "element without two-sided inverse");
        c->invs[a] = (uint16_t)inv;
    }
    // Associativity: full triple loop for small n, Light's test on a
    // generating set otherwise.
    if (n <= 128) {
        for (long long a = 0; a < n; ++a)
            for (long long b = 0; b < n; ++b)
                for (long long x = 0; x < n; ++x)
                    check(c->mul(c->mul(a, b), x) == c->mul(a, c->mul(b, x)), errc::bad_input,
                          "multiplication table is not associative");
    } else {
        std::vector<long long> gens;
        std::vector<char> in(n, 0);
        in[0] = 1;
        long long covered = 1;
        while (covered < n) {
            long long g = -1;
            for (long long a = 0; a < n; ++a)
                if (!in[a]) {
                    g = a;
                    break;
                }
            gens.push_back(g);
            // close
            std::vector<long long> frontier{g};
            in[g] = 1;
            ++covered;
            while (!frontier.empty()) {
                long long x = frontier.back();
                frontier.pop_back();
                for (long long a = 0; a < n; ++a) {
                    if (!in[a]) continue;
                    for (long long y : {c->mul(x, a), c->mul(a, x)}) {
                        if (!in[y]) {
                            in[y] = 1;
                            ++covered;
                            frontier.push_back(y);
                        }
                    }
                }
            }
        }
        for (long long g : gens)
            for (long long a = 0; a < n; ++a)
                for (long long b = 0; b < n; ++b)
                    check(c->mul(c->mul(a, g), b) == c->mul(a, c->mul(g, b)), errc::bad_input,
                          "multiplication table is not associative");
    }
    // element orders
    c->orders.assign(n, 1);
    for (long long a = 0; a < n; ++a) {
        long long x = a, o = 1;
        while (x != 0) {
            x = c->mul(x, a);
            ++o;
        }
        c->orders[a] = o;
    }
    c->abelian = true;
    for (long long a = 0; a < n && c->abelian; ++a)
        for (long long b = a + 1; b < n; ++b)
            if (c->mul(a, b) != c->mul(b, a)) {
                c->abelian = false;
                break;
            }
    build_conjugacy(*c);
    return c;
}

} // namespace

FiniteGroup::FiniteGroup() { core_ = make_core({0}, 1); }

FiniteGroup FiniteGroup::from_table(const std::vector<std::vector<long long>>& table) {
    long long n = (long long)table.size();
    check(n >= 1, errc::bad_input, "empty multiplication table");
    std::vector<uint16_t> flat(n * n);
    for (long long i = 0; i < n; ++i) {
        check((long long)table[i].size() == n, errc::bad_input, "ragged multiplication table");
        for (long long j = 0; j < n; ++j) {
            check(table[i][j] >= 0 && table[i][j] < n, errc::bad_input, "table entry out of range");
            flat[i * n + j] = (uint16_t)table[i][j];
        }
    }
    FiniteGroup g;
    g.core_ = make_core(flat, n);
    return g;
}

FiniteGroup FiniteGroup::cyclic(long long n) {
    check(n >= 1 && n <= kTableCap, errc::cap_exceeded, "cyclic order out of range");
    std::vector<uint16_t> flat(n * n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) flat[i * n + j] = (uint16_t)((i + j) % n);
    FiniteGroup g;
    g.core_ = make_core(flat, n);
    return g;
}

FiniteGroup FiniteGroup::direct_product(const FiniteGroup& a, const FiniteGroup& b) {
    long long na = a.size(), nb = b.size(), n = na * nb;
    check(n <= kTableCap, errc::cap_exceeded, "product order exceeds cap");
    std::vector<uint16_t> flat(n * n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            long long ia = i / nb, ib = i % nb, ja = j / nb, jb = j % nb;
            flat[i * n + j] = (uint16_t)(a.mul(ia, ja) * nb + b.mul(ib, jb));
        }
    FiniteGroup g;
    g.core_ = make_core(flat, n);
    return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<std::vector<long long>>& gens,
                                           long long cap) {
    size_t deg = gens.empty() ? 1 : gens[0].size();
    std::vector<long long> id(deg);
    std::iota(id.begin(), id.end(), 0);
    for (const auto& g : gens) {
        check(g.size() == deg, errc::bad_input, "permutation generators of mixed degree");
        std::vector<char> seen(deg, 0);
        for (long long v : g) {
            check(v >= 0 && (size_t)v < deg && !seen[v], errc::bad_input, "not a permutation");
            seen[v] = 1;
        }
    }
    std::map<std::vector<long long>, long long> index;
    std::vector<std::vector<long long>> elems{id};
    index[id] = 0;
    std::vector<long long> frontier{0};
    while (!frontier.empty()) {
        long long i = frontier.back();
        frontier.pop_back();
        for (const auto& g : gens) {
            std::vector<long long> prod(deg);
            for (size_t k = 0; k < deg; ++k) prod[k] = g[elems[i][k]];
            if (!index.count(prod)) {
                check((long long)elems.size() < cap, errc::cap_exceeded,
                      "permutation closure exceeds cap");
                index[prod] = (long long)elems.size();
                elems.push_back(prod);
                frontier.push_back((long long)elems.size() - 1);
            }
        }
    }
    long long n = (long long)elems.size();
    std::vector<uint16_t> flat(n * n);
    for (long long i = 0; i < n; ++i)
        for (long long j = 0; j < n; ++j) {
            std::vector<long long> prod(deg);
            for (size_t k = 0; k < deg; ++k) prod[k] = elems[i][elems[j][k]];
            flat[i * n + j] = (uint16_t)index.at(prod);
        }
    FiniteGroup g;
    g.core_ = make_core(flat, n);
    return g;
}

long long FiniteGroup::size() const { return core_->n; }
long long FiniteGroup::mul(long long a, long long b) const { return core_->mul(a, b); }
long long FiniteGroup::inv(long long a) const { return core_->invs[a]; }
long long FiniteGroup::order_of(long long a) const { return core_->orders[a]; }
bool FiniteGroup::is_abelian() const { return core_->abelian; }
const std::vector<uint16_t>& FiniteGroup::raw_table() const { return core_->table; }

long long FiniteGroup::power(long long a, long long e) const {
    long long o = core_->orders[a];
    e %= o;
    if (e < 0) e += o;
    long long r = 0;
    for (long long i = 0; i < e; ++i) r = mul(r, a);
    return r;
}

long long FiniteGroup::exponent() const {
    long long e = 1;
    for (long long a = 0; a < size(); ++a) e = std::lcm(e, core_->orders[a]);
    return e;
}

const std::vector<std::vector<long long>>& FiniteGroup::conj_classes() const {
    return core_->classes;
}
long long FiniteGroup::class_of(long long a) const { return core_->class_of[a]; }

std::vector<long long> FiniteGroup::centralizer(long long a) const {
    std::vector<long long> out;
    for (long long g = 0; g < size(); ++g)
        if (mul(g, a) == mul(a, g)) out.push_back(g);
    return out;
}

std::vector<long long> FiniteGroup::center() const {
    std::vector<long long> out;
    for (long long a = 0; a < size(); ++a) {
        bool central = true;
        for (long long g = 0; g < size() && central; ++g) central = mul(g, a) == mul(a, g);
        if (central) out.push_back(a);
    }
    return out;
}

std::vector<long long> FiniteGroup::minimal_generators() const {
    std::vector<long long> gens;
    std::vector<char> in(size(), 0);
    in[0] = 1;
    long long covered = 1;
    auto close_with = [&](long long g, std::vector<char>& mark, long long& count) {
        std::vector<long long> frontier{g};
        if (!mark[g]) {
            mark[g] = 1;
            ++count;
        }
        while (!frontier.empty()) {
            long long x = frontier.back();
            frontier.pop_back();
            for (long long a = 0; a < size(); ++a) {
                if (!mark[a]) continue;
                for (long long y : {mul(x, a), mul(a, x)})
                    if (!mark[y]) {
                        mark[y] = 1;
                        ++count;
                        frontier.push_back(y);
                    }
            }
        }
    };
    while (covered < size()) {
        // pick the element giving the largest closure, ties to least index
        long long best = -1, best_sz = -1;
        for (long long g = 0; g < size(); ++g) {
            if (in[g]) continue;
            std::vector<char> mark = in;
            long long count = covered;
            close_with(g, mark, count);
            if (count > best_sz) {
                best_sz = count;
                best = g;
            }
        }
        gens.push_back(best);
        close_with(best, in, covered);
    }
    return gens;
}

GroupMap::GroupMap(FiniteGroup src, FiniteGroup tgt, std::vector<long long> imgs, bool validate)
    : source(std::move(src)), target(std::move(tgt)), images(std::move(imgs)) {
    if (!validate) return;
    check((long long)images.size() == source.size(), errc::bad_input, "group map of wrong size");
    for (long long a = 0; a < source.size(); ++a)
        for (long long b = 0; b < source.size(); ++b)
            check(images[source.mul(a, b)] == target.mul(images[a], images[b]), errc::bad_input,
                  "images do not respect the multiplication tables");
}

bool GroupMap::is_bijective() const {
    if (source.size() != target.size()) return false;
    std::vector<char> seen(target.size(), 0);
    for (long long v : images) {
        if (seen[v]) return false;
        seen[v] = 1;
    }
    return true;
}

GroupMap GroupMap::compose(const GroupMap& inner) const {
    std::vector<long long> imgs(inner.source.size());
    for (long long a = 0; a < inner.source.size(); ++a) imgs[a] = images[inner.images[a]];
    return GroupMap(inner.source, target, std::move(imgs), false);
}

GroupMap GroupMap::identity(const FiniteGroup& g) {
    std::vector<long long> imgs(g.size());
    std::iota(imgs.begin(), imgs.end(), 0);
    return GroupMap(g, g, std::move(imgs), false);
}

GroupMap inner_automorphism(const FiniteGroup& g, long long by) {
    std::vector<long long> imgs(g.size());
    for (long long a = 0; a < g.size(); ++a) imgs[a] = g.conj(by, a);
    return GroupMap(g, g, std::move(imgs), false);
}

namespace {

// Backtracking search for all isomorphisms source->target extending
// images of the given generators; stops after `limit` if limit > 0.
void hom_search(const FiniteGroup& src, const FiniteGroup& tgt,
                const std::vector<long long>& gens, size_t gi, std::vector<long long>& partial,
                std::vector<std::vector<long long>>& out, long long limit) {
    if (limit > 0 && (long long)out.size() >= limit) return;
    // close partial map; entries -1 unknown
    if (gi == gens.size()) {
        // fully determined and bijective, or not an isomorphism at all
        std::vector<char> seen(tgt.size(), 0);
        for (long long v : partial) {
            if (v < 0 || seen[v]) return;
            seen[v] = 1;
        }
        out.push_back(partial);
        return;
    }
    long long g = gens[gi];
    for (long long cand = 0; cand < tgt.size(); ++cand) {
        if (tgt.order_of(cand) != src.order_of(g)) continue;
        std::vector<long long> map = partial;
        map[g] = cand;
        // closure: repeatedly define products of known pairs
        bool ok = true;
        bool grew = true;
        while (grew && ok) {
            grew = false;
            for (long long a = 0; a < src.size() && ok; ++a) {
                if (map[a] < 0) continue;
                for (long long b = 0; b < src.size(); ++b) {
                    if (map[b] < 0) continue;
                    long long ab = src.mul(a, b);
                    long long im = tgt.mul(map[a], map[b]);
                    if (map[ab] < 0) {
                        map[ab] = im;
                        grew = true;
                    } else if (map[ab] != im) {
                        ok = false;
                        break;
                    }
                }
            }
        }
        if (!ok) continue;
        hom_search(src, tgt, gens, gi + 1, map, out, limit);
        if (limit > 0 && (long long)out.size() >= limit) return;
    }
}

std::vector<std::vector<long long>> all_isomorphisms(const FiniteGroup& src,
                                                     const FiniteGroup& tgt, long long limit) {
    if (src.size() != tgt.size()) return {};
    std::vector<long long> gens = src.minimal_generators();
    std::vector<long long> partial(src.size(), -1);
    partial[0] = 0;
    std::vector<std::vector<long long>> out;
    hom_search(src, tgt, gens, 0, partial, out, limit);
    return out;
}

} // namespace

bool groups_isomorphic(const FiniteGroup& a, const FiniteGroup& b) {
    if (a.size() != b.size()) return false;
    // cheap invariants first
    std::multiset<long long> oa, ob;
    for (long long x = 0; x < a.size(); ++x) oa.insert(a.order_of(x));
    for (long long x = 0; x < b.size(); ++x) ob.insert(b.order_of(x));
    if (oa != ob) return false;
    if (a.conj_classes().size() != b.conj_classes().size()) return false;
    return !all_isomorphisms(a, b, 1).empty();
}

AutomorphismData automorphisms(const FiniteGroup& g, long long cap) {
    check(g.size() <= cap, errc::cap_exceeded, "automorphism search above cap");
    AutomorphismData out;
    for (auto& imgs : all_isomorphisms(g, g, 0))
        out.all.emplace_back(g, g, std::move(imgs), false);
    // identify inner automorphisms
    std::map<std::vector<long long>, long long> index;
    for (size_t i = 0; i < out.all.size(); ++i) index[out.all[i].images] = (long long)i;
    std::set<long long> inner_set;
    for (long long h = 0; h < g.size(); ++h) {
        auto aut = inner_automorphism(g, h);
        inner_set.insert(index.at(aut.images));
    }
    out.inner.assign(inner_set.begin(), inner_set.end());
    // outer coset decomposition
    out.coset_of.assign(out.all.size(), -1);
    for (size_t i = 0; i < out.all.size(); ++i) {
        if (out.coset_of[i] >= 0) continue;
        long long cid = (long long)out.coset_reps.size();
        out.coset_reps.push_back((long long)i);
        for (long long inn : out.inner) {
            auto comp = out.all[i].compose(out.all[inn]);
            out.coset_of[index.at(comp.images)] = cid;
        }
        out.coset_of[i] = cid;
    }
    return out;
}

SubgroupGroup subgroup_as_group(const FiniteGroup& g, std::vector<long long> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    check(!elements.empty() && elements[0] == 0, errc::not_a_subgroup,
          "subgroup must contain the identity");
    std::vector<long long> to_sub(g.size(), -1);
    for (size_t i = 0; i < elements.size(); ++i) to_sub[elements[i]] = (long long)i;
    long long m = (long long)elements.size();
    std::vector<std::vector<long long>> table(m, std::vector<long long>(m));
    for (long long i = 0; i < m; ++i)
        for (long long j = 0; j < m; ++j) {
            long long prod = g.mul(elements[i], elements[j]);
            check(to_sub[prod] >= 0, errc::not_a_subgroup, "set not closed under multiplication");
            table[i][j] = to_sub[prod];
        }
    SubgroupGroup out;
    out.group = FiniteGroup::from_table(table);
    out.from_sub = elements;
    out.to_sub = std::move(to_sub);
    return out;
}

// ---------------------------------------------------------------------------
// Character tables: abelian groups by the dual-group construction, the rest
// by Burnside-Dixon over a prime l = 1 mod exponent(G), lifted to exact
// cyclotomics.

namespace {

long long pow_mod(long long b, long long e, long long m) {
    long long r = 1 % m;
    b %= m;
    while (e) {
        if (e & 1) r = (__int128)r * b % m;
        b = (__int128)b * b % m;
        e >>= 1;
    }
    return r;
}

long long inv_mod(long long a, long long m) { return pow_mod(((a % m) + m) % m, m - 2, m); }

long long find_dixon_prime(long long exponent, long long lower) {
    long long l = exponent + 1;
    while (l <= lower || (l - 1) % exponent != 0 || [&] {
               for (long long d = 2; d * d <= l; ++d)
                   if (l % d == 0) return true;
               return false;
           }())
        ++l;
    return l;
}

long long primitive_root(long long l) {
    std::vector<long long> primes;
    long long t = l - 1;
    for (long long d = 2; d * d <= t; ++d)
        if (t % d == 0) {
            primes.push_back(d);
            while (t % d == 0) t /= d;
        }
    if (t > 1) primes.push_back(t);
    for (long long w = 2; w < l; ++w) {
        bool ok = true;
        for (long long p : primes)
            if (pow_mod(w, (l - 1) / p, l) == 1) {
                ok = false;
                break;
            }
        if (ok) return w;
    }
    fail(errc::bad_input, "no primitive root");
}

using Mat = std::vector<std::vector<long long>>; // dense over F_l

// Null space basis of m (rows x cols) over F_l.
std::vector<std::vector<long long>> nullspace(Mat m, long long l) {
    size_t rows = m.size(), cols = rows ? m[0].size() : 0;
    std::vector<long long> pivot_col;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t pr = r;
        while (pr < rows && m[pr][c] % l == 0) ++pr;
        if (pr == rows) continue;
        std::swap(m[pr], m[r]);
        long long inv = inv_mod(m[r][c], l);
        for (size_t j = c; j < cols; ++j) m[r][j] = (__int128)m[r][j] * inv % l;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] % l == 0) continue;
            long long f = m[i][c] % l;
            for (size_t j = c; j < cols; ++j)
                m[i][j] = ((m[i][j] - (__int128)f * m[r][j]) % l + l) % l;
        }
        pivot_col.push_back((long long)c);
        ++r;
    }
    std::vector<char> is_pivot(cols, 0);
    for (long long c : pivot_col) is_pivot[c] = 1;
    std::vector<std::vector<long long>> basis;
    for (size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<long long> v(cols, 0);
        v[f] = 1;
        for (size_t i = 0; i < pivot_col.size(); ++i)
            v[pivot_col[i]] = (l - m[i][f] % l) % l;
        basis.push_back(std::move(v));
    }
    return basis;
}

// X with n_i * basis = basis * X, basis columns independent (k x d).
Mat restrict_action(const Mat& ni, const Mat& basis_cols, long long l) {
    size_t k = basis_cols.size(), d = basis_cols[0].size();
    // aug = [basis | ni*basis]; row reduce, read X from pivot rows.
    Mat aug(k, std::vector<long long>(2 * d, 0));
    for (size_t i = 0; i < k; ++i) {
        for (size_t j = 0; j < d; ++j) aug[i][j] = basis_cols[i][j];
        for (size_t j = 0; j < d; ++j) {
            __int128 acc = 0;
            for (size_t t = 0; t < k; ++t) acc += (__int128)ni[i][t] * basis_cols[t][j];
            aug[i][d + j] = (long long)(acc % l);
        }
    }
    Mat x(d, std::vector<long long>(d, 0));
    size_t r = 0;
    for (size_t c = 0; c < d && r < k; ++c) {
        size_t pr = r;
        while (pr < k && aug[pr][c] % l == 0) ++pr;
        if (pr == k) continue;
        std::swap(aug[pr], aug[r]);
        long long inv = inv_mod(aug[r][c], l);
        for (size_t j = 0; j < 2 * d; ++j) aug[r][j] = (__int128)aug[r][j] * inv % l;
        for (size_t i = 0; i < k; ++i) {
            if (i == r || aug[i][c] % l == 0) continue;
            long long f = aug[i][c];
            for (size_t j = 0; j < 2 * d; ++j)
                aug[i][j] = ((aug[i][j] - (__int128)f * aug[r][j]) % l + l) % l;
        }
        for (size_t j = 0; j < d; ++j) x[c][j] = aug[r][d + j];
        ++r;
    }
    return x;
}

std::vector<long long> char_poly(const Mat& x, long long l) {
    // Lagrange interpolation of det(x - t I) at d+1 points.
    size_t d = x.size();
    std::vector<long long> pts(d + 1), vals(d + 1);
    for (size_t i = 0; i <= d; ++i) {
        pts[i] = (long long)i % l;
        Mat m = x;
        for (size_t j = 0; j < d; ++j) m[j][j] = ((m[j][j] - pts[i]) % l + l) % l;
        // determinant by elimination
        long long det = 1;
        for (size_t c = 0; c < d; ++c) {
            size_t pr = c;
            while (pr < d && m[pr][c] % l == 0) ++pr;
            if (pr == d) {
                det = 0;
                break;
            }
            if (pr != c) {
                std::swap(m[pr], m[c]);
                det = l - det;
            }
            det = (__int128)det * m[c][c] % l;
            long long inv = inv_mod(m[c][c], l);
            for (size_t i2 = c + 1; i2 < d; ++i2) {
                long long f = (__int128)m[i2][c] * inv % l;
                if (!f) continue;
                for (size_t j = c; j < d; ++j)
                    m[i2][j] = ((m[i2][j] - (__int128)f * m[c][j]) % l + l) % l;
            }
        }
        vals[i] = det % l;
    }
    // interpolate to coefficients
    std::vector<long long> poly(d + 1, 0);
    for (size_t i = 0; i <= d; ++i) {
        // basis polynomial prod_{j!=i} (t - p_j)/(p_i - p_j)
        std::vector<long long> num{1};
        long long den = 1;
        for (size_t j = 0; j <= d; ++j) {
            if (j == i) continue;
            std::vector<long long> nxt(num.size() + 1, 0);
            for (size_t t = 0; t < num.size(); ++t) {
                nxt[t + 1] = (nxt[t + 1] + num[t]) % l;
                nxt[t] = (nxt[t] + (__int128)(l - pts[j] % l) * num[t]) % l;
            }
            num = std::move(nxt);
            den = (__int128)den * (((pts[i] - pts[j]) % l + l) % l) % l;
        }
        long long f = (__int128)vals[i] * inv_mod(den, l) % l;
        for (size_t t = 0; t < num.size(); ++t)
            poly[t] = (poly[t] + (__int128)f * num[t]) % l;
    }
    return poly;
}

void build_character_table(const FiniteGroup& g, CharacterTable& out);

} // namespace

const CharacterTable& FiniteGroup::character_table() const {
    std::call_once(core_->chtab_once, [this] { build_character_table(*this, core_->chtab); });
    return core_->chtab;
}

AbelianBasis abelian_basis(const FiniteGroup& g) {
    check(g.is_abelian(), errc::bad_input, "abelian basis of a nonabelian group");
    long long n = g.size();
    AbelianBasis out;
    // Backtracking over candidate basis elements, highest order first.
    std::vector<long long> by_order(n);
    std::iota(by_order.begin(), by_order.end(), 0);
    std::sort(by_order.begin(), by_order.end(), [&](long long a, long long b) {
        if (g.order_of(a) != g.order_of(b)) return g.order_of(a) > g.order_of(b);
        return a < b;
    });
    std::vector<long long> basis;
    std::vector<char> span(n, 0);
    span[0] = 1;
    long long covered = 1;
    std::function<bool()> grow = [&]() -> bool {
        if (covered == n) return true;
        for (long long cand : by_order) {
            if (span[cand]) continue;
            long long o = g.order_of(cand);
            // direct-sum condition: <span, cand> has size covered * o
            std::vector<char> nspan = span;
            long long ncov = covered;
            long long x = cand;
            bool direct = true;
            std::vector<long long> powers;
            for (long long e = 1; e < o; ++e) {
                powers.push_back(x);
                x = g.mul(x, cand);
            }
            for (long long p : powers)
                if (nspan[p]) {
                    direct = false;
                    break;
                }
            if (!direct) continue;
            std::vector<long long> old_elems;
            for (long long a = 0; a < n; ++a)
                if (span[a]) old_elems.push_back(a);
            for (long long p : powers)
                for (long long a : old_elems) {
                    long long y = g.mul(p, a);
                    if (!nspan[y]) {
                        nspan[y] = 1;
                        ++ncov;
                    }
                }
            if (ncov != covered * o) continue;
            basis.push_back(cand);
            std::swap(span, nspan);
            std::swap(covered, ncov);
            if (grow()) return true;
            basis.pop_back();
            std::swap(span, nspan);
            std::swap(covered, ncov);
        }
        return false;
    };
    check(grow(), errc::bad_input, "abelian basis search failed");
    out.basis = basis;
    for (long long b : basis) out.orders.push_back(g.order_of(b));
    // coordinates of every element by enumeration of the basis span
    out.coords.assign(n, {});
    std::vector<long long> tuple(basis.size(), 0);
    long long total = 1;
    for (long long o : out.orders) total *= o;
    check(total == n, errc::bad_input, "abelian basis does not span");
    for (long long idx = 0; idx < total; ++idx) {
        long long rem = idx;
        long long elt = 0;
        std::vector<long long> co(basis.size());
        for (size_t i = basis.size(); i-- > 0;) {
            co[i] = rem % out.orders[i];
            rem /= out.orders[i];
            elt = g.mul(elt, g.power(basis[i], co[i]));
        }
        out.coords[elt] = co;
    }
    return out;
}

namespace {

void build_character_table(const FiniteGroup& g, CharacterTable& out) {
    check(g.size() <= 512, errc::cap_exceeded, "character table above cap");
    const auto& classes = g.conj_classes();
    long long k = (long long)classes.size();
    out.class_reps.clear();
    out.class_sizes.clear();
    for (const auto& cl : classes) {
        out.class_reps.push_back(cl[0]);
        out.class_sizes.push_back((long long)cl.size());
    }
    out.dims.clear();
    out.rows.clear();

    if (g.is_abelian()) {
        AbelianBasis ab = abelian_basis(g);
        long long n = g.size();
        // character indexed by dual tuple m: chi_m(a) = sum m_i a_i / d_i
        for (long long mi = 0; mi < n; ++mi) {
            long long rem = mi;
            std::vector<long long> m(ab.orders.size());
            for (size_t i = ab.orders.size(); i-- > 0;) {
                m[i] = rem % ab.orders[i];
                rem /= ab.orders[i];
            }
            std::vector<CycloNumber> row;
            for (long long a : out.class_reps) {
                RootExponent e(0, 1);
                for (size_t i = 0; i < m.size(); ++i)
                    e = e + RootExponent(m[i] * ab.coords[a][i], ab.orders[i]);
                row.push_back(CycloNumber::root_of_unity(e));
            }
            out.rows.push_back(std::move(row));
            out.dims.push_back(1);
        }
        return;
    }

    // ---- Dixon ----
    long long exp = g.exponent();
    long long l = find_dixon_prime(exp, 2 * g.size());
    // class-sum structure constants a[i][j][k]
    std::vector<Mat> nmat(k, Mat(k, std::vector<long long>(k, 0)));
    for (long long i = 0; i < k; ++i) {
        // count x in C_i, y in G with x*y = z for each z; bucket per class of y
        std::vector<std::vector<long long>> cnt(k, std::vector<long long>(g.size(), 0));
        for (long long x : classes[i])
            for (long long y = 0; y < g.size(); ++y) cnt[g.class_of(y)][g.mul(x, y)]++;
        for (long long j = 0; j < k; ++j)
            for (long long kk = 0; kk < k; ++kk) nmat[i][j][kk] = cnt[j][out.class_reps[kk]] % l;
    }
    // simultaneous eigenvectors: split subspaces class by class
    std::vector<Mat> spaces; // each: list of basis vectors (length k)
    {
        Mat full(k, std::vector<long long>(k, 0));
        for (long long i = 0; i < k; ++i) full[i][i] = 1;
        spaces.push_back(full);
    }
    for (long long i = 1; i < k; ++i) {
        std::vector<Mat> next;
        for (auto& sp : spaces) {
            if (sp.size() == 1) {
                next.push_back(sp);
                continue;
            }
            // basis as columns matrix (k x d)
            size_t d = sp.size();
            Mat cols(k, std::vector<long long>(d, 0));
            for (size_t c = 0; c < d; ++c)
                for (long long r = 0; r < k; ++r) cols[r][c] = sp[c][r];
            Mat x = restrict_action(nmat[i], cols, l);
            auto poly = char_poly(x, l);
            // scan roots
            std::vector<long long> roots;
            for (long long lam = 0; lam < l; ++lam) {
                __int128 acc = 0;
                for (size_t t = poly.size(); t-- > 0;) acc = (acc * lam + poly[t]) % l;
                if (acc % l == 0) roots.push_back(lam);
            }
            for (long long lam : roots) {
                Mat shifted = x;
                for (size_t j = 0; j < d; ++j) shifted[j][j] = ((shifted[j][j] - lam) % l + l) % l;
                auto null_b = nullspace(shifted, l);
                if (null_b.empty()) continue;
                Mat sub;
                for (auto& coeff : null_b) {
                    std::vector<long long> vec(k, 0);
                    for (size_t c = 0; c < d; ++c)
                        for (long long r = 0; r < k; ++r)
                            vec[r] = (vec[r] + (__int128)coeff[c] * sp[c][r]) % l;
                    sub.push_back(std::move(vec));
                }
                next.push_back(std::move(sub));
            }
        }
        spaces = std::move(next);
        bool all_one = true;
        for (auto& sp : spaces) all_one = all_one && sp.size() == 1;
        if (all_one) break;
    }
    check((long long)spaces.size() == k, errc::bad_input, "class algebra failed to split");

    // inverse-class map
    std::vector<long long> inv_class(k);
    for (long long i = 0; i < k; ++i) inv_class[i] = g.class_of(g.inv(out.class_reps[i]));

    long long w = primitive_root(l);
    long long zexp = pow_mod(w, (l - 1) / exp, l); // fixed embedding mu_exp -> F_l

    struct Row {
        long long dim;
        std::vector<CycloNumber> vals;
    };
    std::vector<Row> rows;
    for (auto& sp : spaces) {
        std::vector<long long> u = sp[0];
        check(u[0] % l != 0, errc::bad_input, "degenerate eigenvector");
        long long scale = inv_mod(u[0], l);
        for (auto& v : u) v = (__int128)v * scale % l;
        // dim
        __int128 s = 0;
        for (long long i = 0; i < k; ++i)
            s += (__int128)u[i] * u[inv_class[i]] % l * inv_mod(out.class_sizes[i] % l, l) % l;
        long long d2 = (__int128)(g.size() % l) * inv_mod((long long)(((s % l) + l) % l), l) % l;
        long long dim = -1;
        for (long long d = 1; d * d <= g.size(); ++d)
            if ((__int128)d * d % l == d2) {
                dim = d;
                break;
            }
        check(dim >= 1, errc::bad_input, "character degree not recovered");
        // modular character values
        std::vector<long long> chimod(k);
        for (long long i = 0; i < k; ++i)
            chimod[i] =
                (__int128)dim * u[i] % l * inv_mod(out.class_sizes[i] % l, l) % l;
        // lift to cyclotomics per class
        Row row;
        row.dim = dim;
        row.vals.resize(k);
        for (long long i = 0; i < k; ++i) {
            long long rep = out.class_reps[i];
            long long o = g.order_of(rep);
            long long zo = pow_mod(zexp, exp / o, l);
            CycloNumber val;
            long long oinv = inv_mod(o % l, l);
            for (long long t = 0; t < o; ++t) {
                // multiplicity of zeta_o^t
                __int128 acc = 0;
                long long zpow = 1;
                long long zstep = inv_mod(pow_mod(zo, t, l), l);
                for (long long sdx = 0; sdx < o; ++sdx) {
                    long long cls = g.class_of(g.power(rep, sdx));
                    acc = (acc + (__int128)chimod[cls] * zpow) % l;
                    zpow = (__int128)zpow * zstep % l;
                }
                long long mult = (long long)((acc % l) * oinv % l);
                check(mult >= 0 && mult <= g.size(), errc::bad_input, "bad multiplicity lift");
                if (mult) val += CycloNumber(Rational(mult)) *
                                 CycloNumber::root_of_unity(RootExponent(t, o));
            }
            row.vals[i] = val;
        }
        rows.push_back(std::move(row));
    }
    // canonical order: trivial first, then by (dim, lexicographic values)
    std::sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        for (size_t i = 0; i < a.vals.size(); ++i) {
            if (a.vals[i] == b.vals[i]) continue;
            return a.vals[i].lex_less(b.vals[i]);
        }
        return false;
    });
    for (size_t i = 0; i < rows.size(); ++i) {
        bool trivial = rows[i].dim == 1;
        for (auto& v : rows[i].vals) trivial = trivial && v.is_one();
        if (trivial && i != 0) {
            std::rotate(rows.begin(), rows.begin() + i, rows.begin() + i + 1);
            break;
        }
    }
    for (auto& r : rows) {
        out.dims.push_back(r.dim);
        out.rows.push_back(std::move(r.vals));
    }
    // exact Burnside identity
    long long sum = 0;
    for (long long d : out.dims) sum += d * d;
    check(sum == g.size(), errc::bad_input, "character degrees violate Burnside identity");
}

} // namespace

std::vector<long long> generated_subgroup(const FiniteGroup& g,
                                          const std::vector<long long>& gens) {
    std::vector<char> in(g.size(), 0);
    in[0] = 1;
    std::vector<long long> frontier{0}, out{0};
    for (long long x : gens)
        if (!in[x]) {
            in[x] = 1;
            out.push_back(x);
            frontier.push_back(x);
        }
    while (!frontier.empty()) {
        long long x = frontier.back();
        frontier.pop_back();
        for (size_t i = 0; i < out.size(); ++i) {
            for (long long y : {g.mul(x, out[i]), g.mul(out[i], x), g.inv(x)}) {
                if (!in[y]) {
                    in[y] = 1;
                    out.push_back(y);
                    frontier.push_back(y);
                }
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<long long> commutator_subgroup(const FiniteGroup& g) {
    std::vector<long long> gens;
    for (long long a = 0; a < g.size(); ++a)
        for (long long b = a + 1; b < g.size(); ++b) gens.push_back(g.commutator(a, b));
    std::sort(gens.begin(), gens.end());
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    return generated_subgroup(g, gens);
}

QuotientGroup quotient_group(const FiniteGroup& g, const std::vector<long long>& normal) {
    std::vector<char> in(g.size(), 0);
    for (long long x : normal) in[x] = 1;
    check(in[0], errc::not_a_subgroup, "normal subgroup must contain the identity");
    for (long long x : normal) {
        for (long long y : normal)
            check(in[g.mul(x, y)], errc::not_a_subgroup, "set not closed");
        for (long long a = 0; a < g.size(); ++a)
            check(in[g.conj(a, x)], errc::not_a_subgroup, "subgroup not normal");
    }
    QuotientGroup out;
    out.coset_of.assign(g.size(), -1);
    for (long long a = 0; a < g.size(); ++a) {
        if (out.coset_of[a] >= 0) continue;
        long long id = (long long)out.reps.size();
        // coset rep: least element in the coset
        long long least = a;
        for (long long x : normal) least = std::min(least, g.mul(x, a));
        out.reps.push_back(least);
        for (long long x : normal) out.coset_of[g.mul(x, a)] = id;
    }
    long long q = (long long)out.reps.size();
    std::vector<std::vector<long long>> table(q, std::vector<long long>(q));
    for (long long i = 0; i < q; ++i)
        for (long long j = 0; j < q; ++j)
            table[i][j] = out.coset_of[g.mul(out.reps[i], out.reps[j])];
    out.group = FiniteGroup::from_table(table);
    return out;
}

std::vector<ProjectiveIrrep> projective_irreps(
    const FiniteGroup& g, const std::vector<std::vector<RootExponent>>& tau) {
    long long n = g.size();
    check((long long)tau.size() == n, errc::bad_input, "cocycle table of wrong shape");
    long long m = 1;
    for (auto& row : tau) {
        check((long long)row.size() == n, errc::bad_input, "cocycle table of wrong shape");
        for (auto& v : row) m = std::lcm(m, v.den());
    }
    // normalized 2-cocycle checks
    for (long long a = 0; a < n; ++a)
        check(tau[a][0].is_zero() && tau[0][a].is_zero(), errc::not_a_cocycle,
              "cocycle not normalized");
    for (long long a = 0; a < n; ++a)
        for (long long b = 0; b < n; ++b)
            for (long long c = 0; c < n; ++c)
                check(tau[a][b] + tau[g.mul(a, b)][c] == tau[b][c] + tau[a][g.mul(b, c)],
                      errc::not_a_cocycle, "2-cocycle identity fails");
    check(m * n <= 4096, errc::cap_exceeded, "central extension above table cap");
    // central extension E = Z/m x G with twisted multiplication
    long long en = m * n;
    std::vector<std::vector<long long>> table(en, std::vector<long long>(en));
    for (long long c1 = 0; c1 < m; ++c1)
        for (long long g1 = 0; g1 < n; ++g1)
            for (long long c2 = 0; c2 < m; ++c2)
                for (long long g2 = 0; g2 < n; ++g2) {
                    long long t = tau[g1][g2].num() * (m / tau[g1][g2].den());
                    long long c3 = (c1 + c2 + t) % m;
                    table[c1 * n + g1][c2 * n + g2] = c3 * n + g.mul(g1, g2);
                }
    FiniteGroup e = FiniteGroup::from_table(table);
    const CharacterTable& ct = e.character_table();
    CycloNumber zeta = CycloNumber::root_of_unity(RootExponent(1, m));
    std::vector<ProjectiveIrrep> out;
    for (size_t r = 0; r < ct.rows.size(); ++r) {
        // keep irreps where the central generator (1, id) acts by zeta_m
        long long central = (1 % m) * n;
        const CycloNumber& val = ct.rows[r][e.class_of(central)];
        if (val != CycloNumber(Rational(ct.dims[r])) * zeta) continue;
        ProjectiveIrrep pi;
        pi.dim = ct.dims[r];
        pi.chi.resize(n);
        for (long long a = 0; a < n; ++a) pi.chi[a] = ct.rows[r][e.class_of(a)];
        out.push_back(std::move(pi));
    }
    std::sort(out.begin(), out.end(), [](const ProjectiveIrrep& a, const ProjectiveIrrep& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        for (size_t i = 0; i < a.chi.size(); ++i) {
            if (a.chi[i] == b.chi[i]) continue;
            return a.chi[i].lex_less(b.chi[i]);
        }
        return false;
    });
    long long sum = 0;
    for (auto& pi : out) sum += pi.dim * pi.dim;
    check(sum == n, errc::bad_input, "projective Burnside identity fails");
    return out;
}

} // namespace modcat
