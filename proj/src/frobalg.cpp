#include "modcat/frobalg.hpp"

#include <algorithm>
#include <numeric>

namespace modcat {

bool is_prime(long long p) {
    if (p < 2) return false;
    for (long long d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

namespace {

using Poly = std::vector<long long>; // coefficients over F_p, constant first

Poly poly_mod(Poly a, const Poly& f, long long p) {
    long long m = (long long)f.size() - 1;
    while ((long long)a.size() > m) {
        long long lead = a.back() % p;
        long long deg = (long long)a.size() - 1;
        if (lead)
            for (long long i = 0; i <= m; ++i)
                a[deg - m + i] = ((a[deg - m + i] - lead * f[i]) % p + p) % p;
        a.pop_back();
    }
    a.resize(m, 0);
    return a;
}

Poly poly_mul(const Poly& a, const Poly& b, const Poly& f, long long p) {
    Poly c(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(c), f, p);
}

Poly poly_powmod(Poly base, long long e, const Poly& f, long long p) {
    Poly r(f.size() - 1, 0);
    r[0] = 1;
    base = poly_mod(std::move(base), f, p);
    while (e) {
        if (e & 1) r = poly_mul(r, base, f, p);
        base = poly_mul(base, base, f, p);
        e >>= 1;
    }
    return r;
}

Poly poly_gcd(Poly a, Poly b, long long p) {
    auto deg = [](const Poly& x) {
        for (size_t i = x.size(); i-- > 0;)
            if (x[i]) return (long long)i;
        return -1ll;
    };
    while (deg(b) >= 0) {
        // a mod b
        long long db = deg(b);
        long long lead_inv = 1;
        {
            long long lb = b[db], t = 1;
            for (long long e = p - 2; e; e >>= 1) {
                if (e & 1) t = t * lb % p;
                lb = lb * lb % p;
            }
            lead_inv = t;
        }
        while (deg(a) >= db) {
            long long da = deg(a);
            long long f = a[da] * lead_inv % p;
            for (long long i = 0; i <= db; ++i)
                a[da - db + i] = ((a[da - db + i] - f * b[i]) % p + p) % p;
        }
        std::swap(a, b);
    }
    return a;
}

bool is_irreducible(const Poly& f, long long p) {
    long long m = (long long)f.size() - 1;
    // x^{p^m} = x mod f
    Poly x{0, 1};
    Poly xp = x;
    for (long long i = 0; i < m; ++i) xp = poly_powmod(xp, p, f, p);
    Poly diff = xp;
    diff.resize(std::max(diff.size(), (size_t)2), 0);
    diff[1] = ((diff[1] - 1) % p + p) % p;
    bool all_zero = true;
    for (long long v : diff) all_zero = all_zero && v % p == 0;
    if (!all_zero) return false;
    // gcd(x^{p^{m/q}} - x, f) = 1 for prime q | m
    for (long long q = 2; q <= m; ++q) {
        if (m % q) continue;
        bool prime = true;
        for (long long d = 2; d * d <= q; ++d)
            if (q % d == 0) prime = false;
        if (!prime) continue;
        Poly xq = x;
        for (long long i = 0; i < m / q; ++i) xq = poly_powmod(xq, p, f, p);
        Poly d = xq;
        d.resize(std::max(d.size(), (size_t)2), 0);
        d[1] = ((d[1] - 1) % p + p) % p;
        Poly g = poly_gcd(f, d, p);
        long long dg = -1;
        for (size_t i = g.size(); i-- > 0;)
            if (g[i]) {
                dg = (long long)i;
                break;
            }
        if (dg != 0) return false;
    }
    return true;
}

} // namespace

FiniteField::FiniteField(long long p, long long m) : p_(p), m_(m) {
    check(is_prime(p), errc::not_prime, "field characteristic must be prime");
    check(m >= 1, errc::bad_input, "field degree must be positive");
    size_ = 1;
    for (long long i = 0; i < m; ++i) {
        check(size_ <= 65536 / p, errc::cap_exceeded, "field size above 2^16");
        size_ *= p;
    }
    if (m == 1) {
        modulus_ = {0, 1};
        return;
    }
    // smallest monic irreducible of degree m, low coefficients least significant
    for (long long code = 0;; ++code) {
        check(code < size_, errc::bad_input, "no irreducible polynomial found");
        Poly f(m + 1, 0);
        long long c = code;
        for (long long i = 0; i < m; ++i) {
            f[i] = c % p;
            c /= p;
        }
        f[m] = 1;
        if (is_irreducible(f, p)) {
            modulus_ = f;
            break;
        }
    }
}

FFElt FiniteField::one() const {
    FFElt e(m_, 0);
    e[0] = 1;
    return e;
}

FFElt FiniteField::from_index(long long i) const {
    FFElt e(m_);
    for (long long t = 0; t < m_; ++t) {
        e[t] = i % p_;
        i /= p_;
    }
    return e;
}

long long FiniteField::index_of(const FFElt& x) const {
    long long idx = 0;
    for (long long t = m_; t-- > 0;) idx = idx * p_ + (((x[t] % p_) + p_) % p_);
    return idx;
}

FFElt FiniteField::add(const FFElt& a, const FFElt& b) const {
    FFElt c(m_);
    for (long long i = 0; i < m_; ++i) c[i] = (a[i] + b[i]) % p_;
    return c;
}

FFElt FiniteField::sub(const FFElt& a, const FFElt& b) const {
    FFElt c(m_);
    for (long long i = 0; i < m_; ++i) c[i] = ((a[i] - b[i]) % p_ + p_) % p_;
    return c;
}

FFElt FiniteField::neg(const FFElt& a) const { return sub(zero(), a); }

FFElt FiniteField::mul(const FFElt& a, const FFElt& b) const {
    Poly c(2 * m_ - 1, 0);
    for (long long i = 0; i < m_; ++i) {
        if (!a[i]) continue;
        for (long long j = 0; j < m_; ++j) c[i + j] = (c[i + j] + a[i] * b[j]) % p_;
    }
    return poly_mod(std::move(c), modulus_, p_);
}

FFElt FiniteField::pow(const FFElt& a, long long e) const {
    if (is_zero(a)) {
        check(e > 0, errc::bad_input, "0^0 in finite field");
        return zero();
    }
    e %= size_ - 1;
    if (e < 0) e += size_ - 1;
    FFElt r = one(), base = a;
    while (e) {
        if (e & 1) r = mul(r, base);
        base = mul(base, base);
        e >>= 1;
    }
    return r;
}

FFElt FiniteField::inv(const FFElt& a) const {
    check(!is_zero(a), errc::bad_input, "inverse of zero");
    return pow(a, size_ - 2);
}

bool FiniteField::is_zero(const FFElt& a) const {
    for (long long v : a)
        if (v % p_) return false;
    return true;
}

long long FiniteField::trace(const FFElt& a) const {
    FFElt acc = zero(), x = a;
    for (long long i = 0; i < m_; ++i) {
        acc = add(acc, x);
        x = frobenius(x);
    }
    for (long long i = 1; i < m_; ++i)
        check(acc[i] % p_ == 0, errc::bad_input, "trace not in the prime field");
    return ((acc[0] % p_) + p_) % p_;
}

long long FiniteField::norm(const FFElt& a) const {
    if (is_zero(a)) return 0;
    FFElt acc = one(), x = a;
    for (long long i = 0; i < m_; ++i) {
        acc = mul(acc, x);
        x = frobenius(x);
    }
    for (long long i = 1; i < m_; ++i)
        check(acc[i] % p_ == 0, errc::bad_input, "norm not in the prime field");
    return ((acc[0] % p_) + p_) % p_;
}

AdditiveKernel additive_kernel(const AdditivePoly& phi, const FiniteField& k) {
    for (const auto& c : phi.coeffs)
        check((long long)c.size() == k.degree(), errc::bad_input,
              "coefficient not in the given field");
    auto eval = [&](const FFElt& y) {
        FFElt acc = k.zero();
        FFElt pw = y; // y^{p^0}
        for (size_t i = 0; i < phi.coeffs.size(); ++i) {
            if (!k.is_zero(phi.coeffs[i])) acc = k.add(acc, k.mul(phi.coeffs[i], pw));
            pw = k.frobenius(pw);
        }
        return acc;
    };
    AdditiveKernel out;
    for (long long i = 0; i < k.size(); ++i) {
        FFElt y = k.from_index(i);
        if (k.is_zero(eval(y))) out.elements.push_back(y);
    }
    // verify F_p-subspace structure and extract a basis greedily
    std::vector<char> in_span(k.size(), 0);
    in_span[0] = 1;
    long long span_size = 1;
    for (const auto& y : out.elements) {
        if (in_span[k.index_of(y)]) continue;
        out.basis.push_back(y);
        // extend span
        std::vector<long long> old;
        for (long long t = 0; t < k.size(); ++t)
            if (in_span[t]) old.push_back(t);
        for (long long c = 1; c < k.p(); ++c) {
            FFElt cy = k.zero();
            for (long long t = 0; t < c; ++t) cy = k.add(cy, y);
            for (long long o : old) {
                long long idx = k.index_of(k.add(k.from_index(o), cy));
                if (!in_span[idx]) {
                    in_span[idx] = 1;
                    ++span_size;
                }
            }
        }
    }
    check(span_size == (long long)out.elements.size(), errc::bad_input,
          "additive kernel is not an F_p-subspace");
    for (const auto& y : out.elements)
        check(in_span[k.index_of(y)] == 1, errc::bad_input, "kernel basis does not span");
    return out;
}

MetricGroup norm_form(long long p) {
    check(is_prime(p), errc::not_prime, "norm form needs a prime p");
    FiniteField f(p, 2);
    FinAbGroup a({p, p});
    std::vector<RootExponent> vals(a.size());
    for (long long i = 0; i < a.size(); ++i) {
        AbElt e = a.element(i);
        // group coordinates = field coordinates
        FFElt x{e[0], e[1]};
        vals[i] = RootExponent(f.norm(x), p);
    }
    MetricGroup m = validate_metric(a, std::move(vals));
    require_nondegenerate(m);
    return m;
}

FFElt heisenberg_pairing(const FiniteField& f, const FFElt& x, const FFElt& y) {
    return f.sub(f.mul(x, f.frobenius(y)), f.mul(f.frobenius(x), y));
}

FakeHeisenberg fake_heisenberg(long long p, long long m, long long cap) {
    check(is_prime(p), errc::not_prime, "characteristic must be prime");
    check(m >= 2, errc::degenerate_model,
          "m = 1 degenerates to an abelian group (x y^p = x y)");
    FiniteField f(p, m);
    long long q = f.size();
    check(q * q <= cap, errc::cap_exceeded, "fake Heisenberg group above cap");
    long long n = q * q;
    std::vector<std::vector<long long>> table(n, std::vector<long long>(n));
    for (long long g1 = 0; g1 < n; ++g1) {
        FFElt x = f.from_index(g1 / q), a = f.from_index(g1 % q);
        for (long long g2 = 0; g2 < n; ++g2) {
            FFElt y = f.from_index(g2 / q), b = f.from_index(g2 % q);
            FFElt xs = f.add(x, y);
            FFElt as = f.add(f.add(a, b), f.mul(x, f.frobenius(y)));
            table[g1][g2] = f.index_of(xs) * q + f.index_of(as);
        }
    }
    FakeHeisenberg out{FiniteGroup::from_table(table), f, {}, {}, norm_form(p)};
    out.center_elements = out.group.center();
    // center must be exactly 0 x F_q
    std::vector<long long> expect;
    for (long long a = 0; a < q; ++a) expect.push_back(a);
    check(out.center_elements == expect, errc::bad_input,
          "fake Heisenberg center is not 0 x F_q");
    // commutators land in the center via the pairing
    for (long long g1 = 0; g1 < n; ++g1)
        for (long long g2 = 0; g2 < n; ++g2) {
            FFElt x = f.from_index(g1 / q), y = f.from_index(g2 / q);
            long long want = f.index_of(heisenberg_pairing(f, x, y));
            check(out.group.commutator(g1, g2) == want, errc::bad_input,
                  "commutator does not match the pairing");
        }
    // radical of Tr(B(x,y)) in the x variable
    for (long long xi = 0; xi < q; ++xi) {
        FFElt x = f.from_index(xi);
        bool rad = true;
        for (long long yi = 0; yi < q && rad; ++yi)
            rad = f.trace(heisenberg_pairing(f, x, f.from_index(yi))) == 0;
        if (rad) out.radical.push_back(xi);
    }
    return out;
}

} // namespace modcat
