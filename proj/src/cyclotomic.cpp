#include "modcat/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>

namespace modcat {

long long totient(long long n) {
    long long r = n;
    for (long long p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            r -= r / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) r -= r / n;
    return r;
}

namespace {

// Shared per-conductor data: the cyclotomic polynomial and integer rows of
// x^j mod Phi_N for every j < N.
struct Context {
    long long n = 1;
    long long phi = 1;
    std::vector<long long> poly;
    std::vector<std::vector<long long>> powrow; // powrow[j], length phi, for j in [0, n)
};

std::vector<long long> poly_divide_exact(std::vector<long long> num,
                                         const std::vector<long long>& den) {
    // Exact division of integer polynomials, den monic.
    std::vector<long long> q(num.size() - den.size() + 1, 0);
    for (int i = (int)q.size() - 1; i >= 0; --i) {
        long long c = num[i + den.size() - 1];
        q[i] = c;
        if (c == 0) continue;
        for (size_t j = 0; j < den.size(); ++j) num[i + j] -= c * den[j];
    }
    return q;
}

std::vector<long long> compute_cyclotomic(long long n) {
    if (n == 1) return {-1, 1};
    std::vector<long long> num(n + 1, 0);
    num[0] = -1;
    num[n] = 1;
    for (long long d = 1; d < n; ++d)
        if (n % d == 0) num = poly_divide_exact(std::move(num), compute_cyclotomic(d));
    return num;
}

const Context& context(long long n) {
    static std::mutex mu;
    static std::map<long long, std::unique_ptr<Context>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(n);
    if (it != cache.end()) return *it->second;

    auto ctx = std::make_unique<Context>();
    ctx->n = n;
    ctx->phi = totient(n);
    ctx->poly = compute_cyclotomic(n);
    ctx->powrow.resize(n);
    for (long long j = 0; j < n; ++j) {
        std::vector<long long> row(ctx->phi, 0);
        if (j < ctx->phi) {
            row[j] = 1;
        } else {
            // x * powrow[j-1], reduced once by the monic modulus.
            const auto& prev = ctx->powrow[j - 1];
            long long lead = prev[ctx->phi - 1];
            for (long long k = ctx->phi - 1; k >= 1; --k) row[k] = prev[k - 1] - lead * ctx->poly[k];
            row[0] = -lead * ctx->poly[0];
        }
        ctx->powrow[j] = std::move(row);
    }
    const Context& ref = *ctx;
    cache.emplace(n, std::move(ctx));
    return ref;
}

// Smallest valid conductor is never 2 mod 4.
long long normalize_conductor(long long n) { return (n % 4 == 2) ? n / 2 : n; }

} // namespace

const std::vector<long long>& cyclotomic_polynomial(long long n) { return context(n).poly; }

bool CycloNumber::is_zero() const {
    for (const auto& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

CycloNumber CycloNumber::root_of_unity(const RootExponent& q) {
    // q is canonical (gcd(num,den)=1), so zeta_den^num is primitive and the
    // minimal conductor is den, up to the 2 mod 4 normalization.
    long long n = q.den();
    long long a = q.num();
    long long sign = 1;
    if (n % 4 == 2) {
        // zeta_{2m}^a = -zeta_m^{a(m+1)/2 mod m} for odd a, odd m.
        long long m = n / 2;
        a = (a % m) * ((m + 1) / 2) % m;
        n = m;
        sign = -1;
    }
    const Context& ctx = context(n);
    std::vector<Rational> coeffs(ctx.phi);
    const auto& row = ctx.powrow[a % n];
    for (long long k = 0; k < ctx.phi; ++k) coeffs[k] = Rational(sign * row[k]);
    return CycloNumber(n, std::move(coeffs));
}

CycloNumber CycloNumber::from_coeffs(long long n, std::vector<Rational> coeffs) {
    check(n >= 1, errc::bad_input, "conductor must be positive");
    if (n % 4 == 2) {
        // Re-express over the legal conductor 2n before reducing.
        long long m = 2 * n;
        const Context& ctx = context(m);
        std::vector<Rational> out(ctx.phi);
        for (size_t i = 0; i < coeffs.size(); ++i) {
            if (coeffs[i].is_zero()) continue;
            const auto& row = ctx.powrow[(2 * i) % m];
            for (long long k = 0; k < ctx.phi; ++k) out[k] += coeffs[i] * Rational(row[k]);
        }
        CycloNumber r(m, std::move(out));
        r.minimize();
        return r;
    }
    const Context& ctx = context(n);
    std::vector<Rational> out(ctx.phi);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        const auto& row = ctx.powrow[i % n];
        for (long long k = 0; k < ctx.phi; ++k) out[k] += coeffs[i] * Rational(row[k]);
    }
    CycloNumber r(n, std::move(out));
    r.minimize();
    return r;
}

std::vector<Rational> CycloNumber::embedded_coeffs(long long m) const {
    // Coefficients of this value inside Q(zeta_m); requires conductor | m.
    const Context& ctx = context(m);
    std::vector<Rational> out(ctx.phi);
    long long step = m / conductor_;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        const auto& row = ctx.powrow[(i * step) % m];
        for (long long k = 0; k < ctx.phi; ++k) out[k] += coeffs_[i] * Rational(row[k]);
    }
    return out;
}

namespace {

// Re-expression transform for Q(zeta_d) inside Q(zeta_n): y = P r recovers
// subfield coefficients, and membership holds iff the checker rows kill r.
struct SubfieldSolver {
    std::vector<std::vector<Rational>> solve_rows; // phi(d) x phi(n)
    std::vector<std::vector<Rational>> check_rows; // (phi(n)-phi(d)) x phi(n)
};

const SubfieldSolver& subfield_solver(long long n, long long d) {
    static std::mutex mu;
    static std::map<std::pair<long long, long long>, std::unique_ptr<SubfieldSolver>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto key = std::make_pair(n, d);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;

    const Context& ctx = context(n);
    long long phin = ctx.phi;
    long long phid = totient(d);
    long long step = n / d;
    // A = embedding matrix (phin x phid), aug starts as identity.
    std::vector<std::vector<Rational>> a(phin, std::vector<Rational>(phid));
    std::vector<std::vector<Rational>> aug(phin, std::vector<Rational>(phin));
    for (long long j = 0; j < phid; ++j) {
        const auto& row = ctx.powrow[(j * step) % n];
        for (long long k = 0; k < phin; ++k) a[k][j] = Rational(row[k]);
    }
    for (long long k = 0; k < phin; ++k) aug[k][k] = Rational(1);

    auto solver = std::make_unique<SubfieldSolver>();
    std::vector<bool> used(phin, false);
    std::vector<long long> pivot_row(phid, -1);
    for (long long j = 0; j < phid; ++j) {
        long long pr = -1;
        for (long long k = 0; k < phin; ++k)
            if (!used[k] && !a[k][j].is_zero()) {
                pr = k;
                break;
            }
        // The embedding has full column rank, so a pivot always exists.
        used[pr] = true;
        pivot_row[j] = pr;
        Rational inv = Rational(1) / a[pr][j];
        for (long long jj = 0; jj < phid; ++jj) a[pr][jj] *= inv;
        for (long long kk = 0; kk < phin; ++kk) aug[pr][kk] *= inv;
        for (long long k = 0; k < phin; ++k) {
            if (k == pr || a[k][j].is_zero()) continue;
            Rational f = a[k][j];
            for (long long jj = 0; jj < phid; ++jj) a[k][jj] -= f * a[pr][jj];
            for (long long kk = 0; kk < phin; ++kk) aug[k][kk] -= f * aug[pr][kk];
        }
    }
    for (long long j = 0; j < phid; ++j) solver->solve_rows.push_back(aug[pivot_row[j]]);
    for (long long k = 0; k < phin; ++k)
        if (!used[k]) solver->check_rows.push_back(aug[k]);
    const SubfieldSolver& ref = *solver;
    cache.emplace(key, std::move(solver));
    return ref;
}

} // namespace

void CycloNumber::minimize() {
    if (conductor_ == 1) return;
    bool shrunk = true;
    while (shrunk && conductor_ > 1) {
        shrunk = false;
        // Pure rational?
        bool rational = true;
        for (size_t i = 1; i < coeffs_.size(); ++i)
            if (!coeffs_[i].is_zero()) {
                rational = false;
                break;
            }
        if (rational) {
            Rational c = coeffs_[0];
            conductor_ = 1;
            coeffs_ = {c};
            return;
        }
        long long n = conductor_;
        std::vector<long long> primes;
        long long t = n;
        for (long long p = 2; p * p <= t; ++p)
            if (t % p == 0) {
                primes.push_back(p);
                while (t % p == 0) t /= p;
            }
        if (t > 1) primes.push_back(t);
        for (long long p : primes) {
            long long d = normalize_conductor(n / p);
            if (d == n || d == 0) continue;
            bool support_trick = (n / p) % p == 0 && d == n / p;
            if (support_trick) {
                // phi(n) = p*phi(d) and zeta_d^j = zeta_n^{pj} stays inside
                // the power-basis range: membership is a support condition.
                bool ok = true;
                for (size_t i = 0; i < coeffs_.size(); ++i)
                    if (i % p != 0 && !coeffs_[i].is_zero()) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                std::vector<Rational> sub(totient(d));
                for (size_t j = 0; j < sub.size(); ++j) sub[j] = coeffs_[p * j];
                conductor_ = d;
                coeffs_ = std::move(sub);
                shrunk = true;
                break;
            }
            const SubfieldSolver& s = subfield_solver(n, d);
            bool ok = true;
            for (const auto& row : s.check_rows) {
                Rational acc;
                for (size_t k = 0; k < coeffs_.size(); ++k)
                    if (!coeffs_[k].is_zero() && !row[k].is_zero()) acc += row[k] * coeffs_[k];
                if (!acc.is_zero()) {
                    ok = false;
                    break;
                }
            }
            if (!ok) continue;
            std::vector<Rational> sub(s.solve_rows.size());
            for (size_t j = 0; j < sub.size(); ++j) {
                Rational acc;
                const auto& row = s.solve_rows[j];
                for (size_t k = 0; k < coeffs_.size(); ++k)
                    if (!coeffs_[k].is_zero() && !row[k].is_zero()) acc += row[k] * coeffs_[k];
                sub[j] = acc;
            }
            conductor_ = d;
            coeffs_ = std::move(sub);
            shrunk = true;
            break;
        }
    }
}

CycloNumber CycloNumber::operator+(const CycloNumber& o) const {
    if (conductor_ == o.conductor_) {
        std::vector<Rational> out = coeffs_;
        for (size_t i = 0; i < out.size(); ++i) out[i] += o.coeffs_[i];
        CycloNumber r(conductor_, std::move(out));
        r.minimize();
        return r;
    }
    long long m = std::lcm(conductor_, o.conductor_);
    std::vector<Rational> a = embedded_coeffs(m);
    std::vector<Rational> b = o.embedded_coeffs(m);
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    CycloNumber r(m, std::move(a));
    r.minimize();
    return r;
}

CycloNumber CycloNumber::operator-() const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c = -c;
    return CycloNumber(conductor_, std::move(out));
}

CycloNumber CycloNumber::operator-(const CycloNumber& o) const { return *this + (-o); }

CycloNumber CycloNumber::operator*(const CycloNumber& o) const {
    auto scale = [](const CycloNumber& x, const Rational& c) {
        if (c.is_zero()) return CycloNumber();
        std::vector<Rational> out = x.coeffs_;
        for (auto& v : out) v *= c;
        return CycloNumber(x.conductor_, std::move(out));
    };
    if (conductor_ == 1) return scale(o, coeffs_[0]);
    if (o.conductor_ == 1) return scale(*this, o.coeffs_[0]);
    long long m = std::lcm(conductor_, o.conductor_);
    std::vector<Rational> a = conductor_ == m ? coeffs_ : embedded_coeffs(m);
    std::vector<Rational> b = o.conductor_ == m ? o.coeffs_ : o.embedded_coeffs(m);
    const Context& ctx = context(m);
    // Multiply in Q[x]/(x^m - 1), then reduce once modulo Phi_m.
    std::vector<Rational> fold(m);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            fold[(i + j) % m] += a[i] * b[j];
        }
    }
    std::vector<Rational> out(ctx.phi);
    for (long long j = 0; j < m; ++j) {
        if (fold[j].is_zero()) continue;
        if (j < ctx.phi) {
            out[j] += fold[j];
        } else {
            const auto& row = ctx.powrow[j];
            for (long long k = 0; k < ctx.phi; ++k)
                if (row[k] != 0) out[k] += fold[j] * Rational(row[k]);
        }
    }
    CycloNumber r(m, std::move(out));
    r.minimize();
    return r;
}

CycloNumber CycloNumber::conjugate() const {
    if (conductor_ == 1) return *this;
    long long m = conductor_;
    const Context& ctx = context(m);
    std::vector<Rational> out(ctx.phi);
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        const auto& row = ctx.powrow[(m - i) % m];
        for (long long k = 0; k < ctx.phi; ++k)
            if (row[k] != 0) out[k] += coeffs_[i] * Rational(row[k]);
    }
    CycloNumber r(m, std::move(out));
    r.minimize();
    return r;
}

bool CycloNumber::lex_less(const CycloNumber& o) const {
    if (conductor_ != o.conductor_) return conductor_ < o.conductor_;
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == o.coeffs_[i]) continue;
        return coeffs_[i] < o.coeffs_[i];
    }
    return false;
}

std::optional<Rational> CycloNumber::try_rational() const {
    if (conductor_ == 1) return coeffs_[0];
    return std::nullopt;
}

std::optional<RootExponent> CycloNumber::try_root_exponent() const {
    long long m = conductor_ % 2 == 0 ? conductor_ : 2 * conductor_;
    CycloNumber z = root_of_unity(RootExponent(1, m));
    CycloNumber pow(1);
    for (long long a = 0; a < m; ++a) {
        if (*this == pow) return RootExponent(a, m);
        pow *= z;
    }
    return std::nullopt;
}

CycloNumber CycloNumber::div_rational(const Rational& r) const {
    std::vector<Rational> out = coeffs_;
    for (auto& c : out) c /= r;
    return CycloNumber(conductor_, std::move(out));
}

std::string CycloNumber::str() const {
    if (conductor_ == 1) return coeffs_[0].str();
    std::string s = "[";
    for (size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) s += ",";
        s += coeffs_[i].str();
    }
    s += "]@z" + std::to_string(conductor_);
    return s;
}

} // namespace modcat
