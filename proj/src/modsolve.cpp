#include "modcat/modsolve.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>

namespace modcat {

namespace {

long long pow_ll(long long b, long long e) {
    long long r = 1;
    while (e--) r *= b;
    return r;
}

// ----- F_p elimination cores ---------------------------------------------
// Rows are processed incrementally into an echelon (pivot = first nonzero
// column). Kernel and particular solutions come from back-substitution.

struct EchelonF2 {
    long long width; // variables + rhs columns
    long long nvars;
    std::vector<std::vector<uint64_t>> rows; // sorted by pivot
    std::vector<long long> pivots;

    explicit EchelonF2(long long nv, long long nrhs) : width(nv + nrhs), nvars(nv) {}

    long long words() const { return (width + 63) / 64; }

    static long long first_bit(const std::vector<uint64_t>& r, long long width) {
        for (long long w = 0; w < (long long)r.size(); ++w)
            if (r[w]) {
                long long b = w * 64 + __builtin_ctzll(r[w]);
                return b < width ? b : -1;
            }
        return -1;
    }

    // returns false when the row reduces to an inconsistency marker
    void insert(std::vector<uint64_t> row) {
        for (;;) {
            long long p = first_bit(row, width);
            if (p < 0) return;
            auto it = std::lower_bound(pivots.begin(), pivots.end(), p);
            if (it == pivots.end() || *it != p) {
                size_t pos = it - pivots.begin();
                pivots.insert(it, p);
                rows.insert(rows.begin() + pos, std::move(row));
                return;
            }
            const auto& er = rows[it - pivots.begin()];
            for (size_t w = 0; w < row.size(); ++w) row[w] ^= er[w];
        }
    }
};

struct EchelonFp {
    long long p;
    long long width;
    long long nvars;
    std::vector<std::vector<int32_t>> rows;
    std::vector<long long> pivots;

    EchelonFp(long long p_, long long nv, long long nrhs) : p(p_), width(nv + nrhs), nvars(nv) {}

    long long inv_mod(long long a) const {
        long long r = 1, b = a % p, e = p - 2;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    }

    void insert(std::vector<int32_t> row) {
        for (;;) {
            long long piv = -1;
            for (long long j = 0; j < width; ++j)
                if (row[j]) {
                    piv = j;
                    break;
                }
            if (piv < 0) return;
            auto it = std::lower_bound(pivots.begin(), pivots.end(), piv);
            if (it == pivots.end() || *it != piv) {
                long long inv = inv_mod(row[piv]);
                for (long long j = piv; j < width; ++j)
                    row[j] = (int32_t)((long long)row[j] * inv % p);
                size_t pos = it - pivots.begin();
                pivots.insert(it, piv);
                rows.insert(rows.begin() + pos, std::move(row));
                return;
            }
            const auto& er = rows[it - pivots.begin()];
            long long f = row[piv]; // er[piv] == 1
            for (long long j = piv; j < width; ++j)
                row[j] = (int32_t)(((long long)row[j] - f * er[j]) % p + p) % p;
        }
    }
};

struct FpResult {
    std::vector<std::optional<std::vector<long long>>> particular; // per rhs, entries in [0,p)
    std::vector<std::vector<long long>> kernel;                    // basis vectors, entries in [0,p)
};

// Solve A x = b (mod p) for the sparse triplet matrix; multiple rhs.
FpResult solve_fp(long long p, long long nrows, long long ncols,
                  const std::vector<ModSystem::Entry>& entries,
                  const std::vector<std::vector<long long>>& rhs) {
    long long nrhs = (long long)rhs.size();
    FpResult out;
    // group triplets by row
    std::vector<std::vector<std::pair<long long, long long>>> by_row(nrows);
    for (const auto& e : entries) {
        long long c = ((e.coeff % p) + p) % p;
        if (c) by_row[e.row].push_back({e.col, c});
    }
    if (p == 2) {
        EchelonF2 ech(ncols, nrhs);
        long long words = ech.words();
        for (long long i = 0; i < nrows; ++i) {
            bool any = !by_row[i].empty();
            for (long long r = 0; r < nrhs && !any; ++r) any = (rhs[r][i] & 1) != 0;
            if (!any) continue;
            std::vector<uint64_t> row(words, 0);
            for (auto& [c, v] : by_row[i]) row[c / 64] ^= 1ull << (c % 64);
            for (long long r = 0; r < nrhs; ++r)
                if (rhs[r][i] & 1) row[(ncols + r) / 64] ^= 1ull << ((ncols + r) % 64);
            ech.insert(std::move(row));
        }
        auto bit = [&](const std::vector<uint64_t>& v, long long j) {
            return (v[j / 64] >> (j % 64)) & 1;
        };
        // rows with no variable support witness inconsistency of every rhs
        // they touch
        std::vector<char> bad(nrhs, 0);
        for (size_t r = 0; r < ech.pivots.size(); ++r)
            if (ech.pivots[r] >= ncols)
                for (long long j = 0; j < nrhs; ++j)
                    if (bit(ech.rows[r], ncols + j)) bad[j] = 1;
        std::vector<char> is_pivot(ncols, 0);
        for (long long pv : ech.pivots)
            if (pv < ncols) is_pivot[pv] = 1;
        // kernel: back-substitute each free column
        for (long long f = 0; f < ncols; ++f) {
            if (is_pivot[f]) continue;
            std::vector<uint64_t> v((ncols + 63) / 64, 0);
            v[f / 64] |= 1ull << (f % 64);
            for (size_t ri = ech.rows.size(); ri-- > 0;) {
                long long pv = ech.pivots[ri];
                if (pv >= ncols) continue;
                // dot over columns > pv (variables only)
                uint64_t acc = 0;
                const auto& er = ech.rows[ri];
                for (long long w = 0; w < (long long)v.size(); ++w) acc ^= er[w] & v[w];
                long long parity = __builtin_popcountll(acc) & 1; // er[pv] & v[pv] is 0 here
                if (parity) v[pv / 64] ^= 1ull << (pv % 64);
            }
            std::vector<long long> kv(ncols);
            for (long long j = 0; j < ncols; ++j) kv[j] = bit(v, j);
            out.kernel.push_back(std::move(kv));
        }
        // particular per rhs
        for (long long r = 0; r < nrhs; ++r) {
            if (bad[r]) {
                out.particular.emplace_back(std::nullopt);
                continue;
            }
            std::vector<uint64_t> v((ncols + 63) / 64, 0);
            for (size_t ri = ech.rows.size(); ri-- > 0;) {
                long long pv = ech.pivots[ri];
                if (pv >= ncols) continue;
                const auto& er = ech.rows[ri];
                uint64_t acc = 0;
                for (long long w = 0; w < (long long)v.size(); ++w) acc ^= er[w] & v[w];
                long long parity = __builtin_popcountll(acc) & 1;
                parity ^= bit(er, ncols + r);
                if (parity) v[pv / 64] ^= 1ull << (pv % 64);
            }
            std::vector<long long> sol(ncols);
            for (long long j = 0; j < ncols; ++j) sol[j] = bit(v, j);
            out.particular.emplace_back(std::move(sol));
        }
        return out;
    }
    // odd p
    EchelonFp ech(p, ncols, nrhs);
    for (long long i = 0; i < nrows; ++i) {
        bool any = !by_row[i].empty();
        for (long long r = 0; r < nrhs && !any; ++r) any = rhs[r][i] % p != 0;
        if (!any) continue;
        std::vector<int32_t> row(ncols + nrhs, 0);
        for (auto& [c, v] : by_row[i]) row[c] = (int32_t)((row[c] + v) % p);
        for (long long r = 0; r < nrhs; ++r)
            row[ncols + r] = (int32_t)(((rhs[r][i] % p) + p) % p);
        ech.insert(std::move(row));
    }
    std::vector<char> bad(nrhs, 0);
    for (size_t r = 0; r < ech.pivots.size(); ++r)
        if (ech.pivots[r] >= ncols)
            for (long long j = 0; j < nrhs; ++j)
                if (ech.rows[r][ncols + j]) bad[j] = 1;
    std::vector<char> is_pivot(ncols, 0);
    for (long long pv : ech.pivots)
        if (pv < ncols) is_pivot[pv] = 1;
    for (long long f = 0; f < ncols; ++f) {
        if (is_pivot[f]) continue;
        std::vector<long long> v(ncols, 0);
        v[f] = 1;
        for (size_t ri = ech.rows.size(); ri-- > 0;) {
            long long pv = ech.pivots[ri];
            if (pv >= ncols) continue;
            const auto& er = ech.rows[ri];
            long long acc = 0;
            for (long long j = pv + 1; j < ncols; ++j)
                if (er[j] && v[j]) acc = (acc + (long long)er[j] * v[j]) % p;
            v[pv] = (p - acc) % p;
        }
        out.kernel.push_back(std::move(v));
    }
    for (long long r = 0; r < nrhs; ++r) {
        if (bad[r]) {
            out.particular.emplace_back(std::nullopt);
            continue;
        }
        std::vector<long long> v(ncols, 0);
        for (size_t ri = ech.rows.size(); ri-- > 0;) {
            long long pv = ech.pivots[ri];
            if (pv >= ncols) continue;
            const auto& er = ech.rows[ri];
            long long acc = 0;
            for (long long j = pv + 1; j < ncols; ++j)
                if (er[j] && v[j]) acc = (acc + (long long)er[j] * v[j]) % p;
            long long rv = er[ncols + r];
            v[pv] = ((rv - acc) % p + p) % p;
        }
        out.particular.emplace_back(std::move(v));
    }
    return out;
}

struct PkResult {
    std::vector<std::optional<std::vector<long long>>> particular; // entries in [0, p^k)
    std::vector<std::vector<long long>> kernel;
};

// Solve A x = b mod p^k by peeling one power of p per layer.
PkResult solve_pk(long long p, long long k, long long nrows, long long ncols,
                  const std::vector<ModSystem::Entry>& entries,
                  const std::vector<std::vector<long long>>& rhs) {
    long long pk = pow_ll(p, k);
    FpResult base = solve_fp(p, nrows, ncols, entries, rhs);
    PkResult out;
    if (k == 1) {
        out.particular = std::move(base.particular);
        out.kernel = std::move(base.kernel);
        return out;
    }
    long long nker = (long long)base.kernel.size();
    // next-layer matrix [Q | A] with Q = A*N/p, over p^{k-1}
    std::vector<std::vector<std::pair<long long, long long>>> by_row(nrows);
    for (const auto& e : entries)
        by_row[e.row].push_back({e.col, ((e.coeff % pk) + pk) % pk});
    std::vector<ModSystem::Entry> next_entries;
    for (long long i = 0; i < nrows; ++i) {
        for (long long t = 0; t < nker; ++t) {
            __int128 acc = 0;
            for (auto& [c, v] : by_row[i]) acc += (__int128)v * base.kernel[t][c];
            long long red = (long long)(acc % pk);
            // divisible by p since kernel is a mod-p kernel
            long long q = (red / p) % (pk / p);
            if (q) next_entries.push_back({i, t, q});
        }
        for (auto& [c, v] : by_row[i])
            if (v) next_entries.push_back({i, nker + c, v % (pk / p)});
    }
    // next rhs: -(A x0 - b)/p per consistent rhs; inconsistent stay dead
    std::vector<std::vector<long long>> next_rhs;
    std::vector<long long> live;
    for (size_t r = 0; r < rhs.size(); ++r) {
        if (!base.particular[r].has_value()) continue;
        const auto& x0 = *base.particular[r];
        std::vector<long long> nr(nrows);
        for (long long i = 0; i < nrows; ++i) {
            __int128 acc = -(__int128)(((rhs[r][i] % pk) + pk) % pk);
            for (auto& [c, v] : by_row[i]) acc += (__int128)v * x0[c];
            long long red = (long long)(((acc % pk) + pk) % pk);
            nr[i] = ((-(red / p)) % (pk / p) + pk / p) % (pk / p);
        }
        next_rhs.push_back(std::move(nr));
        live.push_back((long long)r);
    }
    PkResult rec = solve_pk(p, k - 1, nrows, nker + ncols, next_entries, next_rhs);
    // assemble particulars
    out.particular.assign(rhs.size(), std::nullopt);
    for (size_t li = 0; li < live.size(); ++li) {
        if (!rec.particular[li].has_value()) continue;
        const auto& ay = *rec.particular[li];
        const auto& x0 = *base.particular[live[li]];
        std::vector<long long> x(ncols);
        for (long long j = 0; j < ncols; ++j) {
            __int128 acc = x0[j] + (__int128)p * ay[nker + j];
            for (long long t = 0; t < nker; ++t) acc += (__int128)base.kernel[t][j] * ay[t];
            x[j] = (long long)(((acc % pk) + pk) % pk);
        }
        out.particular[live[li]] = std::move(x);
    }
    // kernel: N a + p y for recursive kernel gens, plus p^{k-1} N columns
    for (const auto& ay : rec.kernel) {
        std::vector<long long> x(ncols);
        bool nonzero = false;
        for (long long j = 0; j < ncols; ++j) {
            __int128 acc = (__int128)p * ay[nker + j];
            for (long long t = 0; t < nker; ++t) acc += (__int128)base.kernel[t][j] * ay[t];
            x[j] = (long long)(((acc % pk) + pk) % pk);
            nonzero |= x[j] != 0;
        }
        if (nonzero) out.kernel.push_back(std::move(x));
    }
    long long scale = pk / p;
    for (const auto& kv : base.kernel) {
        std::vector<long long> x(ncols);
        bool nonzero = false;
        for (long long j = 0; j < ncols; ++j) {
            x[j] = kv[j] % p * scale % pk;
            nonzero |= x[j] != 0;
        }
        if (nonzero) out.kernel.push_back(std::move(x));
    }
    return out;
}

long long crt_pair(long long r1, long long m1, long long r2, long long m2) {
    // m1, m2 coprime; result mod m1*m2
    if (m1 == 1) return r2 % m2;
    if (m2 == 1) return r1 % m1;
    // find inverse of m1 mod m2
    long long inv = 0;
    for (long long t = 0; t < m2; ++t)
        if ((__int128)m1 * t % m2 == 1) {
            inv = t;
            break;
        }
    long long diff = ((r2 - r1) % m2 + m2) % m2;
    return (r1 + (__int128)m1 * ((__int128)diff * inv % m2)) % (m1 * m2);
}

} // namespace

ModSolveResult solve_linear(const ModSystem& sys, const std::vector<std::vector<long long>>& rhs) {
    check((long long)sys.row_mod.size() == sys.nrows, errc::bad_input, "row_mod size mismatch");
    check((long long)sys.var_mod.size() == sys.ncols, errc::bad_input, "var_mod size mismatch");
    for (const auto& r : rhs)
        check((long long)r.size() == sys.nrows, errc::bad_input, "rhs size mismatch");

    // collect primes
    std::vector<long long> primes;
    auto add_primes = [&](long long m) {
        for (long long p = 2; p * p <= m; ++p)
            if (m % p == 0) {
                if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
                while (m % p == 0) m /= p;
            }
        if (m > 1 && std::find(primes.begin(), primes.end(), m) == primes.end()) primes.push_back(m);
    };
    for (long long m : sys.row_mod) add_primes(m);
    for (long long m : sys.var_mod) add_primes(m);
    std::sort(primes.begin(), primes.end());

    long long nrhs = (long long)rhs.size();
    ModSolveResult out;
    out.solutions.assign(nrhs, std::vector<long long>(sys.ncols, 0));

    auto vp = [](long long m, long long p) {
        long long v = 0;
        while (m % p == 0) {
            m /= p;
            ++v;
        }
        return v;
    };

    // partial CRT moduli per variable accumulated so far
    std::vector<long long> crt_mod(sys.ncols, 1);
    std::vector<char> dead(nrhs, 0);

    for (long long p : primes) {
        long long k = 0;
        for (long long m : sys.row_mod) k = std::max(k, vp(m, p));
        for (long long m : sys.var_mod) k = std::max(k, vp(m, p));
        if (k == 0) continue;
        long long pk = pow_ll(p, k);
        // rows with p | row_mod participate, scaled to modulus p^k
        std::vector<ModSystem::Entry> entries;
        std::vector<long long> scale_row(sys.nrows, 0);
        for (long long i = 0; i < sys.nrows; ++i) {
            long long a = vp(sys.row_mod[i], p);
            if (a > 0) scale_row[i] = pow_ll(p, k - a);
        }
        for (const auto& e : sys.entries) {
            if (!scale_row[e.row]) continue;
            long long c = (__int128)(((e.coeff % pk) + pk) % pk) * scale_row[e.row] % pk;
            if (c) entries.push_back({e.row, e.col, c});
        }
        std::vector<std::vector<long long>> prhs(nrhs, std::vector<long long>(sys.nrows, 0));
        for (long long r = 0; r < nrhs; ++r)
            for (long long i = 0; i < sys.nrows; ++i)
                if (scale_row[i])
                    prhs[r][i] = (__int128)(((rhs[r][i] % pk) + pk) % pk) * scale_row[i] % pk;
        PkResult res = solve_pk(p, k, sys.nrows, sys.ncols, entries, prhs);
        // fold particulars via CRT on each coordinate (p-part of var order)
        for (long long r = 0; r < nrhs; ++r) {
            if (dead[r]) continue;
            if (!res.particular[r].has_value()) {
                dead[r] = 1;
                continue;
            }
            auto& sol = *out.solutions[r];
            const auto& ps = *res.particular[r];
            for (long long j = 0; j < sys.ncols; ++j) {
                long long bj = vp(sys.var_mod[j], p);
                if (bj == 0) continue;
                long long pb = pow_ll(p, bj);
                sol[j] = crt_pair(sol[j], crt_mod[j], ps[j] % pb, pb);
            }
        }
        // kernel gens lifted: g at p, zero elsewhere
        for (const auto& kv : res.kernel) {
            std::vector<long long> g(sys.ncols, 0);
            bool nonzero = false;
            for (long long j = 0; j < sys.ncols; ++j) {
                long long bj = vp(sys.var_mod[j], p);
                if (bj == 0) continue;
                long long pb = pow_ll(p, bj);
                long long comp = kv[j] % pb;
                if (!comp) continue;
                long long rest = sys.var_mod[j] / pb;
                g[j] = crt_pair(0, rest, comp, pb) % sys.var_mod[j];
                // crt with residue 0 mod rest, comp mod pb
                nonzero = true;
            }
            if (nonzero) out.kernel.push_back(std::move(g));
        }
        for (long long j = 0; j < sys.ncols; ++j) {
            long long bj = vp(sys.var_mod[j], p);
            if (bj) crt_mod[j] *= pow_ll(p, bj);
        }
    }
    for (long long r = 0; r < nrhs; ++r) {
        if (dead[r]) {
            out.solutions[r] = std::nullopt;
            continue;
        }
        auto& sol = *out.solutions[r];
        for (long long j = 0; j < sys.ncols; ++j) sol[j] %= sys.var_mod[j];
    }
    // verification by substitution (cheap, sparse)
    for (long long r = 0; r < nrhs; ++r) {
        if (!out.solutions[r].has_value()) continue;
        std::vector<__int128> acc(sys.nrows, 0);
        const auto& sol = *out.solutions[r];
        for (const auto& e : sys.entries) acc[e.row] += (__int128)e.coeff * sol[e.col];
        for (long long i = 0; i < sys.nrows; ++i)
            check((long long)(((acc[i] - rhs[r][i]) % sys.row_mod[i] + sys.row_mod[i]) %
                              sys.row_mod[i]) == 0,
                  errc::bad_input, "solver produced an invalid solution");
    }
    for (const auto& g : out.kernel) {
        std::vector<__int128> acc(sys.nrows, 0);
        for (const auto& e : sys.entries) acc[e.row] += (__int128)e.coeff * g[e.col];
        for (long long i = 0; i < sys.nrows; ++i)
            check((long long)(((acc[i]) % sys.row_mod[i] + sys.row_mod[i]) % sys.row_mod[i]) == 0,
                  errc::bad_input, "solver produced an invalid kernel generator");
    }
    return out;
}

std::optional<std::vector<long long>> solve_linear_one(const ModSystem& sys,
                                                       const std::vector<long long>& rhs) {
    return solve_linear(sys, {rhs}).solutions[0];
}

PresentationResult quotient_presentation(const std::vector<long long>& gen_orders,
                                         const std::vector<std::vector<long long>>& relations) {
    long long r = (long long)gen_orders.size();
    for (const auto& rel : relations)
        check((long long)rel.size() == r, errc::bad_input, "relation of wrong length");
    // primes of the exponent
    std::vector<long long> primes;
    for (long long m : gen_orders) {
        long long t = m;
        for (long long p = 2; p * p <= t; ++p)
            if (t % p == 0) {
                if (std::find(primes.begin(), primes.end(), p) == primes.end()) primes.push_back(p);
                while (t % p == 0) t /= p;
            }
        if (t > 1 && std::find(primes.begin(), primes.end(), t) == primes.end())
            primes.push_back(t);
    }
    std::sort(primes.begin(), primes.end());

    // per prime: list of (order=p^v, generator expression), sorted descending
    struct Summand {
        long long order;
        std::vector<long long> gen;
    };
    std::vector<std::vector<Summand>> per_prime;

    for (long long p : primes) {
        long long k = 0;
        for (long long m : gen_orders) {
            long long v = 0, t = m;
            while (t % p == 0) {
                t /= p;
                ++v;
            }
            k = std::max(k, v);
        }
        long long pk = pow_ll(p, k);
        // matrix columns: relations then diag(gen_orders), mod p^k
        long long nc = (long long)relations.size() + r;
        std::vector<std::vector<long long>> m(r, std::vector<long long>(nc, 0));
        for (size_t t = 0; t < relations.size(); ++t)
            for (long long i = 0; i < r; ++i)
                m[i][t] = ((relations[t][i] % pk) + pk) % pk;
        for (long long i = 0; i < r; ++i) m[i][relations.size() + i] = gen_orders[i] % pk;
        // local SNF with inverse row-transform tracking
        std::vector<std::vector<long long>> uinv(r, std::vector<long long>(r, 0));
        for (long long i = 0; i < r; ++i) uinv[i][i] = 1;
        auto valuation = [&](long long x) {
            if (x % pk == 0) return k;
            long long v = 0;
            while (x % p == 0) {
                x /= p;
                ++v;
            }
            return v;
        };
        long long top = std::min(r, nc);
        std::vector<long long> diag_val;
        for (long long step = 0; step < top; ++step) {
            // find min-valuation entry in the remaining submatrix
            long long bi = -1, bj = -1, bv = k + 1;
            for (long long i = step; i < r && bv > 0; ++i)
                for (long long j = step; j < nc; ++j) {
                    if (m[i][j] % pk == 0) continue;
                    long long v = valuation(m[i][j]);
                    if (v < bv) {
                        bv = v;
                        bi = i;
                        bj = j;
                        if (bv == 0) break;
                    }
                }
            if (bi < 0) {
                for (long long i = step; i < r; ++i) diag_val.push_back(k);
                break;
            }
            std::swap(m[bi], m[step]);
            for (long long i = 0; i < r; ++i) std::swap(uinv[i][bi], uinv[i][step]);
            for (long long i = 0; i < r; ++i) std::swap(m[i][bj], m[i][step]);
            // normalize pivot to p^bv: multiply row by the unit inverse
            long long unit = m[step][step] / pow_ll(p, bv);
            long long uinv_unit;
            {
                long long b = ((unit % pk) + pk) % pk, acc = 1;
                long long ex = (pk - pk / p) - 1; // phi(p^k) - 1
                while (ex) {
                    if (ex & 1) acc = (__int128)acc * b % pk;
                    b = (__int128)b * b % pk;
                    ex >>= 1;
                }
                uinv_unit = acc;
            }
            for (long long j = step; j < nc; ++j)
                m[step][j] = (__int128)m[step][j] * uinv_unit % pk;
            // row op: row_step *= uinv_unit  => uinv col_step *= unit
            for (long long i = 0; i < r; ++i)
                uinv[i][step] = (__int128)uinv[i][step] * unit % pk;
            long long piv = m[step][step]; // = p^bv
            // clear column below/above
            for (long long i = 0; i < r; ++i) {
                if (i == step || m[i][step] % pk == 0) continue;
                long long f = m[i][step] / piv; // valuation >= bv
                for (long long j = step; j < nc; ++j)
                    m[i][j] = ((m[i][j] - (__int128)f * m[step][j]) % pk + pk) % pk;
                for (long long t = 0; t < r; ++t)
                    uinv[t][step] = (uinv[t][step] + (__int128)f * uinv[t][i]) % pk;
            }
            // clear row to the right
            for (long long j = step + 1; j < nc; ++j) {
                if (m[step][j] % pk == 0) continue;
                long long f = m[step][j] / piv;
                for (long long i = 0; i < r; ++i)
                    m[i][j] = ((m[i][j] - (__int128)f * m[i][step]) % pk + pk) % pk;
            }
            diag_val.push_back(bv);
        }
        std::vector<Summand> sums;
        for (long long i = 0; i < (long long)diag_val.size(); ++i) {
            long long order = pow_ll(p, diag_val[i]);
            if (order <= 1) continue;
            Summand s;
            s.order = order;
            s.gen.resize(r);
            for (long long t = 0; t < r; ++t) s.gen[t] = uinv[t][i] % pk;
            sums.push_back(std::move(s));
        }
        std::sort(sums.begin(), sums.end(),
                  [](const Summand& a, const Summand& b) { return a.order > b.order; });
        per_prime.push_back(std::move(sums));
    }
    // merge aligned by rank from the largest
    size_t count = 0;
    for (auto& v : per_prime) count = std::max(count, v.size());
    PresentationResult out;
    for (size_t i = 0; i < count; ++i) {
        long long order = 1;
        std::vector<long long> gen(r, 0);
        for (auto& v : per_prime)
            if (i < v.size()) {
                order *= v[i].order;
                for (long long t = 0; t < r; ++t) gen[t] += v[i].gen[t];
            }
        out.factors.push_back(order);
        out.factor_gens.push_back(std::move(gen));
    }
    // ascending divisibility
    std::reverse(out.factors.begin(), out.factors.end());
    std::reverse(out.factor_gens.begin(), out.factor_gens.end());
    return out;
}

} // namespace modcat
