// Generator for the classical modular polynomial database (data/modpoly/).
//
// Phi_ell is computed from the product over the ell + 1 conjugates of the
// j-function,
//     Phi_ell(X, j(tau)) = (X - j(ell*tau)) * prod_k (X - j((tau + k)/ell)),
// working modulo many NTT-friendly word-size primes p = c * 2^a * ell + 1 and
// recombining by CRT.  Conjugate expansions live in s = q^(1/ell) with an
// ell-th root of unity from F_p; the elementary symmetric functions are
// q-series with poles of order <= ell + 1 and reduce greedily against powers
// of j to integer coefficients.
//
// The coefficient height is bounded via Broker-Sutherland,
//     log |a_ij| <= 6 ell log ell + 16 ell + 14 sqrt(ell) log ell,
// and the prime set carries 64 spare bits beyond it.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <fstream>
#include <iostream>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include <gmpxx.h>

namespace {

using u64 = uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }
u64 addmod(u64 a, u64 b, u64 m) {
    u64 s = a + b;
    return s >= m ? s - m : s;
}
u64 submod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + m - b; }
u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

bool is_prime(u64 n) {
    if (n < 2) return false;
    for (u64 q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull})
        if (n % q == 0) return n == q;
    u64 d = n - 1;
    int s = 0;
    while (!(d & 1)) d >>= 1, ++s;
    for (u64 a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        u64 x = powmod(a, d, n);
        if (x <= 1 || x == n - 1) continue;
        bool wit = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                wit = false;
                break;
            }
        }
        if (wit) return false;
    }
    return true;
}

// ---- NTT over Z/p, p = c * 2^a * ell + 1 ----

struct NttPlan {
    u64 p;
    u64 gen; // primitive root of F_p
    std::map<std::pair<size_t, bool>, std::vector<u64>> roots_cache;
};

u64 find_generator(u64 p, u64 ell, u64 c) {
    // p - 1 = 2^a * ell * c with c small enough for trial division
    std::vector<u64> prime_factors{2, ell};
    u64 rest = c;
    for (u64 d = 2; d * d <= rest; ++d)
        while (rest % d == 0) {
            prime_factors.push_back(d);
            rest /= d;
        }
    if (rest > 1) prime_factors.push_back(rest);
    for (u64 g = 2;; ++g) {
        bool ok = true;
        for (u64 r : prime_factors)
            if (powmod(g, (p - 1) / r, p) == 1) {
                ok = false;
                break;
            }
        if (ok) return g;
    }
}

void ntt(std::vector<u64>& v, bool inverse, NttPlan& plan) {
    size_t n = v.size();
    u64 p = plan.p;
    // bit reversal
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(v[i], v[j]);
    }
    auto it = plan.roots_cache.find({n, inverse});
    if (it == plan.roots_cache.end()) {
        std::vector<u64> roots(n / 2);
        u64 w = powmod(plan.gen, (p - 1) / n, p);
        if (inverse) w = powmod(w, p - 2, p);
        roots[0] = 1;
        for (size_t i = 1; i < n / 2; ++i) roots[i] = mulmod(roots[i - 1], w, p);
        it = plan.roots_cache.emplace(std::make_pair(n, inverse), std::move(roots)).first;
    }
    const std::vector<u64>& roots = it->second;
    for (size_t len = 2; len <= n; len <<= 1) {
        size_t step = n / len;
        for (size_t i = 0; i < n; i += len) {
            for (size_t k = 0; k < len / 2; ++k) {
                u64 u = v[i + k];
                u64 t = mulmod(v[i + k + len / 2], roots[k * step], p);
                v[i + k] = addmod(u, t, p);
                v[i + k + len / 2] = submod(u, t, p);
            }
        }
    }
    if (inverse) {
        u64 ninv = powmod(n % p, p - 2, p);
        for (auto& x : v) x = mulmod(x, ninv, p);
    }
}

std::vector<u64> mul_series(const std::vector<u64>& a, const std::vector<u64>& b, size_t outlen,
                            NttPlan& plan) {
    if (a.empty() || b.empty()) return std::vector<u64>(outlen, 0);
    size_t full = a.size() + b.size() - 1;
    size_t n = 1;
    while (n < full) n <<= 1;
    std::vector<u64> fa(n, 0), fb(n, 0);
    std::copy(a.begin(), a.end(), fa.begin());
    std::copy(b.begin(), b.end(), fb.begin());
    ntt(fa, false, plan);
    ntt(fb, false, plan);
    for (size_t i = 0; i < n; ++i) fa[i] = mulmod(fa[i], fb[i], plan.p);
    ntt(fa, true, plan);
    fa.resize(std::min(outlen, full));
    fa.resize(outlen, 0);
    return fa;
}

// Newton inversion of a series with unit constant term, length m.
std::vector<u64> inv_series(const std::vector<u64>& a, size_t m, NttPlan& plan) {
    u64 p = plan.p;
    std::vector<u64> x{powmod(a[0], p - 2, p)};
    size_t len = 1;
    while (len < m) {
        len = std::min(2 * len, m);
        std::vector<u64> ax = mul_series(std::vector<u64>(a.begin(), a.begin() + std::min(len, a.size())), x, len, plan);
        for (auto& c : ax) c = submod(0, c, p);
        ax[0] = addmod(ax[0], 2, p);
        x = mul_series(x, ax, len, plan);
    }
    return x;
}

// ---- per-prime computation ----

struct PrimeJob {
    u64 p;
    u64 gen;
    u64 ell;
};

// q-expansion coefficients c_n of j for n = -1..N, as c[n+1], modulo p.
std::vector<u64> j_coefficients(size_t N, NttPlan& plan) {
    u64 p = plan.p;
    size_t len = N + 2;

    // Euler product prod (1 - q^n) by the pentagonal number theorem.
    std::vector<u64> eul(len, 0);
    eul[0] = 1;
    for (long k = 1;; ++k) {
        long g1 = k * (3 * k - 1) / 2;
        long g2 = k * (3 * k + 1) / 2;
        if (static_cast<size_t>(g1) >= len && static_cast<size_t>(g2) >= len) break;
        u64 sign = (k % 2) ? p - 1 : 1;
        if (static_cast<size_t>(g1) < len) eul[g1] = addmod(eul[g1], sign, p);
        if (static_cast<size_t>(g2) < len) eul[g2] = addmod(eul[g2], sign, p);
    }
    // eta-part^24
    std::vector<u64> p2 = mul_series(eul, eul, len, plan);
    std::vector<u64> p4 = mul_series(p2, p2, len, plan);
    std::vector<u64> p8 = mul_series(p4, p4, len, plan);
    std::vector<u64> p16 = mul_series(p8, p8, len, plan);
    std::vector<u64> p24 = mul_series(p16, p8, len, plan);

    // E4 = 1 + 240 sum sigma_3(n) q^n
    std::vector<u64> e4(len, 0);
    e4[0] = 1;
    for (size_t d = 1; d < len; ++d) {
        u64 d3 = mulmod(mulmod(d % p, d % p, p), d % p, p);
        u64 add = mulmod(240 % p, d3, p);
        for (size_t m = d; m < len; m += d) e4[m] = addmod(e4[m], add, p);
    }
    std::vector<u64> e43 = mul_series(mul_series(e4, e4, len, plan), e4, len, plan);

    // q*j = E4^3 / eta24, so c[n] = (q*j)[n+1 - 1]... the array itself.
    std::vector<u64> qj = mul_series(e43, inv_series(p24, len, plan), len, plan);

    // sanity anchors: 1/q + 744 + 196884 q + 21493760 q^2 + ...
    if (qj[0] != 1 || qj[1] != 744 % p || qj[2] != 196884 % p || qj[3] != 21493760 % p) {
        std::fprintf(stderr, "j-expansion self-check failed mod %llu\n",
                     static_cast<unsigned long long>(p));
        std::abort();
    }
    return qj; // index n+1 holds c_n
}

// Laurent coefficient block: series sum_{e >= val} c[e - val] s^e.
struct LSeries {
    long val = 0;
    std::vector<u64> c;
};

// Node: monic polynomial in X of degree deg with LSeries coefficients on a
// shared window [val, cap].
struct Node {
    unsigned deg;
    long val;
    std::vector<std::vector<u64>> coeff; // deg+1 slots, same val, truncated at cap
};

Node mul_nodes(const Node& a, const Node& b, long cap, NttPlan& plan) {
    Node out;
    out.deg = a.deg + b.deg;
    out.val = a.val + b.val;
    size_t len = static_cast<size_t>(cap - out.val + 1);
    size_t fl = a.coeff[0].size() + b.coeff[0].size() - 1;
    size_t n = 1;
    while (n < fl) n <<= 1;

    std::vector<std::vector<u64>> fa(a.deg + 1), fb(b.deg + 1);
    for (unsigned i = 0; i <= a.deg; ++i) {
        fa[i].assign(n, 0);
        std::copy(a.coeff[i].begin(), a.coeff[i].end(), fa[i].begin());
        ntt(fa[i], false, plan);
    }
    for (unsigned i = 0; i <= b.deg; ++i) {
        fb[i].assign(n, 0);
        std::copy(b.coeff[i].begin(), b.coeff[i].end(), fb[i].begin());
        ntt(fb[i], false, plan);
    }
    out.coeff.assign(out.deg + 1, {});
    for (unsigned t = 0; t <= out.deg; ++t) {
        std::vector<u64> acc(n, 0);
        for (unsigned i = 0; i <= a.deg; ++i) {
            if (t < i || t - i > b.deg) continue;
            const auto& x = fa[i];
            const auto& y = fb[t - i];
            for (size_t k = 0; k < n; ++k)
                acc[k] = addmod(acc[k], mulmod(x[k], y[k], plan.p), plan.p);
        }
        ntt(acc, true, plan);
        acc.resize(std::min(fl, len));
        acc.resize(len, 0);
        out.coeff[t] = std::move(acc);
    }
    return out;
}

// Phi_ell mod p: returns the dense (ell+2) x (ell+2) coefficient grid.
std::vector<std::vector<u64>> phi_mod_p(const PrimeJob& job) {
    u64 p = job.p, ell = job.ell;
    NttPlan plan{p, job.gen, {}};

    long w_cap = static_cast<long>(ell * ell + 3 * ell); // s-window top for the tree
    size_t ncoef = static_cast<size_t>(w_cap) + 2;       // c_n for n = -1..w_cap
    std::vector<u64> c = j_coefficients(ncoef - 2, plan);

    u64 zeta = powmod(job.gen, (p - 1) / ell, p);
    std::vector<u64> zpow(ell);
    zpow[0] = 1;
    for (u64 r = 1; r < ell; ++r) zpow[r] = mulmod(zpow[r - 1], zeta, p);

    // leaves: X - j((tau + k)/ell), window [-1, w_cap]
    std::vector<Node> level;
    level.reserve(ell);
    for (u64 k = 0; k < ell; ++k) {
        Node leaf;
        leaf.deg = 1;
        leaf.val = -1;
        size_t len = static_cast<size_t>(w_cap + 2);
        leaf.coeff.assign(2, std::vector<u64>(len, 0));
        for (long n = -1; n <= w_cap; ++n) {
            u64 cn = c[n + 1];
            if (!cn) continue;
            u64 zr = zpow[((n % static_cast<long>(ell)) + ell) % ell * k % ell];
            leaf.coeff[0][n + 1] = submod(0, mulmod(cn, zr, p), p);
        }
        leaf.coeff[1][1] = 1; // s^0 slot (val = -1)
        level.push_back(std::move(leaf));
    }

    // subproduct tree
    while (level.size() > 1) {
        std::vector<Node> next;
        next.reserve((level.size() + 1) / 2);
        for (size_t i = 0; i + 1 < level.size(); i += 2)
            next.push_back(mul_nodes(level[i], level[i + 1], w_cap, plan));
        if (level.size() % 2) next.push_back(std::move(level.back()));
        level = std::move(next);
    }
    Node psi = std::move(level[0]); // prod_k (X - j_k), degree ell

    // e_u(q) for u = 0..ell+1: coefficient of X^u in (X - j(ell tau)) * psi,
    // assembled on the q-window [-(ell+1), 0].  Values at positive exponents
    // are never read.
    long qlo = -static_cast<long>(ell) - 1, qhi = 0;
    size_t qlen = static_cast<size_t>(qhi - qlo + 1);
    std::vector<std::vector<u64>> e(ell + 2, std::vector<u64>(qlen, 0));

    auto psi_at = [&](unsigned t, long sexp) -> u64 {
        if (t > psi.deg) return 0;
        long idx = sexp - psi.val;
        if (idx < 0 || static_cast<size_t>(idx) >= psi.coeff[t].size()) return 0;
        return psi.coeff[t][idx];
    };

    for (long u = 0; u <= static_cast<long>(ell) + 1; ++u) {
        for (long qe = qlo; qe <= qhi; ++qe) {
            long sexp = qe * static_cast<long>(ell);
            // w_{u-1} contribution (the X * psi part)
            u64 acc = u >= 1 ? psi_at(u - 1, sexp) : 0;
            // - j(ell tau) * w_u: j(ell tau) has s-exponents ell^2 * n, n >= -1
            for (long n = -1; n + 1 < static_cast<long>(c.size()); ++n) {
                long rest = sexp - n * static_cast<long>(ell) * static_cast<long>(ell);
                if (rest < psi.val) break;
                u64 cn = c[n + 1];
                if (cn) {
                    u64 w = psi_at(u, rest);
                    if (w) acc = submod(acc, mulmod(cn, w, p), p);
                }
            }
            e[u][qe - qlo] = acc;
        }
    }

    // powers of j on the wider q-window [-(ell+1), ell+1]: building j^m down
    // to its pole consumes intermediate exponents up to m - 1.
    long jhi = static_cast<long>(ell) + 1;
    size_t jlen = static_cast<size_t>(jhi - qlo + 1);
    std::vector<std::vector<u64>> jpow(ell + 2, std::vector<u64>(jlen, 0));
    jpow[0][-qlo] = 1; // j^0 = 1 at q^0
    for (long n = qlo; n <= jhi; ++n) jpow[1][n - qlo] = n >= -1 ? c[n + 1] : 0;
    for (long m = 2; m <= static_cast<long>(ell) + 1; ++m) {
        for (long t = qlo; t <= jhi; ++t) {
            u64 acc = 0;
            for (long s = qlo; s <= jhi; ++s) {
                long r = t - s;
                if (r < -1 || r > jhi) continue;
                acc = addmod(acc, mulmod(jpow[m - 1][s - qlo], jpow[1][r - qlo], p), p);
            }
            jpow[m][t - qlo] = acc;
        }
    }

    // greedy reduction of each e_u against powers of j
    std::vector<std::vector<u64>> grid(ell + 2, std::vector<u64>(ell + 2, 0));
    for (long u = 0; u <= static_cast<long>(ell) + 1; ++u) {
        std::vector<u64> rem = e[u];
        for (long m = static_cast<long>(ell) + 1; m >= 0; --m) {
            u64 b = rem[-m - qlo];
            grid[u][m] = b;
            if (b == 0) continue;
            for (long t = -m; t <= qhi; ++t)
                rem[t - qlo] = submod(rem[t - qlo], mulmod(b, jpow[m][t - qlo], p), p);
        }
        for (long t = qlo; t <= 0; ++t)
            if (rem[t - qlo] != 0) {
                std::fprintf(stderr, "reduction residual nonzero (u=%ld)\n", u);
                std::abort();
            }
    }

    // per-prime structural checks
    if (grid[ell + 1][0] != 1) {
        std::fprintf(stderr, "leading coefficient check failed mod %llu\n",
                     static_cast<unsigned long long>(p));
        std::abort();
    }
    for (long u = 0; u <= static_cast<long>(ell) + 1; ++u)
        for (long m = 0; m < u; ++m)
            if (grid[u][m] != grid[m][u]) {
                std::fprintf(stderr, "symmetry check failed mod %llu\n",
                             static_cast<unsigned long long>(p));
                std::abort();
            }
    return grid;
}

// ---- driver ----

double height_bound_bits(u64 ell) {
    double l = static_cast<double>(ell);
    double nats = 6.0 * l * std::log(l) + 16.0 * l + 14.0 * std::sqrt(l) * std::log(l);
    return nats / std::log(2.0) + 64.0;
}

std::vector<PrimeJob> pick_primes(u64 ell, double bits) {
    std::vector<PrimeJob> jobs;
    double have = 0;
    unsigned a = 26; // NTT capacity 2^26, far above any transform here
    u64 base = (u64{1} << a) * ell;
    for (u64 k = 3; have < bits; k += 2) {
        u64 p = base * k + 1;
        if (p >= (u64{1} << 62)) break;
        if (!is_prime(p)) continue;
        jobs.push_back({p, find_generator(p, ell, k), ell});
        have += std::log2(static_cast<double>(p));
    }
    if (have < bits) {
        std::fprintf(stderr, "not enough CRT primes\n");
        std::abort();
    }
    return jobs;
}

int run(u64 ell, const std::string& outpath, unsigned nthreads) {
    if (ell < 2 || !is_prime(ell)) {
        std::fprintf(stderr, "ell must be prime\n");
        return 1;
    }
    double bits = height_bound_bits(ell);
    std::vector<PrimeJob> jobs = pick_primes(ell, bits);
    std::fprintf(stderr, "ell=%llu: %zu primes for %.0f bits\n",
                 static_cast<unsigned long long>(ell), jobs.size(), bits);

    std::vector<std::vector<std::vector<u64>>> grids(jobs.size());
    std::mutex mx;
    size_t next_job = 0;
    auto worker = [&] {
        for (;;) {
            size_t idx;
            {
                std::lock_guard<std::mutex> lk(mx);
                if (next_job >= jobs.size()) return;
                idx = next_job++;
            }
            grids[idx] = phi_mod_p(jobs[idx]);
            std::lock_guard<std::mutex> lk(mx);
            std::fprintf(stderr, "  prime %zu/%zu done\n", idx + 1, jobs.size());
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < nthreads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();

    // CRT per coefficient (unsigned long is 64-bit here)
    size_t dim = ell + 2;
    std::vector<std::vector<mpz_class>> coeff(dim, std::vector<mpz_class>(dim, 0));
    {
        mpz_class m = 1;
        for (size_t pi = 0; pi < jobs.size(); ++pi) {
            u64 p = jobs[pi].p;
            u64 m_mod_p = mpz_fdiv_ui(m.get_mpz_t(), p);
            u64 minv = powmod(m_mod_p, p - 2, p);
            for (size_t i = 0; i < dim; ++i)
                for (size_t j2 = 0; j2 <= i; ++j2) {
                    u64 r = grids[pi][i][j2];
                    u64 cur = mpz_fdiv_ui(coeff[i][j2].get_mpz_t(), p);
                    u64 factor = mulmod(submod(r, cur, p), minv, p);
                    coeff[i][j2] += m * mpz_class(static_cast<unsigned long>(factor));
                }
            m *= static_cast<unsigned long>(p);
        }
        // symmetric lift
        mpz_class half = m / 2;
        for (size_t i = 0; i < dim; ++i)
            for (size_t j2 = 0; j2 <= i; ++j2)
                if (coeff[i][j2] > half) coeff[i][j2] -= m;
    }

    // Kronecker congruence Phi_ell == (X^ell - Y)(X - Y^ell) mod ell
    for (size_t i = 0; i < dim; ++i)
        for (size_t j2 = 0; j2 <= i; ++j2) {
            mpz_class r = coeff[i][j2] % static_cast<unsigned long>(ell);
            if (r < 0) r += static_cast<unsigned long>(ell);
            unsigned long expect = 0;
            if (i == ell + 1 && j2 == 0) expect = 1;
            if (i == ell && j2 == ell) expect = ell - 1;
            if (i == 1 && j2 == 1) expect = ell - 1;
            if (r != expect) {
                std::fprintf(stderr, "Kronecker congruence failed at (%zu, %zu)\n", i, j2);
                return 1;
            }
        }

    std::ofstream out(outpath);
    out << "# classical modular polynomial, symmetric storage: i >= j,\n";
    out << "# coefficient c means c*(X^i Y^j + X^j Y^i) for i != j and c*X^i Y^i otherwise\n";
    out << "ell " << ell << "\n";
    for (size_t i = 0; i < dim; ++i)
        for (size_t j2 = 0; j2 <= i; ++j2)
            if (coeff[i][j2] != 0) out << i << " " << j2 << " " << coeff[i][j2].get_str() << "\n";
    out.close();
    std::fprintf(stderr, "wrote %s\n", outpath.c_str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 3) {
        std::fprintf(stderr, "usage: %s <ell> <outfile> [threads]\n", argv[0]);
        return 1;
    }
    u64 ell = std::strtoull(argv[1], nullptr, 10);
    unsigned threads = argc > 3 ? static_cast<unsigned>(std::strtoul(argv[3], nullptr, 10))
                                : std::max(1u, std::thread::hardware_concurrency());
    return run(ell, argv[2], threads);
}
