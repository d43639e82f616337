#include "elkies/ring.hpp"

#include <algorithm>
#include <atomic>
#include <random>

namespace elkies {

namespace {

std::atomic<uint64_t> g_pdiv_counter{0};

uint64_t addmod_u(uint64_t a, uint64_t b, uint64_t m) {
    uint64_t s = a + b; // a, b < m < 2^63, no overflow
    return s >= m ? s - m : s;
}

uint64_t submod_u(uint64_t a, uint64_t b, uint64_t m) { return a >= b ? a - b : a + m - b; }

uint64_t mulmod_u(uint64_t a, uint64_t b, uint64_t m) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

uint64_t powmod_u(uint64_t a, uint64_t e, uint64_t m) {
    uint64_t r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod_u(r, a, m);
        a = mulmod_u(a, a, m);
        e >>= 1;
    }
    return r;
}

// Inverse of a mod m for gcd(a, m) = 1, via extended Euclid.
uint64_t invmod_u(uint64_t a, uint64_t m) {
    int64_t t = 0, newt = 1;
    int64_t r = static_cast<int64_t>(m), newr = static_cast<int64_t>(a % m);
    while (newr != 0) {
        int64_t q = r / newr;
        int64_t tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (r != 1) raise(ErrorCode::NonUnit, "element has no inverse modulo " + std::to_string(m));
    if (t < 0) t += static_cast<int64_t>(m);
    return static_cast<uint64_t>(t);
}

// ---- dense polynomials over F_p, used only for context construction ----

using FpPoly = std::vector<uint64_t>; // ascending, no trailing-zero guarantee

void fp_trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, uint64_t p) {
    if (a.empty() || b.empty()) return {};
    std::vector<uint64_t> prod(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (size_t j = 0; j < b.size(); ++j)
            prod[i + j] = addmod_u(prod[i + j], mulmod_u(a[i], b[j], p), p);
    }
    // reduce by monic f
    size_t n = f.size() - 1;
    for (size_t i = prod.size(); i-- > n;) {
        uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (size_t j = 0; j < n; ++j)
            prod[i - n + j] = submod_u(prod[i - n + j], mulmod_u(c, f[j], p), p);
    }
    prod.resize(n);
    fp_trim(prod);
    return prod;
}

FpPoly fp_powmod(FpPoly base, uint64_t e, const FpPoly& f, uint64_t p) {
    FpPoly r{1};
    while (e) {
        if (e & 1) r = fp_mulmod(r, base, f, p);
        base = fp_mulmod(base, base, f, p);
        e >>= 1;
    }
    return r;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, uint64_t p) {
    fp_trim(a);
    fp_trim(b);
    while (!b.empty()) {
        // a mod b
        uint64_t lead_inv = invmod_u(b.back(), p);
        while (a.size() >= b.size()) {
            uint64_t c = mulmod_u(a.back(), lead_inv, p);
            size_t shift = a.size() - b.size();
            for (size_t j = 0; j < b.size(); ++j)
                a[shift + j] = submod_u(a[shift + j], mulmod_u(c, b[j], p), p);
            fp_trim(a);
            if (a.empty()) break;
        }
        std::swap(a, b);
    }
    return a;
}

// x^(p^k) mod f by k successive p-th powers.
FpPoly fp_frobenius_pow(const FpPoly& f, unsigned k, uint64_t p) {
    FpPoly w{0, 1};
    for (unsigned i = 0; i < k; ++i) w = fp_powmod(w, p, f, p);
    return w;
}

// Rabin irreducibility test for monic f of degree n over F_p.
bool fp_irreducible(const FpPoly& f, uint64_t p) {
    size_t n = f.size() - 1;
    FpPoly x{0, 1};
    FpPoly xq = fp_frobenius_pow(f, static_cast<unsigned>(n), p);
    FpPoly diff = xq;
    if (diff.size() < 2) diff.resize(2, 0);
    diff[1] = submod_u(diff[1], 1, p);
    fp_trim(diff);
    if (!diff.empty()) return false; // x^(p^n) != x
    // proper prime divisors of n
    size_t m = n;
    for (size_t r = 2; r * r <= m; ++r) {
        if (m % r) continue;
        while (m % r == 0) m /= r;
        FpPoly w = fp_frobenius_pow(f, static_cast<unsigned>(n / r), p);
        if (w.size() < 2) w.resize(2, 0);
        w[1] = submod_u(w[1], 1, p);
        fp_trim(w);
        if (fp_gcd(w, f, p).size() != 1) return false;
    }
    if (m > 1) {
        FpPoly w = fp_frobenius_pow(f, static_cast<unsigned>(n / m), p);
        if (w.size() < 2) w.resize(2, 0);
        w[1] = submod_u(w[1], 1, p);
        fp_trim(w);
        if (fp_gcd(w, f, p).size() != 1) return false;
    }
    return true;
}

} // namespace

bool is_prime_u64(uint64_t n) {
    if (n < 2) return false;
    for (uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % q == 0) return n == q;
    }
    uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        uint64_t x = powmod_u(a % n, d, n);
        if (x == 0 || x == 1 || x == n - 1) continue;
        bool witness = true;
        for (int i = 1; i < s; ++i) {
            x = mulmod_u(x, x, n);
            if (x == n - 1) {
                witness = false;
                break;
            }
        }
        if (witness) return false;
    }
    return true;
}

// ---------------------------------------------------------------------------
// RingCtx
// ---------------------------------------------------------------------------

CtxPtr RingCtx::make(uint64_t p, unsigned n, unsigned mu, uint64_t seed) {
    if (p <= 3) raise(ErrorCode::UsageError, "characteristic must exceed 3, got " + std::to_string(p));
    if (!is_prime_u64(p)) raise(ErrorCode::UsageError, std::to_string(p) + " is not prime");
    if (n < 1) raise(ErrorCode::UsageError, "extension degree must be >= 1");
    if (mu < 1) raise(ErrorCode::UsageError, "precision must be >= 1");

    std::vector<uint64_t> def;
    if (n > 1) {
        std::mt19937_64 rng(seed);
        for (int tries = 0; tries < 100000; ++tries) {
            FpPoly cand(n + 1);
            cand[n] = 1;
            for (unsigned i = 0; i < n; ++i) cand[i] = rng() % p;
            if (cand[0] == 0) continue; // x | cand
            if (fp_irreducible(cand, p)) {
                def = cand;
                break;
            }
        }
        if (def.empty()) raise(ErrorCode::Internal, "no irreducible polynomial found");
    }
    return make_with_modulus(p, n, mu, def);
}

CtxPtr RingCtx::make_with_modulus(uint64_t p, unsigned n, unsigned mu,
                                  std::span<const uint64_t> defining) {
    if (p <= 3) raise(ErrorCode::UsageError, "characteristic must exceed 3, got " + std::to_string(p));
    if (!is_prime_u64(p)) raise(ErrorCode::UsageError, std::to_string(p) + " is not prime");
    if (n < 1) raise(ErrorCode::UsageError, "extension degree must be >= 1");
    if (mu < 1) raise(ErrorCode::UsageError, "precision must be >= 1");

    // p^mu must stay below 2^63 so products fit an unsigned 128-bit word.
    unsigned __int128 m = 1;
    for (unsigned i = 0; i < mu; ++i) {
        m *= p;
        if (m >= (static_cast<unsigned __int128>(1) << 63))
            raise(ErrorCode::UsageError, "p^mu exceeds the supported 63-bit modulus range");
    }

    auto ctx = std::shared_ptr<RingCtx>(new RingCtx());
    ctx->p_ = p;
    ctx->n_ = n;
    ctx->mu_ = mu;
    ctx->pmu_ = static_cast<uint64_t>(m);
    ctx->ppow_.resize(mu + 1);
    ctx->ppow_[0] = 1;
    for (unsigned i = 1; i <= mu; ++i) ctx->ppow_[i] = ctx->ppow_[i - 1] * p;

    if (n > 1) {
        if (defining.size() != n + 1)
            raise(ErrorCode::UsageError, "defining polynomial must have degree n");
        std::vector<uint64_t> def(defining.begin(), defining.end());
        for (auto& c : def) c %= ctx->pmu_;
        if (def[n] != 1) raise(ErrorCode::UsageError, "defining polynomial must be monic");
        FpPoly red(def.size());
        for (size_t i = 0; i < def.size(); ++i) red[i] = def[i] % p;
        if (!fp_irreducible(red, p))
            raise(ErrorCode::UsageError, "defining polynomial is reducible mod p");
        ctx->def_ = std::move(def);
    } else if (!defining.empty()) {
        raise(ErrorCode::UsageError, "defining polynomial given for a prime field");
    }

    if (mu > 1) {
        std::vector<uint64_t> def_mod_p;
        if (n > 1) {
            def_mod_p.resize(n + 1);
            for (size_t i = 0; i <= n; ++i) def_mod_p[i] = ctx->def_[i] % p;
        }
        ctx->residue_ = make_with_modulus(p, n, 1, def_mod_p);
    }
    return ctx;
}

CtxPtr RingCtx::residue_field() const {
    if (mu_ == 1) return shared_from_this();
    return residue_;
}

bool RingCtx::same_as(const RingCtx& o) const {
    return this == &o || (p_ == o.p_ && n_ == o.n_ && mu_ == o.mu_ && def_ == o.def_);
}

ZqElement RingCtx::zero() const {
    return ZqElement(shared_from_this(), std::vector<uint64_t>(n_, 0));
}

ZqElement RingCtx::one() const { return from_uint(1); }

ZqElement RingCtx::from_uint(uint64_t v) const {
    std::vector<uint64_t> c(n_, 0);
    c[0] = v % pmu_;
    return ZqElement(shared_from_this(), std::move(c));
}

ZqElement RingCtx::from_int(int64_t v) const {
    int64_t m = static_cast<int64_t>(pmu_);
    int64_t r = v % m;
    if (r < 0) r += m;
    return from_uint(static_cast<uint64_t>(r));
}

ZqElement RingCtx::from_coeffs(std::span<const int64_t> coeffs) const {
    if (coeffs.size() > n_) raise(ErrorCode::UsageError, "too many coefficients for this context");
    std::vector<uint64_t> c(n_, 0);
    int64_t m = static_cast<int64_t>(pmu_);
    for (size_t i = 0; i < coeffs.size(); ++i) {
        int64_t r = coeffs[i] % m;
        if (r < 0) r += m;
        c[i] = static_cast<uint64_t>(r);
    }
    return ZqElement(shared_from_this(), std::move(c));
}

ZqElement RingCtx::from_ucoeffs(std::span<const uint64_t> coeffs) const {
    if (coeffs.size() > n_) raise(ErrorCode::UsageError, "too many coefficients for this context");
    std::vector<uint64_t> c(n_, 0);
    for (size_t i = 0; i < coeffs.size(); ++i) c[i] = coeffs[i] % pmu_;
    return ZqElement(shared_from_this(), std::move(c));
}

ZqElement RingCtx::from_index(uint64_t e) const {
    std::vector<uint64_t> c(n_, 0);
    for (unsigned i = 0; i < n_ && e; ++i) {
        c[i] = e % pmu_;
        e /= pmu_;
    }
    return ZqElement(shared_from_this(), std::move(c));
}

uint64_t RingCtx::add_u(uint64_t a, uint64_t b) const { return addmod_u(a, b, pmu_); }
uint64_t RingCtx::sub_u(uint64_t a, uint64_t b) const { return submod_u(a, b, pmu_); }
uint64_t RingCtx::mul_u(uint64_t a, uint64_t b) const { return mulmod_u(a, b, pmu_); }

// ---------------------------------------------------------------------------
// ZqElement
// ---------------------------------------------------------------------------

ZqElement::ZqElement(CtxPtr ctx, std::vector<uint64_t> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {}

bool ZqElement::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](uint64_t v) { return v == 0; });
}

bool ZqElement::is_unit() const {
    uint64_t p = ctx_->p();
    return std::any_of(c_.begin(), c_.end(), [p](uint64_t v) { return v % p != 0; });
}

ZqElement ZqElement::make_int(int64_t v) const { return ctx_->from_int(v); }

bool operator==(const ZqElement& a, const ZqElement& b) {
    return a.ctx_->same_as(*b.ctx_) && a.c_ == b.c_;
}

void ensure_same_ctx(const ZqElement& a, const ZqElement& b) {
    if (!a.ctx()->same_as(*b.ctx()))
        raise(ErrorCode::ContextMismatch, "operands belong to different contexts");
}

ZqElement operator+(const ZqElement& a, const ZqElement& b) {
    ensure_same_ctx(a, b);
    const auto& ctx = *a.ctx();
    std::vector<uint64_t> c(ctx.n());
    for (unsigned i = 0; i < ctx.n(); ++i) c[i] = ctx.add_u(a.coeffs()[i], b.coeffs()[i]);
    return ZqElement(a.ctx(), std::move(c));
}

ZqElement operator-(const ZqElement& a, const ZqElement& b) {
    ensure_same_ctx(a, b);
    const auto& ctx = *a.ctx();
    std::vector<uint64_t> c(ctx.n());
    for (unsigned i = 0; i < ctx.n(); ++i) c[i] = ctx.sub_u(a.coeffs()[i], b.coeffs()[i]);
    return ZqElement(a.ctx(), std::move(c));
}

ZqElement operator-(const ZqElement& a) {
    const auto& ctx = *a.ctx();
    std::vector<uint64_t> c(ctx.n());
    for (unsigned i = 0; i < ctx.n(); ++i) c[i] = ctx.sub_u(0, a.coeffs()[i]);
    return ZqElement(a.ctx(), std::move(c));
}

ZqElement operator*(const ZqElement& a, const ZqElement& b) {
    ensure_same_ctx(a, b);
    const auto& ctx = *a.ctx();
    unsigned n = ctx.n();
    uint64_t m = ctx.modulus();
    if (n == 1) return ZqElement(a.ctx(), {mulmod_u(a.coeffs()[0], b.coeffs()[0], m)});

    std::vector<uint64_t> prod(2 * n - 1, 0);
    for (unsigned i = 0; i < n; ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (unsigned j = 0; j < n; ++j)
            prod[i + j] = addmod_u(prod[i + j], mulmod_u(a.coeffs()[i], b.coeffs()[j], m), m);
    }
    const auto& def = ctx.defining();
    for (size_t i = prod.size(); i-- > n;) {
        uint64_t c = prod[i];
        if (c == 0) continue;
        prod[i] = 0;
        for (unsigned j = 0; j < n; ++j)
            prod[i - n + j] = submod_u(prod[i - n + j], mulmod_u(c, def[j], m), m);
    }
    prod.resize(n);
    return ZqElement(a.ctx(), std::move(prod));
}

ZqElement inv_unit(const ZqElement& a) {
    const auto& ctx = *a.ctx();
    if (!a.is_unit()) raise(ErrorCode::NonUnit, "element is divisible by p");
    if (ctx.n() == 1) {
        return ZqElement(a.ctx(), {invmod_u(a.coeffs()[0], ctx.modulus())});
    }
    // Invert the reduction mod p with an extended Euclid over F_p, then lift
    // the inverse with Newton doubling x <- x(2 - ax).
    uint64_t p = ctx.p();
    FpPoly u;
    for (uint64_t v : a.coeffs()) u.push_back(v % p);
    fp_trim(u);
    FpPoly f(ctx.defining().size());
    for (size_t i = 0; i < f.size(); ++i) f[i] = ctx.defining()[i] % p;

    // extended Euclid: s*u + t*f = 1
    FpPoly r0 = f, r1 = u, s0 = {}, s1 = {1};
    while (!r1.empty()) {
        uint64_t lead_inv = invmod_u(r1.back(), p);
        FpPoly q;
        FpPoly rem = r0;
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, 0);
            while (rem.size() >= r1.size() && !rem.empty()) {
                uint64_t c = mulmod_u(rem.back(), lead_inv, p);
                size_t shift = rem.size() - r1.size();
                q[shift] = c;
                for (size_t j = 0; j < r1.size(); ++j)
                    rem[shift + j] = submod_u(rem[shift + j], mulmod_u(c, r1[j], p), p);
                fp_trim(rem);
                if (rem.empty()) break;
            }
        }
        // s2 = s0 - q*s1
        FpPoly qs1;
        if (!q.empty() && !s1.empty()) {
            qs1.assign(q.size() + s1.size() - 1, 0);
            for (size_t i = 0; i < q.size(); ++i) {
                if (q[i] == 0) continue;
                for (size_t j = 0; j < s1.size(); ++j)
                    qs1[i + j] = addmod_u(qs1[i + j], mulmod_u(q[i], s1[j], p), p);
            }
        }
        FpPoly s2(std::max(s0.size(), qs1.size()), 0);
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < qs1.size(); ++i) s2[i] = submod_u(s2[i], qs1[i], p);
        fp_trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 is the gcd (a nonzero constant since u != 0 mod p and f irreducible)
    if (r0.size() != 1) raise(ErrorCode::Internal, "gcd with irreducible modulus not constant");
    uint64_t scale = invmod_u(r0[0], p);
    std::vector<uint64_t> x(ctx.n(), 0);
    for (size_t i = 0; i < s0.size(); ++i) x[i] = mulmod_u(s0[i], scale, p);

    ZqElement inv(a.ctx(), std::move(x));
    ZqElement two = ctx.from_uint(2);
    unsigned prec = 1;
    while (prec < ctx.mu()) {
        inv = inv * (two - a * inv);
        prec *= 2;
    }
    return inv;
}

ZqElement exact_div_pow_p(const ZqElement& a, unsigned v) {
    if (v == 0) return a;
    g_pdiv_counter.fetch_add(1, std::memory_order_relaxed);
    const auto& ctx = *a.ctx();
    if (v >= ctx.mu())
        raise(ErrorCode::NotDivisible,
              "division by p^" + std::to_string(v) + " at precision " + std::to_string(ctx.mu()));
    uint64_t pv = ctx.p_pow(v);
    std::vector<uint64_t> c(ctx.n());
    for (unsigned i = 0; i < ctx.n(); ++i) {
        uint64_t x = a.coeffs()[i];
        if (x % pv != 0)
            raise(ErrorCode::NotDivisible, "representative " + std::to_string(x) +
                                               " is not divisible by p^" + std::to_string(v));
        c[i] = x / pv;
    }
    return ZqElement(a.ctx(), std::move(c));
}

FqElement reduce_mod_p(const ZqElement& a) {
    const auto& ctx = *a.ctx();
    CtxPtr res = ctx.residue_field();
    std::vector<uint64_t> c(ctx.n());
    for (unsigned i = 0; i < ctx.n(); ++i) c[i] = a.coeffs()[i] % ctx.p();
    return ZqElement(std::move(res), std::move(c));
}

ZqElement lift_minimal(const FqElement& a, const CtxPtr& target) {
    if (!a.ctx()->is_field()) raise(ErrorCode::UsageError, "lift source must be a field element");
    if (a.ctx()->p() != target->p() || a.ctx()->n() != target->n())
        raise(ErrorCode::ContextMismatch, "lift target has different p or n");
    return ZqElement(target, a.coeffs());
}

ZqElement pow_u64(const ZqElement& a, uint64_t e) {
    ZqElement r = a.ctx()->one();
    ZqElement base = a;
    while (e) {
        if (e & 1) r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

bool canonical_less(const ZqElement& a, const ZqElement& b) {
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    for (size_t i = std::max(x.size(), y.size()); i-- > 0;) {
        uint64_t xa = i < x.size() ? x[i] : 0;
        uint64_t yb = i < y.size() ? y[i] : 0;
        if (xa != yb) return xa < yb;
    }
    return false;
}

FqElement fq_sqrt(const FqElement& a) {
    const auto& ctx = *a.ctx();
    if (!ctx.is_field()) raise(ErrorCode::UsageError, "fq_sqrt requires a field context");
    if (a.is_zero()) return a;

    // q = p^n, needed as an exponent.
    unsigned __int128 q128 = 1;
    for (unsigned i = 0; i < ctx.n(); ++i) {
        q128 *= ctx.p();
        if (q128 >= (static_cast<unsigned __int128>(1) << 63))
            raise(ErrorCode::UsageError, "field too large for square root");
    }
    uint64_t q = static_cast<uint64_t>(q128);

    ZqElement one = ctx.one();
    ZqElement chi = pow_u64(a, (q - 1) / 2);
    if (!(chi == one)) raise(ErrorCode::NotASquare, "element is not a square");

    uint64_t t = q - 1;
    unsigned s = 0;
    while ((t & 1) == 0) {
        t >>= 1;
        ++s;
    }
    // deterministic non-residue search over the canonical enumeration
    ZqElement z = one;
    for (uint64_t e = 2; e < q; ++e) {
        ZqElement cand = ctx.from_index(e);
        if (cand.is_zero()) continue;
        if (!(pow_u64(cand, (q - 1) / 2) == one)) {
            z = cand;
            break;
        }
    }

    ZqElement c = pow_u64(z, t);
    ZqElement r = pow_u64(a, (t + 1) / 2);
    ZqElement w = pow_u64(a, t);
    unsigned m = s;
    while (!(w == one)) {
        ZqElement wk = w;
        unsigned i = 0;
        while (!(wk == one)) {
            wk = wk * wk;
            ++i;
            if (i == m) raise(ErrorCode::Internal, "Tonelli-Shanks failed to converge");
        }
        ZqElement b = c;
        for (unsigned j = 0; j + i + 1 < m; ++j) b = b * b;
        r = r * b;
        c = b * b;
        w = w * c;
        m = i;
    }
    ZqElement neg = -r;
    return canonical_less(r, neg) ? r : neg;
}

ZqElement hensel_lift_root(std::span<const ZqElement> f, const FqElement& r0, unsigned target_mu) {
    if (f.empty()) raise(ErrorCode::UsageError, "empty polynomial");
    CtxPtr ctx = f[0].ctx();
    if (target_mu > ctx->mu())
        raise(ErrorCode::UsageError, "target precision exceeds the context precision");

    auto eval = [&](std::span<const ZqElement> poly, const ZqElement& x) {
        ZqElement acc = ctx->zero();
        for (size_t i = poly.size(); i-- > 0;) acc = acc * x + poly[i];
        return acc;
    };
    std::vector<ZqElement> fprime;
    for (size_t i = 1; i < f.size(); ++i) fprime.push_back(f[i] * ctx->from_uint(i));

    ZqElement r = lift_minimal(r0, ctx);
    if (!reduce_mod_p(eval(f, r)).is_zero())
        raise(ErrorCode::UsageError, "r0 is not a root of f mod p");
    ZqElement d = eval(fprime, r);
    if (!d.is_unit())
        raise(ErrorCode::SingularRoot, "f'(r0) vanishes mod p; root is not simple");

    unsigned prec = 1;
    while (prec < target_mu) {
        r = r - eval(f, r) * inv_unit(eval(fprime, r));
        prec *= 2;
    }
    // The low target_mu digits must now be an exact root.
    ZqElement val = eval(f, r);
    uint64_t pt = ctx->p_pow(target_mu);
    for (uint64_t c : val.coeffs())
        if (c % pt != 0) raise(ErrorCode::Internal, "Hensel lift failed to converge");
    return r;
}

uint64_t pdiv_counter() { return g_pdiv_counter.load(std::memory_order_relaxed); }
void pdiv_counter_reset() { g_pdiv_counter.store(0, std::memory_order_relaxed); }

const char* error_code_name(ErrorCode c) {
    switch (c) {
        case ErrorCode::ContextMismatch: return "ContextMismatch";
        case ErrorCode::NonUnit: return "NonUnit";
        case ErrorCode::NotDivisible: return "NotDivisible";
        case ErrorCode::NotASquare: return "NotASquare";
        case ErrorCode::SingularRoot: return "SingularRoot";
        case ErrorCode::BadInitialConditions: return "BadInitialConditions";
        case ErrorCode::UnsupportedShape: return "UnsupportedShape";
        case ErrorCode::NotAPerfectSquare: return "NotAPerfectSquare";
        case ErrorCode::ReconstructionFailed: return "ReconstructionFailed";
        case ErrorCode::OddnessViolated: return "OddnessViolated";
        case ErrorCode::SingularCurve: return "SingularCurve";
        case ErrorCode::SpecialJ: return "SpecialJ";
        case ErrorCode::AtkinPrime: return "AtkinPrime";
        case ErrorCode::DoubleRoot: return "DoubleRoot";
        case ErrorCode::MissingEll: return "MissingEll";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::ValidationError: return "ValidationError";
        case ErrorCode::VerificationFailed: return "VerificationFailed";
        case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorCode::UsageError: return "UsageError";
        case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

} // namespace elkies
