#include "elkies/series.hpp"

#include <algorithm>

namespace elkies {

namespace {

constexpr size_t kKaratsubaThreshold = 32;

void ensure_ctx(const CtxPtr& a, const CtxPtr& b) {
    if (!a->same_as(*b)) raise(ErrorCode::ContextMismatch, "operands belong to different contexts");
}

// Full product of coefficient spans, schoolbook.
void mul_school(std::span<const ZqElement> a, std::span<const ZqElement> b,
                std::vector<ZqElement>& out, const CtxPtr& ctx) {
    out.assign(a.empty() || b.empty() ? 0 : a.size() + b.size() - 1, ctx->zero());
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_zero()) continue;
        for (size_t j = 0; j < b.size(); ++j) {
            if (b[j].is_zero()) continue;
            out[i + j] = out[i + j] + a[i] * b[j];
        }
    }
}

void mul_full(std::span<const ZqElement> a, std::span<const ZqElement> b,
              std::vector<ZqElement>& out, const CtxPtr& ctx);

void mul_karatsuba(std::span<const ZqElement> a, std::span<const ZqElement> b,
                   std::vector<ZqElement>& out, const CtxPtr& ctx) {
    size_t h = (std::max(a.size(), b.size()) + 1) / 2;
    auto a0 = a.subspan(0, std::min(h, a.size()));
    auto a1 = a.size() > h ? a.subspan(h) : std::span<const ZqElement>{};
    auto b0 = b.subspan(0, std::min(h, b.size()));
    auto b1 = b.size() > h ? b.subspan(h) : std::span<const ZqElement>{};

    std::vector<ZqElement> z0, z2, z1;
    mul_full(a0, b0, z0, ctx);
    mul_full(a1, b1, z2, ctx);

    auto add_spans = [&](std::span<const ZqElement> x, std::span<const ZqElement> y) {
        std::vector<ZqElement> s(std::max(x.size(), y.size()), ctx->zero());
        for (size_t i = 0; i < x.size(); ++i) s[i] = x[i];
        for (size_t i = 0; i < y.size(); ++i) s[i] = s[i] + y[i];
        return s;
    };
    std::vector<ZqElement> sa = add_spans(a0, a1);
    std::vector<ZqElement> sb = add_spans(b0, b1);
    mul_full(sa, sb, z1, ctx);
    for (size_t i = 0; i < z0.size(); ++i) z1[i] = z1[i] - z0[i];
    for (size_t i = 0; i < z2.size(); ++i) z1[i] = z1[i] - z2[i];

    out.assign(a.size() + b.size() - 1, ctx->zero());
    for (size_t i = 0; i < z0.size(); ++i) out[i] = out[i] + z0[i];
    for (size_t i = 0; i < z1.size(); ++i)
        if (h + i < out.size()) out[h + i] = out[h + i] + z1[i];
    for (size_t i = 0; i < z2.size(); ++i)
        if (2 * h + i < out.size()) out[2 * h + i] = out[2 * h + i] + z2[i];
}

void mul_full(std::span<const ZqElement> a, std::span<const ZqElement> b,
              std::vector<ZqElement>& out, const CtxPtr& ctx) {
    if (a.empty() || b.empty()) {
        out.clear();
        return;
    }
    if (std::min(a.size(), b.size()) < kKaratsubaThreshold)
        mul_school(a, b, out, ctx);
    else
        mul_karatsuba(a, b, out, ctx);
}

} // namespace

unsigned pdiv_u64(uint64_t p, uint64_t r) {
    unsigned k = 0;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    return k;
}

// ---------------------------------------------------------------------------
// Series
// ---------------------------------------------------------------------------

Series::Series(CtxPtr ctx, std::vector<ZqElement> coeffs)
    : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (const auto& e : c_) ensure_ctx(ctx_, e.ctx());
}

Series Series::zero(const CtxPtr& ctx, size_t m) {
    return Series(ctx, std::vector<ZqElement>(m, ctx->zero()));
}

Series Series::from_ints(const CtxPtr& ctx, std::span<const int64_t> coeffs, size_t m) {
    std::vector<ZqElement> c;
    c.reserve(m);
    for (size_t i = 0; i < m; ++i)
        c.push_back(i < coeffs.size() ? ctx->from_int(coeffs[i]) : ctx->zero());
    return Series(ctx, std::move(c));
}

ZqElement Series::coeff_or_zero(size_t i) const { return i < c_.size() ? c_[i] : ctx_->zero(); }

Series Series::resized(size_t m) const {
    std::vector<ZqElement> c;
    c.reserve(m);
    for (size_t i = 0; i < m; ++i) c.push_back(coeff_or_zero(i));
    return Series(ctx_, std::move(c));
}

bool operator==(const Series& a, const Series& b) {
    return a.ctx_->same_as(*b.ctx_) && a.c_ == b.c_;
}

Series operator+(const Series& a, const Series& b) {
    ensure_ctx(a.ctx(), b.ctx());
    size_t m = std::max(a.trunc(), b.trunc());
    std::vector<ZqElement> c;
    c.reserve(m);
    for (size_t i = 0; i < m; ++i) c.push_back(a.coeff_or_zero(i) + b.coeff_or_zero(i));
    return Series(a.ctx(), std::move(c));
}

Series operator-(const Series& a, const Series& b) {
    ensure_ctx(a.ctx(), b.ctx());
    size_t m = std::max(a.trunc(), b.trunc());
    std::vector<ZqElement> c;
    c.reserve(m);
    for (size_t i = 0; i < m; ++i) c.push_back(a.coeff_or_zero(i) - b.coeff_or_zero(i));
    return Series(a.ctx(), std::move(c));
}

Series scale(const Series& a, const ZqElement& k) {
    std::vector<ZqElement> c;
    c.reserve(a.trunc());
    for (size_t i = 0; i < a.trunc(); ++i) c.push_back(a[i] * k);
    return Series(a.ctx(), std::move(c));
}

Series mul_trunc(const Series& a, const Series& b, size_t m) {
    ensure_ctx(a.ctx(), b.ctx());
    size_t na = std::min(a.trunc(), m);
    size_t nb = std::min(b.trunc(), m);
    std::vector<ZqElement> prod;
    mul_full(std::span(a.coeffs()).subspan(0, na), std::span(b.coeffs()).subspan(0, nb), prod,
             a.ctx());
    prod.resize(m, a.ctx()->zero());
    return Series(a.ctx(), std::move(prod));
}

Series inv_trunc(const Series& a, size_t m) {
    if (a.trunc() == 0 || !a[0].is_unit())
        raise(ErrorCode::NonUnit, "series constant term is not a unit");
    Series x(a.ctx(), {inv_unit(a[0])});
    Series two(a.ctx(), {a.ctx()->from_uint(2)});
    size_t len = 1;
    while (len < m) {
        len = std::min(2 * len, m);
        x = mul_trunc(x, two - mul_trunc(a, x, len), len);
    }
    return x.resized(m);
}

Series derivative(const Series& a) {
    if (a.trunc() <= 1) return Series::zero(a.ctx(), 0);
    std::vector<ZqElement> c;
    c.reserve(a.trunc() - 1);
    for (size_t k = 1; k < a.trunc(); ++k) c.push_back(a[k] * a.ctx()->from_uint(k));
    return Series(a.ctx(), std::move(c));
}

Series integrate(const Series& a) {
    const auto& ctx = a.ctx();
    uint64_t p = ctx->p();
    std::vector<ZqElement> c;
    c.reserve(a.trunc() + 1);
    c.push_back(ctx->zero());
    for (size_t r = 1; r <= a.trunc(); ++r) {
        ZqElement v = a[r - 1];
        unsigned vp = pdiv_u64(p, r);
        if (vp > 0) v = exact_div_pow_p(v, vp);
        uint64_t unit_part = r;
        for (unsigned i = 0; i < vp; ++i) unit_part /= p;
        if (unit_part != 1) v = v * inv_unit(ctx->from_uint(unit_part));
        c.push_back(std::move(v));
    }
    return Series(ctx, std::move(c));
}

Series compose_even_poly(const Poly& h, const Series& s, size_t m) {
    ensure_ctx(h.ctx(), s.ctx());
    if (h.degree() > 6) raise(ErrorCode::UnsupportedShape, "composition polynomial has degree > 6");
    for (size_t i = 0; i < h.coeffs().size(); ++i)
        if (i % 2 == 1 && !h[i].is_zero())
            raise(ErrorCode::UnsupportedShape, "composition polynomial has an odd-degree term");
    if (m == 0) return Series::zero(s.ctx(), 0);

    Series q = mul_trunc(s, s, m);
    Series acc = Series::zero(s.ctx(), 1);
    bool started = false;
    for (int k = 6; k >= 0; k -= 2) {
        ZqElement hk = h.coeff_or_zero(static_cast<size_t>(k));
        if (!started) {
            if (hk.is_zero() && k > 0) continue;
            acc = Series(s.ctx(), {hk});
            started = true;
            continue;
        }
        acc = mul_trunc(acc, q, m);
        acc = acc + Series(s.ctx(), {hk});
    }
    return acc.resized(m);
}

// ---------------------------------------------------------------------------
// Poly
// ---------------------------------------------------------------------------

Poly::Poly(CtxPtr ctx, std::vector<ZqElement> coeffs) : ctx_(std::move(ctx)), c_(std::move(coeffs)) {
    for (const auto& e : c_) ensure_ctx(ctx_, e.ctx());
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

Poly Poly::zero(const CtxPtr& ctx) { return Poly(ctx, {}); }

Poly Poly::from_ints(const CtxPtr& ctx, std::span<const int64_t> coeffs) {
    std::vector<ZqElement> c;
    c.reserve(coeffs.size());
    for (int64_t v : coeffs) c.push_back(ctx->from_int(v));
    return Poly(ctx, std::move(c));
}

ZqElement Poly::coeff_or_zero(size_t i) const { return i < c_.size() ? c_[i] : ctx_->zero(); }

bool Poly::is_monic() const { return !c_.empty() && c_.back() == ctx_->one(); }

bool operator==(const Poly& a, const Poly& b) { return a.ctx_->same_as(*b.ctx_) && a.c_ == b.c_; }

Poly operator+(const Poly& a, const Poly& b) {
    ensure_ctx(a.ctx(), b.ctx());
    std::vector<ZqElement> c;
    size_t m = std::max(a.coeffs().size(), b.coeffs().size());
    c.reserve(m);
    for (size_t i = 0; i < m; ++i) c.push_back(a.coeff_or_zero(i) + b.coeff_or_zero(i));
    return Poly(a.ctx(), std::move(c));
}

Poly operator-(const Poly& a, const Poly& b) {
    ensure_ctx(a.ctx(), b.ctx());
    std::vector<ZqElement> c;
    size_t m = std::max(a.coeffs().size(), b.coeffs().size());
    c.reserve(m);
    for (size_t i = 0; i < m; ++i) c.push_back(a.coeff_or_zero(i) - b.coeff_or_zero(i));
    return Poly(a.ctx(), std::move(c));
}

Poly operator*(const Poly& a, const Poly& b) {
    ensure_ctx(a.ctx(), b.ctx());
    std::vector<ZqElement> prod;
    mul_full(a.coeffs(), b.coeffs(), prod, a.ctx());
    return Poly(a.ctx(), std::move(prod));
}

Poly scale(const Poly& a, const ZqElement& k) {
    std::vector<ZqElement> c;
    c.reserve(a.coeffs().size());
    for (const auto& e : a.coeffs()) c.push_back(e * k);
    return Poly(a.ctx(), std::move(c));
}

ZqElement poly_eval(const Poly& f, const ZqElement& x) {
    ZqElement acc = f.ctx()->zero();
    for (size_t i = f.coeffs().size(); i-- > 0;) acc = acc * x + f[i];
    return acc;
}

Poly poly_derivative(const Poly& f) {
    std::vector<ZqElement> c;
    for (size_t k = 1; k < f.coeffs().size(); ++k) c.push_back(f[k] * f.ctx()->from_uint(k));
    return Poly(f.ctx(), std::move(c));
}

std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b) {
    ensure_ctx(a.ctx(), b.ctx());
    if (b.is_zero()) raise(ErrorCode::UsageError, "division by the zero polynomial");
    if (!b.leading().is_unit())
        raise(ErrorCode::NonUnit, "divisor leading coefficient is not a unit");
    if (a.degree() < b.degree()) return {Poly::zero(a.ctx()), a};

    ZqElement lead_inv = inv_unit(b.leading());
    std::vector<ZqElement> rem = a.coeffs();
    size_t db = b.coeffs().size();
    std::vector<ZqElement> q(rem.size() - db + 1, a.ctx()->zero());
    for (size_t s = q.size(); s-- > 0;) {
        ZqElement c = rem[s + db - 1] * lead_inv;
        if (!c.is_zero()) {
            q[s] = c;
            for (size_t j = 0; j < db; ++j) rem[s + j] = rem[s + j] - c * b[j];
        }
    }
    return {Poly(a.ctx(), std::move(q)), Poly(a.ctx(), std::move(rem))};
}

Poly poly_gcd(Poly a, Poly b) {
    if (!a.ctx()->is_field()) raise(ErrorCode::UsageError, "gcd requires a field context");
    while (!b.is_zero()) {
        Poly r = poly_divrem(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    if (a.is_zero()) return a;
    return poly_make_monic(a);
}

Poly poly_make_monic(const Poly& a) {
    if (a.is_zero() || a.is_monic()) return a;
    return scale(a, inv_unit(a.leading()));
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f) {
    return poly_divrem(a * b, f).second;
}

Poly poly_powmod_bits(const Poly& base, const std::vector<bool>& ebits, const Poly& f) {
    Poly r(base.ctx(), {base.ctx()->one()});
    Poly x = poly_divrem(base, f).second;
    for (bool bit : ebits) {
        r = poly_mulmod(r, r, f);
        if (bit) r = poly_mulmod(r, x, f);
    }
    return r;
}

Poly poly_from_series(const Series& s) { return Poly(s.ctx(), s.coeffs()); }

Series series_from_poly(const Poly& f, size_t m) {
    std::vector<ZqElement> c;
    c.reserve(m);
    for (size_t i = 0; i < m; ++i) c.push_back(f.coeff_or_zero(i));
    return Series(f.ctx(), std::move(c));
}

Poly poly_sqrt_monic(const Poly& d) {
    const auto& ctx = d.ctx();
    if (!ctx->is_field()) raise(ErrorCode::UsageError, "square root requires a field context");
    if (d.is_zero() || !d.is_monic() || d.degree() % 2 != 0)
        raise(ErrorCode::NotAPerfectSquare, "input is not monic of even degree");
    size_t deg = static_cast<size_t>(d.degree());
    size_t half = deg / 2;

    // Reversed series A(x) = x^deg * D(1/x), constant term 1.
    std::vector<ZqElement> rev;
    rev.reserve(half + 1);
    for (size_t i = 0; i <= half; ++i) rev.push_back(d.coeff_or_zero(deg - i));
    Series a(ctx, std::move(rev));

    ZqElement inv2 = inv_unit(ctx->from_uint(2));
    Series s(ctx, {ctx->one()});
    size_t len = 1;
    while (len < half + 1) {
        len = std::min(2 * len, half + 1);
        Series q = mul_trunc(a.resized(len), inv_trunc(s, len), len);
        s = scale(s.resized(len) + q, inv2);
    }

    std::vector<ZqElement> g(half + 1, ctx->zero());
    for (size_t i = 0; i <= half; ++i) g[half - i] = s[i];
    Poly root(ctx, std::move(g));
    if (!(root * root == d))
        raise(ErrorCode::NotAPerfectSquare, "candidate square root does not reproduce the input");
    return root;
}

} // namespace elkies
