#include "elkies/pade.hpp"

namespace elkies {

PadeResult pade(const Series& r, size_t order, size_t deg_num, size_t deg_den) {
    const CtxPtr& ctx = r.ctx();
    if (!ctx->is_field()) raise(ErrorCode::UsageError, "pade requires a field context");
    if (r.trunc() < order) raise(ErrorCode::UsageError, "series shorter than requested order");

    // x^order
    std::vector<ZqElement> xo(order + 1, ctx->zero());
    xo[order] = ctx->one();
    Poly r_prev(ctx, std::move(xo));
    Poly r_cur = poly_from_series(r.resized(order));
    // cofactors of R: r_k = u_k * x^order + v_k * R
    Poly v_prev = Poly::zero(ctx);
    Poly v_cur(ctx, {ctx->one()});

    while (!r_cur.is_zero() && static_cast<size_t>(r_cur.degree()) > deg_num) {
        auto [q, rem] = poly_divrem(r_prev, r_cur);
        Poly v_next = v_prev - q * v_cur;
        r_prev = std::move(r_cur);
        r_cur = std::move(rem);
        v_prev = std::move(v_cur);
        v_cur = std::move(v_next);
    }

    if (v_cur.is_zero() || v_cur[0].is_zero())
        raise(ErrorCode::ReconstructionFailed, "denominator has zero constant term");
    if (static_cast<size_t>(std::max(v_cur.degree(), 0L)) > deg_den)
        raise(ErrorCode::ReconstructionFailed, "denominator degree bound violated");

    ZqElement norm = inv_unit(v_cur[0]);
    PadeResult res;
    res.num = scale(r_cur, norm);
    res.den = scale(v_cur, norm);
    if (static_cast<size_t>(std::max(res.num.degree(), 0L)) > deg_num)
        raise(ErrorCode::ReconstructionFailed, "numerator degree bound violated");

    // verify num = den * R mod x^order
    Series check = mul_trunc(series_from_poly(res.den, order), r, order);
    if (!(check == series_from_poly(res.num, order)))
        raise(ErrorCode::ReconstructionFailed, "num != den * R at the requested order");
    res.valid = true;
    return res;
}

Poly reverse_poly(const Poly& p, size_t d) {
    if (p.degree() > static_cast<long>(d))
        raise(ErrorCode::UsageError, "degree exceeds the reversal window");
    std::vector<ZqElement> c(d + 1, p.ctx()->zero());
    for (size_t i = 0; i <= d; ++i) c[d - i] = p.coeff_or_zero(i);
    return Poly(p.ctx(), std::move(c));
}

} // namespace elkies
