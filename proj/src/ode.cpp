#include "elkies/ode.hpp"

#include <algorithm>

namespace elkies {

OdeState ode_init(const ZqElement& alpha, const ZqElement& beta, const Series& g, const Poly& h) {
    const CtxPtr& ctx = g.ctx();
    if (!alpha.ctx()->same_as(*ctx) || !beta.ctx()->same_as(*ctx) || !h.ctx()->same_as(*ctx))
        raise(ErrorCode::ContextMismatch, "ODE inputs belong to different contexts");

    if (!(poly_eval(h, alpha) == ctx->one()))
        raise(ErrorCode::BadInitialConditions, "H(alpha) != 1");
    if (!beta.is_unit()) raise(ErrorCode::BadInitialConditions, "beta is not a unit");
    if (g.trunc() == 0 || !(g[0] == beta * beta))
        raise(ErrorCode::BadInitialConditions, "beta^2 != G(0)");

    ZqElement gp0 = g.trunc() >= 2 ? g[1] : ctx->zero();
    ZqElement hp_alpha = poly_eval(poly_derivative(h), alpha);
    ZqElement beta3 = beta * beta * beta;
    ZqElement gamma = (gp0 + hp_alpha * beta3) * inv_unit(ctx->from_uint(4) * beta);

    OdeState st;
    st.d = 2;
    st.u = Series(ctx, {inv_unit(beta)});
    st.v = Series(ctx, {ctx->one()});
    st.j = Series(ctx, {ctx->one()});
    st.s = Series(ctx, {alpha, beta, gamma});
    return st;
}

void ode_step(OdeState& st, const Series& g, const Poly& h, size_t mu) {
    const CtxPtr& ctx = g.ctx();
    size_t d = st.d;
    size_t ms = std::min(2 * d + 1, mu);
    size_t mi = ms > 0 ? ms - 1 : 0; // integrand order

    Series two(ctx, {ctx->from_uint(2)});
    ZqElement inv2 = inv_unit(ctx->from_uint(2));

    Series hs = compose_even_poly(h, st.s, std::max(d, mi));
    Series sp = derivative(st.s);

    // the four updates of the doubling iteration, in the printed order
    st.u = mul_trunc(st.u, two - mul_trunc(sp, st.u, d), d);
    Series vj = mul_trunc(st.v, st.j, d);
    st.v = scale(st.v.resized(d) + mul_trunc(mul_trunc(st.j, hs, d), two - vj, d), inv2);
    st.j = mul_trunc(st.j, two - mul_trunc(st.v, st.j, d), d);

    Series defect = mul_trunc(g, hs, mi) - mul_trunc(sp, sp, mi);
    Series weight = scale(mul_trunc(st.u, st.j, std::min(d, mi)), inv2);
    Series integral = integrate(mul_trunc(defect, weight, mi));
    st.s = (st.s + mul_trunc(st.v, integral, ms)).resized(ms);

    st.d = 2 * d;
}

Series solve_ode(const Series& g, const Poly& h, const ZqElement& alpha, const ZqElement& beta,
                 size_t mu) {
    OdeState st = ode_init(alpha, beta, g, h);
    if (mu < 3) return st.s.resized(mu);
    while (st.d < mu - 1) ode_step(st, g, h, mu);
    return st.s.resized(mu);
}

Series ode_residual(const Series& s, const Series& g, const Poly& h) {
    size_t m = s.trunc() >= 2 ? s.trunc() - 2 : 0;
    Series sp = derivative(s);
    return mul_trunc(sp, sp, m) - mul_trunc(g, compose_even_poly(h, s, m), m);
}

} // namespace elkies
