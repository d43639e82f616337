#include "elkies/pipeline.hpp"

#include <array>

namespace elkies {

namespace {

template <class Fn>
auto stage(const char* name, Fn&& fn) {
    try {
        return fn();
    } catch (Error& e) {
        if (e.stage().empty()) e.set_stage(name);
        throw;
    }
}

} // namespace

std::pair<ZqElement, ZqElement> lift_curve(const FqElement& a4, const FqElement& a6,
                                           const CtxPtr& ctx) {
    return {lift_minimal(a4, ctx), lift_minimal(a6, ctx)};
}

Series extract_odd(const Series& s) {
    const CtxPtr& ctx = s.ctx();
    size_t out_len = s.trunc() / 2;
    std::vector<ZqElement> t;
    t.reserve(out_len);
    for (size_t i = 0; i < s.trunc(); ++i) {
        if (i % 2 == 0) {
            if (!s[i].is_zero())
                raise(ErrorCode::OddnessViolated,
                      "even coefficient at degree " + std::to_string(i) + " is nonzero");
        } else if (t.size() < out_len) {
            t.push_back(s[i]);
        }
    }
    return Series(ctx, std::move(t));
}

namespace {

ElkiesResult run_one_root(const CtxPtr& ctx, const CtxPtr& fq, const FqElement& a4f,
                          const FqElement& a6f, const ZqElement& a4z, const ZqElement& a6z,
                          const ZqElement& jbar, const ModPolyMod& phi_mu, const FqElement& root,
                          int root_index, uint64_t ell, bool verify) {
    unsigned mu = ctx->mu();

    ZqElement jt = stage("hensel_lift", [&] {
        Poly f = phi_mu.univariate_in_x(jbar);
        return hensel_lift_root(f.coeffs(), root, mu);
    });

    auto [a4p, a6p] = stage("isogenous_curve", [&] {
        return isogenous_curve(a4z, a6z, jt, phi_mu, ell);
    });

    size_t g_order = 4 * ell - 1;
    Series g = stage("series_g", [&] {
        Series den = Series::from_ints(ctx, std::array<int64_t, 1>{1}, g_order);
        den.at(4) = a4z;
        den.at(6) = a6z;
        return inv_trunc(den, g_order);
    });

    Series s = stage("ode_solve", [&] {
        Poly h(ctx, {ctx->one(), ctx->zero(), ctx->zero(), ctx->zero(), a4p, ctx->zero(), a6p});
        return solve_ode(g, h, ctx->zero(), ctx->one(), 4 * ell);
    });

    Series t = stage("odd_part", [&] { return extract_odd(s); });

    Series t_bar = stage("reduce", [&] {
        std::vector<ZqElement> c;
        c.reserve(t.trunc());
        for (size_t i = 0; i < t.trunc(); ++i) c.push_back(reduce_mod_p(t[i]));
        return Series(fq, std::move(c));
    });

    PadeResult pr = stage("pade", [&] {
        Series r = inv_trunc(mul_trunc(t_bar, t_bar, 2 * ell), 2 * ell);
        return pade(r, 2 * ell, ell, ell - 1);
    });

    Poly d = stage("reverse", [&] { return reverse_poly(pr.den, ell - 1); });
    Poly kernel = stage("kernel_sqrt", [&] { return poly_sqrt_monic(d); });

    ElkiesResult res{std::move(kernel), root,          std::move(a4p), std::move(a6p),
                     mu,                root_index,    false,          {}};
    if (verify) {
        stage("verify", [&] {
            res.verification = verify_kernel(res.kernel_poly, Curve<FqElement>{a4f, a6f}, ell);
            res.verified = res.verification.all_ok();
            if (!res.verified)
                raise(ErrorCode::VerificationFailed,
                      "kernel verification failed: " + res.verification.summary());
            return 0;
        });
    }
    return res;
}

} // namespace

std::vector<ElkiesResult> compute_elkies_poly(uint64_t p, unsigned n, std::span<const int64_t> a4,
                                              std::span<const int64_t> a6, uint64_t ell,
                                              const ModPolyDb& db, const PipelineOptions& opts) {
    if (ell < 3 || ell % 2 == 0 || !is_prime_u64(ell))
        raise(ErrorCode::UsageError, "ell must be an odd prime, got " + std::to_string(ell));
    if (ell == p) raise(ErrorCode::UsageError, "ell must differ from the characteristic");

    unsigned mu = required_precision(p, ell);
    CtxPtr ctx = stage("plan", [&] {
        if (opts.modulus.empty()) return RingCtx::make(p, n, mu, opts.ctx_seed);
        return RingCtx::make_with_modulus(p, n, mu, opts.modulus);
    });
    CtxPtr fq = ctx->residue_field();

    FqElement a4f = fq->from_coeffs(a4);
    FqElement a6f = fq->from_coeffs(a6);

    stage("invariants", [&] {
        CurveInvariants inv = curve_invariants(a4f, a6f); // throws SingularCurve
        if (inv.j.is_zero() || inv.j == fq->from_int(1728))
            raise(ErrorCode::SpecialJ, "j-invariant 0 or 1728 is outside the supported range");
        return 0;
    });

    auto [a4z, a6z] = lift_curve(a4f, a6f, ctx);
    ZqElement jbar = curve_invariants(a4z, a6z).j;

    std::shared_ptr<const ModPoly> phi = stage("database", [&] { return db.load(ell); });
    ModPolyMod phi_mu(*phi, ctx);
    // With mu = 1 the working context already is F_q.
    std::optional<ModPolyMod> phi_fq_storage;
    const ModPolyMod& phi_fq =
        ctx->is_field() ? phi_mu : (phi_fq_storage.emplace(*phi, fq), *phi_fq_storage);

    ElkiesRoots roots = stage("roots", [&] { return elkies_roots(phi_fq, reduce_mod_p(jbar)); });

    auto run = [&](int idx) {
        return run_one_root(ctx, fq, a4f, a6f, a4z, a6z, jbar, phi_mu,
                            idx == 0 ? roots.j1 : roots.j2, idx, ell, opts.verify);
    };

    // A ramified ell (ell | t^2 - 4q) has a single rational subgroup; both
    // root slots then hold the same residue.
    bool ramified = roots.j1 == roots.j2;

    std::vector<ElkiesResult> out;
    if (opts.root_choice == RootChoice::Both) {
        out.push_back(run(0));
        if (!ramified) out.push_back(run(1));
        return out;
    }

    int first = opts.root_choice == RootChoice::First ? 0 : 1;
    if (ramified) first = 0;
    try {
        out.push_back(run(first));
    } catch (const Error& e) {
        if (ramified || e.code() != ErrorCode::VerificationFailed) throw;
        // Root-order conventions differ between sources; the other root is
        // attempted before surfacing a verification failure.
        out.push_back(run(1 - first));
    }
    return out;
}

} // namespace elkies
