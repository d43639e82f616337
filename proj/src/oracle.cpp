#include "elkies/oracle.hpp"

#include <algorithm>
#include <map>

namespace elkies {

mpz_class fq_order(const CtxPtr& ctx) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(ctx->p()), ctx->n());
    return q;
}

namespace {

std::vector<bool> mpz_bits_msb_first(const mpz_class& e) {
    std::vector<bool> bits;
    size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t k = nb; k-- > 0;) bits.push_back(mpz_tstbit(e.get_mpz_t(), k));
    return bits;
}

// x-parts of the division polynomials psi_m, with y^2 eliminated through the
// curve equation.  psi_m = y^(m even) * p_m(x).
class PsiTable {
  public:
    PsiTable(const Curve<FqElement>& e) : e_(e), ctx_(e.a4.ctx()) {
        const CtxPtr& c = ctx_;
        FqElement a = e.a4, b = e.a6;
        fx_ = Poly(c, {b, a, c->zero(), c->one()});          // x^3 + a4 x + a6
        fx2_ = fx_ * fx_;
        inv2_ = inv_unit(c->from_uint(2));
        cache_[0] = Poly::zero(c);
        cache_[1] = Poly(c, {c->one()});
        cache_[2] = Poly(c, {c->from_uint(2)});
        cache_[3] = Poly(c, {-(a * a), c->from_uint(12) * b, c->from_uint(6) * a, c->zero(),
                             c->from_uint(3)});
        FqElement a2 = a * a, a3 = a2 * a, b2 = b * b;
        cache_[4] = scale(Poly(c, {-(c->from_uint(8) * b2 + a3), -(c->from_uint(4) * a * b),
                                   -(c->from_uint(5) * a2), c->from_uint(20) * b,
                                   c->from_uint(5) * a, c->zero(), c->one()}),
                          c->from_uint(4));
    }

    const Poly& psi(uint64_t m) {
        auto it = cache_.find(m);
        if (it != cache_.end()) return it->second;
        uint64_t h = m / 2;
        Poly result = Poly::zero(ctx_);
        if (m % 2 == 0) {
            // psi_2m = psi_m (psi_{m+2} psi_{m-1}^2 - psi_{m-2} psi_{m+1}^2) / 2
            const Poly& pm = psi(h);
            const Poly& pp2 = psi(h + 2);
            const Poly& pm1 = psi(h - 1);
            const Poly& pm2 = psi(h - 2);
            const Poly& pp1 = psi(h + 1);
            result = scale(pm * (pp2 * (pm1 * pm1) - pm2 * (pp1 * pp1)), inv2_);
        } else {
            // psi_{2m+1} = psi_{m+2} psi_m^3 - psi_{m-1} psi_{m+1}^3, with the
            // curve factor F^2 on the all-even side
            const Poly& pp2 = psi(h + 2);
            const Poly& pm = psi(h);
            const Poly& pm1 = psi(h - 1);
            const Poly& pp1 = psi(h + 1);
            Poly left = pp2 * (pm * pm * pm);
            Poly right = pm1 * (pp1 * pp1 * pp1);
            if (h % 2 == 0)
                result = fx2_ * left - right;
            else
                result = left - fx2_ * right;
        }
        return cache_.emplace(m, std::move(result)).first->second;
    }

  private:
    Curve<FqElement> e_;
    CtxPtr ctx_;
    Poly fx_, fx2_;
    ZqElement inv2_;
    std::map<uint64_t, Poly> cache_;
};

} // namespace

Poly division_poly(uint64_t ell, const Curve<FqElement>& e) {
    if (ell < 3 || ell % 2 == 0 || !is_prime_u64(ell))
        raise(ErrorCode::UsageError, "division_poly expects an odd prime order");
    if (ell == e.a4.ctx()->p()) raise(ErrorCode::UsageError, "ell must differ from p");
    PsiTable table(e);
    return table.psi(ell);
}

std::vector<std::pair<unsigned, Poly>> ddf_up_to(const Poly& f, unsigned max_e) {
    const CtxPtr& ctx = f.ctx();
    if (!ctx->is_field()) raise(ErrorCode::UsageError, "factorization requires a field context");
    mpz_class q = fq_order(ctx);
    std::vector<bool> qbits = mpz_bits_msb_first(q);

    std::vector<std::pair<unsigned, Poly>> parts;
    Poly h = poly_make_monic(f);
    Poly x(ctx, {ctx->zero(), ctx->one()});
    Poly w = poly_divrem(x, h).second;
    for (unsigned e = 1; e <= max_e && h.degree() > 0; ++e) {
        if (static_cast<long>(2 * e) > h.degree()) {
            // remainder is irreducible of degree > max split attempts so far
            if (static_cast<unsigned>(h.degree()) <= max_e) {
                parts.emplace_back(static_cast<unsigned>(h.degree()), h);
                h = Poly(ctx, {ctx->one()});
            }
            break;
        }
        w = poly_powmod_bits(w, qbits, h);
        Poly g = poly_gcd(w - x, h);
        if (g.degree() > 0) {
            parts.emplace_back(e, g);
            h = poly_divrem(h, g).first;
            w = poly_divrem(w, h).second;
        }
    }
    if (h.degree() > 0) parts.emplace_back(0u, h); // unsplit remainder
    return parts;
}

void edf(const Poly& f, unsigned e, std::vector<Poly>& out, std::mt19937_64& rng) {
    const CtxPtr& ctx = f.ctx();
    if (f.degree() <= 0) return;
    if (static_cast<unsigned>(f.degree()) == e) {
        out.push_back(poly_make_monic(f));
        return;
    }
    mpz_class qe;
    mpz_class q = fq_order(ctx);
    mpz_pow_ui(qe.get_mpz_t(), q.get_mpz_t(), e);
    mpz_class half = (qe - 1) / 2;
    std::vector<bool> hbits = mpz_bits_msb_first(half);

    for (int tries = 0; tries < 1000; ++tries) {
        std::vector<ZqElement> coeffs;
        for (long i = 0; i < f.degree(); ++i) {
            std::vector<uint64_t> digits(ctx->n());
            for (auto& d : digits) d = rng() % ctx->modulus();
            coeffs.push_back(ctx->from_ucoeffs(digits));
        }
        Poly u(ctx, std::move(coeffs));
        if (u.degree() < 1) continue;
        Poly g = poly_gcd(u, f);
        if (g.degree() == 0) {
            Poly w = poly_powmod_bits(u, hbits, f);
            g = poly_gcd(w - Poly(ctx, {ctx->one()}), f);
        }
        if (g.degree() > 0 && g.degree() < f.degree()) {
            edf(g, e, out, rng);
            edf(poly_divrem(f, g).first, e, out, rng);
            return;
        }
    }
    raise(ErrorCode::Internal, "equal-degree splitting did not converge");
}

Poly some_irreducible_factor(const Poly& f) {
    Poly fm = poly_make_monic(f);
    if (fm.degree() <= 1) return fm;
    auto parts = ddf_up_to(fm, static_cast<unsigned>(fm.degree()));
    // smallest degree part first
    std::sort(parts.begin(), parts.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    for (const auto& [e, part] : parts) {
        if (e == 0) continue;
        if (static_cast<unsigned>(part.degree()) == e) return part;
        std::vector<Poly> irr;
        std::mt19937_64 rng(0x0daceu);
        edf(part, e, irr, rng);
        std::sort(irr.begin(), irr.end(), [](const Poly& a, const Poly& b) {
            for (size_t i = a.coeffs().size(); i-- > 0;) {
                if (!(a[i] == b[i])) return canonical_less(a[i], b[i]);
            }
            return false;
        });
        return irr.front();
    }
    raise(ErrorCode::Internal, "no factor found");
}

// ---------------------------------------------------------------------------
// kernel verification and the naive oracle
// ---------------------------------------------------------------------------

namespace {

using K1 = ExtElem<FqElement>;
using K2 = ExtElem<K1>;

struct SubgroupScan {
    bool point_is_ell_torsion = false;
    std::vector<K1> abscissas; // x(mP) for m = 1..count, all in K1
};

// Walks the multiples of P = (x0, s) in K2 = K1[s]/(s^2 - c), where
// x0 = t in K1 = F_q[t]/(h) and c = x0^3 + a4 x0 + a6.  Every abscissa along
// the walk stays in K1 and every ordinate in s*K1, so the group law only
// inverts nonzero K1 elements or s times a unit; this remains valid even when
// s^2 - c splits and K2 is not a field.
SubgroupScan scan_subgroup(const Poly& h, const Curve<FqElement>& e, uint64_t ell,
                           uint64_t count) {
    const CtxPtr& ctx = e.a4.ctx();
    mpz_class q = fq_order(ctx);

    auto k1 = make_ext<FqElement>(h.coeffs(), q);
    K1 x0 = ext_gen(k1);
    K1 a4_1 = embed(k1, e.a4);
    K1 a6_1 = embed(k1, e.a6);
    K1 c = x0 * x0 * x0 + a4_1 * x0 + a6_1;

    SubgroupScan scan;
    if (c.is_zero()) return scan; // order-2 point, cannot be ell-torsion

    std::vector<K1> modulus{-c, embed(k1, ctx->zero()), x0.make_int(1)}; // s^2 - c
    auto k2 = make_ext<K1>(modulus, k1->order);

    Curve<K2> curve2{embed(k2, a4_1), embed(k2, a6_1)};
    Point<K2> p = Point<K2>::affine(embed(k2, x0), ext_gen(k2));
    if (!on_curve(p, curve2)) raise(ErrorCode::Internal, "constructed point off curve");

    Point<K2> walk = p;
    for (uint64_t m = 1; m <= count; ++m) {
        if (walk.inf) return scan; // order < ell: not an ell-torsion point
        const auto& rep = walk.x.rep();
        if (!rep[1].is_zero()) raise(ErrorCode::Internal, "abscissa escaped K1");
        scan.abscissas.push_back(rep[0]);
        walk = ec_add(walk, p, curve2);
    }
    scan.point_is_ell_torsion = ec_mul(ell, p, curve2).inf;
    return scan;
}

FqElement project_to_base(const K1& v, bool& ok) {
    const auto& rep = v.rep();
    for (size_t i = 1; i < rep.size(); ++i)
        if (!rep[i].is_zero()) {
            ok = false;
            return rep[0];
        }
    return rep[0];
}

bool poly_canonical_less(const Poly& a, const Poly& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    for (size_t i = a.coeffs().size(); i-- > 0;) {
        if (!(a[i] == b[i])) return canonical_less(a[i], b[i]);
    }
    return false;
}

} // namespace

std::string KernelReport::summary() const {
    std::string s;
    s += degree_ok ? "degree ok" : "DEGREE MISMATCH";
    s += "; ";
    s += divides_division_poly ? "divides f_ell" : "DOES NOT DIVIDE f_ell";
    s += "; ";
    s += torsion_ok ? "root point is ell-torsion" : "ROOT POINT NOT ELL-TORSION";
    s += "; ";
    s += abscissa_sum_ok ? "abscissa sum consistent" : "ABSCISSA SUM MISMATCH";
    return s;
}

KernelReport verify_kernel(const Poly& g, const Curve<FqElement>& e, uint64_t ell) {
    const CtxPtr& ctx = e.a4.ctx();
    if (!ctx->is_field()) raise(ErrorCode::UsageError, "verify_kernel requires a field context");
    if (!g.is_monic()) raise(ErrorCode::UsageError, "kernel polynomial must be monic");

    KernelReport rep;
    uint64_t d = (ell - 1) / 2;
    rep.degree_ok = g.degree() == static_cast<long>(d);

    Poly f_ell = poly_make_monic(division_poly(ell, e));
    rep.divides_division_poly = poly_divrem(f_ell, g).second.is_zero();

    if (!rep.degree_ok || !rep.divides_division_poly) return rep;

    try {
        Poly h = some_irreducible_factor(g);
        SubgroupScan scan = scan_subgroup(h, e, ell, ell - 1);
        rep.torsion_ok =
            scan.point_is_ell_torsion && scan.abscissas.size() == ell - 1;

        if (rep.torsion_ok) {
            // doubled sum of roots of g vs abscissa sum over the 2d nonzero points
            auto k1 = scan.abscissas.front().ext();
            K1 total = embed(k1, ctx->zero());
            for (const auto& xm : scan.abscissas) total = total + xm;
            FqElement neg_subleading = -g.coeff_or_zero(d - 1);
            K1 doubled = embed(k1, neg_subleading + neg_subleading);
            rep.abscissa_sum_ok = total == doubled;
        }
    } catch (const Error&) {
        rep.torsion_ok = false;
    }
    return rep;
}

std::vector<Poly> naive_elkies(const Curve<FqElement>& e, uint64_t ell) {
    const CtxPtr& ctx = e.a4.ctx();
    uint64_t d = (ell - 1) / 2;
    Poly f_ell = poly_make_monic(division_poly(ell, e));

    std::vector<Poly> kernels;
    auto parts = ddf_up_to(f_ell, static_cast<unsigned>(d));
    std::mt19937_64 rng(0x5eedau);
    for (const auto& [deg, part] : parts) {
        if (deg == 0 || d % deg != 0) continue; // orbit sizes divide (ell-1)/2
        std::vector<Poly> irr;
        if (static_cast<unsigned>(part.degree()) == deg)
            irr.push_back(part);
        else
            edf(part, deg, irr, rng);
        for (const Poly& h : irr) {
            bool covered = false;
            for (const Poly& k : kernels)
                if (poly_divrem(k, h).second.is_zero()) {
                    covered = true;
                    break;
                }
            if (covered) continue;

            SubgroupScan scan = scan_subgroup(h, e, ell, d);
            if (scan.abscissas.size() != d) continue;

            // product of (X - x(mP)) over K1, then projection to F_q
            auto k1 = scan.abscissas.front().ext();
            std::vector<K1> prod{embed(k1, ctx->one())};
            for (const auto& xm : scan.abscissas) {
                std::vector<K1> next(prod.size() + 1, embed(k1, ctx->zero()));
                for (size_t i = 0; i < prod.size(); ++i) {
                    next[i + 1] = next[i + 1] + prod[i];
                    next[i] = next[i] - prod[i] * xm;
                }
                prod = std::move(next);
            }
            bool rational = true;
            std::vector<ZqElement> coeffs;
            coeffs.reserve(prod.size());
            for (const auto& cv : prod) {
                coeffs.push_back(project_to_base(cv, rational));
                if (!rational) break;
            }
            if (!rational) continue; // subgroup not defined over F_q

            Poly cand(ctx, std::move(coeffs));
            if (!poly_divrem(f_ell, cand).second.is_zero())
                raise(ErrorCode::Internal, "regrouped kernel does not divide f_ell");
            if (std::find(kernels.begin(), kernels.end(), cand) == kernels.end())
                kernels.push_back(std::move(cand));
        }
    }
    std::sort(kernels.begin(), kernels.end(), poly_canonical_less);
    return kernels;
}

std::vector<Point<FqElement>> enumerate_points(const Curve<FqElement>& e) {
    const CtxPtr& ctx = e.a4.ctx();
    mpz_class qm = fq_order(ctx);
    if (qm > 4096) raise(ErrorCode::UsageError, "enumeration oracle is for tiny fields");
    uint64_t q = mpz_get_ui(qm.get_mpz_t());

    std::vector<Point<FqElement>> pts;
    pts.push_back(Point<FqElement>::infinity());
    for (uint64_t xi = 0; xi < q; ++xi) {
        FqElement x = ctx->from_index(xi);
        FqElement rhs = x * x * x + e.a4 * x + e.a6;
        for (uint64_t yi = 0; yi < q; ++yi) {
            FqElement y = ctx->from_index(yi);
            if (y * y == rhs) pts.push_back(Point<FqElement>::affine(x, y));
        }
    }
    return pts;
}

} // namespace elkies
