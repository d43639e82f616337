#include "elkies/modpoly.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

namespace elkies {

const mpz_class ModPoly::zero_ = 0;

const mpz_class& ModPoly::coeff(unsigned i, unsigned j) const {
    if (i < j) std::swap(i, j);
    auto it = terms_.find({i, j});
    return it == terms_.end() ? zero_ : it->second;
}

ModPoly ModPoly::load(const std::string& path, uint64_t ell) {
    std::ifstream in(path);
    if (!in) raise(ErrorCode::MissingEll, "no modular polynomial file at " + path);
    return parse(in, ell, path);
}

ModPoly ModPoly::parse(std::istream& in, uint64_t ell, const std::string& what) {
    ModPoly phi;
    std::string line;
    bool header_seen = false;
    size_t lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view sv(line);
        if (auto pos = sv.find('#'); pos != std::string_view::npos) sv = sv.substr(0, pos);
        std::string body(sv);
        std::istringstream ls(body);
        std::string first;
        if (!(ls >> first)) continue; // blank or comment line

        if (!header_seen) {
            if (first != "ell")
                raise(ErrorCode::ParseError, what + ":" + std::to_string(lineno) +
                                                 ": expected header 'ell <L>'");
            uint64_t l = 0;
            if (!(ls >> l) || l == 0)
                raise(ErrorCode::ParseError, what + ":" + std::to_string(lineno) + ": bad header");
            if (l != ell)
                raise(ErrorCode::ValidationError,
                      what + ": file is for ell = " + std::to_string(l) + ", expected " +
                          std::to_string(ell));
            phi.ell_ = l;
            header_seen = true;
            continue;
        }

        long i = -1, j = -1;
        std::string coeff;
        std::istringstream ts(body);
        if (!(ts >> i >> j >> coeff))
            raise(ErrorCode::ParseError,
                  what + ":" + std::to_string(lineno) + ": expected '<i> <j> <c>'");
        std::string extra;
        if (ts >> extra)
            raise(ErrorCode::ParseError,
                  what + ":" + std::to_string(lineno) + ": trailing tokens");
        if (i < 0 || j < 0 || i < j)
            raise(ErrorCode::ParseError,
                  what + ":" + std::to_string(lineno) + ": indices must satisfy i >= j >= 0");
        mpz_class c;
        if (mpz_set_str(c.get_mpz_t(), coeff.c_str(), 10) != 0)
            raise(ErrorCode::ParseError,
                  what + ":" + std::to_string(lineno) + ": bad integer '" + coeff + "'");
        Key key{static_cast<unsigned>(i), static_cast<unsigned>(j)};
        if (phi.terms_.count(key))
            raise(ErrorCode::ParseError, what + ":" + std::to_string(lineno) +
                                             ": duplicate term (" + std::to_string(i) + ", " +
                                             std::to_string(j) + ")");
        if (c != 0) phi.terms_.emplace(key, std::move(c));
    }
    if (!header_seen) raise(ErrorCode::ParseError, what + ": missing 'ell <L>' header");

    // structural validation
    unsigned expected = static_cast<unsigned>(phi.ell_) + 1;
    unsigned max_i = 0;
    for (const auto& [key, c] : phi.terms_) max_i = std::max(max_i, key.first);
    if (max_i != expected)
        raise(ErrorCode::ValidationError,
              what + ": degree " + std::to_string(max_i) + " in X, expected " +
                  std::to_string(expected));
    if (phi.coeff(expected, 0) != 1)
        raise(ErrorCode::ValidationError, what + ": coefficient of X^" + std::to_string(expected) +
                                              " must be 1");
    if (phi.coeff(expected, expected) != 0)
        raise(ErrorCode::ValidationError,
              what + ": coefficient of (XY)^" + std::to_string(expected) + " must be 0");
    return phi;
}

std::string ModPolyDb::path_for(uint64_t ell) const {
    return dir_ + "/phi" + std::to_string(ell) + ".txt";
}

bool ModPolyDb::has(uint64_t ell) const {
    std::ifstream in(path_for(ell));
    return static_cast<bool>(in);
}

std::shared_ptr<const ModPoly> ModPolyDb::load(uint64_t ell) const {
    auto it = cache_.find(ell);
    if (it != cache_.end()) return it->second;
    auto phi = std::make_shared<const ModPoly>(ModPoly::load(path_for(ell), ell));
    cache_.emplace(ell, phi);
    return phi;
}

// ---------------------------------------------------------------------------
// ModPolyMod
// ---------------------------------------------------------------------------

ModPolyMod::ModPolyMod(const ModPoly& phi, CtxPtr ctx) : ell_(phi.ell()), ctx_(std::move(ctx)) {
    size_t dim = static_cast<size_t>(ell_) + 2;
    grid_.assign(dim, std::vector<uint64_t>(dim, 0));
    uint64_t m = ctx_->modulus();
    for (const auto& [key, c] : phi.terms()) {
        uint64_t r = mpz_fdiv_ui(c.get_mpz_t(), m); // canonical residue, sign handled
        grid_[key.first][key.second] = r;
        grid_[key.second][key.first] = r;
    }
}

ZqElement ModPolyMod::eval(Part part, const ZqElement& x0, const ZqElement& y0) const {
    if (part == Part::DY) return eval(Part::DX, y0, x0); // symmetry of Phi
    ensure_same_ctx(x0, y0);
    if (!x0.ctx()->same_as(*ctx_))
        raise(ErrorCode::ContextMismatch, "evaluation point context differs from reduction");
    size_t dim = grid_.size();

    auto row_value = [&](size_t i) {
        ZqElement row = ctx_->zero();
        for (size_t j = dim; j-- > 0;) {
            row = row * y0;
            if (grid_[i][j]) row = row + ctx_->from_uint(grid_[i][j]);
        }
        return row;
    };

    // Horner in x over rows, each row evaluated by Horner in y.
    ZqElement acc = ctx_->zero();
    if (part == Part::Value) {
        for (size_t i = dim; i-- > 0;) acc = acc * x0 + row_value(i);
    } else {
        for (size_t i = dim; i-- > 1;)
            acc = acc * x0 + row_value(i) * ctx_->from_uint(static_cast<uint64_t>(i));
    }
    return acc;
}

Poly ModPolyMod::univariate_in_x(const ZqElement& y0) const {
    if (!y0.ctx()->same_as(*ctx_))
        raise(ErrorCode::ContextMismatch, "evaluation point context differs from reduction");
    std::vector<ZqElement> coeffs;
    coeffs.reserve(grid_.size());
    for (const auto& row : grid_) {
        ZqElement v = ctx_->zero();
        for (size_t j = row.size(); j-- > 0;) {
            v = v * y0;
            if (row[j]) v = v + ctx_->from_uint(row[j]);
        }
        coeffs.push_back(std::move(v));
    }
    return Poly(ctx_, std::move(coeffs));
}

// ---------------------------------------------------------------------------
// curve invariants and Elkies roots
// ---------------------------------------------------------------------------

CurveInvariants curve_invariants(const ZqElement& a4, const ZqElement& a6) {
    ensure_same_ctx(a4, a6);
    const CtxPtr& ctx = a4.ctx();
    ZqElement four_a4 = ctx->from_uint(4) * a4;
    ZqElement delta =
        ctx->from_int(-16) * (ctx->from_uint(4) * a4 * a4 * a4 + ctx->from_uint(27) * a6 * a6);
    if (!delta.is_unit()) raise(ErrorCode::SingularCurve, "discriminant vanishes mod p");
    ZqElement j = ctx->from_int(-1728) * four_a4 * four_a4 * four_a4 * inv_unit(delta);
    return {std::move(delta), std::move(j)};
}

namespace {

std::vector<bool> mpz_bits_msb_first(const mpz_class& e) {
    std::vector<bool> bits;
    size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (size_t k = nb; k-- > 0;) bits.push_back(mpz_tstbit(e.get_mpz_t(), k));
    return bits;
}

mpz_class field_order(const CtxPtr& ctx) {
    mpz_class q;
    mpz_ui_pow_ui(q.get_mpz_t(), static_cast<unsigned long>(ctx->p()), ctx->n());
    return q;
}

// All roots of a squarefree product of distinct linear factors, by seeded
// gcd splitting with (X + a)^((q-1)/2) - 1.
void collect_roots(const Poly& g, std::vector<FqElement>& out, std::mt19937_64& rng,
                   const mpz_class& q) {
    const CtxPtr& ctx = g.ctx();
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        out.push_back(-(g[0] * inv_unit(g[1])));
        return;
    }
    mpz_class half = (q - 1) / 2;
    std::vector<bool> bits = mpz_bits_msb_first(half);
    for (int tries = 0; tries < 1000; ++tries) {
        std::vector<uint64_t> coeffs(ctx->n());
        for (auto& c : coeffs) c = rng() % ctx->modulus();
        Poly shift(ctx, {ctx->from_ucoeffs(coeffs), ctx->one()});
        Poly w = poly_powmod_bits(shift, bits, g);
        Poly h = poly_gcd(w - Poly(ctx, {ctx->one()}), g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            collect_roots(h, out, rng, q);
            collect_roots(poly_divrem(g, h).first, out, rng, q);
            return;
        }
    }
    raise(ErrorCode::Internal, "root splitting did not converge");
}

} // namespace

ElkiesRoots elkies_roots(const ModPolyMod& phi, const FqElement& j_e) {
    const CtxPtr& ctx = j_e.ctx();
    if (!ctx->is_field()) raise(ErrorCode::UsageError, "elkies_roots requires a field context");
    if (j_e.is_zero() || j_e == ctx->from_int(1728))
        raise(ErrorCode::SpecialJ, "j-invariant 0 or 1728 is outside the supported range");

    Poly p_of_x = phi.univariate_in_x(j_e);
    mpz_class q = field_order(ctx);

    // gcd(P, X^q - X)
    Poly x(ctx, {ctx->zero(), ctx->one()});
    Poly xq = poly_powmod_bits(x, mpz_bits_msb_first(q), p_of_x);
    Poly g = poly_gcd(xq - x, p_of_x);

    if (g.degree() <= 0) raise(ErrorCode::AtkinPrime, "Phi_ell(X, j) has no rational root");

    std::vector<FqElement> roots;
    if (g.degree() == 1) {
        // ramified instance (ell divides t^2 - 4q): the unique rational
        // subgroup; the root is reported in both slots
        FqElement r = -(g[0] * inv_unit(g[1]));
        return {r, r};
    }
    if (g.degree() == 2) {
        // X^2 + bX + c, distinct roots since g | X^q - X
        ZqElement b = g[1];
        ZqElement c = g[0];
        ZqElement disc = b * b - ctx->from_uint(4) * c;
        ZqElement s = fq_sqrt(disc);
        ZqElement inv2 = inv_unit(ctx->from_uint(2));
        roots.push_back((-b + s) * inv2);
        roots.push_back((-b - s) * inv2);
    } else {
        std::mt19937_64 rng(0xe1c1e5u);
        collect_roots(g, roots, rng, q);
    }
    std::sort(roots.begin(), roots.end(), canonical_less);
    if (roots.size() < 2 || roots[0] == roots[1])
        raise(ErrorCode::DoubleRoot, "repeated rational root; degenerate instance");
    return {roots[0], roots[1]};
}

namespace {

ZqElement checked_inv(const ZqElement& v, const char* name) {
    if (!v.is_unit())
        raise(ErrorCode::NonUnit, std::string(name) + " vanishes mod p; configuration degenerate");
    return inv_unit(v);
}

} // namespace

std::pair<ZqElement, ZqElement> isogenous_curve(const ZqElement& a4, const ZqElement& a6,
                                                const ZqElement& jt, const ModPolyMod& phi,
                                                uint64_t ell) {
    ensure_same_ctx(a4, a6);
    const CtxPtr& ctx = a4.ctx();
    if (!jt.ctx()->same_as(*ctx))
        raise(ErrorCode::ContextMismatch, "jt context differs from the curve context");

    ZqElement j = curve_invariants(a4, a6).j;
    ZqElement c1728 = ctx->from_int(1728);

    ZqElement m = ctx->from_uint(18) * a6 * checked_inv(a4, "a4");
    ZqElement jprime = m * j;
    ZqElement k = jprime * checked_inv(c1728 - j, "1728 - j");

    ZqElement phix = phi.eval(ModPolyMod::Part::DX, jt, j);
    ZqElement phiy = phi.eval(ModPolyMod::Part::DY, jt, j);
    ZqElement ell_e = ctx->from_uint(ell);
    ZqElement jtprime = -jprime * phiy * checked_inv(ell_e * phix, "ell * Phi_X(jt, j)");

    ZqElement mt = jtprime * checked_inv(jt, "jt");
    ZqElement kt = jtprime * checked_inv(c1728 - jt, "1728 - jt");

    ZqElement ell2 = ell_e * ell_e;
    ZqElement ell4 = ell2 * ell2;
    ZqElement ell6 = ell4 * ell2;
    ZqElement a4p = ell4 * mt * kt * checked_inv(ctx->from_uint(48), "48");
    ZqElement a6p = ell6 * mt * mt * kt * checked_inv(ctx->from_uint(864), "864");
    return {std::move(a4p), std::move(a6p)};
}

} // namespace elkies
