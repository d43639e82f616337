#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <sstream>

#include "elkies/modpoly.hpp"
#include "elkies/ring.hpp"

using namespace elkies;

namespace {

const char* kDataDir = ELKIES_DATA_DIR;

ModPolyDb db() { return ModPolyDb(kDataDir); }

} // namespace

TEST_CASE("loading and validation") {
    auto phi11 = db().load(11);
    CHECK(phi11->ell() == 11);
    unsigned max_i = 0;
    for (const auto& [k, c] : phi11->terms()) max_i = std::max(max_i, k.first);
    CHECK(max_i == 12);
    CHECK(phi11->coeff(12, 0) == 1);
    CHECK(phi11->coeff(0, 12) == 1); // symmetric lookup
    CHECK(phi11->coeff(12, 12) == 0);

    CHECK_THROWS_AS(db().load(9973), Error); // not bundled

    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return ModPoly::parse(in, 11, "<test>");
    };
    CHECK_THROWS_AS(parse("ell 11\n13 0 1\n"), Error);        // degree too high
    CHECK_THROWS_AS(parse("ell 11\n12 0 1\n12 0 1\n"), Error); // duplicate
    CHECK_THROWS_AS(parse("ell 11\n0 3 4\n"), Error);          // i < j
    CHECK_THROWS_AS(parse("ell 7\n8 0 1\n"), Error);           // wrong ell
    CHECK_THROWS_AS(parse("8 0 1\n"), Error);                  // missing header
    CHECK_THROWS_AS(parse("ell 11\n12 0 x\n"), Error);         // bad integer
    CHECK_THROWS_AS(parse("ell 11\n12 0 2\n"), Error);         // leading term not 1
}

TEST_CASE("bundled data satisfies the Kronecker congruence") {
    for (uint64_t ell : {5ull, 7ull, 11ull, 13ull}) {
        auto phi = db().load(ell);
        // Phi_ell == (X^ell - Y)(X - Y^ell) mod ell
        for (unsigned i = 0; i <= ell + 1; ++i) {
            for (unsigned j = 0; j <= i; ++j) {
                mpz_class r = phi->coeff(i, j) % static_cast<unsigned long>(ell);
                if (r < 0) r += static_cast<unsigned long>(ell);
                unsigned long expect = 0;
                if (i == ell + 1 && j == 0) expect = 1;
                if (i == ell && j == ell) expect = ell - 1;
                if (i == 1 && j == 1) expect = ell - 1;
                INFO("ell = ", ell, " term (", i, ", ", j, ")");
                CHECK(r == expect);
            }
        }
    }
}

TEST_CASE("curve invariants") {
    CtxPtr f5 = RingCtx::make(5, 1, 1);
    CurveInvariants inv = curve_invariants(f5->one(), f5->from_uint(4));
    CHECK(inv.delta == f5->from_uint(4));
    CHECK(inv.j == f5->from_uint(2));

    CHECK(curve_invariants(f5->zero(), f5->one()).j.is_zero());
    CHECK(curve_invariants(f5->one(), f5->zero()).j == f5->from_int(1728));

    // singular: 4a4^3 + 27a6^2 = 0 mod 5 for a4 = 3, a6 = 1: 4*27+27 = 135 = 0 mod 5
    CHECK_THROWS_AS(curve_invariants(f5->from_uint(3), f5->one()), Error);
}

TEST_CASE("evaluation and symmetry") {
    CtxPtr f101 = RingCtx::make(101, 1, 1);
    ModPolyMod phi(*db().load(5), f101);
    std::mt19937_64 rng(41);
    for (int rep = 0; rep < 30; ++rep) {
        ZqElement a = f101->from_uint(rng() % 101);
        ZqElement b = f101->from_uint(rng() % 101);
        CHECK(phi.eval(ModPolyMod::Part::Value, a, b) == phi.eval(ModPolyMod::Part::Value, b, a));
        CHECK(phi.eval(ModPolyMod::Part::DX, a, b) == phi.eval(ModPolyMod::Part::DY, b, a));
        CHECK(poly_eval(phi.univariate_in_x(b), a) == phi.eval(ModPolyMod::Part::Value, a, b));
    }
    // degree of Phi(X, j) is ell + 1
    CHECK(phi.univariate_in_x(f101->from_uint(7)).degree() == 6);
}

TEST_CASE("Elkies roots on the worked instance") {
    // 11 is ramified here (t = -3, t^2 - 4q = -11), so Phi_11(X, j) has a
    // single rational root and both slots carry it
    CtxPtr f5 = RingCtx::make(5, 1, 1);
    ModPolyMod phi11(*db().load(11), f5);
    FqElement j = curve_invariants(f5->one(), f5->from_uint(4)).j;
    ElkiesRoots roots = elkies_roots(phi11, j);
    CHECK(roots.j1 == roots.j2);
    CHECK(phi11.eval(ModPolyMod::Part::Value, roots.j1, j).is_zero());
    // simple root: dX does not vanish (Hensel precondition)
    CHECK(phi11.eval(ModPolyMod::Part::DX, roots.j1, j).is_unit());

    CHECK_THROWS_AS(elkies_roots(phi11, f5->zero()), Error);          // SpecialJ
    CHECK_THROWS_AS(elkies_roots(phi11, f5->from_int(1728)), Error);  // SpecialJ

    // determinism of root ordering
    ElkiesRoots again = elkies_roots(phi11, j);
    CHECK(again.j1 == roots.j1);
    CHECK(again.j2 == roots.j2);
}

TEST_CASE("split, Atkin and ramified instances are distinguished") {
    // over F_7 no curve is 5-Elkies: t^2 - 28 is never a square mod 5
    CtxPtr f7 = RingCtx::make(7, 1, 1);
    ModPolyMod phi5_7(*db().load(5), f7);
    int atkin = 0, split = 0;
    for (uint64_t a = 0; a < 7; ++a) {
        for (uint64_t b = 0; b < 7; ++b) {
            try {
                CurveInvariants inv = curve_invariants(f7->from_uint(a), f7->from_uint(b));
                if (inv.j.is_zero() || inv.j == f7->from_int(1728)) continue;
                elkies_roots(phi5_7, inv.j);
                ++split;
            } catch (const Error& e) {
                if (e.code() == ErrorCode::AtkinPrime) ++atkin;
            }
        }
    }
    CHECK(atkin > 0);
    CHECK(split == 0);

    // over F_11 both genuinely split and Atkin instances occur for ell = 5
    CtxPtr f11 = RingCtx::make(11, 1, 1);
    ModPolyMod phi5_11(*db().load(5), f11);
    atkin = 0;
    int distinct = 0;
    for (uint64_t a = 0; a < 11; ++a) {
        for (uint64_t b = 0; b < 11; ++b) {
            try {
                CurveInvariants inv = curve_invariants(f11->from_uint(a), f11->from_uint(b));
                if (inv.j.is_zero() || inv.j == f11->from_int(1728)) continue;
                ElkiesRoots r = elkies_roots(phi5_11, inv.j);
                if (!(r.j1 == r.j2)) {
                    ++distinct;
                    CHECK(canonical_less(r.j1, r.j2));
                    CHECK(phi5_11.eval(ModPolyMod::Part::Value, r.j1, inv.j).is_zero());
                    CHECK(phi5_11.eval(ModPolyMod::Part::Value, r.j2, inv.j).is_zero());
                }
            } catch (const Error& e) {
                if (e.code() == ErrorCode::AtkinPrime) ++atkin;
            }
        }
    }
    CHECK(atkin > 0);
    CHECK(distinct > 0);
}

TEST_CASE("isogenous curve reproduces the worked instance") {
    CtxPtr z56 = RingCtx::make(5, 1, 6);
    CtxPtr f5 = z56->residue_field();
    ZqElement a4 = z56->one(), a6 = z56->from_uint(4);
    ZqElement jbar = curve_invariants(a4, a6).j;

    ModPolyMod phi_mu(*db().load(11), z56);
    ModPolyMod phi_fq(*db().load(11), f5);
    ElkiesRoots roots = elkies_roots(phi_fq, reduce_mod_p(jbar));

    Poly f = phi_mu.univariate_in_x(jbar);
    bool matched = false;
    for (const FqElement& r : {roots.j1, roots.j2}) {
        ZqElement jt = hensel_lift_root(f.coeffs(), r, 6);
        CHECK(poly_eval(f, jt).is_zero());
        auto [a4p, a6p] = isogenous_curve(a4, a6, jt, phi_mu, 11);
        // j-invariant of the image curve reduces to jt mod p
        CHECK(reduce_mod_p(curve_invariants(a4p, a6p).j) == reduce_mod_p(jt));
        if (a4p == z56->from_int(-7329) && a6p == z56->from_int(-3934)) matched = true;
    }
    CHECK(matched);
}

TEST_CASE("normalization identity on the source curve") {
    // m k / 48 = a4 and m^2 k / 864 = a6 with m = 18 a6/a4, k = m j/(1728 - j)
    std::mt19937_64 rng(43);
    for (uint64_t p : {7ull, 101ull, 1009ull}) {
        CtxPtr f = RingCtx::make(p, 1, 1);
        for (int rep = 0; rep < 25; ++rep) {
            ZqElement a4 = f->from_uint(rng() % p);
            ZqElement a6 = f->from_uint(rng() % p);
            if (!a4.is_unit() || !a6.is_unit()) continue;
            ZqElement j;
            try {
                j = curve_invariants(a4, a6).j;
            } catch (const Error&) {
                continue;
            }
            if (j.is_zero() || j == f->from_int(1728)) continue;
            ZqElement m = f->from_uint(18) * a6 * inv_unit(a4);
            ZqElement k = m * j * inv_unit(f->from_int(1728) - j);
            CHECK(m * k * inv_unit(f->from_uint(48)) == a4);
            CHECK(m * m * k * inv_unit(f->from_uint(864)) == a6);
        }
    }
}
