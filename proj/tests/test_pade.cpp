#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "elkies/pade.hpp"

using namespace elkies;

namespace {

Poly P(const CtxPtr& ctx, std::initializer_list<int64_t> c) {
    std::vector<int64_t> v(c);
    return Poly::from_ints(ctx, v);
}

} // namespace

TEST_CASE("geometric series") {
    CtxPtr f5 = RingCtx::make(5, 1, 1);
    // (1 + x)/(1 - x) = 1 + 2x + 2x^2 + ...
    Series r = mul_trunc(series_from_poly(P(f5, {1, 1}), 3), inv_trunc(series_from_poly(P(f5, {1, -1}), 3), 3), 3);
    PadeResult pr = pade(r, 3, 1, 1);
    CHECK(pr.num == P(f5, {1, 1}));
    CHECK(pr.den == P(f5, {1, 4}));
    CHECK(pr.valid);
}

TEST_CASE("constant series") {
    CtxPtr f5 = RingCtx::make(5, 1, 1);
    Series one = series_from_poly(P(f5, {1}), 1);
    PadeResult pr = pade(one, 1, 0, 0);
    CHECK(pr.num == P(f5, {1}));
    CHECK(pr.den == P(f5, {1}));
}

TEST_CASE("worked reconstruction") {
    CtxPtr f5 = RingCtx::make(5, 1, 1);
    // R as printed, mod x^22
    Series r = Series::from_ints(
        f5, std::vector<int64_t>{1, 0, 1, 4, 0, 4, 4, 3, 2, 0, 2, 2, 3, 1, 3, 2, 1, 0, 3, 2, 2, 0},
        22);
    PadeResult pr = pade(r, 22, 11, 10);
    CHECK(pr.den == P(f5, {1, 2, 1, 2, 3, 3, 3, 1, 1, 1, 1}));
    CHECK(pr.num == P(f5, {1, 2, 2, 3, 2, 3, 1, 1, 1, 1, 0, 3}));

    Poly d = reverse_poly(pr.den, 10);
    CHECK(d == P(f5, {1, 1, 1, 1, 3, 3, 3, 2, 1, 2, 1}));
    CHECK(d.is_monic());
}

TEST_CASE("reversal") {
    CtxPtr f5 = RingCtx::make(5, 1, 1);
    CHECK(reverse_poly(P(f5, {1}), 3) == P(f5, {0, 0, 0, 1}));
    Poly p = P(f5, {2, 0, 3, 1});
    CHECK(reverse_poly(reverse_poly(p, 3), 3) == p); // involution when p(0) != 0
    CHECK_THROWS_AS(reverse_poly(P(f5, {1, 1, 1, 1, 1}), 3), Error);
}

TEST_CASE("random rational series recovery") {
    std::mt19937_64 rng(31);
    for (uint64_t p : {5ull, 7ull, 101ull}) {
        CtxPtr f = RingCtx::make(p, 1, 1);
        for (int rep = 0; rep < 40; ++rep) {
            size_t dn = rng() % 6;
            size_t dd = rng() % 6;
            std::vector<ZqElement> nc, dc;
            for (size_t i = 0; i <= dn; ++i) nc.push_back(f->from_uint(rng() % p));
            dc.push_back(f->one());
            for (size_t i = 1; i <= dd; ++i) dc.push_back(f->from_uint(rng() % p));
            Poly num(f, nc), den(f, dc);
            if (num.is_zero()) continue;
            // exact degrees so the recovery is unique after normalization
            if (num.degree() != static_cast<long>(dn) || den.degree() != static_cast<long>(dd))
                continue;
            if (poly_gcd(num, den).degree() != 0) continue;

            size_t order = dn + dd + 1;
            Series r = mul_trunc(series_from_poly(num, order),
                                 inv_trunc(series_from_poly(den, order), order), order);
            PadeResult pr = pade(r, order, dn, dd);
            CHECK(pr.num == num);
            CHECK(pr.den == den);
        }
    }
}

TEST_CASE("failure surfaces as an error") {
    CtxPtr f5 = RingCtx::make(5, 1, 1);
    // x has no (0,0) Pade form with unit denominator at order 2
    Series r = series_from_poly(P(f5, {0, 1}), 2);
    CHECK_THROWS_AS(pade(r, 2, 0, 0), Error);
}
