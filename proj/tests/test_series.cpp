#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <random>

#include "elkies/series.hpp"

using namespace elkies;

namespace {

Series S(const CtxPtr& ctx, std::initializer_list<int64_t> c, size_t m) {
    std::vector<int64_t> v(c);
    return Series::from_ints(ctx, v, m);
}

Poly P(const CtxPtr& ctx, std::initializer_list<int64_t> c) {
    std::vector<int64_t> v(c);
    return Poly::from_ints(ctx, v);
}

} // namespace

TEST_CASE("truncated multiplication") {
    CtxPtr f5 = RingCtx::make(5, 1, 1);
    CHECK(mul_trunc(S(f5, {1, 1}, 2), S(f5, {1, -1}, 2), 3) == S(f5, {1, 0, -1}, 3));
    CHECK(mul_trunc(S(f5, {0, 1}, 2), S(f5, {0, 1}, 2), 2) == S(f5, {0, 0}, 2));
    CHECK(mul_trunc(S(f5, {1, 2, 3}, 3), S(f5, {4, 1}, 2), 3) == S(f5, {4, 4, 4}, 3));

    CtxPtr f7 = RingCtx::make(7, 1, 1);
    CHECK_THROWS_AS(mul_trunc(S(f5, {1}, 1), S(f7, {1}, 1), 1), Error);

    // Karatsuba path agrees with schoolbook on long random series
    CtxPtr z = RingCtx::make(5, 1, 6);
    std::mt19937_64 rng(3);
    for (int rep = 0; rep < 5; ++rep) {
        size_t n = 100 + rng() % 100;
        std::vector<ZqElement> ac, bc;
        for (size_t i = 0; i < n; ++i) {
            ac.push_back(z->from_uint(rng() % 15625));
            bc.push_back(z->from_uint(rng() % 15625));
        }
        Series a(z, ac), b(z, bc);
        Series prod = mul_trunc(a, b, 2 * n);
        // quadratic reference
        std::vector<ZqElement> ref(2 * n, z->zero());
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j)
                if (i + j < 2 * n) ref[i + j] = ref[i + j] + ac[i] * bc[j];
        CHECK(prod == Series(z, ref));
    }
}

TEST_CASE("series inversion") {
    CtxPtr z56 = RingCtx::make(5, 1, 6);
    // 1/(4x^6 + x^4 + 1) mod x^13
    Series a = S(z56, {1, 0, 0, 0, 1, 0, 4}, 13);
    Series inv = inv_trunc(a, 13);
    CHECK(inv == S(z56, {1, 0, 0, 0, -1, 0, -4, 0, 1, 0, 8, 0, 15}, 13));
    CHECK(mul_trunc(a, inv, 13) == S(z56, {1}, 13));

    CHECK(inv_trunc(S(z56, {1}, 1), 4) == S(z56, {1}, 4));
    CtxPtr f5 = RingCtx::make(5, 1, 1);
    CHECK(inv_trunc(S(f5, {2}, 1), 4) == S(f5, {3}, 4));
    CHECK_THROWS_AS(inv_trunc(S(f5, {0, 1}, 2), 3), Error);

    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        size_t m = 1 + rng() % 40;
        std::vector<ZqElement> c;
        for (size_t i = 0; i < m; ++i) c.push_back(z56->from_uint(rng() % 15625));
        if (!c[0].is_unit()) c[0] = z56->one();
        Series s(z56, c);
        CHECK(mul_trunc(s, inv_trunc(s, m), m) == S(z56, {1}, m));
    }
}

TEST_CASE("derivative and integration") {
    CtxPtr z56 = RingCtx::make(5, 1, 6);
    CHECK(derivative(S(z56, {0, 1, 0, 1}, 4)) == S(z56, {1, 0, 3}, 3));
    CHECK(derivative(S(z56, {7}, 1)).trunc() == 0);
    // derivative of x^5 has the non-unit coefficient 5; no division happens
    CHECK(derivative(S(z56, {0, 0, 0, 0, 0, 1}, 6)) == S(z56, {0, 0, 0, 0, 5}, 5));

    CtxPtr f7 = RingCtx::make(7, 1, 1);
    CHECK(integrate(S(f7, {1, 2}, 2)) == S(f7, {0, 1, 1}, 3));

    CHECK(integrate(S(z56, {0, 0, 0, 0, 250}, 5)) == S(z56, {0, 0, 0, 0, 0, 50}, 6));
    CHECK_THROWS_AS(integrate(S(z56, {0, 0, 0, 0, 7}, 5)), Error);

    // derivative o integrate = identity
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 20; ++rep) {
        size_t m = 1 + rng() % 30;
        std::vector<ZqElement> c;
        for (size_t i = 0; i < m; ++i) c.push_back(z56->from_uint(rng() % 15625));
        Series s(z56, c);
        bool divisible = true;
        for (size_t r = 1; r <= m && divisible; ++r) {
            unsigned v = pdiv_u64(5, r);
            if (v && c[r - 1].coeffs()[0] % z56->p_pow(v) != 0) divisible = false;
        }
        if (!divisible) continue;
        CHECK(derivative(integrate(s)) == s);
    }
}

TEST_CASE("even-polynomial composition") {
    CtxPtr f5 = RingCtx::make(5, 1, 1);
    CHECK(compose_even_poly(P(f5, {1}), S(f5, {0, 1}, 4), 4) == S(f5, {1}, 4));
    CHECK(compose_even_poly(P(f5, {0, 0, 1}), S(f5, {0, 1, 1}, 3), 3) == S(f5, {0, 0, 1}, 3));
    CHECK(compose_even_poly(P(f5, {1, 0, 0, 0, 1}), S(f5, {0, 1}, 6), 6) ==
          S(f5, {1, 0, 0, 0, 1}, 6));
    CHECK_THROWS_AS(compose_even_poly(P(f5, {1, 1}), S(f5, {0, 1}, 3), 3), Error);

    // agreement with naive Horner composition on random small inputs
    CtxPtr z = RingCtx::make(7, 1, 4);
    std::mt19937_64 rng(11);
    for (int rep = 0; rep < 20; ++rep) {
        size_t m = 2 + rng() % 14;
        std::vector<ZqElement> sc;
        for (size_t i = 0; i < m; ++i) sc.push_back(z->from_uint(rng() % z->modulus()));
        Series s(z, sc);
        std::vector<ZqElement> hc(7, z->zero());
        for (size_t k = 0; k <= 6; k += 2) hc[k] = z->from_uint(rng() % z->modulus());
        Poly h(z, hc);

        Series naive(z, {z->zero()});
        for (size_t k = h.coeffs().size(); k-- > 0;) {
            naive = mul_trunc(naive, s, m);
            naive = naive + Series(z, {h[k]});
        }
        CHECK(compose_even_poly(h, s, m) == naive.resized(m));
    }
}

TEST_CASE("polynomial division and gcd") {
    CtxPtr f5 = RingCtx::make(5, 1, 1);
    Poly a = P(f5, {2, 0, 1, 1});    // x^3 + x^2 + 2
    Poly b = P(f5, {1, 1});          // x + 1
    auto [q, r] = poly_divrem(a, b);
    CHECK(q * b + r == a);
    CHECK(r.degree() < b.degree());

    Poly g = poly_gcd(P(f5, {1, 1}) * P(f5, {2, 1}), P(f5, {1, 1}) * P(f5, {3, 1}));
    CHECK(g == P(f5, {1, 1}));
}

TEST_CASE("monic polynomial square root") {
    CtxPtr f5 = RingCtx::make(5, 1, 1);
    CHECK(poly_sqrt_monic(P(f5, {1, 2, 1})) == P(f5, {1, 1}));

    // the worked kernel example: sqrt of D
    Poly d = P(f5, {1, 1, 1, 1, 3, 3, 3, 2, 1, 2, 1});
    CHECK(poly_sqrt_monic(d) == P(f5, {1, 3, 1, 0, 1, 1}));

    CHECK_THROWS_AS(poly_sqrt_monic(P(f5, {1, 1, 1})), Error);

    // roundtrip on random monic squares over several F_p
    for (uint64_t p : {5ull, 7ull, 11ull, 101ull}) {
        CtxPtr f = RingCtx::make(p, 1, 1);
        std::mt19937_64 rng(p);
        for (int rep = 0; rep < 20; ++rep) {
            size_t deg = 1 + rng() % 12;
            std::vector<ZqElement> c;
            for (size_t i = 0; i < deg; ++i) c.push_back(f->from_uint(rng() % p));
            c.push_back(f->one());
            Poly g(f, c);
            CHECK(poly_sqrt_monic(g * g) == g);
        }
    }
}
