#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "elkies/ode.hpp"

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

// the worked instance over Z/5^6: G = 1/(4x^6 + x^4 + 1) mod x^43,
// H = -3934 z^6 - 7329 z^4 + 1
Series paper_g(const CtxPtr& z56) {
    return inv_trunc(S(z56, {1, 0, 0, 0, 1, 0, 4}, 43), 43);
}

Poly paper_h(const CtxPtr& z56) { return P(z56, {1, 0, 0, 0, -7329, 0, -3934}); }

} // namespace

TEST_CASE("initialization") {
    CtxPtr f5 = RingCtx::make(5, 1, 1);

    // gamma = (G'(0) + H'(alpha) beta^3) / (4 beta)
    OdeState st = ode_init(f5->zero(), f5->one(), S(f5, {1, 4}, 8), P(f5, {1}));
    CHECK(st.d == 2);
    CHECK(st.s == S(f5, {0, 1, 1}, 3));
    CHECK(st.u == S(f5, {1}, 1));
    CHECK(st.v == S(f5, {1}, 1));
    CHECK(st.j == S(f5, {1}, 1));

    // both derivative terms vanish for the isogeny shapes
    CtxPtr z56 = RingCtx::make(5, 1, 6);
    OdeState st2 = ode_init(z56->zero(), z56->one(), paper_g(z56), paper_h(z56));
    CHECK(st2.s == S(z56, {0, 1, 0}, 3));

    CHECK_THROWS_AS(ode_init(f5->zero(), f5->one(), S(f5, {1}, 4), P(f5, {2})), Error);
    CHECK_THROWS_AS(ode_init(f5->zero(), f5->from_uint(2), S(f5, {1}, 4), P(f5, {1})), Error);
}

TEST_CASE("trivial solutions") {
    CtxPtr f7 = RingCtx::make(7, 1, 1);
    // S'^2 = 1, S(0) = 0, S'(0) = 1 has the exact solution S = x
    Series s = solve_ode(S(f7, {1}, 7), P(f7, {1}), f7->zero(), f7->one(), 7);
    CHECK(s == S(f7, {0, 1}, 7));

    // mu = 3 returns the initialization, the loop never runs
    Series s3 = solve_ode(S(f7, {1, 4}, 8), P(f7, {1}), f7->zero(), f7->one(), 3);
    CHECK(s3 == S(f7, {0, 1, 1}, 3));
    // mu < 3 returns its truncation
    Series s2 = solve_ode(S(f7, {1, 4}, 8), P(f7, {1}), f7->zero(), f7->one(), 2);
    CHECK(s2 == S(f7, {0, 1}, 2));
}

TEST_CASE("worked p-adic instance") {
    CtxPtr z56 = RingCtx::make(5, 1, 6);
    Series g = paper_g(z56);

    // the printed coefficients of G-bar, exact mod 5^6
    std::pair<int, int64_t> gexp[] = {{0, 1},      {4, -1},    {6, -4},    {8, 1},    {10, 8},
                                      {12, 15},    {14, -12},  {16, -47},  {18, -48}, {20, 95},
                                      {22, 236},   {24, 97},   {26, -616}, {28, -1041},
                                      {30, 228},   {32, 3505}, {34, 3936}, {36, -4417},
                                      {38, -2331}, {40, 4298}, {42, 4374}};
    Series gref = Series::zero(z56, 43);
    for (auto [deg, val] : gexp) gref.at(deg) = z56->from_int(val);
    CHECK(g == gref);

    Series s = solve_ode(g, paper_h(z56), z56->zero(), z56->one(), 44);
    REQUIRE(s.trunc() == 44);

    // printed coefficients of S-bar, each checked at its printed precision 5^k
    struct Row {
        int deg;
        int64_t val;
        unsigned k;
    };
    Row rows[] = {{1, 1, 6},    {3, 0, 6},    {5, -733, 5},  {7, 1058, 5}, {9, -1494, 5},
                  {11, 211, 5}, {13, -611, 5}, {15, -161, 4}, {17, 4, 4},   {19, 293, 4},
                  {21, 125, 4}, {23, 192, 4},  {25, -1, 2},   {27, -7, 2},  {29, -10, 2},
                  {35, -1, 1},  {37, 8, 2},    {39, -1, 1},   {41, 2, 1},   {43, -2, 1}};
    for (const Row& r : rows) {
        ZqElement diff = s[r.deg] - z56->from_int(r.val);
        uint64_t pk = z56->p_pow(r.k);
        INFO("degree ", r.deg);
        CHECK(diff.coeffs()[0] % pk == 0);
    }

    // every even coefficient vanishes identically
    for (size_t i = 0; i < s.trunc(); i += 2) CHECK(s[i].is_zero());

    // residual reduced mod 5 vanishes
    Series res = ode_residual(s, g, paper_h(z56));
    for (size_t i = 0; i < res.trunc(); ++i) CHECK(reduce_mod_p(res[i]).is_zero());

    // determinism
    CHECK(solve_ode(g, paper_h(z56), z56->zero(), z56->one(), 44) == s);
}

TEST_CASE("residual detects a non-solution") {
    CtxPtr f5 = RingCtx::make(5, 1, 1);
    Series res = ode_residual(S(f5, {0, 1}, 4), S(f5, {1, 1}, 4), P(f5, {1}));
    CHECK(!res[1].is_zero());
    Series res0 = ode_residual(S(f5, {0, 1}, 4), S(f5, {1}, 4), P(f5, {1}));
    for (size_t i = 0; i < res0.trunc(); ++i) CHECK(res0[i].is_zero());
}

TEST_CASE("residual property over prime fields") {
    std::mt19937_64 rng(2024);
    CtxPtr f = RingCtx::make(1009, 1, 1);
    for (int rep = 0; rep < 100; ++rep) {
        size_t mu = 5 + rng() % 36;
        std::vector<ZqElement> gc{f->one()};
        for (size_t i = 1; i < mu; ++i) gc.push_back(f->from_uint(rng() % 1009));
        Series g(f, gc);
        std::vector<ZqElement> hc(7, f->zero());
        hc[0] = f->one();
        for (size_t k = 2; k <= 6; k += 2) hc[k] = f->from_uint(rng() % 1009);
        Poly h(f, hc);

        Series s = solve_ode(g, h, f->zero(), f->one(), mu);
        Series res = ode_residual(s, g, h);
        REQUIRE(res.trunc() == mu - 2);
        INFO("mu = ", mu, " rep = ", rep);
        for (size_t i = 0; i < res.trunc(); ++i) CHECK(res[i].is_zero());
    }
}

TEST_CASE("odd symmetry with even data") {
    std::mt19937_64 rng(99);
    CtxPtr f = RingCtx::make(521, 1, 1);
    for (int rep = 0; rep < 25; ++rep) {
        size_t mu = 6 + rng() % 30;
        std::vector<ZqElement> gc(mu, f->zero());
        gc[0] = f->one();
        for (size_t i = 2; i < mu; i += 2) gc[i] = f->from_uint(rng() % 521);
        Series g(f, gc);
        std::vector<ZqElement> hc(7, f->zero());
        hc[0] = f->one();
        for (size_t k = 2; k <= 6; k += 2) hc[k] = f->from_uint(rng() % 521);
        Poly h(f, hc);

        Series s = solve_ode(g, h, f->zero(), f->one(), mu);
        for (size_t i = 0; i < s.trunc(); i += 2) CHECK(s[i].is_zero());
    }
}
