#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "ring.hpp"

namespace elkies {

// Dense truncated power series: coefficients for degrees 0..trunc()-1, all in
// one context.  Truncation order equals the coefficient count.
class Series {
  public:
    Series() = default;
    Series(CtxPtr ctx, std::vector<ZqElement> coeffs);

    static Series zero(const CtxPtr& ctx, size_t m);
    static Series from_ints(const CtxPtr& ctx, std::span<const int64_t> coeffs, size_t m);

    const CtxPtr& ctx() const { return ctx_; }
    size_t trunc() const { return c_.size(); }
    const ZqElement& operator[](size_t i) const { return c_[i]; }
    ZqElement& at(size_t i) { return c_[i]; }
    const std::vector<ZqElement>& coeffs() const { return c_; }

    // Coefficient at degree i, zero beyond the truncation order.
    ZqElement coeff_or_zero(size_t i) const;

    // Copy truncated or zero-padded to order m.
    Series resized(size_t m) const;

    friend bool operator==(const Series& a, const Series& b);

  private:
    CtxPtr ctx_;
    std::vector<ZqElement> c_;
};

// Dense univariate polynomial, trailing zeros trimmed (zero poly is empty).
class Poly {
  public:
    Poly() = default;
    Poly(CtxPtr ctx, std::vector<ZqElement> coeffs);

    static Poly zero(const CtxPtr& ctx);
    static Poly from_ints(const CtxPtr& ctx, std::span<const int64_t> coeffs);

    const CtxPtr& ctx() const { return ctx_; }
    bool is_zero() const { return c_.empty(); }
    // Degree, -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }
    const ZqElement& operator[](size_t i) const { return c_[i]; }
    const std::vector<ZqElement>& coeffs() const { return c_; }
    ZqElement coeff_or_zero(size_t i) const;
    const ZqElement& leading() const { return c_.back(); }
    bool is_monic() const;

    friend bool operator==(const Poly& a, const Poly& b);

  private:
    CtxPtr ctx_;
    std::vector<ZqElement> c_; // ascending
};

// ---- series operations ----

// Polynomial-style sum/difference (missing coefficients treated as zero);
// result order is the larger operand order.
Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series scale(const Series& a, const ZqElement& k);

// Product mod x^m.
Series mul_trunc(const Series& a, const Series& b, size_t m);

// Inverse mod x^m by Newton doubling; the constant term must be a unit.
Series inv_trunc(const Series& a, size_t m);

// Termwise k*a_k shifted down; truncation order decreases by one.
Series derivative(const Series& a);

// Antiderivative with zero constant term; truncation order increases by one.
// Divisions by degree are split into an exact division by p^PDiv(p, r) and a
// unit inverse; this is the only operation of the engine that divides by p.
Series integrate(const Series& a);

// H(S) mod x^m for H supported on degrees {0, 2, 4, 6}; three truncated
// multiplications via Q = S^2.
Series compose_even_poly(const Poly& h, const Series& s, size_t m);

// ---- polynomial operations ----

Poly operator+(const Poly& a, const Poly& b);
Poly operator-(const Poly& a, const Poly& b);
Poly operator*(const Poly& a, const Poly& b);
Poly scale(const Poly& a, const ZqElement& k);
ZqElement poly_eval(const Poly& f, const ZqElement& x);
Poly poly_derivative(const Poly& f);

// Quotient and remainder; the divisor's leading coefficient must be a unit.
std::pair<Poly, Poly> poly_divrem(const Poly& a, const Poly& b);
// Monic gcd over a field context.
Poly poly_gcd(Poly a, Poly b);
Poly poly_make_monic(const Poly& a);
// (base^e) mod f, square-and-multiply with the exponent given as a bit span
// (most significant first).
Poly poly_powmod_bits(const Poly& base, const std::vector<bool>& ebits, const Poly& f);
Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f);

Poly poly_from_series(const Series& s);
Series series_from_poly(const Poly& f, size_t m);

// Exact square root of a monic even-degree polynomial over a field context,
// by Newton iteration on the reversed series; throws NotAPerfectSquare if the
// square of the candidate does not reproduce the input.
Poly poly_sqrt_monic(const Poly& d);

// Largest k with p^k | r.
unsigned pdiv_u64(uint64_t p, uint64_t r);

} // namespace elkies
