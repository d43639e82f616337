#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "errors.hpp"

namespace elkies {

bool is_prime_u64(uint64_t n);

class RingCtx;
using CtxPtr = std::shared_ptr<const RingCtx>;

// Element of Z_q at the fixed precision of its context, i.e. a vector of n
// residues mod p^mu in the power basis of the defining polynomial.  With
// mu = 1 this is an element of F_q.
class ZqElement {
  public:
    ZqElement() = default;
    ZqElement(CtxPtr ctx, std::vector<uint64_t> coeffs);

    const CtxPtr& ctx() const { return ctx_; }
    const std::vector<uint64_t>& coeffs() const { return c_; }

    bool is_zero() const;
    // Nonzero after reduction mod p, i.e. invertible in the context.
    bool is_unit() const;

    // Constant with the same context, handy in generic code.
    ZqElement make_int(int64_t v) const;

    // Inverse of a unit; same as inv_unit(*this).  Part of the generic field
    // interface shared with the oracle's extension towers.
    ZqElement inv() const;

    friend bool operator==(const ZqElement& a, const ZqElement& b);
    friend bool operator!=(const ZqElement& a, const ZqElement& b) { return !(a == b); }

  private:
    CtxPtr ctx_;
    std::vector<uint64_t> c_; // size n, each in [0, p^mu)
};

// mu = 1 context elements; alias records intent in signatures.
using FqElement = ZqElement;

class RingCtx : public std::enable_shared_from_this<RingCtx> {
  public:
    // Deterministic context creation: for n > 1 the defining polynomial is the
    // first monic irreducible of degree n found from an mt19937_64 stream
    // seeded with `seed`, lifted with zero higher digits.
    static CtxPtr make(uint64_t p, unsigned n, unsigned mu, uint64_t seed = 0);
    // Same, but with a caller-chosen defining polynomial (coefficients mod p,
    // monic, irreducible over F_p; degree n entries ascending, length n+1).
    static CtxPtr make_with_modulus(uint64_t p, unsigned n, unsigned mu,
                                    std::span<const uint64_t> defining);

    uint64_t p() const { return p_; }
    unsigned n() const { return n_; }
    unsigned mu() const { return mu_; }
    uint64_t modulus() const { return pmu_; } // p^mu
    bool is_field() const { return mu_ == 1; }
    // p^k for 0 <= k <= mu.
    uint64_t p_pow(unsigned k) const { return ppow_[k]; }

    // Defining polynomial, ascending, length n+1, monic; empty when n == 1.
    const std::vector<uint64_t>& defining() const { return def_; }

    // The mu = 1 context with the same defining polynomial mod p.
    CtxPtr residue_field() const;

    bool same_as(const RingCtx& o) const;

    // Element factories.
    ZqElement zero() const;
    ZqElement one() const;
    ZqElement from_int(int64_t v) const;
    ZqElement from_uint(uint64_t v) const;
    ZqElement from_coeffs(std::span<const int64_t> coeffs) const;
    ZqElement from_ucoeffs(std::span<const uint64_t> coeffs) const;
    // Element with index e in the canonical enumeration (base-p^mu digits).
    ZqElement from_index(uint64_t e) const;

    // Scalar helpers (mod p^mu).
    uint64_t add_u(uint64_t a, uint64_t b) const;
    uint64_t sub_u(uint64_t a, uint64_t b) const;
    uint64_t mul_u(uint64_t a, uint64_t b) const;

  private:
    RingCtx() = default;

    uint64_t p_ = 0;
    unsigned n_ = 1;
    unsigned mu_ = 1;
    uint64_t pmu_ = 0;
    std::vector<uint64_t> ppow_;
    std::vector<uint64_t> def_;
    CtxPtr residue_; // null when mu == 1 (the context is its own residue field)

    friend ZqElement operator*(const ZqElement&, const ZqElement&);
};

void ensure_same_ctx(const ZqElement& a, const ZqElement& b);

ZqElement operator+(const ZqElement& a, const ZqElement& b);
ZqElement operator-(const ZqElement& a, const ZqElement& b);
ZqElement operator-(const ZqElement& a);
ZqElement operator*(const ZqElement& a, const ZqElement& b);

// a^-1 for units (a nonzero mod p); throws NonUnit otherwise.
ZqElement inv_unit(const ZqElement& a);

// Exact division by p^v on representatives.  The top v p-adic digits of the
// result are unspecified under the fixed-modulus convention; callers rely on
// the precision budget to never read them.  Throws NotDivisible if some
// representative is not divisible by p^v.
ZqElement exact_div_pow_p(const ZqElement& a, unsigned v);

// Coefficientwise reduction into the residue field context.
FqElement reduce_mod_p(const ZqElement& a);

// Minimal lift (digits above the first are zero) into a mu > 1 context with
// the same p, n.
ZqElement lift_minimal(const FqElement& a, const CtxPtr& target);

// Square root in F_q; returns the root with the smaller canonical encoding.
// Throws NotASquare.  Requires a field context.
FqElement fq_sqrt(const FqElement& a);

// a^e with small exponent.
ZqElement pow_u64(const ZqElement& a, uint64_t e);

// Quadratic Newton lift of a simple root r0 of f (coefficients ascending,
// over the target context) to precision target_mu <= ctx->mu().
// Throws SingularRoot when f'(r0) is not a unit.
ZqElement hensel_lift_root(std::span<const ZqElement> f, const FqElement& r0, unsigned target_mu);

// True if a's canonical integer encoding (base p^mu digits, most significant
// last) is smaller than b's.
bool canonical_less(const ZqElement& a, const ZqElement& b);

// Count of exact divisions by a positive power of p attempted since the last
// reset; used to observe that large-characteristic runs never divide by p.
uint64_t pdiv_counter();
void pdiv_counter_reset();

inline ZqElement ZqElement::inv() const { return inv_unit(*this); }

} // namespace elkies
