#pragma once

#include <optional>
#include <span>
#include <vector>

#include "modpoly.hpp"
#include "ode.hpp"
#include "oracle.hpp"
#include "pade.hpp"
#include "precision.hpp"

namespace elkies {

enum class RootChoice { First, Second, Both };

struct ElkiesResult {
    Poly kernel_poly;          // monic over F_q, degree (ell - 1)/2
    FqElement jtilde_residue;  // the root of Phi_ell(X, j) this kernel came from
    ZqElement isogenous_a4;    // at precision mu
    ZqElement isogenous_a6;
    unsigned mu_used = 1;
    int root_index = 0; // 0 = canonically smaller root
    bool verified = false;
    KernelReport verification;
};

struct PipelineOptions {
    RootChoice root_choice = RootChoice::First;
    bool verify = true;
    uint64_t ctx_seed = 0;
    // Optional user-chosen defining polynomial mod p (ascending, monic,
    // length n+1); the deterministic generator is used when empty.
    std::vector<uint64_t> modulus;
};

// End-to-end Elkies polynomial computation: precision planning, arbitrary
// lift, root finding and lifting, isogenous curve, ODE solve, odd-part
// extraction, reduction, Pade reconstruction, reversal, square root and
// verification.  Returns one result, or two in Both mode.
std::vector<ElkiesResult> compute_elkies_poly(uint64_t p, unsigned n, std::span<const int64_t> a4,
                                              std::span<const int64_t> a6, uint64_t ell,
                                              const ModPolyDb& db, const PipelineOptions& opts = {});

// Minimal lift of the curve coefficients into the working context.
std::pair<ZqElement, ZqElement> lift_curve(const FqElement& a4, const FqElement& a6,
                                           const CtxPtr& ctx);

// Odd part t_i = s_{2i+1}; checks that every even-degree coefficient is zero
// and throws OddnessViolated otherwise.
Series extract_odd(const Series& s);

} // namespace elkies
