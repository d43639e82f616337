#pragma once

#include "series.hpp"

namespace elkies {

// Newton-doubling state for S'^2 = G * (H o S).  Invariants, each modulo the
// x-order tracked for the member: u * S' = 1, v * j = 1, v^2 = H o S.
struct OdeState {
    size_t d = 2;
    Series u; // inverse of S' at the previous half-order
    Series v; // square root of H o S
    Series j; // inverse of v
    Series s; // current solution
};

// Initial state: d = 2, U = 1/beta, V = J = 1,
// S = alpha + beta*x + [(G'(0) + H'(alpha)*beta^3) / (4*beta)] * x^2.
// Requires H(alpha) = 1 and beta^2 = G(0) with beta a unit.
OdeState ode_init(const ZqElement& alpha, const ZqElement& beta, const Series& g, const Poly& h);

// One doubling iteration: updates U, V, J mod x^d and then S mod
// x^{min(2d+1, mu)}, in that order, and doubles d.
void ode_step(OdeState& st, const Series& g, const Poly& h, size_t mu);

// Solution of S'^2 = G * (H o S), S(0) = alpha, S'(0) = beta, modulo x^mu.
// For mu < 3 returns the truncated initialization.
Series solve_ode(const Series& g, const Poly& h, const ZqElement& alpha, const ZqElement& beta,
                 size_t mu);

// S'^2 - G * (H o S) truncated at order trunc(S) - 2.
Series ode_residual(const Series& s, const Series& g, const Poly& h);

} // namespace elkies
