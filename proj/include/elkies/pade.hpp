#pragma once

#include "series.hpp"

namespace elkies {

// Rational reconstruction num/den = R mod x^order with den(0) = 1.
struct PadeResult {
    Poly num;
    Poly den;
    bool valid = false; // num = den * R mod x^order, rechecked on construction
};

// Extended Euclid on (x^order, R) stopped at the first remainder of degree
// <= deg_num; the cofactor gives den, normalized to den(0) = 1.  Throws
// ReconstructionFailed when den(0) = 0, a degree bound is violated, or the
// verification product fails.  Field context only.
PadeResult pade(const Series& r, size_t order, size_t deg_num, size_t deg_den);

// x^d * P(1/x): coefficients reversed within a window of length d + 1.
Poly reverse_poly(const Poly& p, size_t d);

} // namespace elkies
