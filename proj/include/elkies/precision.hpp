#pragma once

#include <cstdint>
#include <vector>

#include "errors.hpp"

namespace elkies {

// Worst-case p-adic digit loss of the series integrations, per doubling level
// and summed, plus the resulting precision requirement mu = loss + 1.
struct PrecisionReport {
    uint64_t p = 0;
    uint64_t ell = 0;
    std::vector<unsigned> per_level;   // LpLoss(p, ell, i) for 1 <= i < log2(4*ell-1)
    unsigned loss = 0;                 // sum of per_level
    unsigned required_mu = 1;          // loss + 1
    unsigned odd_variant_loss = 0;     // informational sum of the odd-degree variant
};

// Largest k with p^k | r; r >= 1.
unsigned pdiv(uint64_t p, uint64_t r);

// max of pdiv(p, r) over 2^i + 1 <= r <= min(2^(i+1), 4*ell - 1).
unsigned lploss(uint64_t p, uint64_t ell, unsigned i);

// Odd-degree variant: max of pdiv(p, 2r + 1) over 2^(i-1) <= r <= min(2^i - 1, 2*ell - 1).
unsigned lploss_odd(uint64_t p, uint64_t ell, unsigned i);

// Number of valid levels, i.e. the largest i with 2^i < 4*ell - 1.
unsigned loss_levels(uint64_t ell);

unsigned loss(uint64_t p, uint64_t ell);
unsigned required_precision(uint64_t p, uint64_t ell);

PrecisionReport precision_report(uint64_t p, uint64_t ell);

struct PrecisionRow {
    uint64_t ell;
    unsigned required_mu;
};

std::vector<PrecisionRow> precision_table(uint64_t p, const std::vector<uint64_t>& ells);

} // namespace elkies
