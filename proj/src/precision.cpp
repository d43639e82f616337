#include "elkies/precision.hpp"

#include <algorithm>

namespace elkies {

unsigned pdiv(uint64_t p, uint64_t r) {
    if (r < 1) raise(ErrorCode::UsageError, "pdiv requires r >= 1");
    unsigned k = 0;
    while (r % p == 0) {
        r /= p;
        ++k;
    }
    return k;
}

unsigned loss_levels(uint64_t ell) {
    // largest i >= 0 with 2^i < 4*ell - 1, evaluated exactly
    uint64_t bound = 4 * ell - 1;
    unsigned i = 0;
    while ((uint64_t{1} << (i + 1)) < bound) ++i;
    return i;
}

unsigned lploss(uint64_t p, uint64_t ell, unsigned i) {
    if (i < 1 || (uint64_t{1} << i) >= 4 * ell - 1)
        raise(ErrorCode::UsageError, "lploss level out of range");
    uint64_t lo = (uint64_t{1} << i) + 1;
    uint64_t hi = std::min(uint64_t{1} << (i + 1), 4 * ell - 1);
    unsigned best = 0;
    for (uint64_t r = lo; r <= hi; ++r) best = std::max(best, pdiv(p, r));
    return best;
}

unsigned lploss_odd(uint64_t p, uint64_t ell, unsigned i) {
    if (i < 1 || (uint64_t{1} << i) >= 4 * ell - 1)
        raise(ErrorCode::UsageError, "lploss level out of range");
    uint64_t lo = uint64_t{1} << (i - 1);
    uint64_t hi = std::min((uint64_t{1} << i) - 1, 2 * ell - 1);
    unsigned best = 0;
    for (uint64_t r = lo; r <= hi; ++r) best = std::max(best, pdiv(p, 2 * r + 1));
    return best;
}

unsigned loss(uint64_t p, uint64_t ell) {
    unsigned total = 0;
    for (unsigned i = 1; i <= loss_levels(ell); ++i) total += lploss(p, ell, i);
    return total;
}

unsigned required_precision(uint64_t p, uint64_t ell) { return loss(p, ell) + 1; }

PrecisionReport precision_report(uint64_t p, uint64_t ell) {
    PrecisionReport rep;
    rep.p = p;
    rep.ell = ell;
    for (unsigned i = 1; i <= loss_levels(ell); ++i) {
        rep.per_level.push_back(lploss(p, ell, i));
        rep.loss += rep.per_level.back();
        rep.odd_variant_loss += lploss_odd(p, ell, i);
    }
    rep.required_mu = rep.loss + 1;
    return rep;
}

std::vector<PrecisionRow> precision_table(uint64_t p, const std::vector<uint64_t>& ells) {
    std::vector<PrecisionRow> rows;
    rows.reserve(ells.size());
    for (uint64_t ell : ells) rows.push_back({ell, required_precision(p, ell)});
    return rows;
}

} // namespace elkies
