#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "series.hpp"

namespace elkies {

// Classical modular polynomial Phi_ell with exact integer coefficients,
// stored symmetrically: one entry per pair i >= j, meaning
// c * (X^i Y^j + X^j Y^i) for i != j and c * X^i Y^i on the diagonal.
class ModPoly {
  public:
    using Key = std::pair<unsigned, unsigned>;

    static ModPoly load(const std::string& path, uint64_t ell);
    static ModPoly parse(std::istream& in, uint64_t ell, const std::string& what);

    uint64_t ell() const { return ell_; }
    const std::map<Key, mpz_class>& terms() const { return terms_; }
    // Coefficient of X^i Y^j (symmetric lookup), zero when absent.
    const mpz_class& coeff(unsigned i, unsigned j) const;

  private:
    uint64_t ell_ = 0;
    std::map<Key, mpz_class> terms_;
    static const mpz_class zero_;
};

// Phi_ell reduced into a context: a dense symmetric grid of scalar residues.
class ModPolyMod {
  public:
    enum class Part { Value, DX, DY };

    ModPolyMod(const ModPoly& phi, CtxPtr ctx);

    uint64_t ell() const { return ell_; }
    const CtxPtr& ctx() const { return ctx_; }

    ZqElement eval(Part part, const ZqElement& x0, const ZqElement& y0) const;
    // Phi(X, y0) as a univariate polynomial in X.
    Poly univariate_in_x(const ZqElement& y0) const;

  private:
    uint64_t ell_;
    CtxPtr ctx_;
    std::vector<std::vector<uint64_t>> grid_; // (ell+2) x (ell+2) scalar residues
};

// Directory of phi<ell>.txt files, loaded once and cached.
class ModPolyDb {
  public:
    explicit ModPolyDb(std::string dir) : dir_(std::move(dir)) {}

    const std::string& dir() const { return dir_; }
    std::string path_for(uint64_t ell) const;
    bool has(uint64_t ell) const;
    std::shared_ptr<const ModPoly> load(uint64_t ell) const;

  private:
    std::string dir_;
    mutable std::map<uint64_t, std::shared_ptr<const ModPoly>> cache_;
};

struct CurveInvariants {
    ZqElement delta;
    ZqElement j;
};

// delta = -16(4 a4^3 + 27 a6^2), j = -12^3 (4 a4)^3 / delta.
// Throws SingularCurve when delta is not a unit.
CurveInvariants curve_invariants(const ZqElement& a4, const ZqElement& a6);

struct ElkiesRoots {
    FqElement j1; // canonically smaller
    FqElement j2;
};

// Roots of Phi_ell(X, jE) over F_q via gcd with X^q - X.  Throws SpecialJ for
// jE in {0, 1728}, AtkinPrime when there is no rational root, DoubleRoot when
// the rational root is unique (degenerate for this pipeline).
ElkiesRoots elkies_roots(const ModPolyMod& phi, const FqElement& j_e);

// Normalized Weierstrass coefficients of the ell-isogenous curve with
// j-invariant jt (already lifted to the working precision).
std::pair<ZqElement, ZqElement> isogenous_curve(const ZqElement& a4, const ZqElement& a6,
                                                const ZqElement& jt, const ModPolyMod& phi,
                                                uint64_t ell);

} // namespace elkies
