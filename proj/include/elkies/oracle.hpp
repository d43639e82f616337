#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "series.hpp"

namespace elkies {

// ---------------------------------------------------------------------------
// Elliptic curve points over any type with the field interface
// (+, -, *, unary -, ==, is_zero, inv, make_int).
// ---------------------------------------------------------------------------

template <class F>
struct Curve {
    F a4;
    F a6;
};

template <class F>
struct Point {
    bool inf = true;
    F x;
    F y;

    static Point infinity() { return Point{}; }
    static Point affine(F px, F py) { return Point{false, std::move(px), std::move(py)}; }
};

template <class F>
bool operator==(const Point<F>& a, const Point<F>& b) {
    if (a.inf || b.inf) return a.inf == b.inf;
    return a.x == b.x && a.y == b.y;
}

template <class F>
bool on_curve(const Point<F>& p, const Curve<F>& e) {
    if (p.inf) return true;
    return p.y * p.y == p.x * p.x * p.x + e.a4 * p.x + e.a6;
}

// Affine point with membership check.
template <class F>
Point<F> make_point(const Curve<F>& e, F x, F y) {
    Point<F> p = Point<F>::affine(std::move(x), std::move(y));
    if (!on_curve(p, e)) raise(ErrorCode::PointNotOnCurve, "coordinates do not satisfy the curve");
    return p;
}

template <class F>
Point<F> ec_neg(const Point<F>& p) {
    if (p.inf) return p;
    return Point<F>::affine(p.x, -p.y);
}

template <class F>
Point<F> ec_add(const Point<F>& p, const Point<F>& q, const Curve<F>& e) {
    if (p.inf) return q;
    if (q.inf) return p;
    F lambda = p.x; // placeholder, overwritten below
    if (p.x == q.x) {
        if ((p.y + q.y).is_zero()) return Point<F>::infinity();
        F num = p.x * p.x * p.x.make_int(3) + e.a4;
        lambda = num * (p.y + p.y).inv();
    } else {
        lambda = (q.y - p.y) * (q.x - p.x).inv();
    }
    F x3 = lambda * lambda - p.x - q.x;
    F y3 = lambda * (p.x - x3) - p.y;
    return Point<F>::affine(std::move(x3), std::move(y3));
}

template <class F>
Point<F> ec_mul(uint64_t k, const Point<F>& p, const Curve<F>& e) {
    Point<F> acc = Point<F>::infinity();
    Point<F> base = p;
    while (k) {
        if (k & 1) acc = ec_add(acc, base, e);
        base = ec_add(base, base, e);
        k >>= 1;
    }
    return acc;
}

// ---------------------------------------------------------------------------
// Extension tower K = F[t]/(m(t)) over a field F, used to split kernel
// polynomials and host torsion points.  Elements satisfy the same field
// interface, so towers nest.
// ---------------------------------------------------------------------------

template <class F>
struct ExtCtx {
    std::vector<F> modulus; // ascending, monic, degree >= 1
    mpz_class order;        // |F|^deg
    F base_zero;
    F base_one;

    size_t deg() const { return modulus.size() - 1; }
};

template <class F>
class ExtElem {
  public:
    ExtElem() = default;
    ExtElem(std::shared_ptr<const ExtCtx<F>> k, std::vector<F> rep)
        : k_(std::move(k)), c_(std::move(rep)) {
        c_.resize(k_->deg(), k_->base_zero);
    }

    const std::shared_ptr<const ExtCtx<F>>& ext() const { return k_; }
    const std::vector<F>& rep() const { return c_; }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    ExtElem make_int(int64_t v) const {
        std::vector<F> r(k_->deg(), k_->base_zero);
        r[0] = k_->base_zero.make_int(v);
        return ExtElem(k_, std::move(r));
    }

    ExtElem inv() const;

    friend bool operator==(const ExtElem& a, const ExtElem& b) { return a.c_ == b.c_; }
    friend bool operator!=(const ExtElem& a, const ExtElem& b) { return !(a.c_ == b.c_); }

    friend ExtElem operator+(const ExtElem& a, const ExtElem& b) {
        std::vector<F> r = a.c_;
        for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] + b.c_[i];
        return ExtElem(a.k_, std::move(r));
    }
    friend ExtElem operator-(const ExtElem& a, const ExtElem& b) {
        std::vector<F> r = a.c_;
        for (size_t i = 0; i < r.size(); ++i) r[i] = r[i] - b.c_[i];
        return ExtElem(a.k_, std::move(r));
    }
    friend ExtElem operator-(const ExtElem& a) {
        std::vector<F> r;
        r.reserve(a.c_.size());
        for (const auto& v : a.c_) r.push_back(-v);
        return ExtElem(a.k_, std::move(r));
    }
    friend ExtElem operator*(const ExtElem& a, const ExtElem& b) {
        size_t n = a.k_->deg();
        const F& zero = a.k_->base_zero;
        std::vector<F> prod(2 * n - 1, zero);
        for (size_t i = 0; i < n; ++i) {
            if (a.c_[i].is_zero()) continue;
            for (size_t j = 0; j < n; ++j) {
                if (b.c_[j].is_zero()) continue;
                prod[i + j] = prod[i + j] + a.c_[i] * b.c_[j];
            }
        }
        const auto& m = a.k_->modulus;
        for (size_t i = prod.size(); i-- > n;) {
            F c = prod[i];
            if (c.is_zero()) continue;
            for (size_t j = 0; j < n; ++j) prod[i - n + j] = prod[i - n + j] - c * m[j];
        }
        prod.resize(n, zero);
        return ExtElem(a.k_, std::move(prod));
    }

  private:
    std::shared_ptr<const ExtCtx<F>> k_;
    std::vector<F> c_;
};

template <class F>
std::shared_ptr<const ExtCtx<F>> make_ext(std::vector<F> modulus, const mpz_class& base_order) {
    auto k = std::make_shared<ExtCtx<F>>();
    F one = modulus.back(); // monic by contract
    k->base_one = one;
    k->base_zero = one - one;
    k->modulus = std::move(modulus);
    mpz_pow_ui(k->order.get_mpz_t(), base_order.get_mpz_t(),
               static_cast<unsigned long>(k->modulus.size() - 1));
    return k;
}

template <class F>
ExtElem<F> embed(const std::shared_ptr<const ExtCtx<F>>& k, const F& a) {
    std::vector<F> r(k->deg(), k->base_zero);
    r[0] = a;
    return ExtElem<F>(k, std::move(r));
}

template <class F>
ExtElem<F> ext_gen(const std::shared_ptr<const ExtCtx<F>>& k) {
    std::vector<F> r(k->deg(), k->base_zero);
    if (r.size() > 1)
        r[1] = k->base_one;
    else
        r[0] = -k->modulus[0]; // class of t modulo a linear modulus is its root
    return ExtElem<F>(k, std::move(r));
}

template <class F>
ExtElem<F> ExtElem<F>::inv() const {
    // extended Euclid on (rep, modulus) over F
    using V = std::vector<F>;
    const F& zero = k_->base_zero;
    auto trim = [&](V& v) {
        while (!v.empty() && v.back().is_zero()) v.pop_back();
    };
    V r0 = k_->modulus, r1 = c_, s0, s1{k_->base_one};
    trim(r1);
    if (r1.empty()) raise(ErrorCode::NonUnit, "inverse of zero in extension field");
    while (!r1.empty()) {
        F lead_inv = r1.back().inv();
        V rem = r0, q;
        if (rem.size() >= r1.size()) {
            q.assign(rem.size() - r1.size() + 1, zero);
            for (size_t s = q.size(); s-- > 0;) {
                F c = rem[s + r1.size() - 1] * lead_inv;
                if (!c.is_zero()) {
                    q[s] = c;
                    for (size_t j = 0; j < r1.size(); ++j) rem[s + j] = rem[s + j] - c * r1[j];
                }
            }
            trim(rem);
        }
        V s2(std::max(s0.size(), q.empty() || s1.empty() ? size_t{0} : q.size() + s1.size() - 1),
             zero);
        for (size_t i = 0; i < s0.size(); ++i) s2[i] = s0[i];
        for (size_t i = 0; i < q.size(); ++i) {
            if (q[i].is_zero()) continue;
            for (size_t j = 0; j < s1.size(); ++j) s2[i + j] = s2[i + j] - q[i] * s1[j];
        }
        trim(s2);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    if (r0.size() != 1) raise(ErrorCode::NonUnit, "element shares a factor with the modulus");
    F scale = r0[0].inv();
    V out(k_->deg(), zero);
    for (size_t i = 0; i < s0.size() && i < out.size(); ++i) out[i] = s0[i] * scale;
    return ExtElem(k_, std::move(out));
}

// x^e with arbitrary-precision exponent, square and multiply.
template <class F>
F pow_mpz(const F& a, const mpz_class& e) {
    F r = a.make_int(1);
    size_t nb = mpz_sizeinbase(e.get_mpz_t(), 2);
    if (e == 0) return r;
    for (size_t k = nb; k-- > 0;) {
        r = r * r;
        if (mpz_tstbit(e.get_mpz_t(), k)) r = r * a;
    }
    return r;
}

// ---------------------------------------------------------------------------
// Oracle operations over F_q
// ---------------------------------------------------------------------------

// q = p^n of a field context.
mpz_class fq_order(const CtxPtr& ctx);

// The univariate ell-division polynomial f_ell (x-part of psi_ell), degree
// (ell^2 - 1)/2, leading coefficient ell.
Poly division_poly(uint64_t ell, const Curve<FqElement>& e);

// Distinct-degree factorization of monic squarefree f, peeling degrees
// 1..max_e; returns (degree, product-of-that-degree) pairs plus the unsplit
// remainder as degree 0 if anything is left.
std::vector<std::pair<unsigned, Poly>> ddf_up_to(const Poly& f, unsigned max_e);

// Equal-degree splitting (Cantor-Zassenhaus) of a product of distinct
// degree-e monic irreducibles.
void edf(const Poly& f, unsigned e, std::vector<Poly>& out, std::mt19937_64& rng);

// One irreducible factor of a monic squarefree polynomial.
Poly some_irreducible_factor(const Poly& f);

struct KernelReport {
    bool degree_ok = false;
    bool divides_division_poly = false;
    bool torsion_ok = false;
    bool abscissa_sum_ok = false;

    bool all_ok() const {
        return degree_ok && divides_division_poly && torsion_ok && abscissa_sum_ok;
    }
    std::string summary() const;
};

// Checks that monic g cuts out an order-ell subgroup of e: degree, division
// polynomial divisibility, ell-torsion of a root point in an extension, and
// the doubled-subleading-coefficient abscissa sum.
KernelReport verify_kernel(const Poly& g, const Curve<FqElement>& e, uint64_t ell);

// All kernel polynomials of rational ell-isogenies, found by factoring f_ell
// and regrouping factors along subgroups; empty when ell is Atkin.
std::vector<Poly> naive_elkies(const Curve<FqElement>& e, uint64_t ell);

// Every affine point plus infinity; tiny fields only (testing aid).
std::vector<Point<FqElement>> enumerate_points(const Curve<FqElement>& e);

} // namespace elkies
