#pragma once

#include <limits>
#include <vector>

#include "genus/kappa.hpp"

namespace genus {

// Saturating arithmetic on truncation orders; kTruncInf marks a series whose
// coefficients are known at every degree (finitely supported data).
inline constexpr long kTruncInf = std::numeric_limits<long>::max() / 4;
inline long sat_add(long a, long b) {
    if (a >= kTruncInf || b >= kTruncInf) return kTruncInf;
    return a + b;
}

// Truncated univariate Laurent series over KappaPolynomial. Coefficients at
// degrees >= trunc() are unknown and reading them throws TruncationTooLow;
// degrees below the stored support are exactly zero. Every operation
// propagates the tightest provable truncation.
class LaurentSeries {
public:
    // The zero series, known everywhere (or below an explicit trunc).
    LaurentSeries() : min_deg_(kTruncInf), trunc_(kTruncInf) {}
    explicit LaurentSeries(long trunc) : min_deg_(trunc), trunc_(trunc) {}

    static LaurentSeries monomial(long deg, const KappaPolynomial& c, long trunc = kTruncInf);
    static LaurentSeries constant(const KappaPolynomial& c, long trunc = kTruncInf) {
        return monomial(0, c, trunc);
    }

    long trunc() const { return trunc_; }
    // Lowest degree carrying a nonzero coefficient; trunc() for a zero series.
    long min_deg() const { return min_deg_; }
    long max_deg() const { return min_deg_ + static_cast<long>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_exact() const { return trunc_ >= kTruncInf; }

    const KappaPolynomial& coeff(long deg) const;
    void set_coeff(long deg, const KappaPolynomial& c);

    LaurentSeries operator-() const;
    friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
    friend LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);
    LaurentSeries operator*(const KappaPolynomial& c) const;
    LaurentSeries operator*(const Rational& c) const;

    // Termwise d/dy; truncation drops by one.
    LaurentSeries derivative() const;

    // Multiplicative inverse. The leading coefficient must be a nonzero
    // rational constant (true for every series inverted here; leading terms
    // are +-1). Output truncation: trunc - 2*min_deg for truncated input; an
    // exact input requires the explicit out_trunc overload.
    LaurentSeries reciprocal() const;
    LaurentSeries reciprocal(long out_trunc) const;

    LaurentSeries pow(unsigned n) const;
    // Forget knowledge at degrees >= t.
    LaurentSeries truncated(long t) const;
    // Multiply by y^k.
    LaurentSeries shifted(long k) const;

    // Coefficient of y^{-1}; throws TruncationTooLow when degree -1 is not
    // inside the known window.
    KappaPolynomial residue() const;

    // Equality of all coefficients on the overlap of the known windows,
    // optionally clipped to [lo, hi].
    static bool agree(const LaurentSeries& a, const LaurentSeries& b,
                      long lo = -kTruncInf, long hi = kTruncInf);

    std::string str(int max_terms = 12) const;

private:
    void normalize();

    long min_deg_;                        // support start (== trunc_ when zero)
    std::vector<KappaPolynomial> coeffs_; // support window; front()/back() nonzero
    long trunc_;                          // exclusive knowledge bound
};

// (df/dy) / (dX/dy): the derivative of f with respect to X along the curve
// parametrized by y. X' must have an invertible leading coefficient.
LaurentSeries dx_derivative(const LaurentSeries& f, const LaurentSeries& X);

// Same operator with the reciprocal of X' precomputed, for use in loops.
class DxOperator {
public:
    explicit DxOperator(const LaurentSeries& X) : recip_xprime_(X.derivative().reciprocal()) {}
    DxOperator(const LaurentSeries& X, long recip_trunc)
        : recip_xprime_(X.derivative().reciprocal(recip_trunc)) {}
    LaurentSeries operator()(const LaurentSeries& f) const { return f.derivative() * recip_xprime_; }
    const LaurentSeries& recip_xprime() const { return recip_xprime_; }

private:
    LaurentSeries recip_xprime_;
};

}  // namespace genus
