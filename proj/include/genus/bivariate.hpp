#pragma once

#include <map>
#include <utility>

#include "genus/laurent.hpp"

namespace genus {

// Truncated Laurent series in two variables (y1, y2) over KappaPolynomial,
// with the same truncation discipline as LaurentSeries applied per variable.
class BivariateLaurent {
public:
    using Key = std::pair<long, long>;

    BivariateLaurent() : trunc1_(kTruncInf), trunc2_(kTruncInf) {}
    BivariateLaurent(long trunc1, long trunc2) : trunc1_(trunc1), trunc2_(trunc2) {}

    static BivariateLaurent monomial(long d1, long d2, const KappaPolynomial& c,
                                     long trunc1 = kTruncInf, long trunc2 = kTruncInf);
    // a(y1) * b(y2)
    static BivariateLaurent tensor(const LaurentSeries& a, const LaurentSeries& b);

    long trunc1() const { return trunc1_; }
    long trunc2() const { return trunc2_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_exact() const { return trunc1_ >= kTruncInf && trunc2_ >= kTruncInf; }
    // Lowest stored degree per variable; the truncation order for a zero series.
    long min1() const;
    long min2() const;
    const std::map<Key, KappaPolynomial>& terms() const { return terms_; }

    const KappaPolynomial& coeff(long d1, long d2) const;
    void add_term(long d1, long d2, const KappaPolynomial& c);

    BivariateLaurent operator-() const;
    friend BivariateLaurent operator+(const BivariateLaurent& a, const BivariateLaurent& b);
    friend BivariateLaurent operator-(const BivariateLaurent& a, const BivariateLaurent& b);
    friend BivariateLaurent operator*(const BivariateLaurent& a, const BivariateLaurent& b);
    BivariateLaurent operator*(const Rational& c) const;

    // Multiplicative inverse, known below (out_trunc1, out_trunc2). Requires
    // the corner coefficient at (min1, min2) to exist and be a nonzero
    // rational constant.
    BivariateLaurent reciprocal(long out_trunc1, long out_trunc2) const;

    // Multiply by y1^k1 * y2^k2.
    BivariateLaurent shifted(long k1, long k2) const;
    BivariateLaurent truncated(long t1, long t2) const;
    BivariateLaurent swap_vars() const;
    // Term (d1,d2) -> d1*d2 * term, i.e. the operator y1 d/dy1 y2 d/dy2.
    BivariateLaurent theta_both() const;

    // Coefficient slice of y2^{-1} (resp. y1^{-1}) as a series in the other
    // variable; throws TruncationTooLow when degree -1 is outside the window.
    LaurentSeries residue_y2() const;
    LaurentSeries residue_y1() const;

    bool operator==(const BivariateLaurent& o) const {
        return terms_ == o.terms_ && trunc1_ == o.trunc1_ && trunc2_ == o.trunc2_;
    }
    // Equality of all coefficients on the overlap of the known windows.
    static bool agree(const BivariateLaurent& a, const BivariateLaurent& b);

    std::string str(int max_terms = 16) const;

private:
    std::map<Key, KappaPolynomial> terms_;
    long trunc1_, trunc2_;
};

// Exact division by (y1 - y2)^k. The numerator must be exact in y1 (finitely
// supported, trunc1 infinite); a nonzero remainder raises NotDivisible, which
// signals a transcription or truncation bug at the call site.
BivariateLaurent exact_div_diag(const BivariateLaurent& num, int k);

}  // namespace genus
