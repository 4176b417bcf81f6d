#include "genus/laurent.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "genus/errors.hpp"

namespace genus {

namespace {
const KappaPolynomial kZeroPoly;
}

void LaurentSeries::normalize() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead > 0) {
        coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<long>(lead));
        min_deg_ += static_cast<long>(lead);
    }
    if (coeffs_.empty()) min_deg_ = trunc_;
}

LaurentSeries LaurentSeries::monomial(long deg, const KappaPolynomial& c, long trunc) {
    LaurentSeries s(trunc);
    if (deg < trunc && !c.is_zero()) {
        s.min_deg_ = deg;
        s.coeffs_.push_back(c);
    }
    return s;
}

const KappaPolynomial& LaurentSeries::coeff(long deg) const {
    if (deg >= trunc_)
        throw TruncationTooLow("coefficient at degree " + std::to_string(deg) +
                               " requested, series truncated at " + std::to_string(trunc_));
    if (deg < min_deg_ || deg > max_deg()) return kZeroPoly;
    return coeffs_[static_cast<std::size_t>(deg - min_deg_)];
}

void LaurentSeries::set_coeff(long deg, const KappaPolynomial& c) {
    if (deg >= trunc_)
        throw TruncationTooLow("cannot set coefficient beyond truncation order");
    if (coeffs_.empty()) {
        if (c.is_zero()) return;
        min_deg_ = deg;
        coeffs_.push_back(c);
        return;
    }
    if (deg < min_deg_) {
        coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(min_deg_ - deg), kZeroPoly);
        min_deg_ = deg;
    } else if (deg > max_deg()) {
        coeffs_.resize(static_cast<std::size_t>(deg - min_deg_) + 1);
    }
    coeffs_[static_cast<std::size_t>(deg - min_deg_)] = c;
    normalize();
}

LaurentSeries LaurentSeries::operator-() const {
    LaurentSeries s = *this;
    for (auto& c : s.coeffs_) c = -c;
    return s;
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    LaurentSeries s(std::min(a.trunc_, b.trunc_));
    if (a.is_zero() && b.is_zero()) return s;
    const long lo = std::min(a.is_zero() ? b.min_deg_ : a.min_deg_,
                             b.is_zero() ? a.min_deg_ : b.min_deg_);
    const long hi = std::min(std::max(a.max_deg(), b.max_deg()), s.trunc_ - 1);
    if (hi < lo) return s;
    s.min_deg_ = lo;
    s.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), kZeroPoly);
    for (long d = lo; d <= hi; ++d) {
        KappaPolynomial c;
        if (d >= a.min_deg_ && d <= a.max_deg()) c += a.coeffs_[static_cast<std::size_t>(d - a.min_deg_)];
        if (d >= b.min_deg_ && d <= b.max_deg()) c += b.coeffs_[static_cast<std::size_t>(d - b.min_deg_)];
        s.coeffs_[static_cast<std::size_t>(d - lo)] = std::move(c);
    }
    s.normalize();
    return s;
}

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    // Unknown region of a starts at a.trunc_; a term of b at its lowest degree
    // pushes that to a.trunc_ + b.min_deg_, and symmetrically. For a zero
    // factor the knowledge bound itself plays the role of the lowest degree.
    const long ma = a.is_zero() ? a.trunc_ : a.min_deg_;
    const long mb = b.is_zero() ? b.trunc_ : b.min_deg_;
    const long trunc = std::min(sat_add(a.trunc_, mb), sat_add(b.trunc_, ma));
    LaurentSeries s(trunc);
    if (a.is_zero() || b.is_zero()) return s;
    const long lo = a.min_deg_ + b.min_deg_;
    const long hi = std::min(a.max_deg() + b.max_deg(), sat_add(trunc, -1));
    if (hi < lo) return s;
    s.min_deg_ = lo;
    s.coeffs_.assign(static_cast<std::size_t>(hi - lo + 1), kZeroPoly);
    for (long da = a.min_deg_; da <= a.max_deg(); ++da) {
        const KappaPolynomial& ca = a.coeffs_[static_cast<std::size_t>(da - a.min_deg_)];
        if (ca.is_zero()) continue;
        const long dbmax = std::min(b.max_deg(), hi - da);
        for (long db = b.min_deg_; db <= dbmax; ++db) {
            const KappaPolynomial& cb = b.coeffs_[static_cast<std::size_t>(db - b.min_deg_)];
            if (cb.is_zero()) continue;
            s.coeffs_[static_cast<std::size_t>(da + db - lo)] += ca * cb;
        }
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::operator*(const KappaPolynomial& c) const {
    LaurentSeries s(trunc_);
    if (c.is_zero() || is_zero()) return s;
    s.min_deg_ = min_deg_;
    s.coeffs_.reserve(coeffs_.size());
    for (const auto& p : coeffs_) s.coeffs_.push_back(p * c);
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::operator*(const Rational& c) const {
    return *this * KappaPolynomial(c);
}

LaurentSeries LaurentSeries::derivative() const {
    LaurentSeries s(sat_add(trunc_, -1));
    if (is_zero()) return s;
    s.min_deg_ = min_deg_ - 1;
    s.coeffs_.reserve(coeffs_.size());
    for (long d = min_deg_; d <= max_deg(); ++d)
        s.coeffs_.push_back(coeffs_[static_cast<std::size_t>(d - min_deg_)] * Rational(d));
    while (!s.coeffs_.empty() && s.min_deg_ + static_cast<long>(s.coeffs_.size()) - 1 >= s.trunc_)
        s.coeffs_.pop_back();
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::reciprocal() const {
    if (is_exact())
        throw std::invalid_argument(
            "reciprocal of an exact series needs an explicit output truncation");
    return reciprocal(sat_add(trunc_, -2 * min_deg_));
}

LaurentSeries LaurentSeries::reciprocal(long out_trunc) const {
    if (is_zero()) throw NonInvertibleLeading("reciprocal of the zero series");
    const KappaPolynomial& lead = coeffs_.front();
    if (!lead.is_constant() || lead.constant_part().is_zero())
        throw NonInvertibleLeading("leading series coefficient '" + lead.str() +
                                   "' has no invertible constant part");
    if (!is_exact() && out_trunc > sat_add(trunc_, -2 * min_deg_))
        throw TruncationTooLow("requested reciprocal truncation exceeds what the input supports");
    const Rational inv_lead = Rational(1) / lead.constant_part();
    const long m = min_deg_;
    LaurentSeries s(out_trunc);
    const long n_out = out_trunc - (-m);
    if (n_out <= 0) return s;
    s.min_deg_ = -m;
    s.coeffs_.assign(static_cast<std::size_t>(n_out), kZeroPoly);
    s.coeffs_[0] = KappaPolynomial(inv_lead);
    for (long k = 1; k < n_out; ++k) {
        KappaPolynomial acc;
        const long jmax = std::min(k, max_deg() - m);
        for (long j = 1; j <= jmax; ++j)
            acc += coeffs_[static_cast<std::size_t>(j)] * s.coeffs_[static_cast<std::size_t>(k - j)];
        s.coeffs_[static_cast<std::size_t>(k)] = -acc * inv_lead;
    }
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::pow(unsigned n) const {
    if (n == 0) return constant(KappaPolynomial(Rational(1)));
    LaurentSeries r = *this;
    for (unsigned k = 1; k < n; ++k) r = r * *this;
    return r;
}

LaurentSeries LaurentSeries::truncated(long t) const {
    LaurentSeries s = *this;
    s.trunc_ = std::min(trunc_, t);
    while (!s.coeffs_.empty() && s.min_deg_ + static_cast<long>(s.coeffs_.size()) - 1 >= s.trunc_)
        s.coeffs_.pop_back();
    s.normalize();
    return s;
}

LaurentSeries LaurentSeries::shifted(long k) const {
    LaurentSeries s = *this;
    s.trunc_ = sat_add(trunc_, k);
    if (!s.coeffs_.empty()) s.min_deg_ += k;
    else s.min_deg_ = s.trunc_;
    return s;
}

KappaPolynomial LaurentSeries::residue() const {
    if (trunc_ <= -1)
        throw TruncationTooLow("residue outside the computed window (trunc = " +
                               std::to_string(trunc_) + ")");
    return coeff(-1);
}

bool LaurentSeries::agree(const LaurentSeries& a, const LaurentSeries& b, long lo, long hi) {
    const long start = std::max(lo, std::min(a.min_deg(), b.min_deg()));
    const long stop = std::min(hi, std::min(a.trunc(), b.trunc()) - 1);
    for (long d = start; d <= stop; ++d)
        if (!(a.coeff(d) == b.coeff(d))) return false;
    return true;
}

std::string LaurentSeries::str(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    bool any = false;
    for (long d = min_deg_; d <= max_deg() && shown < max_terms; ++d) {
        const auto& c = coeff(d);
        if (c.is_zero()) continue;
        if (any) os << " + ";
        os << "(" << c.str() << ")*y^" << d;
        any = true;
        ++shown;
    }
    if (!any) os << "0";
    if (trunc_ < kTruncInf) os << " + O(y^" << trunc_ << ")";
    return os.str();
}

LaurentSeries dx_derivative(const LaurentSeries& f, const LaurentSeries& X) {
    return f.derivative() * X.derivative().reciprocal();
}

}  // namespace genus
