#include "genus/bivariate.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "genus/errors.hpp"

namespace genus {

namespace {
const KappaPolynomial kZeroPoly;
}

BivariateLaurent BivariateLaurent::monomial(long d1, long d2, const KappaPolynomial& c,
                                            long trunc1, long trunc2) {
    BivariateLaurent s(trunc1, trunc2);
    if (d1 < trunc1 && d2 < trunc2 && !c.is_zero()) s.terms_.emplace(Key{d1, d2}, c);
    return s;
}

BivariateLaurent BivariateLaurent::tensor(const LaurentSeries& a, const LaurentSeries& b) {
    BivariateLaurent s(a.trunc(), b.trunc());
    if (a.is_zero() || b.is_zero()) return s;
    for (long da = a.min_deg(); da <= a.max_deg(); ++da) {
        if (a.coeff(da).is_zero()) continue;
        for (long db = b.min_deg(); db <= b.max_deg(); ++db) {
            if (b.coeff(db).is_zero()) continue;
            s.terms_.emplace(Key{da, db}, a.coeff(da) * b.coeff(db));
        }
    }
    return s;
}

long BivariateLaurent::min1() const {
    long m = kTruncInf;
    for (const auto& [k, c] : terms_) m = std::min(m, k.first);
    return m == kTruncInf ? trunc1_ : m;
}

long BivariateLaurent::min2() const {
    long m = kTruncInf;
    for (const auto& [k, c] : terms_) m = std::min(m, k.second);
    return m == kTruncInf ? trunc2_ : m;
}

const KappaPolynomial& BivariateLaurent::coeff(long d1, long d2) const {
    if (d1 >= trunc1_ || d2 >= trunc2_)
        throw TruncationTooLow("bivariate coefficient at (" + std::to_string(d1) + "," +
                               std::to_string(d2) + ") beyond truncation (" +
                               std::to_string(trunc1_) + "," + std::to_string(trunc2_) + ")");
    auto it = terms_.find(Key{d1, d2});
    return it == terms_.end() ? kZeroPoly : it->second;
}

void BivariateLaurent::add_term(long d1, long d2, const KappaPolynomial& c) {
    if (d1 >= trunc1_ || d2 >= trunc2_ || c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(Key{d1, d2}, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BivariateLaurent BivariateLaurent::operator-() const {
    BivariateLaurent s(trunc1_, trunc2_);
    for (const auto& [k, c] : terms_) s.terms_.emplace(k, -c);
    return s;
}

BivariateLaurent operator+(const BivariateLaurent& a, const BivariateLaurent& b) {
    BivariateLaurent s(std::min(a.trunc1_, b.trunc1_), std::min(a.trunc2_, b.trunc2_));
    for (const auto& [k, c] : a.terms_) s.add_term(k.first, k.second, c);
    for (const auto& [k, c] : b.terms_) s.add_term(k.first, k.second, c);
    return s;
}

BivariateLaurent operator-(const BivariateLaurent& a, const BivariateLaurent& b) {
    return a + (-b);
}

BivariateLaurent operator*(const BivariateLaurent& a, const BivariateLaurent& b) {
    const long t1 = std::min(sat_add(a.trunc1_, b.min1()), sat_add(b.trunc1_, a.min1()));
    const long t2 = std::min(sat_add(a.trunc2_, b.min2()), sat_add(b.trunc2_, a.min2()));
    BivariateLaurent s(t1, t2);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            const long d1 = ka.first + kb.first, d2 = ka.second + kb.second;
            if (d1 >= t1 || d2 >= t2) continue;
            s.add_term(d1, d2, ca * cb);
        }
    return s;
}

BivariateLaurent BivariateLaurent::operator*(const Rational& c) const {
    BivariateLaurent s(trunc1_, trunc2_);
    if (c.is_zero()) return s;
    for (const auto& [k, p] : terms_) s.terms_.emplace(k, p * c);
    return s;
}

BivariateLaurent BivariateLaurent::reciprocal(long out_trunc1, long out_trunc2) const {
    if (is_zero()) throw NonInvertibleLeading("reciprocal of the zero bivariate series");
    const long m1 = min1(), m2 = min2();
    auto corner = terms_.find(Key{m1, m2});
    if (corner == terms_.end() || !corner->second.is_constant() ||
        corner->second.constant_part().is_zero())
        throw NonInvertibleLeading("bivariate corner coefficient at (" + std::to_string(m1) +
                                   "," + std::to_string(m2) + ") is not an invertible constant");
    if (!is_exact() &&
        (out_trunc1 > sat_add(trunc1_, -2 * m1) || out_trunc2 > sat_add(trunc2_, -2 * m2)))
        throw TruncationTooLow("requested bivariate reciprocal truncation exceeds input support");
    const Rational inv_c = Rational(1) / corner->second.constant_part();

    // u = 1 - this/(c * y1^m1 y2^m2); every term of u has nonnegative shifted
    // bidegree, so u^k leaves the output window once k exceeds its size.
    const long w1 = out_trunc1 + m1, w2 = out_trunc2 + m2;
    if (w1 <= 0 || w2 <= 0) return BivariateLaurent(out_trunc1, out_trunc2);
    BivariateLaurent u(w1, w2);
    for (const auto& [k, c] : terms_) {
        const long e1 = k.first - m1, e2 = k.second - m2;
        if (e1 < 0 || e2 < 0)
            throw NonInvertibleLeading("bivariate corner at (" + std::to_string(m1) + "," +
                                       std::to_string(m2) + ") is not componentwise minimal");
        if (e1 == 0 && e2 == 0) continue;
        u.add_term(e1, e2, -(c * inv_c));
    }
    BivariateLaurent geo = monomial(0, 0, KappaPolynomial(Rational(1)), w1, w2);
    BivariateLaurent pw = geo;
    const long kmax = (w1 - 1) + (w2 - 1);
    for (long k = 1; k <= kmax; ++k) {
        pw = pw * u;
        if (pw.is_zero()) break;
        geo = geo + pw;
    }
    BivariateLaurent s(out_trunc1, out_trunc2);
    for (const auto& [k, c] : geo.terms_) s.add_term(k.first - m1, k.second - m2, c * inv_c);
    return s;
}

BivariateLaurent BivariateLaurent::shifted(long k1, long k2) const {
    BivariateLaurent s(sat_add(trunc1_, k1), sat_add(trunc2_, k2));
    for (const auto& [k, c] : terms_) s.terms_.emplace(Key{k.first + k1, k.second + k2}, c);
    return s;
}

BivariateLaurent BivariateLaurent::truncated(long t1, long t2) const {
    BivariateLaurent s(std::min(trunc1_, t1), std::min(trunc2_, t2));
    for (const auto& [k, c] : terms_)
        if (k.first < s.trunc1_ && k.second < s.trunc2_) s.terms_.emplace(k, c);
    return s;
}

BivariateLaurent BivariateLaurent::swap_vars() const {
    BivariateLaurent s(trunc2_, trunc1_);
    for (const auto& [k, c] : terms_) s.terms_.emplace(Key{k.second, k.first}, c);
    return s;
}

BivariateLaurent BivariateLaurent::theta_both() const {
    BivariateLaurent s(trunc1_, trunc2_);
    for (const auto& [k, c] : terms_) {
        const Rational f(k.first * k.second);
        if (!f.is_zero()) s.terms_.emplace(k, c * f);
    }
    return s;
}

LaurentSeries BivariateLaurent::residue_y2() const {
    if (trunc2_ <= -1)
        throw TruncationTooLow("y2-residue outside the computed window");
    LaurentSeries s(trunc1_);
    for (const auto& [k, c] : terms_)
        if (k.second == -1) s.set_coeff(k.first, s.coeff(k.first) + c);
    return s;
}

LaurentSeries BivariateLaurent::residue_y1() const { return swap_vars().residue_y2(); }

bool BivariateLaurent::agree(const BivariateLaurent& a, const BivariateLaurent& b) {
    const long t1 = std::min(a.trunc1_, b.trunc1_), t2 = std::min(a.trunc2_, b.trunc2_);
    for (const auto& [k, c] : a.terms_)
        if (k.first < t1 && k.second < t2 && !(b.coeff(k.first, k.second) == c)) return false;
    for (const auto& [k, c] : b.terms_)
        if (k.first < t1 && k.second < t2 && !(a.coeff(k.first, k.second) == c)) return false;
    return true;
}

std::string BivariateLaurent::str(int max_terms) const {
    std::ostringstream os;
    int shown = 0;
    for (const auto& [k, c] : terms_) {
        if (shown >= max_terms) {
            os << " + ...";
            break;
        }
        if (shown) os << " + ";
        os << "(" << c.str() << ")*y1^" << k.first << "*y2^" << k.second;
        ++shown;
    }
    if (!shown) os << "0";
    return os.str();
}

BivariateLaurent exact_div_diag(const BivariateLaurent& num, int k) {
    BivariateLaurent q = num;
    for (int round = 0; round < k; ++round) {
        if (q.trunc1() < kTruncInf)
            throw std::invalid_argument("exact division by (y1-y2) needs a numerator exact in y1");
        if (q.is_zero()) continue;
        // Slices by y1-degree; (y1-y2)*Q = F means q_{d-1} = f_d + y2*q_d,
        // descending from the top y1-degree. The slice left over below the
        // bottom is the remainder.
        std::map<long, std::map<long, KappaPolynomial>> slices;
        long top = 0, bottom = 0;
        bool first = true;
        for (const auto& [key, c] : q.terms()) {
            slices[key.first][key.second] = c;
            top = first ? key.first : std::max(top, key.first);
            bottom = first ? key.first : std::min(bottom, key.first);
            first = false;
        }
        BivariateLaurent out(kTruncInf, q.trunc2());
        std::map<long, KappaPolynomial> carry;  // q_d while descending, times y2 each step
        for (long d = top; d >= bottom; --d) {
            std::map<long, KappaPolynomial> next;  // q_{d-1}
            auto it = slices.find(d);
            if (it != slices.end()) next = it->second;
            for (const auto& [d2, c] : carry) {
                auto [jt, inserted] = next.emplace(d2 + 1, c);
                if (!inserted) jt->second += c;
            }
            for (auto jt = next.begin(); jt != next.end();) {
                if (jt->second.is_zero()) jt = next.erase(jt);
                else ++jt;
            }
            if (d > bottom) {
                for (const auto& [d2, c] : next) out.add_term(d - 1, d2, c);
            } else if (!next.empty()) {
                throw NotDivisible("nonzero remainder dividing by (y1-y2)");
            }
            carry = std::move(next);
        }
        q = out;
    }
    return q;
}

}  // namespace genus
