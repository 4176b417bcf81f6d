#include "genus/kappa.hpp"

#include <algorithm>
#include <cctype>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace genus {

KappaMonomial KappaMonomial::first(int i, int exp) {
    if (i < 1 || exp < 0) throw std::invalid_argument("kappa index/exponent out of range");
    KappaMonomial m;
    if (exp > 0) m.first_.emplace_back(i, exp);
    return m;
}

KappaMonomial KappaMonomial::second(int i, int j, int exp) {
    if (i < 1 || j < 1 || exp < 0) throw std::invalid_argument("kappa index/exponent out of range");
    KappaMonomial m;
    if (exp > 0) m.second_.push_back({{std::min(i, j), std::max(i, j)}, exp});
    return m;
}

namespace {

template <typename K>
std::vector<std::pair<K, int>> merge_exponents(const std::vector<std::pair<K, int>>& a,
                                               const std::vector<std::pair<K, int>>& b) {
    std::vector<std::pair<K, int>> out;
    out.reserve(a.size() + b.size());
    auto ia = a.begin(), ib = b.begin();
    while (ia != a.end() || ib != b.end()) {
        if (ib == b.end() || (ia != a.end() && ia->first < ib->first)) {
            out.push_back(*ia++);
        } else if (ia == a.end() || ib->first < ia->first) {
            out.push_back(*ib++);
        } else {
            out.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    return out;
}

}  // namespace

KappaMonomial KappaMonomial::operator*(const KappaMonomial& o) const {
    KappaMonomial m;
    m.first_ = merge_exponents(first_, o.first_);
    m.second_ = merge_exponents(second_, o.second_);
    return m;
}

int KappaMonomial::weight() const {
    int w = 0;
    for (const auto& [i, e] : first_) w += i * e;
    for (const auto& [ij, e] : second_) w += (ij.first + ij.second) * e;
    return w;
}

int KappaMonomial::total_degree() const {
    int d = 0;
    for (const auto& [i, e] : first_) d += e;
    for (const auto& [ij, e] : second_) d += e;
    return d;
}

std::vector<int> KappaMonomial::flat_indices() const {
    std::vector<int> v;
    for (const auto& [i, e] : first_)
        for (int r = 0; r < e; ++r) v.push_back(i);
    for (const auto& [ij, e] : second_)
        for (int r = 0; r < e; ++r) {
            v.push_back(ij.first);
            v.push_back(ij.second);
        }
    std::sort(v.begin(), v.end());
    return v;
}

bool KappaMonomial::operator<(const KappaMonomial& o) const {
    const int w = weight(), ow = o.weight();
    if (w != ow) return w < ow;
    const auto f = flat_indices(), of = o.flat_indices();
    if (f != of) return f < of;
    return second_ < o.second_;
}

std::string KappaMonomial::str() const {
    if (is_one()) return "1";
    std::ostringstream os;
    bool sep = false;
    for (const auto& [i, e] : first_) {
        if (sep) os << '*';
        os << 'k' << i;
        if (e > 1) os << '^' << e;
        sep = true;
    }
    for (const auto& [ij, e] : second_) {
        if (sep) os << '*';
        os << "k{" << ij.first << ',' << ij.second << '}';
        if (e > 1) os << '^' << e;
        sep = true;
    }
    return os.str();
}

KappaPolynomial::KappaPolynomial(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(KappaMonomial::one(), c);
}

KappaPolynomial::KappaPolynomial(const KappaMonomial& m, const Rational& c) {
    if (!c.is_zero()) terms_.emplace(m, c);
}

bool KappaPolynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.is_one());
}

Rational KappaPolynomial::constant_part() const { return coefficient(KappaMonomial::one()); }

Rational KappaPolynomial::coefficient(const KappaMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

bool KappaPolynomial::is_weight_homogeneous(int w) const {
    for (const auto& [m, c] : terms_)
        if (m.weight() != w) return false;
    return true;
}

KappaPolynomial KappaPolynomial::first_order_part() const {
    KappaPolynomial p;
    for (const auto& [m, c] : terms_)
        if (!m.has_second_order()) p.terms_.emplace(m, c);
    return p;
}

KappaPolynomial KappaPolynomial::second_order_part() const {
    KappaPolynomial p;
    for (const auto& [m, c] : terms_)
        if (m.has_second_order()) p.terms_.emplace(m, c);
    return p;
}

void KappaPolynomial::add_term(const KappaMonomial& m, const Rational& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KappaPolynomial KappaPolynomial::operator-() const {
    KappaPolynomial p;
    for (const auto& [m, c] : terms_) p.terms_.emplace(m, -c);
    return p;
}

KappaPolynomial& KappaPolynomial::operator+=(const KappaPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

KappaPolynomial& KappaPolynomial::operator-=(const KappaPolynomial& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

KappaPolynomial KappaPolynomial::operator*(const KappaPolynomial& o) const {
    KappaPolynomial p;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_) p.add_term(ma * mb, ca * cb);
    return p;
}

KappaPolynomial KappaPolynomial::operator*(const Rational& c) const {
    if (c.is_zero()) return {};
    KappaPolynomial p;
    for (const auto& [m, cc] : terms_) p.terms_.emplace(m, cc * c);
    return p;
}

std::string KappaPolynomial::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool head = true;
    for (const auto& [m, c] : terms_) {
        const Rational a = c.abs();
        if (head) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (m.is_one()) {
            os << a.str();
        } else {
            if (!(a == Rational(1))) os << a.str() << '*';
            os << m.str();
        }
        head = false;
    }
    return os.str();
}

namespace {

// Minimal recursive-descent reader for the canonical rendering.
struct PolyReader {
    const std::string& s;
    std::size_t pos = 0;

    explicit PolyReader(const std::string& str) : s(str) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    int read_int() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw std::invalid_argument("expected integer at position " + std::to_string(start) + " in: " + s);
        return std::stoi(s.substr(start, pos - start));
    }
    Rational read_rational() {
        BigInt num(read_int());
        if (eat('/')) return {num, BigInt(read_int())};
        return {num};
    }

    // factor := 'k' idx ['^' e] | 'k{' i ',' j '}' ['^' e]
    KappaMonomial read_factor() {
        skip_ws();
        if (pos >= s.size() || s[pos] != 'k') throw std::invalid_argument("expected 'k' at position " + std::to_string(pos) + " in: " + s);
        ++pos;
        if (eat('{')) {
            int i = read_int();
            if (!eat(',')) throw std::invalid_argument("expected ',' in k{i,j}: " + s);
            int j = read_int();
            if (!eat('}')) throw std::invalid_argument("expected '}' in k{i,j}: " + s);
            int e = eat('^') ? read_int() : 1;
            return KappaMonomial::second(i, j, e);
        }
        int i = read_int();
        int e = eat('^') ? read_int() : 1;
        return KappaMonomial::first(i, e);
    }

    // term := [rational] ['*'? factor ('*' factor)*]
    std::pair<KappaMonomial, Rational> read_term() {
        skip_ws();
        Rational c = 1;
        bool have_coef = false;
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            c = read_rational();
            have_coef = true;
        }
        KappaMonomial m = KappaMonomial::one();
        bool have_factor = false;
        if (have_coef && !eat('*')) {
            skip_ws();
            if (pos < s.size() && s[pos] == 'k') {
                // allow "4k1" without the separator
            } else {
                return {m, c};
            }
        }
        for (;;) {
            skip_ws();
            if (pos >= s.size() || s[pos] != 'k') break;
            m = m * read_factor();
            have_factor = true;
            if (!eat('*')) break;
        }
        if (!have_coef && !have_factor) throw std::invalid_argument("empty term in: " + s);
        return {m, c};
    }

    KappaPolynomial read_poly() {
        KappaPolynomial p;
        skip_ws();
        bool neg = eat('-');
        if (!neg) eat('+');
        for (;;) {
            auto [m, c] = read_term();
            p.add_term(m, neg ? -c : c);
            skip_ws();
            if (pos >= s.size()) break;
            if (eat('-')) {
                neg = true;
            } else if (eat('+')) {
                neg = false;
            } else {
                throw std::invalid_argument("expected '+' or '-' at position " + std::to_string(pos) + " in: " + s);
            }
        }
        return p;
    }
};

}  // namespace

KappaPolynomial KappaPolynomial::parse(const std::string& s) {
    PolyReader r(s);
    return r.read_poly();
}

std::ostream& operator<<(std::ostream& os, const KappaPolynomial& p) { return os << p.str(); }

}  // namespace genus
