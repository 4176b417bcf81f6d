#include "genus/rational.hpp"

#include <ostream>
#include <stdexcept>

namespace genus {

void Rational::normalize() {
    if (sgn(v_.get_den()) == 0) throw std::domain_error("rational with zero denominator");
    v_.canonicalize();
}

Rational Rational::from_string(const std::string& s) {
    Rational r;
    if (r.v_.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    r.normalize();
    return r;
}

BigInt Rational::to_integer() const {
    if (!is_integer()) throw std::domain_error("rational " + str() + " is not an integer");
    return v_.get_num();
}

Rational Rational::operator-() const {
    Rational r;
    r.v_ = -v_;
    return r;
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) throw std::domain_error("rational division by zero");
    v_ /= o.v_;
    return *this;
}

Rational Rational::abs() const {
    Rational r;
    r.v_ = ::abs(v_);
    return r;
}

Rational Rational::pow(unsigned e) const {
    Rational r;
    mpz_pow_ui(r.v_.get_num_mpz_t(), v_.get_num_mpz_t(), e);
    mpz_pow_ui(r.v_.get_den_mpz_t(), v_.get_den_mpz_t(), e);
    return r;
}

std::string Rational::str() const { return v_.get_str(); }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt factorial(int n) {
    BigInt f;
    mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n < 0 ? 0 : n));
    return f;
}

BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

BigInt double_factorial_odd(int n) {
    BigInt r = 1;
    for (int k = 2 * n - 1; k > 1; k -= 2) r *= k;
    return r;
}

BigInt int_pow(const BigInt& b, unsigned e) {
    BigInt r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

}  // namespace genus
