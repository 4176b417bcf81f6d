#pragma once

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace genus {

using BigInt = mpz_class;

// Exact rational number. Always stored in lowest terms with positive
// denominator; every operation is exact.
class Rational {
public:
    Rational() : v_(0) {}
    Rational(long n) : v_(n) {}  // NOLINT: implicit by design
    Rational(const BigInt& n) : v_(n) {}
    Rational(long num, long den) : v_(num, den) { normalize(); }
    Rational(const BigInt& num, const BigInt& den) : v_(num, den) { normalize(); }

    static Rational from_string(const std::string& s);

    BigInt numerator() const { return v_.get_num(); }
    BigInt denominator() const { return v_.get_den(); }
    bool is_zero() const { return sgn(v_) == 0; }
    bool is_integer() const { return v_.get_den() == 1; }
    int sign() const { return sgn(v_); }

    // Integer value; caller must know is_integer() holds.
    BigInt to_integer() const;

    Rational operator-() const;
    Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
    Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
    Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
    Rational& operator/=(const Rational& o);

    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

    friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
    friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }

    Rational abs() const;
    Rational pow(unsigned e) const;

    // "5", "-3/4"
    std::string str() const;

private:
    void normalize();
    mpq_class v_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

BigInt factorial(int n);
BigInt binomial(int n, int k);
// (2n-1)!! with the usual convention (-1)!! = 1.
BigInt double_factorial_odd(int n);
BigInt int_pow(const BigInt& b, unsigned e);

}  // namespace genus
