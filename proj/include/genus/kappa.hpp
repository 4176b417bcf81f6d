#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "genus/rational.hpp"

namespace genus {

// Monomial in the cumulant indeterminates: first-order k_i and second-order
// k_{i,j}. Second-order index pairs are stored canonically with i <= j, so
// k_{2,1} and k_{1,2} are the same indeterminate. The weight of a monomial is
// sum(i * exp) over first-order factors plus sum((i+j) * exp) over
// second-order factors.
class KappaMonomial {
public:
    KappaMonomial() = default;

    static KappaMonomial one() { return {}; }
    static KappaMonomial first(int i, int exp = 1);
    static KappaMonomial second(int i, int j, int exp = 1);

    KappaMonomial operator*(const KappaMonomial& o) const;

    int weight() const;
    bool is_one() const { return first_.empty() && second_.empty(); }
    bool has_second_order() const { return !second_.empty(); }
    int total_degree() const;

    const std::vector<std::pair<int, int>>& first_order() const { return first_; }
    const std::vector<std::pair<std::pair<int, int>, int>>& second_order() const { return second_; }

    bool operator==(const KappaMonomial& o) const = default;
    // Canonical term order: (weight, flattened index list, second-order pairs).
    bool operator<(const KappaMonomial& o) const;

    std::string str() const;  // "k1^2*k3*k{1,2}"

private:
    std::vector<int> flat_indices() const;

    std::vector<std::pair<int, int>> first_;                   // (index, exp), index ascending
    std::vector<std::pair<std::pair<int, int>, int>> second_;  // ((i,j) with i<=j, exp), ascending
};

// Sparse polynomial over the cumulant indeterminates with exact rational
// coefficients. Zero coefficients are never stored, so structural equality is
// mathematical equality.
class KappaPolynomial {
public:
    KappaPolynomial() = default;
    KappaPolynomial(long c) : KappaPolynomial(Rational(c)) {}  // NOLINT
    KappaPolynomial(const Rational& c);                        // NOLINT
    KappaPolynomial(const KappaMonomial& m, const Rational& c = 1);

    static KappaPolynomial kappa(int i) { return {KappaMonomial::first(i)}; }
    static KappaPolynomial kappa2(int i, int j) { return {KappaMonomial::second(i, j)}; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;
    // Coefficient of the empty monomial.
    Rational constant_part() const;
    Rational coefficient(const KappaMonomial& m) const;
    std::size_t term_count() const { return terms_.size(); }
    const std::map<KappaMonomial, Rational>& terms() const { return terms_; }

    // True when every monomial has the given weight (the zero polynomial
    // is homogeneous of any weight).
    bool is_weight_homogeneous(int w) const;
    KappaPolynomial first_order_part() const;   // drop terms containing any k_{i,j}
    KappaPolynomial second_order_part() const;  // keep only terms containing some k_{i,j}

    KappaPolynomial operator-() const;
    KappaPolynomial& operator+=(const KappaPolynomial& o);
    KappaPolynomial& operator-=(const KappaPolynomial& o);
    friend KappaPolynomial operator+(KappaPolynomial a, const KappaPolynomial& b) { return a += b; }
    friend KappaPolynomial operator-(KappaPolynomial a, const KappaPolynomial& b) { return a -= b; }
    KappaPolynomial operator*(const KappaPolynomial& o) const;
    KappaPolynomial operator*(const Rational& c) const;

    void add_term(const KappaMonomial& m, const Rational& c);

    bool operator==(const KappaPolynomial& o) const = default;

    // Canonical rendering, e.g. "4*k1*k3 + k2^2 + 5*k4". This is the golden
    // file format: terms in canonical monomial order.
    std::string str() const;
    // Inverse of str(); accepts any whitespace-insensitive sum of terms.
    static KappaPolynomial parse(const std::string& s);

private:
    std::map<KappaMonomial, Rational> terms_;
};

inline KappaPolynomial operator*(const Rational& c, const KappaPolynomial& p) { return p * c; }

std::ostream& operator<<(std::ostream& os, const KappaPolynomial& p);

}  // namespace genus
