#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "genus/bivariate.hpp"
#include "genus/errors.hpp"
#include "genus/genfun_perm.hpp"
#include "genus/kappa.hpp"
#include "genus/laurent.hpp"

using namespace genus;

namespace {

KappaPolynomial P(const char* s) { return KappaPolynomial::parse(s); }

LaurentSeries ones_x(int cutoff, long trunc) {
    // X with every cumulant set to 1: 1/y + 1/(1-y).
    std::map<int, KappaPolynomial> c;
    for (int i = 1; i <= cutoff; ++i) c.emplace(i, KappaPolynomial(Rational(1)));
    return build_x(c, cutoff, trunc);
}

}  // namespace

TEST_CASE("rationals stay in lowest terms") {
    Rational r(6, -4);
    CHECK(r.numerator() == -3);
    CHECK(r.denominator() == 2);
    CHECK(r.str() == "-3/2");
    CHECK((Rational(1, 3) + Rational(1, 6)) == Rational(1, 2));
    CHECK(Rational::from_string("-7/21") == Rational(-1, 3));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK(Rational(2, 3).pow(3) == Rational(8, 27));
}

TEST_CASE("monomial canonical order and weight") {
    const KappaMonomial a = KappaMonomial::first(1) * KappaMonomial::first(3);
    const KappaMonomial b = KappaMonomial::first(2, 2);
    const KappaMonomial c = KappaMonomial::first(4);
    CHECK(a.weight() == 4);
    CHECK(b.weight() == 4);
    CHECK(a < b);
    CHECK(b < c);
    // second-order pairs are unordered
    CHECK(KappaMonomial::second(2, 1) == KappaMonomial::second(1, 2));
    CHECK(KappaMonomial::second(1, 3).weight() == 4);
    // k1*k2 sorts before k{1,2} at equal weight and flat index list
    CHECK((KappaMonomial::first(1) * KappaMonomial::first(2)) < KappaMonomial::second(1, 2));
}

TEST_CASE("polynomial ring arithmetic") {
    CHECK(P("k2 + k3") - P("k3") == P("k2"));
    CHECK(P("k2") * P("k2") == P("k2^2"));
    CHECK(P("k1 + k2") * P("k1 - k2") == P("k1^2 - k2^2"));
    CHECK((P("k1") - P("k1")).is_zero());
    CHECK(P("0").is_zero());
}

TEST_CASE("canonical rendering and parse round trip") {
    const KappaPolynomial p = P("5*k4 + k2^2 + 4*k1*k3");
    CHECK(p.str() == "4*k1*k3 + k2^2 + 5*k4");
    CHECK(KappaPolynomial::parse(p.str()) == p);
    const KappaPolynomial q = P("k{2,1} + 2*k1*k{1,1} + k3 + 2*k1*k2");
    CHECK(q.str() == "2*k1*k{1,1} + 2*k1*k2 + k{1,2} + k3");
    CHECK(P("-1/2*k2 + k1").str() == "k1 - 1/2*k2");
    CHECK(P("3").str() == "3");
}

TEST_CASE("series multiplication propagates truncation") {
    const LaurentSeries inv_y = LaurentSeries::monomial(-1, KappaPolynomial(Rational(1)), 6);
    const LaurentSeries y = LaurentSeries::monomial(1, KappaPolynomial(Rational(1)), 6);
    const LaurentSeries prod = inv_y * y;
    CHECK(prod.coeff(0) == KappaPolynomial(Rational(1)));
    CHECK(prod.trunc() == 5);  // min(6 + 1, 6 + (-1)) = 5

    // (1/y + y)^2 = 1/y^2 + 2 + y^2
    const LaurentSeries f = inv_y + y;
    const LaurentSeries sq = f * f;
    CHECK(sq.coeff(-2) == KappaPolynomial(Rational(1)));
    CHECK(sq.coeff(0) == KappaPolynomial(Rational(2)));
    CHECK(sq.coeff(2) == KappaPolynomial(Rational(1)));
    CHECK(sq.coeff(-1).is_zero());
}

TEST_CASE("X(y)*y with unit cumulants is the geometric series") {
    const LaurentSeries x = ones_x(10, 10);
    const LaurentSeries prod = x * LaurentSeries::monomial(1, KappaPolynomial(Rational(1)));
    for (long d = 0; d <= 8; ++d) CHECK(prod.coeff(d) == KappaPolynomial(Rational(1)));
}

TEST_CASE("coefficient reads beyond the truncation are errors") {
    const LaurentSeries x = ones_x(4, 5);
    CHECK_THROWS_AS(x.coeff(5), TruncationTooLow);
    CHECK_NOTHROW(x.coeff(4));
    CHECK(x.coeff(-1) == KappaPolynomial(Rational(1)));
}

TEST_CASE("series reciprocal") {
    SUBCASE("reciprocal of 1 and of 1/y") {
        const LaurentSeries one = LaurentSeries::constant(KappaPolynomial(Rational(1)), 7);
        CHECK(LaurentSeries::agree(one.reciprocal(), one));
        const LaurentSeries inv_y = LaurentSeries::monomial(-1, KappaPolynomial(Rational(1)), 5);
        const LaurentSeries y = inv_y.reciprocal();
        CHECK(y.coeff(1) == KappaPolynomial(Rational(1)));
        CHECK(y.coeff(2).is_zero());
    }
    SUBCASE("1/X'(y) starts as -y^2 (1 + k2 y^2 + ...)") {
        const LaurentSeries x = build_x_generic(6, 9);
        const LaurentSeries r = x.derivative().reciprocal();
        CHECK(r.coeff(2) == P("-1"));
        CHECK(r.coeff(3).is_zero());
        CHECK(r.coeff(4) == P("-k2"));
        CHECK(r.coeff(5) == P("-2*k3"));
        const LaurentSeries prod = x.derivative() * r;
        CHECK(prod.coeff(0) == KappaPolynomial(Rational(1)));
        CHECK(LaurentSeries::agree(prod, LaurentSeries::constant(KappaPolynomial(Rational(1)))));
    }
    SUBCASE("non-invertible leading coefficients are rejected") {
        LaurentSeries s(6);
        s.set_coeff(0, P("k1"));
        CHECK_THROWS_AS(s.reciprocal(), NonInvertibleLeading);
        LaurentSeries z(4);
        CHECK_THROWS_AS(z.reciprocal(), NonInvertibleLeading);
    }
}

TEST_CASE("series derivative") {
    const LaurentSeries f = LaurentSeries::monomial(-1, KappaPolynomial(Rational(1)), 8) +
                            LaurentSeries::monomial(1, KappaPolynomial(Rational(1)), 8);
    const LaurentSeries df = f.derivative();
    CHECK(df.coeff(-2) == P("-1"));
    CHECK(df.coeff(0) == P("1"));
    CHECK(df.trunc() == 7);
    CHECK(LaurentSeries::constant(P("k3"), 5).derivative().is_zero());

    const LaurentSeries x = build_x_generic(6, 9);
    const LaurentSeries x2 = x.derivative().derivative();
    CHECK(x2.coeff(-3) == P("2"));
    CHECK(x2.coeff(0) == P("2*k3"));  // (i-1)(i-2) k_i at i = 3
    CHECK(x2.coeff(1) == P("6*k4"));
}

TEST_CASE("d/dX on basic identities") {
    const LaurentSeries x = build_x_generic(6, 10);
    SUBCASE("dX/dX = 1") {
        CHECK(LaurentSeries::agree(dx_derivative(x, x),
                                   LaurentSeries::constant(KappaPolynomial(Rational(1)))));
    }
    SUBCASE("dy/d(1/y) = -y^2") {
        const LaurentSeries bare = build_x(std::map<int, KappaPolynomial>{}, 0, 10);
        const LaurentSeries y = LaurentSeries::monomial(1, KappaPolynomial(Rational(1)), 10);
        const LaurentSeries d = dx_derivative(y, bare);
        CHECK(d.coeff(2) == P("-1"));
        CHECK(LaurentSeries::agree(d, LaurentSeries::monomial(2, P("-1"))));
    }
    SUBCASE("d(X^2)/dX = 2X") {
        CHECK(LaurentSeries::agree(dx_derivative(x * x, x), x * Rational(2)));
    }
}

TEST_CASE("residue extraction") {
    CHECK(LaurentSeries::monomial(-1, KappaPolynomial(Rational(1)), 3).residue() ==
          KappaPolynomial(Rational(1)));
    const LaurentSeries f = LaurentSeries::monomial(-2, P("1"), 4) +
                            LaurentSeries::constant(P("3"), 4) +
                            LaurentSeries::monomial(1, P("1"), 4);
    CHECK(f.residue().is_zero());
    CHECK((LaurentSeries::monomial(-1, P("k2"), 2) + LaurentSeries::constant(P("k3"), 2)).residue() ==
          P("k2"));
    LaurentSeries too_low(-1);
    CHECK_THROWS_AS(too_low.residue(), TruncationTooLow);
}

TEST_CASE("bivariate exact division by the diagonal") {
    using BL = BivariateLaurent;
    const KappaPolynomial one(Rational(1));
    SUBCASE("(y1^2 - 2 y1 y2 + y2^2) / (y1-y2)^2 = 1") {
        BL n = BL::monomial(2, 0, one) + BL::monomial(1, 1, one * Rational(-2)) +
               BL::monomial(0, 2, one);
        const BL q = exact_div_diag(n, 2);
        CHECK(q.coeff(0, 0) == one);
        CHECK(q.terms().size() == 1);
    }
    SUBCASE("(y1 - y2) / (y1-y2) = 1") {
        BL n = BL::monomial(1, 0, one) + BL::monomial(0, 1, -one);
        const BL q = exact_div_diag(n, 1);
        CHECK(q.coeff(0, 0) == one);
        CHECK(q.terms().size() == 1);
    }
    SUBCASE("(y1^2 - y2^2) / (y1-y2) = y1 + y2") {
        BL n = BL::monomial(2, 0, one) + BL::monomial(0, 2, -one);
        const BL q = exact_div_diag(n, 1);
        CHECK(q.coeff(1, 0) == one);
        CHECK(q.coeff(0, 1) == one);
        CHECK(q.terms().size() == 2);
    }
    SUBCASE("a non-divisible numerator is rejected") {
        BL n = BL::monomial(1, 0, one);
        CHECK_THROWS_AS(exact_div_diag(n, 1), NotDivisible);
    }
}

TEST_CASE("bivariate reciprocal round trip") {
    const LaurentSeries x = build_x_generic(5, kTruncInf);
    const LaurentSeries xp = x.derivative();
    const BivariateLaurent q = BivariateLaurent::tensor(xp, xp);
    const BivariateLaurent r = q.reciprocal(6, 6);
    const BivariateLaurent prod = q * r;
    const BivariateLaurent one = BivariateLaurent::monomial(0, 0, KappaPolynomial(Rational(1)),
                                                            prod.trunc1(), prod.trunc2());
    CHECK(BivariateLaurent::agree(prod, one));
}

TEST_CASE("randomized series properties") {
    std::mt19937_64 gen(424242);
    auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(gen); };
    auto rnd_poly = [&]() {
        KappaPolynomial p;
        const int terms = uniform(0, 3);
        for (int t = 0; t < terms; ++t) {
            KappaMonomial m;
            for (int f = uniform(0, 2); f > 0; --f)
                m = m * KappaMonomial::first(uniform(1, 4), uniform(1, 2));
            p.add_term(m, Rational(uniform(-5, 5), uniform(1, 3)));
        }
        return p;
    };
    auto rnd_series = [&](long min_deg, long trunc) {
        LaurentSeries s(trunc);
        for (long d = min_deg; d < trunc; ++d)
            if (uniform(0, 1)) s.set_coeff(d, rnd_poly());
        return s;
    };

    const LaurentSeries one = LaurentSeries::constant(KappaPolynomial(Rational(1)));
    for (int c = 0; c < 100; ++c) {
        // reciprocal round trip with a unit leading coefficient
        LaurentSeries a = rnd_series(uniform(-3, 1), uniform(4, 9));
        a.set_coeff(a.is_zero() ? -1 : a.min_deg() - 1,
                    KappaPolynomial(Rational(uniform(0, 1) ? 1 : -1)));
        CHECK(LaurentSeries::agree(a * a.reciprocal(), one));

        // residue of an exact derivative vanishes
        const LaurentSeries f = rnd_series(uniform(-4, -1), uniform(2, 7));
        CHECK(f.derivative().residue().is_zero());
    }
}
