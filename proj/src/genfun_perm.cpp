#include "genus/genfun_perm.hpp"

#include <algorithm>
#include <stdexcept>

#include "genus/errors.hpp"

namespace genus {

LaurentSeries build_x(const std::map<int, KappaPolynomial>& coefficients, int cutoff, long trunc) {
    LaurentSeries x(trunc);
    x.set_coeff(-1, KappaPolynomial(Rational(1)));
    for (const auto& [i, c] : coefficients) {
        if (i < 1) throw std::invalid_argument("cumulant index must be >= 1");
        if (i > cutoff) continue;
        if (i - 1 < trunc) x.set_coeff(i - 1, c);
    }
    return x;
}

LaurentSeries build_x_generic(int cutoff, long trunc) {
    std::map<int, KappaPolynomial> c;
    for (int i = 1; i <= cutoff; ++i) c.emplace(i, KappaPolynomial::kappa(i));
    return build_x(c, cutoff, trunc);
}

Rational midpoint_taylor_weight(int k) {
    return Rational(1) / Rational(int_pow(4, static_cast<unsigned>(k)) * factorial(2 * k + 1));
}

Rational GenusTermPlan::Term::combined_factor() const {
    Rational f = sym_factor;
    for (int o : derivative_orders) f *= midpoint_taylor_weight(o / 2);
    return f;
}

GenusTermPlan GenusTermPlan::for_genus(int g) {
    GenusTermPlan plan;
    plan.g = g;
    for (const auto& a : IntegerPartition::all_of(g)) {
        Term t;
        t.a = a;
        t.order = 2 * g + a.length() - 1;
        t.sym_factor = Rational(1) / Rational(a.symmetry_factor());
        for (int part : a.parts) t.derivative_orders.push_back(2 * part);
        plan.terms.push_back(std::move(t));
    }
    return plan;
}

LaurentSeries w_per_genus(int g, const LaurentSeries& X) {
    if (g < 0) throw std::invalid_argument("negative genus");
    if (g == 0) {
        // The planar series is the formal inverse of X: W^{(0)}(X(y)) = y.
        return LaurentSeries::monomial(1, KappaPolynomial(Rational(1)), sat_add(X.trunc(), 2));
    }
    const GenusTermPlan plan = GenusTermPlan::for_genus(g);
    const DxOperator ddx(X);
    std::vector<LaurentSeries> deriv(static_cast<std::size_t>(2 * g) + 1);
    deriv[0] = X;
    for (int k = 1; k <= 2 * g; ++k) deriv[static_cast<std::size_t>(k)] = deriv[static_cast<std::size_t>(k - 1)].derivative();

    LaurentSeries acc(sat_add(X.trunc(), 2));
    for (const auto& term : plan.terms) {
        LaurentSeries f = -ddx.recip_xprime() * term.combined_factor();
        for (int o : term.derivative_orders) f = f * deriv[static_cast<std::size_t>(o)];
        for (int k = 0; k < term.order; ++k) f = -ddx(f);
        acc = acc + f;
    }
    if (acc.trunc() <= 0)
        throw TruncationTooLow("X is truncated too low to evaluate the genus-" + std::to_string(g) +
                               " series");
    return acc;
}

std::vector<LaurentSeries> w_per_hbar(int g_max, const LaurentSeries& X) {
    if (g_max < 0) throw std::invalid_argument("negative genus");
    std::vector<LaurentSeries> out;
    out.push_back(w_per_genus(0, X));
    if (g_max == 0) return out;

    std::vector<LaurentSeries> deriv(static_cast<std::size_t>(2 * g_max) + 1);
    deriv[0] = X;
    for (int k = 1; k <= 2 * g_max; ++k)
        deriv[static_cast<std::size_t>(k)] = deriv[static_cast<std::size_t>(k - 1)].derivative();

    // The exponent sum(k>=1) X^{(2k)} hbar^{2k} u^{2k+1} / (4^k (2k+1)!) as a
    // polynomial in (hbar^2, u) with series coefficients, exponent-bounded by
    // the target: hbar^2-degree <= g_max, u-degree <= 3*g_max.
    using Key = std::pair<int, int>;  // (hbar^2 power, u power)
    const int umax = 3 * g_max;
    std::map<Key, LaurentSeries> arg;
    for (int k = 1; k <= g_max; ++k)
        if (2 * k + 1 <= umax)
            arg[{k, 2 * k + 1}] = deriv[static_cast<std::size_t>(2 * k)] * midpoint_taylor_weight(k);

    auto bounded_mul = [&](const std::map<Key, LaurentSeries>& a,
                           const std::map<Key, LaurentSeries>& b) {
        std::map<Key, LaurentSeries> prod;
        for (const auto& [ka, va] : a)
            for (const auto& [kb, vb] : b) {
                const Key k{ka.first + kb.first, ka.second + kb.second};
                if (k.first > g_max || k.second > umax) continue;
                auto it = prod.find(k);
                if (it == prod.end()) prod.emplace(k, va * vb);
                else it->second = it->second + va * vb;
            }
        return prod;
    };

    // exp(arg) by bounded powers; arg has hbar^2-order >= 1, so g_max powers suffice.
    std::map<Key, LaurentSeries> expo;
    expo[{0, 0}] = LaurentSeries::constant(KappaPolynomial(Rational(1)));
    std::map<Key, LaurentSeries> power = expo;
    Rational inv_fact(1);
    for (int r = 1; r <= g_max; ++r) {
        power = bounded_mul(power, arg);
        if (power.empty()) break;
        inv_fact /= Rational(r);
        for (const auto& [k, v] : power) {
            auto it = expo.find(k);
            const LaurentSeries scaled = v * inv_fact;
            if (it == expo.end()) expo.emplace(k, scaled);
            else it->second = it->second + scaled;
        }
    }

    const DxOperator ddx(X);
    for (int g = 1; g <= g_max; ++g) {
        LaurentSeries w(sat_add(X.trunc(), 2));
        // [u^m] of exp(...)/u is the u^{m+1} coefficient; apply
        // (-d/dX)^m (-dy/dX) to each.
        for (const auto& [k, v] : expo) {
            if (k.first != g) continue;
            const int m = k.second - 1;
            if (m < 0) continue;
            LaurentSeries f = -ddx.recip_xprime() * v;
            for (int s = 0; s < m; ++s) f = -ddx(f);
            w = w + f;
        }
        out.push_back(std::move(w));
    }
    return out;
}

long x_trunc_budget(int g, int n) {
    long budget = 0;
    for (const auto& term : GenusTermPlan::for_genus(g).terms) {
        const int dmax = term.derivative_orders.empty()
                             ? 0
                             : *std::max_element(term.derivative_orders.begin(),
                                                 term.derivative_orders.end());
        budget += term.order + dmax;
    }
    return n + 2 + budget + 4;
}

KappaPolynomial extract_moment(const LaurentSeries& w, const LaurentSeries& X, int n) {
    const LaurentSeries integrand = w * X.pow(static_cast<unsigned>(n)) * X.derivative();
    return -integrand.residue();
}

std::vector<KappaPolynomial> moments_of_series(const LaurentSeries& w, const LaurentSeries& X,
                                               int n_max) {
    std::vector<KappaPolynomial> out;
    out.reserve(static_cast<std::size_t>(n_max) + 1);
    const LaurentSeries xp = X.derivative();
    LaurentSeries xpow = LaurentSeries::constant(KappaPolynomial(Rational(1)));
    for (int n = 0; n <= n_max; ++n) {
        const LaurentSeries integrand = w * xpow * xp;
        out.push_back(-integrand.residue());
        if (n < n_max) xpow = xpow * X;
    }
    return out;
}

KappaPolynomial alpha_coefficient(int g, int n, int cutoff) {
    if (cutoff < n)
        throw std::invalid_argument("cumulant cutoff " + std::to_string(cutoff) +
                                    " is below n = " + std::to_string(n));
    const LaurentSeries X = build_x_generic(cutoff, x_trunc_budget(g, n));
    return extract_moment(w_per_genus(g, X), X, n);
}

std::vector<KappaPolynomial> alpha_coefficients(int g, int n_max) {
    const LaurentSeries X = build_x_generic(n_max, x_trunc_budget(g, n_max));
    return moments_of_series(w_per_genus(g, X), X, n_max);
}

}  // namespace genus
