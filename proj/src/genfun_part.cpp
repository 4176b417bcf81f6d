#include "genus/genfun_part.hpp"

#include <stdexcept>

#include "genus/errors.hpp"

namespace genus {

const std::vector<PartitionBracketTerm>& partition_bracket(int g) {
    static const std::vector<PartitionBracketTerm> g1 = {
        {{1, 4}, 4, 2, {}},
        {{1, 6}, 6, 3, {}},
    };
    static const std::vector<PartitionBracketTerm> g2 = {
        {{21, 8}, 8, 4, {}},
        {{74, 5}, 10, 5, {}},
        {24, 12, 6, {}},
        {12, 14, 7, {}},
        {{-1, 8}, 8, 6, {3}},
        {{-1, 4}, 10, 7, {3}},
        {{-1, 8}, 12, 8, {3}},
        {{1, 24}, 6, 6, {2, 2}},
        {1, 8, 7, {2, 2}},
        {{19, 8}, 10, 8, {2, 2}},
        {{35, 24}, 12, 9, {2, 2}},
        {1, 7, 5, {2}},
        {{23, 3}, 9, 6, {2}},
        {{29, 2}, 11, 7, {2}},
        {8, 13, 8, {2}},
    };
    if (g == 1) return g1;
    if (g == 2) return g2;
    throw UnsupportedGenus("no closed partition generating function for genus " +
                           std::to_string(g) + " (supported: 1 and 2)");
}

LaurentSeries w_par_genus(int g, const LaurentSeries& X) {
    const auto& bracket = partition_bracket(g);
    const DxOperator ddx(X);
    std::vector<LaurentSeries> deriv(4);
    deriv[0] = X;
    for (int k = 1; k <= 3; ++k) deriv[static_cast<std::size_t>(k)] = deriv[static_cast<std::size_t>(k - 1)].derivative();

    int max_xp_pow = 0;
    for (const auto& t : bracket) max_xp_pow = std::max(max_xp_pow, t.xp_pow);
    std::vector<LaurentSeries> rpow(static_cast<std::size_t>(max_xp_pow) + 1);
    rpow[0] = LaurentSeries::constant(KappaPolynomial(Rational(1)));
    for (int k = 1; k <= max_xp_pow; ++k) rpow[static_cast<std::size_t>(k)] = rpow[static_cast<std::size_t>(k - 1)] * ddx.recip_xprime();

    LaurentSeries acc(sat_add(X.trunc(), 2));
    for (const auto& t : bracket) {
        LaurentSeries f = rpow[static_cast<std::size_t>(t.xp_pow)].shifted(-t.y_pow) * t.coef;
        for (int o : t.derivative_orders) f = f * deriv[static_cast<std::size_t>(o)];
        acc = acc + f;
    }
    LaurentSeries w = ddx(acc);
    if (!w.is_zero() && w.min_deg() < 0)
        throw RegularityViolated("genus-" + std::to_string(g) +
                                 " partition series has a pole at y = 0: " + w.str());
    if (w.trunc() <= 0)
        throw TruncationTooLow("X is truncated too low to evaluate the genus-" +
                               std::to_string(g) + " partition series");
    return w;
}

long x_trunc_budget_partitions(int g, int n) {
    // Bracket derivatives reach order 3, plus the outer d/dX.
    return n + 2 + 4 + 2 * g + 4;
}

KappaPolynomial m_coefficient(int g, int n, int cutoff) {
    if (cutoff < n)
        throw std::invalid_argument("cumulant cutoff " + std::to_string(cutoff) +
                                    " is below n = " + std::to_string(n));
    const LaurentSeries X = build_x_generic(cutoff, x_trunc_budget_partitions(g, n));
    return extract_moment(w_par_genus(g, X), X, n);
}

std::vector<KappaPolynomial> m_coefficients(int g, int n_max) {
    const LaurentSeries X = build_x_generic(n_max, x_trunc_budget_partitions(g, n_max));
    return moments_of_series(w_par_genus(g, X), X, n_max);
}

BigInt faa_di_bruno_m1(int p, int k) {
    if (p < 2 || k < 2) return 0;
    const int n = p * k;
    Rational sum = 0;
    for (int l = 0; l <= k - 2; ++l) {
        const BigInt tri = BigInt(k - 1 - l) * BigInt(k - l) * BigInt(k + 1 - l);
        sum += Rational(binomial(n, l) * tri * int_pow(p - 1, static_cast<unsigned>(k - 2 - l)), 6);
    }
    const Rational val = Rational(BigInt(p - 1) * (p - 1) * p, 2) * sum;
    return val.to_integer();
}

BigInt three_block_m1(int r, int p, int q) {
    if (r < 1 || p < 1 || q < 1) throw std::invalid_argument("block sizes must be positive");
    if (r == p || p == q || r == q)
        throw NotPairwiseDistinct("block sizes " + std::to_string(r) + "," + std::to_string(p) +
                                  "," + std::to_string(q) + " must be pairwise distinct");
    const long n = r + p + q;
    const long bracket = static_cast<long>(p) * (p - 1) * (q + r - 2) +
                         static_cast<long>(q) * (q - 1) * (p + r - 2) +
                         static_cast<long>(r) * (r - 1) * (q + p - 2) +
                         8L * (p - 1) * (r - 1) * (q - 1);
    const Rational val = Rational(n) * Rational(bracket) / Rational(2);
    return val.to_integer();
}

}  // namespace genus
