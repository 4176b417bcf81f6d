#pragma once

#include <map>
#include <vector>

#include "genus/counting.hpp"
#include "genus/laurent.hpp"

namespace genus {

// The cumulant generating series X(y) = 1/y + sum_{i<=cutoff} c_i y^{i-1}.
LaurentSeries build_x(const std::map<int, KappaPolynomial>& coefficients, int cutoff, long trunc);
// Same with generic indeterminate coefficients c_i = k_i.
LaurentSeries build_x_generic(int cutoff, long trunc);

// Evaluation plan for the genus-g permutation generating function: one term
// per integer partition [a] of g, applying (-d/dX)^{2g+l-1} to
// (-1/X') * prod X^{(2a_i)} / (4^{a_i} (2a_i+1)!), all divided by sym(a).
struct GenusTermPlan {
    struct Term {
        IntegerPartition a;
        int order;                          // 2g + l - 1
        Rational sym_factor;                // 1 / sym(a)
        std::vector<int> derivative_orders; // [2a_1, ..., 2a_l]

        // sym_factor times the Taylor weights of the derivative factors.
        Rational combined_factor() const;
    };

    int g = 0;
    std::vector<Term> terms;

    static GenusTermPlan for_genus(int g);
};

// Taylor weight 1/(4^k (2k+1)!), the t^{2k} coefficient of
// (e^{t/2} - e^{-t/2})/t.
Rational midpoint_taylor_weight(int k);

// W^{(g)}_per(X(y)) as a power series in y. g = 0 returns y.
LaurentSeries w_per_genus(int g, const LaurentSeries& X);

// The same family extracted from the hbar/u expansion of
// exp(sum_k X^{(2k)} hbar^{2k} u^{2k+1} / (4^k (2k+1)!)): entry g must agree
// with w_per_genus(g, X) coefficient for coefficient. Entry 0 is y.
std::vector<LaurentSeries> w_per_hbar(int g_max, const LaurentSeries& X);

// Truncation order for X sufficient to extract moments up to n at genus g:
// n + 2 plus the plan's mechanical derivative budget plus slack. The residue
// step re-checks that degree -1 landed inside the window.
long x_trunc_budget(int g, int n);

// -Res_{y->0} w(y) X(y)^n X'(y): the n-th moment of a genus series.
KappaPolynomial extract_moment(const LaurentSeries& w, const LaurentSeries& X, int n);

// alpha_n^{(g)} over generic cumulants k_1..k_cutoff; requires cutoff >= n.
KappaPolynomial alpha_coefficient(int g, int n, int cutoff);

// alpha_n^{(g)} for all n = 0..n_max, sharing one series evaluation.
std::vector<KappaPolynomial> alpha_coefficients(int g, int n_max);

// Batched moments of an externally built X (used for specializations).
std::vector<KappaPolynomial> moments_of_series(const LaurentSeries& w, const LaurentSeries& X,
                                               int n_max);

}  // namespace genus
