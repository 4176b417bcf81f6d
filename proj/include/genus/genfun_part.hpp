#pragma once

#include <vector>

#include "genus/genfun_perm.hpp"
#include "genus/laurent.hpp"

namespace genus {

// One summand of the bracketed rational expression for the genus-1 or
// genus-2 partition generating function: coef * y^{-y_pow} * X'^{-xp_pow}
// times the listed higher derivatives of X.
struct PartitionBracketTerm {
    Rational coef;
    int y_pow;
    int xp_pow;
    std::vector<int> derivative_orders;
};

// The fixed term tables; g must be 1 or 2.
const std::vector<PartitionBracketTerm>& partition_bracket(int g);

// W^{(g)}_par(X(y)) for g in {1,2}: one d/dX applied to the bracket. The
// result must be regular at y = 0; a negative-degree term raises
// RegularityViolated (it would indicate a corrupted term table).
LaurentSeries w_par_genus(int g, const LaurentSeries& X);

// m_n^{(g)} over generic cumulants; requires cutoff >= n, g in {1,2}.
KappaPolynomial m_coefficient(int g, int n, int cutoff);

// m_n^{(g)} for all n = 0..n_max, sharing one series evaluation.
std::vector<KappaPolynomial> m_coefficients(int g, int n_max);

// Truncation order for X sufficient for m_n^{(g)} extraction.
long x_trunc_budget_partitions(int g, int n);

// Genus-1 partitions of {1,...,pk} with all blocks of size p, in closed form.
// Zero when p < 2 or k < 2 (no such partitions exist).
BigInt faa_di_bruno_m1(int p, int k);

// Genus-1 partitions with exactly three blocks of pairwise distinct sizes
// r, p, q. Throws NotPairwiseDistinct otherwise.
BigInt three_block_m1(int r, int p, int q);

}  // namespace genus
