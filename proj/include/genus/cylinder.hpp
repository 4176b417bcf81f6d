#pragma once

#include <map>

#include "genus/bivariate.hpp"
#include "genus/genfun_perm.hpp"

namespace genus {

// Second-order cumulant assignment: one value per unordered index pair
// {i,j}. Values are polynomials so that substitutions mixing k_{i,j} with
// first-order k_{i+j} stay representable.
struct BivariateCumulantSpec {
    int cutoff1 = 0, cutoff2 = 0;
    std::map<std::pair<int, int>, KappaPolynomial> values;  // keys canonical i <= j

    // Every k_{i,j} kept as the indeterminate itself.
    static BivariateCumulantSpec generic(int k1, int k2);
    // Every k_{i,j} set to zero.
    static BivariateCumulantSpec zero(int k1, int k2);

    const KappaPolynomial& value(int i, int j) const;
};

// k_{i,j} -> k_{i,j} + (1 - i*j) k_{i+j}: removes the overcounting of
// boundary-spanning cycles when permutations are quotiented to partitions.
// When kappa_cutoff >= 0, first-order cumulants beyond it are taken as zero
// (the convention of a ring restricted to k_1..k_K), so those shifts drop.
BivariateCumulantSpec substitute_overcount(const BivariateCumulantSpec& spec,
                                           int kappa_cutoff = -1);

// X(y1,y2) = sum value(i,j) y1^{i-1} y2^{j-1}, exact.
BivariateLaurent build_x2(const BivariateCumulantSpec& spec);

// B(y1,y2) = (X(y1) - X(y2)) / (y1 - y2); X must be exact.
BivariateLaurent divided_difference(const LaurentSeries& X);

// The series sum_{i,j>=1} (1 - i*j) k_{i+j} y1^{i-1} y2^{j-1}, computed via
// the differential operator (1/(y1 y2)) (1 - y1 d1 y2 d2) applied to
// (y1 y2 B + 1).
BivariateLaurent overcount_series(const LaurentSeries& X);
// The same series summed directly from its definition.
BivariateLaurent overcount_series_direct(int cutoff);

enum class CylKind { perm, part };
std::string cyl_kind_name(CylKind k);
CylKind cyl_kind_from_name(const std::string& s);

// The cylinder generating function of permutations,
//   (X(y1,y2) + 1/(y1-y2)^2) / (X'(y1) X'(y2)) - 1/(X(y1)-X(y2))^2,
// evaluated without diagonal poles: the singular combination equals
// E / (X'(y1) X'(y2) B^2) with E = (B^2 - X'(y1)X'(y2)) / (y1-y2)^2 obtained
// by exact division. Regular at y1 = y2 = 0; known below (trunc1, trunc2).
BivariateLaurent w2_perm(const LaurentSeries& X, const BivariateLaurent& X2, long trunc1,
                         long trunc2);

// The cylinder generating function of partitions: w2_perm plus
// overcount_series(X) / (X'(y1) X'(y2)). Must agree with w2_perm evaluated
// after substitute_overcount.
BivariateLaurent w2_part(const LaurentSeries& X, const BivariateLaurent& X2, long trunc1,
                         long trunc2);

// m^{(0)}_{i,j} (or alpha^{(0)}_{i,j} for the permutation kind): the double
// residue of W2 X(y1)^i X(y2)^j X'(y1) X'(y2), inner variable first.
KappaPolynomial m2_coefficient(CylKind kind, int i, int j);

// Brute-force check value for the first-order sector: fixes
// tau = (1..i)(i+1..i+j), sums prod k_{|cycle|} over the connected genus-0
// sigma (permutation kind), or over their distinct block images (partition
// kind). Matches m2_coefficient with every k_{a,b} set to zero.
KappaPolynomial annular_oracle(int i, int j, CylKind kind, int limit = 8);

}  // namespace genus
