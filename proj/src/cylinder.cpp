#include "genus/cylinder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "genus/errors.hpp"
#include "genus/permutations.hpp"

namespace genus {

namespace {
const KappaPolynomial kZeroPoly;
}

BivariateCumulantSpec BivariateCumulantSpec::generic(int k1, int k2) {
    BivariateCumulantSpec s;
    s.cutoff1 = k1;
    s.cutoff2 = k2;
    for (int i = 1; i <= std::max(k1, k2); ++i)
        for (int j = i; j <= std::max(k1, k2); ++j)
            s.values.emplace(std::pair<int, int>{i, j}, KappaPolynomial::kappa2(i, j));
    return s;
}

BivariateCumulantSpec BivariateCumulantSpec::zero(int k1, int k2) {
    BivariateCumulantSpec s;
    s.cutoff1 = k1;
    s.cutoff2 = k2;
    return s;
}

const KappaPolynomial& BivariateCumulantSpec::value(int i, int j) const {
    auto it = values.find({std::min(i, j), std::max(i, j)});
    return it == values.end() ? kZeroPoly : it->second;
}

BivariateCumulantSpec substitute_overcount(const BivariateCumulantSpec& spec, int kappa_cutoff) {
    BivariateCumulantSpec out = spec;
    for (int i = 1; i <= std::max(spec.cutoff1, spec.cutoff2); ++i)
        for (int j = i; j <= std::max(spec.cutoff1, spec.cutoff2); ++j) {
            const Rational shift(1 - i * j);
            if (shift.is_zero()) continue;
            if (kappa_cutoff >= 0 && i + j > kappa_cutoff) continue;
            KappaPolynomial v = spec.value(i, j);
            v += KappaPolynomial::kappa(i + j) * shift;
            if (v.is_zero()) out.values.erase({i, j});
            else out.values[{i, j}] = v;
        }
    return out;
}

BivariateLaurent build_x2(const BivariateCumulantSpec& spec) {
    BivariateLaurent x2;
    for (int i = 1; i <= spec.cutoff1; ++i)
        for (int j = 1; j <= spec.cutoff2; ++j) x2.add_term(i - 1, j - 1, spec.value(i, j));
    return x2;
}

BivariateLaurent divided_difference(const LaurentSeries& X) {
    if (!X.is_exact())
        throw std::invalid_argument("divided difference needs an exact (finitely supported) series");
    BivariateLaurent b;
    for (long d = X.min_deg(); d <= X.max_deg(); ++d) {
        const KappaPolynomial& c = X.coeff(d);
        if (c.is_zero() || d == 0) continue;
        if (d > 0) {
            // (y1^d - y2^d)/(y1-y2) = sum_{a+b=d-1} y1^a y2^b
            for (long a = 0; a <= d - 1; ++a) b.add_term(a, d - 1 - a, c);
        } else {
            // (y1^d - y2^d)/(y1-y2) = -sum_{a+b=-d-1} y1^{d+a} y2^{d+b}
            for (long a = 0; a <= -d - 1; ++a) b.add_term(d + a, -1 - a, -c);
        }
    }
    return b;
}

BivariateLaurent overcount_series(const LaurentSeries& X) {
    const BivariateLaurent inner =
        divided_difference(X).shifted(1, 1) +
        BivariateLaurent::monomial(0, 0, KappaPolynomial(Rational(1)));
    const BivariateLaurent acted = inner - inner.theta_both();
    return acted.shifted(-1, -1);
}

BivariateLaurent overcount_series_direct(int cutoff) {
    BivariateLaurent s;
    for (int i = 1; i <= cutoff; ++i)
        for (int j = 1; j + i <= cutoff; ++j) {
            const Rational c(1 - i * j);
            if (c.is_zero()) continue;
            s.add_term(i - 1, j - 1, KappaPolynomial::kappa(i + j) * c);
        }
    return s;
}

std::string cyl_kind_name(CylKind k) { return k == CylKind::perm ? "perm" : "part"; }

CylKind cyl_kind_from_name(const std::string& s) {
    if (s == "perm" || s == "permutation") return CylKind::perm;
    if (s == "part" || s == "partition") return CylKind::part;
    throw std::invalid_argument("unknown cylinder kind: " + s);
}

namespace {

struct CylinderPieces {
    BivariateLaurent recip_xp_xp;  // 1/(X'(y1) X'(y2))
    BivariateLaurent regularized;  // E / (X'(y1) X'(y2) B^2)
};

CylinderPieces cylinder_pieces(const LaurentSeries& X, long t1, long t2) {
    const LaurentSeries xp = X.derivative();
    const BivariateLaurent b = divided_difference(X);
    const BivariateLaurent xp_xp = BivariateLaurent::tensor(xp, xp);
    // B^2 - X'(y1)X'(y2) vanishes to second order on the diagonal.
    const BivariateLaurent e = exact_div_diag(b * b - xp_xp, 2);
    const BivariateLaurent q = xp_xp * b * b;
    CylinderPieces p;
    p.recip_xp_xp = BivariateLaurent::tensor(xp.reciprocal(t1), xp.reciprocal(t2));
    p.regularized = e * q.reciprocal(t1, t2);
    return p;
}

}  // namespace

BivariateLaurent w2_perm(const LaurentSeries& X, const BivariateLaurent& X2, long trunc1,
                         long trunc2) {
    const CylinderPieces p = cylinder_pieces(X, trunc1, trunc2);
    return X2 * p.recip_xp_xp + p.regularized;
}

BivariateLaurent w2_part(const LaurentSeries& X, const BivariateLaurent& X2, long trunc1,
                         long trunc2) {
    const CylinderPieces p = cylinder_pieces(X, trunc1, trunc2);
    return (X2 + overcount_series(X)) * p.recip_xp_xp + p.regularized;
}

KappaPolynomial m2_coefficient(CylKind kind, int i, int j) {
    const int cutoff = i + j;
    const long t1 = i + 6, t2 = j + 6;
    const LaurentSeries X = build_x_generic(cutoff, kTruncInf);
    const BivariateCumulantSpec spec = BivariateCumulantSpec::generic(cutoff, cutoff);
    const BivariateLaurent X2 = build_x2(spec);
    const BivariateLaurent w2 =
        kind == CylKind::perm ? w2_perm(X, X2, t1, t2) : w2_part(X, X2, t1, t2);
    const LaurentSeries xp = X.derivative();
    const BivariateLaurent integrand = w2 * BivariateLaurent::tensor(
        X.pow(static_cast<unsigned>(i)) * xp, X.pow(static_cast<unsigned>(j)) * xp);
    return integrand.residue_y2().residue();
}

KappaPolynomial annular_oracle(int i, int j, CylKind kind, int limit) {
    const int n = i + j;
    if (n > limit)
        throw OracleLimitExceeded("annular oracle limit " + std::to_string(limit) +
                                  " exceeded by i+j = " + std::to_string(n));
    std::vector<std::vector<int>> tau_cycles(2);
    for (int v = 1; v <= i; ++v) tau_cycles[0].push_back(v);
    for (int v = i + 1; v <= n; ++v) tau_cycles[1].push_back(v);
    const Permutation tau = Permutation::from_cycles(n, tau_cycles);

    KappaPolynomial acc;
    std::set<std::vector<std::vector<int>>> seen_blocks;
    std::vector<int> images(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) images[static_cast<std::size_t>(v)] = v;
    do {
        const Permutation sigma(images);
        if (!pair_connected(sigma, tau)) continue;
        if (genus_of_pair(sigma, tau) != 0) continue;
        auto cycles = sigma.cycles();
        if (kind == CylKind::part) {
            for (auto& c : cycles) std::sort(c.begin(), c.end());
            std::sort(cycles.begin(), cycles.end());
            if (!seen_blocks.insert(cycles).second) continue;
        }
        KappaMonomial m;
        for (const auto& c : cycles) m = m * KappaMonomial::first(static_cast<int>(c.size()));
        acc.add_term(m, 1);
    } while (std::next_permutation(images.begin(), images.end()));
    return acc;
}

}  // namespace genus
