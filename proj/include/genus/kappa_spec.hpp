#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "genus/kappa.hpp"
#include "genus/laurent.hpp"

namespace genus {

// Specialization rule for the first-order cumulants. Numeric presets map
// every k_i to a rational; the Stirling presets keep a single symbolic k.
enum class Preset {
    factorials,           // k_i = 1 (permutations)
    stirling1,            // k_i = k, one symbol
    bell,                 // k_i = 1 (partitions)
    stirling2,            // k_i = k
    harer_zagier,         // k_i = delta_{i,2}
    no_singletons_bell,   // k_1 = 0, k_i = 1 otherwise
    no_singletons_stirling2,  // k_1 = 0, k_i = k otherwise
    custom,
};

struct KappaValue {
    Rational scale;  // coefficient
    bool symbolic;   // multiplied by the symbol k when set
};

struct KappaSpec {
    Preset preset = Preset::custom;
    std::map<int, Rational> custom_values;  // used by Preset::custom; absent index = 0

    static KappaSpec from_name(const std::string& name);
    static KappaSpec custom(std::map<int, Rational> values);
    std::string name() const;
    bool symbolic() const;

    KappaValue value_of(int i) const;
};

// Polynomial in the single symbol k, coefficients indexed by power. Numeric
// specializations are degree 0.
using SymbolPoly = std::vector<Rational>;

bool symbol_poly_is_zero(const SymbolPoly& p);
bool symbol_poly_equal(const SymbolPoly& a, const SymbolPoly& b);
SymbolPoly symbol_poly_add(const SymbolPoly& a, const SymbolPoly& b);
// "35*k^4 + 175*k^3 + 175*k^2 + 35*k" (descending powers); "0" when empty.
std::string symbol_poly_str(const SymbolPoly& p);
Rational symbol_poly_at_one(const SymbolPoly& p);

// Evaluates a first-order polynomial under the specialization. Monomials
// containing second-order cumulants are rejected.
SymbolPoly evaluate(const KappaPolynomial& p, const KappaSpec& spec);

// X(y) with coefficients specialized; the symbol is carried as the
// placeholder indeterminate k_1 inside the series ring.
LaurentSeries build_x_specialized(const KappaSpec& spec, int cutoff, long trunc);

// Reads a series-pipeline polynomial (powers of the placeholder only) back
// into a SymbolPoly.
SymbolPoly collapse_placeholder(const KappaPolynomial& p);

// alpha_n^{(g)} under the specialization for n = 0..n_max.
std::vector<SymbolPoly> specialize_series(int g, const KappaSpec& spec, int n_max);

// m_n^{(g)} under the specialization, g <= 2 (g = 0 is the planar series,
// shared with permutations).
std::vector<SymbolPoly> specialize_series_partitions(int g, const KappaSpec& spec, int n_max);

}  // namespace genus
