#include "genus/kappa_spec.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "genus/genfun_part.hpp"
#include "genus/genfun_perm.hpp"

namespace genus {

KappaSpec KappaSpec::from_name(const std::string& name) {
    KappaSpec s;
    if (name == "factorials") s.preset = Preset::factorials;
    else if (name == "stirling1") s.preset = Preset::stirling1;
    else if (name == "bell") s.preset = Preset::bell;
    else if (name == "stirling2") s.preset = Preset::stirling2;
    else if (name == "harer-zagier") s.preset = Preset::harer_zagier;
    else if (name == "no-singletons-bell") s.preset = Preset::no_singletons_bell;
    else if (name == "no-singletons-stirling2") s.preset = Preset::no_singletons_stirling2;
    else throw std::invalid_argument("unknown preset: " + name);
    return s;
}

KappaSpec KappaSpec::custom(std::map<int, Rational> values) {
    KappaSpec s;
    s.preset = Preset::custom;
    s.custom_values = std::move(values);
    return s;
}

std::string KappaSpec::name() const {
    switch (preset) {
        case Preset::factorials: return "factorials";
        case Preset::stirling1: return "stirling1";
        case Preset::bell: return "bell";
        case Preset::stirling2: return "stirling2";
        case Preset::harer_zagier: return "harer-zagier";
        case Preset::no_singletons_bell: return "no-singletons-bell";
        case Preset::no_singletons_stirling2: return "no-singletons-stirling2";
        case Preset::custom: return "custom";
    }
    return "custom";
}

bool KappaSpec::symbolic() const {
    return preset == Preset::stirling1 || preset == Preset::stirling2 ||
           preset == Preset::no_singletons_stirling2;
}

KappaValue KappaSpec::value_of(int i) const {
    switch (preset) {
        case Preset::factorials:
        case Preset::bell:
            return {1, false};
        case Preset::stirling1:
        case Preset::stirling2:
            return {1, true};
        case Preset::harer_zagier:
            return {i == 2 ? 1 : 0, false};
        case Preset::no_singletons_bell:
            return {i == 1 ? 0 : 1, false};
        case Preset::no_singletons_stirling2:
            return {i == 1 ? Rational(0) : Rational(1), i != 1};
        case Preset::custom: {
            auto it = custom_values.find(i);
            return {it == custom_values.end() ? Rational(0) : it->second, false};
        }
    }
    return {0, false};
}

bool symbol_poly_is_zero(const SymbolPoly& p) {
    return std::all_of(p.begin(), p.end(), [](const Rational& c) { return c.is_zero(); });
}

bool symbol_poly_equal(const SymbolPoly& a, const SymbolPoly& b) {
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t k = 0; k < n; ++k) {
        const Rational ca = k < a.size() ? a[k] : Rational(0);
        const Rational cb = k < b.size() ? b[k] : Rational(0);
        if (!(ca == cb)) return false;
    }
    return true;
}

SymbolPoly symbol_poly_add(const SymbolPoly& a, const SymbolPoly& b) {
    SymbolPoly out(std::max(a.size(), b.size()), Rational(0));
    for (std::size_t k = 0; k < a.size(); ++k) out[k] += a[k];
    for (std::size_t k = 0; k < b.size(); ++k) out[k] += b[k];
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

std::string symbol_poly_str(const SymbolPoly& p) {
    std::ostringstream os;
    bool head = true;
    for (std::size_t idx = p.size(); idx-- > 0;) {
        const Rational& c = p[idx];
        if (c.is_zero()) continue;
        const Rational a = c.abs();
        if (head) {
            if (c.sign() < 0) os << '-';
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        if (idx == 0) {
            os << a.str();
        } else {
            if (!(a == Rational(1))) os << a.str() << '*';
            os << 'k';
            if (idx > 1) os << '^' << idx;
        }
        head = false;
    }
    if (head) os << '0';
    return os.str();
}

Rational symbol_poly_at_one(const SymbolPoly& p) {
    Rational s = 0;
    for (const auto& c : p) s += c;
    return s;
}

SymbolPoly evaluate(const KappaPolynomial& p, const KappaSpec& spec) {
    SymbolPoly out;
    for (const auto& [m, coef] : p.terms()) {
        if (m.has_second_order())
            throw std::invalid_argument("cannot specialize a second-order cumulant monomial: " +
                                        m.str());
        Rational c = coef;
        int power = 0;
        for (const auto& [i, e] : m.first_order()) {
            const KappaValue v = spec.value_of(i);
            c *= v.scale.pow(static_cast<unsigned>(e));
            if (c.is_zero()) break;
            if (v.symbolic) power += e;
        }
        if (c.is_zero()) continue;
        if (out.size() <= static_cast<std::size_t>(power)) out.resize(static_cast<std::size_t>(power) + 1, Rational(0));
        out[static_cast<std::size_t>(power)] += c;
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

LaurentSeries build_x_specialized(const KappaSpec& spec, int cutoff, long trunc) {
    std::map<int, KappaPolynomial> coeffs;
    for (int i = 1; i <= cutoff; ++i) {
        const KappaValue v = spec.value_of(i);
        if (v.scale.is_zero()) continue;
        coeffs.emplace(i, v.symbolic ? KappaPolynomial::kappa(1) * v.scale
                                     : KappaPolynomial(v.scale));
    }
    return build_x(coeffs, cutoff, trunc);
}

SymbolPoly collapse_placeholder(const KappaPolynomial& p) {
    SymbolPoly out;
    for (const auto& [m, coef] : p.terms()) {
        if (m.has_second_order() || m.first_order().size() > 1 ||
            (m.first_order().size() == 1 && m.first_order().front().first != 1))
            throw std::logic_error("specialized pipeline produced a non-placeholder monomial: " +
                                   m.str());
        const int power = m.is_one() ? 0 : m.first_order().front().second;
        if (out.size() <= static_cast<std::size_t>(power)) out.resize(static_cast<std::size_t>(power) + 1, Rational(0));
        out[static_cast<std::size_t>(power)] = coef;
    }
    while (!out.empty() && out.back().is_zero()) out.pop_back();
    return out;
}

std::vector<SymbolPoly> specialize_series(int g, const KappaSpec& spec, int n_max) {
    const LaurentSeries X = build_x_specialized(spec, n_max, x_trunc_budget(g, n_max));
    const auto moments = moments_of_series(w_per_genus(g, X), X, n_max);
    std::vector<SymbolPoly> out;
    out.reserve(moments.size());
    for (const auto& p : moments) out.push_back(collapse_placeholder(p));
    return out;
}

std::vector<SymbolPoly> specialize_series_partitions(int g, const KappaSpec& spec, int n_max) {
    const LaurentSeries X =
        build_x_specialized(spec, n_max, x_trunc_budget_partitions(std::max(g, 1), n_max));
    const LaurentSeries w = g == 0 ? w_per_genus(0, X) : w_par_genus(g, X);
    const auto moments = moments_of_series(w, X, n_max);
    std::vector<SymbolPoly> out;
    out.reserve(moments.size());
    for (const auto& p : moments) out.push_back(collapse_placeholder(p));
    return out;
}

}  // namespace genus
