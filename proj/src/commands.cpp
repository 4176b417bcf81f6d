#include "genus/commands.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "genus/cylinder.hpp"
#include "genus/errors.hpp"
#include "genus/genfun_part.hpp"
#include "genus/genfun_perm.hpp"
#include "genus/kappa_spec.hpp"
#include "genus/serialize.hpp"
#include "genus/verify.hpp"

namespace genus {

namespace {

using nlohmann::ordered_json;

std::pair<int, int> checked_range(int lo, int hi, const std::string& what) {
    if (lo < 0 || hi < lo) throw std::invalid_argument("empty or missing " + what + " range");
    return {lo, hi};
}

std::string effective_cache_dir(const JobConfig& cfg) {
    if (!cfg.cache_dir.empty()) return cfg.cache_dir;
    if (const char* env = std::getenv("GENUSCOUNT_CACHE_DIR")) return env;
    return {};
}

void emit_json(std::ostream& out, const ordered_json& j) { out << j.dump(2) << '\n'; }

// ---- table ------------------------------------------------------------------

std::string table_params(Kind kind, int n) {
    return "table|v" + std::to_string(kSchemaVersion) + "|" + kind_name(kind) + "|" +
           std::to_string(n);
}

GenusTable table_with_cache(const JobConfig& cfg, Kind kind, int n, const OracleOptions& opts,
                            std::ostream& err) {
    const std::string dir = effective_cache_dir(cfg);
    const std::string checksum = params_checksum(table_params(kind, n));
    std::filesystem::path file;
    if (!dir.empty()) {
        file = std::filesystem::path(dir) /
               ("table-" + kind_name(kind) + "-n" + std::to_string(n) + ".json");
        std::ifstream in(file);
        if (in) {
            try {
                nlohmann::json j;
                in >> j;
                if (j.value("params_checksum", "") == checksum) {
                    GenusTable t = table_from_json(j);
                    if (t.n == n && t.kind == kind) return t;
                }
            } catch (const std::exception&) {
                // unreadable cache entries are recomputed
            }
            err << "note: ignoring stale cache entry " << file.string() << '\n';
        }
    }
    GenusTable t = enumerate_genus_table(n, kind, opts);
    if (!dir.empty()) {
        std::error_code ec;
        std::filesystem::create_directories(dir, ec);
        ordered_json j = table_to_json(t);
        j["params_checksum"] = checksum;
        std::ofstream outf(file);
        if (outf) outf << j.dump(2) << '\n';
        else err << "note: could not write cache entry " << file.string() << '\n';
    }
    return t;
}

int cmd_table(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    const Kind kind = kind_from_name(cfg.kind);
    const auto [n_lo, n_hi] = checked_range(cfg.n_lo, cfg.n_hi, "--n");
    OracleOptions opts;
    opts.jobs = cfg.jobs;
    if (cfg.oracle_limit > 0) {
        opts.permutation_limit = cfg.oracle_limit;
        opts.partition_limit = cfg.oracle_limit;
    }

    std::vector<GenusTable> tables;
    for (int n = n_lo; n <= n_hi; ++n) tables.push_back(table_with_cache(cfg, kind, n, opts, err));

    if (cfg.format == "json") {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "table";
        j["kind"] = kind_name(kind);
        auto arr = ordered_json::array();
        for (const auto& t : tables) arr.push_back(table_to_json(t));
        j["tables"] = std::move(arr);
        emit_json(out, j);
    } else if (cfg.format == "csv") {
        out << "n,g,type,count\n";
        for (const auto& t : tables)
            for (const auto& [key, c] : t.counts) {
                out << t.n << ',' << key.first << ',';
                for (std::size_t k = 0; k < key.second.parts.size(); ++k)
                    out << (k ? " " : "") << key.second.parts[k];
                out << ',' << c.get_str() << '\n';
            }
    } else {
        for (const auto& t : tables) {
            out << kind_name(kind) << " n=" << t.n << " (total " << t.total().get_str() << ")\n";
            for (const auto& [key, c] : t.counts)
                out << "  g=" << key.first << " type=" << key.second.str() << " count="
                    << c.get_str() << '\n';
        }
    }
    return 0;
}

// ---- moments ----------------------------------------------------------------

int cmd_moments(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    const Kind kind = kind_from_name(cfg.kind);
    const auto [n_lo, n_hi] = checked_range(cfg.n_lo, cfg.n_hi, "--n");
    const auto [g_lo, g_hi] = checked_range(cfg.g_lo, cfg.g_hi, "--g");
    if (kind == Kind::partition && g_hi > 2)
        throw UnsupportedGenus(
            "no closed partition moment formula above genus 2; request --g <= 2");

    const bool specialized = !cfg.preset.empty();
    KappaSpec spec;
    if (specialized) {
        spec = cfg.preset == "custom" ? KappaSpec::custom(parse_custom_kappa(cfg.custom_kappa))
                                      : KappaSpec::from_name(cfg.preset);
    }

    struct Record {
        int g, n;
        std::string value;
    };
    std::vector<Record> records;
    for (int g = g_lo; g <= g_hi; ++g) {
        if (specialized) {
            const auto series = kind == Kind::permutation
                                    ? specialize_series(g, spec, n_hi)
                                    : specialize_series_partitions(g, spec, n_hi);
            for (int n = n_lo; n <= n_hi; ++n)
                records.push_back({g, n, symbol_poly_str(series[static_cast<std::size_t>(n)])});
        } else if (cfg.cutoff > 0 || cfg.trunc > 0) {
            for (int n = n_lo; n <= n_hi; ++n) {
                const int cutoff = cfg.cutoff > 0 ? cfg.cutoff : n;
                const long trunc = cfg.trunc > 0
                                       ? cfg.trunc
                                       : (kind == Kind::permutation
                                              ? x_trunc_budget(g, n)
                                              : x_trunc_budget_partitions(std::max(g, 1), n));
                const LaurentSeries X = build_x_generic(cutoff, trunc);
                const LaurentSeries w = kind == Kind::permutation
                                            ? w_per_genus(g, X)
                                            : (g == 0 ? w_per_genus(0, X) : w_par_genus(g, X));
                records.push_back({g, n, extract_moment(w, X, n).str()});
            }
        } else {
            const auto polys = kind == Kind::permutation
                                   ? alpha_coefficients(g, n_hi)
                                   : (g == 0 ? alpha_coefficients(0, n_hi)
                                             : m_coefficients(g, n_hi));
            for (int n = n_lo; n <= n_hi; ++n)
                records.push_back({g, n, polys[static_cast<std::size_t>(n)].str()});
        }
    }

    const char* value_key = specialized ? "value" : "poly";
    if (cfg.format == "json") {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "moments";
        j["kind"] = kind_name(kind);
        if (specialized) j["preset"] = spec.name();
        auto arr = ordered_json::array();
        for (const auto& r : records) {
            ordered_json e;
            e["g"] = r.g;
            e["n"] = r.n;
            e[value_key] = r.value;
            arr.push_back(std::move(e));
        }
        j["records"] = std::move(arr);
        emit_json(out, j);
    } else if (cfg.format == "csv") {
        out << "g,n," << value_key << '\n';
        for (const auto& r : records) out << r.g << ',' << r.n << ",\"" << r.value << "\"\n";
    } else {
        const char* label = kind == Kind::permutation ? "alpha" : "m";
        if (specialized) {
            for (int g = g_lo; g <= g_hi; ++g) {
                out << "g=" << g << ": ";
                bool head = true;
                for (const auto& r : records)
                    if (r.g == g) {
                        out << (head ? "" : ", ") << r.value;
                        head = false;
                    }
                out << '\n';
            }
        } else {
            for (const auto& r : records)
                out << label << "[g=" << r.g << ", n=" << r.n << "] = " << r.value << '\n';
        }
    }
    return 0;
}

// ---- cylinder -----------------------------------------------------------------

int cmd_cylinder(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    const CylKind kind = cyl_kind_from_name(cfg.kind);
    const auto [i_lo, i_hi] = checked_range(cfg.i_lo, cfg.i_hi, "--i");
    const auto [j_lo, j_hi] = checked_range(cfg.j_lo, cfg.j_hi, "--j");
    const int budget = cfg.cutoff > 0 ? cfg.cutoff : 10;
    if (i_hi + j_hi > budget)
        throw std::invalid_argument("i+j = " + std::to_string(i_hi + j_hi) +
                                    " exceeds the cylinder budget " + std::to_string(budget) +
                                    "; raise --cutoff");

    struct Record {
        int i, j;
        std::string poly;
    };
    std::vector<Record> records;
    for (int i = i_lo; i <= i_hi; ++i)
        for (int j = j_lo; j <= j_hi; ++j) {
            KappaPolynomial p = m2_coefficient(kind, i, j);
            if (cfg.second_order_zero) p = p.first_order_part();
            records.push_back({i, j, p.str()});
        }

    if (cfg.format == "json") {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "cylinder";
        j["kind"] = cyl_kind_name(kind);
        if (cfg.second_order_zero) j["second_order_zero"] = true;
        auto arr = ordered_json::array();
        for (const auto& r : records) {
            ordered_json e;
            e["i"] = r.i;
            e["j"] = r.j;
            e["poly"] = r.poly;
            arr.push_back(std::move(e));
        }
        j["records"] = std::move(arr);
        emit_json(out, j);
    } else if (cfg.format == "csv") {
        out << "i,j,poly\n";
        for (const auto& r : records) out << r.i << ',' << r.j << ",\"" << r.poly << "\"\n";
    } else {
        for (const auto& r : records)
            out << "m2[" << cyl_kind_name(kind) << ", i=" << r.i << ", j=" << r.j << "] = "
                << r.poly << '\n';
    }
    return 0;
}

// ---- series -------------------------------------------------------------------

int cmd_series(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    const Kind kind = kind_from_name(cfg.kind);
    if (cfg.preset.empty()) throw std::invalid_argument("series requires --preset");
    const KappaSpec spec = cfg.preset == "custom"
                               ? KappaSpec::custom(parse_custom_kappa(cfg.custom_kappa))
                               : KappaSpec::from_name(cfg.preset);
    const auto [g_lo, g_hi] = checked_range(cfg.g_lo, cfg.g_hi, "--g");
    const int n_max = cfg.n_hi >= 0 ? cfg.n_hi : 10;
    if (kind == Kind::partition && g_hi > 2)
        throw UnsupportedGenus(
            "no closed partition moment formula above genus 2; request --g <= 2");

    ordered_json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "series";
    j["kind"] = kind_name(kind);
    j["preset"] = spec.name();
    auto arr = ordered_json::array();
    std::ostringstream text;
    for (int g = g_lo; g <= g_hi; ++g) {
        const auto series = kind == Kind::permutation ? specialize_series(g, spec, n_max)
                                                      : specialize_series_partitions(g, spec, n_max);
        ordered_json e;
        e["g"] = g;
        auto coeffs = ordered_json::array();
        text << "g=" << g << ": ";
        for (int n = 0; n <= n_max; ++n) {
            const std::string v = symbol_poly_str(series[static_cast<std::size_t>(n)]);
            coeffs.push_back(v);
            text << (n ? ", " : "") << v;
        }
        text << '\n';
        e["coeffs"] = std::move(coeffs);
        arr.push_back(std::move(e));
    }
    j["entries"] = std::move(arr);

    if (cfg.format == "json") {
        emit_json(out, j);
    } else if (cfg.format == "csv") {
        out << "g,n,value\n";
        for (const auto& e : j["entries"])
            for (std::size_t n = 0; n < e["coeffs"].size(); ++n)
                out << e["g"].get<int>() << ',' << n << ",\""
                    << e["coeffs"][n].get<std::string>() << "\"\n";
    } else {
        out << text.str();
    }
    return 0;
}

// ---- verify -------------------------------------------------------------------

int cmd_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    VerifyOptions opts;
    opts.only = cfg.checks;
    opts.n_override = cfg.verify_n;
    opts.jobs = cfg.jobs;
    const auto results = run_checks(opts);
    if (results.empty()) throw std::invalid_argument("no matching checks; see `verify --list`");
    bool all = true;
    if (cfg.format == "json") {
        ordered_json j;
        j["schema_version"] = kSchemaVersion;
        j["command"] = "verify";
        auto arr = ordered_json::array();
        for (const auto& r : results) {
            all = all && r.pass;
            ordered_json e;
            e["check"] = r.name;
            e["pass"] = r.pass;
            e["detail"] = r.detail;
            arr.push_back(std::move(e));
        }
        j["results"] = std::move(arr);
        j["all_pass"] = all;
        emit_json(out, j);
    } else if (cfg.format == "csv") {
        out << "check,pass,detail\n";
        for (const auto& r : results) {
            all = all && r.pass;
            out << r.name << ',' << (r.pass ? "true" : "false") << ",\"" << r.detail << "\"\n";
        }
    } else {
        for (const auto& r : results) {
            all = all && r.pass;
            out << (r.pass ? "PASS " : "FAIL ") << r.name << ": " << r.detail << '\n';
        }
    }
    return all ? 0 : 1;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& s) {
    const auto dots = s.find("..");
    try {
        if (dots == std::string::npos) {
            const int v = std::stoi(s);
            return {v, v};
        }
        const int lo = std::stoi(s.substr(0, dots));
        const int hi = std::stoi(s.substr(dots + 2));
        if (hi < lo) throw std::invalid_argument("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad range '" + s + "' (expected N or LO..HI)");
    }
}

std::map<int, Rational> parse_custom_kappa(const std::string& s) {
    std::map<int, Rational> values;
    if (s.empty()) throw std::invalid_argument("custom preset requires --kappa i=v,...");
    std::istringstream in(s);
    std::string item;
    while (std::getline(in, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("bad --kappa entry '" + item + "' (expected i=value)");
        values[std::stoi(item.substr(0, eq))] = Rational::from_string(item.substr(eq + 1));
    }
    return values;
}

int run_command(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.format != "json" && cfg.format != "csv" && cfg.format != "text")
            throw std::invalid_argument("unknown --format '" + cfg.format + "'");
        if (cfg.command == "table") return cmd_table(cfg, out, err);
        if (cfg.command == "moments") return cmd_moments(cfg, out, err);
        if (cfg.command == "cylinder") return cmd_cylinder(cfg, out, err);
        if (cfg.command == "series") return cmd_series(cfg, out, err);
        if (cfg.command == "verify") return cmd_verify(cfg, out, err);
        throw std::invalid_argument("unknown command '" + cfg.command + "'");
    } catch (const TruncationTooLow& e) {
        err << "error: " << e.what() << " (raise --trunc to widen the series window)\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

}  // namespace genus
