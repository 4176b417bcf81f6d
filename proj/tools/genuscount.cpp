// genuscount: exact counts of permutations and set partitions by genus.
//
// Subcommands: table (enumeration oracle), moments (per-genus moment
// polynomials or specialized sequences), cylinder (two-boundary planar
// moments), series (specialized coefficient sequences), verify (the
// consistency suite).

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "genus/commands.hpp"
#include "genus/verify.hpp"

int main(int argc, char** argv) {
    CLI::App app{"exact genus-graded counting of permutations and set partitions"};
    app.require_subcommand(1);

    genus::JobConfig cfg;
    std::string n_range, g_range, i_range, j_range;
    bool list_checks = false;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format: json, csv or text")
            ->default_val("json");
        sub->add_option("--cache-dir", cfg.cache_dir,
                        "cache directory (default: $GENUSCOUNT_CACHE_DIR)");
        sub->add_option("--cutoff", cfg.cutoff, "cumulant index cutoff override");
        sub->add_option("--trunc", cfg.trunc, "series truncation override");
        sub->add_option("--oracle-limit", cfg.oracle_limit, "enumeration size limit override");
        sub->add_option("--jobs", cfg.jobs, "worker threads for enumeration")->default_val(1);
    };

    CLI::App* table = app.add_subcommand("table", "enumerate a genus table exhaustively");
    table->add_option("--kind", cfg.kind, "permutation or partition")->required();
    table->add_option("--n", n_range, "ground-set size or range LO..HI")->required();
    add_common(table);

    CLI::App* moments = app.add_subcommand("moments", "per-genus moment polynomials");
    moments->add_option("--kind", cfg.kind, "permutation or partition")->required();
    moments->add_option("--g", g_range, "genus or range LO..HI")->required();
    moments->add_option("--n", n_range, "moment order or range LO..HI")->required();
    moments->add_option("--preset", cfg.preset,
                        "specialization: factorials, stirling1, bell, stirling2, harer-zagier, "
                        "no-singletons-bell, no-singletons-stirling2, custom");
    moments->add_option("--kappa", cfg.custom_kappa, "custom values, e.g. 1=1,2=1/2");
    add_common(moments);

    CLI::App* cylinder = app.add_subcommand("cylinder", "two-boundary planar moments");
    cylinder->add_option("--kind", cfg.kind, "perm or part")->required();
    cylinder->add_option("--i", i_range, "first boundary size or range")->required();
    cylinder->add_option("--j", j_range, "second boundary size or range")->required();
    cylinder->add_flag("--set-second-order-zero", cfg.second_order_zero,
                       "drop terms containing second-order cumulants");
    add_common(cylinder);

    CLI::App* series = app.add_subcommand("series", "specialized coefficient sequences");
    series->add_option("--kind", cfg.kind, "permutation or partition")->required();
    series->add_option("--preset", cfg.preset, "specialization preset")->required();
    series->add_option("--g", g_range, "genus or range LO..HI")->required();
    series->add_option("--n-max", cfg.n_hi, "largest moment order")->default_val(10);
    series->add_option("--kappa", cfg.custom_kappa, "custom values, e.g. 1=1,2=1/2");
    add_common(series);

    CLI::App* verify = app.add_subcommand("verify", "run the consistency suite");
    verify->add_option("--checks", cfg.checks, "comma-separated check names")->delimiter(',');
    int verify_n = -1;
    verify->add_option("--n", verify_n, "scale override for size-limited checks");
    verify->add_flag("--list", list_checks, "list check names and exit");
    add_common(verify);

    CLI11_PARSE(app, argc, argv);

    try {
        if (table->parsed()) {
            cfg.command = "table";
            std::tie(cfg.n_lo, cfg.n_hi) = genus::parse_range(n_range);
        } else if (moments->parsed()) {
            cfg.command = "moments";
            std::tie(cfg.n_lo, cfg.n_hi) = genus::parse_range(n_range);
            std::tie(cfg.g_lo, cfg.g_hi) = genus::parse_range(g_range);
        } else if (cylinder->parsed()) {
            cfg.command = "cylinder";
            std::tie(cfg.i_lo, cfg.i_hi) = genus::parse_range(i_range);
            std::tie(cfg.j_lo, cfg.j_hi) = genus::parse_range(j_range);
        } else if (series->parsed()) {
            cfg.command = "series";
            std::tie(cfg.g_lo, cfg.g_hi) = genus::parse_range(g_range);
        } else if (verify->parsed()) {
            cfg.command = "verify";
            if (list_checks) {
                for (const auto& name : genus::check_names()) std::cout << name << '\n';
                return 0;
            }
            if (verify_n > 0) cfg.verify_n = verify_n;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }

    return genus::run_command(cfg, std::cout, std::cerr);
}
