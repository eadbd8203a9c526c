// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0
//
// gwm: distribution of the all-time maximum of the Gaussian random walk
// with negative drift. Subcommands: stats, compare, crossover, jk, mc.

#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gwm/errors.hpp"
#include "gwm/euler_maclaurin.hpp"
#include "gwm/gauss_walk.hpp"
#include "gwm/monte_carlo.hpp"
#include "gwm/report.hpp"
#include "gwm/special_functions.hpp"

namespace {

constexpr double kPi = 3.14159265358979323846;

std::vector<double> parse_grid(const std::string& spec) {
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos) {
        throw gwm::DomainError("--beta-grid expects start:stop:step");
    }
    const double start = std::stod(spec.substr(0, c1));
    const double stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
    const double step = std::stod(spec.substr(c2 + 1));
    if (!(step > 0.0) || !(stop >= start)) {
        throw gwm::DomainError("--beta-grid must be increasing with step > 0");
    }
    std::vector<double> grid;
    for (double b = start; b <= stop + 1e-12 * step; b += step) {
        if (!(b > 0.0)) throw gwm::DomainError("beta must be positive");
        grid.push_back(b);
    }
    return grid;
}

std::vector<double> betas_from(const std::optional<double>& beta,
                               const std::string& grid) {
    if (!grid.empty()) return parse_grid(grid);
    if (beta) return {*beta};
    throw gwm::DomainError("provide --beta or --beta-grid");
}

gwm::WalkStats stats_by_method(const std::string& method, gwm::Drift d,
                               const gwm::Precision& prec) {
    if (method == "auto") return gwm::stats_auto(d, prec);
    if (method == "zeta") return gwm::stats_zeta(d, prec);
    if (method == "spitzer") return gwm::stats_spitzer(d, prec);
    if (method == "extended") return gwm::stats_extended(d, prec);
    if (method == "asymptotic") return gwm::asymptotic_stats(d);
    throw gwm::DomainError("unknown method for stats: " + method);
}

int run_stats(const std::vector<double>& betas, const std::string& method,
              double tol, gwm::OutputFormat fmt) {
    const gwm::Precision prec{tol, 200000};
    std::vector<gwm::ResultRow> rows;
    for (double b : betas) {
        const gwm::WalkStats w = stats_by_method(method, gwm::Drift(b), prec);
        for (auto& r : gwm::rows_from_stats(b, w)) rows.push_back(r);
    }
    std::cout << gwm::render_rows(rows, fmt, false);
    return 0;
}

int run_compare(const std::vector<double>& betas, double tol,
                gwm::OutputFormat fmt) {
    const gwm::Precision prec{tol, 200000};
    std::vector<gwm::ResultRow> rows;
    const auto nan = std::nan("");
    for (double b : betas) {
        const gwm::Drift d(b);
        const double zeta_ratio = b * b / (4.0 * kPi);
        const double spitzer_ratio = std::exp(-0.5 * b * b);
        struct Route {
            const char* stat;
            const char* method;
            double ratio;
            std::function<gwm::SeriesEval()> eval;
        };
        const Route routes[] = {
            {"p_zero", "zeta_series", zeta_ratio,
             [&] { return gwm::p_zero_zeta(d, prec); }},
            {"p_zero", "spitzer", spitzer_ratio,
             [&] { return gwm::p_zero_spitzer(d, prec); }},
            {"mean", "zeta_series", zeta_ratio,
             [&] { return gwm::mean_zeta(d, prec); }},
            {"mean", "spitzer", spitzer_ratio,
             [&] { return gwm::mean_spitzer(d, prec); }},
            {"variance", "zeta_series", zeta_ratio,
             [&] { return gwm::var_zeta(d, prec); }},
            {"variance", "spitzer", spitzer_ratio,
             [&] { return gwm::var_spitzer(d, prec); }},
        };
        for (const auto& rt : routes) {
            gwm::ResultRow row;
            row.beta = b;
            row.statistic = rt.stat;
            row.method = rt.method;
            row.decay_ratio = rt.ratio;
            try {
                const gwm::SeriesEval e = rt.eval();
                row.value = e.value;
                row.terms = e.terms_used;
                row.tail_bound = e.tail_bound;
            } catch (const gwm::Error& err) {
                // failed rows are flagged; the run continues
                row.value = nan;
                row.terms = 0;
                row.tail_bound = nan;
                row.note = err.what();
                std::cerr << "compare: beta = " << b << " " << rt.stat << "/"
                          << rt.method << ": " << err.what() << "\n";
            }
            rows.push_back(row);
        }
    }
    std::cout << gwm::render_rows(rows, fmt, true);
    return 0;
}

int run_jk(const std::vector<double>& betas, int k, const std::string& method,
           double tol, gwm::OutputFormat fmt) {
    const gwm::Precision prec{tol, 200000};
    const gwm::MomentOrder order(k);
    const std::string stat = "J" + std::to_string(k);
    const double threshold =
        std::min(0.9 * 2.0 * std::sqrt(kPi),
                 1.2 * gwm::convergence_crossover().beta0);

    auto jk_route = [&](gwm::Drift d, const std::string& route) {
        if (route == "spitzer") return gwm::jk_spitzer(order, d, prec);
        if (route == "zeta") {
            if (k == 0) {
                const gwm::SeriesEval p = gwm::p_zero_zeta(d, prec);
                return gwm::SeriesEval{-std::log(p.value), p.terms_used,
                                       p.tail_bound / p.value};
            }
            return gwm::jk_zeta(order, d, prec);
        }
        throw gwm::DomainError("unknown method for jk: " + route);
    };

    std::vector<gwm::ResultRow> rows;
    for (double b : betas) {
        const gwm::Drift d(b);
        if (method == "both") {
            const gwm::SeriesEval z = jk_route(d, "zeta");
            const gwm::SeriesEval s = jk_route(d, "spitzer");
            rows.push_back({b, stat, "zeta_series", z.value, z.terms_used,
                            z.tail_bound, -1.0, ""});
            rows.push_back({b, stat, "spitzer", s.value, s.terms_used,
                            s.tail_bound, -1.0, ""});
            rows.push_back({b, stat, "discrepancy",
                            std::abs(z.value - s.value), 0,
                            z.tail_bound + s.tail_bound, -1.0, ""});
        } else {
            std::string route = method;
            if (route == "auto") route = (b <= threshold) ? "zeta" : "spitzer";
            const gwm::SeriesEval e = jk_route(d, route);
            rows.push_back({b, stat,
                            route == "zeta" ? "zeta_series" : "spitzer",
                            e.value, e.terms_used, e.tail_bound, -1.0, ""});
        }
    }
    std::cout << gwm::render_rows(rows, fmt, false);
    return 0;
}

int run_mc(double beta, std::uint64_t seed, std::int64_t paths,
           const std::string& horizon, gwm::OutputFormat fmt) {
    gwm::McConfig cfg(gwm::Drift(beta), seed, paths);
    if (!horizon.empty() && horizon != "auto") {
        cfg.horizon = std::stoll(horizon);
    }
    const gwm::McEstimate est = gwm::simulate_max(cfg);
    std::cout << gwm::render_rows(gwm::rows_from_mc(beta, est, paths), fmt,
                                  false);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "gwm: exact and simulated characteristics of the all-time maximum "
        "of the Gaussian random walk with negative drift"};
    app.require_subcommand(1);

    std::optional<double> beta;
    std::string grid;
    std::string method = "auto";
    std::string format = "table";
    std::string horizon = "auto";
    double tol = 1e-10;
    int k = 0;
    std::uint64_t seed = 20070421;
    std::int64_t paths = 100000;

    auto add_common = [&](CLI::App* cmd, bool with_method) {
        cmd->add_option("--beta", beta, "drift magnitude (> 0)");
        cmd->add_option("--beta-grid", grid, "grid start:stop:step");
        cmd->add_option("--tol", tol, "absolute tolerance")
            ->check(CLI::PositiveNumber);
        cmd->add_option("--format", format, "table|csv|json");
        if (with_method) {
            cmd->add_option("--method", method,
                            "zeta|spitzer|extended|asymptotic|auto|both");
        }
    };

    CLI::App* stats = app.add_subcommand("stats", "P(M=0), E M, Var M");
    add_common(stats, true);
    CLI::App* compare = app.add_subcommand(
        "compare", "zeta-series vs Spitzer convergence table");
    add_common(compare, false);
    CLI::App* crossover = app.add_subcommand(
        "crossover", "decay-rate crossover study (x e^x = 2 pi)");
    crossover->add_option("--format", format, "table|csv|json");
    CLI::App* jk = app.add_subcommand("jk", "moment sums J_k");
    add_common(jk, true);
    jk->add_option("--k", k, "moment order (0..10)");
    CLI::App* mc = app.add_subcommand("mc", "Monte Carlo simulation");
    add_common(mc, false);
    mc->add_option("--seed", seed, "master seed");
    mc->add_option("--paths", paths, "number of paths")
        ->check(CLI::PositiveNumber);
    mc->add_option("--horizon", horizon, "steps per path, or 'auto'");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        app.exit(e);
        return 2;
    }

    try {
        const gwm::OutputFormat fmt = gwm::parse_format(format);
        if (stats->parsed()) {
            return run_stats(betas_from(beta, grid), method, tol, fmt);
        }
        if (compare->parsed()) {
            return run_compare(betas_from(beta, grid), tol, fmt);
        }
        if (crossover->parsed()) {
            std::cout << gwm::render_crossover(gwm::convergence_crossover(),
                                               fmt);
            return 0;
        }
        if (jk->parsed()) {
            if (method == "auto" && jk->count("--method") == 0) {
                method = "auto";
            }
            return run_jk(betas_from(beta, grid), k, method, tol, fmt);
        }
        if (mc->parsed()) {
            if (!beta) throw gwm::DomainError("mc requires --beta");
            return run_mc(*beta, seed, paths, horizon, fmt);
        }
    } catch (const gwm::ToleranceNotMet& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const gwm::DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const gwm::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return 4;
}
