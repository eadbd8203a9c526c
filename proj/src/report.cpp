// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0

#include "gwm/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "gwm/errors.hpp"

namespace gwm {

OutputFormat parse_format(const std::string& name) {
    if (name == "table") return OutputFormat::table;
    if (name == "csv") return OutputFormat::csv;
    if (name == "json") return OutputFormat::json;
    throw DomainError("unknown output format: " + name);
}

std::string format_value(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::vector<ResultRow> rows_from_stats(double beta, const WalkStats& w) {
    const std::string m = method_name(w.method);
    std::vector<ResultRow> rows;
    rows.push_back({beta, "p_zero", m, w.p_zero, w.p_zero_detail.terms_used,
                    w.p_zero_detail.tail_bound, -1.0,
                    "J0 = " + format_value(w.j0)});
    rows.push_back({beta, "mean", m, w.mean, w.mean_detail.terms_used,
                    w.mean_detail.tail_bound, -1.0, ""});
    rows.push_back({beta, "variance", m, w.variance,
                    w.variance_detail.terms_used,
                    w.variance_detail.tail_bound, -1.0, ""});
    return rows;
}

std::vector<ResultRow> rows_from_mc(double beta, const McEstimate& e,
                                    std::int64_t paths) {
    std::vector<ResultRow> rows;
    rows.push_back({beta, "p_zero", "monte_carlo", e.p_zero_hat, paths,
                    e.se_pzero, -1.0,
                    "horizon = " + std::to_string(e.horizon_used)});
    rows.push_back({beta, "mean", "monte_carlo", e.mean_hat, paths, e.se_mean,
                    -1.0, e.truncation_note});
    rows.push_back(
        {beta, "variance", "monte_carlo", e.var_hat, paths, e.se_var, -1.0, ""});
    return rows;
}

static std::string render_table(const std::vector<ResultRow>& rows,
                                bool with_ratio) {
    std::ostringstream os;
    char line[256];
    std::snprintf(line, sizeof(line), "%-10s %-10s %-12s %-18s %8s %-12s%s\n",
                  "beta", "stat", "method", "value", "terms", "tail_bound",
                  with_ratio ? " decay_ratio" : "");
    os << line;
    for (const auto& r : rows) {
        std::snprintf(line, sizeof(line), "%-10s %-10s %-12s %-18s %8lld %-12s",
                      format_value(r.beta).c_str(), r.statistic.c_str(),
                      r.method.c_str(), format_value(r.value).c_str(),
                      static_cast<long long>(r.terms),
                      format_value(r.tail_bound).c_str());
        os << line;
        if (with_ratio && r.decay_ratio >= 0.0) {
            os << " " << format_value(r.decay_ratio);
        }
        if (!r.note.empty()) os << "  # " << r.note;
        os << "\n";
    }
    return os.str();
}

static std::string render_csv(const std::vector<ResultRow>& rows,
                              bool with_ratio) {
    std::ostringstream os;
    os << "beta,stat,method,value,terms,tail_bound";
    if (with_ratio) os << ",decay_ratio";
    os << "\n";
    for (const auto& r : rows) {
        os << format_value(r.beta) << ',' << r.statistic << ',' << r.method
           << ',' << format_value(r.value) << ',' << r.terms << ','
           << format_value(r.tail_bound);
        if (with_ratio) {
            os << ',' << (r.decay_ratio >= 0.0 ? format_value(r.decay_ratio)
                                               : std::string());
        }
        os << "\n";
    }
    return os.str();
}

static std::string render_json(const std::vector<ResultRow>& rows,
                               bool with_ratio) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rows) {
        nlohmann::json o = {{"beta", r.beta},       {"statistic", r.statistic},
                            {"value", r.value},     {"method", r.method},
                            {"terms", r.terms},     {"tail_bound", r.tail_bound}};
        if (with_ratio && r.decay_ratio >= 0.0) {
            o["decay_ratio"] = r.decay_ratio;
        }
        arr.push_back(o);
    }
    return arr.dump(2) + "\n";
}

std::string render_rows(const std::vector<ResultRow>& rows, OutputFormat fmt,
                        bool with_ratio) {
    switch (fmt) {
        case OutputFormat::table: return render_table(rows, with_ratio);
        case OutputFormat::csv: return render_csv(rows, with_ratio);
        case OutputFormat::json: return render_json(rows, with_ratio);
    }
    return {};
}

std::string render_crossover(const Crossover& c, OutputFormat fmt) {
    switch (fmt) {
        case OutputFormat::csv: {
            std::ostringstream os;
            os << "x0,beta0,common_value\n"
               << format_value(c.x0) << ',' << format_value(c.beta0) << ','
               << format_value(c.common_value) << "\n";
            return os.str();
        }
        case OutputFormat::json: {
            nlohmann::json o = {{"x0", c.x0},
                                {"beta0", c.beta0},
                                {"common_value", c.common_value}};
            return o.dump(2) + "\n";
        }
        case OutputFormat::table: {
            std::ostringstream os;
            os << "convergence crossover of the Spitzer and zeta series\n"
               << "  x0           = " << format_value(c.x0)
               << "   (solves x e^x = 2 pi)\n"
               << "  beta0        = " << format_value(c.beta0)
               << "   (= sqrt(2 x0))\n"
               << "  common value = " << format_value(c.common_value)
               << "   (= e^{-x0} = beta0^2/(4 pi))\n";
            return os.str();
        }
    }
    return {};
}

}  // namespace gwm
