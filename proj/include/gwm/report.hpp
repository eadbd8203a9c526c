// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef GWM_REPORT_HPP
#define GWM_REPORT_HPP

#include <string>
#include <vector>

#include "gwm/gauss_walk.hpp"
#include "gwm/monte_carlo.hpp"

namespace gwm {

enum class OutputFormat { table, csv, json };

OutputFormat parse_format(const std::string& name);

/// One emitted quantity: the flat record {beta, statistic, value, method,
/// terms, tail_bound} of the JSON schema. For Monte Carlo rows tail_bound
/// carries the standard error; compare rows add the per-term decay ratio.
struct ResultRow {
    double beta = 0.0;
    std::string statistic;
    std::string method;
    double value = 0.0;
    std::int64_t terms = 0;
    double tail_bound = 0.0;
    double decay_ratio = -1.0;  // < 0: column absent
    std::string note;           // table output only
};

/// 12 significant digits, fixed across platforms ("%.12g").
std::string format_value(double v);

std::vector<ResultRow> rows_from_stats(double beta, const WalkStats& w);
std::vector<ResultRow> rows_from_mc(double beta, const McEstimate& e,
                                    std::int64_t paths);

/// Renders rows in the requested format. `with_ratio` selects the compare
/// CSV column set (beta, stat, method, value, terms, tail_bound,
/// decay_ratio); otherwise the stats set (no ratio column).
std::string render_rows(const std::vector<ResultRow>& rows, OutputFormat fmt,
                        bool with_ratio);

std::string render_crossover(const Crossover& c, OutputFormat fmt);

}  // namespace gwm

#endif
