// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef GWM_SERIES_EVAL_HPP
#define GWM_SERIES_EVAL_HPP

#include <complex>
#include <cstdint>

#include "gwm/errors.hpp"

namespace gwm {

/// Accuracy request for a truncated evaluation.
struct Precision {
    double target_abs_tol = 1e-10;  ///< must be > 0
    std::int64_t max_terms = 200000;  ///< must be >= 1
};

inline void validate(const Precision& p) {
    if (!(p.target_abs_tol > 0.0) || p.max_terms < 1) {
        throw DomainError("precision: need target_abs_tol > 0, max_terms >= 1");
    }
}

/// Result of a truncated series/summation: the value, the number of terms
/// consumed, and an estimate of the absolute truncation error. When the
/// bound is rigorous the true value lies within value +- tail_bound;
/// bounds derived from observed term ratios are conservative estimates.
struct SeriesEval {
    double value = 0.0;
    std::int64_t terms_used = 0;
    double tail_bound = 0.0;
};

/// Complex-valued counterpart (S-series of the extended-domain route).
struct ComplexSeriesEval {
    std::complex<double> value{0.0, 0.0};
    std::int64_t terms_used = 0;
    double tail_bound = 0.0;
};

}  // namespace gwm

#endif
