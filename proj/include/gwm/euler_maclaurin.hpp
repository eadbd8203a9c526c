// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef GWM_EULER_MACLAURIN_HPP
#define GWM_EULER_MACLAURIN_HPP

#include <functional>
#include <limits>
#include <vector>

#include "gwm/series_eval.hpp"

namespace gwm {

/// Description of a sum sum_{n=start}^{end} f(n) for the Euler-Maclaurin
/// engine. Odd-order derivatives f', f''', ..., f^{(2m-1)} are supplied
/// analytically (at least `order` of them). `integral(lo, hi)` returns the
/// closed-form value of int_lo^hi f (hi may be +infinity); when absent the
/// engine falls back to adaptive quadrature at a tenth of the target
/// tolerance.
///
/// Caller-asserted: the last supplied derivative is monotone on the tail of
/// the range (equivalently f^{(2m)} keeps one sign there), which is what
/// makes the reported remainder bound |B_2m|/(2m)! * int |f^{(2m)}| equal to
/// |B_2m|/(2m)! * |delta f^{(2m-1)}|. For an infinite range f and every
/// supplied derivative must decay to 0.
struct EmProblem {
    std::function<double(double)> f;
    std::vector<std::function<double(double)>> odd_derivs;
    std::function<double(double, double)> integral;  // may be empty
    int order = 2;                                   // m >= 1
    double start = 1.0;
    double end = std::numeric_limits<double>::infinity();
};

/// Euler-Maclaurin evaluation of sum f(n):
///   sum_{n=a}^{N} f(n) = int_a^N f + (f(a) + f(N))/2
///                        + sum_{k=1}^{m} B_2k/(2k)! (f^{(2k-1)}(N) - f^{(2k-1)}(a))
///                        - remainder.
/// The head of the range is summed directly and the formula applied from a
/// split point chosen so the remainder bound meets the tolerance.
SeriesEval em_sum(const EmProblem& p, const Precision& prec = {});

/// Kingman's heavy-traffic constant via em_sum of the explicit series
///   (2 pi)^{-1/2} sum_{n>=1} [sqrt(n) (sqrt(n) + sqrt(n-1))^2]^{-1},
/// which equals -zeta(1/2)/sqrt(2 pi) ~= 0.5826.
double kingman_constant(const Precision& prec = {});

namespace detail {
/// Adaptive Simpson quadrature; hi may be +infinity (transformed to a
/// bounded interval first). Absolute tolerance.
double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol);
}  // namespace detail

}  // namespace gwm

#endif
