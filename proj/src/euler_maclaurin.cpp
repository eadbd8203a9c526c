// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0

#include "gwm/euler_maclaurin.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "gwm/errors.hpp"
#include "gwm/special_functions.hpp"

namespace gwm {
namespace {

constexpr double kEps = 2.220446049250313e-16;
constexpr double kSqrt2Pi = 2.50662827463100050242;

double simpson(double a, double fa, double b, double fb, double fm) {
    return (b - a) / 6.0 * (fa + 4.0 * fm + fb);
}

double adaptive_simpson(const std::function<double(double)>& f, double a,
                        double fa, double b, double fb, double fm, double whole,
                        double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = f(lm);
    const double frm = f(rm);
    const double left = simpson(a, fa, m, fm, flm);
    const double right = simpson(m, fm, b, fb, frm);
    const double delta = left + right - whole;
    if (depth <= 0 || std::abs(delta) <= 15.0 * tol) {
        return left + right + delta / 15.0;
    }
    return adaptive_simpson(f, a, fa, m, fm, flm, left, 0.5 * tol, depth - 1) +
           adaptive_simpson(f, m, fm, b, fb, frm, right, 0.5 * tol, depth - 1);
}

double integrate_finite(const std::function<double(double)>& f, double a,
                        double b, double tol) {
    if (a == b) return 0.0;
    const double fa = f(a);
    const double fb = f(b);
    const double fm = f(0.5 * (a + b));
    const double whole = simpson(a, fa, b, fb, fm);
    return adaptive_simpson(f, a, fa, b, fb, fm, whole, tol, 48);
}

}  // namespace

namespace detail {

double integrate(const std::function<double(double)>& f, double lo, double hi,
                 double abs_tol) {
    if (std::isinf(hi)) {
        // x = lo - 1 + 1/u^2 maps u in (0, 1] onto [lo, inf); the Jacobian
        // 2/u^3 keeps power-law tails x^{-p}, p > 1, bounded at u -> 0.
        const double base = lo - 1.0;
        auto g = [&](double u) {
            if (u <= 0.0) return 0.0;
            const double x = base + 1.0 / (u * u);
            const double val = f(x) * 2.0 / (u * u * u);
            return std::isfinite(val) ? val : 0.0;
        };
        return integrate_finite(g, 0.0, 1.0, abs_tol);
    }
    return integrate_finite(f, lo, hi, abs_tol);
}

}  // namespace detail

SeriesEval em_sum(const EmProblem& p, const Precision& prec) {
    validate(prec);
    if (!p.f) throw DomainError("em_sum: integrand missing");
    if (p.order < 1) throw DomainError("em_sum: order must be >= 1");
    if (static_cast<int>(p.odd_derivs.size()) < p.order) {
        throw DomainError("em_sum: need odd derivatives up to order 2m-1");
    }
    if (!(p.start <= p.end)) throw DomainError("em_sum: empty range");

    const int m = p.order;
    const bool infinite = std::isinf(p.end);
    const double b2m = detail::bernoulli_over_factorial(m);  // B_2m/(2m)!
    const auto& dlast = p.odd_derivs[m - 1];

    const auto remainder_at = [&](double k) -> double {
        const double dk = dlast(k);
        const double dn = infinite ? 0.0 : dlast(p.end);
        const double bound = std::abs(b2m) * std::abs(dn - dk);
        if (!std::isfinite(bound)) {
            throw RemainderUnbounded("em_sum: remainder bound not finite");
        }
        return bound;
    };

    // Split point: sum start..K-1 directly, apply the formula from K.
    double K = p.start;
    double rem = remainder_at(K);
    {
        double step = 8.0;
        while (rem > prec.target_abs_tol && K < p.end &&
               K - p.start < static_cast<double>(prec.max_terms)) {
            K = std::min(p.end, K + step);
            step *= 2.0;
            rem = remainder_at(K);
        }
    }
    if (rem > prec.target_abs_tol) {
        throw ToleranceNotMet("em_sum: remainder bound " + std::to_string(rem) +
                              " above target");
    }

    double head = 0.0;
    for (double n = p.start; n < K; n += 1.0) head += p.f(n);

    const double quad_tol = prec.target_abs_tol * 0.1;
    const double integral = p.integral ? p.integral(K, p.end)
                                       : detail::integrate(p.f, K, p.end, quad_tol);

    double value = head + integral + 0.5 * p.f(K);
    if (!infinite) value += 0.5 * p.f(p.end);
    for (int k = 1; k <= m; ++k) {
        const double dk = p.odd_derivs[k - 1](K);
        const double dn = infinite ? 0.0 : p.odd_derivs[k - 1](p.end);
        value += detail::bernoulli_over_factorial(k) * (dn - dk);
    }

    double tail = rem + 16.0 * kEps * std::abs(value);
    if (!p.integral) tail += quad_tol;
    const auto terms = static_cast<std::int64_t>(K - p.start) + m + 2;
    return {value, terms, tail};
}

double kingman_constant(const Precision& prec) {
    // Summand 1/(sqrt(n)(sqrt(n)+sqrt(n-1))^2); rationalizing gives the
    // smooth telescoping form 2 sqrt(x) - 2 sqrt(x-1) - 1/sqrt(x) used for
    // the derivatives and antiderivative below. The first few terms are
    // summed directly since sqrt(x-1) is not smooth at x = 1.
    auto f = [](double x) {
        const double d = std::sqrt(x) - std::sqrt(x - 1.0);
        return d * d / std::sqrt(x);
    };
    auto f1 = [](double x) {
        return 1.0 / std::sqrt(x) - 1.0 / std::sqrt(x - 1.0) +
               0.5 * std::pow(x, -1.5);
    };
    auto f3 = [](double x) {
        return 0.75 * std::pow(x, -2.5) - 0.75 * std::pow(x - 1.0, -2.5) +
               1.875 * std::pow(x, -3.5);
    };
    auto F = [](double x) {
        // antiderivative; -> 0 as x -> inf
        return (4.0 / 3.0) * (std::pow(x, 1.5) - std::pow(x - 1.0, 1.5)) -
               2.0 * std::sqrt(x);
    };

    const double head_end = 11.0;
    double head = 0.0;
    for (double n = 1.0; n < head_end; n += 1.0) head += f(n);

    EmProblem tail;
    tail.f = f;
    tail.odd_derivs = {f1, f3};
    tail.integral = [&](double lo, double) { return -F(lo); };
    tail.order = 2;
    tail.start = head_end;
    const SeriesEval t = em_sum(tail, prec);

    return (head + t.value) / kSqrt2Pi;
}

}  // namespace gwm
