// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0

#include "gwm/gauss_walk.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>

#include "gwm/errors.hpp"
#include "gwm/euler_maclaurin.hpp"
#include "gwm/special_functions.hpp"

namespace gwm {
namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrt2Pi = 2.50662827463100050242;
constexpr double kTwoSqrtPi = 3.54490770181103205460;  // zeta-series domain edge
constexpr double kEps = 2.220446049250313e-16;

using C = std::complex<double>;

double upper_tail(double t) { return std_normal_cdf(-t); }

void require_zeta_domain(double beta, const char* op) {
    // strict inequality; the point 2 sqrt(pi) itself is excluded, with an
    // ulp-level whisker so the rounded edge value is rejected too
    if (!(beta < kTwoSqrtPi * (1.0 - 4.0 * kEps))) {
        throw DomainError(std::string(op) +
                          ": beta must satisfy beta < 2 sqrt(pi) ~= 3.5449 "
                          "(use the spitzer or extended route), got beta = " +
                          std::to_string(beta));
    }
}

// sum_{r>=0} zeta(c - r) (-x)^r / (r! prod_{j=1}^{k+1} (2r+j)), the common
// shape of the three statistic tails and of the general J_k tail. Terms decay
// asymptotically by the factor x/(2 pi) = beta^2/(4 pi); stop once the term
// magnitude is below target/10 with three consecutive decreases.
SeriesEval zeta_coeff_series(double c, int k, double x, const Precision& prec,
                             const char* op) {
    const auto cap = std::min<std::int64_t>(prec.max_terms, 250);
    const Precision zprec{1e-13, prec.max_terms};
    double sum = 0.0;
    double pw = 1.0;  // (-x)^r / r!
    double err_acc = 0.0;
    double prev = std::numeric_limits<double>::infinity();
    double last = 0.0;
    double last_ratio = 0.0;
    int decreasing = 0;
    std::int64_t terms = 0;
    bool converged = false;
    for (std::int64_t r = 0; r < cap; ++r) {
        const SeriesEval zv = riemann_zeta(c - static_cast<double>(r), zprec);
        double denom = 1.0;
        for (int j = 1; j <= k + 1; ++j) denom *= 2.0 * r + j;
        const double t = zv.value * pw / denom;
        sum += t;
        err_acc += zv.tail_bound * std::abs(pw) / denom;
        terms = r + 1;
        const double mag = std::abs(t);
        if (mag > 0.0 && prev > 0.0 && std::isfinite(prev)) {
            last_ratio = mag / prev;
        }
        decreasing = (mag < prev) ? decreasing + 1 : 0;
        prev = mag;
        last = mag;
        pw *= -x / static_cast<double>(r + 1);
        if (mag < prec.target_abs_tol * 0.1 && decreasing >= 3) {
            converged = true;
            break;
        }
    }
    if (!converged) {
        throw ToleranceNotMet(std::string(op) +
                              ": zeta-series route: term cap reached before "
                              "tolerance at beta = " +
                              std::to_string(std::sqrt(2.0 * x)));
    }
    // asymptotic term ratio is x/(2 pi); keep the observed ratio if larger
    const double q = std::min(0.995, std::max(x / (2.0 * kPi), last_ratio));
    return {sum, terms, last * q / (1.0 - q) + err_acc};
}

// ---------------------------------------------------------------------------
// Spitzer summation: direct term loop with a Mills-ratio geometric envelope,
// delegated to the Euler-Maclaurin engine when the envelope would require
// more than kEmDelegate terms (small beta).

constexpr double kEmDelegate = 100000.0;
constexpr double kEmHead = 50000.0;

struct SpitzerTerm {
    std::function<double(double)> term;      // summand at integer n
    std::function<double(double)> envelope;  // positive bound on |term|
    // upper bound on envelope(n+1)/envelope(n) valid for every n >= N;
    // must fall below 1 for N large enough
    std::function<double(double)> ratio_from;
    std::function<double(double)> d1;        // term' (continuous n)
    std::function<double(double)> d3;        // term'''
};

// Smallest N with envelope(N+1)/(1-q) <= tol (coarse overestimate used only
// for the direct-vs-EM routing decision).
double envelope_terms_needed(const SpitzerTerm& st, double x, double tol) {
    const double q = std::exp(-x);  // asymptotic envelope ratio
    const double margin = tol * (1.0 - q);
    if (st.envelope(2.0) <= margin) return 1.0;
    // envelope ~ const e^{-xn} poly(n); solve on the exponential part only.
    const double c1 = st.envelope(1.0) * std::exp(x);
    return std::max(1.0, std::log(c1 / margin) / x);
}

SeriesEval spitzer_sum(const SpitzerTerm& st, double x, const Precision& prec,
                       const char* op) {
    const double tol = prec.target_abs_tol;
    const double n_req = envelope_terms_needed(st, x, tol);

    if (n_req > kEmDelegate) {
        double head = 0.0;
        for (double n = 1.0; n <= kEmHead; n += 1.0) head += st.term(n);
        EmProblem tail;
        tail.f = st.term;
        tail.odd_derivs = {st.d1, st.d3};
        tail.order = 2;
        tail.start = kEmHead + 1.0;
        const SeriesEval t = em_sum(tail, prec);
        return {head + t.value,
                static_cast<std::int64_t>(kEmHead) + t.terms_used,
                t.tail_bound + kEps * kEmHead};
    }

    double sum = 0.0;
    for (double n = 1.0; n <= static_cast<double>(prec.max_terms); n += 1.0) {
        sum += st.term(n);
        const double env = st.envelope(n + 1.0);
        if (env == 0.0) return {sum, static_cast<std::int64_t>(n), 0.0};
        const double q = st.ratio_from(n + 1.0);
        if (q < 1.0) {
            const double tail = env / (1.0 - q);
            if (tail <= tol) return {sum, static_cast<std::int64_t>(n), tail};
        }
    }
    throw ToleranceNotMet(std::string(op) +
                          ": spitzer route: max_terms exhausted at beta = " +
                          std::to_string(std::sqrt(2.0 * x)));
}

SpitzerTerm p_zero_terms(double beta) {
    const double x = 0.5 * beta * beta;
    SpitzerTerm st;
    st.term = [beta](double n) { return upper_tail(beta * std::sqrt(n)) / n; };
    // (1/n) P(-beta sqrt(n)) <= e^{-x n} / (beta sqrt(2 pi) n^{3/2})
    st.envelope = [beta, x](double n) {
        return std::exp(-x * n) / (beta * kSqrt2Pi * n * std::sqrt(n));
    };
    st.ratio_from = [x](double) { return std::exp(-x); };
    st.d1 = [beta](double v) {
        const double t = beta * std::sqrt(v);
        return -upper_tail(t) / (v * v) -
               0.5 * beta * std_normal_pdf(t) / (v * std::sqrt(v));
    };
    st.d3 = [beta](double v) {
        const double t = beta * std::sqrt(v);
        const double phi = std_normal_pdf(t);
        const double b2 = beta * beta;
        const double sv = std::sqrt(v);
        return -phi * (b2 * b2 * beta / (8.0 * v * sv) +
                       b2 * beta / (v * v * sv) +
                       (33.0 / 8.0) * beta / (v * v * v * sv)) -
               6.0 * upper_tail(t) / (v * v * v * v);
    };
    return st;
}

SpitzerTerm mean_terms(double beta) {
    const double x = 0.5 * beta * beta;
    SpitzerTerm st;
    st.term = [beta, x](double n) {
        return std::exp(-x * n) / (kSqrt2Pi * std::sqrt(n)) -
               beta * upper_tail(beta * std::sqrt(n));
    };
    st.envelope = [x](double n) {
        return std::exp(-x * n) / (kSqrt2Pi * std::sqrt(n));
    };
    st.ratio_from = [x](double) { return std::exp(-x); };
    st.d1 = [beta](double v) {
        return -0.5 * std_normal_pdf(beta * std::sqrt(v)) / (v * std::sqrt(v));
    };
    st.d3 = [beta](double v) {
        const double phi = std_normal_pdf(beta * std::sqrt(v));
        const double b2 = beta * beta;
        const double sv = std::sqrt(v);
        return -phi / 8.0 *
               (15.0 / (v * v * v * sv) + 6.0 * b2 / (v * v * sv) +
                b2 * b2 / (v * sv));
    };
    return st;
}

SpitzerTerm var_terms(double beta) {
    const double x = 0.5 * beta * beta;
    SpitzerTerm st;
    st.term = [beta, x](double n) {
        const double t = beta * std::sqrt(n);
        return (beta * beta * n + 1.0) * upper_tail(t) -
               beta * std::sqrt(n) * std::exp(-x * n) / kSqrt2Pi;
    };
    st.envelope = [beta, x](double n) {
        return std::exp(-x * n) * (2.0 * beta * beta * n + 1.0) /
               (kSqrt2Pi * beta * std::sqrt(n));
    };
    // ratio = e^{-x} (1 + 2 beta^2/(2 beta^2 n + 1)) sqrt(n/(n+1)); the
    // bracket decreases in n, so its value at N bounds the whole tail
    st.ratio_from = [beta, x](double N) {
        return std::exp(-x) *
               (1.0 + 2.0 * beta * beta / (2.0 * beta * beta * N + 1.0));
    };
    st.d1 = [beta](double v) {
        const double t = beta * std::sqrt(v);
        return beta * beta * upper_tail(t) -
               beta * std_normal_pdf(t) / std::sqrt(v);
    };
    st.d3 = [beta](double v) {
        const double t = beta * std::sqrt(v);
        return -0.25 * beta * (beta * beta * v + 3.0) * std_normal_pdf(t) /
               (v * v * std::sqrt(v));
    };
    return st;
}

// ---------------------------------------------------------------------------
// S-series helpers (extended-domain route): complex Euler-Maclaurin with
// closed-form antiderivatives, order 2, principal branches.

struct SSeriesParts {
    std::function<C(double)> f;
    std::function<C(double)> d1;
    std::function<C(double)> d3;
    std::function<C(double)> integral_from;  // int_K^inf f
    C prefactor;
};

SSeriesParts s_series_parts(int j, C b) {
    const C sb = std::sqrt(b);
    SSeriesParts p;
    switch (j) {
        case 0:
            p.prefactor = std::sqrt(kPi) / sb;
            p.f = [b](double x) {
                const C w = std::sqrt(b / x);
                return std::asin(w) - w;
            };
            p.d1 = [b, sb](double x) {
                const C r = std::sqrt(x - b);
                return -sb / (2.0 * x * r) + sb / (2.0 * x * std::sqrt(x));
            };
            p.d3 = [b, sb](double x) {
                const C r = std::sqrt(x - b);
                const C r3 = r * r * r;
                const C r5 = r3 * r * r;
                const double x3 = x * x * x;
                const double x72 = x3 * std::sqrt(x);  // x^{7/2}
                return sb * (15.0 / (8.0 * x72) - 3.0 * b * b / (8.0 * x3 * r5) -
                             5.0 * b / (4.0 * x3 * r3) - 15.0 / (8.0 * x3 * r));
            };
            p.integral_from = [b, sb](double k) {
                const C x{k, 0.0};
                const C F = x * std::asin(std::sqrt(b / x)) +
                            sb * (std::sqrt(x - b) - 2.0 * std::sqrt(x));
                return -F;
            };
            break;
        case 1:
            p.prefactor = std::sqrt(kPi) / (2.0 * b);
            // sqrt(x) - sqrt(x-b) rationalized to b/(sqrt(x)+sqrt(x-b)):
            // exact algebra, no cancellation for |b| << x.
            p.f = [b](double x) {
                return b / (x * (std::sqrt(C{x, 0.0}) + std::sqrt(x - b)));
            };
            p.d1 = [b](double x) {
                const C r = std::sqrt(x - b);
                return -b / (x * x * r) + 1.0 / (2.0 * x * r) -
                       1.0 / (2.0 * x * std::sqrt(x));
            };
            p.d3 = [b](double x) {
                const C r = std::sqrt(x - b);
                const C r3 = r * r * r;
                const C r5 = r3 * r * r;
                const double x2 = x * x;
                return -3.0 / (8.0 * x * r5) - 3.0 / (4.0 * x2 * r3) -
                       3.0 / (x2 * x * r) + 6.0 * r / (x2 * x2) -
                       15.0 / (8.0 * x2 * x * std::sqrt(x));
            };
            p.integral_from = [b](double k) {
                const C sb = std::sqrt(b);
                const C x{k, 0.0};
                const C F = 2.0 * std::sqrt(x) - 2.0 * std::sqrt(x - b) +
                            2.0 * sb * std::atan(std::sqrt((x - b) / b));
                return kPi * sb - F;
            };
            break;
        default:
            p.prefactor = std::sqrt(kPi) / (4.0 * b);
            p.f = [b](double x) {
                return b / (x * x * (std::sqrt(C{x, 0.0}) + std::sqrt(x - b)));
            };
            p.d1 = [b](double x) {
                const C r = std::sqrt(x - b);
                const double x2 = x * x;
                return -2.0 * b / (x2 * x * r) + 3.0 / (2.0 * x2 * r) -
                       3.0 / (2.0 * x2 * std::sqrt(x));
            };
            p.d3 = [b](double x) {
                const C r = std::sqrt(x - b);
                const C r3 = r * r * r;
                const C r5 = r3 * r * r;
                const double x2 = x * x;
                const double x4 = x2 * x2;
                return -3.0 / (8.0 * x2 * r5) - 3.0 / (2.0 * x2 * x * r3) -
                       9.0 / (x4 * r) + 24.0 * r / (x4 * x) -
                       105.0 / (8.0 * x4 * std::sqrt(x));
            };
            p.integral_from = [b](double k) {
                const C sb = std::sqrt(b);
                const C x{k, 0.0};
                const C F = -2.0 / std::sqrt(x) + std::sqrt(x - b) / x -
                            std::atan(std::sqrt((x - b) / b)) / sb;
                return -kPi / (2.0 * sb) - F;
            };
            break;
    }
    return p;
}

WalkStats make_stats(Method method, double beta, double p, SeriesEval pd,
                     double mean, SeriesEval md, double var, SeriesEval vd,
                     double j0) {
    if (method != Method::asymptotic) {
        // invariants hold up to the reported uncertainty: for large beta the
        // true values sit below the resolvable error bar (underflow, or the
        // cancellation floor of the extended route)
        if (p > 1.0 && p <= 1.0 + 64.0 * kEps) p = 1.0;  // rounding at 1
        if (!(p > 0.0) || p > 1.0) {
            throw Error("internal: P(M=0) outside (0, 1] at beta = " +
                        std::to_string(beta));
        }
        if (!(mean > 0.0) && !(std::abs(mean) <= md.tail_bound) &&
            beta <= 20.0) {
            throw Error("internal: E[M] not positive at beta = " +
                        std::to_string(beta));
        }
        if (!(mean < 0.5 / beta + md.tail_bound)) {
            throw Error("internal: Kingman bound E[M] < 1/(2 beta) violated");
        }
        if (!(var > 0.0) && !(std::abs(var) <= vd.tail_bound) && beta <= 20.0) {
            throw Error("internal: Var M not positive at beta = " +
                        std::to_string(beta));
        }
    }
    WalkStats w;
    w.p_zero = p;
    w.mean = mean;
    w.variance = var;
    w.method = method;
    w.p_zero_detail = pd;
    w.mean_detail = md;
    w.variance_detail = vd;
    w.j0 = j0;
    return w;
}

}  // namespace

Drift::Drift(double b) : beta(b) {
    if (!(b > 0.0) || !std::isfinite(b)) {
        throw DomainError("beta must be positive");
    }
}

MomentOrder::MomentOrder(int order) : k(order) {
    if (order < 0 || order > 10) {
        throw DomainError("moment order k must satisfy 0 <= k <= 10");
    }
}

const char* method_name(Method m) {
    switch (m) {
        case Method::zeta_series: return "zeta_series";
        case Method::spitzer: return "spitzer";
        case Method::asymptotic: return "asymptotic";
        case Method::extended: return "extended";
        case Method::monte_carlo: return "monte_carlo";
    }
    return "unknown";
}

Crossover convergence_crossover() {
    // x e^x = 2 pi; bracket [1, 2] is analytically certain.
    auto g = [](double x) { return x * std::exp(x) - 2.0 * kPi; };
    double lo = 1.0;
    double hi = 2.0;
    if (!(g(lo) < 0.0 && g(hi) > 0.0)) {
        throw ConvergenceFailure("crossover: bracket failed");
    }
    while (hi - lo > 1e-12) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) < 0.0 ? lo : hi) = mid;
    }
    double x = 0.5 * (lo + hi);
    for (int i = 0; i < 2; ++i) {
        x -= g(x) / ((1.0 + x) * std::exp(x));
    }
    return {x, std::sqrt(2.0 * x), std::exp(-x)};
}

SeriesEval p_zero_zeta(Drift d, const Precision& prec) {
    validate(prec);
    require_zeta_domain(d.beta, "p_zero_zeta");
    const double beta = d.beta;
    const double scale = beta / kSqrt2Pi;
    Precision inner = prec;
    inner.target_abs_tol = 0.3 * prec.target_abs_tol / std::max(1.0, scale);
    const SeriesEval s =
        zeta_coeff_series(0.5, 0, 0.5 * beta * beta, inner, "p_zero");
    const double value = std::sqrt(2.0) * beta * std::exp(scale * s.value);
    const double tail =
        std::abs(value) * (scale * s.tail_bound + 8.0 * kEps);
    if (!(value > 0.0) || !(value < 1.0)) {
        throw Error("internal: p_zero series value outside (0,1)");
    }
    return {value, s.terms_used, tail};
}

SeriesEval mean_zeta(Drift d, const Precision& prec) {
    validate(prec);
    require_zeta_domain(d.beta, "mean_zeta");
    const double beta = d.beta;
    const double scale = beta * beta / kSqrt2Pi;
    Precision inner = prec;
    inner.target_abs_tol = 0.3 * prec.target_abs_tol / std::max(1.0, scale);
    const Precision zp{1e-13, prec.max_terms};
    const SeriesEval zh = riemann_zeta(0.5, zp);
    const SeriesEval s =
        zeta_coeff_series(-0.5, 1, 0.5 * beta * beta, inner, "mean");
    const double value =
        0.5 / beta + zh.value / kSqrt2Pi + 0.25 * beta + scale * s.value;
    const double tail = scale * s.tail_bound + zh.tail_bound / kSqrt2Pi +
                        8.0 * kEps * (0.5 / beta + 1.0);
    return {value, s.terms_used, tail};
}

SeriesEval var_zeta(Drift d, const Precision& prec) {
    validate(prec);
    require_zeta_domain(d.beta, "var_zeta");
    const double beta = d.beta;
    const double scale = 2.0 * beta * beta * beta / kSqrt2Pi;
    Precision inner = prec;
    inner.target_abs_tol = 0.3 * prec.target_abs_tol / std::max(1.0, scale);
    const Precision zp{1e-13, prec.max_terms};
    const SeriesEval zmh = riemann_zeta(-0.5, zp);
    const SeriesEval s =
        zeta_coeff_series(-1.5, 2, 0.5 * beta * beta, inner, "var");
    const double value = 0.25 / (beta * beta) - 0.25 -
                         2.0 * zmh.value * beta / kSqrt2Pi -
                         beta * beta / 24.0 - scale * s.value;
    const double tail = scale * s.tail_bound +
                        2.0 * beta * zmh.tail_bound / kSqrt2Pi +
                        8.0 * kEps * (0.25 / (beta * beta) + 1.0);
    return {value, s.terms_used, tail};
}

SeriesEval p_zero_spitzer(Drift d, const Precision& prec) {
    validate(prec);
    const double beta = d.beta;
    Precision inner = prec;
    inner.target_abs_tol = 0.9 * prec.target_abs_tol;  // d(e^{-J0}) <= dJ0
    const SeriesEval j0 =
        spitzer_sum(p_zero_terms(beta), 0.5 * beta * beta, inner, "p_zero");
    const double value = std::exp(-j0.value);
    return {value, j0.terms_used,
            value * j0.tail_bound + 4.0 * kEps * value};
}

SeriesEval mean_spitzer(Drift d, const Precision& prec) {
    validate(prec);
    return spitzer_sum(mean_terms(d.beta), 0.5 * d.beta * d.beta, prec, "mean");
}

SeriesEval var_spitzer(Drift d, const Precision& prec) {
    validate(prec);
    return spitzer_sum(var_terms(d.beta), 0.5 * d.beta * d.beta, prec, "var");
}

SeriesEval jk_zeta(MomentOrder k, Drift d, const Precision& prec) {
    validate(prec);
    if (k.k < 1) {
        throw DomainError("jk_zeta: k must be >= 1 (J_0 = -ln P(M=0))");
    }
    require_zeta_domain(d.beta, "jk_zeta");
    const double beta = d.beta;
    const int kk = k.k;

    double kfact = 1.0;  // k!
    for (int i = 2; i <= kk; ++i) kfact *= i;
    const double lead = (kfact / kk) / std::pow(2.0 * beta, kk);

    const Precision zp{1e-13, prec.max_terms};
    double jsum = 0.0;
    double jerr = 0.0;
    double binom = 1.0;
    for (int j = 0; j <= kk; ++j) {
        const double zeta_arg = 1.0 - 0.5 * (kk + j);
        // zeta_arg <= 1/2 and never 1 for k >= 1, j >= 0
        const SeriesEval zv = riemann_zeta(zeta_arg, zp);
        const double gam = std::exp(log_gamma(0.5 * (kk - j + 1)));
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        const double coef = binom * sign * gam / kSqrt2Pi *
                            std::pow(2.0, 0.5 * (kk - j - 1)) *
                            std::pow(beta, j);
        jsum += coef * zv.value;
        jerr += std::abs(coef) * zv.tail_bound;
        binom = binom * (kk - j) / (j + 1);
    }

    const double tsign = (kk % 2 == 0) ? -1.0 : 1.0;  // (-1)^{k+1}
    const double tcoef =
        tsign * kfact / kSqrt2Pi * std::pow(beta, kk + 1);
    Precision inner = prec;
    inner.target_abs_tol =
        0.3 * prec.target_abs_tol / std::max(1.0, std::abs(tcoef));
    const SeriesEval s =
        zeta_coeff_series(0.5 - kk, kk, 0.5 * beta * beta, inner, "jk");

    const double value = lead + jsum + tcoef * s.value;
    const double tail = std::abs(tcoef) * s.tail_bound + jerr +
                        8.0 * kEps * (std::abs(lead) + std::abs(jsum));
    return {value, s.terms_used, tail};
}

SeriesEval jk_spitzer(MomentOrder k, Drift d, const Precision& prec) {
    validate(prec);
    const double beta = d.beta;
    const int kk = k.k;
    if (kk == 0) {
        // J_0 is the exponent of the Spitzer product form by construction.
        Precision inner = prec;
        const SeriesEval j0 =
            spitzer_sum(p_zero_terms(beta), 0.5 * beta * beta, inner, "j0");
        return j0;
    }
    const double x = 0.5 * beta * beta;
    double kfact = 1.0;
    for (int i = 2; i <= kk; ++i) kfact *= i;

    // envelope: term_n <= k! e^{-x n} / (sqrt(2 pi) beta^{k+1} n^{3/2})
    const double env_c = kfact / (kSqrt2Pi * std::pow(beta, kk + 1));
    const double ratio = std::exp(-x);

    double sum = 0.0;
    for (double n = 1.0; n <= static_cast<double>(prec.max_terms); n += 1.0) {
        // truncated-normal moments m_j = int_beta^inf (y-beta)^j e^{-n y^2/2} dy
        // via the integration-by-parts recursion seeded by tail and density.
        const double t = beta * std::sqrt(n);
        const double i0 = kSqrt2Pi / std::sqrt(n) * upper_tail(t);
        const double dens = std::exp(-x * n);
        double prev2 = i0;
        double prev1 = dens / n - beta * i0;  // m_1
        double mk = (kk == 1) ? prev1 : 0.0;
        for (int j = 1; j < kk; ++j) {
            const double next = (j / n) * prev2 - beta * prev1;
            prev2 = prev1;
            prev1 = next;
            if (j + 1 == kk) mk = next;
        }
        sum += std::pow(n, kk - 0.5) / kSqrt2Pi * mk;

        const double env = env_c * std::exp(-x * (n + 1.0)) /
                           ((n + 1.0) * std::sqrt(n + 1.0));
        const double tail = env / (1.0 - ratio);
        if (tail <= prec.target_abs_tol || env == 0.0) {
            return {sum, static_cast<std::int64_t>(n), tail};
        }
    }
    throw ToleranceNotMet("jk: spitzer route: max_terms exhausted at beta = " +
                          std::to_string(beta));
}

WalkStats asymptotic_stats(Drift d) {
    const double beta = d.beta;
    const Precision zp{1e-13, 100000};
    const double zh = riemann_zeta(0.5, zp).value;
    const double zmh = riemann_zeta(-0.5, zp).value;
    const double p = std::sqrt(2.0) * beta * std::exp(beta * zh / kSqrt2Pi);
    const double mean = 0.5 / beta + zh / kSqrt2Pi + 0.25 * beta;
    const double var = 0.25 / (beta * beta) - 0.25 -
                       2.0 * zmh * beta / kSqrt2Pi -
                       beta * beta / 24.0;
    // truncations as written; no tail, so the "bound" is the first dropped
    // order of the expansion
    const SeriesEval pd{p, 1, std::abs(p) * beta * beta};
    const SeriesEval md{mean, 3, beta * beta};
    const SeriesEval vd{var, 4, beta * beta * beta};
    return make_stats(Method::asymptotic, beta, p, pd, mean, md, var, vd,
                      -std::log(p));
}

ComplexSeriesEval s_series(int j, C b, const Precision& prec) {
    validate(prec);
    if (j < 0 || j > 2) throw DomainError("s_series: index must be 0, 1, or 2");
    if (b == C{0.0, 0.0}) throw DomainError("s_series: b must be nonzero");
    if (b.imag() == 0.0 && b.real() >= 1.0) {
        throw BranchError("s_series: real b >= 1 touches the principal cuts");
    }
    const SSeriesParts p = s_series_parts(j, b);
    const double pmag = std::abs(p.prefactor);
    const double tol = std::max(prec.target_abs_tol / std::max(pmag, 1e-6),
                                1e-15);

    // Split point: remainder heuristic |B_4|/4! |f'''(K)| with slack 2.
    const double b4f = std::abs(detail::bernoulli_over_factorial(2));
    double K = std::max(16.0, std::ceil(8.0 * std::abs(b)));
    const double cap = std::min<double>(static_cast<double>(prec.max_terms), 1e6);
    auto rem_at = [&](double k) { return 2.0 * b4f * std::abs(p.d3(k)); };
    while (rem_at(K) > 0.5 * tol && K < cap) K = std::ceil(K * 1.7);
    if (rem_at(K) > 0.5 * tol) {
        throw ToleranceNotMet("s_series: max_terms exhausted");
    }

    C head{0.0, 0.0};
    for (double n = 1.0; n < K; n += 1.0) {
        const C t = p.f(n);
        if (!std::isfinite(t.real()) || !std::isfinite(t.imag())) {
            throw BranchError("s_series: non-finite term (branch crossing?)");
        }
        head += t;
    }
    const double b2f = detail::bernoulli_over_factorial(1);
    const C em = p.integral_from(K) + 0.5 * p.f(K) - b2f * p.d1(K) -
                 detail::bernoulli_over_factorial(2) * p.d3(K);
    const C value = p.prefactor * (head + em);
    const double tail =
        pmag * rem_at(K) + 16.0 * kEps * std::abs(value) * std::sqrt(K);
    return {value, static_cast<std::int64_t>(K) + 2, tail};
}

WalkStats stats_extended(Drift d, const Precision& prec) {
    const double beta = d.beta;
    const C b{0.0, -beta * beta / (4.0 * kPi)};
    const C ph{std::sqrt(0.5), std::sqrt(0.5)};  // e^{i pi/4}

    Precision sp = prec;
    sp.target_abs_tol = 0.1 * prec.target_abs_tol;
    const ComplexSeriesEval s0 = s_series(0, b, sp);
    const ComplexSeriesEval s1 = s_series(1, b, sp);
    const ComplexSeriesEval s2 = s_series(2, b, sp);

    // Tail re-expressions (derivation notes in the README): the mean tail
    // takes the conjugate phase and the variance tail a factor -2; both
    // combinations are pinned by the overlap tests against the other routes.
    const double t0 = beta / kPi * std::real(ph * s0.value);
    const double t1 = beta * beta / (2.0 * kPi * kPi) *
                      std::real(-std::conj(ph) * s1.value);
    const double t2 = -0.5 * beta * beta * beta / (kPi * kPi * kPi) *
                      std::real(ph * s2.value);

    const Precision zp{1e-13, prec.max_terms};
    const double zh = riemann_zeta(0.5, zp).value;
    const double zmh = riemann_zeta(-0.5, zp).value;

    // J0 = -ln P(M=0) assembled in log form so the deficit survives
    // rounding of p itself at large beta
    const double j0 = -(std::log(std::sqrt(2.0) * beta) +
                        zh * beta / kSqrt2Pi + t0);
    const double p = std::exp(-j0);
    const double mean = 0.5 / beta + zh / kSqrt2Pi + 0.25 * beta + t1;
    const double var = 0.25 / (beta * beta) - 0.25 -
                       2.0 * zmh * beta / kSqrt2Pi - beta * beta / 24.0 - t2;

    const SeriesEval pd{p, s0.terms_used,
                        p * (beta / kPi * s0.tail_bound + 8.0 * kEps)};
    const SeriesEval md{mean, s1.terms_used,
                        beta * beta / (2.0 * kPi * kPi) * s1.tail_bound};
    const SeriesEval vd{var, s2.terms_used,
                        0.5 * std::pow(beta, 3) / std::pow(kPi, 3) *
                            s2.tail_bound};
    return make_stats(Method::extended, beta, p, pd, mean, md, var, vd, j0);
}

WalkStats stats_zeta(Drift d, const Precision& prec) {
    const SeriesEval p = p_zero_zeta(d, prec);
    const SeriesEval m = mean_zeta(d, prec);
    const SeriesEval v = var_zeta(d, prec);
    return make_stats(Method::zeta_series, d.beta, p.value, p, m.value, m,
                      v.value, v, -std::log(p.value));
}

WalkStats stats_spitzer(Drift d, const Precision& prec) {
    Precision inner = prec;
    inner.target_abs_tol = 0.9 * prec.target_abs_tol;
    const SeriesEval j0 =
        spitzer_sum(p_zero_terms(d.beta), 0.5 * d.beta * d.beta, inner,
                    "p_zero");
    const double pval = std::exp(-j0.value);
    const SeriesEval p{pval, j0.terms_used,
                       pval * j0.tail_bound + 4.0 * kEps * pval};
    const SeriesEval m = mean_spitzer(d, prec);
    const SeriesEval v = var_spitzer(d, prec);
    return make_stats(Method::spitzer, d.beta, p.value, p, m.value, m, v.value,
                      v, j0.value);
}

WalkStats stats_auto(Drift d, const Precision& prec) {
    static const double beta0 = convergence_crossover().beta0;
    const double threshold = std::min(0.9 * kTwoSqrtPi, 1.2 * beta0);
    if (d.beta <= threshold) return stats_zeta(d, prec);
    return stats_spitzer(d, prec);
}

}  // namespace gwm
