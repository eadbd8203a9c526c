// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <limits>

#include "gwm/errors.hpp"
#include "gwm/special_functions.hpp"

using namespace gwm;

namespace {

constexpr double kPi = 3.14159265358979323846;

// Independent Basel oracle: direct summation with a rigorous integral
// bracket, sum_{n>N} n^{-2} in (1/(N+1), 1/N).
double basel_oracle(double* err = nullptr) {
    const int N = 20000;
    double sum = 0.0;
    for (int n = N; n >= 1; --n) sum += 1.0 / (static_cast<double>(n) * n);
    const double lo = 1.0 / (N + 1.0);
    const double hi = 1.0 / N;
    if (err) *err = 0.5 * (hi - lo) + 1e-14;
    return sum + 0.5 * (lo + hi);
}

// Mills-ratio asymptotic for the far normal tail:
// Q(t) = phi(t)/t (1 - 1/t^2 + 3/t^4 - 15/t^6 + ...). Optimal truncation:
// stop before the terms start growing; the error is below the first
// omitted term (alternating envelope), ~1e-14 relative at t = 8.
double normal_tail_oracle(double t) {
    const double phi = std::exp(-0.5 * t * t) / std::sqrt(2.0 * kPi);
    double term = 1.0;
    double sum = 0.0;
    for (int j = 0; j < 200; ++j) {
        sum += term;
        const double next = term * -(2.0 * j + 1.0) / (t * t);
        if (std::abs(next) >= std::abs(term)) break;
        term = next;
    }
    return phi / t * sum;
}

// Bernoulli numbers from the defining recurrence sum_j C(k+1,j) B_j = 0.
double bernoulli_recurrence_oracle(int k) {
    std::vector<double> b(static_cast<std::size_t>(k) + 1, 0.0);
    b[0] = 1.0;
    for (int m = 1; m <= k; ++m) {
        double acc = 0.0;
        double binom = 1.0;  // C(m+1, j)
        for (int j = 0; j < m; ++j) {
            acc += binom * b[static_cast<std::size_t>(j)];
            binom = binom * (m + 1 - j) / (j + 1);
        }
        b[static_cast<std::size_t>(m)] = -acc / (m + 1.0);
    }
    return b[static_cast<std::size_t>(k)];
}

}  // namespace

TEST_CASE("riemann zeta at s = 2 matches the Basel oracle and pi^2/6") {
    double oerr = 0.0;
    const double oracle = basel_oracle(&oerr);
    const SeriesEval z = riemann_zeta(2.0, {1e-13, 100000});
    CHECK(std::abs(z.value - oracle) <= oerr + 1e-12);
    CHECK(z.value == doctest::Approx(kPi * kPi / 6.0).epsilon(1e-13));
    CHECK(std::abs(z.value - kPi * kPi / 6.0) <= z.tail_bound + 1e-15);
}

TEST_CASE("riemann zeta at the paper's half-integer constants") {
    CHECK(std::abs(riemann_zeta(0.5).value - (-1.4604)) < 5e-5);
    CHECK(std::abs(riemann_zeta(-0.5).value - (-0.2079)) < 5e-5);
}

TEST_CASE("zeta(-1) from one application of the functional equation") {
    // 2^{1-s} Gamma(s) zeta(s) cos(s pi/2) = pi^s zeta(1-s) at s = 2
    const double basel = basel_oracle();
    const double expected = 0.5 * 1.0 * basel * std::cos(kPi) / (kPi * kPi);
    CHECK(riemann_zeta(-1.0).value ==
          doctest::Approx(expected).epsilon(1e-11));
    CHECK(expected == doctest::Approx(-1.0 / 12.0).epsilon(1e-7));
}

TEST_CASE("reflection self-consistency both directions") {
    for (double s : {1.5, 2.5, 3.5}) {
        const double zs = riemann_zeta(s, {1e-13, 100000}).value;
        const double z1ms = riemann_zeta(1.0 - s, {1e-13, 100000}).value;
        // forward: zeta(1-s) from zeta(s)
        const double fwd = std::pow(2.0, 1.0 - s) * std::tgamma(s) * zs *
                           std::cos(0.5 * s * kPi) / std::pow(kPi, s);
        CHECK(std::abs(fwd - z1ms) < 1e-11);
        // and back again
        const double bwd = z1ms * std::pow(kPi, s) /
                           (std::pow(2.0, 1.0 - s) * std::tgamma(s) *
                            std::cos(0.5 * s * kPi));
        CHECK(std::abs(bwd - zs) < 1e-11);
    }
}

TEST_CASE("zeta pole and trivial zeros") {
    CHECK_THROWS_AS(riemann_zeta(1.0), PoleAtOne);
    CHECK_THROWS_AS(riemann_zeta(1.0 + 5e-13), PoleAtOne);
    CHECK(riemann_zeta(-2.0).value == 0.0);
    CHECK(riemann_zeta(-8.0).value == 0.0);
    CHECK(riemann_zeta(0.0).value == -0.5);
}

TEST_CASE("hurwitz zeta reduces to riemann zeta at v = 1") {
    for (double s : {-1.5, -0.5, 0.5, 2.0, 3.0}) {
        const SeriesEval h = hurwitz_zeta(s, 1.0, {1e-13, 100000});
        const SeriesEval r = riemann_zeta(s, {1e-13, 100000});
        CHECK(std::abs(h.value - r.value) <=
              h.tail_bound + r.tail_bound + 1e-12);
    }
}

TEST_CASE("hurwitz zeta(2, 1/2) equals the direct-sum oracle and pi^2/2") {
    // sum (n + 1/2)^{-2} with integral bracket
    const int N = 20000;
    double sum = 0.0;
    for (int n = N - 1; n >= 0; --n) {
        const double t = n + 0.5;
        sum += 1.0 / (t * t);
    }
    const double lo = 1.0 / (N + 0.5);
    const double hi = 1.0 / (N - 0.5);
    const double oracle = sum + 0.5 * (lo + hi);
    const double oerr = 0.5 * (hi - lo) + 1e-13;
    const SeriesEval h = hurwitz_zeta(2.0, 0.5, {1e-13, 100000});
    CHECK(std::abs(h.value - oracle) <= oerr + 1e-12);
    CHECK(h.value == doctest::Approx(kPi * kPi / 2.0).epsilon(1e-12));
}

TEST_CASE("hurwitz zeta(3, 1) and (-1, 1)") {
    CHECK(hurwitz_zeta(3.0, 1.0).value ==
          doctest::Approx(1.202056903159594).epsilon(1e-12));
    CHECK(hurwitz_zeta(-1.0, 1.0).value ==
          doctest::Approx(-1.0 / 12.0).epsilon(1e-11));
}

TEST_CASE("hurwitz zeta domain errors") {
    CHECK_THROWS_AS(hurwitz_zeta(2.0, 0.0), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(2.0, -1.0), DomainError);
    CHECK_THROWS_AS(hurwitz_zeta(1.0, 2.0), PoleAtOne);
}

TEST_CASE("lerch phi limiting and classical values") {
    // z -> 0: only the n = 0 term survives, Phi -> v^{-s}
    const SeriesEval tiny = lerch_phi(1e-12, 0.5, 1.0);
    CHECK(std::abs(tiny.value - 1.0) < 1e-11);

    // z = 1 reduces to zeta
    CHECK(lerch_phi(1.0, 2.0, 1.0).value ==
          doctest::Approx(kPi * kPi / 6.0).epsilon(1e-12));

    // Phi(1/2, 1, 1) = -ln(1 - z)/z = 2 ln 2; direct-summation oracle
    double osum = 0.0;
    for (int n = 200; n >= 0; --n) osum += std::pow(0.5, n) / (n + 1.0);
    CHECK(osum == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-15));
    CHECK(lerch_phi(0.5, 1.0, 1.0, {1e-13, 100000}).value ==
          doctest::Approx(osum).epsilon(1e-12));
}

TEST_CASE("lerch phi: direct and Bateman strategies agree") {
    const double z = std::exp(-0.125);
    const SeriesEval a = lerch_phi_direct(z, 0.5, 1.0, {1e-13, 2000000});
    const SeriesEval b = lerch_phi_bateman(z, 0.5, 1.0, {1e-13, 100000});
    CHECK(std::abs(a.value - b.value) < 1e-11);

    // general v as well
    const SeriesEval c = lerch_phi_direct(0.8, -0.5, 1.3, {1e-13, 2000000});
    const SeriesEval d = lerch_phi_bateman(0.8, -0.5, 1.3, {1e-13, 100000});
    CHECK(std::abs(c.value - d.value) < 1e-10);
}

TEST_CASE("lerch phi(1, s, 1) equals riemann zeta") {
    for (double s : {1.5, 2.0, 3.0}) {
        CHECK(std::abs(lerch_phi(1.0, s, 1.0).value -
                       riemann_zeta(s).value) < 1e-11);
    }
}

TEST_CASE("splitting identity: e^{-x} Phi(e^{-x}, 1/2, 1) = sum e^{-xn}/sqrt(n)") {
    for (double beta : {0.8, 1.5, 3.0}) {
        const double x = 0.5 * beta * beta;
        const double z = std::exp(-x);
        double direct = 0.0;
        for (int n = 400; n >= 1; --n) {
            direct += std::exp(-x * n) / std::sqrt(static_cast<double>(n));
        }
        const double via_lerch = z * lerch_phi(z, 0.5, 1.0, {1e-13, 2000000}).value;
        CHECK(std::abs(via_lerch - direct) < 1e-10);
    }
}

TEST_CASE("lerch phi errors") {
    CHECK_THROWS_AS(lerch_phi(0.0, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(lerch_phi(1.5, 0.5, 1.0), DomainError);
    CHECK_THROWS_AS(lerch_phi(0.5, 0.5, 0.0), DomainError);
    CHECK_THROWS_AS(lerch_phi_bateman(0.9, 2.0, 1.0), BatemanInvalid);
    CHECK_THROWS_AS(lerch_phi(1.0, 1.0, 1.0), PoleAtOne);
}

TEST_CASE("normal cdf values and symmetry") {
    CHECK(std_normal_cdf(0.0) == 0.5);

    // 1 - P(-a) identity within 1 ulp at a = 1.3
    const double p = std_normal_cdf(1.3);
    const double q = 1.0 - std_normal_cdf(-1.3);
    CHECK(std::abs(p - q) <= std::numeric_limits<double>::epsilon());

    // far tail vs the Mills oracle
    const double tail = std_normal_cdf(-8.0);
    const double oracle = normal_tail_oracle(8.0);
    CHECK(std::abs(tail - oracle) / oracle < 1e-12);
    CHECK(tail == doctest::Approx(6.221e-16).epsilon(1e-3));

    // P(a) + P(-a) = 1 within 2 ulp across a grid
    for (int i = 0; i <= 1000; ++i) {
        const double a = -10.0 + 0.02 * i;
        const double s = std_normal_cdf(a) + std_normal_cdf(-a);
        CHECK(std::abs(s - 1.0) <= 2.0 * std::numeric_limits<double>::epsilon());
    }
}

TEST_CASE("normal cdf is monotone nondecreasing on [-10, 10]") {
    double prev = std_normal_cdf(-10.0);
    for (int i = 1; i <= 10000; ++i) {
        const double a = -10.0 + 20.0 * i / 10000.0;
        const double cur = std_normal_cdf(a);
        CHECK(cur >= prev);
        prev = cur;
    }
}

TEST_CASE("bernoulli numbers: classical values and the recurrence oracle") {
    CHECK(bernoulli_number(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(bernoulli_number(4) == doctest::Approx(-1.0 / 30.0).epsilon(1e-15));
    CHECK(bernoulli_number(12) ==
          doctest::Approx(bernoulli_recurrence_oracle(12)).epsilon(1e-12));
    CHECK(bernoulli_number(12) ==
          doctest::Approx(-691.0 / 2730.0).epsilon(1e-14));
    for (int k : {2, 4, 6, 8, 10, 14, 16, 20}) {
        CHECK(bernoulli_number(k) ==
              doctest::Approx(bernoulli_recurrence_oracle(k)).epsilon(1e-11));
    }
    CHECK_THROWS_AS(bernoulli_number(3), DomainError);
    CHECK_THROWS_AS(bernoulli_number(42), DomainError);
    CHECK_THROWS_AS(bernoulli_number(0), DomainError);
}

TEST_CASE("bernoulli polynomials") {
    // oracle from the recurrence-derived coefficients: B_2(t) = t^2 - t + 1/6
    for (double t : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        CHECK(bernoulli_poly(2, t) ==
              doctest::Approx(t * t - t + 1.0 / 6.0).epsilon(1e-14));
    }
    CHECK(bernoulli_poly(2, 0.0) == doctest::Approx(1.0 / 6.0));
    CHECK(bernoulli_poly(2, 0.5) == doctest::Approx(-1.0 / 12.0));
    CHECK(bernoulli_poly(1, 0.5) == doctest::Approx(0.0).epsilon(1e-16));
    CHECK_THROWS_AS(bernoulli_poly(41, 0.5), DomainError);
    CHECK_THROWS_AS(bernoulli_poly(2, 1.5), DomainError);
}

TEST_CASE("|B_2k(t)| <= |B_2k| on [0, 1] (the remainder-bound lemma)") {
    for (int k = 1; k <= 8; ++k) {
        const double bk = std::abs(bernoulli_number(2 * k));
        for (int i = 0; i <= 200; ++i) {
            const double t = i / 200.0;
            CHECK(std::abs(bernoulli_poly(2 * k, t)) <= bk * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("log gamma") {
    CHECK(log_gamma(0.5) ==
          doctest::Approx(std::log(std::sqrt(kPi))).epsilon(1e-13));
    CHECK(log_gamma(5.0) == doctest::Approx(std::log(24.0)).epsilon(1e-13));
    CHECK(log_gamma(2.5) ==
          doctest::Approx(std::log(3.0 * std::sqrt(kPi) / 4.0)).epsilon(1e-13));
    CHECK(log_gamma(1.0) == 0.0);
    CHECK(log_gamma(2.0) == 0.0);
    CHECK_THROWS_AS(log_gamma(0.0), DomainError);
    CHECK_THROWS_AS(log_gamma(-3.0), DomainError);
}

TEST_CASE("series evaluations report honest tail bounds") {
    // spot-check |computed - truth| <= tail_bound on values known exactly
    const SeriesEval z2 = riemann_zeta(2.0, {1e-12, 100000});
    CHECK(std::abs(z2.value - kPi * kPi / 6.0) <= z2.tail_bound + 1e-16);
    const SeriesEval h = hurwitz_zeta(2.0, 0.5, {1e-12, 100000});
    CHECK(std::abs(h.value - kPi * kPi / 2.0) <= h.tail_bound + 1e-15);
    CHECK(z2.terms_used >= 1);
    CHECK(z2.tail_bound >= 0.0);
}
