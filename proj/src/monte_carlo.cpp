// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0

#include "gwm/monte_carlo.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <sstream>
#include <thread>
#include <vector>

#include "gwm/errors.hpp"
#include "gwm/special_functions.hpp"

namespace gwm {
namespace {

constexpr std::int64_t kChunkPaths = 8192;

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Fixed-stream normal generator: mt19937_64 + (x >> 11) * 2^-53 uniforms +
// Marsaglia polar. Part of the determinism contract; do not change.
class NormalStream {
  public:
    explicit NormalStream(std::uint64_t seed) : eng_(seed) {}

    double next() {
        if (have_spare_) {
            have_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        have_spare_ = true;
        return u * f;
    }

  private:
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

struct ChunkSums {
    double m1 = 0.0, m2 = 0.0, m3 = 0.0, m4 = 0.0;
    std::int64_t zero_count = 0;
};

ChunkSums run_chunk(std::uint64_t chunk_seed, std::int64_t paths, double beta,
                    std::int64_t horizon) {
    NormalStream rng(chunk_seed);
    ChunkSums out;
    for (std::int64_t p = 0; p < paths; ++p) {
        double s = 0.0;
        double m = 0.0;  // S_0 = 0 is always a candidate
        for (std::int64_t n = 0; n < horizon; ++n) {
            s += rng.next() - beta;
            if (s > m) m = s;
        }
        if (m == 0.0) ++out.zero_count;
        const double m2 = m * m;
        out.m1 += m;
        out.m2 += m2;
        out.m3 += m2 * m;
        out.m4 += m2 * m2;
    }
    return out;
}

}  // namespace

McEstimate simulate_max(const McConfig& cfg) {
    if (cfg.paths < 1) throw DomainError("simulate_max: paths must be >= 1");
    if (cfg.horizon && *cfg.horizon < 1) {
        throw DomainError("simulate_max: horizon must be >= 1");
    }
    const double beta = cfg.drift.beta;
    const std::int64_t horizon =
        cfg.horizon ? *cfg.horizon
                    : static_cast<std::int64_t>(
                          std::ceil(60.0 / (beta * beta)));

    // Truncation control: P(max occurs past the horizon) <= sum_{n>N} P(S_n>0)
    //   <= P(-beta sqrt(N+1)) / (1 - e^{-beta^2/2})  (Mills envelope).
    const double q = std::exp(-0.5 * beta * beta);
    const double trunc_bound =
        std_normal_cdf(-beta * std::sqrt(static_cast<double>(horizon) + 1.0)) /
        (1.0 - q);
    const double target =
        1e-4 / std::sqrt(static_cast<double>(cfg.paths));
    if (!(trunc_bound <= target)) {
        throw HorizonTooSmall(
            "simulate_max: truncation bound " + std::to_string(trunc_bound) +
            " exceeds target " + std::to_string(target) +
            " at horizon " + std::to_string(horizon));
    }

    const auto chunks =
        (cfg.paths + kChunkPaths - 1) / kChunkPaths;
    std::vector<ChunkSums> results(static_cast<std::size_t>(chunks));

    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const auto workers =
        static_cast<unsigned>(std::min<std::int64_t>(hw, chunks));
    std::atomic<std::int64_t> next_chunk{0};
    auto work = [&] {
        for (;;) {
            const std::int64_t c = next_chunk.fetch_add(1);
            if (c >= chunks) break;
            const std::int64_t lo = c * kChunkPaths;
            const std::int64_t n = std::min(kChunkPaths, cfg.paths - lo);
            results[static_cast<std::size_t>(c)] =
                run_chunk(splitmix64(cfg.seed + static_cast<std::uint64_t>(c)),
                          n, beta, horizon);
        }
    };
    if (workers <= 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& t : pool) t.join();
    }

    // Reduce in chunk order (determinism contract).
    ChunkSums tot;
    for (const auto& r : results) {
        tot.m1 += r.m1;
        tot.m2 += r.m2;
        tot.m3 += r.m3;
        tot.m4 += r.m4;
        tot.zero_count += r.zero_count;
    }

    const double n = static_cast<double>(cfg.paths);
    const double mu = tot.m1 / n;
    const double raw2 = tot.m2 / n;
    const double raw3 = tot.m3 / n;
    const double raw4 = tot.m4 / n;
    const double c2 = std::max(0.0, raw2 - mu * mu);
    const double c4 = std::max(
        0.0, raw4 - 4.0 * mu * raw3 + 6.0 * mu * mu * raw2 - 3.0 * mu * mu * mu * mu);
    const double var_hat = (n > 1.0) ? c2 * n / (n - 1.0) : 0.0;
    const double p_hat = static_cast<double>(tot.zero_count) / n;

    McEstimate est;
    est.p_zero_hat = p_hat;
    est.mean_hat = mu;
    est.var_hat = var_hat;
    est.se_mean = std::sqrt(c2 / n);
    est.se_pzero = std::sqrt(std::max(0.0, p_hat * (1.0 - p_hat)) / n);
    est.se_var = std::sqrt(std::max(0.0, c4 - c2 * c2) / n);
    est.horizon_used = horizon;
    std::ostringstream note;
    note << "P(argmax beyond horizon) <= " << trunc_bound;
    est.truncation_note = note.str();
    return est;
}

}  // namespace gwm
