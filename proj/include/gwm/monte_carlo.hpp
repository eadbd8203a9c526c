// Copyright (c) 2026 gwm developers.
// SPDX-License-Identifier: Apache-2.0

#ifndef GWM_MONTE_CARLO_HPP
#define GWM_MONTE_CARLO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "gwm/gauss_walk.hpp"

namespace gwm {

/// Simulation request. A missing horizon selects the auto rule
/// N = ceil(60/beta^2), which puts the per-step exceedance probability
/// below e^{-30} at the cut.
struct McConfig {
    McConfig(Drift d, std::uint64_t seed_, std::int64_t paths_)
        : drift(d), seed(seed_), paths(paths_) {}
    Drift drift;
    std::uint64_t seed = 1;
    std::int64_t paths = 1;
    std::optional<std::int64_t> horizon;  // empty -> auto
};

struct McEstimate {
    double p_zero_hat = 0.0;
    double mean_hat = 0.0;
    double var_hat = 0.0;
    double se_pzero = 0.0;
    double se_mean = 0.0;
    double se_var = 0.0;
    std::int64_t horizon_used = 0;
    std::string truncation_note;
};

/// Simulates cfg.paths independent walks S_n of N(-beta, 1) increments up to
/// the horizon and estimates P(M=0), E M, Var M with standard errors.
///
/// Determinism contract: identical (seed, paths, horizon) give bit-identical
/// results for any worker count. The variate stream is fixed: paths are
/// processed in chunks of 8192; chunk c uses std::mt19937_64 seeded with
/// splitmix64(seed + c), uniforms are (x >> 11) * 2^-53, and normals come
/// from the Marsaglia polar method with the spare carried within the chunk.
/// Chunk results are reduced in index order.
///
/// Throws HorizonTooSmall when the truncation bound
/// sum_{n>N} P(S_n > 0) exceeds 1e-4 of the target precision 1/sqrt(paths).
McEstimate simulate_max(const McConfig& cfg);

}  // namespace gwm

#endif
