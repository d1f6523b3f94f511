#pragma once

#include "dtk/nl_dt.hpp"

#include <random>

namespace dtk {

struct RandomTableOptions {
    long ell = 4;
    int max_entries = 10;
    /// k is drawn uniformly from [-k_range, k_range].
    long k_range = 3;
    /// Rows are drawn from [d_lo, d_hi]; the defaults keep them in [0, ell).
    std::optional<long> d_lo;
    std::optional<long> d_hi;
    /// How far below the vanishing bound h may go.
    long h_depth = 6;
};

/// A valid random fibration: every entry obeys the vanishing bound, values
/// are small nonzero rationals. Deterministic for a given generator state.
FibrationSpec random_fibration(std::mt19937_64& rng, const RandomTableOptions& options);

/// A random fibration with k = 0 whose table is closed under the NL symmetry
/// on the window d in [-2 ell, 3 ell], h >= h_lo, grown from `seeds` random
/// entries spread over the rows 0..ell-1. Requires even ell.
FibrationSpec random_symmetric_fibration(std::mt19937_64& rng, long ell, int seeds, long h_lo = -40);

} // namespace dtk
