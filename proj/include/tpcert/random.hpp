#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "tpcert/matrix.hpp"

namespace tpcert {

// Deterministic sampling utilities. All randomized operations in the
// library take an explicit seed or engine; draws use plain modulo
// reduction so sequences do not depend on the standard library's
// distribution implementations.

using Rng = std::mt19937_64;

inline std::uint64_t rand_below(Rng& rng, std::uint64_t n) { return rng() % n; }

inline long rand_in(Rng& rng, long lo, long hi) {
    return lo + static_cast<long>(rand_below(rng, static_cast<std::uint64_t>(hi - lo + 1)));
}

// Grid rational in [lo, hi] with denominator `grid`; exact in exact mode.
template <ScalarType S>
S sample_grid(Rng& rng, long lo, long hi, long grid = 64) {
    const long ticks = rand_in(rng, lo * grid, hi * grid);
    return S(ticks) / S(grid);
}

// Alternating vector with component magnitudes on the grid of [1, 2].
template <ScalarType S>
std::vector<S> sample_alternating_vector(Rng& rng, int r, bool leading_positive) {
    std::vector<S> x(static_cast<size_t>(r));
    int s = leading_positive ? 1 : -1;
    for (int i = 0; i < r; ++i) {
        const S magnitude = S(64 + static_cast<long>(rand_below(rng, 65))) / S(64);
        x[static_cast<size_t>(i)] = S(s) * magnitude;
        s = -s;
    }
    return x;
}

// Nonzero vector with grid components in [-2, 2]; zero components are
// allowed, an all-zero draw is rerolled.
template <ScalarType S>
std::vector<S> sample_nonzero_vector(Rng& rng, int n) {
    for (;;) {
        std::vector<S> x(static_cast<size_t>(n));
        bool any = false;
        for (int i = 0; i < n; ++i) {
            x[static_cast<size_t>(i)] = sample_grid<S>(rng, -2, 2, 8);
            any = any || sign(x[static_cast<size_t>(i)]) != 0;
        }
        if (any) return x;
    }
}

template <ScalarType S>
Matrix<S> sample_integer_matrix(Rng& rng, int rows, int cols, long lo, long hi) {
    Matrix<S> a(rows, cols);
    for (int i = 0; i < rows; ++i)
        for (int j = 0; j < cols; ++j) a(i, j) = S(rand_in(rng, lo, hi));
    return a;
}

}  // namespace tpcert
