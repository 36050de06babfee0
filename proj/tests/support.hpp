#pragma once

#include <cstdint>
#include <vector>

#include "unimod/int_matrix.hpp"
#include "unimod/rng.hpp"

namespace unimod::testing {

/// k x n matrix with entries uniform in [lo, hi).
inline IntMatrix random_matrix(SplitMix64& rng, std::size_t k, std::size_t n, long lo, long hi) {
    std::vector<BigInt> e;
    e.reserve(k * n);
    for (std::size_t i = 0; i < k * n; ++i)
        e.emplace_back(lo + static_cast<long>(rng.below(static_cast<std::uint64_t>(hi - lo))));
    return IntMatrix(k, n, std::move(e));
}

/// Random element of GL_n(Z): a product of elementary column operations.
inline IntMatrix random_unimodular(SplitMix64& rng, std::size_t n, int steps = 12) {
    IntMatrix w = IntMatrix::identity(n);
    for (int s = 0; s < steps; ++s) {
        const auto a = rng.below(n), b = rng.below(n);
        const int kind = static_cast<int>(rng.below(3));
        if (kind == 0 && a != b) {
            const long q = static_cast<long>(rng.below(7)) - 3;
            for (std::size_t r = 0; r < n; ++r) w(r, b) += q * w(r, a);
        } else if (kind == 1) {
            for (std::size_t r = 0; r < n; ++r) std::swap(w(r, a), w(r, b));
        } else {
            for (std::size_t r = 0; r < n; ++r) w(r, a) = -w(r, a);
        }
    }
    return w;
}

/// Leibniz-formula determinant: sum over all permutations.
inline BigInt leibniz_det(const IntMatrix& a) {
    const std::size_t n = a.rows();
    std::vector<std::size_t> perm(n);
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    BigInt total = 0;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
        BigInt term = 1;
        for (std::size_t i = 0; i < n; ++i) term *= a(i, perm[i]);
        if (inversions % 2) total -= term; else total += term;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return total;
}

} // namespace unimod::testing
