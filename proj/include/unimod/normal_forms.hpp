#pragma once

#include <vector>

#include "unimod/int_matrix.hpp"

namespace unimod {

/// Hermite normal form of a k x n matrix A (k <= n) under column operations.
///
/// H = A * U^{-1}, so A = H * U with U in GL_n(Z). H is right-justified:
/// processing rows bottom-up, each row with a pivot takes the next column
/// to the left, the pivot is positive, every entry left of it in that row
/// is zero, and the entries to its right in the same row lie in
/// [0, pivot). Columns left of the last pivot are zero. For a full-rank
/// A the result is [O | T] with T upper triangular, and a unimodular A
/// gives exactly [O | I_k].
struct HnfResult {
    IntMatrix H;
    IntMatrix U;
    int det_u = 1; // -1 or +1
    std::size_t rank = 0;
    /// pivot_cols[i] is the pivot column of row i, or -1 for a row without one.
    std::vector<long> pivot_cols;
};

/// Smith normal form L * A * R = S with unimodular L (k x k) and R (n x n).
///
/// S = [O | D] where D carries diag(d_1, ..., d_r) in its bottom-right
/// r x r corner and zeros elsewhere; d_i divides d_{i+1}.
struct SnfResult {
    IntMatrix S;
    std::vector<BigInt> invariants;
    IntMatrix L;
    IntMatrix R;
};

HnfResult hnf(const IntMatrix& a);

/// True iff hnf(a).H is [O_{k x (n-k)} | I_k].
bool is_trivial_hnf(const IntMatrix& a);

/// The block matrix [O_{k x (n-k)} | I_k].
IntMatrix trivial_block(std::size_t k, std::size_t n);

/// Square M with |det M| = 1 whose last k rows equal a.
/// Throws NotUnimodular (carrying the minor gcd) otherwise.
IntMatrix complete_to_gl(const IntMatrix& a);

SnfResult snf(const IntMatrix& a);

} // namespace unimod
