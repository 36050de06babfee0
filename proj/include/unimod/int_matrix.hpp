#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "unimod/errors.hpp"

namespace unimod {

using BigInt = mpz_class;

/// Dense row-major matrix of arbitrary-precision integers.
///
/// Both dimensions are at least one and the entry count is always
/// rows * cols. Values are exact; nothing in this type ever rounds.
class IntMatrix {
public:
    IntMatrix(std::size_t rows, std::size_t cols);
    IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries);
    IntMatrix(std::initializer_list<std::initializer_list<long>> rows);

    static IntMatrix identity(std::size_t n);

    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    BigInt& operator()(std::size_t i, std::size_t j) { return entries_[i * cols_ + j]; }
    const BigInt& operator()(std::size_t i, std::size_t j) const { return entries_[i * cols_ + j]; }

    std::span<const BigInt> entries() const noexcept { return entries_; }
    std::span<const BigInt> row(std::size_t i) const { return {entries_.data() + i * cols_, cols_}; }

    IntMatrix transposed() const;
    IntMatrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const;
    /// Rows [first, first + count) as a new matrix.
    IntMatrix row_block(std::size_t first, std::size_t count) const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

    std::string to_string() const;

private:
    std::size_t rows_;
    std::size_t cols_;
    std::vector<BigInt> entries_;
};

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);

/// t-minors of a matrix in canonical order: row subsets outer, column
/// subsets inner, both lexicographic on the sorted index tuples.
struct MinorSet {
    std::size_t order = 0;
    std::vector<BigInt> values;
};

/// Exact determinant of a square matrix.
/// Cofactor expansion up to 4x4, fraction-free Bareiss elimination above.
BigInt determinant(const IntMatrix& a);

MinorSet minors(const IntMatrix& a, std::size_t t);

/// gcd of the absolute values of all k-minors of a k x n matrix (k <= n).
/// Zero iff every k-minor vanishes. Stops enumerating once the gcd hits 1.
BigInt full_rank_minor_gcd(const IntMatrix& a);

/// A k x n matrix extends to an element of GL_n(Z) iff its full-rank
/// minors are coprime.
bool is_unimodular(const IntMatrix& a);

/// Number of C(n, t) index subsets; used for MinorSet sizing.
std::size_t binomial(std::size_t n, std::size_t t);

/// Fast path for machine-word inputs: same contract as full_rank_minor_gcd
/// but over int64 entries. Returns false when intermediate minors could
/// overflow 128 bits, in which case the caller must use the exact path.
bool full_rank_minor_gcd_small(std::span<const long long> entries, std::size_t k, std::size_t n,
                               unsigned long long max_abs_entry, unsigned __int128& gcd_out);

/// Unimodularity of a small machine-word matrix. Uses the 128-bit path
/// when safe and falls back to the exact path otherwise.
bool is_unimodular_small(std::span<const long long> entries, std::size_t k, std::size_t n,
                         unsigned long long max_abs_entry);

} // namespace unimod
