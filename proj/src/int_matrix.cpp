#include "unimod/int_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <utility>

namespace unimod {

namespace {

// Advance to the next t-subset of {0..n-1} in lexicographic order.
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
    const std::size_t t = c.size();
    for (std::size_t i = t; i-- > 0;) {
        if (c[i] < n - t + i) {
            ++c[i];
            for (std::size_t j = i + 1; j < t; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

std::vector<std::size_t> first_combination(std::size_t t) {
    std::vector<std::size_t> c(t);
    std::iota(c.begin(), c.end(), std::size_t{0});
    return c;
}

// Cofactor expansion along the first row of a dense t x t block (t <= 4).
template <class T>
T cofactor_det(const T* m, std::size_t t) {
    switch (t) {
    case 1:
        return m[0];
    case 2:
        return m[0] * m[3] - m[1] * m[2];
    case 3:
        return m[0] * (m[4] * m[8] - m[5] * m[7]) - m[1] * (m[3] * m[8] - m[5] * m[6]) +
               m[2] * (m[3] * m[7] - m[4] * m[6]);
    default: {
        T acc = 0;
        T minor[9];
        for (std::size_t c = 0; c < t; ++c) {
            std::size_t w = 0;
            for (std::size_t i = 1; i < t; ++i)
                for (std::size_t j = 0; j < t; ++j)
                    if (j != c) minor[w++] = m[i * t + j];
            T term = m[c] * cofactor_det(minor, t - 1);
            if (c % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        return acc;
    }
    }
}

BigInt bareiss_det(std::vector<BigInt> m, std::size_t t) {
    int sign = 1;
    BigInt prev = 1;
    for (std::size_t p = 0; p + 1 < t; ++p) {
        if (m[p * t + p] == 0) {
            std::size_t swap_row = p + 1;
            while (swap_row < t && m[swap_row * t + p] == 0) ++swap_row;
            if (swap_row == t) return 0;
            for (std::size_t j = 0; j < t; ++j) std::swap(m[p * t + j], m[swap_row * t + j]);
            sign = -sign;
        }
        const BigInt& piv = m[p * t + p];
        for (std::size_t i = p + 1; i < t; ++i) {
            for (std::size_t j = p + 1; j < t; ++j) {
                BigInt& e = m[i * t + j];
                e = piv * e - m[i * t + p] * m[p * t + j];
                mpz_divexact(e.get_mpz_t(), e.get_mpz_t(), prev.get_mpz_t());
            }
            m[i * t + p] = 0;
        }
        prev = piv;
    }
    BigInt d = m[t * t - 1];
    if (sign < 0) d = -d;
    return d;
}

BigInt det_of_block(std::vector<BigInt> block, std::size_t t) {
    if (t <= 4) return cofactor_det(block.data(), t);
    return bareiss_det(std::move(block), t);
}

std::vector<BigInt> gather(const IntMatrix& a, std::span<const std::size_t> r, std::span<const std::size_t> c) {
    std::vector<BigInt> out;
    out.reserve(r.size() * c.size());
    for (auto i : r)
        for (auto j : c) out.push_back(a(i, j));
    return out;
}

using u128 = unsigned __int128;
using i128 = __int128;

u128 abs128(i128 v) { return v < 0 ? u128(-v) : u128(v); }

u128 gcd128(u128 a, u128 b) {
    while (b != 0) {
        u128 r = a % b;
        a = b;
        b = r;
    }
    return a;
}

} // namespace

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols) : IntMatrix(rows, cols, std::vector<BigInt>(rows * cols)) {}

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols, std::vector<BigInt> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
    if (rows_ == 0 || cols_ == 0) throw DomainError("matrix dimensions must be at least 1");
    if (entries_.size() != rows_ * cols_)
        throw DomainError("entry count " + std::to_string(entries_.size()) + " does not match " +
                          std::to_string(rows_) + "x" + std::to_string(cols_));
}

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<long>> rows)
    : rows_(rows.size()), cols_(rows.size() ? rows.begin()->size() : 0) {
    if (rows_ == 0 || cols_ == 0) throw DomainError("matrix dimensions must be at least 1");
    entries_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
        if (r.size() != cols_) throw DomainError("ragged matrix literal");
        for (long v : r) entries_.emplace_back(v);
    }
}

IntMatrix IntMatrix::identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

IntMatrix IntMatrix::transposed() const {
    IntMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    return IntMatrix(row_idx.size(), col_idx.size(), gather(*this, row_idx, col_idx));
}

IntMatrix IntMatrix::row_block(std::size_t first, std::size_t count) const {
    if (first + count > rows_) throw DomainError("row block out of range");
    std::vector<BigInt> out(entries_.begin() + static_cast<std::ptrdiff_t>(first * cols_),
                            entries_.begin() + static_cast<std::ptrdiff_t>((first + count) * cols_));
    return IntMatrix(count, cols_, std::move(out));
}

std::string IntMatrix::to_string() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < rows_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j).get_str();
        os << ']';
    }
    os << ']';
    return os.str();
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
    if (a.cols() != b.rows())
        throw DomainError("cannot multiply " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " by " +
                          std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
    IntMatrix c(a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t l = 0; l < a.cols(); ++l) {
            const BigInt& ail = a(i, l);
            if (ail == 0) continue;
            for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) += ail * b(l, j);
        }
    return c;
}

std::size_t binomial(std::size_t n, std::size_t t) {
    if (t > n) return 0;
    std::size_t r = 1;
    for (std::size_t i = 1; i <= t; ++i) r = r * (n - t + i) / i;
    return r;
}

BigInt determinant(const IntMatrix& a) {
    if (a.rows() != a.cols()) throw DomainError("determinant requires a square matrix");
    return det_of_block(std::vector<BigInt>(a.entries().begin(), a.entries().end()), a.rows());
}

MinorSet minors(const IntMatrix& a, std::size_t t) {
    const std::size_t hi = std::min(a.rows(), a.cols());
    if (t < 1 || t > hi)
        throw DomainError("minor order " + std::to_string(t) + " outside [1, " + std::to_string(hi) + "]");
    MinorSet out{t, {}};
    out.values.reserve(binomial(a.rows(), t) * binomial(a.cols(), t));
    auto r = first_combination(t);
    do {
        auto c = first_combination(t);
        do {
            out.values.push_back(det_of_block(gather(a, r, c), t));
        } while (next_combination(c, a.cols()));
    } while (next_combination(r, a.rows()));
    return out;
}

BigInt full_rank_minor_gcd(const IntMatrix& a) {
    const std::size_t k = a.rows(), n = a.cols();
    if (k > n)
        throw DomainError("k must not exceed n (got " + std::to_string(k) + "x" + std::to_string(n) + ")");
    std::vector<std::size_t> rows_all = first_combination(k);
    BigInt g = 0;
    auto c = first_combination(k);
    do {
        BigInt m = det_of_block(gather(a, rows_all, c), k);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), m.get_mpz_t());
        if (g == 1) break;
    } while (next_combination(c, n));
    return g;
}

bool is_unimodular(const IntMatrix& a) { return full_rank_minor_gcd(a) == 1; }

bool full_rank_minor_gcd_small(std::span<const long long> entries, std::size_t k, std::size_t n,
                               unsigned long long max_abs_entry, unsigned __int128& gcd_out) {
    if (k > n) throw DomainError("k must not exceed n");
    if (entries.size() != k * n) throw DomainError("entry count does not match dimensions");
    if (k > 4) return false;
    // Every cofactor term is at most k! * max^k in magnitude.
    long double bound = 1.0L;
    for (std::size_t i = 1; i <= k; ++i) bound *= static_cast<long double>(i) * static_cast<long double>(max_abs_entry);
    if (bound >= std::ldexp(1.0L, 120)) return false;

    i128 block[16];
    u128 g = 0;
    auto c = first_combination(k);
    do {
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) block[i * k + j] = entries[i * n + c[j]];
        g = gcd128(g, abs128(cofactor_det(block, k)));
        if (g == 1) break;
    } while (next_combination(c, n));
    gcd_out = g;
    return true;
}

bool is_unimodular_small(std::span<const long long> entries, std::size_t k, std::size_t n,
                         unsigned long long max_abs_entry) {
    if (k == 1) {
        // n-way gcd of the entries.
        unsigned long long g = 0;
        for (long long v : entries) {
            g = std::gcd(g, static_cast<unsigned long long>(v < 0 ? -static_cast<unsigned long long>(v) : v));
            if (g == 1) return true;
        }
        return false;
    }
    u128 g = 0;
    if (full_rank_minor_gcd_small(entries, k, n, max_abs_entry, g)) return g == 1;
    std::vector<BigInt> big;
    big.reserve(entries.size());
    for (long long v : entries) big.emplace_back(static_cast<long>(v));
    return is_unimodular(IntMatrix(k, n, std::move(big)));
}

} // namespace unimod
