#include "unimod/normal_forms.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace unimod {

namespace {

// Column-operation Hermite kernel for any shape. Maintains
//   work = A * V   and   A = work * U   with U = V^{-1},
// where every step is an elementary unimodular column operation on work
// and V, mirrored as the inverse row operation on U.
struct ColumnHermite {
    IntMatrix work;
    IntMatrix V;
    IntMatrix U;
    int det_u = 1;
    std::vector<long> pivot_cols;
    std::size_t rank = 0;

    explicit ColumnHermite(const IntMatrix& a)
        : work(a), V(IntMatrix::identity(a.cols())), U(IntMatrix::identity(a.cols())),
          pivot_cols(a.rows(), -1) {}

    // col_j -= q * col_c
    void subtract_column(std::size_t c, std::size_t j, const BigInt& q) {
        for (std::size_t r = 0; r < work.rows(); ++r) work(r, j) -= q * work(r, c);
        for (std::size_t r = 0; r < V.rows(); ++r) V(r, j) -= q * V(r, c);
        for (std::size_t s = 0; s < U.cols(); ++s) U(c, s) += q * U(j, s);
    }

    void negate_column(std::size_t c) {
        for (std::size_t r = 0; r < work.rows(); ++r) work(r, c) = -work(r, c);
        for (std::size_t r = 0; r < V.rows(); ++r) V(r, c) = -V(r, c);
        for (std::size_t s = 0; s < U.cols(); ++s) U(c, s) = -U(c, s);
        det_u = -det_u;
    }

    // Moves gcd(work(i,c), work(i,j)) into column c and zeroes work(i,j).
    void combine(std::size_t i, std::size_t c, std::size_t j) {
        const BigInt a = work(i, c);
        const BigInt b = work(i, j);
        if (b == 0) return;
        if (a != 0 && mpz_divisible_p(b.get_mpz_t(), a.get_mpz_t())) {
            subtract_column(c, j, BigInt(b / a));
            return;
        }
        BigInt g, x, y;
        mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
        const BigInt ag = a / g;
        const BigInt bg = b / g;
        // [col_c, col_j] <- [col_c, col_j] * [[x, -b/g], [y, a/g]]   (det 1)
        auto mix_cols = [&](IntMatrix& m) {
            for (std::size_t r = 0; r < m.rows(); ++r) {
                BigInt vc = m(r, c), vj = m(r, j);
                m(r, c) = x * vc + y * vj;
                m(r, j) = ag * vj - bg * vc;
            }
        };
        mix_cols(work);
        mix_cols(V);
        // inverse [[a/g, b/g], [-y, x]] applied to rows c, j of U
        for (std::size_t s = 0; s < U.cols(); ++s) {
            BigInt uc = U(c, s), uj = U(j, s);
            U(c, s) = ag * uc + bg * uj;
            U(j, s) = x * uj - y * uc;
        }
    }

    void run() {
        long c = static_cast<long>(work.cols()) - 1;
        for (std::size_t i = work.rows(); i-- > 0 && c >= 0;) {
            const auto pc = static_cast<std::size_t>(c);
            for (std::size_t j = 0; j < pc; ++j) combine(i, pc, j);
            if (work(i, pc) == 0) continue;
            if (work(i, pc) < 0) negate_column(pc);
            const BigInt& pivot = work(i, pc);
            for (std::size_t j = pc + 1; j < work.cols(); ++j) {
                BigInt q;
                mpz_fdiv_q(q.get_mpz_t(), work(i, j).get_mpz_t(), pivot.get_mpz_t());
                if (q != 0) subtract_column(pc, j, q);
            }
            pivot_cols[i] = c;
            ++rank;
            --c;
        }
    }
};

void require_wide(const IntMatrix& a) {
    if (a.rows() > a.cols())
        throw DomainError("k must not exceed n (got " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                          ")");
}

bool at_most_one_per_line(const IntMatrix& m) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
        int nz = 0;
        for (std::size_t j = 0; j < m.cols(); ++j) nz += m(i, j) != 0;
        if (nz > 1) return false;
    }
    for (std::size_t j = 0; j < m.cols(); ++j) {
        int nz = 0;
        for (std::size_t i = 0; i < m.rows(); ++i) nz += m(i, j) != 0;
        if (nz > 1) return false;
    }
    return true;
}

} // namespace

HnfResult hnf(const IntMatrix& a) {
    require_wide(a);
    ColumnHermite h(a);
    h.run();
    return HnfResult{std::move(h.work), std::move(h.U), h.det_u, h.rank, std::move(h.pivot_cols)};
}

IntMatrix trivial_block(std::size_t k, std::size_t n) {
    if (k > n) throw DomainError("k must not exceed n");
    IntMatrix m(k, n);
    for (std::size_t i = 0; i < k; ++i) m(i, n - k + i) = 1;
    return m;
}

bool is_trivial_hnf(const IntMatrix& a) {
    return hnf(a).H == trivial_block(a.rows(), a.cols());
}

IntMatrix complete_to_gl(const IntMatrix& a) {
    require_wide(a);
    if (a.rows() == a.cols()) {
        BigInt d = abs(determinant(a));
        if (d != 1) throw NotUnimodular(d);
        return a;
    }
    HnfResult r = hnf(a);
    if (r.H != trivial_block(a.rows(), a.cols())) throw NotUnimodular(full_rank_minor_gcd(a));
    // A = [O | I_k] * U, so the last k rows of U are A itself.
    return std::move(r.U);
}

SnfResult snf(const IntMatrix& a) {
    require_wide(a);
    const std::size_t k = a.rows(), n = a.cols();
    IntMatrix cur = a;
    IntMatrix L = IntMatrix::identity(k);
    IntMatrix R = IntMatrix::identity(n);

    // Alternate column and row Hermite reductions until every row and
    // column carries at most one nonzero entry. Each non-final round
    // strictly shrinks some pivot, so this terminates.
    for (int round = 0;; ++round) {
        if (round > 10000) throw std::logic_error("Smith reduction did not converge");
        ColumnHermite col(cur);
        col.run();
        R = R * col.V;
        cur = std::move(col.work);
        if (at_most_one_per_line(cur)) break;
        ColumnHermite row(cur.transposed());
        row.run();
        L = row.V.transposed() * L;
        cur = row.work.transposed();
        if (at_most_one_per_line(cur)) break;
    }

    struct Entry {
        std::size_t row, col;
    };
    std::vector<Entry> nz;
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (cur(i, j) != 0) nz.push_back({i, j});
    const std::size_t r = nz.size();

    // Permute the nonzeros onto the trailing diagonal (k-r+t, n-r+t).
    IntMatrix P(k, k), Q(n, n);
    {
        std::vector<bool> row_used(k), col_used(n);
        for (std::size_t t = 0; t < r; ++t) {
            P(k - r + t, nz[t].row) = 1;
            Q(nz[t].col, n - r + t) = 1;
            row_used[nz[t].row] = true;
            col_used[nz[t].col] = true;
        }
        std::size_t next = 0;
        for (std::size_t i = 0; i < k; ++i)
            if (!row_used[i]) P(next++, i) = 1;
        next = 0;
        for (std::size_t j = 0; j < n; ++j)
            if (!col_used[j]) Q(j, next++) = 1;
    }
    L = P * L;
    R = R * Q;
    cur = P * cur * Q;

    std::vector<BigInt> d(r);
    for (std::size_t t = 0; t < r; ++t) {
        const std::size_t ri = k - r + t;
        d[t] = cur(ri, n - r + t);
        if (d[t] < 0) {
            d[t] = -d[t];
            for (std::size_t s = 0; s < k; ++s) L(ri, s) = -L(ri, s);
        }
    }

    // Enforce d_i | d_j by replacing each pair with (gcd, lcm).
    for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = i + 1; j < r; ++j) {
            if (mpz_divisible_p(d[j].get_mpz_t(), d[i].get_mpz_t())) continue;
            const BigInt da = d[i], db = d[j];
            BigInt g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(), da.get_mpz_t(), db.get_mpz_t());
            const BigInt ag = da / g, bg = db / g;
            const std::size_t ri = k - r + i, rj = k - r + j;
            const std::size_t ci = n - r + i, cj = n - r + j;
            // rows: [[x, y], [-b/g, a/g]]
            for (std::size_t s = 0; s < k; ++s) {
                BigInt li = L(ri, s), lj = L(rj, s);
                L(ri, s) = x * li + y * lj;
                L(rj, s) = ag * lj - bg * li;
            }
            // cols: [[1, -y b/g], [1, x a/g]]
            const BigInt r01 = -y * bg, r11 = x * ag;
            for (std::size_t s = 0; s < n; ++s) {
                BigInt vi = R(s, ci), vj = R(s, cj);
                R(s, ci) = vi + vj;
                R(s, cj) = r01 * vi + r11 * vj;
            }
            d[i] = g;
            d[j] = da * bg;
        }
    }

    IntMatrix S(k, n);
    for (std::size_t t = 0; t < r; ++t) S(k - r + t, n - r + t) = d[t];
    return SnfResult{std::move(S), std::move(d), std::move(L), std::move(R)};
}

} // namespace unimod
