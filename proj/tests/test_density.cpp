#include <doctest.h>

#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "unimod/density.hpp"
#include "unimod/int_matrix.hpp"

using namespace unimod;

namespace {

// Plain partial sum to M plus the integral bracket on the tail:
//   (M+1)^{1-j}/(j-1) <= sum_{m>M} m^{-j} <= M^{1-j}/(j-1).
struct Bracket {
    long double mid, half_width;
};

Bracket zeta_bracket(unsigned j, long m_max) {
    long double s = 0;
    for (long m = m_max; m >= 1; --m) s += std::pow(static_cast<long double>(m), -static_cast<long double>(j));
    const long double lo = std::pow(static_cast<long double>(m_max + 1), 1.0L - j) / (j - 1);
    const long double hi = std::pow(static_cast<long double>(m_max), 1.0L - j) / (j - 1);
    return {s + (lo + hi) / 2, (hi - lo) / 2};
}

double d(const Decimal& v) { return static_cast<double>(v); }

const long double kPi = boost::math::constants::pi<long double>();

} // namespace

TEST_CASE("zeta(2) is pi^2/6") {
    auto z = zeta(2L, 1e-12);
    CHECK(z.error_bound <= Decimal(1e-12));
    const long double expected = kPi * kPi / 6;
    CHECK(std::fabs(static_cast<long double>(z.value) - expected) <= static_cast<long double>(z.error_bound));
    CHECK(to_decimal_string(z.value, 20).substr(0, 14) == "1.644934066848");
}

TEST_CASE("zeta of large j is 1 + 2^-j + ...") {
    auto z = zeta(30L, 1e-15);
    const double excess = d(z.value - 1);
    CHECK(excess == doctest::Approx(9.31e-10).epsilon(0.001));
    CHECK(excess == doctest::Approx(std::pow(2.0, -30) + std::pow(3.0, -30)).epsilon(1e-9));
}

TEST_CASE("zeta rejects the pole and non-positive tolerances") {
    CHECK_THROWS_AS(zeta(1L, 1e-9), DomainError);
    CHECK_THROWS_AS(zeta(0L, 1e-9), DomainError);
    CHECK_THROWS_AS(zeta(-3L, 1e-9), DomainError);
    CHECK_THROWS_AS(zeta(2L, 0.0), DomainError);
    CHECK_THROWS_AS(zeta(2L, -1.0), DomainError);
}

TEST_CASE("zeta agrees with the bracketed partial series") {
    for (unsigned j = 2; j <= 24; ++j) {
        CAPTURE(j);
        const Bracket b = zeta_bracket(j, j == 2 ? 1'000'000 : 20'000);
        auto z = zeta(static_cast<long>(j), 1e-13);
        CHECK(z.error_bound <= Decimal(1e-13));
        const long double diff = std::fabs(static_cast<long double>(z.value) - b.mid);
        CHECK(diff <= b.half_width + 1e-13L + 1e-15L);
    }
}

TEST_CASE("zeta honours very tight tolerances") {
    auto z = zeta(2u, Decimal("1e-35"));
    CHECK(z.error_bound <= Decimal("1e-35"));
    const Decimal pi = boost::math::constants::pi<Decimal>();
    CHECK(abs(z.value - pi * pi / 6) <= Decimal("1e-35"));
}

TEST_CASE("density examples") {
    auto r = density_exact(1, 2, 1e-12);
    CHECK(r.abs_error_bound <= Decimal(1e-12));
    CHECK(std::fabs(static_cast<long double>(r.value) - 6 / (kPi * kPi)) < 1e-12L);
    CHECK(to_decimal_string(r.value, 12) == "0.607927101854");

    for (long n = 1; n <= 6; ++n) {
        auto sq = density_exact(n, n, 1e-12);
        CHECK(sq.value == 0);
        CHECK(sq.abs_error_bound == 0);
    }

    const Bracket z2 = zeta_bracket(2, 1'000'000), z3 = zeta_bracket(3, 20'000);
    auto r23 = density_exact(2, 3, 1e-12);
    CHECK(std::fabs(static_cast<long double>(r23.value) - 1 / (z2.mid * z3.mid)) < 1e-11L);
    CHECK(d(r23.value) == doctest::Approx(0.5057).epsilon(1e-3));

    CHECK_THROWS_AS(density_exact(3, 2, 1e-12), DomainError);
    CHECK_THROWS_AS(density_exact(0, 2, 1e-12), DomainError);
    CHECK_THROWS_AS(density_exact(1, 2, 0), DomainError);
}

TEST_CASE("density strictly decreases in k") {
    for (long n = 2; n <= 8; ++n)
        for (long k = 1; k < n; ++k)
            CHECK(density_exact(k + 1, n, 1e-12).value < density_exact(k, n, 1e-12).value);
}

TEST_CASE("limit constants") {
    auto d1 = density_limit(1, 1e-10);
    CHECK(d1.abs_error_bound <= Decimal(1e-10));
    CHECK(std::fabs(d(d1.value) - 0.43575707677) < 1e-10);
    CHECK(d1.product_cutoff >= 40);

    // independent: truncated product of bracketed zeta values
    long double oracle = 1;
    for (unsigned j = 2; j <= 60; ++j) oracle /= zeta_bracket(j, j == 2 ? 1'000'000 : 20'000).mid;
    auto d1_tight = density_limit(1, 1e-13);
    CHECK(std::fabs(static_cast<long double>(d1_tight.value) - oracle) < 1e-11L);

    const Decimal z2 = zeta(2u, Decimal("1e-30")).value, z3 = zeta(3u, Decimal("1e-30")).value;
    auto d2 = density_limit(2, 1e-14), d3 = density_limit(3, 1e-14);
    auto d1p = density_limit(1, 1e-14);
    CHECK(abs(d2.value - z2 * d1p.value) < Decimal(1e-13));
    CHECK(abs(d3.value - z2 * z3 * d1p.value) < Decimal(1e-13));

    CHECK_THROWS_AS(density_limit(0, 1e-10), DomainError);
}

TEST_CASE("finite densities approach the limit within 2^(2-n)") {
    for (long dd = 1; dd <= 3; ++dd) {
        const Decimal lim = density_limit(dd, 1e-14).value;
        for (long n = dd + 1; n <= 24; ++n) {
            const Decimal v = density_exact(n - dd, n, 1e-14).value;
            CHECK(abs(v - lim) < ldexp(Decimal(1), static_cast<int>(2 - n)));
            CHECK(v >= lim);
        }
    }
}

TEST_CASE("full-rank counts over prime fields") {
    CHECK(count_full_rank_mod_p(2, 1, 2) == 3);
    CHECK(count_full_rank_mod_p(2, 2, 2) == 6);
    CHECK(count_full_rank_mod_p(3, 1, 1) == 2);
    CHECK(count_full_rank_mod_p(2, 2, 3) == 42);
    CHECK_THROWS_AS(count_full_rank_mod_p(4, 1, 2), DomainError);
    CHECK_THROWS_AS(count_full_rank_mod_p(2, 3, 2), DomainError);
}

TEST_CASE("full-rank counts match enumeration via minors mod p") {
    for (std::uint64_t p : {2u, 3u})
        for (long k = 1; k <= 3; ++k)
            for (long n = k; n <= 3; ++n) {
                const long len = k * n;
                long total = 1;
                for (long i = 0; i < len; ++i) total *= static_cast<long>(p);
                long full = 0;
                for (long idx = 0; idx < total; ++idx) {
                    std::vector<BigInt> e;
                    long x = idx;
                    for (long i = 0; i < len; ++i, x /= static_cast<long>(p)) e.emplace_back(x % static_cast<long>(p));
                    auto ms = minors(IntMatrix(static_cast<std::size_t>(k), static_cast<std::size_t>(n), e),
                                     static_cast<std::size_t>(k));
                    bool nonzero = false;
                    for (const auto& m : ms.values) nonzero |= !mpz_divisible_ui_p(m.get_mpz_t(), p);
                    full += nonzero;
                }
                CAPTURE(p);
                CAPTURE(k);
                CAPTURE(n);
                CHECK(count_full_rank_mod_p(p, k, n) == full);
            }
}

TEST_CASE("local density examples") {
    CHECK(local_density(PrimeSet{2}, 1, 2) == Rational(3, 4));
    CHECK(local_density(PrimeSet{2, 3}, 1, 2) == Rational(2, 3));
    CHECK(local_density(PrimeSet{2}, 2, 3) == Rational(21, 32));
    Rational normalized(count_full_rank_mod_p(2, 2, 3), 64);
    normalized.canonicalize();
    CHECK(local_density(PrimeSet{2}, 2, 3) == normalized);
    CHECK_THROWS_AS(local_density(PrimeSet(std::vector<std::uint64_t>{}), 1, 2), DomainError);
    CHECK_THROWS_AS(local_density(PrimeSet{2}, 2, 1), DomainError);
}

TEST_CASE("local density equals the normalized full-rank count and is in lowest terms") {
    for (std::uint64_t p : {2u, 3u, 5u, 7u, 11u})
        for (long n = 1; n <= 6; ++n)
            for (long k = 1; k <= n; ++k) {
                const Rational q = local_density(PrimeSet{p}, k, n);
                BigInt pkn;
                mpz_ui_pow_ui(pkn.get_mpz_t(), p, static_cast<unsigned long>(k * n));
                Rational expected(count_full_rank_mod_p(p, k, n), pkn);
                expected.canonicalize();
                CHECK(q == expected);
                BigInt g;
                mpz_gcd(g.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
                CHECK(g == 1);
                CHECK(q.get_den() > 0);
            }
}

TEST_CASE("local densities shrink as S grows and converge to the density") {
    for (long n = 2; n <= 5; ++n)
        for (long k = 1; k < n; ++k) {
            const double exact = d(density_exact(k, n, 1e-14).value);
            Rational prev = 1;
            for (std::size_t t = 1; t <= 60; ++t) {
                const PrimeSet s = PrimeSet::first(t);
                const Rational q = local_density(s, k, n);
                CHECK(q < prev);
                prev = q;
                // sum_{p > p_t} 2/p^2 <= sum_{m > p_t} 2/m^2 <= 2/p_t
                const double tail = 2.0 / static_cast<double>(s.primes().back());
                CHECK(q.get_d() - exact >= -1e-12);
                CHECK(q.get_d() - exact <= tail);
            }
        }
}

TEST_CASE("divisibility defect examples and the bound chain") {
    CHECK(divisibility_defect(2, 1, 2) == Rational(1, 4));
    CHECK(divisibility_defect(3, 1, 2) == Rational(1, 9));
    CHECK(divisibility_defect(2, 2, 3) == Rational(11, 32));
    CHECK_THROWS_AS(divisibility_defect(9, 1, 2), DomainError);

    const PrimeSet ps = PrimeSet::first(25);
    for (std::uint64_t p : ps.primes())
        for (long n = 2; n <= 7; ++n)
            for (long k = 1; k < n; ++k) {
                const Rational v = divisibility_defect(p, k, n);
                Rational sum = 0;
                for (long j = n - k + 1; j <= n; ++j) {
                    BigInt pj;
                    mpz_ui_pow_ui(pj.get_mpz_t(), p, static_cast<unsigned long>(j));
                    sum += Rational(1, pj);
                }
                BigInt pnk;
                mpz_ui_pow_ui(pnk.get_mpz_t(), p, static_cast<unsigned long>(n - k));
                const Rational geometric(1, pnk * (static_cast<unsigned long>(p) - 1));
                Rational two_over_p2(2, static_cast<unsigned long>(p * p));
                two_over_p2.canonicalize();
                CAPTURE(p);
                CAPTURE(k);
                CAPTURE(n);
                CHECK(v > 0);
                // one factor: 1 - (1 - x) = x exactly; the product inequality
                // is strict only from two factors on
                if (k == 1)
                    CHECK(v == sum);
                else
                    CHECK(v < sum);
                CHECK(sum < geometric);
                CHECK(geometric <= two_over_p2);
            }
}

TEST_CASE("prime sets") {
    CHECK(PrimeSet::first(5).primes() == std::vector<std::uint64_t>{2, 3, 5, 7, 11});
    CHECK_THROWS_AS(PrimeSet({3, 2}), DomainError);
    CHECK_THROWS_AS(PrimeSet({2, 2}), DomainError);
    CHECK_THROWS_AS(PrimeSet({2, 4}), DomainError);
    CHECK_THROWS_AS(PrimeSet({1}), DomainError);
    CHECK(is_prime(2));
    CHECK(is_prime(97));
    CHECK(is_prime(1'000'000'007));
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(91));
}
