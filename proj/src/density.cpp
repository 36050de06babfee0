#include "unimod/density.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <boost/math/special_functions/bernoulli.hpp>

namespace unimod {

namespace {

// Below this, 50-digit arithmetic can no longer certify the bound.
const Decimal kMinTolerance("1e-40");
const Decimal kRoundingSlack("1e-46");

void require_dims(long k, long n) {
    if (k < 1 || n < 1) throw DomainError("dimensions must be at least 1 (got k=" + std::to_string(k) +
                                          ", n=" + std::to_string(n) + ")");
    if (k > n) throw DomainError("k must not exceed n (got k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
}

void require_prime(std::uint64_t p) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

// Euler-Maclaurin evaluation with fixed M. Returns false when the
// correction terms stop shrinking before reaching tol/2.
bool zeta_euler_maclaurin(unsigned j, std::uint64_t m, const Decimal& tol, ZetaValue& out) {
    const Decimal s = j;
    const Decimal big_m = static_cast<double>(m);
    Decimal sum = 0;
    for (std::uint64_t i = m - 1; i >= 1; --i) sum += pow(Decimal(static_cast<double>(i)), -s);
    const Decimal m_pow = pow(big_m, -s); // M^{-s}
    sum += big_m * m_pow / (s - 1);       // integral tail M^{1-s}/(s-1)
    sum += m_pow / 2;

    // factor_i = s (s+1) ... (s+2i-2) / (2i)! * M^{-s-2i+1}
    Decimal factor = s * m_pow / big_m / 2;
    Decimal prev_mag = -1;
    for (unsigned i = 1; i <= 200; ++i) {
        const Decimal term = boost::math::bernoulli_b2n<Decimal>(static_cast<int>(i)) * factor;
        const Decimal mag = abs(term);
        if (mag <= tol / 2) {
            // Remainder after i-1 corrections is bounded by this term.
            out.value = sum;
            out.error_bound = mag + kRoundingSlack * Decimal(static_cast<double>(m + i));
            out.terms = ZetaTerms{j, m, i - 1};
            return true;
        }
        if (prev_mag >= 0 && mag > prev_mag) return false;
        prev_mag = mag;
        sum += term;
        const Decimal a = s + 2 * i - 1;
        factor *= a * (a + 1) / (Decimal(2 * i + 1) * Decimal(2 * i + 2)) / (big_m * big_m);
    }
    return false;
}

} // namespace

ZetaValue zeta(unsigned j, const Decimal& tol) {
    if (j <= 1) throw DomainError("zeta(" + std::to_string(j) + "): argument must be at least 2 (pole at 1)");
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    if (tol < kMinTolerance) throw DomainError("tolerance below 1e-40 is not supported");
    ZetaValue out;
    for (std::uint64_t m = 16;; m *= 2) {
        if (zeta_euler_maclaurin(j, m, tol, out)) return out;
    }
}

ZetaValue zeta(long j, double tol) {
    if (j <= 1) throw DomainError("zeta(" + std::to_string(j) + "): argument must be at least 2 (pole at 1)");
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    return zeta(static_cast<unsigned>(j), Decimal(tol));
}

DensityReport density_exact(long k, long n, double tol) {
    require_dims(k, n);
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    DensityReport rep;
    rep.k = static_cast<unsigned>(k);
    rep.n = static_cast<unsigned>(n);
    if (k == n) {
        rep.value = 0;
        rep.abs_error_bound = 0;
        return rep;
    }
    // |prod 1/z_j - prod 1/z'_j| <= sum |z_j - z'_j| since every z_j, z'_j >= 1.
    const Decimal per_factor = Decimal(tol) / (2 * k);
    Decimal value = 1;
    Decimal err = 0;
    for (long j = n - k + 1; j <= n; ++j) {
        ZetaValue z = zeta(static_cast<unsigned>(j), per_factor);
        value /= z.value;
        err += z.error_bound;
        rep.zeta_terms.push_back(z.terms);
    }
    rep.value = value;
    rep.abs_error_bound = err + kRoundingSlack;
    return rep;
}

DensityReport density_limit(long d, double tol) {
    if (d < 1) throw DomainError("codimension d must be at least 1 (got " + std::to_string(d) + ")");
    if (!(tol > 0)) throw DomainError("tolerance must be positive");
    const auto cutoff_min = static_cast<long>(std::ceil(std::log2(1.0 / tol))) + 2;
    const long cutoff = std::max({40L, cutoff_min, d});

    const Decimal per_factor = Decimal(tol) / (4 * std::max(1L, cutoff - d));
    Decimal partial = 1;
    Decimal err = 0;
    DensityReport rep;
    rep.codimension = static_cast<unsigned>(d);
    rep.product_cutoff = static_cast<unsigned>(cutoff);
    for (long j = d + 1; j <= cutoff; ++j) {
        ZetaValue z = zeta(static_cast<unsigned>(j), per_factor);
        partial /= z.value;
        err += z.error_bound;
        rep.zeta_terms.push_back(z.terms);
    }
    // prod_{j>J} 1/zeta(j) lies in [1 - sum_{j>J}(zeta(j)-1), 1] and
    // zeta(j) - 1 < 2^{1-j} for j >= 3, so the tail is in [1 - 2^{1-J}, 1].
    const Decimal half_width = ldexp(Decimal(1), static_cast<int>(-cutoff));
    rep.value = partial * (1 - half_width);
    rep.abs_error_bound = partial * half_width + err + kRoundingSlack;
    return rep;
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    if (p < 4) return true;
    if (p % 2 == 0) return false;
    for (std::uint64_t f = 3; f <= p / f; f += 2)
        if (p % f == 0) return false;
    return true;
}

PrimeSet::PrimeSet(std::initializer_list<std::uint64_t> primes) : PrimeSet(std::vector<std::uint64_t>(primes)) {}

PrimeSet::PrimeSet(std::vector<std::uint64_t> primes) : primes_(std::move(primes)) {
    for (std::size_t i = 0; i < primes_.size(); ++i) {
        require_prime(primes_[i]);
        if (i > 0 && primes_[i] <= primes_[i - 1]) throw DomainError("prime set must be strictly increasing");
    }
}

PrimeSet PrimeSet::first(std::size_t t) {
    std::vector<std::uint64_t> ps;
    for (std::uint64_t c = 2; ps.size() < t; ++c)
        if (is_prime(c)) ps.push_back(c);
    return PrimeSet(std::move(ps));
}

BigInt count_full_rank_mod_p(std::uint64_t p, long k, long n) {
    require_prime(p);
    require_dims(k, n);
    BigInt pn, count = 1;
    mpz_ui_pow_ui(pn.get_mpz_t(), p, static_cast<unsigned long>(n));
    BigInt pj = 1;
    for (long j = 0; j < k; ++j) {
        count *= pn - pj;
        pj *= p;
    }
    return count;
}

Rational local_density(const PrimeSet& s, long k, long n) {
    require_dims(k, n);
    if (s.size() == 0) throw DomainError("prime set must be nonempty");
    Rational out = 1;
    for (std::uint64_t p : s.primes()) {
        for (long j = n - k + 1; j <= n; ++j) {
            BigInt pj;
            mpz_ui_pow_ui(pj.get_mpz_t(), p, static_cast<unsigned long>(j));
            Rational factor(pj - 1, pj);
            factor.canonicalize();
            out *= factor;
        }
    }
    return out;
}

Rational divisibility_defect(std::uint64_t p, long k, long n) {
    require_prime(p);
    return Rational(1) - local_density(PrimeSet{p}, k, n);
}

std::string to_decimal_string(const Decimal& v, int digits) {
    return v.str(digits, std::ios_base::fixed);
}

std::string to_sci_string(const Decimal& v, int digits) {
    return v.str(digits, std::ios_base::scientific);
}

} // namespace unimod
