#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <gmpxx.h>

#include "unimod/int_matrix.hpp"

namespace unimod {

/// Extended-precision decimal (about 50 significant digits).
using Decimal = boost::multiprecision::cpp_bin_float_50;

/// Exact fraction; gmp keeps results of arithmetic in lowest terms with a
/// positive denominator.
using Rational = mpq_class;

/// Value with an absolute error bound: |value - true| <= error_bound.
struct Bounded {
    Decimal value;
    Decimal error_bound;
};

/// Parameters used to evaluate one zeta factor.
struct ZetaTerms {
    unsigned j = 0;
    std::uint64_t partial_terms = 0;  // M: explicit terms 1..M-1 summed
    unsigned correction_terms = 0;    // Bernoulli corrections used
};

struct ZetaValue {
    Decimal value;
    Decimal error_bound;
    ZetaTerms terms;
};

/// Riemann zeta at an integer j >= 2 with |error| <= tol.
ZetaValue zeta(unsigned j, const Decimal& tol);
ZetaValue zeta(long j, double tol);

struct DensityReport {
    unsigned k = 0;
    unsigned n = 0;
    Decimal value;
    Decimal abs_error_bound;
    std::vector<ZetaTerms> zeta_terms;
    /// Cutoff J of the infinite product (limits only, 0 otherwise).
    unsigned product_cutoff = 0;
    /// Codimension d for limit reports (0 for exact reports).
    unsigned codimension = 0;
};

/// d_{k,n} = prod_{j=n-k+1}^{n} 1/zeta(j); exactly 0 for k = n.
DensityReport density_exact(long k, long n, double tol);

/// d_d = prod_{j=d+1}^{infinity} 1/zeta(j), the n -> infinity limit of d_{n-d,n}.
DensityReport density_limit(long d, double tol);

/// Strictly increasing set of primes.
class PrimeSet {
public:
    PrimeSet(std::initializer_list<std::uint64_t> primes);
    explicit PrimeSet(std::vector<std::uint64_t> primes);

    const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
    std::size_t size() const noexcept { return primes_.size(); }

    /// The first t primes.
    static PrimeSet first(std::size_t t);

private:
    std::vector<std::uint64_t> primes_;
};

/// Deterministic trial-division primality.
bool is_prime(std::uint64_t p);

/// |{k x n matrices over Z/pZ of rank k}| = prod_{j=0}^{k-1} (p^n - p^j).
BigInt count_full_rank_mod_p(std::uint64_t p, long k, long n);

/// Density of k x n integer matrices whose full-rank minor gcd is coprime
/// to every prime of S: prod_{j=n-k+1}^{n} prod_{p in S} (1 - p^{-j}).
Rational local_density(const PrimeSet& s, long k, long n);

/// Density of k x n integer matrices whose full-rank minor gcd is
/// divisible by p: 1 - prod_{j=n-k+1}^{n} (1 - p^{-j}).
Rational divisibility_defect(std::uint64_t p, long k, long n);

/// Fixed-notation rendering with the given number of fractional digits.
std::string to_decimal_string(const Decimal& v, int digits = 30);
/// Scientific rendering with the given number of significant digits.
std::string to_sci_string(const Decimal& v, int digits = 6);

} // namespace unimod
