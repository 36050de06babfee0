#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "unimod/density.hpp"
#include "unimod/int_matrix.hpp"

namespace unimod {

inline constexpr std::uint64_t kDefaultEnumerationBudget = 100'000'000;

/// k x n matrices with entries in the half-open box [-bound, bound).
struct BoxSpec {
    unsigned k = 1;
    unsigned n = 1;
    std::uint64_t bound = 1;

    void validate() const;
    /// (2 * bound)^(k * n)
    BigInt box_size() const;
};

enum class SampleStream {
    /// Sample i is drawn from SplitMix64 seeded with derive_stream(seed, i).
    Random,
    /// Sample i is the i-th box element: entry e (row-major) is digit e of i
    /// in base 2B, least significant first, shifted down by B.
    Enumeration,
};

std::string to_string(SampleStream s);

struct EstimateReport {
    BoxSpec spec;
    std::uint64_t samples = 0;
    std::uint64_t hits = 0;
    double estimate = 0;
    double std_error = 0;
    std::uint64_t seed = 0;
    unsigned shards = 1;
    double theory_value = 0;
    /// Absent when std_error is zero.
    std::optional<double> z_score;
    SampleStream stream = SampleStream::Random;
};

struct ExhaustiveReport {
    BoxSpec spec;
    BigInt total;
    BigInt hits;
    Rational density;
};

struct LocalDensityCheck {
    std::uint64_t p = 0;
    unsigned k = 0;
    unsigned n = 0;
    BigInt total;
    BigInt full_rank;
    BigInt formula_count;
    Rational empirical;
    Rational theory;
    bool agree = false;
};

/// Draws matrix `index` of the stream into `out` (length k * n).
void draw_sample(const BoxSpec& spec, std::uint64_t seed, std::uint64_t index, SampleStream stream,
                 std::span<long long> out);

ExhaustiveReport exhaustive_density(const BoxSpec& spec, std::uint64_t budget = kDefaultEnumerationBudget,
                                    unsigned shards = 1);

EstimateReport estimate_density(const BoxSpec& spec, std::uint64_t samples, std::uint64_t seed, unsigned shards = 1,
                                SampleStream stream = SampleStream::Random);

/// One report per bound. Bound B uses seed derive_stream(seed, B); when the
/// whole box fits in `samples` it is enumerated instead (exact counts).
std::vector<EstimateReport> convergence_sweep(unsigned k, unsigned n, std::span<const std::uint64_t> bounds,
                                              std::uint64_t samples, std::uint64_t seed, unsigned shards = 1);

/// Enumerates all k x n matrices over Z/pZ, counts those of rank k by
/// elimination mod p, and compares with the local density at {p}.
LocalDensityCheck verify_local_density(std::uint64_t p, unsigned k, unsigned n,
                                       std::uint64_t budget = kDefaultEnumerationBudget);

/// Rank of a k x n matrix over Z/pZ; entries must already be reduced.
unsigned rank_mod_p(std::span<std::uint64_t> entries, unsigned k, unsigned n, std::uint64_t p);

} // namespace unimod
