#include "unimod/experiments.hpp"

#include <cmath>
#include <functional>
#include <thread>

#include "unimod/rng.hpp"

namespace unimod {

namespace {

constexpr std::uint64_t kMaxBound = std::uint64_t{1} << 62;
constexpr unsigned kMaxShards = 1024;

void require_shards(unsigned shards) {
    if (shards < 1 || shards > kMaxShards)
        throw DomainError("shards must be in [1, " + std::to_string(kMaxShards) + "] (got " + std::to_string(shards) +
                          ")");
}

// Sums count(begin, end) over a fixed contiguous partition of [0, total).
// The partition depends only on (total, shards).
std::uint64_t sharded_count(std::uint64_t total, unsigned shards,
                            const std::function<std::uint64_t(std::uint64_t, std::uint64_t)>& count) {
    if (shards == 1) return count(0, total);
    std::vector<std::uint64_t> partial(shards, 0);
    {
        std::vector<std::jthread> workers;
        workers.reserve(shards);
        for (unsigned s = 0; s < shards; ++s) {
            const auto begin = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * s) / shards);
            const auto end = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * (s + 1)) / shards);
            workers.emplace_back([&, s, begin, end] { partial[s] = count(begin, end); });
        }
    }
    std::uint64_t sum = 0;
    for (auto v : partial) sum += v;
    return sum;
}

// Base-`radix` odometer over a fixed number of digits, least significant first.
class Odometer {
public:
    Odometer(std::size_t digits, std::uint64_t radix, std::uint64_t start) : digits_(digits), radix_(radix) {
        for (auto& d : digits_) {
            d = start % radix_;
            start /= radix_;
        }
    }

    const std::vector<std::uint64_t>& digits() const noexcept { return digits_; }

    void advance() {
        for (auto& d : digits_) {
            if (++d < radix_) return;
            d = 0;
        }
    }

private:
    std::vector<std::uint64_t> digits_;
    std::uint64_t radix_;
};

std::uint64_t box_size_u64(const BoxSpec& spec) {
    const BigInt total = spec.box_size();
    if (!total.fits_ulong_p()) throw DomainError("box has more than 2^64 elements; enumeration impossible");
    return total.get_ui();
}

std::uint64_t count_enumerated(const BoxSpec& spec, std::uint64_t begin, std::uint64_t end) {
    const std::size_t len = std::size_t{spec.k} * spec.n;
    Odometer odo(len, 2 * spec.bound, begin);
    std::vector<long long> m(len);
    const auto shift = static_cast<long long>(spec.bound);
    std::uint64_t hits = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
        for (std::size_t e = 0; e < len; ++e) m[e] = static_cast<long long>(odo.digits()[e]) - shift;
        hits += is_unimodular_small(m, spec.k, spec.n, spec.bound);
        odo.advance();
    }
    return hits;
}

std::uint64_t count_random(const BoxSpec& spec, std::uint64_t seed, std::uint64_t begin, std::uint64_t end) {
    std::vector<long long> m(std::size_t{spec.k} * spec.n);
    std::uint64_t hits = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
        draw_sample(spec, seed, i, SampleStream::Random, m);
        hits += is_unimodular_small(m, spec.k, spec.n, spec.bound);
    }
    return hits;
}

EstimateReport run_estimate(const BoxSpec& spec, std::uint64_t samples, std::uint64_t seed, unsigned shards,
                            SampleStream stream) {
    EstimateReport rep;
    rep.spec = spec;
    rep.samples = samples;
    rep.seed = seed;
    rep.shards = shards;
    rep.stream = stream;
    if (stream == SampleStream::Enumeration) {
        if (samples > box_size_u64(spec))
            throw DomainError("enumeration stream has only " + spec.box_size().get_str() + " samples");
        rep.hits = sharded_count(samples, shards,
                                 [&](std::uint64_t b, std::uint64_t e) { return count_enumerated(spec, b, e); });
    } else {
        rep.hits = sharded_count(samples, shards,
                                 [&](std::uint64_t b, std::uint64_t e) { return count_random(spec, seed, b, e); });
    }
    const double n = static_cast<double>(samples);
    rep.estimate = static_cast<double>(rep.hits) / n;
    rep.std_error = std::sqrt(rep.estimate * (1.0 - rep.estimate) / n);
    rep.theory_value = static_cast<double>(density_exact(spec.k, spec.n, 1e-12).value);
    if (rep.std_error > 0) rep.z_score = (rep.estimate - rep.theory_value) / rep.std_error;
    return rep;
}

} // namespace

void BoxSpec::validate() const {
    if (k < 1 || n < 1) throw DomainError("dimensions must be at least 1");
    if (k > n) throw DomainError("k must not exceed n (got k=" + std::to_string(k) + ", n=" + std::to_string(n) + ")");
    if (bound < 1 || bound > kMaxBound) throw DomainError("bound must be in [1, 2^62]");
}

BigInt BoxSpec::box_size() const {
    BigInt side = BigInt(static_cast<unsigned long>(bound)) * 2;
    BigInt out;
    mpz_pow_ui(out.get_mpz_t(), side.get_mpz_t(), static_cast<unsigned long>(k) * n);
    return out;
}

std::string to_string(SampleStream s) { return s == SampleStream::Random ? "random" : "enumeration"; }

void draw_sample(const BoxSpec& spec, std::uint64_t seed, std::uint64_t index, SampleStream stream,
                 std::span<long long> out) {
    const std::uint64_t width = 2 * spec.bound;
    const auto shift = static_cast<long long>(spec.bound);
    if (stream == SampleStream::Enumeration) {
        for (auto& e : out) {
            e = static_cast<long long>(index % width) - shift;
            index /= width;
        }
        return;
    }
    SplitMix64 rng(derive_stream(seed, index));
    for (auto& e : out) e = static_cast<long long>(rng.below(width)) - shift;
}

ExhaustiveReport exhaustive_density(const BoxSpec& spec, std::uint64_t budget, unsigned shards) {
    spec.validate();
    require_shards(shards);
    ExhaustiveReport rep;
    rep.spec = spec;
    rep.total = spec.box_size();
    if (rep.total > BigInt(static_cast<unsigned long>(budget))) throw BudgetExceeded(rep.total, budget);
    const std::uint64_t total = rep.total.get_ui();
    const std::uint64_t hits =
        sharded_count(total, shards, [&](std::uint64_t b, std::uint64_t e) { return count_enumerated(spec, b, e); });
    rep.hits = BigInt(static_cast<unsigned long>(hits));
    rep.density = Rational(rep.hits, rep.total);
    rep.density.canonicalize();
    return rep;
}

EstimateReport estimate_density(const BoxSpec& spec, std::uint64_t samples, std::uint64_t seed, unsigned shards,
                                SampleStream stream) {
    spec.validate();
    require_shards(shards);
    if (samples < 100) throw DomainError("samples must be at least 100 (got " + std::to_string(samples) + ")");
    return run_estimate(spec, samples, seed, shards, stream);
}

std::vector<EstimateReport> convergence_sweep(unsigned k, unsigned n, std::span<const std::uint64_t> bounds,
                                              std::uint64_t samples, std::uint64_t seed, unsigned shards) {
    if (bounds.empty()) throw DomainError("bounds must be nonempty");
    for (std::size_t i = 1; i < bounds.size(); ++i)
        if (bounds[i] <= bounds[i - 1]) throw DomainError("bounds must be strictly increasing");
    require_shards(shards);
    if (samples < 100) throw DomainError("samples must be at least 100 (got " + std::to_string(samples) + ")");
    std::vector<EstimateReport> out;
    out.reserve(bounds.size());
    for (std::uint64_t b : bounds) {
        BoxSpec spec{k, n, b};
        spec.validate();
        const std::uint64_t derived = derive_stream(seed, b);
        if (spec.box_size() <= BigInt(static_cast<unsigned long>(samples)))
            out.push_back(run_estimate(spec, box_size_u64(spec), derived, shards, SampleStream::Enumeration));
        else
            out.push_back(run_estimate(spec, samples, derived, shards, SampleStream::Random));
    }
    return out;
}

unsigned rank_mod_p(std::span<std::uint64_t> a, unsigned k, unsigned n, std::uint64_t p) {
    auto mulmod = [p](std::uint64_t x, std::uint64_t y) {
        return static_cast<std::uint64_t>(static_cast<unsigned __int128>(x) * y % p);
    };
    auto inverse = [&](std::uint64_t x) {
        // Fermat: x^(p-2) mod p
        std::uint64_t r = 1, e = p - 2;
        while (e) {
            if (e & 1) r = mulmod(r, x);
            x = mulmod(x, x);
            e >>= 1;
        }
        return r;
    };
    unsigned rank = 0;
    for (unsigned c = 0; c < n && rank < k; ++c) {
        unsigned piv = rank;
        while (piv < k && a[piv * n + c] == 0) ++piv;
        if (piv == k) continue;
        if (piv != rank)
            for (unsigned j = 0; j < n; ++j) std::swap(a[piv * n + j], a[rank * n + j]);
        const std::uint64_t inv = inverse(a[rank * n + c]);
        for (unsigned i = rank + 1; i < k; ++i) {
            const std::uint64_t f = mulmod(a[i * n + c], inv);
            if (f == 0) continue;
            for (unsigned j = c; j < n; ++j) a[i * n + j] = (a[i * n + j] + p - mulmod(f, a[rank * n + j])) % p;
        }
        ++rank;
    }
    return rank;
}

LocalDensityCheck verify_local_density(std::uint64_t p, unsigned k, unsigned n, std::uint64_t budget) {
    if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
    if (k < 1 || k > n) throw DomainError("require 1 <= k <= n");
    LocalDensityCheck rec;
    rec.p = p;
    rec.k = k;
    rec.n = n;
    mpz_ui_pow_ui(rec.total.get_mpz_t(), p, static_cast<unsigned long>(k) * n);
    if (rec.total > BigInt(static_cast<unsigned long>(budget))) throw BudgetExceeded(rec.total, budget);

    const std::uint64_t total = rec.total.get_ui();
    const std::size_t len = std::size_t{k} * n;
    Odometer odo(len, p, 0);
    std::vector<std::uint64_t> m(len);
    std::uint64_t full = 0;
    for (std::uint64_t i = 0; i < total; ++i) {
        m = odo.digits();
        full += rank_mod_p(m, k, n, p) == k;
        odo.advance();
    }
    rec.full_rank = BigInt(static_cast<unsigned long>(full));
    rec.formula_count = count_full_rank_mod_p(p, k, n);
    rec.empirical = Rational(rec.full_rank, rec.total);
    rec.empirical.canonicalize();
    rec.theory = local_density(PrimeSet{p}, k, n);
    rec.agree = rec.empirical == rec.theory && rec.full_rank == rec.formula_count;
    return rec;
}

} // namespace unimod
