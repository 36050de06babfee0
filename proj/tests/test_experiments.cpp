#include <doctest.h>

#include <cmath>

#include "unimod/experiments.hpp"

using namespace unimod;

TEST_CASE("exhaustive small boxes") {
    auto r = exhaustive_density({1, 2, 1});
    CHECK(r.total == 4);
    CHECK(r.hits == 3);
    CHECK(r.density == Rational(3, 4));

    r = exhaustive_density({1, 2, 2});
    CHECK(r.total == 16);
    CHECK(r.hits == 12);
    CHECK(r.density == Rational(3, 4));

    r = exhaustive_density({1, 1, 1});
    CHECK(r.density == Rational(1, 2));

    // 2x2 over {-1, 0}: det is +-1 for exactly 6 of the 16 matrices
    r = exhaustive_density({2, 2, 1});
    CHECK(r.hits == 6);
}

TEST_CASE("exhaustive refuses boxes over budget") {
    try {
        exhaustive_density({2, 3, 10}, 1000);
        FAIL("expected refusal");
    } catch (const BudgetExceeded& e) {
        CHECK(e.required() == BigInt("64000000"));
        CHECK(std::string(e.what()).find("64000000") != std::string::npos);
    }
    CHECK_THROWS_AS(exhaustive_density({3, 2, 1}), DomainError);
    CHECK_THROWS_AS(exhaustive_density({1, 2, 0}), DomainError);
}

TEST_CASE("exhaustive counts do not depend on shard count") {
    const BoxSpec s{2, 3, 2};
    const auto one = exhaustive_density(s, kDefaultEnumerationBudget, 1);
    const auto many = exhaustive_density(s, kDefaultEnumerationBudget, 7);
    CHECK(one.hits == many.hits);
}

TEST_CASE("enumeration stream reproduces the exhaustive count") {
    for (BoxSpec s : {BoxSpec{1, 3, 3}, BoxSpec{2, 2, 2}, BoxSpec{1, 4, 2}, BoxSpec{2, 3, 2}, BoxSpec{1, 2, 5}}) {
        const auto ex = exhaustive_density(s);
        const auto est = estimate_density(s, ex.total.get_ui(), 0, 3, SampleStream::Enumeration);
        CHECK(BigInt(static_cast<unsigned long>(est.hits)) == ex.hits);
    }
    CHECK_THROWS_AS(estimate_density({1, 2, 2}, 100, 0, 1, SampleStream::Enumeration), DomainError);
}

TEST_CASE("enumeration stream decodes base-2B digits, least significant first") {
    std::vector<long long> m(2);
    draw_sample({1, 2, 2}, 0, 0, SampleStream::Enumeration, m);
    CHECK(m == std::vector<long long>{-2, -2});
    draw_sample({1, 2, 2}, 0, 6, SampleStream::Enumeration, m);
    CHECK(m == std::vector<long long>{0, -1});
}

TEST_CASE("random draws stay inside the half-open box") {
    std::vector<long long> m(6);
    const BoxSpec s{2, 3, 3};
    bool saw_low = false;
    for (std::uint64_t i = 0; i < 2000; ++i) {
        draw_sample(s, 9, i, SampleStream::Random, m);
        for (auto v : m) {
            REQUIRE(v >= -3);
            REQUIRE(v < 3);
            saw_low |= v == -3;
        }
    }
    CHECK(saw_low);
}

TEST_CASE("estimates are deterministic and shard-invariant") {
    const BoxSpec s{2, 3, 1000};
    const auto a = estimate_density(s, 20000, 42, 1);
    const auto b = estimate_density(s, 20000, 42, 1);
    const auto c = estimate_density(s, 20000, 42, 8);
    CHECK(a.hits == b.hits);
    CHECK(a.estimate == b.estimate);
    CHECK(a.hits == c.hits);
    const auto d = estimate_density(s, 20000, 43, 1);
    CHECK(d.hits != a.hits);
}

TEST_CASE("estimate report fields") {
    const auto r = estimate_density({1, 2, 1'000'000}, 100'000, 5, 2);
    CHECK(r.samples == 100'000);
    CHECK(r.hits <= r.samples);
    CHECK(r.estimate == doctest::Approx(static_cast<double>(r.hits) / 100'000.0));
    CHECK(r.std_error == doctest::Approx(std::sqrt(r.estimate * (1 - r.estimate) / 1e5)));
    CHECK(r.theory_value == doctest::Approx(0.607927101854).epsilon(1e-12));
    REQUIRE(r.z_score.has_value());
    CHECK(*r.z_score == doctest::Approx((r.estimate - r.theory_value) / r.std_error));
    CHECK(std::fabs(*r.z_score) <= 4.0);

    const auto sq = estimate_density({2, 2, 1}, 100, 0, 1);
    CHECK(sq.theory_value == 0);
}

TEST_CASE("estimate preconditions") {
    CHECK_THROWS_AS(estimate_density({1, 2, 10}, 99, 0, 1), DomainError);
    CHECK_THROWS_AS(estimate_density({1, 2, 10}, 100, 0, 0), DomainError);
    CHECK_THROWS_WITH_AS(estimate_density({3, 2, 10}, 100, 0, 1), "k must not exceed n (got k=3, n=2)", DomainError);
}

TEST_CASE("(2,4) estimate lands near the zeta product") {
    const auto r = estimate_density({2, 4, 1'000'000}, 100'000, 11, 1);
    CHECK(std::fabs(r.estimate - r.theory_value) <= 4 * r.std_error);
}

TEST_CASE("convergence sweep") {
    const std::vector<std::uint64_t> bounds{2, 10, 100};
    auto reps = convergence_sweep(1, 2, bounds, 20000, 1, 1);
    REQUIRE(reps.size() == 3);
    CHECK(reps[0].stream == SampleStream::Enumeration);
    CHECK(reps[0].samples == 16);
    CHECK(reps[0].hits == 12);
    CHECK(reps[0].std_error == doctest::Approx(std::sqrt(0.75 * 0.25 / 16)));
    // 400 <= 20000, so B=10 is enumerated as well
    CHECK(reps[1].stream == SampleStream::Enumeration);
    CHECK(reps[1].samples == 400);
    CHECK(BigInt(static_cast<unsigned long>(reps[1].hits)) == exhaustive_density({1, 2, 10}).hits);
    CHECK(reps[2].stream == SampleStream::Random);
    CHECK(reps[2].samples == 20000);
    CHECK(reps[2].spec.bound == 100);
    CHECK(std::fabs(reps[2].estimate - 0.6079) < 0.03);
    CHECK(reps[1].seed != reps[2].seed);

    const std::vector<std::uint64_t> single{50};
    CHECK(convergence_sweep(1, 2, single, 1000, 1).size() == 1);

    CHECK_THROWS_AS(convergence_sweep(1, 2, std::vector<std::uint64_t>{}, 1000, 1), DomainError);
    CHECK_THROWS_AS(convergence_sweep(1, 2, std::vector<std::uint64_t>{10, 5}, 1000, 1), DomainError);

    const auto again = convergence_sweep(1, 2, bounds, 20000, 1, 4);
    for (std::size_t i = 0; i < 3; ++i) CHECK(again[i].hits == reps[i].hits);
}

TEST_CASE("local density verification by enumeration mod p") {
    auto r = verify_local_density(2, 1, 2);
    CHECK(r.full_rank == 3);
    CHECK(r.empirical == Rational(3, 4));
    CHECK(r.agree);

    r = verify_local_density(3, 1, 2);
    CHECK(r.empirical == Rational(8, 9));
    CHECK(r.agree);

    r = verify_local_density(2, 2, 2);
    CHECK(r.full_rank == 6);
    CHECK(r.empirical == Rational(3, 8));
    CHECK(r.agree);

    CHECK_THROWS_AS(verify_local_density(5, 3, 3, 1000), BudgetExceeded);
    CHECK_THROWS_AS(verify_local_density(6, 1, 2), DomainError);
}

TEST_CASE("rank mod p") {
    std::vector<std::uint64_t> m{1, 2, 2, 4};
    CHECK(rank_mod_p(m, 2, 2, 5) == 1);
    m = {1, 2, 2, 4};
    CHECK(rank_mod_p(m, 2, 2, 3) == 1);
    m = {0, 1, 1, 0};
    CHECK(rank_mod_p(m, 2, 2, 2) == 2);
    m = {0, 0, 0, 0, 0, 0};
    CHECK(rank_mod_p(m, 2, 3, 7) == 0);
}
