#include "fareystat/number_theory.hpp"

#include "support/oracles.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>

using namespace fareystat;

TEST_CASE("totient sieve smallest cases") {
    const auto t1 = totient_sieve(1);
    CHECK(t1.phi.at(1) == 1);
    CHECK(t1.cumulative.at(1) == 1);

    const auto t10 = totient_sieve(10);
    CHECK(t10.phi.at(10) == 4);
    CHECK(t10.cumulative.at(10) == 32);
}

TEST_CASE("totient sieve anchor at m = 500") {
    const auto table = totient_sieve(500);
    CHECK(table.phi_sum(500) == 76116);
    CHECK(totient_sum_from_2(table, 500) == 76115);
}

TEST_CASE("totient sieve rejects order zero") {
    CHECK_THROWS_AS(totient_sieve(0), std::invalid_argument);
    CHECK_THROWS_AS(mobius_sieve(0), std::invalid_argument);
}

TEST_CASE("sieve matches trial division up to 2000") {
    const auto table = totient_sieve(2000);
    std::int64_t coprime_pairs = 0;
    for (std::int64_t k = 1; k <= 2000; ++k) {
        const std::int64_t expected = oracle::phi_trial_division(k);
        CHECK(table.phi.at(static_cast<std::size_t>(k)) == expected);
        coprime_pairs += expected;
        // cumulative[k] counts coprime pairs (p,q), 0 < p <= q <= k
        CHECK(table.cumulative.at(static_cast<std::size_t>(k)) == coprime_pairs);
    }
}

TEST_CASE("cumulative sums are strictly increasing with phi differences") {
    const auto table = totient_sieve(300);
    for (std::int64_t k = 2; k <= 300; ++k) {
        CHECK(table.cumulative.at(static_cast<std::size_t>(k)) >
              table.cumulative.at(static_cast<std::size_t>(k - 1)));
        CHECK(table.cumulative.at(static_cast<std::size_t>(k)) -
                  table.cumulative.at(static_cast<std::size_t>(k - 1)) ==
              table.phi.at(static_cast<std::size_t>(k)));
    }
    CHECK(table.phi.at(1) == 1);
    for (std::int64_t p : {2, 3, 5, 7, 11, 13, 127, 211, 293})
        CHECK(table.phi.at(static_cast<std::size_t>(p)) == p - 1);
}

TEST_CASE("mobius sieve values and divisor-sum identity") {
    const auto mob = mobius_sieve(200);
    CHECK(mob.mu.at(1) == 1);
    CHECK(mob.mu.at(6) == 1);
    CHECK(mob.mu.at(12) == 0);
    for (std::int64_t k = 1; k <= 200; ++k)
        CHECK(static_cast<int>(mob.mu.at(static_cast<std::size_t>(k))) ==
              oracle::mu_factorization(k));

    // sum_{d|n} mu(d) = [n == 1]
    for (std::int64_t n = 1; n <= 200; ++n) {
        int sum = 0;
        for (std::int64_t d = 1; d <= n; ++d)
            if (n % d == 0)
                sum += mob.mu.at(static_cast<std::size_t>(d));
        CHECK(sum == (n == 1 ? 1 : 0));
    }
}

TEST_CASE("tail totient sum") {
    const auto table = totient_sieve(500);
    CHECK(totient_sum_from_2(table, 2) == 1);
    CHECK(totient_sum_from_2(table, 10) == 31);
    CHECK_THROWS_AS(totient_sum_from_2(table, 501), std::invalid_argument);
}

TEST_CASE("totient sum approximation") {
    CHECK(totient_sum_approx(500) ==
          doctest::Approx(750000.0 / (std::numbers::pi * std::numbers::pi)).epsilon(1e-15));
    CHECK(totient_sum_approx(1) == doctest::Approx(0.30396355).epsilon(1e-7));

    const auto table = totient_sieve(500);
    const double rel =
        std::abs(static_cast<double>(table.phi_sum(500)) - totient_sum_approx(500)) /
        static_cast<double>(table.phi_sum(500));
    CHECK(rel < 0.002);
}

TEST_CASE("approximation envelope improves along a log-spaced sample" *
          doctest::skip(false)) {
    // |Phi(m) pi^2/(3 m^2) - 1| at m = 10^2..10^6; decreasing and < 0.01 from 10^3 on.
    const auto table = totient_sieve(1'000'000);
    double prev = 1.0;
    for (std::int64_t m : {100LL, 1'000LL, 10'000LL, 100'000LL, 1'000'000LL}) {
        const double ratio =
            static_cast<double>(table.phi_sum(m)) / totient_sum_approx(m);
        const double rel = std::abs(ratio - 1.0);
        CHECK(rel < prev);
        if (m >= 1'000)
            CHECK(rel < 0.01);
        prev = rel;
    }
}

TEST_CASE("sieve output is deterministic and prefix-stable") {
    const auto big = sieve_tables(700);
    const auto small = sieve_tables(411);
    for (std::int64_t k = 1; k <= 411; ++k) {
        CHECK(big.totients.phi.at(static_cast<std::size_t>(k)) ==
              small.totients.phi.at(static_cast<std::size_t>(k)));
        CHECK(big.mobius.mu.at(static_cast<std::size_t>(k)) ==
              small.mobius.mu.at(static_cast<std::size_t>(k)));
    }
    const auto again = sieve_tables(700);
    CHECK(again.totients.cumulative == big.totients.cumulative);
    CHECK(again.mobius.mu == big.mobius.mu);
}
