#include "fareystat/farey.hpp"

#include "fareystat/number_theory.hpp"
#include "support/oracles.hpp"

#include <doctest.h>

#include <map>
#include <stdexcept>

using namespace fareystat;

TEST_CASE("farey_start positions") {
    const auto one = farey_start(1);
    CHECK(one.current == Fraction(1, 1));
    CHECK(one.index == 1);
    CHECK(one.at_end());

    const auto five = farey_start(5);
    CHECK(five.current == Fraction(1, 5));
    CHECK(five.successor == Fraction(1, 4));
    CHECK(five.index == 1);

    const auto big = farey_start(500);
    CHECK(big.current == Fraction(1, 500));
    CHECK(big.index == 1);

    CHECK_THROWS_AS(farey_start(0), std::invalid_argument);
}

TEST_CASE("farey_next recurrence") {
    FareyCursor cur = farey_start(5);
    cur = farey_next(cur);  // 1/4
    cur = farey_next(cur);
    CHECK(cur.current == Fraction(1, 3));
    CHECK(cur.index == 3);

    FareyCursor two = farey_start(2);
    CHECK(two.current == Fraction(1, 2));
    two = farey_next(two);
    CHECK(two.current == Fraction(1, 1));
    CHECK(two.index == 2);
    CHECK(two.at_end());
    CHECK_THROWS_AS(farey_next(two), std::out_of_range);
}

TEST_CASE("full walk matches sorted enumeration") {
    for (std::int64_t m : {1LL, 2LL, 3LL, 7LL, 12LL, 60LL}) {
        const auto expected = oracle::enumeration(m);
        FareyCursor cur = farey_start(m);
        std::size_t seen = 0;
        for (;;) {
            REQUIRE(seen < expected.size());
            CHECK(cur.current.num == expected[seen].p);
            CHECK(cur.current.den == expected[seen].q);
            CHECK(cur.index == expected[seen].index);
            ++seen;
            if (cur.at_end())
                break;
            cur = farey_next(cur);
        }
        CHECK(seen == expected.size());
        if (m == 7)
            CHECK(seen == 18);  // Phi(7)
    }
}

TEST_CASE("walk preserves unimodularity and strict increase") {
    for (std::int64_t m : {2LL, 5LL, 29LL, 97LL}) {
        FareyCursor cur = farey_start(m);
        for (;;) {
            const auto& a = cur.current;
            const auto& b = cur.successor;
            CHECK(b.num * a.den - a.num * b.den == 1);
            CHECK(a.in_unit_interval());
            if (cur.at_end())
                break;
            const Fraction prev = cur.current;
            cur = farey_next(cur);
            CHECK(prev < cur.current);
        }
    }
}

TEST_CASE("rank of terminal fraction is the totient sum") {
    const auto tables = sieve_tables(300);
    for (std::int64_t m : {1LL, 2LL, 17LL, 300LL})
        CHECK(farey_rank(Fraction(1, 1), m, tables.mobius) == tables.totients.phi_sum(m));
}

TEST_CASE("published rank anchors") {
    const auto tables = sieve_tables(500);
    CHECK(farey_rank(Fraction(1, 250), 500, tables.mobius) == 251);
    CHECK(farey_rank(Fraction(1, 2), 3, tables.mobius) == 2);
}

TEST_CASE("rank equals enumeration index (m <= 60)") {
    const auto tables = sieve_tables(60);
    for (std::int64_t m = 1; m <= 60; ++m)
        for (const auto& t : oracle::enumeration(m))
            CHECK(farey_rank(Fraction(t.p, t.q), m, tables.mobius) == t.index);
}

TEST_CASE("rank symmetry about one half") {
    // rank(p/q) + rank((q-p)/q) == Phi(m) for 0 < p < q; 1/1 sits outside the pairing.
    const auto tables = sieve_tables(150);
    for (std::int64_t m : {3LL, 10LL, 47LL, 150LL}) {
        const std::int64_t count = tables.totients.phi_sum(m);
        std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> rank;
        for (const auto& t : oracle::enumeration(m))
            rank[{t.p, t.q}] = t.index;
        for (const auto& [pq, idx] : rank) {
            const auto [p, q] = pq;
            if (p == q)
                continue;
            CHECK(idx + rank.at({q - p, q}) == count);
        }
    }
}

TEST_CASE("unit_fraction_index matches farey_rank") {
    const auto tables = sieve_tables(500);
    for (std::int64_t m : {2LL, 12LL, 99LL, 500LL})
        for (std::int64_t k = 1; k <= m; ++k)
            CHECK(unit_fraction_index(k, m, tables.mobius) ==
                  farey_rank(Fraction(1, k), m, tables.mobius));
}

TEST_CASE("unit fraction anchors") {
    const auto tables = sieve_tables(500);
    CHECK(unit_fraction_index(500, 500, tables.mobius) == 1);
    CHECK(unit_fraction_index(100, 500, tables.mobius) == 735);
    for (std::int64_t m : {2LL, 3LL, 41LL, 500LL})
        CHECK(unit_fraction_index(m, m, tables.mobius) == 1);
    CHECK_THROWS_AS(unit_fraction_index(501, 500, tables.mobius), std::invalid_argument);
}

TEST_CASE("rank rejects fractions outside the order") {
    const auto tables = sieve_tables(10);
    CHECK_THROWS_AS(farey_rank(Fraction(1, 11), 10, tables.mobius), std::invalid_argument);
    CHECK_THROWS_AS(farey_rank(Fraction(3, 2), 10, tables.mobius), std::invalid_argument);
}
