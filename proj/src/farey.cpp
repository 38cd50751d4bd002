#include "fareystat/farey.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace fareystat {

FareyCursor farey_start(std::int64_t m) {
    if (m < 1)
        throw std::invalid_argument("farey_start: order must be >= 1");
    FareyCursor cursor;
    cursor.order = m;
    cursor.index = 1;
    cursor.current = Fraction(1, m);
    if (m == 1) {
        cursor.successor = Fraction(2, 1);  // continuation past 1/1
    } else {
        cursor.successor = Fraction(1, m - 1);
    }
    return cursor;
}

FareyCursor farey_next(const FareyCursor& cursor) {
    if (cursor.at_end())
        throw std::out_of_range("farey_next: cursor is at 1/1, the end of the sequence");
    const std::int64_t a = cursor.current.num;
    const std::int64_t b = cursor.current.den;
    const std::int64_t c = cursor.successor.num;
    const std::int64_t d = cursor.successor.den;
    const std::int64_t j = (cursor.order + b) / d;

    FareyCursor next;
    next.order = cursor.order;
    next.index = cursor.index + 1;
    next.current = cursor.successor;
    next.successor.num = j * c - a;  // already reduced: unimodularity is preserved
    next.successor.den = j * d - b;
    return next;
}

std::int64_t farey_rank(const Fraction& x, std::int64_t m, const MobiusTable& mobius) {
    if (m < 1)
        throw std::invalid_argument("farey_rank: order must be >= 1");
    if (!x.in_unit_interval())
        throw std::invalid_argument("farey_rank: fraction must lie in (0,1]");
    if (x.den > m)
        throw std::invalid_argument("farey_rank: " + x.str() + " is not an element of order " +
                                    std::to_string(m));
    if (mobius.limit < m)
        throw std::invalid_argument("farey_rank: Moebius table limit below order");

    // prefix[t] = sum_{s<=t} floor(s*p/q); t*p <= m^2 stays in 64 bits for any
    // desk-scale order.
    std::vector<std::int64_t> prefix(static_cast<std::size_t>(m) + 1, 0);
    for (std::int64_t t = 1; t <= m; ++t)
        prefix[static_cast<std::size_t>(t)] =
            prefix[static_cast<std::size_t>(t - 1)] + (t * x.num) / x.den;

    std::int64_t rank = 0;
    for (std::int64_t d = 1; d <= m; ++d) {
        const int mu = mobius.mu[static_cast<std::size_t>(d)];
        if (mu != 0)
            rank += mu * prefix[static_cast<std::size_t>(m / d)];
    }
    return rank;
}

namespace {

// sum_{t=1}^{n} floor(t/k) in closed form.
std::int64_t unit_floor_sum(std::int64_t n, std::int64_t k) {
    const std::int64_t q = n / k;
    const std::int64_t r = n - q * k;
    return k * (q * (q - 1) / 2) + q * (r + 1);
}

}  // namespace

std::int64_t unit_fraction_index(std::int64_t k, std::int64_t m, const MobiusTable& mobius) {
    if (k < 1 || k > m)
        throw std::invalid_argument("unit_fraction_index: need 1 <= k <= m");
    if (mobius.limit < m)
        throw std::invalid_argument("unit_fraction_index: Moebius table limit below order");
    std::int64_t rank = 0;
    for (std::int64_t d = 1; d <= m; ++d) {
        const int mu = mobius.mu[static_cast<std::size_t>(d)];
        if (mu != 0)
            rank += mu * unit_floor_sum(m / d, k);
    }
    return rank;
}

}  // namespace fareystat
