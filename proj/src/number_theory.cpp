#include "fareystat/number_theory.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace fareystat {

std::int64_t TotientTable::phi_sum(std::int64_t m) const {
    if (m < 1 || m > limit)
        throw std::invalid_argument("phi_sum: order " + std::to_string(m) +
                                    " outside table limit " + std::to_string(limit));
    return cumulative[static_cast<std::size_t>(m)];
}

SieveTables sieve_tables(std::int64_t m) {
    if (m < 1)
        throw std::invalid_argument("sieve_tables: order must be >= 1");

    const auto n = static_cast<std::size_t>(m);
    SieveTables tables;
    tables.totients.limit = m;
    tables.mobius.limit = m;
    auto& phi = tables.totients.phi;
    auto& mu = tables.mobius.mu;
    phi.assign(n + 1, 0);
    mu.assign(n + 1, 0);
    phi[1] = 1;
    mu[1] = 1;

    // Linear sieve over smallest prime factors; each composite is visited once.
    std::vector<std::int64_t> lp(n + 1, 0);
    std::vector<std::int64_t> primes;
    for (std::int64_t i = 2; i <= m; ++i) {
        if (lp[static_cast<std::size_t>(i)] == 0) {
            lp[static_cast<std::size_t>(i)] = i;
            primes.push_back(i);
            phi[static_cast<std::size_t>(i)] = i - 1;
            mu[static_cast<std::size_t>(i)] = -1;
        }
        for (std::int64_t p : primes) {
            if (p > lp[static_cast<std::size_t>(i)] || p > m / i)
                break;
            const auto ip = static_cast<std::size_t>(i * p);
            lp[ip] = p;
            if (p == lp[static_cast<std::size_t>(i)]) {
                phi[ip] = phi[static_cast<std::size_t>(i)] * p;
                mu[ip] = 0;
            } else {
                phi[ip] = phi[static_cast<std::size_t>(i)] * (p - 1);
                mu[ip] = static_cast<std::int8_t>(-mu[static_cast<std::size_t>(i)]);
            }
        }
    }

    auto& cum = tables.totients.cumulative;
    cum.assign(n + 1, 0);
    for (std::size_t k = 1; k <= n; ++k)
        cum[k] = cum[k - 1] + phi[k];
    return tables;
}

TotientTable totient_sieve(std::int64_t m) {
    return sieve_tables(m).totients;
}

MobiusTable mobius_sieve(std::int64_t m) {
    return sieve_tables(m).mobius;
}

std::int64_t totient_sum_from_2(const TotientTable& table, std::int64_t m) {
    return table.phi_sum(m) - 1;
}

double totient_sum_approx(std::int64_t m) {
    if (m < 1)
        throw std::invalid_argument("totient_sum_approx: order must be >= 1");
    const double md = static_cast<double>(m);
    return 3.0 * md * md / (std::numbers::pi * std::numbers::pi);
}

}  // namespace fareystat
