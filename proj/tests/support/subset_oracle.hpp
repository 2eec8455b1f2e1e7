#pragma once

#include "crg/forms.hpp"

#include <algorithm>
#include <vector>

namespace crg::testing {

// Every combination of primes <= max_prime whose λ product stays within the
// budget, found without any ordering or pruning argument. Sets come back sorted.
inline std::vector<std::vector<long>> subset_oracle(int n, const Rational& budget, long max_prime)
{
    const int r = n % 2 == 0 ? n / 2 : (n + 1) / 2;
    const auto parity = n % 2 == 0 ? DimensionParity::even : DimensionParity::odd;
    std::vector<long> primes;
    for (std::uint32_t p : sieve_primes(static_cast<std::uint32_t>(max_prime))) {
        primes.push_back(p);
    }
    std::vector<Rational> lam;
    for (long p : primes) {
        lam.push_back(lambda_lower_exact(p, r, parity));
    }
    // Largest size worth trying: the k smallest factors already exceed the budget beyond it.
    std::vector<Rational> sorted = lam;
    std::sort(sorted.begin(), sorted.end());
    std::size_t kmax = 0;
    Rational acc = 1;
    while (kmax < sorted.size() && acc * sorted[kmax] <= budget) {
        acc *= sorted[kmax];
        ++kmax;
    }
    std::vector<std::vector<long>> out;
    std::vector<std::size_t> idx;
    // Plain combinations of every size up to kmax.
    for (std::size_t k = 0; k <= kmax; ++k) {
        idx.assign(k, 0);
        for (std::size_t i = 0; i < k; ++i) {
            idx[i] = i;
        }
        while (true) {
            Rational prod = 1;
            std::vector<long> set;
            for (std::size_t i : idx) {
                prod *= lam[i];
                set.push_back(primes[i]);
            }
            if (prod <= budget) {
                out.push_back(set);
            }
            std::size_t i = k;
            while (i > 0 && idx[i - 1] == primes.size() - k + i - 1) {
                --i;
            }
            if (i == 0) {
                break;
            }
            ++idx[i - 1];
            for (std::size_t j = i; j < k; ++j) {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace crg::testing
