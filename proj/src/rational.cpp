#include "crg/rational.hpp"

#include "crg/errors.hpp"

#include <mutex>

namespace crg {

Rational make_rational(const Integer& num, const Integer& den)
{
    if (den == 0) {
        throw DomainError("rational with zero denominator");
    }
    Rational q(num, den);
    q.canonicalize();
    return q;
}

Integer factorial(unsigned long m)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), m);
    return r;
}

Integer double_factorial(long m)
{
    if (m < -1) {
        throw DomainError("double factorial of m < -1");
    }
    if (m <= 0) {
        return 1;
    }
    Integer r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(m));
    return r;
}

Integer binomial(unsigned long n, unsigned long k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer ipow(const Integer& base, unsigned long e)
{
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

namespace {

std::mutex bernoulli_mutex;
std::vector<Rational> bernoulli_cache{Rational(1)};

} // namespace

std::vector<Rational> bernoulli_numbers(unsigned m)
{
    std::lock_guard lock(bernoulli_mutex);
    // sum_{k=0}^{j} C(j+1, k) B_k = 0
    for (auto j = static_cast<unsigned>(bernoulli_cache.size()); j <= m; ++j) {
        Rational acc = 0;
        for (unsigned k = 0; k < j; ++k) {
            if (k > 1 && k % 2 == 1) {
                continue;
            }
            acc += Rational(binomial(j + 1, k)) * bernoulli_cache[k];
        }
        Rational bj = -acc / Rational(j + 1);
        bj.canonicalize();
        bernoulli_cache.push_back(bj);
    }
    return {bernoulli_cache.begin(), bernoulli_cache.begin() + m + 1};
}

Rational bernoulli(unsigned m)
{
    if (m < 2 || m % 2 != 0) {
        throw DomainError("bernoulli: index must be even and >= 2 (got " + std::to_string(m) + ")");
    }
    return bernoulli_numbers(m)[m];
}

Rational bernoulli_polynomial(unsigned k, const Rational& x)
{
    const auto b = bernoulli_numbers(k);
    Rational acc = 0;
    Rational xp = 1; // x^(k-j) built from j = k downwards
    for (unsigned j = k + 1; j-- > 0;) {
        acc += Rational(binomial(k, j)) * b[j] * xp;
        xp *= x;
    }
    acc.canonicalize();
    return acc;
}

std::string to_string(const Rational& q) { return q.get_str(); }

} // namespace crg
