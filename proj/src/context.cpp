#include "crg/context.hpp"

#include "crg/errors.hpp"

#include <map>
#include <mutex>

namespace crg {

struct Context::Shared {
    explicit Shared(unsigned bits) : precision(bits), pi(bits), sqrt_pi(bits)
    {
        BigFloat lo(static_cast<mpfr_prec_t>(bits));
        BigFloat hi(static_cast<mpfr_prec_t>(bits));
        mpfr_const_pi(lo.get(), MPFR_RNDD);
        mpfr_const_pi(hi.get(), MPFR_RNDU);
        pi = BoundedReal::from_endpoints(std::move(lo), std::move(hi));
        sqrt_pi = sqrt(pi);
    }

    unsigned precision;
    BoundedReal pi;
    BoundedReal sqrt_pi;

    std::mutex primes_mutex;
    std::shared_ptr<const std::vector<std::uint32_t>> primes;
    std::uint32_t primes_limit = 0;

    std::mutex memo_mutex;
    std::map<std::string, std::shared_ptr<const void>, std::less<>> memo;
};

Context::Context(unsigned precision_bits)
{
    if (precision_bits < kMinPrecision) {
        throw DomainError("working precision must be at least " + std::to_string(kMinPrecision) + " bits");
    }
    shared_ = std::make_shared<Shared>(precision_bits);
}

unsigned Context::precision() const noexcept { return shared_->precision; }
const BoundedReal& Context::pi() const noexcept { return shared_->pi; }
const BoundedReal& Context::sqrt_pi() const noexcept { return shared_->sqrt_pi; }

BoundedReal Context::gamma_half_integer(unsigned k) const
{
    const Rational coeff = make_rational(factorial(2 * k), ipow(4, k) * factorial(k));
    return exact(coeff) * sqrt_pi();
}

std::shared_ptr<const std::vector<std::uint32_t>> Context::primes(std::uint32_t limit) const
{
    std::lock_guard lock(shared_->primes_mutex);
    if (!shared_->primes || shared_->primes_limit < limit) {
        // Grow geometrically so repeated small extensions stay cheap.
        const std::uint32_t target = std::max(limit, shared_->primes_limit * 2);
        shared_->primes = std::make_shared<const std::vector<std::uint32_t>>(sieve_primes(target));
        shared_->primes_limit = target;
    }
    return shared_->primes;
}

std::shared_ptr<const void> Context::memo_lookup(const std::string& key) const
{
    std::lock_guard lock(shared_->memo_mutex);
    const auto it = shared_->memo.find(key);
    return it == shared_->memo.end() ? nullptr : it->second;
}

std::shared_ptr<const void> Context::memo_insert(const std::string& key, std::shared_ptr<const void> value) const
{
    std::lock_guard lock(shared_->memo_mutex);
    return shared_->memo.try_emplace(key, std::move(value)).first->second;
}

std::vector<std::uint32_t> sieve_primes(std::uint32_t limit)
{
    std::vector<std::uint32_t> out;
    if (limit < 2) {
        return out;
    }
    std::vector<bool> composite(static_cast<std::size_t>(limit) + 1, false);
    for (std::uint64_t i = 2; i <= limit; ++i) {
        if (composite[i]) {
            continue;
        }
        out.push_back(static_cast<std::uint32_t>(i));
        for (std::uint64_t j = i * i; j <= limit; j += i) {
            composite[j] = true;
        }
    }
    return out;
}

} // namespace crg
