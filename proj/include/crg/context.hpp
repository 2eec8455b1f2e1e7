#pragma once

#include "crg/bounded_real.hpp"
#include "crg/errors.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace crg {

/// Evaluation context: working precision plus per-context caches (π, √π,
/// the prime sieve and memoized special values). Cheap to copy; copies share
/// caches. The precision never changes after construction; use
/// `with_precision` to get an independent context.
class Context {
public:
    static constexpr unsigned kDefaultPrecision = 128;
    static constexpr unsigned kMinPrecision = 64;

    explicit Context(unsigned precision_bits = kDefaultPrecision);

    unsigned precision() const noexcept;
    Context with_precision(unsigned precision_bits) const { return Context(precision_bits); }

    const BoundedReal& pi() const noexcept;
    const BoundedReal& sqrt_pi() const noexcept;
    /// Γ(k + 1/2) = (2k)! √π / (4^k k!).
    BoundedReal gamma_half_integer(unsigned k) const;

    BoundedReal exact(long v) const { return BoundedReal(v, precision()); }
    BoundedReal exact(const Rational& q) const { return BoundedReal::from_rational(q, precision()); }
    BoundedReal exact(const Integer& z) const { return BoundedReal::from_integer(z, precision()); }

    /// All primes <= limit (the cached list may extend further; callers filter).
    std::shared_ptr<const std::vector<std::uint32_t>> primes(std::uint32_t limit) const;

    /// Per-context memo keyed by string. `make` runs outside the lock, so it may
    /// itself consult the memo; concurrent misses may compute twice, first insert wins.
    template <class T>
    std::shared_ptr<const T> memo(const std::string& key, const std::function<T()>& make) const
    {
        if (auto hit = memo_lookup(key)) {
            return std::static_pointer_cast<const T>(hit);
        }
        auto value = std::make_shared<const T>(make());
        return std::static_pointer_cast<const T>(memo_insert(key, value));
    }

private:
    std::shared_ptr<const void> memo_lookup(const std::string& key) const;
    std::shared_ptr<const void> memo_insert(const std::string& key, std::shared_ptr<const void> value) const;

    struct Shared;
    std::shared_ptr<Shared> shared_;
};

/// Simple sieve of Eratosthenes.
std::vector<std::uint32_t> sieve_primes(std::uint32_t limit);

/// Runs `fn` at the context precision, doubling it (at most `max_doublings`
/// times) while it throws UndecidedError.
template <class Fn>
auto with_precision_escalation(const Context& ctx, Fn&& fn, int max_doublings = 4)
{
    Context current = ctx;
    for (int attempt = 0;; ++attempt) {
        try {
            return fn(current);
        } catch (const UndecidedError&) {
            if (attempt >= max_doublings) {
                throw;
            }
            current = current.with_precision(current.precision() * 2);
        }
    }
}

} // namespace crg
