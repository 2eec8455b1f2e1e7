#include "crg/kernels.hpp"

#include "crg/lfunc.hpp"

#include <omp.h>

namespace crg {

namespace {

LocalFactor classify_one(const SplittingPolynomial& poly, std::uint32_t p)
{
    LocalFactor out;
    out.p = p;
    const std::vector<int>& degrees =
        poly.is_ramified(p) ? poly.ramified_euler_factor(p) : factorization_type_mod_p(poly, p);
    for (int f : degrees) {
        out.degrees[out.count++] = static_cast<std::uint8_t>(f);
    }
    return out;
}

// Running enclosure [lo, hi] of a product of factors (1 − p^{−e})^{−1} > 1.
struct Accumulator {
    explicit Accumulator(unsigned precision)
        : lo(1, precision), hi(1, precision), t_lo(precision), t_hi(precision), x_lo(precision),
          x_hi(precision), d_lo(precision), d_hi(precision)
    {
    }

    void multiply(std::uint32_t p, unsigned long e)
    {
        mpfr_ui_pow_ui(t_lo.get(), p, e, MPFR_RNDD);
        mpfr_ui_pow_ui(t_hi.get(), p, e, MPFR_RNDU);
        mpfr_ui_div(x_lo.get(), 1, t_hi.get(), MPFR_RNDD);
        mpfr_ui_div(x_hi.get(), 1, t_lo.get(), MPFR_RNDU);
        mpfr_ui_sub(d_lo.get(), 1, x_hi.get(), MPFR_RNDD);
        mpfr_ui_sub(d_hi.get(), 1, x_lo.get(), MPFR_RNDU);
        mpfr_div(lo.get(), lo.get(), d_hi.get(), MPFR_RNDD);
        mpfr_div(hi.get(), hi.get(), d_lo.get(), MPFR_RNDU);
    }

    void absorb(const Accumulator& other)
    {
        mpfr_mul(lo.get(), lo.get(), other.lo.get(), MPFR_RNDD);
        mpfr_mul(hi.get(), hi.get(), other.hi.get(), MPFR_RNDU);
    }

    void apply(const LocalFactor& lf, int s)
    {
        for (std::uint8_t j = 0; j < lf.count; ++j) {
            multiply(lf.p, static_cast<unsigned long>(lf.degrees[j]) * static_cast<unsigned long>(s));
        }
    }

    BigFloat lo, hi, t_lo, t_hi, x_lo, x_hi, d_lo, d_hi;
};

} // namespace

std::vector<LocalFactor> classify_primes_serial(const SplittingPolynomial& poly,
                                                const std::vector<std::uint32_t>& primes)
{
    std::vector<LocalFactor> out;
    out.reserve(primes.size());
    for (std::uint32_t p : primes) {
        out.push_back(classify_one(poly, p));
    }
    return out;
}

std::vector<LocalFactor> classify_primes_parallel(const SplittingPolynomial& poly,
                                                  const std::vector<std::uint32_t>& primes)
{
    std::vector<LocalFactor> out(primes.size());
    const auto n = static_cast<std::ptrdiff_t>(primes.size());
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < n; ++i) {
        out[static_cast<std::size_t>(i)] = classify_one(poly, primes[static_cast<std::size_t>(i)]);
    }
    return out;
}

BoundedReal euler_product_serial(const std::vector<LocalFactor>& factors, int s, unsigned precision)
{
    Accumulator acc(precision);
    for (const LocalFactor& lf : factors) {
        acc.apply(lf, s);
    }
    return BoundedReal::from_endpoints(std::move(acc.lo), std::move(acc.hi));
}

BoundedReal euler_product_parallel(const std::vector<LocalFactor>& factors, int s, unsigned precision)
{
    const std::size_t blocks = (factors.size() + kEulerBlockSize - 1) / kEulerBlockSize;
    std::vector<Accumulator> partial;
    partial.reserve(blocks);
    for (std::size_t b = 0; b < blocks; ++b) {
        partial.emplace_back(precision);
    }
#pragma omp parallel for schedule(dynamic, 1)
    for (std::ptrdiff_t b = 0; b < static_cast<std::ptrdiff_t>(blocks); ++b) {
        const std::size_t begin = static_cast<std::size_t>(b) * kEulerBlockSize;
        const std::size_t end = std::min(factors.size(), begin + kEulerBlockSize);
        for (std::size_t i = begin; i < end; ++i) {
            partial[static_cast<std::size_t>(b)].apply(factors[i], s);
        }
    }
    Accumulator total(precision);
    for (const Accumulator& block : partial) {
        total.absorb(block);
    }
    return BoundedReal::from_endpoints(std::move(total.lo), std::move(total.hi));
}

} // namespace crg
