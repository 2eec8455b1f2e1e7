#pragma once

// Hot loops of the Euler-product evaluation, each in a serial reference form
// and an OpenMP form. The OpenMP forms are deterministic: work is cut into
// fixed-size blocks whose partial results are combined in block order, so the
// output does not depend on the thread count.

#include "crg/bounded_real.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace crg {

class SplittingPolynomial;

/// Local Euler factor Π_j (1 − p^{−f_j s})^{−1}, described by the residue
/// degrees f_j of the primes above p.
struct LocalFactor {
    std::uint32_t p = 0;
    std::array<std::uint8_t, 4> degrees{};
    std::uint8_t count = 0;
};

inline constexpr std::size_t kEulerBlockSize = 4096;

std::vector<LocalFactor> classify_primes_serial(const SplittingPolynomial& poly,
                                                const std::vector<std::uint32_t>& primes);
std::vector<LocalFactor> classify_primes_parallel(const SplittingPolynomial& poly,
                                                  const std::vector<std::uint32_t>& primes);

/// Π over the given local factors at integer s >= 2, enclosed at `precision` bits.
BoundedReal euler_product_serial(const std::vector<LocalFactor>& factors, int s, unsigned precision);
BoundedReal euler_product_parallel(const std::vector<LocalFactor>& factors, int s, unsigned precision);

} // namespace crg
