#include "crg/numerics.hpp"

#include "crg/errors.hpp"

#include <string>

namespace crg {

namespace {

void require_dimension(int n)
{
    if (n < 1) {
        throw DomainError("sphere dimension must be >= 1, got " + std::to_string(n));
    }
}

} // namespace

BoundedReal sphere_volume(const Context& ctx, int n)
{
    require_dimension(n);
    const BoundedReal& pi = ctx.pi();
    if (n % 2 == 0) {
        const long r = n / 2;
        return pow(pi * 2, r) * 2 / ctx.exact(double_factorial(2 * r - 1));
    }
    const long r = (n + 1) / 2;
    return pow(pi, r) * 2 / ctx.exact(factorial(static_cast<unsigned long>(r - 1)));
}

BoundedReal sphere_volume_gamma(const Context& ctx, int n)
{
    require_dimension(n);
    const BoundedReal& pi = ctx.pi();
    if (n % 2 == 0) {
        const unsigned r = static_cast<unsigned>(n / 2);
        return pow(pi, static_cast<long>(r)) * ctx.sqrt_pi() * 2 / ctx.gamma_half_integer(r);
    }
    const unsigned long m = static_cast<unsigned long>((n + 1) / 2);
    return pow(pi, static_cast<long>(m)) * 2 / ctx.exact(factorial(m - 1));
}

} // namespace crg
