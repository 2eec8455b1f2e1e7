#pragma once

#include "crg/bounded_real.hpp"
#include "crg/context.hpp"
#include "crg/rational.hpp"

namespace crg {

/// Euclidean volume of the unit n-sphere in R^{n+1}, via the factorial
/// closed forms: 2(2π)^r/(2r−1)!! for n = 2r and 2π^r/(r−1)! for n = 2r−1.
BoundedReal sphere_volume(const Context& ctx, int n);

/// Same quantity through 2π^{(n+1)/2}/Γ((n+1)/2), with Γ at half-integers
/// taken from the context. Kept as an independent cross-check.
BoundedReal sphere_volume_gamma(const Context& ctx, int n);

} // namespace crg
