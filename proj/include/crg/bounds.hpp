#pragma once

#include "crg/bounded_real.hpp"
#include "crg/context.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crg {

/// Which case of the covolume bounds produced a value.
enum class VolumeBranch {
    small_dimension,  ///< sharp constants for n = 2, 3
    even_c_r_even,
    even_c_r_odd,
    even_nc_r_0_1,    ///< r ≡ 0, 1 (mod 4)
    even_nc_r_2_3,    ///< r ≡ 2, 3 (mod 4)
    odd_c,            ///< uses L_{ℓ0|k0}(r)
    odd_nc_r_even,    ///< uses L(r, χ_{−3})
    odd_nc_r_1,       ///< r ≡ 1 (mod 4)
    odd_nc_r_3,       ///< r ≡ 3 (mod 4)
};

std::string to_string(VolumeBranch branch);
VolumeBranch select_branch(int n, bool cocompact);

struct VolumeBound {
    int n = 0;
    bool cocompact = true;
    BoundedReal value;
    VolumeBranch branch = VolumeBranch::small_dimension;
};

/// Universal covolume lower bound ω_c(n) (cocompact) or ω_nc(n).
VolumeBound omega(const Context& ctx, int n, bool cocompact);

/// The per-degree penalty constants of the field sieve.
BoundedReal b1(const Context& ctx, int r);
BoundedReal b2(const Context& ctx, int r);

/// ⌈16 (π/12)^d D⌉, the class-number ceiling from the Brauer–Siegel route.
Integer class_number_estimate(const Context& ctx, int d, const Integer& D);
/// The real number 16 (π/12)^d D itself.
BoundedReal class_number_bound(const Context& ctx, int d, const Integer& D);

struct FieldBoundInput {
    int n = 0;
    int d = 0;
    Integer D_k = 0;
    std::optional<Integer> D_l;
    /// Class number used in the denominator (h_k for even n, h_ℓ for odd n).
    BoundedReal h = BoundedReal(1, 64);
};

/// Lower bound for ν(n, k, f) through the class-number route, with the ζ, L and
/// λ factors dropped. For odd n and k = Q without D_l the relative
/// discriminant is taken as 1.
BoundedReal nu_lower_bound(const Context& ctx, const FieldBoundInput& input);

struct GrowthRow {
    int n = 0;
    BoundedReal ratio_c;   ///< ω_c(n)/Vol(S^n)
    BoundedReal ratio_nc;  ///< ω_nc(n)/Vol(S^n)
};

/// Super-exponential growth check. Consecutive ratios v(n+1)/v(n) oscillate
/// with the residue of r mod 4, so the certificate compares the period-8
/// ratios q(n) = v(n+8)/v(n) and requires q(n) < q(n+1) definitely for every
/// n >= start with n + 9 <= n_max.
struct GrowthCertificate {
    std::vector<GrowthRow> rows;
    int start = 20;
    int period = 8;
    int comparisons = 0;
    bool increasing_c = true;
    bool increasing_nc = true;
    std::vector<std::string> failures;

    bool holds() const { return increasing_c && increasing_nc; }
};

GrowthCertificate growth_certificate(const Context& ctx, int n_max);

} // namespace crg
