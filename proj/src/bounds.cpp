#include "crg/bounds.hpp"

#include "crg/errors.hpp"
#include "crg/lfunc.hpp"
#include "crg/numerics.hpp"

namespace crg {

std::string to_string(VolumeBranch branch)
{
    switch (branch) {
    case VolumeBranch::small_dimension: return "small-dimension constant";
    case VolumeBranch::even_c_r_even: return "even n, cocompact, r even";
    case VolumeBranch::even_c_r_odd: return "even n, cocompact, r odd";
    case VolumeBranch::even_nc_r_0_1: return "even n, non-cocompact, r = 0,1 mod 4";
    case VolumeBranch::even_nc_r_2_3: return "even n, non-cocompact, r = 2,3 mod 4";
    case VolumeBranch::odd_c: return "odd n, cocompact, field l0 over k0";
    case VolumeBranch::odd_nc_r_even: return "odd n, non-cocompact, r even, L(r, chi_-3)";
    case VolumeBranch::odd_nc_r_1: return "odd n, non-cocompact, r = 1 mod 4, zeta(r)";
    case VolumeBranch::odd_nc_r_3: return "odd n, non-cocompact, r = 3 mod 4, zeta(r)";
    }
    return "unknown";
}

VolumeBranch select_branch(int n, bool cocompact)
{
    if (n < 2) {
        throw DomainError("covolume bounds need n >= 2");
    }
    if (n <= 3) {
        return VolumeBranch::small_dimension;
    }
    if (n % 2 == 0) {
        const int r = n / 2;
        if (cocompact) {
            return r % 2 == 0 ? VolumeBranch::even_c_r_even : VolumeBranch::even_c_r_odd;
        }
        return (r % 4 == 0 || r % 4 == 1) ? VolumeBranch::even_nc_r_0_1 : VolumeBranch::even_nc_r_2_3;
    }
    const int r = (n + 1) / 2;
    if (cocompact) {
        return VolumeBranch::odd_c;
    }
    if (r % 2 == 0) {
        return VolumeBranch::odd_nc_r_even;
    }
    return r % 4 == 1 ? VolumeBranch::odd_nc_r_1 : VolumeBranch::odd_nc_r_3;
}

namespace {

// Π_{i=1}^{m} ((2i−1)!/(2π)^{2i})^power · z(2i)
template <class Zeta>
BoundedReal zeta_product(const Context& ctx, int m, long power, Zeta&& z)
{
    BoundedReal prod = ctx.exact(1);
    const BoundedReal two_pi = ctx.pi() * 2;
    for (int i = 1; i <= m; ++i) {
        const BoundedReal term = ctx.exact(factorial(2UL * static_cast<unsigned long>(i) - 1)) /
                                 pow(two_pi, 2L * i);
        prod *= pow(term, power) * z(i);
    }
    return prod;
}

BoundedReal compute_omega(const Context& ctx, int n, VolumeBranch branch)
{
    const BoundedReal& pi = ctx.pi();
    const BoundedReal two_pi = pi * 2;
    auto zk0 = [&](int i) { return dedekind_zeta_quadratic(ctx, 5, 2 * i); };
    auto zq = [&](int i) { return zeta_even(ctx, i); };

    switch (branch) {
    case VolumeBranch::small_dimension:
        if (n == 2) {
            throw DomainError("internal: n = 2 handled by caller");
        }
        throw DomainError("internal: n = 3 handled by caller");
    case VolumeBranch::even_c_r_even:
    case VolumeBranch::even_c_r_odd: {
        const long r = n / 2;
        const Integer lead = branch == VolumeBranch::even_c_r_even ? Integer(2) : ipow(4, static_cast<unsigned long>(r)) - 1;
        const BoundedReal five_power = pow(ctx.exact(5), make_rational(2 * r * r + r, 2));
        return ctx.exact(lead) * five_power * pow(two_pi, r) / ctx.exact(double_factorial(2 * r - 1)) *
               zeta_product(ctx, static_cast<int>(r), 2, zk0);
    }
    case VolumeBranch::even_nc_r_0_1:
    case VolumeBranch::even_nc_r_2_3: {
        const long r = n / 2;
        const Integer lead = branch == VolumeBranch::even_nc_r_0_1 ? Integer(2) : ipow(2, static_cast<unsigned long>(r)) - 1;
        return ctx.exact(lead) * pow(two_pi, r) / ctx.exact(double_factorial(2 * r - 1)) *
               zeta_product(ctx, static_cast<int>(r), 1, zq);
    }
    case VolumeBranch::odd_c: {
        const long r = (n + 1) / 2;
        const BoundedReal lead = pow(ctx.exact(5), make_rational(2 * r * r - r, 2)) * pow(ctx.exact(11), make_rational(2 * r - 1, 2)) *
                                 ctx.exact(factorial(static_cast<unsigned long>(r - 1))) /
                                 (ctx.exact(ipow(4, static_cast<unsigned long>(r))) * pow(pi, r));
        return lead * l_relative_quartic(ctx, static_cast<int>(r)) * zeta_product(ctx, static_cast<int>(r - 1), 2, zk0);
    }
    case VolumeBranch::odd_nc_r_even: {
        const long r = (n + 1) / 2;
        return pow(ctx.exact(3), make_rational(2 * r - 1, 2)) / ctx.exact(ipow(2, static_cast<unsigned long>(r))) *
               dirichlet_l(ctx, QuadraticCharacter(-3), static_cast<int>(r)) *
               zeta_product(ctx, static_cast<int>(r - 1), 1, zq);
    }
    case VolumeBranch::odd_nc_r_1:
    case VolumeBranch::odd_nc_r_3: {
        const long r = (n + 1) / 2;
        const unsigned long ru = static_cast<unsigned long>(r);
        const Rational lead = branch == VolumeBranch::odd_nc_r_1
                                  ? make_rational(Integer(1), ipow(2, ru - 1))
                                  : make_rational((ipow(2, ru) - 1) * (ipow(2, ru - 1) - 1), 3 * ipow(2, ru));
        return lead * (zeta_odd(ctx, static_cast<int>(r)) * zeta_product(ctx, static_cast<int>(r - 1), 1, zq));
    }
    }
    throw DomainError("unreachable branch");
}

} // namespace

VolumeBound omega(const Context& ctx, int n, bool cocompact)
{
    const VolumeBranch branch = select_branch(n, cocompact);
    VolumeBound out;
    out.n = n;
    out.cocompact = cocompact;
    out.branch = branch;
    if (n == 2) {
        out.value = ctx.pi() / (cocompact ? 42 : 6);
        return out;
    }
    if (n == 3) {
        out.value = BoundedReal::from_decimal(cocompact ? "0.019525" : "0.0423", "1e-4", ctx.precision());
        return out;
    }
    const std::string key = "omega:" + std::to_string(n) + (cocompact ? ":c" : ":nc");
    out.value = *ctx.memo<BoundedReal>(key, [&] { return compute_omega(ctx, n, branch); });
    return out;
}

BoundedReal b1(const Context& ctx, int r)
{
    if (r < 2) {
        throw DomainError("B_1(r) needs r >= 2");
    }
    const BoundedReal two_pi = ctx.pi() * 2;
    BoundedReal v = 12 / two_pi;
    for (int i = 1; i <= r; ++i) {
        v *= ctx.exact(factorial(2UL * static_cast<unsigned long>(i) - 1)) / pow(two_pi, 2L * i);
    }
    return v;
}

BoundedReal b2(const Context& ctx, int r)
{
    if (r < 2) {
        throw DomainError("B_2(r) needs r >= 2");
    }
    const BoundedReal two_pi = ctx.pi() * 2;
    BoundedReal v = ctx.exact(factorial(static_cast<unsigned long>(r - 1))) / pow(two_pi, static_cast<long>(r));
    for (int i = 1; i <= r - 1; ++i) {
        v *= ctx.exact(factorial(2UL * static_cast<unsigned long>(i) - 1)) / pow(two_pi, 2L * i);
    }
    return v;
}

BoundedReal class_number_bound(const Context& ctx, int d, const Integer& D)
{
    if (d < 1 || D < 1) {
        throw DomainError("class-number bound needs d >= 1 and D >= 1");
    }
    return ctx.exact(Integer(16 * D)) * pow(ctx.pi() / 12, static_cast<long>(d));
}

Integer class_number_estimate(const Context& ctx, int d, const Integer& D)
{
    return with_precision_escalation(ctx, [&](const Context& c) {
        const BoundedReal v = class_number_bound(c, d, D);
        mpz_class lo_floor;
        mpfr_get_z(lo_floor.get_mpz_t(), v.lower().get(), MPFR_RNDD);
        // ⌈v⌉ = lo_floor + 1 unless v is the integer lo_floor itself, which π
        // rules out; both endpoints must land in (lo_floor, lo_floor + 1].
        if (!definitely_greater(v, Rational(lo_floor)) || !definitely_at_most(v, c.exact(Integer(lo_floor + 1)))) {
            throw UndecidedError("class-number ceiling undecided");
        }
        return Integer(lo_floor + 1);
    });
}

BoundedReal nu_lower_bound(const Context& ctx, const FieldBoundInput& in)
{
    if (in.n < 4 || in.d < 1 || in.D_k < 1) {
        throw DomainError("nu_lower_bound needs n >= 4, d >= 1 and D_k >= 1");
    }
    if (!definitely_greater(in.h, Rational(0))) {
        throw DomainError("class number must be positive");
    }
    const BoundedReal two_pi = ctx.pi() * 2;
    const long d = in.d;
    if (in.n % 2 == 0) {
        const long r = in.n / 2;
        BoundedReal prod = ctx.exact(1);
        for (long i = 1; i <= r; ++i) {
            prod *= ctx.exact(factorial(2UL * static_cast<unsigned long>(i) - 1)) / pow(two_pi, 2 * i);
        }
        const BoundedReal c1 = pow(ctx.exact(in.D_k), make_rational(2 * r * r + r, 2)) * sphere_volume(ctx, in.n) * pow(prod, d);
        return c1 / (ctx.exact(ipow(2, static_cast<unsigned long>(d))) * in.h);
    }

    const long r = (in.n + 1) / 2;
    Rational relative = 1;
    if (in.D_l) {
        relative = make_rational(*in.D_l, ipow(in.D_k, 2));
        if (relative < 1) {
            throw DomainError("D_l must be at least D_k^2 for a quadratic extension");
        }
    } else if (in.d != 1) {
        throw DomainError("odd n with k != Q needs D_l: the splitting field is a quadratic extension of k");
    }
    const BoundedReal c2 = pow(ctx.exact(in.D_k), make_rational(2 * r * r - r, 2)) * pow(b2(ctx, static_cast<int>(r)), d) *
                           sphere_volume(ctx, in.n) * 2;
    if (r % 2 == 1) {
        return c2 * pow(ctx.exact(relative), make_rational(2 * r - 1, 2)) /
               (ctx.exact(ipow(2, static_cast<unsigned long>(d + 1))) * in.h);
    }
    return c2 * pow(ctx.exact(relative), make_rational(2 * r - 3, 2)) /
           (ctx.exact(ipow(2, static_cast<unsigned long>(2 * d - 1))) * in.h);
}

GrowthCertificate growth_certificate(const Context& ctx, int n_max)
{
    if (n_max < 4 || n_max > 64) {
        throw DomainError("growth certificate supports 4 <= n_max <= 64");
    }
    GrowthCertificate cert;
    for (int n = 4; n <= n_max; ++n) {
        const BoundedReal vol = sphere_volume(ctx, n);
        cert.rows.push_back(GrowthRow{n, omega(ctx, n, true).value / vol, omega(ctx, n, false).value / vol});
    }
    auto value = [&](int n, bool c) -> const BoundedReal& {
        const GrowthRow& row = cert.rows[static_cast<std::size_t>(n - 4)];
        return c ? row.ratio_c : row.ratio_nc;
    };
    for (int n = cert.start; n + cert.period + 1 <= n_max; ++n) {
        ++cert.comparisons;
        for (bool c : {true, false}) {
            const BoundedReal q0 = value(n + cert.period, c) / value(n, c);
            const BoundedReal q1 = value(n + 1 + cert.period, c) / value(n + 1, c);
            if (!definitely_less(q0, q1)) {
                (c ? cert.increasing_c : cert.increasing_nc) = false;
                cert.failures.push_back(std::string(c ? "cocompact" : "non-cocompact") + " q(" + std::to_string(n) +
                                        ") < q(" + std::to_string(n + 1) + ") not certified");
            }
        }
    }
    return cert;
}

} // namespace crg
