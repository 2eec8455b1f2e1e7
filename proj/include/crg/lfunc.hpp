#pragma once

#include "crg/bounded_real.hpp"
#include "crg/context.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace crg {

/// Kronecker symbol (a/n) for any integers a, n.
int kronecker(long a, long n);

/// True when D is the discriminant of a quadratic field.
bool is_fundamental_discriminant(long D);

/// Real primitive character χ_D(n) = (D/n) attached to a fundamental discriminant.
class QuadraticCharacter {
public:
    explicit QuadraticCharacter(long fundamental_discriminant);

    long discriminant() const noexcept { return D_; }
    long conductor() const noexcept { return D_ < 0 ? -D_ : D_; }
    /// χ(−1): +1 for real quadratic fields, −1 for imaginary ones.
    int parity() const noexcept { return D_ > 0 ? 1 : -1; }
    int operator()(long n) const;

private:
    long D_;
};

/// ζ(2i) = |B_{2i}| (2π)^{2i} / (2 (2i)!).
BoundedReal zeta_even(const Context& ctx, int i);
/// ζ(r) for odd r >= 3.
BoundedReal zeta_odd(const Context& ctx, int r);
/// ζ(s) for any integer s >= 2.
BoundedReal zeta_value(const Context& ctx, int s);

/// Σ_{m>=0} (a + q m)^{−s} for s >= 2, a >= 1, q >= 1, with a certified
/// Euler–Maclaurin remainder.
BoundedReal progression_zeta(const Context& ctx, int s, long a, long q);

/// L(s, χ) for s >= 2: closed form when χ(−1) = (−1)^s, series otherwise.
BoundedReal dirichlet_l(const Context& ctx, const QuadraticCharacter& chi, int s);
/// Generalized-Bernoulli closed form; requires matching parity.
BoundedReal dirichlet_l_closed_form(const Context& ctx, const QuadraticCharacter& chi, int s);
/// Σ χ(n) n^{−s} split over residue classes mod the conductor.
BoundedReal dirichlet_l_series(const Context& ctx, const QuadraticCharacter& chi, int s);
/// Generalized Bernoulli number B_{k,χ}.
Rational generalized_bernoulli(const QuadraticCharacter& chi, unsigned k);

/// ζ_k(s) = ζ(s) L(s, χ_D) for the real quadratic field of discriminant D.
BoundedReal dedekind_zeta_quadratic(const Context& ctx, long D, int s);

/// Monic integer polynomial with explicit Euler data at its ramified primes.
/// Coefficients run from the constant term upward.
class SplittingPolynomial {
public:
    SplittingPolynomial(std::vector<long> coefficients, std::map<std::uint32_t, std::vector<int>> ramified_euler_factors);

    /// x⁴ − x³ + 2x − 1. Its field discriminant is −275 = −5²·11, equal to the
    /// polynomial discriminant, so Z[α] is maximal and Dedekind–Kummer gives
    /// 5 = P² (f = 2) and 11 = P₁² P₂ (f = 1, 2); see data/ell0_ramified.py.
    static const SplittingPolynomial& ell0();

    const std::vector<long>& coefficients() const noexcept { return coeffs_; }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    std::vector<std::uint32_t> ramified_primes() const;
    /// Residue degrees of the primes above p, for ramified p.
    const std::vector<int>& ramified_euler_factor(std::uint32_t p) const;
    bool is_ramified(std::uint32_t p) const { return ramified_.count(p) != 0; }
    std::string to_string() const;

private:
    std::vector<long> coeffs_;
    std::map<std::uint32_t, std::vector<int>> ramified_;
};

/// True iff the monic quartic has neither a rational root nor a factorization
/// into two monic integer quadratics.
bool is_irreducible_quartic(const std::vector<long>& coefficients);

/// Degrees of the irreducible factors of the quartic mod an unramified prime p,
/// sorted ascending.
std::vector<int> factorization_type_mod_p(const SplittingPolynomial& poly, std::uint32_t p);

/// Cutoff keeping the Euler-product tail of a quartic field below 1e-12.
std::uint32_t default_prime_cutoff(int s);

/// Euler product over p <= P with the tail enclosed via
/// Π_{p>P}(1 − p^{−s})^{−deg} <= exp(deg·P^{1−s}/((s−1)(1 − P^{−s}))).
BoundedReal riemann_zeta_euler(const Context& ctx, int s, std::uint32_t cutoff);
BoundedReal quadratic_zeta_euler(const Context& ctx, long D, int s, std::uint32_t cutoff);
BoundedReal quartic_zeta_euler(const Context& ctx, const SplittingPolynomial& poly, int s, std::uint32_t cutoff);

/// L_{ℓ0|k0}(r) = ζ_{ℓ0}(r)/ζ_{k0}(r) with k0 = Q(√5) (base_D = 5).
BoundedReal l_relative_quartic(const Context& ctx, const SplittingPolynomial& poly, long base_D, int r,
                               std::uint32_t prime_cutoff);
BoundedReal l_relative_quartic(const Context& ctx, int r);

} // namespace crg
