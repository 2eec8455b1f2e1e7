#include "crg/lfunc.hpp"

#include "crg/errors.hpp"
#include "crg/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <numeric>
#include <sstream>

namespace crg {

// ---------------------------------------------------------------------------
// Characters

int kronecker(long a, long n)
{
    if (n == 0) {
        return (a == 1 || a == -1) ? 1 : 0;
    }
    int result = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) {
            result = -result;
        }
    }
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos > 0) {
        if (a % 2 == 0) {
            return 0;
        }
        const long a8 = ((a % 8) + 8) % 8;
        if ((twos % 2 == 1) && (a8 == 3 || a8 == 5)) {
            result = -result;
        }
    }
    // Jacobi symbol for odd positive n.
    long m = ((a % n) + n) % n;
    while (m != 0) {
        while (m % 2 == 0) {
            m /= 2;
            const long n8 = n % 8;
            if (n8 == 3 || n8 == 5) {
                result = -result;
            }
        }
        std::swap(m, n);
        if (m % 4 == 3 && n % 4 == 3) {
            result = -result;
        }
        m %= n;
    }
    return n == 1 ? result : 0;
}

namespace {

bool squarefree(long m)
{
    m = std::labs(m);
    for (long p = 2; p * p <= m; ++p) {
        if (m % (p * p) == 0) {
            return false;
        }
    }
    return true;
}

} // namespace

bool is_fundamental_discriminant(long D)
{
    if (D == 0 || D == 1) {
        return false;
    }
    const long r4 = ((D % 4) + 4) % 4;
    if (r4 == 1) {
        return squarefree(D);
    }
    if (r4 != 0) {
        return false;
    }
    const long m = D / 4;
    const long m4 = ((m % 4) + 4) % 4;
    return (m4 == 2 || m4 == 3) && squarefree(m);
}

QuadraticCharacter::QuadraticCharacter(long fundamental_discriminant) : D_(fundamental_discriminant)
{
    if (!is_fundamental_discriminant(D_)) {
        throw DomainError(std::to_string(D_) + " is not a fundamental discriminant");
    }
}

int QuadraticCharacter::operator()(long n) const { return kronecker(D_, n); }

// ---------------------------------------------------------------------------
// ζ and L values

BoundedReal zeta_even(const Context& ctx, int i)
{
    if (i < 1) {
        throw DomainError("zeta_even needs i >= 1");
    }
    const unsigned m = 2U * static_cast<unsigned>(i);
    const Rational b = bernoulli(m);
    const Rational coeff = abs(b) / (2 * Rational(factorial(m)));
    return coeff * pow(ctx.pi() * 2, static_cast<long>(m));
}

BoundedReal progression_zeta(const Context& ctx, int s, long a, long q)
{
    if (s < 2 || a < 1 || q < 1) {
        throw DomainError("progression_zeta needs s >= 2, a >= 1, q >= 1");
    }
    const unsigned p = std::max(4U, ctx.precision() / 4);
    const long N = 2 * static_cast<long>(p) + s;
    const unsigned long su = static_cast<unsigned long>(s);

    BoundedReal head(ctx.precision());
    for (long m = 0; m < N; ++m) {
        head += ctx.exact(make_rational(Integer(1), ipow(Integer(a + q * m), su)));
    }

    // Euler–Maclaurin tail at y = a + qN, kept exact.
    const Integer y = a + q * N;
    Rational tail = make_rational(Integer(1), Integer(q * (s - 1)) * ipow(y, su - 1));
    tail += make_rational(Integer(1), 2 * ipow(y, su));
    const std::vector<Rational> B = bernoulli_numbers(2 * p);
    Integer rising = s; // (s)_{2k−1}
    for (unsigned k = 1; k <= p; ++k) {
        if (k > 1) {
            rising *= Integer(s + 2 * static_cast<long>(k) - 3) * (s + 2 * static_cast<long>(k) - 2);
        }
        const unsigned long e = 2UL * k - 1;
        tail += B[2 * k] / Rational(factorial(2 * k)) * make_rational(rising * ipow(Integer(q), e), ipow(y, su + e));
    }
    // Remainder <= 2ζ(2p)/(2π)^{2p} |f^{(2p−1)}(N)| with ζ(2p) < 2 and 2π > 157/25.
    const unsigned long e = 2UL * p - 1;
    const Rational err = make_rational(4 * rising * ipow(Integer(q), e) * ipow(Integer(25), 2 * p),
                                  ipow(y, su + e) * ipow(Integer(157), 2 * p));
    return (head + ctx.exact(tail)).widened(BoundedReal::from_rational(err, ctx.precision()).upper());
}

BoundedReal zeta_odd(const Context& ctx, int r)
{
    if (r < 3 || r % 2 == 0) {
        throw DomainError("zeta_odd needs odd r >= 3");
    }
    return progression_zeta(ctx, r, 1, 1);
}

BoundedReal zeta_value(const Context& ctx, int s)
{
    if (s < 2) {
        throw DomainError("zeta_value needs s >= 2");
    }
    return s % 2 == 0 ? zeta_even(ctx, s / 2) : zeta_odd(ctx, s);
}

Rational generalized_bernoulli(const QuadraticCharacter& chi, unsigned k)
{
    const long f = chi.conductor();
    Rational sum = 0;
    for (long a = 1; a <= f; ++a) {
        const int c = chi(a);
        if (c != 0) {
            sum += c * bernoulli_polynomial(k, make_rational(a, f));
        }
    }
    return Rational(ipow(Integer(f), k - 1)) * sum;
}

BoundedReal dirichlet_l_closed_form(const Context& ctx, const QuadraticCharacter& chi, int s)
{
    const int delta = chi.parity() > 0 ? 0 : 1;
    if (s < 2 || (s - delta) % 2 != 0) {
        throw DomainError("closed form needs s >= 2 with χ(−1) = (−1)^s");
    }
    const long f = chi.conductor();
    const int sign = ((1 + (s - delta) / 2) % 2 == 0) ? 1 : -1;
    const Rational coeff =
        sign * generalized_bernoulli(chi, static_cast<unsigned>(s)) /
        (2 * Rational(factorial(static_cast<unsigned long>(s))) * Rational(ipow(Integer(f), static_cast<unsigned long>(s))));
    return coeff * sqrt(ctx.exact(f)) * pow(ctx.pi() * 2, static_cast<long>(s));
}

BoundedReal dirichlet_l_series(const Context& ctx, const QuadraticCharacter& chi, int s)
{
    if (s < 2) {
        throw DomainError("dirichlet_l needs s >= 2");
    }
    const long f = chi.conductor();
    BoundedReal sum(ctx.precision());
    for (long a = 1; a <= f; ++a) {
        const int c = chi(a);
        if (c == 1) {
            sum += progression_zeta(ctx, s, a, f);
        } else if (c == -1) {
            sum -= progression_zeta(ctx, s, a, f);
        }
    }
    return sum;
}

BoundedReal dirichlet_l(const Context& ctx, const QuadraticCharacter& chi, int s)
{
    if (s < 2) {
        throw DomainError("dirichlet_l needs s >= 2 (no analytic continuation)");
    }
    const bool matching = (chi.parity() > 0) == (s % 2 == 0);
    return matching ? dirichlet_l_closed_form(ctx, chi, s) : dirichlet_l_series(ctx, chi, s);
}

BoundedReal dedekind_zeta_quadratic(const Context& ctx, long D, int s)
{
    if (D <= 0 || !is_fundamental_discriminant(D)) {
        throw DomainError("dedekind_zeta_quadratic needs a positive fundamental discriminant, got " +
                          std::to_string(D));
    }
    return zeta_value(ctx, s) * dirichlet_l(ctx, QuadraticCharacter(D), s);
}

// ---------------------------------------------------------------------------
// Quartic splitting data

SplittingPolynomial::SplittingPolynomial(std::vector<long> coefficients,
                                         std::map<std::uint32_t, std::vector<int>> ramified_euler_factors)
    : coeffs_(std::move(coefficients)), ramified_(std::move(ramified_euler_factors))
{
    if (coeffs_.size() != 5 || coeffs_.back() != 1) {
        throw DomainError("only monic quartics are supported");
    }
    if (!is_irreducible_quartic(coeffs_)) {
        throw DomainError("polynomial " + to_string() + " is reducible over Q");
    }
    for (const auto& [p, degrees] : ramified_) {
        if (degrees.empty() || degrees.size() > 4) {
            throw DomainError("bad ramified Euler data at p = " + std::to_string(p));
        }
    }
}

const SplittingPolynomial& SplittingPolynomial::ell0()
{
    static const SplittingPolynomial poly({-1, 2, 0, -1, 1}, {{5U, {2}}, {11U, {1, 2}}});
    return poly;
}

std::vector<std::uint32_t> SplittingPolynomial::ramified_primes() const
{
    std::vector<std::uint32_t> out;
    for (const auto& entry : ramified_) {
        out.push_back(entry.first);
    }
    return out;
}

const std::vector<int>& SplittingPolynomial::ramified_euler_factor(std::uint32_t p) const
{
    const auto it = ramified_.find(p);
    if (it == ramified_.end()) {
        throw DomainError(std::to_string(p) + " is not a ramified prime of " + to_string());
    }
    return it->second;
}

std::string SplittingPolynomial::to_string() const
{
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const long c = coeffs_[static_cast<std::size_t>(k)];
        if (c == 0) {
            continue;
        }
        os << (c < 0 ? "-" : (first ? "" : "+"));
        const long mag = std::labs(c);
        if (mag != 1 || k == 0) {
            os << mag << (k > 0 ? "*" : "");
        }
        if (k >= 1) {
            os << "x" << (k > 1 ? "^" + std::to_string(k) : "");
        }
        first = false;
    }
    return os.str();
}

namespace {

std::vector<long> divisors_signed(long m)
{
    std::vector<long> out;
    const long a = std::labs(m);
    for (long d = 1; d * d <= a; ++d) {
        if (a % d == 0) {
            for (long v : {d, a / d}) {
                out.push_back(v);
                out.push_back(-v);
            }
        }
    }
    return out;
}

bool is_perfect_square(long v, long& root)
{
    if (v < 0) {
        return false;
    }
    root = static_cast<long>(std::llround(std::sqrt(static_cast<double>(v))));
    while (root * root > v) {
        --root;
    }
    while ((root + 1) * (root + 1) <= v) {
        ++root;
    }
    return root * root == v;
}

} // namespace

bool is_irreducible_quartic(const std::vector<long>& c)
{
    if (c.size() != 5 || c[4] != 1) {
        throw DomainError("is_irreducible_quartic needs a monic quartic");
    }
    if (c[0] == 0) {
        return false;
    }
    for (long t : divisors_signed(c[0])) {
        long v = 0;
        for (int k = 4; k >= 0; --k) {
            v = v * t + c[static_cast<std::size_t>(k)];
        }
        if (v == 0) {
            return false;
        }
    }
    // (x² + a x + b)(x² + e x + d): bd = c0, a + e = c3, b + d + ae = c2, ad + be = c1.
    for (long b : divisors_signed(c[0])) {
        const long d = c[0] / b;
        const long ae = c[2] - b - d;
        const long disc = c[3] * c[3] - 4 * ae;
        long root = 0;
        if (!is_perfect_square(disc, root) || (c[3] + root) % 2 != 0) {
            continue;
        }
        for (long a : {(c[3] + root) / 2, (c[3] - root) / 2}) {
            const long e = c[3] - a;
            if (a * d + b * e == c[1]) {
                return false;
            }
        }
    }
    return true;
}

namespace {

using u64 = std::uint64_t;

// Polynomials over F_p as coefficient vectors, constant term first, trimmed.
using Poly = std::vector<u64>;

void trim(Poly& f)
{
    while (!f.empty() && f.back() == 0) {
        f.pop_back();
    }
}

u64 inv_mod(u64 a, u64 p)
{
    u64 result = 1;
    u64 e = p - 2;
    a %= p;
    while (e > 0) {
        if (e & 1U) {
            result = result * a % p;
        }
        a = a * a % p;
        e >>= 1U;
    }
    return result;
}

Poly poly_mod(Poly a, const Poly& m, u64 p)
{
    trim(a);
    const u64 lead_inv = inv_mod(m.back(), p);
    while (a.size() >= m.size()) {
        const u64 coef = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - m.size();
        for (std::size_t i = 0; i < m.size(); ++i) {
            a[shift + i] = (a[shift + i] + p - coef * m[i] % p) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul_mod(const Poly& a, const Poly& b, const Poly& m, u64 p)
{
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly prod(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = 0; j < b.size(); ++j) {
            prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
        }
    }
    return poly_mod(std::move(prod), m, p);
}

Poly poly_pow_mod(Poly base, u64 e, const Poly& m, u64 p)
{
    Poly result{1};
    base = poly_mod(std::move(base), m, p);
    while (e > 0) {
        if (e & 1U) {
            result = poly_mul_mod(result, base, m, p);
        }
        base = poly_mul_mod(base, base, m, p);
        e >>= 1U;
    }
    return result;
}

Poly poly_gcd(Poly a, Poly b, u64 p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// g(h) mod m by Horner.
Poly poly_compose_mod(const Poly& g, const Poly& h, const Poly& m, u64 p)
{
    Poly result;
    for (std::size_t k = g.size(); k-- > 0;) {
        result = poly_mul_mod(result, h, m, p);
        if (result.empty()) {
            result.push_back(0);
        }
        result[0] = (result[0] + g[k]) % p;
        trim(result);
    }
    return result;
}

Poly sub_x(Poly g, u64 p)
{
    if (g.size() < 2) {
        g.resize(2, 0);
    }
    g[1] = (g[1] + p - 1) % p;
    trim(g);
    return g;
}

int degree(const Poly& f) { return static_cast<int>(f.size()) - 1; }

} // namespace

std::vector<int> factorization_type_mod_p(const SplittingPolynomial& poly, std::uint32_t prime)
{
    if (poly.is_ramified(prime)) {
        throw DomainError(std::to_string(prime) + " is ramified; use the stored Euler factor");
    }
    const u64 p = prime;
    Poly f;
    for (long c : poly.coefficients()) {
        f.push_back(static_cast<u64>(((c % static_cast<long>(p)) + static_cast<long>(p)) % static_cast<long>(p)));
    }
    trim(f);
    Poly df;
    for (std::size_t k = 1; k < f.size(); ++k) {
        df.push_back(f[k] * (k % p) % p);
    }
    trim(df);
    if (df.empty() || degree(poly_gcd(f, df, p)) > 0) {
        throw DomainError("polynomial is not separable mod " + std::to_string(prime) + " (ramified prime)");
    }
    const Poly xp = poly_pow_mod(Poly{0, 1}, p, f, p);
    const int linear = std::max(0, degree(poly_gcd(f, sub_x(xp, p), p)));
    const Poly xp2 = poly_compose_mod(xp, xp, f, p);
    const int upto_quadratic = std::max(0, degree(poly_gcd(f, sub_x(xp2, p), p)));
    const int quadratic = (upto_quadratic - linear) / 2;

    std::vector<int> out(static_cast<std::size_t>(linear), 1);
    out.insert(out.end(), static_cast<std::size_t>(quadratic), 2);
    const int rest = 4 - linear - 2 * quadratic;
    if (rest > 0) {
        out.push_back(rest);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Euler products

std::uint32_t default_prime_cutoff(int s)
{
    if (s < 2) {
        throw DomainError("default_prime_cutoff needs s >= 2");
    }
    const double wanted = std::pow(4.0 / ((s - 1) * 1e-12), 1.0 / (s - 1));
    const double clamped = std::clamp(std::ceil(wanted), 1e5, 2e6);
    return static_cast<std::uint32_t>(clamped);
}

namespace {

void require_cutoff(std::uint32_t cutoff, int s)
{
    if (s < 2) {
        throw DomainError("Euler products need s >= 2");
    }
    if (cutoff < 11) {
        throw DomainError("prime cutoff must be at least 11");
    }
}

// Multiplies the upper endpoint by exp(deg·P^{1−s}/((s−1)(1 − P^{−s}))).
BoundedReal with_tail(const BoundedReal& partial, int deg, std::uint32_t cutoff, int s)
{
    const unsigned long su = static_cast<unsigned long>(s);
    const Integer Ps = ipow(Integer(cutoff), su);
    const Rational T = make_rational(Integer(deg) * Ps, Integer(s - 1) * ipow(Integer(cutoff), su - 1) * (Ps - 1));
    BigFloat factor = BoundedReal::from_rational(T, partial.precision()).upper();
    mpfr_exp(factor.get(), factor.get(), MPFR_RNDU);
    BigFloat hi = partial.upper();
    mpfr_mul(hi.get(), hi.get(), factor.get(), MPFR_RNDU);
    return BoundedReal::from_endpoints(partial.lower(), std::move(hi));
}

std::vector<std::uint32_t> primes_upto(const Context& ctx, std::uint32_t cutoff)
{
    const auto all = ctx.primes(cutoff);
    return {all->begin(), std::upper_bound(all->begin(), all->end(), cutoff)};
}

} // namespace

BoundedReal riemann_zeta_euler(const Context& ctx, int s, std::uint32_t cutoff)
{
    require_cutoff(cutoff, s);
    std::vector<LocalFactor> factors;
    for (std::uint32_t p : primes_upto(ctx, cutoff)) {
        factors.push_back(LocalFactor{p, {1, 0, 0, 0}, 1});
    }
    return with_tail(euler_product_parallel(factors, s, ctx.precision()), 1, cutoff, s);
}

BoundedReal quadratic_zeta_euler(const Context& ctx, long D, int s, std::uint32_t cutoff)
{
    require_cutoff(cutoff, s);
    const QuadraticCharacter chi(D);
    std::vector<LocalFactor> factors;
    for (std::uint32_t p : primes_upto(ctx, cutoff)) {
        switch (chi(static_cast<long>(p))) {
        case 1: factors.push_back(LocalFactor{p, {1, 1, 0, 0}, 2}); break;
        case -1: factors.push_back(LocalFactor{p, {2, 0, 0, 0}, 1}); break;
        default: factors.push_back(LocalFactor{p, {1, 0, 0, 0}, 1}); break;
        }
    }
    return with_tail(euler_product_parallel(factors, s, ctx.precision()), 2, cutoff, s);
}

BoundedReal quartic_zeta_euler(const Context& ctx, const SplittingPolynomial& poly, int s, std::uint32_t cutoff)
{
    require_cutoff(cutoff, s);
    for (std::uint32_t p : poly.ramified_primes()) {
        if (p > cutoff) {
            throw DomainError("prime cutoff must exceed every ramified prime");
        }
    }
    const auto factors = ctx.memo<std::vector<LocalFactor>>(
        "split:" + poly.to_string() + ":" + std::to_string(cutoff),
        [&] { return classify_primes_parallel(poly, primes_upto(ctx, cutoff)); });
    return with_tail(euler_product_parallel(*factors, s, ctx.precision()), 4, cutoff, s);
}

BoundedReal l_relative_quartic(const Context& ctx, const SplittingPolynomial& poly, long base_D, int r,
                               std::uint32_t prime_cutoff)
{
    if (r <= 1) {
        throw DomainError("l_relative_quartic needs r >= 2");
    }
    return quartic_zeta_euler(ctx, poly, r, prime_cutoff) / dedekind_zeta_quadratic(ctx, base_D, r);
}

BoundedReal l_relative_quartic(const Context& ctx, int r)
{
    if (r <= 1) {
        throw DomainError("l_relative_quartic needs r >= 2");
    }
    return l_relative_quartic(ctx, SplittingPolynomial::ell0(), 5, r, default_prime_cutoff(r));
}

} // namespace crg
