#pragma once

#include "crg/bounded_real.hpp"
#include "crg/context.hpp"

#include <functional>
#include <string>
#include <vector>

namespace crg {

/// A place of Q: a prime p, or the real place (stored as p = 0).
struct Place {
    long p = 0;

    static Place infinity() { return Place{0}; }
    static Place prime(long q) { return Place{q}; }
    bool is_infinite() const { return p == 0; }
    std::string to_string() const { return p == 0 ? "inf" : std::to_string(p); }
    auto operator<=>(const Place&) const = default;
};

/// Hilbert symbol (a, b)_v for nonzero integers a, b.
int hilbert_symbol(const Integer& a, const Integer& b, Place v);

/// Squarefree representative of the square class of a nonzero integer.
Integer squarefree_part(const Integer& a);

/// Hasse symbol Π_{i<j} (a_i, a_j)_v of a diagonal form.
int hasse_symbol(const std::vector<Integer>& diagonal, Place v);

/// Hasse symbol relative to the quasi-split form of the same dimension and
/// determinant, so the split form has value +1 at every place.
int normalized_hasse(const std::vector<Integer>& diagonal, Place v);

enum class DimensionParity { even, odd };

/// λ_v lower bounds: (q^r − 1)/2 for even n, (q^r − 1)(q^{r−1} − 1)/(2(q + 1)) for odd n.
Rational lambda_lower_exact(long q, int r, DimensionParity parity);
BoundedReal lambda_lower(const Context& ctx, long q, int r, DimensionParity parity);

struct LocalInvariantProfile {
    std::string base_field = "Q";
    std::string label;
    int n = 0;
    int r = 0;
    /// Square class of the signed discriminant (−1)^{m(m−1)/2} det, m = n + 1.
    Integer disc_class = 1;
    /// Places where the normalized Hasse symbol is −1 (may include ∞).
    std::vector<Place> hasse_minus_places;
    /// Finite places contributing λ factors.
    std::vector<long> T;
    BoundedReal lambda_product_bound = BoundedReal(1, 64);
};

/// Derives T from disc_class and the Hasse set (even n: p | disc or ε_p = −1;
/// odd n: ε_p = −1 and Q(√disc) unramified at p).
std::vector<long> derive_T(int n, const Integer& disc_class, const std::vector<Place>& hasse_minus);

struct CheckResult {
    bool accepted = true;
    std::string reason;
};

/// Local-global consistency of a profile over Q for signature (n, 1).
CheckResult local_global_check(const LocalInvariantProfile& profile);

/// Profile of diag(−a, 1, ..., 1) in n + 1 variables for f1 (a = 1), f2 (a = 2), f3 (a = 3).
LocalInvariantProfile named_form_invariants(const Context& ctx, const std::string& label, int n);

/// Profile of an arbitrary diagonal form over Q with signature (n, 1).
LocalInvariantProfile diagonal_form_profile(const Context& ctx, const std::vector<Integer>& diagonal,
                                            const std::string& label = "");

/// All prime sets S with Π_{p∈S} λ_lower(p, r, parity) <= budget, in
/// lexicographic order of ascending primes. max_prime = 0 means unbounded.
/// An undecided comparison throws UndecidedError naming the prime set.
std::vector<std::vector<long>> enumerate_T_sets(int n, const BoundedReal& budget, long max_prime = 0);

/// Same, with a budget that can be recomputed at higher precision when a
/// comparison is undecided (up to four doublings).
std::vector<std::vector<long>> enumerate_T_sets(const Context& ctx, int n,
                                                const std::function<BoundedReal(const Context&)>& budget,
                                                long max_prime = 0);

std::string profile_json(const LocalInvariantProfile& profile, const CheckResult& check);

} // namespace crg
