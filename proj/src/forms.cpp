#include "crg/forms.hpp"

#include "crg/errors.hpp"

#include <json.hpp>

#include <algorithm>
#include <set>

namespace crg {

namespace {

int legendre(const Integer& a, long p)
{
    const Integer pa = p;
    return mpz_legendre(a.get_mpz_t(), pa.get_mpz_t());
}

// a = p^v · u with p ∤ u.
long split_off(Integer& a, long p)
{
    long v = 0;
    while (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p))) {
        a /= p;
        ++v;
    }
    return v;
}

int eps2(const Integer& u)  // (u − 1)/2 mod 2
{
    return mpz_fdiv_ui(u.get_mpz_t(), 4) == 3 ? 1 : 0;
}

int omega2(const Integer& u)  // (u² − 1)/8 mod 2
{
    const unsigned long r = mpz_fdiv_ui(u.get_mpz_t(), 8);
    return (r == 3 || r == 5) ? 1 : 0;
}

std::vector<long> prime_divisors(Integer a)
{
    a = abs(a);
    std::vector<long> out;
    for (long p = 2; Integer(p) * p <= a; ++p) {
        if (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p))) {
            out.push_back(p);
            while (mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p))) {
                a /= p;
            }
        }
    }
    if (a > 1) {
        out.push_back(static_cast<long>(a.get_si()));
    }
    return out;
}

} // namespace

int hilbert_symbol(const Integer& a0, const Integer& b0, Place v)
{
    if (a0 == 0 || b0 == 0) {
        throw DomainError("Hilbert symbol needs nonzero arguments");
    }
    if (v.is_infinite()) {
        return (a0 < 0 && b0 < 0) ? -1 : 1;
    }
    const long p = v.p;
    Integer u = a0;
    Integer w = b0;
    const long alpha = split_off(u, p);
    const long beta = split_off(w, p);
    if (p == 2) {
        const int e = (eps2(u) * eps2(w) + static_cast<int>(alpha % 2) * omega2(w) +
                       static_cast<int>(beta % 2) * omega2(u)) %
                      2;
        return e == 0 ? 1 : -1;
    }
    // (−1)^{αβ ε(p)} (u/p)^β (w/p)^α with ε(p) = (p − 1)/2.
    int result = 1;
    if ((alpha % 2) * (beta % 2) == 1 && ((p - 1) / 2) % 2 == 1) {
        result = -result;
    }
    if (beta % 2 == 1) {
        result *= legendre(u, p);
    }
    if (alpha % 2 == 1) {
        result *= legendre(w, p);
    }
    return result;
}

Integer squarefree_part(const Integer& a)
{
    if (a == 0) {
        throw DomainError("square class of 0 is undefined");
    }
    Integer rest = abs(a);
    Integer out = 1;
    for (long p : prime_divisors(rest)) {
        Integer t = rest;
        if (split_off(t, p) % 2 == 1) {
            out *= p;
        }
    }
    return a < 0 ? Integer(-out) : out;
}

int hasse_symbol(const std::vector<Integer>& diag, Place v)
{
    int s = 1;
    for (std::size_t i = 0; i < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            s *= hilbert_symbol(diag[i], diag[j], v);
        }
    }
    return s;
}

namespace {

Integer determinant(const std::vector<Integer>& diag)
{
    Integer det = 1;
    for (const Integer& a : diag) {
        det *= a;
    }
    return det;
}

// Quasi-split form with the same dimension and determinant.
std::vector<Integer> quasi_split(std::size_t m, const Integer& det)
{
    std::vector<Integer> g;
    const std::size_t k = m / 2;
    const int sign_k = (k % 2 == 0) ? 1 : -1;
    if (m % 2 == 1) {
        for (std::size_t i = 0; i < k; ++i) {
            g.push_back(1);
            g.push_back(-1);
        }
        g.push_back(squarefree_part(sign_k * det));
    } else {
        for (std::size_t i = 0; i + 1 < k; ++i) {
            g.push_back(1);
            g.push_back(-1);
        }
        g.push_back(1);
        g.push_back(-squarefree_part(sign_k * det));
    }
    return g;
}

Integer signed_disc(std::size_t m, const Integer& det)
{
    const std::size_t pairs = m * (m - 1) / 2;
    return squarefree_part(pairs % 2 == 0 ? det : Integer(-det));
}

bool unramified_at(const Integer& d, long p)
{
    if (p == 2) {
        return mpz_fdiv_ui(d.get_mpz_t(), 4) == 1;
    }
    return !mpz_divisible_ui_p(d.get_mpz_t(), static_cast<unsigned long>(p));
}

} // namespace

int normalized_hasse(const std::vector<Integer>& diag, Place v)
{
    if (diag.size() < 2) {
        throw DomainError("normalized Hasse symbol needs dimension >= 2");
    }
    const Integer det = determinant(diag);
    return hasse_symbol(diag, v) * hasse_symbol(quasi_split(diag.size(), det), v);
}

Rational lambda_lower_exact(long q, int r, DimensionParity parity)
{
    const int r_min = parity == DimensionParity::even ? 1 : 2;
    if (q < 2 || r < r_min) {
        throw DomainError("lambda_lower needs q >= 2 and r >= " + std::to_string(r_min));
    }
    const Integer qr = ipow(Integer(q), static_cast<unsigned long>(r));
    if (parity == DimensionParity::even) {
        return make_rational(qr - 1, 2);
    }
    const Integer qr1 = ipow(Integer(q), static_cast<unsigned long>(r - 1));
    return make_rational((qr - 1) * (qr1 - 1), Integer(2 * (q + 1)));
}

BoundedReal lambda_lower(const Context& ctx, long q, int r, DimensionParity parity)
{
    return ctx.exact(lambda_lower_exact(q, r, parity));
}

namespace {

int rank_parameter(int n) { return n % 2 == 0 ? n / 2 : (n + 1) / 2; }
DimensionParity parity_of(int n) { return n % 2 == 0 ? DimensionParity::even : DimensionParity::odd; }

} // namespace

std::vector<long> derive_T(int n, const Integer& disc_class, const std::vector<Place>& hasse_minus)
{
    std::set<long> T;
    std::set<long> minus;
    for (const Place& v : hasse_minus) {
        if (!v.is_infinite()) {
            minus.insert(v.p);
        }
    }
    if (n % 2 == 0) {
        for (long p : prime_divisors(disc_class)) {
            T.insert(p);
        }
        for (long p : minus) {
            T.insert(p);
        }
    } else {
        for (long p : minus) {
            if (unramified_at(disc_class, p)) {
                T.insert(p);
            }
        }
    }
    return {T.begin(), T.end()};
}

CheckResult local_global_check(const LocalInvariantProfile& prof)
{
    if (prof.base_field != "Q") {
        return {false, "local-global check is implemented over Q only"};
    }
    if (prof.n < 2) {
        return {false, "dimension n must be >= 2"};
    }
    if (prof.disc_class == 0 || squarefree_part(prof.disc_class) != prof.disc_class) {
        return {false, "discriminant class must be a squarefree nonzero integer"};
    }
    const std::size_t m = static_cast<std::size_t>(prof.n) + 1;
    // Signature (n, 1) forces det < 0.
    const Integer det_class = signed_disc(m, prof.disc_class);
    if (det_class > 0) {
        return {false, "discriminant sign is incompatible with signature (n, 1)"};
    }
    std::vector<Integer> model(m, Integer(1));
    model[0] = -1;
    const Integer sign_fix = det_class;  // det up to squares
    model[0] = sign_fix;
    const bool infinity_minus = normalized_hasse(model, Place::infinity()) == -1;
    const bool listed_infinity =
        std::any_of(prof.hasse_minus_places.begin(), prof.hasse_minus_places.end(),
                    [](const Place& v) { return v.is_infinite(); });
    if (infinity_minus != listed_infinity) {
        return {false, "archimedean Hasse symbol does not match signature (n, 1)"};
    }
    std::set<Place> distinct(prof.hasse_minus_places.begin(), prof.hasse_minus_places.end());
    if (distinct.size() != prof.hasse_minus_places.size()) {
        return {false, "Hasse set lists a place twice"};
    }
    for (const Place& v : distinct) {
        if (!v.is_infinite() && (v.p < 2 || prime_divisors(v.p) != std::vector<long>{v.p})) {
            return {false, "Hasse set contains a non-prime place " + v.to_string()};
        }
    }
    if (distinct.size() % 2 != 0) {
        return {false, "odd number of places with Hasse symbol -1 (Hilbert reciprocity)"};
    }
    if (derive_T(prof.n, prof.disc_class, prof.hasse_minus_places) != prof.T) {
        return {false, "T does not match the discriminant and Hasse data"};
    }
    return {true, ""};
}

LocalInvariantProfile diagonal_form_profile(const Context& ctx, const std::vector<Integer>& diag,
                                            const std::string& label)
{
    if (diag.size() < 3) {
        throw DomainError("forms need n >= 2");
    }
    const long negatives = std::count_if(diag.begin(), diag.end(), [](const Integer& a) { return a < 0; });
    if (negatives != 1 || std::any_of(diag.begin(), diag.end(), [](const Integer& a) { return a == 0; })) {
        throw DomainError("diagonal form must have signature (n, 1)");
    }
    LocalInvariantProfile prof;
    prof.label = label;
    prof.n = static_cast<int>(diag.size()) - 1;
    prof.r = rank_parameter(prof.n);
    const Integer det = determinant(diag);
    prof.disc_class = signed_disc(diag.size(), det);

    std::set<long> candidates{2};
    for (const Integer& a : diag) {
        for (long p : prime_divisors(a)) {
            candidates.insert(p);
        }
    }
    if (normalized_hasse(diag, Place::infinity()) == -1) {
        prof.hasse_minus_places.push_back(Place::infinity());
    }
    for (long p : candidates) {
        if (normalized_hasse(diag, Place::prime(p)) == -1) {
            prof.hasse_minus_places.push_back(Place::prime(p));
        }
    }
    prof.T = derive_T(prof.n, prof.disc_class, prof.hasse_minus_places);
    Rational product = 1;
    for (long p : prof.T) {
        product *= lambda_lower_exact(p, prof.r, parity_of(prof.n));
    }
    prof.lambda_product_bound = ctx.exact(product);
    return prof;
}

LocalInvariantProfile named_form_invariants(const Context& ctx, const std::string& label, int n)
{
    long a = 0;
    if (label == "f1") {
        a = 1;
    } else if (label == "f2") {
        a = 2;
    } else if (label == "f3") {
        a = 3;
    } else {
        throw DomainError("unknown named form '" + label + "' (expected f1, f2 or f3)");
    }
    if (n < 2) {
        throw DomainError("named forms need n >= 2");
    }
    std::vector<Integer> diag(static_cast<std::size_t>(n) + 1, Integer(1));
    diag[0] = -a;
    return diagonal_form_profile(ctx, diag, label);
}

namespace {

struct Search {
    const std::vector<long>& primes;
    const std::vector<Rational>& lambdas;
    const BoundedReal& budget;
    std::vector<std::vector<long>> out;
    std::vector<long> current;

    void run(std::size_t start, const Rational& product)
    {
        out.push_back(current);
        for (std::size_t i = start; i < primes.size(); ++i) {
            const Rational next = product * lambdas[i];
            const Ordering o = compare_to(budget, next);
            if (o == Ordering::undecided) {
                std::string set = "{";
                for (long p : current) {
                    set += std::to_string(p) + ",";
                }
                throw UndecidedError("budget comparison undecided for prime set " + set + std::to_string(primes[i]) +
                                     "}");
            }
            if (o == Ordering::below) {
                break;  // λ grows with p, so every later prime fails too.
            }
            current.push_back(primes[i]);
            run(i + 1, next);
            current.pop_back();
        }
    }
};

} // namespace

std::vector<std::vector<long>> enumerate_T_sets(int n, const BoundedReal& budget, long max_prime)
{
    if (n < 4) {
        throw DomainError("T-set enumeration needs n >= 4");
    }
    if (!definitely_at_least(budget, Rational(1))) {
        throw DomainError("budget must be at least 1");
    }
    const int r = rank_parameter(n);
    const DimensionParity parity = parity_of(n);
    // Primes up to the first one whose λ alone exceeds the budget.
    std::vector<long> primes;
    std::vector<Rational> lambdas;
    for (long p = 2;; ++p) {
        if (max_prime > 0 && p > max_prime) {
            break;
        }
        if (prime_divisors(p) != std::vector<long>{p}) {
            continue;
        }
        const Rational lam = lambda_lower_exact(p, r, parity);
        primes.push_back(p);
        lambdas.push_back(lam);
        if (definitely_less(budget, lam)) {
            break;
        }
    }
    Search search{primes, lambdas, budget, {}, {}};
    search.run(0, Rational(1));
    return std::move(search.out);
}

std::vector<std::vector<long>> enumerate_T_sets(const Context& ctx, int n,
                                                const std::function<BoundedReal(const Context&)>& budget,
                                                long max_prime)
{
    return with_precision_escalation(ctx, [&](const Context& c) { return enumerate_T_sets(n, budget(c), max_prime); });
}

std::string profile_json(const LocalInvariantProfile& prof, const CheckResult& check)
{
    nlohmann::ordered_json j;
    j["label"] = prof.label;
    j["base_field"] = prof.base_field;
    j["n"] = prof.n;
    j["r"] = prof.r;
    j["disc_class"] = prof.disc_class.get_str();
    j["hasse_minus_places"] = nlohmann::ordered_json::array();
    for (const Place& v : prof.hasse_minus_places) {
        j["hasse_minus_places"].push_back(v.to_string());
    }
    j["T"] = prof.T;
    j["lambda_product_bound"] = {{"mid", prof.lambda_product_bound.mid_string(30)},
                                 {"rad", prof.lambda_product_bound.rad_string(6)}};
    j["local_global"] = {{"accepted", check.accepted}, {"reason", check.reason}};
    return j.dump(2) + "\n";
}

} // namespace crg
