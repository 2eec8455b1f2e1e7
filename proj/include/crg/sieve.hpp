#pragma once

#include "crg/bounded_real.hpp"
#include "crg/context.hpp"
#include "crg/fielddata.hpp"

#include <string>
#include <vector>

namespace crg {

/// The inequality used to cap D_k for a given dimension.
enum class SieveRoute {
    even,           ///< n = 2r: D_k^{r²+r/2−1} <= 16 M B_1(r)^{−d}
    odd_r_odd,      ///< n = 2r−1, r odd: D_k^{r²−r/2−2} <= 16 M (72 B_2(r)/π²)^{−d}
    odd_r_even,     ///< n = 2r−1, r even: D_k^{r²−r/2−2} <= 4 M (36 B_2(r)/π²)^{−d}
};

/// Exponent bookkeeping for one dimension, kept in one place.
struct SieveExponents {
    int n = 0;
    int r = 0;
    SieveRoute route = SieveRoute::even;
    Rational cap_exponent;    ///< exponent of D_k in the step-1 inequality
    Rational nu_exponent;     ///< D_k exponent in ν (even n), or in the D_ℓ inequality (odd n)
    Rational ell_exponent;    ///< D_ℓ exponent in the D_ℓ ceiling inequality (odd n)
    long constant = 16;       ///< 16 or 4
};

SieveExponents sieve_exponents(int n);
SieveRoute default_route(int n);

/// Per-degree penalty base: B_1(r), 72 B_2(r)/π² or 36 B_2(r)/π².
BoundedReal sieve_penalty(const Context& ctx, int r, SieveRoute route);

/// Step-1 cap on D_k for degree d, with M supplied by the caller.
BoundedReal degree_cap(const Context& ctx, int n, int d, const Rational& m, SieveRoute route);
BoundedReal degree_cap(const Context& ctx, int n, int d, const Rational& m);

/// Ceiling on D_ℓ for a quadratic extension ℓ of a degree-d field with discriminant D_k (odd n).
BoundedReal ell_ceiling(const Context& ctx, int n, int d, const Integer& D_k, const Rational& m);

/// ⌊x⌋ when both endpoints agree on it; throws UndecidedError otherwise.
Integer certified_floor(const BoundedReal& x);

struct SieveStep {
    std::string name;
    std::string inequality;
    std::string detail;
};

struct DegreeCap {
    int d = 0;
    BoundedReal cap;
    Integer cap_floor = 0;
    Integer odlyzko = 0;       ///< lower bound for |D| of totally real degree-d fields
    bool admissible = false;   ///< odlyzko <= cap
    bool listed = false;       ///< fields enumerated from a complete table
    std::string note;
};

struct SieveEntry {
    int d = 0;
    Integer D = 0;
    Integer h = 1;
    bool unrefined = false;
};

struct SieveExclusion {
    int d = 0;
    Integer D = 0;
    std::string stage;
    std::string inequality;
    std::string lhs;
    std::string rhs;
};

struct EllCeiling {
    int d = 0;
    Integer D_k = 0;
    BoundedReal ceiling;
    Integer ceiling_floor = 0;
    bool excluded = false;
    std::string reason;
};

struct SieveReport {
    int n = 0;
    int r = 0;
    bool empty_by_cutoff = false;
    std::string empty_reason;
    Rational m_used;
    std::string m_note;
    unsigned precision_used = 0;
    std::vector<SieveStep> steps;
    std::vector<DegreeCap> caps;
    int max_degree = 0;
    Integer global_cap = 0;
    std::vector<SieveEntry> admissible;
    std::vector<SieveEntry> refined;
    std::vector<SieveExclusion> excluded;
    std::vector<EllCeiling> ell_ceilings;
    bool refinement_performed = false;
    std::vector<std::string> notes;

    const DegreeCap* cap_for(int d) const;
    std::vector<Integer> refined_discriminants(int d) const;
    std::vector<int> admissible_degrees() const;

    std::string to_json() const;
    std::string to_text() const;
};

SieveReport even_sieve(const Context& ctx, int n, const FieldTable& table = FieldTable::embedded());
SieveReport odd_sieve(const Context& ctx, int n, const FieldTable& table = FieldTable::embedded());
/// Dispatches on parity; dimensions with R_c(n) < 1 give an empty report.
SieveReport sieve_dimension(const Context& ctx, int n, const FieldTable& table = FieldTable::embedded());
std::vector<SieveReport> sieve_all(const Context& ctx, int n_min, int n_max,
                                   const FieldTable& table = FieldTable::embedded());

std::string sieve_reports_json(const std::vector<SieveReport>& reports);

} // namespace crg
