#pragma once

#include "crg/bounded_real.hpp"
#include "crg/context.hpp"

#include <optional>
#include <string>
#include <vector>

namespace crg {

enum class DeltaMode { proven, conjectural };

std::string to_string(DeltaMode mode);
DeltaMode parse_delta_mode(const std::string& text);

/// Lower bound δ(n) for the first non-zero Laplace eigenvalue of a congruence quotient.
struct SpectralGap {
    int n = 0;
    Rational delta;
    DeltaMode mode = DeltaMode::proven;
};

SpectralGap spectral_gap(int n, DeltaMode mode = DeltaMode::proven);

/// M(n)² = (n/δ(n))^n, exact.
Rational m_squared(int n, DeltaMode mode = DeltaMode::proven);
/// M(n) = (n/δ(n))^{n/2}.
BoundedReal m_bound(const Context& ctx, int n, DeltaMode mode = DeltaMode::proven);

/// Decimal places used when M(n) is printed: 2 below 1000, 1 from there on.
int m_display_decimals(int n, DeltaMode mode = DeltaMode::proven);
/// M(n) rounded up (resp. down) to its display precision, computed exactly.
Rational m_display_upper(int n, DeltaMode mode = DeltaMode::proven);
Rational m_display_lower(int n, DeltaMode mode = DeltaMode::proven);
/// Fixed-point rendering of a rational with the given number of decimals (exact input).
std::string format_fixed(const Rational& q, int decimals);

/// (n/λ_1)^{n/2} · Vol(S^n), the volume ceiling for a reflection quotient.
BoundedReal conformal_volume_upper(const Context& ctx, int n, const BoundedReal& lambda1);

struct RRatios {
    BoundedReal rc;
    BoundedReal rnc;
    /// Exact rational values where π cancels (n = 2 only).
    std::optional<Rational> exact_rc;
    std::optional<Rational> exact_rnc;
};

/// R_•(n) = M(n) · Vol(S^n) / ω_•(n).
RRatios r_ratios(const Context& ctx, int n, DeltaMode mode = DeltaMode::proven);

struct DimensionRow {
    int n = 0;
    BoundedReal m;
    Rational m_display;
    BoundedReal rc;
    BoundedReal rnc;
    bool feasible_c = true;   ///< R_c >= 1 not definitely violated
    bool feasible_nc = true;
    bool decided_c = true;    ///< comparison with 1 was definite
    bool decided_nc = true;
};

struct DimensionReport {
    DeltaMode mode = DeltaMode::proven;
    unsigned precision = 0;
    std::vector<DimensionRow> rows;

    std::string to_text() const;
    std::string to_csv() const;
    std::string to_json() const;
};

DimensionReport table1(const Context& ctx, int n_max = 29, DeltaMode mode = DeltaMode::proven);

struct DimensionCutoffs {
    bool decided = true;
    int max_cocompact = 0;
    int max_noncocompact = 0;
    int ceiling = 64;
    unsigned precision_used = 0;
    /// Dimensions whose comparison with 1 stayed undecided after escalation.
    std::vector<std::string> undecided;
};

/// Largest n in [4, ceiling] with R_c(n) >= 1 (resp. R_nc), requiring every
/// comparison up to the ceiling to be definite; escalates precision otherwise.
DimensionCutoffs dimension_cutoffs(const Context& ctx, int ceiling = 64, DeltaMode mode = DeltaMode::proven);

/// Table-style rendering: two decimals in [0.01, 1e10), otherwise a
/// three-significant-digit mantissa with exponent.
std::string format_table_value(const BoundedReal& x);

} // namespace crg
