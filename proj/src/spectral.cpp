#include "crg/spectral.hpp"

#include "crg/bounds.hpp"
#include "crg/errors.hpp"
#include "crg/numerics.hpp"

#include <json.hpp>

#include <exception>
#include <iomanip>
#include <sstream>

namespace crg {

std::string to_string(DeltaMode mode) { return mode == DeltaMode::proven ? "proven" : "conjectural"; }

DeltaMode parse_delta_mode(const std::string& text)
{
    if (text == "proven") {
        return DeltaMode::proven;
    }
    if (text == "conjectural") {
        return DeltaMode::conjectural;
    }
    throw DomainError("unknown delta mode '" + text + "' (expected proven|conjectural)");
}

SpectralGap spectral_gap(int n, DeltaMode mode)
{
    if (n < 2) {
        throw DomainError("spectral gap needs n >= 2");
    }
    SpectralGap gap;
    gap.n = n;
    gap.mode = mode;
    if (mode == DeltaMode::proven) {
        gap.delta = n == 2 ? make_rational(3, 16) : make_rational(2 * n - 3, 4);
    } else {
        gap.delta = n == 2 ? make_rational(1, 4) : Rational(n - 1);
    }
    return gap;
}

Rational m_squared(int n, DeltaMode mode)
{
    const Rational base = Rational(n) / spectral_gap(n, mode).delta;
    const unsigned long e = static_cast<unsigned long>(n);
    return make_rational(ipow(base.get_num(), e), ipow(base.get_den(), e));
}

BoundedReal m_bound(const Context& ctx, int n, DeltaMode mode)
{
    return pow(ctx.exact(Rational(n) / spectral_gap(n, mode).delta), make_rational(n, 2));
}

int m_display_decimals(int n, DeltaMode mode) { return m_squared(n, mode) < 1000000 ? 2 : 1; }

namespace {

// floor and ceiling of sqrt(q) for q >= 0.
Integer isqrt_floor(const Rational& q)
{
    Integer t = q.get_num() / q.get_den();
    Integer s;
    mpz_sqrt(s.get_mpz_t(), t.get_mpz_t());
    return s;
}

Integer isqrt_ceil(const Rational& q)
{
    const Integer s = isqrt_floor(q);
    return Rational(s * s) == q ? s : Integer(s + 1);
}

Rational scaled_m_squared(int n, DeltaMode mode, int decimals)
{
    return m_squared(n, mode) * Rational(ipow(10, 2UL * static_cast<unsigned long>(decimals)));
}

} // namespace

Rational m_display_upper(int n, DeltaMode mode)
{
    const int k = m_display_decimals(n, mode);
    return make_rational(isqrt_ceil(scaled_m_squared(n, mode, k)), ipow(10, static_cast<unsigned long>(k)));
}

Rational m_display_lower(int n, DeltaMode mode)
{
    const int k = m_display_decimals(n, mode);
    return make_rational(isqrt_floor(scaled_m_squared(n, mode, k)), ipow(10, static_cast<unsigned long>(k)));
}

std::string format_fixed(const Rational& q, int decimals)
{
    const Integer scale = ipow(10, static_cast<unsigned long>(decimals));
    const Rational scaled = q * Rational(scale);
    Integer rounded = scaled.get_num() / scaled.get_den();
    if (Rational(rounded) != scaled) {
        throw DomainError("format_fixed: value is not exact at " + std::to_string(decimals) + " decimals");
    }
    const bool negative = rounded < 0;
    if (negative) {
        rounded = -rounded;
    }
    std::string digits = rounded.get_str();
    if (decimals > 0) {
        if (digits.size() <= static_cast<std::size_t>(decimals)) {
            digits.insert(0, static_cast<std::size_t>(decimals) + 1 - digits.size(), '0');
        }
        digits.insert(digits.size() - static_cast<std::size_t>(decimals), ".");
    }
    return (negative ? "-" : "") + digits;
}

BoundedReal conformal_volume_upper(const Context& ctx, int n, const BoundedReal& lambda1)
{
    if (!definitely_greater(lambda1, Rational(0))) {
        throw DomainError("spectral gap λ_1 must be positive");
    }
    return pow(ctx.exact(n) / lambda1, ctx.exact(make_rational(n, 2))) * sphere_volume(ctx, n);
}

RRatios r_ratios(const Context& ctx, int n, DeltaMode mode)
{
    const BoundedReal scale = m_bound(ctx, n, mode) * sphere_volume(ctx, n);
    RRatios out{scale / omega(ctx, n, true).value, scale / omega(ctx, n, false).value, std::nullopt, std::nullopt};
    if (n == 2) {
        // M(2)·4π/(π/42) and M(2)·4π/(π/6), with M(2) = 2/δ(2).
        const Rational m = Rational(2) / spectral_gap(2, mode).delta;
        out.exact_rc = m * 4 * 42;
        out.exact_rnc = m * 4 * 6;
    }
    return out;
}

std::string format_table_value(const BoundedReal& x)
{
    const BigFloat mid = x.mid();
    const double approx = mid.to_double();
    char buf[128];
    if (approx >= 0.01 && approx < 1e10) {
        mpfr_snprintf(buf, sizeof buf, "%.2RNf", mid.get());
    } else {
        mpfr_snprintf(buf, sizeof buf, "%.2RNe", mid.get());
    }
    return buf;
}

DimensionReport table1(const Context& ctx, int n_max, DeltaMode mode)
{
    if (n_max < 2 || n_max > 64) {
        throw DomainError("table1 supports 2 <= n_max <= 64");
    }
    DimensionReport report;
    report.mode = mode;
    report.precision = ctx.precision();
    report.rows.resize(static_cast<std::size_t>(n_max - 1));
    std::exception_ptr failure;
    const Rational one(1);
#pragma omp parallel for schedule(dynamic, 1)
    for (int n = n_max; n >= 2; --n) {
        try {
            DimensionRow row;
            row.n = n;
            row.m = m_bound(ctx, n, mode);
            row.m_display = m_display_upper(n, mode);
            const RRatios r = r_ratios(ctx, n, mode);
            row.rc = r.rc;
            row.rnc = r.rnc;
            const Ordering oc = compare_to(row.rc, one);
            const Ordering onc = compare_to(row.rnc, one);
            row.decided_c = oc != Ordering::undecided;
            row.decided_nc = onc != Ordering::undecided;
            row.feasible_c = oc != Ordering::below;
            row.feasible_nc = onc != Ordering::below;
            report.rows[static_cast<std::size_t>(n - 2)] = std::move(row);
        } catch (...) {
#pragma omp critical(crg_table1_failure)
            if (!failure) {
                failure = std::current_exception();
            }
        }
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
    return report;
}

std::string DimensionReport::to_text() const
{
    std::ostringstream os;
    os << "# delta mode: " << crg::to_string(mode) << ", precision: " << precision << " bits\n";
    os << std::left << std::setw(4) << "n" << std::setw(12) << "M(n)" << std::setw(16) << "R_c(n)" << std::setw(16)
       << "R_nc(n)" << "feasible(c,nc)\n";
    for (const DimensionRow& row : rows) {
        os << std::setw(4) << row.n << std::setw(12)
           << format_fixed(row.m_display, m_display_decimals(row.n, mode)) << std::setw(16)
           << format_table_value(row.rc) << std::setw(16) << format_table_value(row.rnc)
           << (row.feasible_c ? "yes" : "no") << "," << (row.feasible_nc ? "yes" : "no") << "\n";
    }
    return os.str();
}

std::string DimensionReport::to_csv() const
{
    std::ostringstream os;
    os << "n,M,Rc,Rnc,feasible_c,feasible_nc\n";
    for (const DimensionRow& row : rows) {
        os << row.n << "," << row.m.mid_string(20) << "," << row.rc.mid_string(20) << "," << row.rnc.mid_string(20)
           << "," << (row.feasible_c ? "true" : "false") << "," << (row.feasible_nc ? "true" : "false") << "\n";
    }
    return os.str();
}

namespace {

nlohmann::ordered_json interval_json(const BoundedReal& x)
{
    return {{"mid", x.mid_string(30)}, {"rad", x.rad_string(6)}};
}

} // namespace

std::string DimensionReport::to_json() const
{
    nlohmann::ordered_json doc;
    doc["delta_mode"] = crg::to_string(mode);
    doc["precision"] = precision;
    doc["rows"] = nlohmann::ordered_json::array();
    for (const DimensionRow& row : rows) {
        doc["rows"].push_back({{"n", row.n},
                               {"M", interval_json(row.m)},
                               {"M_display", format_fixed(row.m_display, m_display_decimals(row.n, mode))},
                               {"Rc", interval_json(row.rc)},
                               {"Rnc", interval_json(row.rnc)},
                               {"feasible_c", row.feasible_c},
                               {"feasible_nc", row.feasible_nc},
                               {"decided_c", row.decided_c},
                               {"decided_nc", row.decided_nc}});
    }
    return doc.dump(2) + "\n";
}

DimensionCutoffs dimension_cutoffs(const Context& ctx, int ceiling, DeltaMode mode)
{
    if (ceiling < 13 || ceiling > 64) {
        throw DomainError("dimension_cutoffs supports ceilings 13..64");
    }
    Context current = ctx;
    DimensionCutoffs out;
    out.ceiling = ceiling;
    for (int attempt = 0;; ++attempt) {
        const DimensionReport report = table1(current, ceiling, mode);
        out.undecided.clear();
        out.max_cocompact = 0;
        out.max_noncocompact = 0;
        for (const DimensionRow& row : report.rows) {
            if (row.n < 4) {
                continue;
            }
            if (!row.decided_c) {
                out.undecided.push_back("R_c(" + std::to_string(row.n) + ")");
            }
            if (!row.decided_nc) {
                out.undecided.push_back("R_nc(" + std::to_string(row.n) + ")");
            }
            if (row.feasible_c) {
                out.max_cocompact = row.n;
            }
            if (row.feasible_nc) {
                out.max_noncocompact = row.n;
            }
        }
        out.precision_used = current.precision();
        out.decided = out.undecided.empty();
        if (out.decided || attempt >= 4) {
            return out;
        }
        current = current.with_precision(current.precision() * 2);
    }
}

} // namespace crg
