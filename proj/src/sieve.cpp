#include "crg/sieve.hpp"

#include "crg/bounds.hpp"
#include "crg/errors.hpp"
#include "crg/numerics.hpp"
#include "crg/spectral.hpp"

#include <json.hpp>

#include <algorithm>
#include <sstream>

namespace crg {

SieveRoute default_route(int n)
{
    if (n % 2 == 0) {
        return SieveRoute::even;
    }
    return ((n + 1) / 2) % 2 == 1 ? SieveRoute::odd_r_odd : SieveRoute::odd_r_even;
}

SieveExponents sieve_exponents(int n)
{
    if (n < 4) {
        throw DomainError("the field sieve covers n >= 4");
    }
    SieveExponents e;
    e.n = n;
    e.route = default_route(n);
    if (n % 2 == 0) {
        const long r = n / 2;
        e.r = static_cast<int>(r);
        e.cap_exponent = make_rational(2 * r * r + r - 2, 2);
        e.nu_exponent = make_rational(2 * r * r + r, 2);
        e.ell_exponent = 0;
        e.constant = 16;
        return e;
    }
    const long r = (n + 1) / 2;
    e.r = static_cast<int>(r);
    e.cap_exponent = make_rational(2 * r * r - r - 4, 2);
    if (r % 2 == 1) {
        e.nu_exponent = make_rational(2 * r * r - 5 * r + 2, 2);
        e.ell_exponent = make_rational(2 * r - 3, 2);
        e.constant = 16;
    } else {
        e.nu_exponent = make_rational(2 * r * r - 5 * r + 6, 2);
        e.ell_exponent = make_rational(2 * r - 5, 2);
        e.constant = 4;
    }
    return e;
}

BoundedReal sieve_penalty(const Context& ctx, int r, SieveRoute route)
{
    switch (route) {
    case SieveRoute::even: return b1(ctx, r);
    case SieveRoute::odd_r_odd: return b2(ctx, r) * 72 / (ctx.pi() * ctx.pi());
    case SieveRoute::odd_r_even: return b2(ctx, r) * 36 / (ctx.pi() * ctx.pi());
    }
    throw DomainError("unknown sieve route");
}

namespace {

long route_constant(SieveRoute route) { return route == SieveRoute::odd_r_even ? 4 : 16; }

// K · M · penalty^{−d}
BoundedReal step_one_rhs(const Context& ctx, int r, int d, const Rational& m, SieveRoute route)
{
    return ctx.exact(Rational(route_constant(route)) * m) / pow(sieve_penalty(ctx, r, route), static_cast<long>(d));
}

} // namespace

BoundedReal degree_cap(const Context& ctx, int n, int d, const Rational& m, SieveRoute route)
{
    const SieveExponents e = sieve_exponents(n);
    const Rational exponent = route == SieveRoute::even ? e.cap_exponent : make_rational(2L * e.r * e.r - e.r - 4, 2);
    return pow(step_one_rhs(ctx, e.r, d, m, route), Rational(1) / exponent);
}

BoundedReal degree_cap(const Context& ctx, int n, int d, const Rational& m)
{
    return degree_cap(ctx, n, d, m, default_route(n));
}

BoundedReal ell_ceiling(const Context& ctx, int n, int d, const Integer& D_k, const Rational& m)
{
    const SieveExponents e = sieve_exponents(n);
    if (n % 2 == 0) {
        throw DomainError("D_l ceilings exist only for odd n");
    }
    const BoundedReal rhs = step_one_rhs(ctx, e.r, d, m, e.route) / pow(ctx.exact(D_k), e.nu_exponent);
    return pow(rhs, Rational(1) / e.ell_exponent);
}

Integer certified_floor(const BoundedReal& x)
{
    Integer lo;
    Integer hi;
    mpfr_get_z(lo.get_mpz_t(), x.lower().get(), MPFR_RNDD);
    mpfr_get_z(hi.get_mpz_t(), x.upper().get(), MPFR_RNDD);
    if (lo != hi) {
        throw UndecidedError("floor of [" + x.lower().to_string(20) + ", " + x.upper().to_string(20) +
                             "] is undecided");
    }
    return lo;
}

const DegreeCap* SieveReport::cap_for(int d) const
{
    for (const DegreeCap& c : caps) {
        if (c.d == d) {
            return &c;
        }
    }
    return nullptr;
}

std::vector<Integer> SieveReport::refined_discriminants(int d) const
{
    std::vector<Integer> out;
    for (const SieveEntry& e : refined) {
        if (e.d == d) {
            out.push_back(e.D);
        }
    }
    return out;
}

std::vector<int> SieveReport::admissible_degrees() const
{
    std::vector<int> out;
    for (const DegreeCap& c : caps) {
        if (c.admissible) {
            out.push_back(c.d);
        }
    }
    return out;
}

namespace {

std::string mid(const BoundedReal& x) { return x.mid_string(12); }

std::string describe_step_one(const SieveExponents& e)
{
    const std::string exponent = to_string(e.cap_exponent);
    switch (e.route) {
    case SieveRoute::even:
        return "D_k^(" + exponent + ") <= 16 M(n) B_1(" + std::to_string(e.r) + ")^(-d)";
    case SieveRoute::odd_r_odd:
        return "D_k^(" + exponent + ") <= 16 M(n) (72 B_2(" + std::to_string(e.r) + ")/pi^2)^(-d)";
    case SieveRoute::odd_r_even:
        return "D_k^(" + exponent + ") <= 4 M(n) (36 B_2(" + std::to_string(e.r) + ")/pi^2)^(-d)";
    }
    return "";
}

Integer degree_floor_bound(int d)
{
    if (d <= 10) {
        return odlyzko_min_disc(d);
    }
    // |D| >= 10.5^d past the stored table.
    const Rational v(ipow(21, static_cast<unsigned long>(d)), ipow(2, static_cast<unsigned long>(d)));
    return Integer((v.get_num() + v.get_den() - 1) / v.get_den());
}

void step_one(const Context& ctx, SieveReport& rep, const SieveExponents& e, const FieldTable& table)
{
    rep.steps.push_back({"step 1: Brauer-Siegel class-number bound", describe_step_one(e),
                         "h <= 16 (pi/12)^d D substituted; M(n) = " +
                             format_fixed(rep.m_used, m_display_decimals(rep.n)) + " (rounded up to display precision)"});
    const BoundedReal penalty = sieve_penalty(ctx, e.r, e.route);
    // cap(d+1)/cap(d) = penalty^(−1/exponent); past degree 10 the root
    // discriminant floor 10.5 outgrows it, so one failing degree ends the scan.
    const BoundedReal growth = pow(penalty, Rational(-1) / e.cap_exponent);
    const bool growth_below_floor = definitely_less(growth, make_rational(21, 2));

    for (int d = 2;; ++d) {
        if (d > 40) {
            throw UndecidedError("degree scan did not terminate by d = 40");
        }
        DegreeCap dc;
        dc.d = d;
        dc.cap = degree_cap(ctx, rep.n, d, rep.m_used);
        dc.cap_floor = certified_floor(dc.cap);
        dc.odlyzko = degree_floor_bound(d);
        dc.admissible = dc.odlyzko <= dc.cap_floor;
        if (!dc.admissible) {
            rep.excluded.push_back({d, 0, "step 1: discriminant lower bound",
                                    "min |D| of degree " + std::to_string(d) + " <= cap",
                                    dc.odlyzko.get_str(), mid(dc.cap)});
        }
        rep.caps.push_back(dc);
        if (d >= 10 && !dc.admissible && growth_below_floor) {
            break;
        }
    }

    for (DegreeCap& dc : rep.caps) {
        if (!dc.admissible) {
            continue;
        }
        rep.max_degree = std::max(rep.max_degree, dc.d);
        rep.global_cap = std::max(rep.global_cap, dc.cap_floor);
        const auto bound = table.complete_up_to(dc.d, false);
        if (bound && *bound >= dc.cap_floor) {
            dc.listed = true;
            for (const NumberFieldRecord& f : table.fields_in_range(dc.d, dc.cap_floor)) {
                rep.admissible.push_back({dc.d, f.discriminant, f.class_number, false});
            }
            dc.note = "fields listed from a table complete up to " + bound->get_str();
        } else {
            dc.note = "cap only: field table not certified complete up to " + dc.cap_floor.get_str();
            rep.notes.push_back("degree " + std::to_string(dc.d) + ": " + dc.note);
        }
    }
}

void even_refinement(const Context& ctx, SieveReport& rep, const SieveExponents& e)
{
    rep.refinement_performed = true;
    rep.steps.push_back({"step 2: exact class numbers",
                         "D_k^(" + to_string(e.nu_exponent) + ")/h_k * (1/2 prod (2i-1)!/(2pi)^(2i))^d <= M(n)",
                         "class numbers from the field table"});
    const BoundedReal vol = sphere_volume(ctx, rep.n);
    const BoundedReal rhs = ctx.exact(rep.m_used);
    for (const SieveEntry& entry : rep.admissible) {
        FieldBoundInput in;
        in.n = rep.n;
        in.d = entry.d;
        in.D_k = entry.D;
        in.h = ctx.exact(entry.h);
        const BoundedReal lhs = nu_lower_bound(ctx, in) / vol;
        if (definitely_greater(lhs, rhs)) {
            rep.excluded.push_back({entry.d, entry.D, "step 2: exact class number h = " + entry.h.get_str(),
                                    "nu(n,k,f)/Vol(S^n) <= M(n)", mid(lhs), format_fixed(rep.m_used, 2)});
        } else if (definitely_at_most(lhs, rhs)) {
            rep.refined.push_back(entry);
        } else {
            throw UndecidedError("step 2 comparison undecided for (d, D) = (" + std::to_string(entry.d) + ", " +
                                 entry.D.get_str() + ")");
        }
    }
}

void odd_refinement(const Context& ctx, SieveReport& rep, const SieveExponents& e, const FieldTable& table)
{
    rep.steps.push_back({"D_l ceilings", "D_l^(" + to_string(e.ell_exponent) + ") <= " +
                                            std::to_string(e.constant) + " M(n) (penalty)^(-d) D_k^(-" +
                                            to_string(e.nu_exponent) + ")",
                         "quadratic extension l/k, so D_l >= D_k^2"});
    for (const SieveEntry& entry : rep.admissible) {
        EllCeiling ec;
        ec.d = entry.d;
        ec.D_k = entry.D;
        ec.ceiling = ell_ceiling(ctx, rep.n, entry.d, entry.D, rep.m_used);
        ec.ceiling_floor = certified_floor(ec.ceiling);
        const Integer floor_l = entry.D * entry.D;
        const int deg_l = 2 * entry.d;
        if (ec.ceiling_floor < floor_l) {
            ec.excluded = true;
            ec.reason = "ceiling below D_k^2 = " + floor_l.get_str();
        } else if (const auto bound = table.complete_up_to(deg_l, true); bound && *bound >= ec.ceiling_floor) {
            const auto candidates = table.fields_any_signature(deg_l, ec.ceiling_floor);
            const bool none = std::none_of(candidates.begin(), candidates.end(),
                                           [&](const NumberFieldRecord& f) { return f.discriminant >= floor_l; });
            if (none) {
                ec.excluded = true;
                ec.reason = "no field of degree " + std::to_string(deg_l) + " with " + floor_l.get_str() +
                            " <= |D| <= " + ec.ceiling_floor.get_str() + " (table complete up to " +
                            bound->get_str() + ", all signatures)";
            }
        }
        if (ec.excluded) {
            rep.excluded.push_back({entry.d, entry.D, "D_l ceiling: l must be a quadratic extension of k",
                                    "D_l <= " + ec.ceiling_floor.get_str() + ", [l:Q] = " + std::to_string(deg_l),
                                    mid(ec.ceiling), ec.reason});
        } else {
            rep.refined.push_back(entry);
        }
        rep.ell_ceilings.push_back(std::move(ec));
    }
    rep.refinement_performed = true;
}

SieveReport build(const Context& ctx, int n, const FieldTable& table)
{
    const SieveExponents e = sieve_exponents(n);
    SieveReport rep;
    rep.n = n;
    rep.r = e.r;
    rep.precision_used = ctx.precision();
    rep.m_used = m_display_upper(n);
    rep.m_note = "M(n) rounded up to display precision; exact M(n)^2 = " + to_string(m_squared(n));
    step_one(ctx, rep, e, table);

    const bool small = n <= 5;
    if (n % 2 == 0) {
        if (!small) {
            even_refinement(ctx, rep, e);
        }
    } else {
        odd_refinement(ctx, rep, e, table);
    }
    if (small) {
        // Dimensions 4 and 5: only the step-1 caps are claimed.
        rep.refinement_performed = false;
        rep.refined.clear();
        for (SieveEntry& entry : rep.admissible) {
            entry.unrefined = true;
        }
        rep.notes.push_back("n = " + std::to_string(n) +
                            ": class-number refinement not attempted; admissible entries are flagged unrefined");
    }
    return rep;
}

} // namespace

SieveReport even_sieve(const Context& ctx, int n, const FieldTable& table)
{
    if (n % 2 != 0 || n < 4 || n > 12) {
        throw DomainError("even_sieve needs even n in [4, 12]");
    }
    return with_precision_escalation(ctx, [&](const Context& c) { return build(c, n, table); });
}

SieveReport odd_sieve(const Context& ctx, int n, const FieldTable& table)
{
    if (n % 2 != 1 || n < 5 || n > 27) {
        throw DomainError("odd_sieve needs odd n in [5, 27]");
    }
    return with_precision_escalation(ctx, [&](const Context& c) { return build(c, n, table); });
}

SieveReport sieve_dimension(const Context& ctx, int n, const FieldTable& table)
{
    if (n < 4 || n > 64) {
        throw DomainError("sieve covers 4 <= n <= 64");
    }
    const RRatios r = r_ratios(ctx, n);
    if (definitely_less(r.rc, Rational(1))) {
        SieveReport rep;
        rep.n = n;
        rep.r = n % 2 == 0 ? n / 2 : (n + 1) / 2;
        rep.precision_used = ctx.precision();
        rep.m_used = m_display_upper(n);
        rep.empty_by_cutoff = true;
        rep.empty_reason = "R_c(" + std::to_string(n) + ") < 1";
        rep.notes.push_back("R_c(" + std::to_string(n) + ") = " + r.rc.mid_string(6) +
                            ": no cocompact congruence reflection groups in this dimension");
        return rep;
    }
    return n % 2 == 0 ? even_sieve(ctx, n, table) : odd_sieve(ctx, n, table);
}

std::vector<SieveReport> sieve_all(const Context& ctx, int n_min, int n_max, const FieldTable& table)
{
    if (n_min > n_max) {
        throw DomainError("empty dimension range");
    }
    std::vector<SieveReport> out;
    for (int n = n_min; n <= n_max; ++n) {
        out.push_back(sieve_dimension(ctx, n, table));
    }
    return out;
}

namespace {

using json = nlohmann::ordered_json;

json interval(const BoundedReal& x) { return {{"mid", x.mid_string(30)}, {"rad", x.rad_string(6)}}; }

json entry_json(const SieveEntry& e)
{
    return {{"d", e.d}, {"D", e.D.get_str()}, {"h", e.h.get_str()}, {"unrefined", e.unrefined}};
}

json report_json(const SieveReport& rep)
{
    json j;
    j["n"] = rep.n;
    j["r"] = rep.r;
    j["precision"] = rep.precision_used;
    j["M_used"] = format_fixed(rep.m_used, m_display_decimals(rep.n));
    if (rep.empty_by_cutoff) {
        j["empty_reason"] = rep.empty_reason;
    }
    j["steps"] = json::array();
    for (const SieveStep& s : rep.steps) {
        j["steps"].push_back({{"name", s.name}, {"inequality", s.inequality}, {"detail", s.detail}});
    }
    j["caps"] = json::array();
    for (const DegreeCap& c : rep.caps) {
        j["caps"].push_back({{"d", c.d},
                             {"cap", interval(c.cap)},
                             {"cap_floor", c.cap_floor.get_str()},
                             {"min_disc_bound", c.odlyzko.get_str()},
                             {"admissible", c.admissible},
                             {"listed", c.listed}});
    }
    j["max_degree"] = rep.max_degree;
    j["global_cap"] = rep.global_cap.get_str();
    j["admissible"] = json::array();
    for (const SieveEntry& e : rep.admissible) {
        j["admissible"].push_back(entry_json(e));
    }
    j["refinement_performed"] = rep.refinement_performed;
    j["refined"] = json::array();
    for (const SieveEntry& e : rep.refined) {
        j["refined"].push_back(entry_json(e));
    }
    j["excluded"] = json::array();
    for (const SieveExclusion& x : rep.excluded) {
        j["excluded"].push_back({{"d", x.d},
                                 {"D", x.D.get_str()},
                                 {"stage", x.stage},
                                 {"inequality", x.inequality},
                                 {"lhs", x.lhs},
                                 {"rhs", x.rhs}});
    }
    j["ell_ceilings"] = json::array();
    for (const EllCeiling& c : rep.ell_ceilings) {
        j["ell_ceilings"].push_back({{"d", c.d},
                                     {"D_k", c.D_k.get_str()},
                                     {"ceiling", interval(c.ceiling)},
                                     {"ceiling_floor", c.ceiling_floor.get_str()},
                                     {"excluded", c.excluded},
                                     {"reason", c.reason}});
    }
    j["notes"] = rep.notes;
    return j;
}

} // namespace

std::string SieveReport::to_json() const { return report_json(*this).dump(2) + "\n"; }

std::string sieve_reports_json(const std::vector<SieveReport>& reports)
{
    json arr = json::array();
    for (const SieveReport& r : reports) {
        arr.push_back(report_json(r));
    }
    return arr.dump(2) + "\n";
}

std::string SieveReport::to_text() const
{
    std::ostringstream os;
    os << "n = " << n << " (r = " << r << ")\n";
    if (empty_by_cutoff) {
        os << "  no admissible fields: " << empty_reason << "\n";
        return os.str();
    }
    os << "  M(n) used: " << format_fixed(m_used, m_display_decimals(n)) << "\n";
    for (const SieveStep& s : steps) {
        os << "  " << s.name << ": " << s.inequality << "\n";
    }
    for (const DegreeCap& c : caps) {
        os << "  d = " << c.d << ": D_k <= " << c.cap_floor.get_str() << " (cap " << c.cap.mid_string(10)
           << ", min |D| " << c.odlyzko.get_str() << ") " << (c.admissible ? "admissible" : "excluded") << "\n";
    }
    os << "  admissible degrees up to " << max_degree << ", D_k <= " << global_cap.get_str() << "\n";
    auto list = [&](const char* title, const std::vector<SieveEntry>& entries) {
        os << "  " << title << ":";
        for (const SieveEntry& e : entries) {
            os << " (" << e.d << "," << e.D.get_str() << (e.h != 1 ? ",h=" + e.h.get_str() : "") << ")";
        }
        os << "\n";
    };
    list("admissible fields", admissible);
    if (refinement_performed) {
        list("refined", refined);
    }
    for (const SieveExclusion& x : excluded) {
        if (x.D == 0) {
            continue;
        }
        os << "  excluded (" << x.d << "," << x.D.get_str() << "): " << x.stage << "; " << x.inequality << " fails ("
           << x.lhs << " vs " << x.rhs << ")\n";
    }
    for (const EllCeiling& c : ell_ceilings) {
        os << "  D_l ceiling for (" << c.d << "," << c.D_k.get_str() << "): " << c.ceiling_floor.get_str()
           << (c.excluded ? " -> excluded: " + c.reason : "") << "\n";
    }
    for (const std::string& note : notes) {
        os << "  note: " << note << "\n";
    }
    return os.str();
}

} // namespace crg
