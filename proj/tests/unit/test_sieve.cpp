#include "crg/bounds.hpp"
#include "crg/numerics.hpp"
#include "crg/sieve.hpp"
#include "crg/spectral.hpp"

#include <doctest.h>

#include <map>

using namespace crg;

namespace {

std::vector<Integer> ints(std::initializer_list<long> v) { return {v.begin(), v.end()}; }

const SieveReport& report(int n)
{
    static std::map<int, SieveReport> cache;
    auto it = cache.find(n);
    if (it == cache.end()) {
        it = cache.emplace(n, sieve_dimension(Context(), n)).first;
    }
    return it->second;
}

} // namespace

TEST_SUITE("sieve")
{
    TEST_CASE("exponent table per dimension")
    {
        struct Row {
            int n;
            int r;
            SieveRoute route;
            Rational cap;
            long constant;
        };
        const Row rows[] = {
            {4, 2, SieveRoute::even, Rational(4), 16},
            {6, 3, SieveRoute::even, Rational(19, 2), 16},
            {12, 6, SieveRoute::even, Rational(38), 16},
            {5, 3, SieveRoute::odd_r_odd, Rational(11, 2), 16},
            {7, 4, SieveRoute::odd_r_even, Rational(12), 4},
            {9, 5, SieveRoute::odd_r_odd, Rational(41, 2), 16},
            {11, 6, SieveRoute::odd_r_even, Rational(31), 4},
        };
        for (const Row& row : rows) {
            CAPTURE(row.n);
            const SieveExponents e = sieve_exponents(row.n);
            CHECK(e.r == row.r);
            CHECK(e.route == row.route);
            CHECK(e.cap_exponent == row.cap);
            CHECK(e.constant == row.constant);
        }
        CHECK(sieve_exponents(6).nu_exponent == Rational(21, 2));
        CHECK(sieve_exponents(9).nu_exponent == Rational(27, 2));     // r² − 5r/2 + 1 at r = 5
        CHECK(sieve_exponents(9).ell_exponent == Rational(7, 2));     // r − 3/2
        CHECK(sieve_exponents(7).ell_exponent == Rational(3, 2));     // r − 5/2 once h_l is bounded
    }

    TEST_CASE("step-1 caps for n = 4 and n = 5")
    {
        const long caps4[] = {262, 2244, 19210, 164442, 1407650};
        const long caps5[] = {214, 1928, 17302, 155272, 1393406};
        for (int d = 2; d <= 6; ++d) {
            CHECK(report(4).cap_for(d)->cap_floor == caps4[d - 2]);
            CHECK(report(5).cap_for(d)->cap_floor == caps5[d - 2]);
        }
        CHECK(report(4).max_degree == 6);
        CHECK(report(5).max_degree == 6);
        CHECK(report(4).global_cap == 1407650);
        CHECK(report(5).global_cap == 1393406);
        for (const auto& e : report(4).admissible) {
            CHECK(e.unrefined);
        }
        CHECK(report(4).refined.empty());
    }

    TEST_CASE("refined lists for n = 6 and n = 7")
    {
        const SieveReport& six = report(6);
        CHECK(six.refined_discriminants(2) == ints({5, 8, 12, 13, 17, 21, 24, 28}));
        CHECK(six.refined_discriminants(3) == ints({49, 81}));
        CHECK(six.refined_discriminants(4).empty());
        int cubic_candidates = 0;
        for (const auto& e : six.admissible) {
            cubic_candidates += e.d == 3 ? 1 : 0;
        }
        CHECK(cubic_candidates == 4);
        bool forty = false;
        for (const auto& x : six.excluded) {
            forty = forty || (x.d == 2 && x.D == 40);
        }
        CHECK(forty);

        const SieveReport& seven = report(7);
        CHECK(seven.cap_for(2)->cap_floor == 39);
        CHECK(seven.cap_for(3)->cap_floor == 205);
        CHECK(seven.cap_for(4)->cap_floor == 1062);
        CHECK(seven.admissible_degrees() == std::vector<int>{2, 3, 4});
    }

    TEST_CASE("n = 9: the cubic field is excluded by the D_l ceiling")
    {
        const SieveReport& nine = report(9);
        CHECK(nine.refined_discriminants(2) == ints({5, 8, 12, 13}));
        CHECK(nine.refined_discriminants(3).empty());
        bool found = false;
        for (const auto& c : nine.ell_ceilings) {
            if (c.d == 3 && c.D_k == 49) {
                found = true;
                CHECK(c.ceiling_floor == 7446);
                CHECK(c.excluded);
            }
        }
        CHECK(found);
    }

    TEST_CASE("n = 10, 11, 12 and the empty n = 13 report")
    {
        CHECK(report(10).refined_discriminants(2) == ints({5, 8}));
        CHECK(report(11).refined_discriminants(2) == ints({5, 8}));
        CHECK(report(12).refined_discriminants(2) == ints({5}));
        CHECK(report(12).admissible_degrees() == std::vector<int>{2});
        const SieveReport& thirteen = report(13);
        CHECK(thirteen.empty_by_cutoff);
        CHECK(thirteen.empty_reason == "R_c(13) < 1");
        CHECK(thirteen.admissible.empty());
    }

    TEST_CASE("root-discriminant caps decrease with the degree")
    {
        const Context ctx;
        for (int n = 4; n <= 12; ++n) {
            const Rational m = m_display_upper(n);
            for (int d = 2; d < 10; ++d) {
                const BoundedReal a = pow(degree_cap(ctx, n, d, m), Rational(1, d));
                const BoundedReal b = pow(degree_cap(ctx, n, d + 1, m), Rational(1, d + 1));
                CHECK(definitely_less(b, a));
            }
        }
    }

    TEST_CASE("cross-parity: routing even r through the odd-r inequality")
    {
        // The even-r right-hand side over the odd-r one is 2^(d-2), so the
        // caps agree at d = 2 and the even-r cap is larger beyond.
        const Context ctx;
        for (int n : {7, 11, 15}) {
            const Rational m = m_display_upper(n);
            for (int d = 2; d <= 6; ++d) {
                const BoundedReal own = degree_cap(ctx, n, d, m, SieveRoute::odd_r_even);
                const BoundedReal other = degree_cap(ctx, n, d, m, SieveRoute::odd_r_odd);
                const Rational e = sieve_exponents(n).cap_exponent;
                const BoundedReal ratio = pow(own / other, e);
                CHECK(ratio.overlaps(ctx.exact(ipow(2, static_cast<unsigned long>(d - 2)))));
                if (d > 2) {
                    CHECK(definitely_less(other, own));
                }
            }
        }
    }

    TEST_CASE("soundness against the class-number bound")
    {
        const Context ctx;
        for (int n : {6, 8, 10, 12}) {
            const SieveReport& rep = report(n);
            const BoundedReal threshold = ctx.exact(rep.m_used) * sphere_volume(ctx, n);
            for (const auto& e : rep.admissible) {
                const BoundedReal h = class_number_bound(ctx, e.d, e.D);
                const BoundedReal nu = nu_lower_bound(ctx, FieldBoundInput{n, e.d, e.D, std::nullopt, h});
                CHECK_FALSE(definitely_greater(nu, threshold));
            }
            for (const auto& x : rep.excluded) {
                if (x.D == 0) {
                    // Whole degree dropped: even the smallest possible discriminant fails step 1.
                    const Integer D = odlyzko_min_disc(x.d);
                    const BoundedReal h = class_number_bound(ctx, x.d, D);
                    CHECK(definitely_greater(nu_lower_bound(ctx, FieldBoundInput{n, x.d, D, std::nullopt, h}), threshold));
                    continue;
                }
                const Integer h = FieldTable::embedded().find(x.d, x.D)->class_number;
                const BoundedReal nu = nu_lower_bound(ctx, FieldBoundInput{n, x.d, x.D, std::nullopt, ctx.exact(h)});
                CHECK(definitely_greater(nu, threshold));
            }
        }
    }

    TEST_CASE("batch driver and JSON")
    {
        const auto reports = sieve_all(Context(), 12, 13);
        CHECK(reports.size() == 2);
        const std::string json = sieve_reports_json(reports);
        CHECK(json.find("\"n\": 12") != std::string::npos);
        CHECK(json == sieve_reports_json(sieve_all(Context(), 12, 13)));
        CHECK_THROWS_AS(even_sieve(Context(), 5), DomainError);
        CHECK_THROWS_AS(odd_sieve(Context(), 6), DomainError);
    }
}
