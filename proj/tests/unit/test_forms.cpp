#include "crg/forms.hpp"

#include "subset_oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace crg;

namespace {

long ipow_small(long b, int e)
{
    long v = 1;
    while (e-- > 0) {
        v *= b;
    }
    return v;
}

// (a, b)_p = 1 iff a x² + b y² = z² has a primitive solution in Z_p. For
// squarefree a, b a primitive solution modulo p³ (p odd) or 2⁵ lifts.
int hilbert_oracle(long a, long b, long p)
{
    const long mod = p == 2 ? 32 : ipow_small(p, 3);
    std::vector<char> square_any(static_cast<std::size_t>(mod), 0);
    std::vector<char> square_unit(static_cast<std::size_t>(mod), 0);
    for (long z = 0; z < mod; ++z) {
        square_any[static_cast<std::size_t>(z * z % mod)] = 1;
        if (z % p != 0) {
            square_unit[static_cast<std::size_t>(z * z % mod)] = 1;
        }
    }
    for (long x = 0; x < mod; ++x) {
        for (long y = 0; y < mod; ++y) {
            const long lhs = ((a * (x * x % mod) + b * (y * y % mod)) % mod + mod) % mod;
            const bool primitive_xy = x % p != 0 || y % p != 0;
            if ((primitive_xy ? square_any : square_unit)[static_cast<std::size_t>(lhs)]) {
                return 1;
            }
        }
    }
    return -1;
}

} // namespace

TEST_SUITE("forms")
{
    TEST_CASE("Hilbert symbols match the solvability oracle")
    {
        const long values[] = {-15, -11, -7, -6, -5, -3, -2, -1, 1, 2, 3, 5, 6, 7, 10, 11, 13, 15};
        for (long p : {2L, 3L, 5L, 7L}) {
            for (long a : values) {
                for (long b : values) {
                    CAPTURE(p);
                    CAPTURE(a);
                    CAPTURE(b);
                    CHECK(hilbert_symbol(a, b, Place::prime(p)) == hilbert_oracle(a, b, p));
                }
            }
        }
    }

    TEST_CASE("Hilbert reciprocity")
    {
        for (long a = -30; a <= 30; ++a) {
            for (long b = -30; b <= 30; ++b) {
                if (a == 0 || b == 0) {
                    continue;
                }
                int prod = hilbert_symbol(a, b, Place::infinity());
                for (std::uint32_t p : sieve_primes(31)) {
                    prod *= hilbert_symbol(a, b, Place::prime(p));
                }
                CHECK(prod == 1);
            }
        }
    }

    TEST_CASE("square classes")
    {
        CHECK(squarefree_part(12) == 3);
        CHECK(squarefree_part(-18) == -2);
        CHECK(squarefree_part(1) == 1);
        CHECK_THROWS_AS(squarefree_part(0), DomainError);
    }

    TEST_CASE("the split form has trivial normalized Hasse symbol")
    {
        for (int m = 3; m <= 10; ++m) {
            std::vector<Integer> split;
            for (int i = 0; i + 1 < m; i += 2) {
                split.push_back(1);
                split.push_back(-1);
            }
            if (m % 2 == 1) {
                split.push_back(1);
            }
            for (long p : {0L, 2L, 3L, 5L}) {
                CHECK(normalized_hasse(split, Place{p}) == 1);
            }
        }
    }

    TEST_CASE("lambda lower bounds increase in q and r")
    {
        const long qs[] = {2, 3, 4, 5, 7, 8, 9, 11, 13};
        for (auto parity : {DimensionParity::even, DimensionParity::odd}) {
            for (int r = 2; r <= 8; ++r) {
                for (std::size_t i = 0; i + 1 < std::size(qs); ++i) {
                    CHECK(lambda_lower_exact(qs[i], r, parity) < lambda_lower_exact(qs[i + 1], r, parity));
                }
                CHECK(lambda_lower_exact(3, r, parity) < lambda_lower_exact(3, r + 1, parity));
            }
        }
        CHECK(lambda_lower_exact(2, 2, DimensionParity::even) == Rational(3, 2));
        CHECK(lambda_lower_exact(3, 2, DimensionParity::even) == 4);
        CHECK(lambda_lower_exact(2, 3, DimensionParity::odd) == Rational(7, 2));
    }

    TEST_CASE("T-set enumeration equals the subset oracle")
    {
        const Context ctx;
        for (int n : {4, 5, 6, 9, 10}) {
            for (long budget : {1L, 4L, 10L, 100L, 1000L, 10000L}) {
                CAPTURE(n);
                CAPTURE(budget);
                auto got = enumerate_T_sets(n, ctx.exact(budget), 100);
                std::sort(got.begin(), got.end());
                CHECK(got == crg::testing::subset_oracle(n, Rational(budget), 100));
            }
        }
        const auto four = enumerate_T_sets(4, ctx.exact(4));
        CHECK(four == std::vector<std::vector<long>>{{}, {2}, {3}});
        CHECK(enumerate_T_sets(4, ctx.exact(1)) == std::vector<std::vector<long>>{{}});
        CHECK_THROWS_AS(enumerate_T_sets(4, ctx.exact(Rational(1, 2))), DomainError);
    }

    TEST_CASE("an undecided budget comparison names the prime set")
    {
        // The budget straddles λ(3) = 4 for n = 4, so {3} cannot be decided.
        const BoundedReal fuzzy = BoundedReal::from_decimal("4", "0.001", 64);
        try {
            (void)enumerate_T_sets(4, fuzzy);
            FAIL("expected UndecidedError");
        } catch (const UndecidedError& e) {
            CHECK(std::string(e.what()).find("{3}") != std::string::npos);
        }
    }

    TEST_CASE("named forms pass the local-global check")
    {
        const Context ctx;
        for (const char* label : {"f1", "f2", "f3"}) {
            for (int n = 2; n <= 32; ++n) {
                CAPTURE(label);
                CAPTURE(n);
                const auto prof = named_form_invariants(ctx, label, n);
                const auto check = local_global_check(prof);
                CHECK(check.accepted);
                CHECK(prof.hasse_minus_places.size() % 2 == 0);
            }
        }
        CHECK_THROWS_AS(named_form_invariants(ctx, "f4", 5), DomainError);
    }

    TEST_CASE("named form invariants")
    {
        const Context ctx;
        const auto f3 = named_form_invariants(ctx, "f3", 13);
        CHECK(local_global_check(f3).accepted);
        // n = 2r − 1 with r even: disc class −3, so ℓ = Q(√−3).
        for (int r : {2, 4, 6, 8}) {
            CHECK(named_form_invariants(ctx, "f3", 2 * r - 1).disc_class == -3);
        }
        for (int n = 2; n <= 32; n += 2) {
            const auto f2 = named_form_invariants(ctx, "f2", n);
            CHECK(std::count(f2.T.begin(), f2.T.end(), 2L) == 1);  // disc ±2 is not a 2-adic unit
        }
        CHECK(named_form_invariants(ctx, "f1", 8).T.empty());
    }

    TEST_CASE("2-adic part of T repeats with period 8")
    {
        const Context ctx;
        for (const char* label : {"f1", "f2"}) {
            for (int n = 2; n + 8 <= 32; ++n) {
                const auto a = named_form_invariants(ctx, label, n).T;
                const auto b = named_form_invariants(ctx, label, n + 8).T;
                const bool a2 = std::find(a.begin(), a.end(), 2L) != a.end();
                const bool b2 = std::find(b.begin(), b.end(), 2L) != b.end();
                CHECK(a2 == b2);
            }
        }
    }

    TEST_CASE("local-global rejections")
    {
        LocalInvariantProfile p;
        p.n = 4;
        p.r = 2;
        p.disc_class = -1;
        p.hasse_minus_places = {Place::infinity(), Place::prime(2)};
        p.T = {2};
        CHECK(local_global_check(p).accepted);

        LocalInvariantProfile odd = p;
        odd.hasse_minus_places = {Place::infinity(), Place::prime(2), Place::prime(3)};
        odd.T = {2, 3};
        const auto r1 = local_global_check(odd);
        CHECK_FALSE(r1.accepted);
        CHECK(r1.reason.find("reciprocity") != std::string::npos);

        LocalInvariantProfile single;
        single.n = 5;
        single.r = 3;
        single.disc_class = 1;
        single.hasse_minus_places = {Place::prime(3)};
        single.T = {3};
        CHECK_FALSE(local_global_check(single).accepted);

        LocalInvariantProfile wrong_sign = p;
        wrong_sign.disc_class = 1;
        CHECK_FALSE(local_global_check(wrong_sign).accepted);

        LocalInvariantProfile wrong_T = p;
        wrong_T.T = {};
        CHECK_FALSE(local_global_check(wrong_T).accepted);
    }
}
