"""Ramified Euler data for the quartic field l0 = Q[x]/(x^4 - x^3 + 2x - 1).

The polynomial discriminant is -275 = -5^2 * 11. The field discriminant of a
quartic field with signature (2, 1) and a prime-squared factor 25 can only be
-275 or -11; no quartic field has |D| = 11, so Z[alpha] is the maximal order
and Dedekind-Kummer applies at every prime. The factorizations below give the
prime ideals above 5 and 11 and hence the stored Euler factors:

    5:  (x^2 + 2x - 2)^2        -> 5  = P^2,        f = 2     (1 - 25^-s)^-1
    11: (x - 2)^2 (x^2 + 3x - 3) -> 11 = P1^2 * P2,  f = 1, 2  (1 - 11^-s)^-1 (1 - 121^-s)^-1

As an extra check the script compares the Euler product built from this data
with a Dirichlet series whose coefficients are generated from the same
splitting types.
"""

from sympy import Poly, discriminant, factor_list, primerange, symbols
from mpmath import mp, mpf

x = symbols("x")
f = x**4 - x**3 + 2 * x - 1


def splitting_degrees(p):
    return sorted(Poly(g, x).degree() for g, _ in factor_list(f, modulus=p)[1])


def main():
    print("disc:", discriminant(f, x))
    for p in (5, 11):
        print(p, factor_list(f, modulus=p))
    ramified = {5: [2], 11: [1, 2]}

    mp.dps = 30
    limit = 20000
    s = 3
    types = {p: ramified.get(p) or splitting_degrees(p) for p in primerange(2, limit)}
    euler = mpf(1)
    for p, degs in types.items():
        for d in degs:
            euler /= 1 - mpf(p) ** (-d * s)

    # Coefficients a_n of zeta_l0 up to N via the local factors.
    N = 4000
    a = [0] * (N + 1)
    a[1] = 1
    for p, degs in types.items():
        if p > N:
            break
        # local series coefficients sum_k c_k p^k for prod_j (1 - p^(f_j s))^-1
        local = {0: 1}
        for d in degs:
            new = {}
            for k, c in local.items():
                e = k
                while p ** e <= N:
                    new[e] = new.get(e, 0) + c
                    e += d
            local = new
        for n in range(N, 0, -1):
            if a[n] == 0:
                continue
            for k, c in local.items():
                if k == 0:
                    continue
                m = n * p**k
                if m > N:
                    break
                a[m] += a[n] * c
    series = sum(mpf(a[n]) / mpf(n) ** s for n in range(1, N + 1))
    print("Euler product (p <", limit, "):", euler)
    print("Dirichlet series (n <=", N, "):", series)


if __name__ == "__main__":
    main()
