#!/usr/bin/env python3
"""Regenerates the real quadratic rows of totally_real_fields.csv.

Class numbers come from the analytic class number formula
h = sqrt(D) L(1, chi_D) / (2 log eps), with L(1, chi_D) evaluated by the
finite log-sine sum and eps the fundamental unit found from the continued
fraction of the ring-of-integers generator.
"""
import sys
from math import isqrt
from mpmath import mp, mpf, log, sin, pi, sqrt

mp.dps = 50


def squarefree(m):
    k = 2
    while k * k <= m:
        if m % (k * k) == 0:
            return False
        k += 1
    return True


def is_fundamental(D):
    if D % 4 == 1:
        return squarefree(D)
    if D % 4 == 0:
        m = D // 4
        return m % 4 in (2, 3) and squarefree(m)
    return False


def kronecker(a, n):
    if n == 0:
        return 1 if abs(a) == 1 else 0
    res = 1
    while n % 2 == 0:
        n //= 2
        if a % 2 == 0:
            return 0
        if a % 8 in (3, 5):
            res = -res
    a %= n
    while a:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                res = -res
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            res = -res
        a %= n
    return res if n == 1 else 0


def fundamental_unit(D):
    # smallest t, u > 0 with t^2 - D u^2 = +-4 gives eps = (t + u sqrt D) / 2
    u = 1
    while True:
        for s in (-4, 4):
            t2 = D * u * u + s
            if t2 > 0:
                t = isqrt(t2)
                if t * t == t2:
                    return (mpf(t) + u * sqrt(D)) / 2
        u += 1


def class_number(D):
    L1 = -sum(kronecker(D, a) * log(sin(pi * a / D)) for a in range(1, D)) / sqrt(D)
    h = sqrt(D) * L1 / (2 * log(fundamental_unit(D)))
    hi = int(mp.nint(h))
    assert abs(h - hi) < mpf(10) ** -20, (D, h)
    return hi


def poly(D):
    if D % 4 == 1:
        c = (D - 1) // 4
        return f"x^2-x-{c}" if c else "x^2-x"
    return f"x^2-{D // 4}"


if __name__ == "__main__":
    limit = int(sys.argv[1]) if len(sys.argv) > 1 else 300
    for D in range(5, limit + 1):
        if is_fundamental(D):
            print(f"2,{D},2,0,{class_number(D)},{poly(D)}")
