#!/usr/bin/env python3
"""Arbitrary-precision oracle for the golden constants frozen in the C++ tests.

Run:  python3 tools/golden_oracle.py

Everything is computed with mpmath at 60 significant digits, independently of
the C++ implementation:

  S1  = 2F2(1,1;3/2,2;1)          series value used by the r1/hyp2f2 tests
  VS  = unique v>0 with R1(v)=1   (theta=1, sigma=1), via mpmath root finding
  DS  = R2(VS)                    OU distortion at unit rate, D(1)=1*R2(R1^-1(1))

plus a few spot values of 2F2 on a grid for table-driven checks.
"""

import mpmath as mp

mp.mp.dps = 60


def f22(x):
    # 2F2(1,1;3/2,2;x) by direct partial sums, NOT mpmath.hyper, so this
    # stays independent of any shared series implementation. Terms are
    # summed until they fall below 1e-50 relative.
    s = mp.mpf(0)
    term = mp.mpf(1)
    n = 0
    while True:
        s += term
        term = term * x * (1 + n) / ((mp.mpf(3) / 2 + n) * (2 + n))
        n += 1
        if abs(term) < abs(s) * mp.mpf("1e-50") and n > 4:
            return s


def r1(v, theta=1, sigma=1):
    return v / sigma**2 * f22(theta * v / sigma**2)


def r2(v, theta=1, sigma=1):
    return -v / (2 * theta) + sigma**2 / (2 * theta) * r1(v, theta, sigma)


def main():
    s1 = f22(1)
    # cross-check the hand-rolled series against mpmath's general pFq
    s1_ref = mp.hyper([1, 1], [mp.mpf(3) / 2, 2], 1)
    assert abs(s1 - s1_ref) < mp.mpf("1e-45"), (s1, s1_ref)

    vs = mp.findroot(lambda v: r1(v) - 1, mp.mpf("0.7"))
    ds = r2(vs)

    print(f"S1 = 2F2(1,1;3/2,2;1)        = {mp.nstr(s1, 25)}")
    print(f"VS = R1^-1(1)  (theta=sigma=1) = {mp.nstr(vs, 25)}")
    print(f"sqrt(VS) (optimal OU threshold) = {mp.nstr(mp.sqrt(vs), 25)}")
    print(f"DS = R2(VS)    (= D(1))        = {mp.nstr(ds, 25)}")
    print()
    print("spot values of 2F2(1,1;3/2,2;x):")
    for x in ["0.25", "0.5", "2", "5", "10", "-1"]:
        print(f"  x={x:>5}: {mp.nstr(f22(mp.mpf(x)), 25)}")
    print()
    print("spot values of R1^-1(y) (theta=sigma=1):")
    for y in ["0.1", "10", "1000"]:
        # R1(v) >= v, so [0, y] always brackets the root; plain bisection
        # (R1 blows up like e^v at large v, which upsets secant-type solvers)
        yv = mp.mpf(y)
        lo, hi = mp.mpf(0), yv
        for _ in range(220):
            mid = (lo + hi) / 2
            if r1(mid) < yv:
                lo = mid
            else:
                hi = mid
        print(f"  y={y:>5}: {mp.nstr((lo + hi) / 2, 25)}")


if __name__ == "__main__":
    main()
