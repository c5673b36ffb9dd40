#!/usr/bin/env python3
"""Regenerate the Chebyshev table used by specfun for K0 on x > 2.

Fits phi(t) = sqrt(x) * exp(x) * K0(x) with x = 4/(1+t), t in [-1, 1],
i.e. x in [2, inf). phi is smooth and bounded on the whole interval
(phi -> sqrt(pi/2) as t -> -1), so a short Chebyshev expansion reaches
double precision. Run and paste the printed tuple into specfun.py.

Requires mpmath (development-time only; the package itself does not).
"""

import mpmath as mp

mp.mp.dps = 50

DEGREE = 48
TRUNCATE_BELOW = mp.mpf("1e-19")


def phi(t):
    x = mp.mpf(4) / (1 + t)
    return mp.sqrt(x) * mp.exp(x) * mp.besselk(0, x)


def chebyshev_coefficients(n):
    nodes = [mp.cos(mp.pi * (k + mp.mpf("0.5")) / n) for k in range(n)]
    vals = [phi(t) for t in nodes]
    coeffs = []
    for j in range(n):
        acc = mp.fsum(
            vals[k] * mp.cos(mp.pi * j * (k + mp.mpf("0.5")) / n) for k in range(n)
        )
        coeffs.append(2 * acc / n)
    return coeffs


def main():
    coeffs = chebyshev_coefficients(DEGREE)
    # drop the negligible tail; keep one guard term
    last = DEGREE
    while last > 1 and abs(coeffs[last - 1]) < TRUNCATE_BELOW:
        last -= 1
    kept = coeffs[: last + 1]
    print(f"# degree {DEGREE} fit, {len(kept)} coefficients kept")
    print("_K0_CHEB = (")
    for c in kept:
        print(f"    {mp.nstr(c, 20)},")
    print(")")
    # report worst-case relative error on a dense grid
    worst = mp.mpf(0)
    for i in range(2001):
        x = mp.mpf(2) + mp.mpf(698) * i / 2000
        t = 4 / x - 1
        # Clenshaw
        b1 = b2 = mp.mpf(0)
        for c in reversed(kept[1:]):
            b1, b2 = 2 * t * b1 - b2 + c, b1
        approx = t * b1 - b2 + kept[0] / 2
        exact = phi(t)
        worst = max(worst, abs(approx / exact - 1))
    print(f"# max relative error on [2, 700]: {mp.nstr(worst, 3)}")


if __name__ == "__main__":
    main()
