"""Brute-force four-point delta of square grids under d and d' = ln(1 + d).

Uses the Gromov-product form max over (p, x, y, z) of
min((x|z)_p, (y|z)_p) - (x|y)_p, vectorized over (y, z) for each (p, x).
Prints one line per side: side, delta_d, delta_dprime.
"""
import sys

import numpy as np


def grid(side, spacing=1.0):
    r, c = np.divmod(np.arange(side * side), side)
    return np.stack([c * spacing, r * spacing], axis=1)


def delta(d):
    n = d.shape[0]
    best = 0.0
    for p in range(n):
        dp = d[p]
        # (a|b)_p for all pairs a, b
        g = 0.5 * (dp[:, None] + dp[None, :] - d)
        for x in range(n):
            gx = g[x]  # (x|.)_p
            # rows y, cols z: min((x|z)_p, (y|z)_p) - (x|y)_p
            v = np.minimum(gx[None, :], g) - gx[:, None]
            best = max(best, float(v.max()))
    return best


def main(sides):
    for s in sides:
        pts = grid(s)
        d = np.sqrt(((pts[:, None, :] - pts[None, :, :]) ** 2).sum(-1))
        print(s, repr(delta(d)), repr(delta(np.log1p(d))))


if __name__ == "__main__":
    main([int(a) for a in sys.argv[1:]] or [2, 4, 8])
