#!/usr/bin/env python3
"""Augmented-basis variant of the multiplier extraction: the two power series
around r=0 step in integer powers, so the fit basis must include
r^(a+1), r^(a+2), ... alongside r^a and r^b (a = n/2-lam, b = n/2+lam).
Checks double-precision accuracy across the acceptance set."""
import numpy as np
from math import gamma
from scipy.special import hyp2f1


def mu_k(n, k):
    return n / 2 + k - 1


def f_profile_r(n, k, lam, r):
    m = mu_k(n, k)
    y = -np.log(r / 2)
    sh, ch = np.sinh(y / 2), np.cosh(y / 2)
    return sh ** (k - 1) * ch ** k * hyp2f1(m + 0.5 - lam, m + 0.5 + lam, m + 0.5, -(sh ** 2))


def extract(n, k, lam, rlo=1e-4, rhi=1e-2, npts=40, extra=3):
    rs = np.geomspace(rlo, rhi, npts)
    vals = f_profile_r(n, k, lam, rs)
    a, b = n / 2 - lam, n / 2 + lam
    exps = [a + j for j in range(extra + 1)] + [b + j for j in range(extra)]
    A = np.stack([rs ** e for e in exps], axis=1)
    s = np.linalg.norm(A, axis=0)
    c, *_ = np.linalg.lstsq(A / s, vals, rcond=None)
    c = c / s
    d_lam = 2 ** (2 * lam) * gamma(0.5 + lam) / gamma(0.5 - lam)
    return d_lam * c[extra + 1] / c[0]


for (rlo, rhi, npts, extra) in [(1e-4, 1e-2, 40, 2), (1e-4, 1e-2, 40, 3),
                                (1e-5, 1e-2, 48, 3), (1e-4, 3e-2, 48, 4)]:
    worst = 0.0
    where = None
    for n in (2, 3):
        for k in range(1, 6):
            for lam in (0.1, 0.25, 0.3, 0.4):
                m = mu_k(n, k)
                target = gamma(m + 0.5 + lam) / gamma(m + 0.5 - lam)
                got = extract(n, k, lam, rlo, rhi, npts, extra)
                rel = abs(got - target) / abs(target)
                if rel > worst:
                    worst, where = rel, (n, k, lam)
    print(f"window [{rlo},{rhi}] npts={npts} extra={extra}: worst {worst:.3e} at {where}")
