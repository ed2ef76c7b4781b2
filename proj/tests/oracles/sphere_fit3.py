#!/usr/bin/env python3
"""Find a robust fit configuration for the multiplier extraction."""
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


def extract(n, k, lam, rlo, rhi, npts, extra):
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


def sweep(rlo, rhi, npts, extra):
    worst, where = 0.0, None
    for n in (2, 3):
        for k in range(1, 6):
            for lam in (0.1, 0.25, 0.3, 0.4):
                m = mu_k(n, k)
                target = gamma(m + 0.5 + lam) / gamma(m + 0.5 - lam)
                rel = abs(extract(n, k, lam, rlo, rhi, npts, extra) - target) / target
                if rel > worst:
                    worst, where = rel, (n, k, lam)
    print(f"[{rlo:g},{rhi:g}] npts={npts} extra={extra}: worst {worst:.3e} at {where}")


for cfg in [(1e-4, 3e-2, 48, 5), (1e-4, 5e-2, 64, 5), (1e-4, 5e-2, 64, 6),
            (3e-5, 3e-2, 64, 5), (1e-4, 1e-1, 64, 6), (1e-4, 1e-1, 80, 7)]:
    sweep(*cfg)
