#!/usr/bin/env python3
"""Dev-time prototype of the flat-torus spectral operator, bubble residual,
and Yamabe functional.  Used to size discretization-error budgets before the
C++ tests were frozen."""
import numpy as np
from math import gamma, pi

I2 = np.eye(2, dtype=complex)
X = np.array([[0, 1], [1, 0]], dtype=complex)
Y = np.array([[0, -1j], [1j, 0]], dtype=complex)
Z = np.array([[1, 0], [0, -1]], dtype=complex)


def build_gammas(n):
    """n+1 skew-Hermitian anticommuting gammas, N = 2^ceil((n+1)/2)."""
    d = n + 1
    k = (d + 1) // 2
    herm = []
    for j in range(k):
        for P in (X, Y):
            mats = [Z] * j + [P] + [I2] * (k - j - 1)
            M = mats[0]
            for m_ in mats[1:]:
                M = np.kron(M, m_)
            herm.append(M)
    return [1j * H for H in herm[:d]]


for n in range(1, 9):
    gs = build_gammas(n)
    N = gs[0].shape[0]
    worst = 0.0
    for i in range(len(gs)):
        worst = max(worst, np.abs(gs[i] + gs[i].conj().T).max())
        for j in range(len(gs)):
            anti = gs[i] @ gs[j] + gs[j] @ gs[i] + 2 * (i == j) * np.eye(N)
            worst = max(worst, np.abs(anti).max())
    assert N == 2 ** ((n + 2) // 2), (n, N)
    print(f"clifford n={n}: N={N} worst residual {worst:.2e}")

# ---------------------------------------------------------------- flat model
n = 2
gs = build_gammas(n)        # gamma_1, gamma_2, gamma_3 (= nu), all 4x4
N = 4
nu = gs[n]


def ebar(j):
    return gs[j] @ nu


def apply_geometric(psi, lam, L, m):
    """psi: (m, m, N) complex.  Returns -nu * |xi|^(2L-1) M(xi) psi per mode."""
    ph = np.fft.fftn(psi, axes=(0, 1))
    freq = 2 * pi / L * np.fft.fftfreq(m, d=1.0 / m)
    out = np.zeros_like(ph)
    for i in range(m):
        for j in range(m):
            xi = np.array([freq[i], freq[j]])
            q = np.hypot(xi[0], xi[1])
            if q == 0.0:
                continue
            M = 1j * (xi[0] * gs[0] + xi[1] * gs[1])
            mult = -nu @ (q ** (2 * lam - 1) * M)
            out[i, j] = mult @ ph[i, j]
    return np.fft.ifftn(out, axes=(0, 1))


def bubble(lam, L, m):
    xs = -L / 2 + L * np.arange(m) / m
    Phi0 = np.zeros(N, dtype=complex)
    Phi0[0] = 1 / np.sqrt(2)
    psi = np.zeros((m, m, N), dtype=complex)
    e1, e2 = ebar(0), ebar(1)
    for i, x1 in enumerate(xs):
        for j, x2 in enumerate(xs):
            f = 2.0 / (1.0 + x1 * x1 + x2 * x2)
            A = np.eye(N) - x1 * e1 - x2 * e2
            psi[i, j] = f ** ((n + 1 - 2 * lam) / 2) * (A @ Phi0)
    return psi


def yamabe_residual(psi, lam, mu, L, m):
    Dpsi = apply_geometric(psi, lam, L, m)
    q = 4 * lam / (n - 2 * lam)
    nrm = np.linalg.norm(psi, axis=2)
    nl = (nrm ** q)[..., None] * psi
    r = Dpsi - mu * nl
    return np.linalg.norm(r) / np.linalg.norm(Dpsi)


lam = 0.3
mu1 = gamma(n / 2 + 0.5 + lam) / gamma(n / 2 + 0.5 - lam)
print(f"lambda1(n=2, L=0.3) = {mu1!r}")
for L in (20.0, 40.0, 80.0):
    m = 256
    psi = bubble(lam, L, m)
    res = yamabe_residual(psi, lam, mu1, L, m)
    res0 = yamabe_residual(psi, lam, 0.0, L, m)
    print(f"bubble residual L={L} m={m}: {res:.4e}   (mu=0 control: {res0:.4e})")

# random-field control
rng = np.random.default_rng(0)
m = 64
psi = rng.standard_normal((m, m, N)) + 1j * rng.standard_normal((m, m, N))
print(f"random-field residual (L=40): {yamabe_residual(psi, lam, mu1, 40.0, m):.3f}")

# ------------------------------------------------------- Yamabe functional J
def functional_parts(phi, lam, L, m):
    h = L / m
    p = 2 * n / (n + 2 * lam)
    S = np.sum(np.linalg.norm(phi, axis=2) ** p) * h ** n
    ph = np.fft.fftn(phi, axes=(0, 1)) / m ** n
    freq = 2 * pi / L * np.fft.fftfreq(m, d=1.0 / m)
    q = np.hypot(freq[:, None], freq[None, :])
    w = np.where(q > 0, q ** (-2 * lam), 0.0)
    D = L ** n * np.sum(w[..., None] * np.abs(ph) ** 2).real
    return S, D, p


def J(phi, lam, L, m):
    S, D, p = functional_parts(phi, lam, L, m)
    return S ** (2 / p) / D


m, L = 64, 40.0
b = bubble(lam, L, m)
phi = apply_geometric(b, lam, L, m)
Jb = J(phi, lam, L, m)
vol_sn = 4 * pi  # integral of f^n over R^2
print(f"J(D bubble) = {Jb:.6f};  lambda1*Vol^(2l/n) = {mu1 * vol_sn ** (2 * lam / n):.6f}")

# el_residual with the critical-norm normalization of psi
pst = 2 * n / (n - 2 * lam)
h = L / m
nrm_pst = (np.sum(np.linalg.norm(b, axis=2) ** pst) * h ** n) ** (1 / pst)
psi_n = b / nrm_pst
print(f"el_residual(bubble state, mu=J) = {yamabe_residual(psi_n, lam, Jb, L, m):.4e}")

# gradient check
def grad_J(phi, lam, L, m):
    h = L / m
    S, D, p = functional_parts(phi, lam, L, m)
    nrm = np.linalg.norm(phi, axis=2)
    gS = S ** (2 / p - 1) * np.where(nrm > 0, nrm ** (p - 2), 0.0)[..., None] * phi * h ** n
    ph = np.fft.fftn(phi, axes=(0, 1)) / m ** n
    freq = 2 * pi / L * np.fft.fftfreq(m, d=1.0 / m)
    q = np.hypot(freq[:, None], freq[None, :])
    w = np.where(q > 0, q ** (-2 * lam), 0.0)
    Aphi = np.fft.ifftn(w[..., None] * ph * m ** n, axes=(0, 1)) * L ** n / m ** n
    gD = Aphi * h ** n / h ** n  # placeholder; fixed below
    # D = L^n sum w |ph|^2 = h^n sum_x <Aphi, phi> with Aphi = ifft(w*ph*m^n)* (L/m)^n/h^n...
    # do it directly in Fourier: dD/dconj(phi(x)) = h^n (Aphi)(x) where
    # Aphi(x) = sum_k w_k phihat_k e^{ikx}  (same convention as inverse fft of w*ph)
    Aphi = np.fft.ifftn(w[..., None] * ph * m ** n, axes=(0, 1))
    gD = Aphi * h ** n * (L ** n / (h ** n * m ** n))
    G = (gS * D - S ** (2 / p) * gD) / D ** 2
    return G


rng = np.random.default_rng(1)
phi = rng.standard_normal((m, m, N)) + 1j * rng.standard_normal((m, m, N))
G = grad_J(phi, lam, L, m)
J0 = J(phi, lam, L, m)
for trial in range(3):
    eta = rng.standard_normal((m, m, N)) + 1j * rng.standard_normal((m, m, N))
    eps = 1e-6
    fd = (J(phi + eps * eta, lam, L, m) - J(phi - eps * eta, lam, L, m)) / (2 * eps)
    an = 2 * np.sum(G.conj() * eta).real
    print(f"grad check {trial}: fd={fd:+.8e} analytic={an:+.8e} rel={abs(fd-an)/abs(fd):.2e}")
