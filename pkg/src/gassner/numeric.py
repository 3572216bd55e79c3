"""Specialization to the unit torus and the Hermitian forms Psi and Psi'.

With every t_i = exp(i theta_i), the bar involution is complex conjugation,
so the exact identities become statements about complex matrices:
gamma^* Psi gamma = Psi for pure braids, where Psi = i Omega - i Omega^*.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .braid import BraidWord, is_pure
from .errors import NearPoleError, PreconditionError
from .invariant import gassner
from .matrix import LaurentMatrix

POLE_GUARD = 1e-9
HERMITIAN_TOL = 1e-12
PIVOT_FLOOR = 1e-10
UNITARITY_TOL = 1e-8


@dataclass(frozen=True)
class TorusPoint:
    thetas: tuple

    def __init__(self, thetas: Sequence[float]):
        object.__setattr__(self, "thetas", tuple(float(x) for x in thetas))

    @property
    def n(self) -> int:
        return len(self.thetas)

    @property
    def t(self) -> np.ndarray:
        return np.exp(1j * np.asarray(self.thetas))

    @classmethod
    def random(cls, n: int, rng: np.random.Generator, low=0.0, high=0.1) -> "TorusPoint":
        # open interval: redraw the (measure-zero) endpoint
        th = rng.uniform(low, high, size=n)
        while np.any(th <= low):
            th = rng.uniform(low, high, size=n)
        return cls(th)


def eval_matrix(m: LaurentMatrix, point) -> np.ndarray:
    """Evaluate every entry at a torus point (or any point with nonzero coordinates)."""
    z = point.t if isinstance(point, TorusPoint) else np.asarray(point, dtype=complex)
    if len(z) != m.nvars:
        raise ValueError("point has %d coordinates, matrix needs %d" % (len(z), m.nvars))
    zl = [complex(x) for x in z]
    out = np.empty((m.n, m.n), dtype=complex)
    for r, row in enumerate(m.rows):
        for c, p in enumerate(row):
            out[r, c] = p.eval(zl)
    return out


def _guard(point: TorusPoint) -> np.ndarray:
    t = point.t
    gap = np.abs(1 - t)
    if np.any(gap < POLE_GUARD):
        k = int(np.argmin(gap))
        raise NearPoleError("t%d = exp(i*%g) is within %g of the pole at 1"
                            % (k + 1, point.thetas[k], POLE_GUARD))
    return t


def omega_numeric(point: TorusPoint, tau: Sequence[int] | None = None) -> np.ndarray:
    t = _guard(point)
    n = len(t)
    tau = range(1, n + 1) if tau is None else tau
    om = np.tril(np.ones((n, n), dtype=complex), -1)
    om[np.diag_indices(n)] = [1 / (1 - t[k - 1]) for k in tau]
    return om


def psi_numeric(point: TorusPoint) -> np.ndarray:
    """Psi = i Omega - i Omega^* at the identity permutation."""
    om = omega_numeric(point)
    return 1j * om - 1j * om.conj().T


def d_numeric(point: TorusPoint) -> np.ndarray:
    return np.diag(1 - point.t)


def psi_prime_numeric(point: TorusPoint) -> np.ndarray:
    """Psi' = D^* Psi D with D = diag(1 - t_i)."""
    d = d_numeric(point)
    return d.conj().T @ psi_numeric(point) @ d


def hermitian_residual(h: np.ndarray) -> float:
    return float(np.max(np.abs(h - h.conj().T))) if h.size else 0.0


def hermitian_pivots(h: np.ndarray) -> np.ndarray:
    """Diagonal pivots of the unpivoted LDL^* factorization of ``h``.

    Stops early (returning the pivots so far) at the first non-positive one.
    """
    a = np.array(h, dtype=complex)
    n = a.shape[0]
    pivots = []
    for k in range(n):
        piv = a[k, k].real
        pivots.append(piv)
        if piv <= 0:
            break
        col = a[k + 1:, k]
        a[k + 1:, k + 1:] -= np.outer(col, col.conj()) / piv
    return np.array(pivots)


def is_positive_definite(h: np.ndarray, tol: float = PIVOT_FLOOR,
                         hermitian_tol: float = HERMITIAN_TOL) -> bool:
    h = np.asarray(h, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(h)))) if h.size else 1.0
    if hermitian_residual(h) > hermitian_tol * scale:
        raise PreconditionError("matrix is not Hermitian within tolerance")
    piv = hermitian_pivots(h)
    return len(piv) == h.shape[0] and bool(np.all(piv > tol))


def _rel_residual(g, form):
    return float(np.linalg.norm(g.conj().T @ form @ g - form) / np.linalg.norm(form))


def check_psi_unitarity(b: BraidWord, point: TorusPoint) -> float:
    """Relative Frobenius residual of gamma^* Psi gamma = Psi."""
    if not is_pure(b):
        raise PreconditionError("unitarity relative to Psi needs a pure braid")
    psi = psi_numeric(point)
    return _rel_residual(eval_matrix(gassner(b), point), psi)


def check_psi_prime_unitarity(b: BraidWord, point: TorusPoint) -> float:
    """Same as :func:`check_psi_unitarity` for the conjugated form D^-1 gamma D and Psi'."""
    if not is_pure(b):
        raise PreconditionError("unitarity relative to Psi' needs a pure braid")
    psi = psi_prime_numeric(point)
    d = d_numeric(point)
    g = eval_matrix(gassner(b), point)
    g_prime = np.linalg.solve(d, g @ d)
    return _rel_residual(g_prime, psi)
