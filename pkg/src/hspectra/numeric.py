"""Floating-point spectra by cyclic Jacobi rotations, and interlacing checks."""

from __future__ import annotations

import math
from typing import Sequence

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is optional
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]
        return lambda f: f

from .graph import Graph

MAX_SWEEPS = 100
DEFAULT_TOL = 1e-9


class JacobiError(RuntimeError):
    pass


@njit(cache=True)
def _jacobi_sweeps(a, threshold, max_sweeps):
    n = a.shape[0]
    for sweep in range(max_sweeps + 1):
        off = 0.0
        for i in range(n):
            for j in range(n):
                if i != j:
                    off += a[i, j] * a[i, j]
        off = math.sqrt(off)
        if off < threshold:
            return sweep, off
        if sweep == max_sweeps:
            return -1, off
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = 1.0 / (abs(theta) + math.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / math.sqrt(t * t + 1.0)
                s = t * c
                tau = s / (1.0 + c)
                a[p, p] -= t * apq
                a[q, q] += t * apq
                a[p, q] = 0.0
                a[q, p] = 0.0
                for r in range(n):
                    if r != p and r != q:
                        arp = a[r, p]
                        arq = a[r, q]
                        a[r, p] = arp - s * (arq + tau * arp)
                        a[r, q] = arq + s * (arp - tau * arq)
                        a[p, r] = a[r, p]
                        a[q, r] = a[r, q]
    return -1, 0.0


def eigenvalues(m) -> list[float]:
    """Eigenvalues of a symmetric matrix, descending.

    Cyclic-by-row Jacobi until the off-diagonal Frobenius norm drops below
    1e-12 * (1 + ||m||_F).
    """
    a = np.array(m, dtype=np.float64)
    if a.size == 0:
        return []
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix must be square")
    if not np.array_equal(a, a.T):
        raise ValueError("matrix must be symmetric")
    threshold = 1e-12 * (1.0 + float(np.linalg.norm(a)))
    sweeps, off = _jacobi_sweeps(a, threshold, MAX_SWEEPS)
    if sweeps < 0:
        raise JacobiError(f"no convergence after {MAX_SWEEPS} sweeps (off-diagonal norm {off:.3e})")
    return sorted(np.diag(a).tolist(), reverse=True)


def graph_eigenvalues(g: Graph) -> list[float]:
    return eigenvalues(g.matrix())


def interlacing_holds(a: Sequence[float], b: Sequence[float], tol: float = DEFAULT_TOL) -> bool:
    """Check lambda_i(A) >= lambda_i(B) >= lambda_{n-m+i}(A) for i = 1..m.

    Both spectra are sorted descending first; ``b`` should come from a
    principal submatrix of the matrix behind ``a`` (not checked here).
    """
    n, m = len(a), len(b)
    if m > n:
        raise ValueError(f"submatrix spectrum has {m} values, matrix only {n}")
    a = sorted(a, reverse=True)
    b = sorted(b, reverse=True)
    return all(a[i] + tol >= b[i] >= a[n - m + i] - tol for i in range(m))
