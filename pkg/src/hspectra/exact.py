"""Exact integer arithmetic for symmetric matrices and their characteristic
polynomials.

Polynomials are coefficient tuples ordered from the constant term upwards,
so ``(c0, c1, ..., cn)`` means ``c0 + c1 x + ... + cn x^n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .graph import Graph

IntMatrix = list[list[int]]


def adjacency(g: Graph) -> IntMatrix:
    return g.matrix()


def matmul(a: IntMatrix, b: IntMatrix) -> IntMatrix:
    bt = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) for col in bt] for row in a]


def e_matrix(a: IntMatrix) -> IntMatrix:
    """E = A(A + 2I) = A^2 + 2A."""
    sq = matmul(a, a)
    return [[sq[i][j] + 2 * a[i][j] for j in range(len(a))] for i in range(len(a))]


# -- polynomials --------------------------------------------------------------

def poly_trim(p: Sequence[int]) -> tuple[int, ...]:
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return tuple(p)


def poly_mul(p: Sequence[int], q: Sequence[int]) -> tuple[int, ...]:
    out = [0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a:
            for j, b in enumerate(q):
                out[i + j] += a * b
    return poly_trim(out)


def poly_pow(p: Sequence[int], k: int) -> tuple[int, ...]:
    out: tuple[int, ...] = (1,)
    for _ in range(k):
        out = poly_mul(out, p)
    return out


def poly_eval(p: Sequence[int], x):
    acc = 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def poly_divmod(p: Sequence[int], d: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Division by a monic integer polynomial ``d``."""
    d = poly_trim(d)
    if d[-1] != 1:
        raise ValueError("divisor must be monic")
    rem = list(p)
    dd = len(d) - 1
    if len(rem) - 1 < dd:
        return (0,), poly_trim(rem)
    quot = [0] * (len(rem) - dd)
    for k in range(len(rem) - 1, dd - 1, -1):
        c = rem[k]
        quot[k - dd] = c
        if c:
            for i in range(dd + 1):
                rem[k - dd + i] -= c * d[i]
    return poly_trim(quot), poly_trim(rem[:dd] or [0])


def poly_str(p: Sequence[int], var: str = "x") -> str:
    terms = []
    for k in range(len(p) - 1, -1, -1):
        c = p[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        if k == 0:
            body = str(mag)
        else:
            coef = "" if mag == 1 else str(mag)
            body = coef + (var if k == 1 else f"{var}^{k}")
        terms.append((sign, body))
    if not terms:
        return "0"
    first_sign, first = terms[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out


@dataclass(frozen=True)
class CharPoly:
    """Monic characteristic polynomial det(xI - A), constant term first."""

    coeffs: tuple[int, ...]

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, x):
        return poly_eval(self.coeffs, x)

    def __str__(self):
        return poly_str(self.coeffs)


def char_poly(m: IntMatrix) -> CharPoly:
    """Faddeev-LeVerrier recurrence in exact integers.

    M_k = A M_{k-1} + c_{n-k+1} I,  c_{n-k} = -tr(A M_k) / k.
    """
    n = len(m)
    if n == 0:
        return CharPoly((1,))
    a = np.array(m, dtype=object)
    coeffs = [0] * (n + 1)
    coeffs[n] = 1
    mk = np.zeros((n, n), dtype=object)
    eye = np.identity(n, dtype=int).astype(object)
    for k in range(1, n + 1):
        mk = a.dot(mk) + coeffs[n - k + 1] * eye
        tr = int(np.trace(a.dot(mk)))
        c, r = divmod(-tr, k)
        assert r == 0, f"inexact Faddeev-LeVerrier division at step {k}"
        coeffs[n - k] = c
    return CharPoly(tuple(int(c) for c in coeffs))


def graph_char_poly(g: Graph) -> CharPoly:
    return char_poly(g.matrix())


# -- rank ---------------------------------------------------------------------

def rank(m: IntMatrix) -> int:
    """Rank over Q by Bareiss fraction-free elimination with full pivoting."""
    rows = [list(r) for r in m]
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    prev = 1
    r = 0
    for k in range(min(nr, nc)):
        pivot = None
        for i in range(k, nr):
            for j in range(k, nc):
                if rows[i][j] != 0:
                    pivot = (i, j)
                    break
            if pivot:
                break
        if pivot is None:
            break
        pi, pj = pivot
        rows[k], rows[pi] = rows[pi], rows[k]
        if pj != k:
            for row in rows:
                row[k], row[pj] = row[pj], row[k]
        p = rows[k][k]
        for i in range(k + 1, nr):
            ri = rows[i]
            f = ri[k]
            for j in range(k + 1, nc):
                num = p * ri[j] - f * rows[k][j]
                q, rem = divmod(num, prev)
                assert rem == 0, "inexact Bareiss division"
                ri[j] = q
            ri[k] = 0
        prev = p
        r += 1
    return r


# -- inertia and spectrum shape -----------------------------------------------

def zero_multiplicity(coeffs: Sequence[int]) -> int:
    z = 0
    while z < len(coeffs) - 1 and coeffs[z] == 0:
        z += 1
    return z


def sign_variations(coeffs: Sequence[int]) -> int:
    signs = [c > 0 for c in coeffs if c != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def inertia(p: CharPoly) -> tuple[int, int, int]:
    """(positive, zero, negative) root counts of a real-rooted polynomial.

    Descartes' rule of signs is exact when every root is real.
    """
    z = zero_multiplicity(p.coeffs)
    pos = sign_variations(p.coeffs[z:])
    return pos, z, p.degree - pos - z


@dataclass(frozen=True)
class SpectrumShape:
    mult_minus2: int
    mult_zero: int
    residual: tuple[int, ...]

    @property
    def residual_degree(self) -> int:
        return len(self.residual) - 1

    def expand(self) -> tuple[int, ...]:
        return poly_mul(poly_mul(poly_pow((0, 1), self.mult_zero),
                                 poly_pow((2, 1), self.mult_minus2)), self.residual)


def spectrum_shape(p: CharPoly) -> SpectrumShape:
    z = zero_multiplicity(p.coeffs)
    q: tuple[int, ...] = tuple(p.coeffs[z:])
    t = 0
    while len(q) > 1:
        quot, rem = poly_divmod(q, (2, 1))
        if rem != (0,):
            break
        q = quot
        t += 1
    return SpectrumShape(t, z, q)


def nonzero_part(p: CharPoly) -> tuple[int, ...]:
    return tuple(p.coeffs[zero_multiplicity(p.coeffs):])


# -- exact roots (numeric evaluation of an exact factorisation) ----------------

def _q_trim(p):
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def _q_sub(p, q):
    size = max(len(p), len(q))
    p = p + [Fraction(0)] * (size - len(p))
    q = q + [Fraction(0)] * (size - len(q))
    return _q_trim([a - b for a, b in zip(p, q)])


def _q_deriv(p):
    return _q_trim([i * p[i] for i in range(1, len(p))] or [Fraction(0)])


def _q_divmod(p, d):
    rem = list(p)
    if len(rem) < len(d):
        return [Fraction(0)], _q_trim(rem)
    quot = [Fraction(0)] * (len(rem) - len(d) + 1)
    for k in range(len(rem) - 1, len(d) - 2, -1):
        c = rem[k] / d[-1]
        quot[k - len(d) + 1] = c
        for i, dc in enumerate(d):
            rem[k - len(d) + 1 + i] -= c * dc
    return _q_trim(quot), _q_trim(rem[:len(d) - 1] or [Fraction(0)])


def _q_is_zero(p):
    return len(p) == 1 and p[0] == 0


def _q_monic(p):
    return [c / p[-1] for c in p]


def _q_gcd(a, b):
    while not _q_is_zero(b):
        a, b = b, _q_divmod(a, b)[1]
    return _q_monic(a)


def squarefree_factors(coeffs: Sequence[int]) -> list[tuple[list[Fraction], int]]:
    """Yun's algorithm over Q: [(monic squarefree factor, multiplicity)]."""
    f = _q_monic(_q_trim([Fraction(c) for c in coeffs]))
    if len(f) == 1:
        return []
    df = _q_deriv(f)
    a = _q_gcd(f, df)
    b = _q_divmod(f, a)[0]
    c = _q_divmod(df, a)[0]
    d = _q_sub(c, _q_deriv(b))
    out = []
    i = 1
    while len(b) > 1:
        a = _q_gcd(b, d)
        if len(a) > 1:
            out.append((a, i))
        b = _q_divmod(b, a)[0]
        c = _q_divmod(d, a)[0]
        d = _q_sub(c, _q_deriv(b))
        i += 1
    return out


def real_roots(p: CharPoly) -> list[float]:
    """Roots of a real-rooted integer polynomial, descending, with multiplicity.

    Repeated roots are split off exactly (squarefree decomposition) so the
    floating-point root finder only ever sees simple roots; each root is
    then polished by Newton steps on its squarefree factor.
    """
    roots: list[float] = []
    for factor, mult in squarefree_factors(p.coeffs):
        fl = [float(c) for c in factor]
        if len(fl) == 2:
            found = [-fl[0] / fl[1]]
        else:
            found = [complex(r).real for r in np.roots(fl[::-1])]
        dfl = [i * fl[i] for i in range(1, len(fl))]
        polished = []
        for r in found:
            for _ in range(3):
                dv = poly_eval(dfl, r)
                if dv == 0:
                    break
                r -= poly_eval(fl, r) / dv
            polished.append(r)
        roots.extend(polished * mult)
    return sorted(roots, reverse=True)
