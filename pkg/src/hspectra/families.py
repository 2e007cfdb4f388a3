"""The catalog of connected-or-not graphs with at most two eigenvalues outside
{-2, 0}: constructors, closed-form spectra, and recognition.

Row order of every constructed graph follows the displayed block matrices,
so block structure stays inspectable.  ``CP(k)`` places the two vertices of
each class next to each other.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exact import poly_mul, poly_pow
from .graph import Graph, canonical_form, MAX_CANONICAL

FAMILY_IDS = ("G0", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "G10", "G11", "G12", "CP")
ARITY = {"G0": 2, "G1": 0, "G2": 2, "G3": 0, "G4": 1, "G5": 2, "G6": 1, "G7": 0,
         "G8": 2, "G9": 1, "G10": 0, "G11": 0, "G12": 0, "CP": 1}


class FamilyError(ValueError):
    pass


@dataclass(frozen=True)
class FamilyInstance:
    id: str
    params: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "params", tuple(int(p) for p in self.params))
        validate(self)

    def __str__(self):
        if not self.params:
            return self.id
        return f"{self.id}({','.join(map(str, self.params))})"

    @property
    def order(self) -> int:
        return vertex_count(self)

    def sort_key(self):
        return FAMILY_IDS.index(self.id), self.params

    @classmethod
    def parse(cls, text: str) -> "FamilyInstance":
        m = re.fullmatch(r"\s*([A-Za-z]+\d*)\s*(?:\(([\d,\s]*)\))?\s*", text)
        if not m:
            raise FamilyError(f"cannot parse family instance {text!r}")
        fid = m.group(1).upper()
        params = tuple(int(p) for p in m.group(2).split(",") if p.strip()) if m.group(2) else ()
        return cls(fid, params)


def validate(f: FamilyInstance) -> None:
    if f.id not in ARITY:
        raise FamilyError(f"unknown family {f.id!r}; expected one of {', '.join(FAMILY_IDS)}")
    if len(f.params) != ARITY[f.id]:
        raise FamilyError(f"{f.id} takes {ARITY[f.id]} parameter(s), got {len(f.params)}")
    p = f.params
    checks = {
        "G0": [(lambda: p[0] >= p[1], "l >= m"), (lambda: p[1] >= 1, "m >= 1")],
        "G2": [(lambda: p[0] >= 3, "k >= 3"), (lambda: p[1] >= 1, "m >= 1")],
        "G4": [(lambda: p[0] >= 2, "k >= 2")],
        "G5": [(lambda: p[0] >= p[1], "k >= l"), (lambda: p[1] >= 2, "l >= 2")],
        "G6": [(lambda: p[0] >= 3, "m >= 3")],
        "G8": [(lambda: p[0] >= p[1], "k >= l"), (lambda: p[1] >= 1, "l >= 1"),
               (lambda: p[0] >= 2, "k >= 2")],
        "G9": [(lambda: p[0] >= 0, "k >= 0")],
        "CP": [(lambda: p[0] >= 1, "k >= 1")],
    }
    for ok, bound in checks.get(f.id, []):
        if not ok():
            raise FamilyError(f"{f}: parameter bound {bound} violated")


def vertex_count(f: FamilyInstance) -> int:
    p = f.params
    return {
        "G0": lambda: p[0] + p[1],
        "G1": lambda: 5,
        "G2": lambda: 2 * (p[0] - 1) + p[1],
        "G3": lambda: 10,
        "G4": lambda: 5 + 2 * p[0],
        "G5": lambda: 2 * p[0] + 2 * p[1],
        "G6": lambda: 2 * p[0],
        "G7": lambda: 15,
        "G8": lambda: 2 * p[0] + 2 * p[1] + 1,
        "G9": lambda: 8 + 2 * p[0],
        "G10": lambda: 9,
        "G11": lambda: 9,
        "G12": lambda: 8,
        "CP": lambda: 2 * p[0],
    }[f.id]()


# -- constructors -------------------------------------------------------------

def _J(a, b=None):
    return np.ones((a, a if b is None else b), dtype=int)


def _O(a, b=None):
    return np.zeros((a, a if b is None else b), dtype=int)


def _JI(a):
    return _J(a) - np.eye(a, dtype=int)


def _C(k):
    """Adjacency matrix of CP(k)."""
    return np.kron(_JI(k), _J(2))


def _multipartite(sizes):
    n = sum(sizes)
    labels = np.repeat(np.arange(len(sizes)), sizes)
    return (labels[:, None] != labels[None, :]).astype(int).reshape(n, n)


def _direct_sum(*mats):
    n = sum(m.shape[0] for m in mats)
    out = np.zeros((n, n), dtype=int)
    at = 0
    for m in mats:
        k = m.shape[0]
        out[at:at + k, at:at + k] = m
        at += k
    return out


_G10 = [
    [0, 0, 0, 0, 1, 1, 1, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 1, 1, 1, 1, 1],
    [1, 0, 0, 1, 0, 0, 1, 1, 0],
    [1, 0, 0, 1, 0, 0, 1, 1, 1],
    [1, 0, 0, 1, 1, 1, 0, 0, 0],
    [1, 0, 0, 1, 1, 1, 0, 0, 1],
    [0, 1, 1, 1, 0, 1, 0, 1, 0],
]

_G11 = [
    [0, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 1, 1, 0, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 1, 1, 1, 1],
    [1, 1, 0, 0, 1, 0, 1, 0, 1],
    [1, 1, 0, 0, 1, 1, 0, 1, 0],
    [0, 0, 1, 1, 1, 0, 1, 0, 1],
    [0, 0, 1, 1, 1, 1, 0, 1, 0],
]

_G12 = [
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 0, 1],
    [0, 0, 0, 0, 0, 0, 1, 1],
    [0, 0, 0, 0, 0, 0, 1, 1],
    [1, 1, 0, 0, 1, 1, 0, 1],
    [0, 0, 1, 1, 1, 1, 1, 0],
]


def adjacency_matrix(f: FamilyInstance) -> np.ndarray:
    validate(f)
    p = f.params
    if f.id == "G0":
        return _multipartite([p[0], p[1]])
    if f.id == "G1":
        return _multipartite([1, 1, 3])
    if f.id == "G2":
        k, m = p
        return _multipartite([2] * (k - 1) + [m])
    if f.id == "CP":
        return _C(p[0])
    if f.id == "G3":
        star = _multipartite([4, 1])
        return _direct_sum(star, star)
    if f.id == "G4":
        return _direct_sum(_multipartite([4, 1]), _C(p[0]))
    if f.id == "G5":
        return _direct_sum(_C(p[0]), _C(p[1]))
    if f.id == "G6":
        m = p[0]
        eye = np.eye(m, dtype=int)
        return np.block([[_JI(m), eye], [eye, _JI(m)]])
    if f.id == "G7":
        return np.block([
            [_JI(7), _JI(7), _O(7, 1)],
            [_JI(7), _JI(7), _J(7, 1)],
            [_O(1, 7), _J(1, 7), _O(1)],
        ])
    if f.id == "G8":
        k, l = p
        return np.block([
            [_C(k), _O(2 * k, 2 * l), _J(2 * k, 1)],
            [_O(2 * l, 2 * k), _C(l), _J(2 * l, 1)],
            [_J(1, 2 * k), _J(1, 2 * l), _O(1)],
        ])
    if f.id == "G9":
        k = p[0]
        # diagonal blocks of sizes 2, 3, 3, 2k
        rows = [
            [_O(2), _O(2, 3), _J(2, 3), _J(2, 2 * k)],
            [_O(3, 2), _JI(3), _JI(3), _O(3, 2 * k)],
            [_J(3, 2), _JI(3), _JI(3), _J(3, 2 * k)],
            [_J(2 * k, 2), _O(2 * k, 3), _J(2 * k, 3), _C(k)],
        ]
        if k == 0:
            rows = [r[:3] for r in rows[:3]]
        return np.block(rows)
    return np.array({"G10": _G10, "G11": _G11, "G12": _G12}[f.id], dtype=int)


def construct(f: FamilyInstance) -> Graph:
    return Graph.from_matrix(adjacency_matrix(f).tolist())


# -- closed-form spectra ------------------------------------------------------

_SUPERSCRIPT = str.maketrans("0123456789", "⁰¹²³⁴⁵⁶⁷⁸⁹")


def _fmt_int(x: int) -> str:
    return str(x).replace("-", "−")


def _surd(d: int) -> tuple[int, int]:
    """Write sqrt(d) as a*sqrt(b) with b squarefree (d >= 0)."""
    if d == 0:
        return 0, 1
    a, b = 1, d
    k = 2
    while k * k <= b:
        while b % (k * k) == 0:
            a *= k
            b //= k * k
        k += 1
    return a, b


@dataclass(frozen=True)
class SymbolicSpectrum:
    """Closed-form spectrum: multiplicities of -2 and 0, plus the remaining
    eigenvalues as exact integers (``linear``) and/or the roots of
    x^2 - b x + c (``quadratic = (b, c)``)."""

    mult_minus2: int
    mult_zero: int
    linear: tuple[int, ...] = ()
    quadratic: tuple[int, int] | None = None

    @property
    def size(self) -> int:
        return self.mult_minus2 + self.mult_zero + len(self.linear) + (2 if self.quadratic else 0)

    def expand(self) -> tuple[int, ...]:
        """Characteristic polynomial, constant term first."""
        out = poly_mul(poly_pow((0, 1), self.mult_zero), poly_pow((2, 1), self.mult_minus2))
        for r in self.linear:
            out = poly_mul(out, (-r, 1))
        if self.quadratic:
            b, c = self.quadratic
            out = poly_mul(out, (c, -b, 1))
        return out

    def extra_values(self) -> list[float]:
        vals = [float(r) for r in self.linear]
        if self.quadratic:
            b, c = self.quadratic
            disc = b * b / 4 - c
            vals += [b / 2 + math.sqrt(disc), b / 2 - math.sqrt(disc)]
        return sorted(vals)

    def values(self) -> list[float]:
        """Numeric spectrum, descending."""
        return sorted([-2.0] * self.mult_minus2 + [0.0] * self.mult_zero + self.extra_values(), reverse=True)

    def quadratic_text(self) -> str:
        b, c = self.quadratic
        disc = b * b - 4 * c  # roots are (b +- sqrt(disc)) / 2
        a, rad = _surd(disc)
        if rad == 1:
            return f"{_fmt_int((b - a) // 2)}, {_fmt_int((b + a) // 2)}"
        if b % 2 == 0 and a % 2 == 0:
            centre, a = b // 2, a // 2
            root = ("" if a == 1 else str(a)) + f"√{rad}"
            return f"±{root}" if centre == 0 else f"{_fmt_int(centre)}±{root}"
        root = ("" if a == 1 else str(a)) + f"√{rad}"
        return f"({_fmt_int(b)}±{root})/2"

    def text(self) -> str:
        parts = []
        for value, mult in ((-2, self.mult_minus2), (0, self.mult_zero)):
            if mult:
                parts.append(_fmt_int(value) + ("" if mult == 1 else str(mult).translate(_SUPERSCRIPT)))
        parts += [_fmt_int(r) for r in sorted(self.linear)]
        if self.quadratic:
            parts.append(self.quadratic_text())
        return "{" + ", ".join(parts) + "}"

    def to_dict(self) -> dict:
        return {
            "mult_minus2": self.mult_minus2,
            "mult_zero": self.mult_zero,
            "linear": list(self.linear),
            "quadratic": list(self.quadratic) if self.quadratic else None,
            "text": self.text(),
        }


def from_shape(mult_minus2: int, mult_zero: int, residual) -> SymbolicSpectrum | None:
    """Closed form for a residual factor of degree <= 2, else None."""
    deg = len(residual) - 1
    if deg == 0:
        return SymbolicSpectrum(mult_minus2, mult_zero)
    if deg == 1:
        return SymbolicSpectrum(mult_minus2, mult_zero, (-residual[0],))
    if deg == 2:
        b, c = -residual[1], residual[0]
        disc = b * b - 4 * c
        a, rad = _surd(disc)
        if rad == 1:
            return SymbolicSpectrum(mult_minus2, mult_zero, ((b - a) // 2, (b + a) // 2))
        return SymbolicSpectrum(mult_minus2, mult_zero, quadratic=(b, c))
    return None


def _quad(centre: int, disc: int) -> tuple[int, int]:
    """(sum, product) of centre +- sqrt(disc)."""
    return 2 * centre, centre * centre - disc


def symbolic_spectrum(f: FamilyInstance) -> SymbolicSpectrum:
    validate(f)
    p = f.params
    S = SymbolicSpectrum
    if f.id == "G0":
        l, m = p
        return S(0, l + m - 2, quadratic=_quad(0, l * m))
    if f.id == "G1":
        return S(1, 2, (-1, 3))
    if f.id == "G2":
        k, m = p
        return S(k - 2, k + m - 2, quadratic=_quad(k - 2, k * k + 2 * (k - 1) * (m - 2)))
    if f.id == "CP":
        k = p[0]
        return S(k - 1, k, (2 * k - 2,))
    if f.id == "G3":
        return S(2, 6, (2, 2))
    if f.id == "G4":
        k = p[0]
        return S(k, k + 3, (2, 2 * k - 2))
    if f.id == "G5":
        k, l = p
        return S(k + l - 2, k + l, (2 * l - 2, 2 * k - 2))
    if f.id == "G6":
        m = p[0]
        return S(m - 1, m - 1, (m - 2, m))
    if f.id == "G7":
        return S(7, 6, quadratic=_quad(7, 28))
    if f.id == "G8":
        k, l = p
        return S(k + l - 1, k + l, quadratic=_quad(k + l - 1, (k - l) ** 2 + 1))
    if f.id == "G9":
        k = p[0]
        return S(k + 3, k + 3, quadratic=_quad(k + 3, k * k + 3))
    if f.id == "G10":
        return S(3, 4, quadratic=_quad(3, 2))
    if f.id == "G11":
        return S(3, 4, (2, 4))
    return S(2, 4, (1, 3))  # G12


# -- enumeration and recognition ----------------------------------------------

def catalog_instances(n: int) -> list[FamilyInstance]:
    """Every family instance with exactly ``n`` vertices."""
    F = FamilyInstance
    out = []
    for m in range(1, n // 2 + 1):
        out.append(F("G0", (n - m, m)))
    if n == 5:
        out.append(F("G1"))
    for k in range(3, n // 2 + 2):
        m = n - 2 * (k - 1)
        if m >= 1:
            out.append(F("G2", (k, m)))
    if n == 10:
        out.append(F("G3"))
    if n >= 9 and n % 2 == 1:
        out.append(F("G4", ((n - 5) // 2,)))
    if n % 2 == 0:
        half = n // 2
        for l in range(2, half // 2 + 1):
            out.append(F("G5", (half - l, l)))
        if half >= 3:
            out.append(F("G6", (half,)))
    if n == 15:
        out.append(F("G7"))
    if n % 2 == 1 and n >= 5:
        half = (n - 1) // 2
        for l in range(1, half // 2 + 1):
            if half - l >= 2:
                out.append(F("G8", (half - l, l)))
    if n >= 8 and n % 2 == 0:
        out.append(F("G9", ((n - 8) // 2,)))
    if n == 9:
        out += [F("G10"), F("G11")]
    if n == 8:
        out.append(F("G12"))
    if n >= 2 and n % 2 == 0:
        out.append(F("CP", (n // 2,)))
    return sorted(out, key=FamilyInstance.sort_key)


def instances_up_to(max_n: int) -> list[FamilyInstance]:
    return [f for n in range(max_n + 1) for f in catalog_instances(n)]


def aliases(f: FamilyInstance) -> list[FamilyInstance]:
    """Other catalog labels for the same graph (CP(2) = G0(2,2), CP(k) = G2(k,2))."""
    F = FamilyInstance
    if f.id == "CP" and f.params[0] == 2:
        return [F("G0", (2, 2))]
    if f.id == "G0" and f.params == (2, 2):
        return [F("CP", (2,))]
    if f.id == "CP" and f.params[0] >= 3:
        return [F("G2", (f.params[0], 2))]
    if f.id == "G2" and f.params[1] == 2:
        return [F("CP", (f.params[0],))]
    return []


@lru_cache(maxsize=None)
def _catalog_certs(n: int):
    return [(f, canonical_form(construct(f))) for f in catalog_instances(n)]


def recognize(g: Graph) -> list[FamilyInstance]:
    """All catalog instances isomorphic to ``g`` (overlapping labels kept)."""
    if g.n > MAX_CANONICAL:
        raise ValueError(f"recognition supports n <= {MAX_CANONICAL}, got {g.n}")
    cert = canonical_form(g)
    return [f for f, c in _catalog_certs(g.n) if c == cert]
