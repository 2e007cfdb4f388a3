"""Membership in the class H (at most two eigenvalues outside {-2, 0}) and
the structural facts used to classify its members."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional

from .exact import (CharPoly, SpectrumShape, char_poly, e_matrix, inertia, poly_eval,
                    poly_str, rank, real_roots, spectrum_shape)
from .families import FamilyInstance, recognize
from .graph import MAX_CANONICAL, Graph, is_connected, to_graph6

MAX_COCLIQUE = 32


# -- forbidden induced subgraphs ---------------------------------------------

def _m(rows):
    return Graph.from_matrix([[int(c) for c in r] for r in rows])


FORBIDDEN: dict[str, Graph] = {
    "a": Graph.from_edges(6, [(0, j) for j in range(1, 6)]),                 # K_{1,5}
    "b": Graph.from_edges(5, [(i, j) for i in range(2) for j in range(2, 5)]),  # K_{2,3}
    "c": Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]),          # C_5
    "d": _m(["00111", "00111", "11000", "11001", "11010"]),
    "e": _m(["00011", "00011", "00001", "11000", "11100"]),
    "f": _m(["000111", "000111", "000111", "111011", "111101", "111110"]),
    "g": _m(["000111", "000011", "000011", "100011", "111101", "111110"]),
    "h": _m(["000111", "000011", "000011", "100000", "111001", "111010"]),
    "i": _m(["000011", "000011", "000011", "000011", "111101", "111110"]),
    "j": _m(["000011", "000011", "000011", "000001", "111001", "111110"]),
    "k": _m(["000011", "000001", "000001", "000001", "100001", "111110"]),
    "l": _m(["000011", "000001", "000001", "000001", "100000", "111100"]),
    "m": _m(["000011", "000011", "000001", "000001", "110000", "111100"]),
}


def shift_poly(coeffs, a):
    """Coefficients of p(x + a)."""
    out = [0] * len(coeffs)
    for c in reversed(coeffs):
        # out = out * (x + a) + c
        nxt = [0] * len(coeffs)
        for i, v in enumerate(out):
            if v:
                nxt[i] += a * v
                if i + 1 < len(nxt):
                    nxt[i + 1] += v
        nxt[0] += c
        out = nxt
    return tuple(out)


def count_below(p: CharPoly, threshold: int) -> int:
    """Number of roots strictly below an integer threshold (real-rooted p)."""
    return inertia(CharPoly(shift_poly(p.coeffs, threshold)))[2]


def pattern_premise(g: Graph) -> dict:
    """Why a graph cannot sit inside a two-positive-eigenvalue member of H."""
    p = char_poly(g.matrix())
    below = count_below(p, -2)
    n_pos = inertia(p)[0]
    return {"below_minus2": below, "n_pos": n_pos, "value_at_minus2": poly_eval(p.coeffs, -2),
            "holds": below > 0 or n_pos >= 3}


def find_induced(g: Graph, pattern: Graph) -> Optional[list[int]]:
    """One induced embedding of ``pattern`` in ``g`` (pattern vertex -> g vertex)."""
    k = pattern.n
    if k > g.n:
        return None
    pdeg = pattern.degrees()
    gdeg = g.degrees()
    # place high-degree pattern vertices first, preferring ones tied to placed vertices
    order = []
    left = set(range(k))
    while left:
        placed = sum(1 << v for v in order)
        v = max(left, key=lambda u: ((pattern.adj[u] & placed).bit_count(), pdeg[u], -u))
        order.append(v)
        left.remove(v)
    assign = [-1] * k
    used = 0

    def extend(depth):
        nonlocal used
        if depth == k:
            return True
        pv = order[depth]
        for gv in range(g.n):
            if used >> gv & 1 or gdeg[gv] < pdeg[pv]:
                continue
            ok = True
            for prev in order[:depth]:
                if pattern.has_edge(pv, prev) != g.has_edge(gv, assign[prev]):
                    ok = False
                    break
            if not ok:
                continue
            assign[pv] = gv
            used |= 1 << gv
            if extend(depth + 1):
                return True
            used &= ~(1 << gv)
            assign[pv] = -1
        return False

    return list(assign) if extend(0) else None


def forbidden_scan(g: Graph) -> list[tuple[str, list[int]]]:
    """Each forbidden pattern present as an induced subgraph, with one witness."""
    hits = []
    for pid, pattern in FORBIDDEN.items():
        emb = find_induced(g, pattern)
        if emb is not None:
            hits.append((pid, sorted(emb)))
    return hits


# -- columns of A + I ---------------------------------------------------------

def _closed_rows(g: Graph) -> list[int]:
    return [row | 1 << i for i, row in enumerate(g.adj)]


def equal_columns(g: Graph) -> list[tuple[int, int]]:
    cols = _closed_rows(g)
    return [(i, j) for i in range(g.n) for j in range(i + 1, g.n) if cols[i] == cols[j]]


def almost_equal_columns(g: Graph) -> list[tuple[int, int]]:
    """Pairs of columns of A+I that are equal, or almost equal (different
    weights, at most two differing positions)."""
    cols = _closed_rows(g)
    out = []
    for i in range(g.n):
        for j in range(i + 1, g.n):
            diff = (cols[i] ^ cols[j]).bit_count()
            if diff == 0 or (diff <= 2 and cols[i].bit_count() != cols[j].bit_count()):
                out.append((i, j))
    return out


# -- E = A(A + 2I) -------------------------------------------------------------

def e_rank(g: Graph) -> int:
    return rank(e_matrix(g.matrix()))


def psd_rank2_check(g: Graph) -> bool:
    """rank(E) = 2 and both nonzero eigenvalues of E positive."""
    e = e_matrix(g.matrix())
    if rank(e) != 2:
        return False
    c = char_poly(e).coeffs
    n = len(e)
    if any(c[:n - 2]):
        return False
    q, minus_p = c[n - 2], c[n - 1]
    return -minus_p > 0 and q > 0


# -- cocliques ----------------------------------------------------------------

def _clique_cover_bound(g: Graph, cand: int) -> int:
    count = 0
    while cand:
        low = cand & -cand
        v = low.bit_length() - 1
        clique_ok = g.adj[v] & cand
        cand ^= low
        while clique_ok:
            low = clique_ok & -clique_ok
            u = low.bit_length() - 1
            cand &= ~low
            clique_ok &= g.adj[u] & ~low
        count += 1
    return count


def max_coclique(g: Graph) -> tuple[int, list[int]]:
    """Maximum independent set by branch and bound.

    Among maximum cocliques the witness has the most outgoing edges, then is
    lexicographically smallest.
    """
    if g.n > MAX_COCLIQUE:
        raise ValueError(f"max_coclique supports n <= {MAX_COCLIQUE}, got {g.n}")
    deg = g.degrees()
    best = [0, 0, ()]

    def better(size, out, verts):
        if size != best[0]:
            return size > best[0]
        if out != best[1]:
            return out > best[1]
        return verts < best[2]

    def expand(chosen, cand, out):
        if not cand:
            verts = tuple(chosen)
            if better(len(chosen), out, verts):
                best[:] = [len(chosen), out, verts]
            return
        if len(chosen) + _clique_cover_bound(g, cand) < best[0]:
            return
        low = cand & -cand
        v = low.bit_length() - 1
        chosen.append(v)
        expand(chosen, cand & ~g.adj[v] & ~low, out + deg[v])
        chosen.pop()
        expand(chosen, cand & ~low, out)

    expand([], (1 << g.n) - 1, 0)
    return best[0], list(best[2])


def positive_eigenvalue_count(g: Graph) -> int:
    return inertia(char_poly(g.matrix()))[0]


# -- report -------------------------------------------------------------------

@dataclass
class ClassificationReport:
    n: int
    graph6: str
    in_h: bool
    residual_degree: int
    isolated_count: int
    in_h_prime: bool
    connected: bool
    n_pos: int
    e_rank: int
    shape: SpectrumShape
    char_poly: CharPoly
    alpha: Optional[int] = None
    alpha_witness: Optional[list[int]] = None
    family_matches: Optional[list[FamilyInstance]] = None
    forbidden_hits: Optional[list[tuple[str, list[int]]]] = None
    almost_equal: list[tuple[int, int]] = field(default_factory=list)

    @property
    def in_h2_prime(self) -> bool:
        return self.in_h_prime and self.connected and self.n_pos == 2

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "graph6": self.graph6,
            "in_h": self.in_h,
            "residual_degree": self.residual_degree,
            "isolated_count": self.isolated_count,
            "in_h_prime": self.in_h_prime,
            "in_h2_prime": self.in_h2_prime,
            "connected": self.connected,
            "n_pos": self.n_pos,
            "e_rank": self.e_rank,
            "alpha": self.alpha,
            "alpha_witness": self.alpha_witness,
            "family_matches": None if self.family_matches is None else [str(f) for f in self.family_matches],
            "forbidden_hits": None if self.forbidden_hits is None
            else [{"pattern": p, "vertices": vs} for p, vs in self.forbidden_hits],
            "almost_equal_columns": [list(p) for p in self.almost_equal],
            "shape": {"mult_minus2": self.shape.mult_minus2, "mult_zero": self.shape.mult_zero,
                      "residual": list(self.shape.residual)},
            "residual_roots": self.residual_roots(),
            "char_poly": list(self.char_poly.coeffs),
        }

    def residual_roots(self) -> list[float]:
        """Eigenvalues outside {-2, 0}, descending, 12 significant digits."""
        return [float(f"{x:.12g}") for x in real_roots(CharPoly(self.shape.residual))]

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_text(self) -> str:
        d = self.to_dict()
        lines = [
            f"graph6: {self.graph6}",
            f"n: {self.n}",
            f"char_poly: {self.char_poly}",
            f"shape: (x+2)^{self.shape.mult_minus2} x^{self.shape.mult_zero} ({poly_str(self.shape.residual)})",
            f"in_h: {str(self.in_h).lower()}",
            f"residual_degree: {self.residual_degree}",
            "residual_roots: " + (" ".join(f"{x:.12g}" for x in self.residual_roots()) or "none"),
            f"e_rank: {self.e_rank}",
            f"isolated_count: {self.isolated_count}",
            f"in_h_prime: {str(self.in_h_prime).lower()}",
            f"in_h2_prime: {str(self.in_h2_prime).lower()}",
            f"connected: {str(self.connected).lower()}",
            f"n_pos: {self.n_pos}",
            f"alpha: {'-' if self.alpha is None else self.alpha}",
            f"alpha_witness: {'-' if self.alpha_witness is None else ' '.join(map(str, self.alpha_witness))}",
            "family_matches: " + ("-" if d["family_matches"] is None else " ".join(d["family_matches"]) or "none"),
            "almost_equal_columns: " + (" ".join(f"{i}-{j}" for i, j in self.almost_equal) or "none"),
        ]
        if self.forbidden_hits is not None:
            hits = " ".join(f"{p}:{','.join(map(str, vs))}" for p, vs in self.forbidden_hits)
            lines.append("forbidden_hits: " + (hits or "none"))
        return "\n".join(lines)


def membership(g: Graph, scan_forbidden: bool = False) -> ClassificationReport:
    p = char_poly(g.matrix())
    shape = spectrum_shape(p)
    r = e_rank(g)
    in_h = r <= 2
    isolated = len(g.isolated_vertices())
    report = ClassificationReport(
        n=g.n,
        graph6=to_graph6(g),
        in_h=in_h,
        residual_degree=shape.residual_degree,
        isolated_count=isolated,
        in_h_prime=in_h and isolated == 0,
        connected=is_connected(g),
        n_pos=inertia(p)[0],
        e_rank=r,
        shape=shape,
        char_poly=p,
        almost_equal=almost_equal_columns(g),
    )
    if g.n <= MAX_CANONICAL:
        report.alpha, report.alpha_witness = max_coclique(g)
        report.family_matches = recognize(g)
    if scan_forbidden:
        report.forbidden_hits = forbidden_scan(g)
    return report


def in_h(g: Graph) -> bool:
    return e_rank(g) <= 2
