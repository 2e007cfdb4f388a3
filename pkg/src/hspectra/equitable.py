"""Equitable partitions and quotient matrices."""

from __future__ import annotations

from typing import Sequence

from .exact import CharPoly, char_poly, poly_divmod
from .graph import Graph


def quotient_matrix(g: Graph, parts: Sequence[Sequence[int]]) -> list[list[int]]:
    """Quotient matrix of an equitable partition; raises if not equitable."""
    seen = sorted(v for p in parts for v in p)
    if seen != list(range(g.n)):
        raise ValueError("parts must partition the vertex set")
    masks = [sum(1 << v for v in p) for p in parts]
    q = []
    for i, part in enumerate(parts):
        row = []
        for j, mask in enumerate(masks):
            sums = {(g.adj[v] & mask).bit_count() for v in part}
            if len(sums) != 1:
                raise ValueError(f"block ({i},{j}) has unequal row sums {sorted(sums)}")
            row.append(sums.pop())
        q.append(row)
    return q


def is_equitable(g: Graph, parts: Sequence[Sequence[int]]) -> bool:
    try:
        quotient_matrix(g, parts)
    except ValueError:
        return False
    return True


def quotient_divides(g: Graph, parts: Sequence[Sequence[int]]) -> bool:
    """True when the quotient's characteristic polynomial divides the graph's."""
    qp: CharPoly = char_poly(quotient_matrix(g, parts))
    _, rem = poly_divmod(char_poly(g.matrix()).coeffs, qp.coeffs)
    return rem == (0,)
