"""Simple undirected graphs stored as bitset adjacency rows.

Row ``i`` of ``Graph.adj`` is an int whose bit ``j`` is set when ``ij`` is an
edge.  Graphs are immutable and hashable (by labelled structure, not by
isomorphism class; use :func:`canonical_form` for the latter).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

MAX_VERTICES = 64
MAX_CANONICAL = 16


class Graph6Error(ValueError):
    """Malformed graph6 record; ``offset`` is the offending byte position."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self):
        if not 0 <= self.n <= MAX_VERTICES:
            raise ValueError(f"vertex count {self.n} outside 0..{MAX_VERTICES}")
        if len(self.adj) != self.n:
            raise ValueError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for i, row in enumerate(self.adj):
            if row & ~full:
                raise ValueError(f"row {i} has bits beyond vertex {self.n - 1}")
            if row >> i & 1:
                raise ValueError(f"loop at vertex {i}")
            r = row
            while r:
                low = r & -r
                j = low.bit_length() - 1
                if not self.adj[j] >> i & 1:
                    raise ValueError(f"edge {i}-{j} is not symmetric")
                r ^= low

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = [0] * n
        for i, j in edges:
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < n and 0 <= j < n):
                raise ValueError(f"edge {i}-{j} out of range for n={n}")
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        return cls(n, tuple(rows))

    @classmethod
    def from_matrix(cls, rows: Sequence[Sequence[int]]) -> "Graph":
        n = len(rows)
        adj = []
        for i, row in enumerate(rows):
            if len(row) != n:
                raise ValueError("adjacency matrix must be square")
            bits = 0
            for j, x in enumerate(row):
                if x not in (0, 1):
                    raise ValueError(f"entry ({i},{j}) = {x} is not 0/1")
                if x:
                    bits |= 1 << j
            adj.append(bits)
        return cls(n, tuple(adj))

    @classmethod
    def empty(cls, n: int) -> "Graph":
        return cls(n, (0,) * n)

    @classmethod
    def complete(cls, n: int) -> "Graph":
        full = (1 << n) - 1
        return cls(n, tuple(full ^ (1 << i) for i in range(n)))

    def has_edge(self, i: int, j: int) -> bool:
        return bool(self.adj[i] >> j & 1)

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.adj]

    def edge_count(self) -> int:
        return sum(r.bit_count() for r in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i in range(self.n) for j in range(i + 1, self.n) if self.adj[i] >> j & 1]

    def neighbors(self, v: int) -> list[int]:
        return [j for j in range(self.n) if self.adj[v] >> j & 1]

    def matrix(self) -> list[list[int]]:
        return [[self.adj[i] >> j & 1 for j in range(self.n)] for i in range(self.n)]

    def isolated_vertices(self) -> list[int]:
        return [v for v in range(self.n) if self.adj[v] == 0]

    def relabel(self, perm: Sequence[int]) -> "Graph":
        """Graph with vertex ``v`` renamed ``perm[v]``."""
        if sorted(perm) != list(range(self.n)):
            raise ValueError("relabelling must be a permutation of the vertices")
        rows = [0] * self.n
        for v in range(self.n):
            bits = 0
            r = self.adj[v]
            while r:
                low = r & -r
                bits |= 1 << perm[low.bit_length() - 1]
                r ^= low
            rows[perm[v]] = bits
        return Graph(self.n, tuple(rows))

    def __repr__(self):
        return f"Graph(n={self.n}, graph6={to_graph6(self)!r})"


# -- graph6 -------------------------------------------------------------------

def from_graph6(text: str) -> Graph:
    """Parse a short-form graph6 record (no header, n <= 64)."""
    data = text.strip("\n")
    if not data:
        raise Graph6Error("empty graph6 record", 0)
    for pos, ch in enumerate(data):
        if not 63 <= ord(ch) <= 126:
            raise Graph6Error(f"character {ch!r} outside 63..126", pos)
    first = ord(data[0]) - 63
    if first == 63:
        # N(n) = 126 followed by three 6-bit groups
        if len(data) < 4:
            raise Graph6Error("truncated long length field", len(data))
        n = 0
        for ch in data[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= 62:
            raise Graph6Error("long length form used for n <= 62", 0)
        if n > MAX_VERTICES:
            raise Graph6Error(f"n={n} exceeds {MAX_VERTICES}", 0)
        body_start = 4
    else:
        n = first
        body_start = 1
    nbits = n * (n - 1) // 2
    nbytes = (nbits + 5) // 6
    body = data[body_start:]
    if len(body) < nbytes:
        raise Graph6Error(f"expected {nbytes} data bytes, got {len(body)}", len(data))
    if len(body) > nbytes:
        raise Graph6Error("trailing garbage", body_start + nbytes)
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            byte = ord(body[k // 6]) - 63
            if byte >> (5 - k % 6) & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    if nbits % 6:
        pad = (ord(body[-1]) - 63) & ((1 << (6 - nbits % 6)) - 1)
        if pad:
            raise Graph6Error("nonzero padding bits", body_start + nbytes - 1)
    return Graph(n, tuple(rows))


def to_graph6(g: Graph) -> str:
    n = g.n
    if n <= 62:
        out = [chr(63 + n)]
    else:
        out = [chr(126)] + [chr(63 + (n >> s & 63)) for s in (12, 6, 0)]
    acc = 0
    k = 0
    for j in range(1, n):
        for i in range(j):
            acc = (acc << 1) | (g.adj[i] >> j & 1)
            k += 1
            if k == 6:
                out.append(chr(63 + acc))
                acc = k = 0
    if k:
        out.append(chr(63 + (acc << (6 - k))))
    return "".join(out)


# -- structural operations ----------------------------------------------------

def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, tuple(full ^ row ^ (1 << i) for i, row in enumerate(g.adj)))


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_VERTICES:
        raise ValueError(f"union has {g.n + h.n} vertices, limit is {MAX_VERTICES}")
    return Graph(g.n + h.n, g.adj + tuple(row << g.n for row in h.adj))


def add_isolated(g: Graph, count: int) -> Graph:
    if count < 0:
        raise ValueError("cannot add a negative number of vertices")
    return disjoint_union(g, Graph.empty(count))


def induced_subgraph(g: Graph, vs: Iterable[int]) -> Graph:
    keep = sorted(set(vs))
    for v in keep:
        if not 0 <= v < g.n:
            raise ValueError(f"vertex {v} out of range for n={g.n}")
    rows = []
    for v in keep:
        row = g.adj[v]
        rows.append(sum(1 << k for k, u in enumerate(keep) if row >> u & 1))
    return Graph(len(keep), tuple(rows))


def components(g: Graph) -> list[list[int]]:
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            low = frontier & -frontier
            frontier ^= low
            new = g.adj[low.bit_length() - 1] & ~comp
            comp |= new
            frontier |= new
        seen |= comp
        comps.append([u for u in range(g.n) if comp >> u & 1])
    return comps


def is_connected(g: Graph) -> bool:
    return len(components(g)) <= 1


def strip_isolated(g: Graph) -> tuple[Graph, int]:
    """Return the graph without isolated vertices and how many were removed."""
    iso = set(g.isolated_vertices())
    return induced_subgraph(g, (v for v in range(g.n) if v not in iso)), len(iso)


# -- canonical form -----------------------------------------------------------

@dataclass(frozen=True, order=True)
class CanonicalForm:
    cert: bytes


def _refine(adj, cells):
    """Coarsest equitable refinement; fragment order depends only on counts."""
    cells = [c for c in cells]
    s = 0
    while s < len(cells):
        mask = 0
        for v in cells[s]:
            mask |= 1 << v
        split = False
        new = []
        for c in cells:
            if len(c) == 1:
                new.append(c)
                continue
            groups = {}
            for v in c:
                groups.setdefault((adj[v] & mask).bit_count(), []).append(v)
            if len(groups) > 1:
                split = True
                new.extend(groups[k] for k in sorted(groups))
            else:
                new.append(c)
        cells = new
        # restart from the first cell after any split so the outcome is label-invariant
        s = 0 if split else s + 1
    return cells


def _individualize(cells, idx, v):
    cell = cells[idx]
    rest = [u for u in cell if u != v]
    return cells[:idx] + [[v], rest] + cells[idx + 1:]


def _leaf_code(adj, order):
    n = len(order)
    pos = [0] * n
    for p, v in enumerate(order):
        pos[v] = p
    code = 0
    for p, v in enumerate(order):
        row = 0
        r = adj[v]
        while r:
            low = r & -r
            row |= 1 << (n - 1 - pos[low.bit_length() - 1])
            r ^= low
        code = (code << n) | row
    return code


class _Search:
    def __init__(self, adj):
        self.adj = adj
        self.n = len(adj)
        self.first = None  # (code, order)
        self.best = None
        self.generators = []

    def run(self, cells):
        self._visit(_refine(self.adj, cells), [])
        return self.best

    def _orbit_rep(self, prefix, cell):
        """Map each vertex of ``cell`` to a representative of its orbit under
        the stored automorphisms that fix ``prefix`` pointwise."""
        parent = {v: v for v in range(self.n)}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for gamma in self.generators:
            if all(gamma[p] == p for p in prefix):
                for v in range(self.n):
                    a, b = find(v), find(gamma[v])
                    if a != b:
                        parent[max(a, b)] = min(a, b)
        return {v: find(v) for v in cell}

    def _visit(self, cells, prefix):
        """Returns the depth to unwind to (len(prefix) means keep going)."""
        depth = len(prefix)
        target = None
        for idx, c in enumerate(cells):
            if len(c) > 1 and (target is None or len(c) < len(cells[target])):
                target = idx
        if target is None:
            return self._leaf([c[0] for c in cells], prefix)
        explored = []
        for v in sorted(cells[target]):
            if explored:
                rep = self._orbit_rep(prefix, cells[target])
                if any(rep[u] == rep[v] for u in explored):
                    continue
            explored.append(v)
            child = _refine(self.adj, _individualize(cells, target, v))
            back = self._visit(child, prefix + [v])
            if back < depth:
                return back
        return depth

    def _leaf(self, order, prefix):
        code = _leaf_code(self.adj, order)
        depth = len(prefix)
        if self.first is None:
            self.first = (code, order, list(prefix))
            self.best = (code, order, list(prefix))
            return depth
        for ref in (self.first, self.best):
            if code == ref[0]:
                gamma = [0] * self.n
                for a, b in zip(ref[1], order):
                    gamma[a] = b
                self.generators.append(gamma)
                common = 0
                for a, b in zip(ref[2], prefix):
                    if a != b:
                        break
                    common += 1
                return common
        if code > self.best[0]:
            self.best = (code, order, list(prefix))
        return depth


def canonical_labeling(g: Graph) -> list[int]:
    """Vertex order (position -> vertex) giving the canonical adjacency matrix."""
    if g.n > MAX_CANONICAL:
        raise ValueError(f"canonical form supports n <= {MAX_CANONICAL}, got {g.n}")
    if g.n == 0:
        return []
    best = _Search(g.adj).run([list(range(g.n))])
    return best[1]


def canonical_graph(g: Graph) -> Graph:
    order = canonical_labeling(g)
    perm = [0] * g.n
    for p, v in enumerate(order):
        perm[v] = p
    return g.relabel(perm)


def canonical_form(g: Graph) -> CanonicalForm:
    order = canonical_labeling(g)
    code = _leaf_code(g.adj, order) if g.n else 0
    nbytes = (g.n * g.n + 7) // 8
    return CanonicalForm(bytes([g.n]) + code.to_bytes(nbytes, "big"))


def isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
