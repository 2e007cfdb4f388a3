"""Exhaustive small-n check that every graph in H is a catalog graph padded
with isolated vertices, and that every catalog graph shows up."""

from __future__ import annotations

import os
from collections import Counter, defaultdict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from functools import lru_cache
from itertools import combinations
from pathlib import Path
from typing import Iterator, Optional

from .classifier import e_rank
from .cospectral import nonzero_spectrum_class
from .exact import char_poly, spectrum_shape
from .families import FamilyInstance, catalog_instances, construct, recognize
from .graph import (Graph, Graph6Error, add_isolated, canonical_form, canonical_graph,
                    components, from_graph6, induced_subgraph, strip_isolated, to_graph6)

KNOWN_COUNTS = {0: 1, 1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}
MAX_BUILTIN = 7
MAX_LONG = 8
THREADS_ENV = "SPECTRAL_CLASS_THREADS"


class IngestError(ValueError):
    def __init__(self, errors: list[tuple[int, str]]):
        self.errors = errors
        first = "; ".join(f"line {ln}: {msg}" for ln, msg in errors[:5])
        more = f" (+{len(errors) - 5} more)" if len(errors) > 5 else ""
        super().__init__(first + more)


# -- enumeration --------------------------------------------------------------

def _extend_chunk(args):
    """Canonical children of a slice of parent graphs: one new vertex joined
    to every subset of the old ones."""
    n, parents = args
    out = {}
    for text in parents:
        parent = from_graph6(text)
        for mask in range(1 << (n - 1)):
            child = Graph(n, tuple(row | ((mask >> i & 1) << (n - 1)) for i, row in enumerate(parent.adj)) + (mask,))
            cert = canonical_form(child)
            if cert not in out:
                out[cert] = canonical_graph(child)
    return out


def _workers(threads: Optional[int]) -> int:
    if threads is None:
        threads = int(os.environ.get(THREADS_ENV, "1") or 1)
    return max(1, threads)


@lru_cache(maxsize=None)
def _level(n: int, chunks: int) -> tuple[Graph, ...]:
    if n == 0:
        return (Graph.empty(0),)
    parents = [to_graph6(g) for g in _level(n - 1, chunks)]
    size = -(-len(parents) // chunks)
    jobs = [(n, parents[i:i + size]) for i in range(0, len(parents), size)]
    merged: dict = {}
    if chunks > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=chunks) as pool:
            results = list(pool.map(_extend_chunk, jobs))
    else:
        results = [_extend_chunk(job) for job in jobs]
    for part in results:
        for cert, g in part.items():
            merged.setdefault(cert, g)
    return tuple(merged[c] for c in sorted(merged))


def enumerate_nonisomorphic(n: int, allow_long: bool = False, threads: Optional[int] = None) -> Iterator[Graph]:
    """One canonical representative per isomorphism class, sorted by certificate."""
    limit = MAX_LONG if allow_long else MAX_BUILTIN
    if not 0 <= n <= limit:
        hint = "" if allow_long or n > MAX_LONG else " (n = 8 needs allow_long=True)"
        raise ValueError(f"built-in enumeration covers 0 <= n <= {limit}, got {n}{hint}")
    return iter(_level(n, _workers(threads)))


def enumerate_labeled_dedup(n: int) -> list[Graph]:
    """Slow reference: every labelled graph, deduplicated by canonical form."""
    pairs = list(combinations(range(n), 2))
    seen = {}
    for code in range(1 << len(pairs)):
        g = Graph.from_edges(n, [p for k, p in enumerate(pairs) if code >> k & 1])
        seen.setdefault(canonical_form(g), canonical_graph(g))
    return [seen[c] for c in sorted(seen)]


# -- graph6 files -------------------------------------------------------------

def ingest_graph6(path, fail_fast: bool = False,
                  errors: Optional[list] = None) -> Iterator[tuple[int, Graph]]:
    """Yield ``(line_number, graph)`` for each record of a graph6 line file.

    Bad lines raise immediately with ``fail_fast``; otherwise they are
    appended to ``errors`` when given, or raised together after the last line.
    """
    collected: list[tuple[int, str]] = []
    with open(path, encoding="ascii", errors="replace") as fh:
        for lineno, line in enumerate(fh, start=1):
            text = line.rstrip("\r\n")
            if not text.strip():
                continue
            try:
                g = from_graph6(text.strip())
            except (Graph6Error, ValueError) as exc:
                if fail_fast:
                    raise IngestError([(lineno, str(exc))]) from exc
                collected.append((lineno, str(exc)))
                continue
            yield lineno, g
    if collected:
        if errors is not None:
            errors.extend(collected)
        else:
            raise IngestError(collected)


# -- verification -------------------------------------------------------------

@dataclass
class LevelSummary:
    n: int
    scanned: int
    expected_count: Optional[int]
    in_h: int
    in_h_prime: int
    failures: int
    cospectral_pairs: int
    predicted_cospectral_pairs: int
    failure_details: list[str] = field(default_factory=list)


@dataclass
class VerificationSummary:
    max_n: int
    source: str
    levels: list[LevelSummary]

    @property
    def failures(self) -> int:
        return sum(level.failures for level in self.levels)

    def to_dict(self) -> dict:
        return {"max_n": self.max_n, "source": self.source, "failures": self.failures,
                "levels": [asdict(level) for level in self.levels]}


def _is_star_or_cp(h: Graph) -> bool:
    labels = recognize(h)
    return any(f == FamilyInstance("G0", (4, 1)) or (f.id == "CP" and f.params[0] >= 2) for f in labels)


def decompose(g: Graph) -> Optional[str]:
    """Explain a member of H as catalog pieces, or None if it has no such form."""
    core, iso = strip_isolated(g)
    pad = f"+{iso}K1" if iso > 1 else "+K1" if iso else ""
    if core.n == 0:
        return f"{g.n}K1"
    labels = recognize(core)
    if labels:
        return min(labels, key=FamilyInstance.sort_key).__str__() + pad
    comps = components(core)
    if len(comps) == 2:
        parts = [induced_subgraph(core, c) for c in comps]
        if all(_is_star_or_cp(p) for p in parts):
            names = [str(min(recognize(p), key=FamilyInstance.sort_key)) for p in parts]
            return "+".join(names) + pad
    return None


def _predicted_pairs(n: int) -> int:
    """Cospectral pairs at n vertices predicted by the nonzero-spectrum classes."""
    classes: dict = defaultdict(set)
    for m in range(1, n + 1):
        for f in catalog_instances(m):
            g = add_isolated(construct(f), n - m)
            key = frozenset(nonzero_spectrum_class(f))
            classes[key].add(canonical_form(g))
    # the same graph can carry several labels whose classes coincide; merge by graph
    graph_class: dict = {}
    for key, certs in classes.items():
        for c in certs:
            graph_class.setdefault(c, set()).update(key)
    groups = Counter(frozenset(v) for v in graph_class.values())
    return sum(k * (k - 1) // 2 for k in groups.values())


def _verify_level(n: int, graphs: list[Graph], complete: bool, source: str) -> LevelSummary:
    details = []
    members = []
    for g in graphs:
        member = e_rank(g) <= 2
        residual = spectrum_shape(char_poly(g.matrix())).residual_degree
        if member != (residual <= 2):
            details.append(f"rank(E) and residual degree disagree on {g!r}")
        if member:
            members.append(g)
            if decompose(g) is None:
                details.append(f"{g!r} is in H but is not a padded catalog graph")
    certs = {canonical_form(g) for g in members}
    if complete:
        if n in KNOWN_COUNTS and len(graphs) != KNOWN_COUNTS[n]:
            details.append(f"enumerated {len(graphs)} graphs, expected {KNOWN_COUNTS[n]}")
        for m in range(1, n + 1):
            for f in catalog_instances(m):
                if canonical_form(add_isolated(construct(f), n - m)) not in certs:
                    details.append(f"{f} padded to {n} vertices missing from the scan")
    by_poly = Counter(char_poly(g.matrix()).coeffs for g in members)
    pairs = sum(k * (k - 1) // 2 for k in by_poly.values())
    predicted = _predicted_pairs(n)
    if complete and pairs != predicted:
        details.append(f"{pairs} cospectral pairs in H, classes predict {predicted}")
    return LevelSummary(
        n=n,
        scanned=len(graphs),
        expected_count=KNOWN_COUNTS.get(n) if complete else None,
        in_h=len(members),
        in_h_prime=sum(1 for g in members if not g.isolated_vertices()),
        failures=len(details),
        cospectral_pairs=pairs,
        predicted_cospectral_pairs=predicted,
        failure_details=details,
    )


def verify_classification(max_n: int, input_path=None, allow_long: bool = False,
                          threads: Optional[int] = None) -> VerificationSummary:
    if input_path is not None:
        by_n: dict[int, dict] = defaultdict(dict)
        for _, g in ingest_graph6(input_path):
            if g.n <= max_n:
                by_n[g.n].setdefault(canonical_form(g), g)
        levels = [_verify_level(n, [by_n[n][c] for c in sorted(by_n[n])], False, str(input_path))
                  for n in sorted(by_n)]
        return VerificationSummary(max_n, str(input_path), levels)
    levels = [_verify_level(n, list(enumerate_nonisomorphic(n, allow_long, threads)), True, "builtin")
              for n in range(1, max_n + 1)]
    return VerificationSummary(max_n, "builtin", levels)


def h_graphs(n: int, allow_long: bool = False) -> list[Graph]:
    return [g for g in enumerate_nonisomorphic(n, allow_long) if e_rank(g) <= 2]


__all__ = [
    "IngestError", "LevelSummary", "VerificationSummary", "decompose", "enumerate_labeled_dedup",
    "enumerate_nonisomorphic", "h_graphs", "ingest_graph6", "verify_classification",
]
