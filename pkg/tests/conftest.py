import itertools
import random

import numpy as np
import pytest
from hypothesis import settings, strategies as st

from hspectra.graph import Graph

# first numeric call pays the jit compile
settings.register_profile("default", deadline=None)
settings.load_profile("default")


@st.composite
def graphs(draw, min_n=0, max_n=8):
    n = draw(st.integers(min_n, max_n))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    bits = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, b in zip(pairs, bits) if b])


def random_graph(rng: random.Random, n: int, p: float | None = None) -> Graph:
    p = rng.random() if p is None else p
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if rng.random() < p])


def all_labeled(n):
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(1 << len(pairs)):
        yield Graph.from_edges(n, [p for k, p in enumerate(pairs) if code >> k & 1])


def brute_force_classes(n):
    """Isomorphism classes of all labelled graphs on n vertices via the
    minimum edge code over every permutation (vectorised over graphs).

    Returns (codes, class_id) where class_id[code] identifies the class of the
    labelled graph whose edge set is the bit pattern ``code`` over
    ``itertools.combinations(range(n), 2)``.
    """
    pairs = list(itertools.combinations(range(n), 2))
    index = {p: k for k, p in enumerate(pairs)}
    codes = np.arange(1 << len(pairs), dtype=np.int64)
    best = np.full(codes.shape, np.iinfo(np.int64).max)
    for perm in itertools.permutations(range(n)):
        image = np.zeros_like(codes)
        for k, (i, j) in enumerate(pairs):
            a, b = sorted((perm[i], perm[j]))
            image |= ((codes >> k) & 1) << index[(a, b)]
        best = np.minimum(best, image)
    return pairs, best


def brute_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    target = set(h.edges())
    edges = g.edges()
    for perm in itertools.permutations(range(g.n)):
        if all(tuple(sorted((perm[i], perm[j]))) in target for i, j in edges):
            return True
    return False


PETERSEN = Graph.from_edges(10, [(i, (i + 1) % 5) for i in range(5)]
                            + [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
                            + [(i, i + 5) for i in range(5)])


def multipartite(*sizes) -> Graph:
    labels = [c for c, s in enumerate(sizes) for _ in range(s)]
    n = len(labels)
    return Graph.from_edges(n, [(i, j) for i in range(n) for j in range(i + 1, n) if labels[i] != labels[j]])


def cycle(n) -> Graph:
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n) -> Graph:
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


@pytest.fixture
def rng():
    return random.Random(20240611)
