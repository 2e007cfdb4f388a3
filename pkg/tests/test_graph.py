import random

import pytest
from hypothesis import given, settings

from conftest import (all_labeled, brute_force_classes, brute_isomorphic, cycle, graphs,
                      multipartite, path, random_graph)
from hspectra.families import FamilyInstance, construct
from hspectra.graph import (Graph, Graph6Error, canonical_form, complement, components,
                            disjoint_union, from_graph6, induced_subgraph, is_connected,
                            isomorphic, to_graph6)


@pytest.mark.parametrize("text, n, edges", [
    ("@", 1, []),
    ("A_", 2, [(0, 1)]),
    ("Bw", 3, [(0, 1), (0, 2), (1, 2)]),
    ("?", 0, []),
])
def test_graph6_examples(text, n, edges):
    g = from_graph6(text)
    assert g == Graph.from_edges(n, edges)
    assert to_graph6(g) == text


def test_graph6_long_form_roundtrip():
    g = random_graph(random.Random(5), 64, 0.3)
    text = to_graph6(g)
    assert text[0] == "~"
    assert from_graph6(text) == g


@pytest.mark.parametrize("text, offset", [
    ("", 0),
    ("A", 1),          # missing data byte
    ("A_?", 2),        # trailing garbage
    ("B w", 1),        # space is below 63
    ("A\x7f", 1),      # DEL is above 126
    ("A`", 1),         # padding bit set
])
def test_graph6_errors_name_offset(text, offset):
    with pytest.raises(Graph6Error) as exc:
        from_graph6(text)
    assert exc.value.offset == offset
    assert f"byte {offset}" in str(exc.value)


def test_graph6_rejects_more_than_64_vertices():
    n = 65
    text = "~" + "".join(chr(63 + (n >> s & 63)) for s in (12, 6, 0)) + "?" * ((n * (n - 1) // 2 + 5) // 6)
    with pytest.raises(Graph6Error, match="exceeds"):
        from_graph6(text)


def test_graph6_roundtrip_random_sample():
    rng = random.Random(11)
    for _ in range(10_000):
        g = random_graph(rng, rng.randint(0, 8))
        assert from_graph6(to_graph6(g)) == g


def test_graph_invariants_enforced():
    with pytest.raises(ValueError, match="symmetric"):
        Graph(2, (0b10, 0))
    with pytest.raises(ValueError, match="loop"):
        Graph(1, (1,))
    with pytest.raises(ValueError, match="beyond"):
        Graph(2, (0b100, 0))


def test_complement_examples():
    assert complement(Graph.empty(3)) == Graph.complete(3)
    c4 = construct(FamilyInstance("CP", (2,)))
    assert isomorphic(complement(c4), disjoint_union(Graph.complete(2), Graph.complete(2)))


@given(graphs())
def test_complement_is_involution(g):
    assert complement(complement(g)) == g
    h = complement(g)
    assert g.edge_count() + h.edge_count() == g.n * (g.n - 1) // 2


def test_disjoint_union_examples():
    assert disjoint_union(Graph.empty(1), Graph.empty(1)) == Graph.empty(2)
    star = construct(FamilyInstance("G0", (4, 1)))
    assert disjoint_union(star, star) == construct(FamilyInstance("G3"))
    g = cycle(5)
    assert disjoint_union(g, Graph.empty(0)) == g
    with pytest.raises(ValueError):
        disjoint_union(Graph.empty(40), Graph.empty(30))


@settings(max_examples=50)
@given(graphs(max_n=4), graphs(max_n=4), graphs(max_n=4))
def test_disjoint_union_associative(a, b, c):
    left = disjoint_union(disjoint_union(a, b), c)
    right = disjoint_union(a, disjoint_union(b, c))
    assert isomorphic(left, right)


def test_induced_subgraph_examples():
    g = multipartite(2, 3, 3)
    assert isomorphic(induced_subgraph(g, [0, 1, 2, 3, 4]), multipartite(2, 3))
    assert induced_subgraph(cycle(5), [0, 1, 2]) == path(3)
    assert induced_subgraph(g, range(g.n)) == g
    with pytest.raises(ValueError):
        induced_subgraph(g, [9])


def test_components_examples():
    assert is_connected(cycle(4)) and len(components(cycle(4))) == 1
    g3 = construct(FamilyInstance("G3"))
    assert [len(c) for c in components(g3)] == [5, 5]
    assert len(components(Graph.empty(3))) == 3
    assert is_connected(Graph.empty(0)) and components(Graph.empty(0)) == []


def test_isomorphic_examples():
    assert isomorphic(cycle(4), multipartite(2, 2))
    assert not isomorphic(construct(FamilyInstance("G8", (2, 2))), construct(FamilyInstance("G11")))
    assert not isomorphic(Graph.empty(2), Graph.empty(3))


@given(graphs(max_n=10), graphs(max_n=10).map(lambda g: g.n))
def test_relabelled_graph_is_isomorphic(g, seed):
    perm = list(range(g.n))
    random.Random(seed).shuffle(perm)
    h = g.relabel(perm)
    assert canonical_form(h) == canonical_form(g)


def test_canonical_form_rejects_large_graphs():
    with pytest.raises(ValueError):
        canonical_form(Graph.empty(17))


@pytest.mark.parametrize("n", range(1, 7))
def test_canonical_form_matches_all_permutations_oracle(n):
    pairs, classes = brute_force_classes(n)
    seen = {}
    for code, g in enumerate(all_labeled(n)):
        cert = canonical_form(g)
        # equal certificates <=> equal oracle class, across every labelled graph
        assert seen.setdefault(cert, int(classes[code])) == int(classes[code])
    assert len(seen) == len(set(classes.tolist()))


def test_canonical_form_agrees_with_pairwise_brute_force():
    rng = random.Random(3)
    for _ in range(150):
        n = rng.randint(3, 6)
        g = random_graph(rng, n)
        h = random_graph(rng, n, g.edge_count() / max(1, n * (n - 1) / 2))
        assert isomorphic(g, h) == brute_isomorphic(g, h)


def test_symmetric_catalog_graphs_canonicalize():
    # large automorphism groups: 2^8 * 8! and the 15-vertex sporadic graph
    for f in (FamilyInstance("CP", (8,)), FamilyInstance("G7"), FamilyInstance("G5", (4, 4))):
        g = construct(f)
        perm = list(range(g.n))
        random.Random(0).shuffle(perm)
        assert canonical_form(g.relabel(perm)) == canonical_form(g)
