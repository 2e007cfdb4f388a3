import itertools
import json
import random

import numpy as np
import pytest
from hypothesis import given

from conftest import PETERSEN, all_labeled, cycle, graphs, multipartite, random_graph
from hspectra.classifier import (FORBIDDEN, almost_equal_columns, count_below, e_rank,
                                 equal_columns, find_induced, forbidden_scan, in_h, max_coclique,
                                 membership, pattern_premise, positive_eigenvalue_count,
                                 psd_rank2_check, shift_poly)
from hspectra.exact import CharPoly, graph_char_poly
from hspectra.families import FamilyInstance, construct, instances_up_to
from hspectra.harness import enumerate_nonisomorphic
from hspectra.graph import Graph, add_isolated, induced_subgraph, isomorphic
from hspectra.numeric import graph_eigenvalues

F = FamilyInstance


def brute_coclique(g):
    """Same tie-break as the library: size, outgoing edges, then lexicographic."""
    deg = g.degrees()
    best = None
    for r in range(g.n, -1, -1):
        for s in itertools.combinations(range(g.n), r):
            if any(g.has_edge(a, b) for a, b in itertools.combinations(s, 2)):
                continue
            key = (-sum(deg[v] for v in s), s)
            if best is None or key < best:
                best = key
        if best is not None:
            return r, list(best[1])


def brute_contains(g, pattern):
    for s in itertools.combinations(range(g.n), pattern.n):
        if isomorphic(induced_subgraph(g, s), pattern):
            return True
    return False


def test_membership_cocktail_party():
    r = membership(construct(F("CP", (3,))))
    assert r.in_h and r.in_h_prime and r.connected
    assert r.n_pos == 1 and not r.in_h2_prime
    assert r.alpha == 2
    assert set(r.family_matches) == {F("G2", (3, 2)), F("CP", (3,))}


def test_membership_c5():
    r = membership(cycle(5))
    assert not r.in_h
    assert r.residual_degree == 5
    assert r.family_matches == []


def test_membership_star_plus_isolated():
    g = add_isolated(multipartite(1, 4), 1)
    r = membership(g)
    assert r.in_h and not r.in_h_prime
    assert r.isolated_count == 1
    assert not r.connected


def test_positive_eigenvalue_count():
    assert positive_eigenvalue_count(multipartite(2, 3)) == 1
    assert positive_eigenvalue_count(construct(F("G6", (4,)))) == 2
    assert positive_eigenvalue_count(Graph.empty(4)) == 0


def test_max_coclique_examples():
    assert max_coclique(construct(F("CP", (3,))))[0] == 2
    assert max_coclique(multipartite(3, 2)) == (3, [0, 1, 2])
    size, witness = max_coclique(construct(F("G12")))
    assert size == 6 and witness == [0, 1, 2, 3, 4, 5]
    assert max_coclique(Graph.empty(0)) == (0, [])
    with pytest.raises(ValueError):
        max_coclique(Graph.empty(33))


def test_max_coclique_matches_subset_oracle():
    rng = random.Random(6)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 10))
        assert max_coclique(g) == brute_coclique(g)


def test_max_coclique_on_catalog():
    for f in instances_up_to(12):
        g = construct(f)
        assert max_coclique(g) == brute_coclique(g), f


def test_forbidden_scan_examples():
    hits = dict(forbidden_scan(multipartite(2, 3, 3)))
    assert "b" in hits
    assert isomorphic(induced_subgraph(multipartite(2, 3, 3), hits["b"]), FORBIDDEN["b"])
    assert "c" in dict(forbidden_scan(PETERSEN))
    assert brute_contains(PETERSEN, FORBIDDEN["c"])
    assert forbidden_scan(construct(F("G8", (2, 2)))) == []


def test_forbidden_scan_matches_subset_oracle():
    rng = random.Random(8)
    for _ in range(80):
        g = random_graph(rng, rng.randint(5, 8))
        found = {p for p, _ in forbidden_scan(g)}
        for pid, pattern in FORBIDDEN.items():
            assert (pid in found) == brute_contains(g, pattern), (g, pid)


def test_find_induced_returns_valid_embedding():
    rng = random.Random(10)
    for _ in range(100):
        g = random_graph(rng, rng.randint(4, 9))
        pattern = random_graph(rng, rng.randint(1, 4))
        emb = find_induced(g, pattern)
        if emb is None:
            assert not brute_contains(g, pattern)
            continue
        for a, b in itertools.combinations(range(pattern.n), 2):
            assert pattern.has_edge(a, b) == g.has_edge(emb[a], emb[b])


def test_almost_equal_columns_examples():
    # the two degree-4 vertices of K_{1,1,3} have equal closed columns
    assert (0, 1) in almost_equal_columns(multipartite(1, 1, 3))
    assert almost_equal_columns(construct(F("G6", (3,)))) == []
    assert almost_equal_columns(Graph.from_edges(2, [(0, 1)])) == [(0, 1)]
    assert equal_columns(Graph.from_edges(2, [(0, 1)])) == [(0, 1)]
    assert almost_equal_columns(multipartite(1, 2, 2)) != []


def test_almost_equal_columns_definition():
    rng = random.Random(12)
    for _ in range(100):
        g = random_graph(rng, rng.randint(2, 9))
        a = np.array(g.matrix()) + np.eye(g.n, dtype=int)
        expected = []
        for i, j in itertools.combinations(range(g.n), 2):
            d = int(np.abs(a[:, i] - a[:, j]).sum())
            if d == 0 or (d <= 2 and a[:, i].sum() != a[:, j].sum()):
                expected.append((i, j))
        assert almost_equal_columns(g) == expected


def test_psd_rank2_check():
    assert psd_rank2_check(construct(F("G7")))
    assert psd_rank2_check(construct(F("G6", (3,))))
    assert not psd_rank2_check(cycle(5))
    # only one positive eigenvalue: rank(E) is 1
    assert not psd_rank2_check(construct(F("CP", (3,))))


def test_psd_rank2_check_against_numeric():
    rng = random.Random(13)
    for _ in range(200):
        g = random_graph(rng, rng.randint(1, 9))
        a = np.array(g.matrix(), dtype=float)
        ev = np.linalg.eigvalsh(a @ a + 2 * a)
        expected = int((ev > 1e-8).sum()) == 2 and int((ev < -1e-8).sum()) == 0
        assert psd_rank2_check(g) == expected


@pytest.mark.parametrize("pid", sorted(FORBIDDEN))
def test_forbidden_pattern_premise(pid):
    g = FORBIDDEN[pid]
    premise = pattern_premise(g)
    assert premise["holds"]
    eig = graph_eigenvalues(g)
    assert premise["below_minus2"] == sum(1 for x in eig if x < -2 - 1e-9)
    assert premise["n_pos"] == sum(1 for x in eig if x > 1e-9)


def test_shift_and_count_below():
    # (x - 1)(x + 3): shifting by -2 gives (x - 3)(x + 1)
    assert shift_poly((-3, 2, 1), -2) == (-3, -2, 1)
    assert count_below(CharPoly((-3, 2, 1)), -2) == 1
    assert count_below(graph_char_poly(PETERSEN), -2) == 0


@pytest.mark.parametrize("n", range(1, 8))
def test_exact_and_numeric_membership_agree(n):
    # every labelled graph through n = 6, every isomorphism class at 7
    sample = all_labeled(n) if n <= 6 else enumerate_nonisomorphic(7)
    for g in sample:
        eig = graph_eigenvalues(g)
        outside = sum(1 for x in eig if abs(x) > 1e-7 and abs(x + 2) > 1e-7)
        assert (outside <= 2) == in_h(g), g


@given(graphs(min_n=1, max_n=9))
def test_isolated_vertices_do_not_change_membership(g):
    assert in_h(add_isolated(g, 2)) == in_h(g)
    core = [v for v in range(g.n) if g.degree(v)]
    assert in_h(induced_subgraph(g, core)) == in_h(g)


@given(graphs(max_n=8))
def test_e_rank_equals_residual_degree(g):
    # E = A(A + 2I) is nonzero exactly on eigenvalues outside {-2, 0}
    assert e_rank(g) == membership(g).residual_degree


def test_report_serialisations():
    r = membership(construct(F("G8", (2, 2))), scan_forbidden=True)
    d = json.loads(r.to_json())
    assert d["in_h2_prime"] and d["forbidden_hits"] == [] and d["almost_equal_columns"] == []
    assert d["family_matches"] == ["G8(2,2)"]
    assert d["residual_roots"] == [4.0, 2.0]
    text = r.to_text()
    assert "in_h: true" in text and "forbidden_hits: none" in text
    assert "family_matches: G8(2,2)" in text
    big = membership(Graph.empty(20))
    assert big.alpha is None and big.family_matches is None
