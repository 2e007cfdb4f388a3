from collections import defaultdict
from functools import lru_cache

import pytest

from conftest import multipartite
from hspectra.classifier import in_h
from hspectra.cospectral import (cospectral_mates, is_ds, nonzero_key, not_ds_closed_form,
                                 nonzero_spectrum_class, theorem6_class)
from hspectra.exact import CharPoly, graph_char_poly, nonzero_part
from hspectra.families import FamilyInstance, construct, instances_up_to, symbolic_spectrum
from hspectra.graph import Graph, add_isolated, canonical_form, isomorphic
from hspectra.harness import enumerate_nonisomorphic

F = FamilyInstance


@lru_cache(maxsize=None)
def key_of(f):
    return nonzero_key(construct(f))


def test_nonzero_key_examples():
    # K_{2,2}: x^2 (x^2 - 4), K_{4,1}: x^3 (x^2 - 4)
    assert nonzero_key(multipartite(2, 2)).coeffs == (-4, 0, 1)
    assert nonzero_key(multipartite(2, 2)) == nonzero_key(multipartite(4, 1))
    assert nonzero_key(Graph.empty(3)).coeffs == (1,)
    assert nonzero_key(add_isolated(multipartite(3, 3), 2)) == nonzero_key(multipartite(3, 3))


def test_class_examples():
    assert set(nonzero_spectrum_class(F("G8", (2, 2)))) == {
        F("G4", (3,)), F("G5", (3, 2)), F("G6", (4,)), F("G8", (2, 2)), F("G11")}
    assert nonzero_spectrum_class(F("G7")) == [F("G7")]
    assert set(nonzero_spectrum_class(F("G5", (3, 2)))) >= {F("G4", (3,)), F("G6", (4,))}
    assert set(nonzero_spectrum_class(F("G0", (4, 1)))) == {F("G0", (2, 2)), F("G0", (4, 1)), F("CP", (2,))}
    assert set(nonzero_spectrum_class(F("G6", (3,)))) == {F("G6", (3,)), F("G12")}


@pytest.mark.parametrize("f", instances_up_to(14), ids=str)
def test_class_members_share_nonzero_spectrum(f):
    for g in nonzero_spectrum_class(f):
        assert key_of(g) == key_of(f), (f, g)


def test_classes_are_complete_for_small_instances():
    # bucket a large catalog prefix by nonzero spectrum, using closed forms
    universe = instances_up_to(50)
    buckets = defaultdict(set)
    for g in universe:
        buckets[nonzero_part(CharPoly(symbolic_spectrum(g).expand()))].add(g)
    for f in instances_up_to(9):
        bucket = buckets[nonzero_part(CharPoly(symbolic_spectrum(f).expand()))]
        cls = set(nonzero_spectrum_class(f))
        assert cls <= set(universe)
        assert cls == bucket, f


def test_mates_examples():
    star = multipartite(4, 1)
    mates = cospectral_mates(star)
    assert [m.description for m in mates] == ["G0(2,2)+K1"]
    assert graph_char_poly(mates[0].graph) == graph_char_poly(star)

    descs = {m.description for m in cospectral_mates(construct(F("G8", (2, 2))))}
    assert descs == {"G11", "G6(4)+K1"}

    assert cospectral_mates(add_isolated(construct(F("CP", (3,))), 1)) == []


def test_mates_are_cospectral_and_distinct():
    for f in instances_up_to(12):
        g = construct(f)
        own = canonical_form(g)
        certs = set()
        for m in cospectral_mates(g):
            assert graph_char_poly(m.graph) == graph_char_poly(g)
            cert = canonical_form(m.graph)
            assert cert != own and cert not in certs
            certs.add(cert)


def test_mates_reject_graphs_outside_h():
    with pytest.raises(ValueError, match="not in H"):
        cospectral_mates(Graph.from_edges(5, [(i, (i + 1) % 5) for i in range(5)]))
    with pytest.raises(ValueError):
        cospectral_mates(Graph.empty(17))


def test_is_ds_examples():
    v = is_ds(multipartite(3, 3))
    assert v.is_ds and v.reason == "unique-in-class"
    v = is_ds(construct(F("G11")))
    assert not v.is_ds and v.reason == "theorem6-class"
    assert [m.description for m in v.mates] == ["G8(2,2)", "G6(4)+K1"]
    assert is_ds(construct(F("G7"))).is_ds
    v = is_ds(multipartite(4, 1))
    assert not v.is_ds and v.reason == "bipartite-divisor"
    with pytest.raises(ValueError, match="isolated"):
        is_ds(add_isolated(multipartite(2, 2), 1))


def brute_force_ds(n):
    """For each H' graph on n vertices: does any other graph on n vertices
    share its characteristic polynomial?"""
    graphs = list(enumerate_nonisomorphic(n))
    by_poly = defaultdict(int)
    for g in graphs:
        by_poly[graph_char_poly(g).coeffs] += 1
    return {canonical_form(g): by_poly[graph_char_poly(g).coeffs] == 1
            for g in graphs if in_h(g) and not g.isolated_vertices()}


@pytest.mark.parametrize("n", range(1, 8))
def test_is_ds_matches_brute_force(n):
    oracle = brute_force_ds(n)
    for g in enumerate_nonisomorphic(n):
        if canonical_form(g) in oracle:
            assert is_ds(g).is_ds == oracle[canonical_form(g)], g


def test_closed_form_list_matches_search():
    for f in instances_up_to(16):
        g = construct(f)
        if g.isolated_vertices():
            continue
        assert not_ds_closed_form(f) == (not is_ds(g).is_ds), f


def test_interface_alias():
    assert theorem6_class is nonzero_spectrum_class


def test_cp2_and_k22_are_one_graph():
    assert isomorphic(construct(F("CP", (2,))), construct(F("G0", (2, 2))))
    assert is_ds(construct(F("CP", (2,)))).is_ds
