import random

import numpy as np
import pytest
from hypothesis import given

from conftest import PETERSEN, cycle, graphs, random_graph
from hspectra.families import FamilyInstance, construct
from hspectra.graph import induced_subgraph
from hspectra.numeric import JacobiError, eigenvalues, graph_eigenvalues, interlacing_holds


def test_two_by_two():
    assert eigenvalues([[0, 1], [1, 0]]) == pytest.approx([1, -1], abs=1e-12)


def test_g10_nontrivial_pair():
    eig = graph_eigenvalues(construct(FamilyInstance("G10")))
    assert eig[0] == pytest.approx(4.41421356, abs=1e-8)
    assert eig[1] == pytest.approx(1.58578644, abs=1e-8)
    assert eig[-1] == pytest.approx(-2, abs=1e-10)


def test_g7_extremes():
    eig = graph_eigenvalues(construct(FamilyInstance("G7")))
    assert eig[0] == pytest.approx(12.29150262, abs=1e-8)
    assert eig[-1] == pytest.approx(-2, abs=1e-10)


def test_rejects_non_symmetric_and_empty():
    with pytest.raises(ValueError, match="symmetric"):
        eigenvalues([[0, 1], [0, 0]])
    with pytest.raises(ValueError, match="square"):
        eigenvalues([[0, 1]])
    assert eigenvalues([]) == []


def test_jacobi_error_is_runtime_error():
    assert issubclass(JacobiError, RuntimeError)


@given(graphs(min_n=1, max_n=10))
def test_trace_identities(g):
    eig = np.array(graph_eigenvalues(g))
    assert abs(eig.sum()) < 1e-9
    assert abs((eig ** 2).sum() - 2 * g.edge_count()) < 1e-9
    assert list(eig) == sorted(eig, reverse=True)


def test_matches_lapack():
    rng = random.Random(4)
    for _ in range(300):
        g = random_graph(rng, rng.randint(1, 20))
        ours = graph_eigenvalues(g)
        ref = sorted(np.linalg.eigvalsh(np.array(g.matrix(), dtype=float)), reverse=True)
        assert np.max(np.abs(np.array(ours) - ref)) < 1e-9


def test_weighted_symmetric_matrix():
    rng = np.random.default_rng(0)
    b = rng.normal(size=(12, 12))
    m = b + b.T
    assert eigenvalues(m) == pytest.approx(sorted(np.linalg.eigvalsh(m), reverse=True), abs=1e-9)


def test_interlacing_examples():
    # deleting a vertex of C5 leaves P4
    sub = induced_subgraph(cycle(5), [0, 1, 2, 3])
    assert interlacing_holds(graph_eigenvalues(cycle(5)), graph_eigenvalues(sub))
    assert not interlacing_holds([1.0, 0.0, -1.0], [1.5, -0.5])
    assert not interlacing_holds([1.0, 0.0, -1.0], [0.5, -1.5])
    with pytest.raises(ValueError):
        interlacing_holds([1.0], [1.0, 0.0])


def test_interlacing_on_random_induced_subgraphs():
    rng = random.Random(9)
    for _ in range(1000):
        g = random_graph(rng, rng.randint(2, 10))
        keep = sorted(rng.sample(range(g.n), rng.randint(1, g.n)))
        h = induced_subgraph(g, keep)
        assert interlacing_holds(graph_eigenvalues(g), graph_eigenvalues(h), tol=1e-9)


def test_petersen_spectrum():
    eig = graph_eigenvalues(PETERSEN)
    assert eig == pytest.approx([3] + [1] * 5 + [-2] * 4, abs=1e-10)
