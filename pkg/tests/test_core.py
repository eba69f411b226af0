from math import comb, prod

import pytest
from hypothesis import given, strategies as st

from hypdeg.core import (Hypergraph, InputError, PartitionShape, degrees, enumerate_balanced_edges,
                         enumerate_edges, incidence_matrix, lattice_member_balanced,
                         lattice_member_uniform, make_edge)


def test_make_edge_sorts_and_validates():
    assert make_edge([3, 1, 2], n=4, k=3) == (1, 2, 3)
    with pytest.raises(InputError):
        make_edge([1, 1, 2])
    with pytest.raises(InputError):
        make_edge([1, 2], k=3)
    with pytest.raises(InputError):
        make_edge([0, 1])
    with pytest.raises(InputError):
        make_edge([1, 5], n=4)


def test_shape_validation():
    with pytest.raises(InputError):
        PartitionShape((1, 1), (3,))
    with pytest.raises(InputError):
        PartitionShape((), ())
    with pytest.raises(InputError):
        PartitionShape((0, 1), (2, 2))
    s = PartitionShape((2, 1), (4, 3))
    assert (s.k, s.n, s.p) == (3, 7, 2)
    assert [list(r) for r in s.part_ranges()] == [[1, 2, 3, 4], [5, 6, 7]]
    assert s.split([1, 2, 3, 4, 5, 6, 7]) == [[1, 2, 3, 4], [5, 6, 7]]
    assert s.is_balanced((1, 2, 5)) and not s.is_balanced((1, 5, 6))


def test_hypergraph_rejects_duplicates_and_keeps_order():
    K = Hypergraph(4, 2, [(3, 4), (1, 2)])
    assert K.edges == [(1, 2), (3, 4)]
    with pytest.raises(InputError):
        Hypergraph(4, 2, [(1, 2), (2, 1)])
    with pytest.raises(InputError):
        K.add((2, 1))
    with pytest.raises(InputError):
        Hypergraph(4, 2, [(1, 2)], PartitionShape((1, 1), (2, 3)))
    shaped = Hypergraph(4, 2, [(1, 3)], PartitionShape((1, 1), (2, 2)))
    with pytest.raises(InputError):
        shaped.add((1, 2))


@pytest.mark.parametrize("n,k", [(1, 1), (4, 2), (5, 3), (6, 6)])
def test_enumerate_edges_count(n, k):
    edges = enumerate_edges(n, k)
    assert len(edges) == comb(n, k)
    assert edges == sorted(edges)


def test_enumerate_edges_rejects_bad_k():
    with pytest.raises(InputError):
        enumerate_edges(2, 3)
    with pytest.raises(InputError):
        enumerate_edges(3, 0)


@pytest.mark.parametrize("lam,sizes", [((1, 1, 1), (5, 6, 6)), ((2, 1), (4, 3)), ((3,), (5,))])
def test_balanced_edges_count(lam, sizes):
    shape = PartitionShape(lam, sizes)
    edges = enumerate_balanced_edges(shape)
    assert len(edges) == prod(comb(n, l) for n, l in zip(sizes, lam))
    assert all(shape.is_balanced(e) for e in edges)


def test_lattice_examples():
    assert lattice_member_uniform([2, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 1], 3)
    assert not lattice_member_uniform([3, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 1], 3)
    with pytest.raises(InputError):
        lattice_member_uniform([1, 1, 1], 3)
    shape = PartitionShape((1, 1, 1), (5, 6, 6))
    assert lattice_member_balanced([10, 8, 4, 2, 0, 1, 3, 5, 7, 2, 6, 1, 3, 5, 7, 2, 6], shape)
    assert not lattice_member_balanced([11, 8, 4, 2, 0, 1, 3, 5, 7, 2, 6, 1, 3, 5, 7, 2, 6], shape)
    with pytest.raises(InputError):
        lattice_member_balanced([1, 1, 1], PartitionShape((1, 1), (1, 2)))


def test_incidence_matrix_rows():
    mat = incidence_matrix([(1, 3), (2, 3)], 3)
    assert mat.tolist() == [[1, 0, 1], [0, 1, 1]]
    with pytest.raises(InputError):
        incidence_matrix([(1, 4)], 3)


@st.composite
def uniform_subgraphs(draw):
    n = draw(st.integers(4, 7))
    k = draw(st.integers(1, n - 1))
    edges = enumerate_edges(n, k)
    picked = draw(st.lists(st.sampled_from(edges), unique=True, max_size=12))
    return n, k, picked


@given(uniform_subgraphs())
def test_degree_sequences_lie_in_lattice(data):
    n, k, picked = data
    d = degrees(picked, n)
    assert sum(d) == k * len(picked)
    assert lattice_member_uniform(d, k)


@given(st.lists(st.integers(0, 6), min_size=3, max_size=3), st.data())
def test_balanced_degree_sequences_lie_in_lattice(sizes_off, data):
    shape = PartitionShape((2, 1), (3 + sizes_off[0] % 3, 2 + sizes_off[1] % 3))
    edges = enumerate_balanced_edges(shape)
    picked = data.draw(st.lists(st.sampled_from(edges), unique=True, max_size=10))
    assert lattice_member_balanced(degrees(picked, shape.n), shape)
