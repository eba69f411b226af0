import pytest
from hypothesis import given, strategies as st

from hypdeg import io
from hypdeg.core import Hypergraph, PartitionShape, enumerate_balanced_edges, enumerate_edges
from hypdeg.faces import face_split


def test_parse_uniform_with_comments():
    text = "# triangle pairs\n4 2\n1 2  # first\n\n2 3\n"
    K = io.parse_hypergraph(text)
    assert (K.n, K.k, K.edges) == (4, 2, [(1, 2), (2, 3)])


def test_parse_balanced():
    text = "lambda: 1 1\nparts: 2 2\n1 3\n2 4\n"
    K = io.parse_hypergraph(text)
    assert K.shape == PartitionShape((1, 1), (2, 2))
    assert K.edges == [(1, 3), (2, 4)]


@pytest.mark.parametrize("text,line,col", [
    ("4 2\n1 x\n", 2, 3),
    ("4 2\n1 2 3\n", 2, 1),
    ("4 2\n2 1\n", 2, 3),
    ("4 2\n1 5\n", 2, 3),
    ("4\n", 1, 1),
    ("lambda: 1 1\nparts 2 2\n", 2, 1),
    ("4 2\n1 2\n1 2\n", 3, 1),
    ("", 1, 1),
])
def test_parse_errors_carry_position(text, line, col):
    with pytest.raises(io.ParseError) as err:
        io.parse_hypergraph(text, source="f.hg")
    assert (err.value.line, err.value.column) == (line, col)
    assert str(err.value).startswith(f"f.hg:{line}:{col}:")


def test_vector_parts():
    shape = PartitionShape((1, 1), (2, 3))
    assert io.parse_vector("1 2 ; 3 4 5", shape) == [1, 2, 3, 4, 5]
    assert io.parse_vector("1 2 3 4 5 # flat", shape) == [1, 2, 3, 4, 5]
    with pytest.raises(io.ParseError):
        io.parse_vector("1 2 3 ; 4 5", shape)
    with pytest.raises(io.ParseError):
        io.parse_vector("1 2\n3\n")
    with pytest.raises(io.ParseError) as err:
        io.parse_vector("1 2 ; a")
    assert err.value.column == 7


@st.composite
def hypergraphs(draw):
    if draw(st.booleans()):
        shape = PartitionShape((1, 2), (draw(st.integers(1, 3)), draw(st.integers(2, 4))))
        edges = enumerate_balanced_edges(shape)
        n, k = shape.n, shape.k
    else:
        shape = None
        n = draw(st.integers(1, 7))
        k = draw(st.integers(1, n))
        edges = enumerate_edges(n, k)
    picked = draw(st.lists(st.sampled_from(edges), unique=True, max_size=15))
    return Hypergraph(n, k, picked, shape)


@given(hypergraphs())
def test_hypergraph_round_trip(K):
    assert io.parse_hypergraph(io.format_hypergraph(K)) == K


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=12))
def test_vector_round_trip(v):
    assert io.parse_vector(io.format_vector(v)) == v


@given(st.lists(st.integers(0, 9), min_size=5, max_size=5))
def test_balanced_vector_round_trip(v):
    shape = PartitionShape((1, 1), (2, 3))
    text = io.format_vector(v, shape)
    assert ";" in text
    assert io.parse_vector(text, shape) == v


@given(st.lists(st.integers(-3, 3), min_size=5, max_size=5))
def test_face_split_round_trip(w):
    split = face_split(enumerate_edges(5, 3), w)
    assert io.parse_face_split(io.format_face_split(split, 5, 3)) == split


def test_face_split_rejects_unknown_section():
    with pytest.raises(io.ParseError) as err:
        io.parse_face_split("[zero]\n3 1\n[other]\n")
    assert err.value.line == 3
