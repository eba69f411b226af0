"""Hyperedges, hypergraphs, degree sequences and lattice membership.

Vertices are 1-based. For lambda-balanced objects the parts occupy
consecutive global index ranges in declaration order, so part ``i`` of a
shape with sizes ``(5, 6, 6)`` owns vertices ``1..5``, ``6..11``, ``12..17``.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, product
from typing import Iterable, Sequence

import numpy as np

Hyperedge = tuple[int, ...]


class InputError(ValueError):
    """Raised for malformed or out-of-range inputs."""


def make_edge(vertices: Iterable[int], n: int | None = None, k: int | None = None) -> Hyperedge:
    edge = tuple(sorted(int(v) for v in vertices))
    if len(set(edge)) != len(edge):
        raise InputError(f"repeated vertex in edge {edge}")
    if k is not None and len(edge) != k:
        raise InputError(f"edge {edge} has {len(edge)} vertices, expected {k}")
    if edge and edge[0] < 1:
        raise InputError(f"edge {edge} has a vertex below 1")
    if n is not None and edge and edge[-1] > n:
        raise InputError(f"edge {edge} has a vertex above n={n}")
    return edge


@dataclass(frozen=True)
class PartitionShape:
    """Part sizes ``n_1..n_p`` together with the per-part edge quota ``lambda``."""

    lam: tuple[int, ...]
    part_sizes: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "lam", tuple(int(x) for x in self.lam))
        object.__setattr__(self, "part_sizes", tuple(int(x) for x in self.part_sizes))
        if not self.lam:
            raise InputError("lambda must be non-empty")
        if len(self.lam) != len(self.part_sizes):
            raise InputError(
                f"lambda has {len(self.lam)} parts but {len(self.part_sizes)} part sizes given")
        if any(x < 1 for x in self.lam):
            raise InputError("lambda entries must be positive")
        if any(x < 1 for x in self.part_sizes):
            raise InputError("part sizes must be positive")

    @property
    def k(self) -> int:
        return sum(self.lam)

    @property
    def n(self) -> int:
        return sum(self.part_sizes)

    @property
    def p(self) -> int:
        return len(self.lam)

    def part_ranges(self) -> list[range]:
        out, start = [], 1
        for size in self.part_sizes:
            out.append(range(start, start + size))
            start += size
        return out

    def part_of(self, vertex: int) -> int:
        for i, r in enumerate(self.part_ranges()):
            if vertex in r:
                return i
        raise InputError(f"vertex {vertex} outside shape with n={self.n}")

    def is_balanced(self, edge: Hyperedge) -> bool:
        counts = [0] * self.p
        for v in edge:
            counts[self.part_of(v)] += 1
        return tuple(counts) == self.lam

    def split(self, values: Sequence[int]) -> list[list[int]]:
        """Cut a flat vector into its per-part pieces."""
        if len(values) != self.n:
            raise InputError(f"vector of length {len(values)} does not match shape with n={self.n}")
        return [list(values[r.start - 1:r.stop - 1]) for r in self.part_ranges()]


@dataclass
class Hypergraph:
    """A simple k-uniform hypergraph; edges are kept in lex order."""

    n: int
    k: int
    edges: list[Hyperedge] = field(default_factory=list)
    shape: PartitionShape | None = None

    def __post_init__(self):
        if self.k < 1:
            raise InputError("k must be positive")
        if self.n < 0:
            raise InputError("n must be non-negative")
        if self.shape is not None and (self.shape.n != self.n or self.shape.k != self.k):
            raise InputError("shape does not match (n, k)")
        raw, self.edges = self.edges, []
        seen: set[Hyperedge] = set()
        for e in raw:
            edge = make_edge(e, self.n, self.k)
            if edge in seen:
                raise InputError(f"duplicate edge {edge}")
            if self.shape is not None and not self.shape.is_balanced(edge):
                raise InputError(f"edge {edge} is not balanced for lambda={self.shape.lam}")
            seen.add(edge)
            self.edges.append(edge)
        self.edges.sort()

    def add(self, edge: Iterable[int]) -> None:
        e = make_edge(edge, self.n, self.k)
        if e in self.edges:
            raise InputError(f"duplicate edge {e}")
        if self.shape is not None and not self.shape.is_balanced(e):
            raise InputError(f"edge {e} is not balanced for lambda={self.shape.lam}")
        self.edges.append(e)
        self.edges.sort()

    def __len__(self) -> int:
        return len(self.edges)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Hypergraph):
            return NotImplemented
        return (self.n, self.k, self.edges, self.shape) == (other.n, other.k, other.edges, other.shape)


def enumerate_edges(n: int, k: int) -> list[Hyperedge]:
    """All k-subsets of ``[n]`` in lexicographic order."""
    if k < 1 or k > n:
        raise InputError(f"need 1 <= k <= n, got n={n}, k={k}")
    return list(combinations(range(1, n + 1), k))


def enumerate_balanced_edges(shape: PartitionShape) -> list[Hyperedge]:
    for lam_i, n_i in zip(shape.lam, shape.part_sizes):
        if n_i < lam_i:
            raise InputError(f"part of size {n_i} cannot host {lam_i} vertices per edge")
    per_part = [list(combinations(r, lam_i)) for r, lam_i in zip(shape.part_ranges(), shape.lam)]
    edges = [tuple(v for chunk in pick for v in chunk) for pick in product(*per_part)]
    edges.sort()
    return edges


def incidence_matrix(edges: Sequence[Hyperedge], n: int) -> np.ndarray:
    """Rows are the 0/1 vectors e_S."""
    mat = np.zeros((len(edges), n), dtype=np.int64)
    for row, edge in enumerate(edges):
        for v in edge:
            if v < 1 or v > n:
                raise InputError(f"edge {edge} does not fit in n={n}")
            mat[row, v - 1] = 1
    return mat


def edge_vector(edge: Hyperedge, n: int) -> list[int]:
    vec = [0] * n
    for v in edge:
        vec[v - 1] += 1
    return vec


def degrees(edges: Iterable[Hyperedge], n: int) -> list[int]:
    """Degree vector of an edge collection on ``n`` vertices."""
    out = [0] * n
    for edge in edges:
        for v in edge:
            if v < 1 or v > n:
                raise InputError(f"edge {edge} does not fit in n={n}")
            out[v - 1] += 1
    return out


def degree_sequence(K: Hypergraph) -> list[int]:
    return degrees(K.edges, K.n)


def lattice_member_uniform(p: Sequence[int], k: int) -> bool:
    n = len(p)
    if n <= k:
        raise InputError(f"the sum-divisibility lattice needs n > k (n={n}, k={k})")
    return sum(int(x) for x in p) % k == 0


def lattice_member_balanced(p: Sequence[int], shape: PartitionShape) -> bool:
    for lam_i, n_i in zip(shape.lam, shape.part_sizes):
        if n_i <= lam_i:
            raise InputError(f"lattice description needs n_i > lambda_i (got {n_i} <= {lam_i})")
    sums = [sum(int(x) for x in part) for part in shape.split(p)]
    if sums[0] % shape.lam[0]:
        return False
    q = sums[0] // shape.lam[0]
    return all(s == lam_i * q for s, lam_i in zip(sums, shape.lam))
