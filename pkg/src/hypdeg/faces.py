"""Faces of edge zonotopes, the dimension lift, and coarsening weights.

Maximising an integer weight vector ``w`` over ``D(K)`` forces ``c_S = 1`` on
edges with ``w.e_S > 0`` and ``c_S = 0`` on edges with ``w.e_S < 0``; the
remaining zero-weight edges span the face. Weights may contain zeros.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from itertools import combinations, product
from typing import Sequence

from .core import Hyperedge, InputError, PartitionShape, degrees


@dataclass(frozen=True)
class FaceSplit:
    k_zero: tuple[Hyperedge, ...]
    k_plus: tuple[Hyperedge, ...]
    k_minus: tuple[Hyperedge, ...]

    def offset(self, n: int) -> list[int]:
        """Translation vector: sum of e_S over the positive edges."""
        return degrees(self.k_plus, n)


class Direction(str, enum.Enum):
    INTO_FACE = "into_face"
    OUT_OF_FACE = "out_of_face"


def edge_weight(edge: Hyperedge, w: Sequence[int]) -> int:
    return sum(w[v - 1] for v in edge)


def face_split(edges: Sequence[Hyperedge], w: Sequence[int]) -> FaceSplit:
    n = len(w)
    zero, plus, minus = [], [], []
    for edge in edges:
        if any(v < 1 or v > n for v in edge):
            raise InputError(f"edge {edge} does not fit a weight vector of length {n}")
        s = edge_weight(edge, w)
        (plus if s > 0 else minus if s < 0 else zero).append(tuple(edge))
    return FaceSplit(tuple(sorted(zero)), tuple(sorted(plus)), tuple(sorted(minus)))


def face_point_translate(p: Sequence[int], split: FaceSplit,
                         direction: Direction | str) -> list[int]:
    """Move a point between ``D(K^0)`` and the face of ``D(K)`` it translates to.

    Raises InputError when moving into the face yields a negative coordinate,
    since such a point cannot lie on the face.
    """
    direction = Direction(direction)
    n = len(p)
    shift = split.offset(n)
    if direction is Direction.OUT_OF_FACE:
        return [int(a) + b for a, b in zip(p, shift)]
    out = [int(a) - b for a, b in zip(p, shift)]
    if any(x < 0 for x in out):
        raise InputError("point does not lie on the face: translation has negative entries")
    return out


def lift_map(d: Sequence[int], k: int) -> list[int]:
    """Append the edge count ``sum(d) / k`` as a new coordinate."""
    total = sum(int(x) for x in d)
    if k < 1 or total % k:
        raise InputError(f"sum {total} is not divisible by k={k}")
    return [int(x) for x in d] + [total // k]


def lift_edges(edges: Sequence[Hyperedge], n: int) -> list[Hyperedge]:
    """Add vertex ``n + 1`` to every edge."""
    return [tuple(e) + (n + 1,) for e in edges]


def lift_weights(w: Sequence[int], k: int) -> list[int]:
    """Weights on ``n + 1`` vertices whose zero set among (k+1)-subsets is
    exactly the lift of the zero set of ``w`` among k-subsets.

    Every old weight is shifted by ``t`` and the new vertex gets ``-k t``;
    ``t`` exceeds every possible ``|w.e_S|`` on k+1 old vertices, so only edges
    through the new vertex can balance.
    """
    t = sum(abs(int(x)) for x in w) + 1
    return [int(x) + t for x in w] + [-k * t]


@dataclass(frozen=True)
class CoarseningMap:
    lam: tuple[int, ...]
    coarse_sizes: tuple[int, ...]
    fine_sizes: tuple[int, ...]
    # per coarse part: list of (fine index j, first vertex, last vertex), 1-based
    assignment: tuple[tuple[tuple[int, int, int], ...], ...]

    def block_of(self) -> dict[int, int]:
        """vertex -> 0-based fine block index j."""
        out = {}
        for blocks in self.assignment:
            for j, lo, hi in blocks:
                for v in range(lo, hi + 1):
                    out[v] = j
        return out

    def shape(self) -> PartitionShape:
        return PartitionShape(self.lam, self.coarse_sizes)

    def to_json(self) -> dict:
        return {"lambda": list(self.lam), "coarse": list(self.coarse_sizes),
                "fine": list(self.fine_sizes),
                "blocks": [[{"fine_index": j + 1, "vertices": [lo, hi]} for j, lo, hi in part]
                           for part in self.assignment]}


def is_coarsening(coarse: PartitionShape | Sequence[int], fine_sizes: Sequence[int],
                  lam: Sequence[int] | None = None) -> CoarseningMap | None:
    """Split each coarse part ``V_i`` into ``lambda_i`` blocks so that the
    block sizes are exactly ``fine_sizes`` as a multiset."""
    if isinstance(coarse, PartitionShape):
        lam = coarse.lam if lam is None else tuple(lam)
        sizes = coarse.part_sizes
    else:
        sizes = tuple(int(x) for x in coarse)
    if lam is None:
        raise InputError("lambda is required")
    lam = tuple(int(x) for x in lam)
    fine = tuple(int(x) for x in fine_sizes)
    if len(lam) != len(sizes) or sum(lam) != len(fine):
        return None

    used = [False] * len(fine)
    groups: list[tuple[int, ...]] = []

    def place(i: int) -> bool:
        if i == len(sizes):
            return True
        free = [j for j in range(len(fine)) if not used[j]]
        for pick in combinations(free, lam[i]):
            if sum(fine[j] for j in pick) != sizes[i]:
                continue
            for j in pick:
                used[j] = True
            groups.append(pick)
            if place(i + 1):
                return True
            groups.pop()
            for j in pick:
                used[j] = False
        return False

    if not place(0):
        return None
    assignment = []
    start = 1
    for size, pick in zip(sizes, groups):
        blocks = []
        lo = start
        for j in pick:
            blocks.append((j, lo, lo + fine[j] - 1))
            lo += fine[j]
        assignment.append(tuple(blocks))
        start += size
    return CoarseningMap(lam, sizes, fine, tuple(assignment))


def coarsening_weights(cmap: CoarseningMap, N: int) -> list[int]:
    """Weight ``-(1 + N + ... + N^(k-2))`` on block W_1 and ``N^(j-2)`` on W_j."""
    k = len(cmap.fine_sizes)
    if N <= max(cmap.fine_sizes):
        raise InputError(f"N={N} must exceed every fine block size (max {max(cmap.fine_sizes)})")
    first = -sum(N ** e for e in range(k - 1))
    per_block = [first] + [N ** (j - 2) for j in range(2, k + 1)]
    n = sum(cmap.coarse_sizes)
    block = cmap.block_of()
    return [per_block[block[v]] for v in range(1, n + 1)]


def transversal_edges(cmap: CoarseningMap) -> list[Hyperedge]:
    """Edges taking one vertex from every fine block."""
    ranges = {}
    for part in cmap.assignment:
        for j, lo, hi in part:
            ranges[j] = range(lo, hi + 1)
    out = [tuple(sorted(pick)) for pick in product(*(ranges[j] for j in sorted(ranges)))]
    return sorted(out)
