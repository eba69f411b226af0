"""Is a point the degree sequence of a subhypergraph of a given edge set?

Each allowed edge is used at most once. The exhaustive search lives in
:mod:`hypdeg.kernels`; the classical graph and bipartite deciders here are
independent inequality tests used to cross-check it.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from . import kernels
from .core import Hyperedge, Hypergraph, InputError


class Status(str, enum.Enum):
    REALIZABLE = "Realizable"
    INFEASIBLE = "Infeasible"
    UNKNOWN = "Unknown"


_STATUS = {kernels.REALIZABLE: Status.REALIZABLE,
           kernels.INFEASIBLE: Status.INFEASIBLE,
           kernels.UNKNOWN: Status.UNKNOWN}


@dataclass
class RealizabilityResult:
    status: Status
    witness: Hypergraph | None
    nodes_explored: int

    def to_json(self) -> dict:
        out = {"status": self.status.value, "nodes_explored": self.nodes_explored}
        if self.witness is not None:
            out["witness"] = [list(e) for e in self.witness.edges]
        return out


def realize_subhypergraph(p: Sequence[int], edges: Sequence[Hyperedge], budget: int = 0,
                          lp_prune: bool = False) -> RealizabilityResult:
    """Search for ``K`` inside ``edges`` with ``degree_sequence(K) == p``.

    ``budget`` caps the number of search nodes; 0 means unlimited, in which
    case the answer is never Unknown. ``lp_prune`` first rejects targets
    outside the zonotope of ``edges`` with the exact LP; it never changes the
    answer.
    """
    n = len(p)
    p = [int(x) for x in p]
    edges = [tuple(e) for e in edges]
    if len(set(edges)) != len(edges):
        raise InputError("allowed edges must be distinct")
    if edges:
        k = len(edges[0])
        if any(len(e) != k for e in edges):
            raise InputError("allowed edges must all have the same size")
        if any(v < 1 or v > n for e in edges for v in e):
            raise InputError(f"an allowed edge does not fit a point of length {n}")
    else:
        k = 1
    if any(x < 0 for x in p):
        return RealizabilityResult(Status.INFEASIBLE, None, 0)
    if lp_prune and edges:
        from .zonotope import Infeasible, zonotope_member
        if isinstance(zonotope_member(p, edges), Infeasible):
            return RealizabilityResult(Status.INFEASIBLE, None, 0)

    arr = np.array(edges, dtype=np.int64).reshape(len(edges), k) - 1
    code, chosen, nodes = kernels.realize_kernel(arr, np.array(p, dtype=np.int64), budget)
    status = _STATUS[int(code)]
    witness = None
    if status is Status.REALIZABLE:
        picked = [edges[i] for i in range(len(edges)) if chosen[i]]
        witness = Hypergraph(n, k, picked)
    return RealizabilityResult(status, witness, int(nodes))


def erdos_gallai(d: Sequence[int]) -> bool:
    """Graphical test: even sum plus the Erdos-Gallai inequalities."""
    d = sorted((int(x) for x in d), reverse=True)
    if any(x < 0 for x in d) or sum(d) % 2:
        return False
    n = len(d)
    lhs = 0
    for r in range(1, n + 1):
        lhs += d[r - 1]
        rhs = r * (r - 1) + sum(min(x, r) for x in d[r:])
        if lhs > rhs:
            return False
    return True


def conjugate(parts: Sequence[int], length: int | None = None) -> list[int]:
    """Conjugate partition: entry q-1 counts the parts that are >= q."""
    parts = [int(x) for x in parts if x > 0]
    top = max(parts, default=0) if length is None else length
    return [sum(1 for x in parts if x >= q) for q in range(1, top + 1)]


def gale_ryser(rows: Sequence[int], cols: Sequence[int]) -> bool:
    """Is there a 0/1 matrix with these row and column sums?

    Sorted column sums must be dominated by the conjugate of the row sums:
    for every q, ``c_1 + ... + c_q <= sum_i min(r_i, q)``.
    """
    rows = [int(x) for x in rows]
    cols = sorted((int(x) for x in cols), reverse=True)
    if any(x < 0 for x in rows) or any(x < 0 for x in cols):
        return False
    if sum(rows) != sum(cols):
        return False
    lhs = 0
    for q, c in enumerate(cols, start=1):
        lhs += c
        if lhs > sum(min(r, q) for r in rows):
            return False
    return True
