"""Integer inner loops, compiled with numba when available.

Set ``DEGSEQ_NUMBA=0`` to force the pure numpy / interpreted path. Both
paths share semantics exactly; ``tests/test_kernels.py`` checks them against
each other and ``benchmarks/bench_kernels.py`` times them.
"""
from __future__ import annotations

import logging
import os

import numpy as np

log = logging.getLogger(__name__)

REALIZABLE, INFEASIBLE, UNKNOWN = 0, 1, 2


def _env_wants_numba() -> bool:
    return os.environ.get("DEGSEQ_NUMBA", "1").strip().lower() not in ("0", "false", "no", "off")


try:
    import numba
    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    numba = None
    HAVE_NUMBA = False

USE_NUMBA = HAVE_NUMBA and _env_wants_numba()


def _dfs_realize(edges, demand, budget):
    """Include/exclude depth-first search for a 0/1 edge subset with degrees ``demand``.

    ``edges`` is an (m, k) array of 0-based vertex indices in branching order.
    Returns (status, chosen, nodes) where ``chosen`` flags the selected edges
    when status is REALIZABLE. ``budget`` <= 0 means no node limit.
    """
    m = edges.shape[0]
    k = edges.shape[1]
    n = demand.shape[0]
    dem = demand.copy()
    supply = np.zeros(n, dtype=np.int64)
    for i in range(m):
        for t in range(k):
            supply[edges[i, t]] += 1
    chosen = np.zeros(m, dtype=np.int8)
    total = 0
    for v in range(n):
        if dem[v] < 0 or dem[v] > supply[v]:
            return INFEASIBLE, chosen, 0
        total += dem[v]
    if k == 0 or total % k != 0:
        if total == 0:
            return REALIZABLE, chosen, 0
        return INFEASIBLE, chosen, 0

    # status per depth: 0 untried, 1 included, 2 excluded
    status = np.zeros(m, dtype=np.int8)
    nodes = 0
    depth = 0
    while True:
        if total == 0:
            for i in range(depth):
                if status[i] == 1:
                    chosen[i] = 1
            return REALIZABLE, chosen, nodes
        descended = False
        if depth < m and total <= k * (m - depth):
            nodes += 1
            if budget > 0 and nodes > budget:
                return UNKNOWN, chosen, nodes
            can_in = True
            for t in range(k):
                if dem[edges[depth, t]] < 1:
                    can_in = False
                    break
            if can_in:
                for t in range(k):
                    v = edges[depth, t]
                    dem[v] -= 1
                    supply[v] -= 1
                total -= k
                status[depth] = 1
                depth += 1
                descended = True
            else:
                can_out = True
                for t in range(k):
                    v = edges[depth, t]
                    if dem[v] > supply[v] - 1:
                        can_out = False
                        break
                if can_out:
                    for t in range(k):
                        supply[edges[depth, t]] -= 1
                    status[depth] = 2
                    depth += 1
                    descended = True
        if descended:
            continue
        # backtrack to the deepest include that can still be flipped to exclude
        while True:
            depth -= 1
            if depth < 0:
                return INFEASIBLE, chosen, nodes
            if status[depth] == 1:
                for t in range(k):
                    v = edges[depth, t]
                    dem[v] += 1
                    supply[v] += 1
                total += k
                can_out = True
                for t in range(k):
                    v = edges[depth, t]
                    if dem[v] > supply[v] - 1:
                        can_out = False
                        break
                if can_out:
                    for t in range(k):
                        supply[edges[depth, t]] -= 1
                    status[depth] = 2
                    depth += 1
                    break
                status[depth] = 0
            else:
                for t in range(k):
                    supply[edges[depth, t]] += 1
                status[depth] = 0


def _meet_counts_loop(incidence, subsets, modulus):
    """For each subset row: True iff every edge meets it in a multiple of
    ``modulus`` vertices and at least one edge meets it at all."""
    c = subsets.shape[0]
    m = incidence.shape[0]
    n = incidence.shape[1]
    out = np.zeros(c, dtype=np.bool_)
    for a in range(c):
        ok = True
        touched = False
        for e in range(m):
            s = 0
            for v in range(n):
                s += incidence[e, v] * subsets[a, v]
            if s % modulus != 0:
                ok = False
                break
            if s > 0:
                touched = True
        out[a] = ok and touched
    return out


def _meet_counts_numpy(incidence, subsets, modulus, chunk=4096):
    out = np.zeros(subsets.shape[0], dtype=np.bool_)
    if incidence.shape[0] == 0:
        return out
    inc_t = incidence.T
    for start in range(0, subsets.shape[0], chunk):
        meet = subsets[start:start + chunk] @ inc_t
        out[start:start + chunk] = np.all(meet % modulus == 0, axis=1) & np.any(meet > 0, axis=1)
    return out


def _support_violation_loop(points, functionals, support):
    """Index of the first functional a with a.p > h(a), or -1, per point."""
    P = points.shape[0]
    F = functionals.shape[0]
    n = points.shape[1]
    out = np.full(P, -1, dtype=np.int64)
    for i in range(P):
        for f in range(F):
            s = 0
            for v in range(n):
                s += functionals[f, v] * points[i, v]
            if s > support[f]:
                out[i] = f
                break
    return out


def _support_violation_numpy(points, functionals, support, chunk=2048):
    out = np.full(points.shape[0], -1, dtype=np.int64)
    if functionals.shape[0] == 0:
        return out
    for start in range(0, points.shape[0], chunk):
        viol = points[start:start + chunk] @ functionals.T > support[None, :]
        hit = viol.any(axis=1)
        first = viol.argmax(axis=1)
        out[start:start + chunk] = np.where(hit, first, -1)
    return out


if USE_NUMBA:
    _jit = numba.njit(cache=True, nogil=True)
    dfs_realize = _jit(_dfs_realize)
    meet_counts = _jit(_meet_counts_loop)
    support_violation = _jit(_support_violation_loop)
else:
    dfs_realize = _dfs_realize
    meet_counts = _meet_counts_numpy
    support_violation = _support_violation_numpy

BACKEND = "numba" if USE_NUMBA else "numpy"
log.debug("kernel backend: %s", BACKEND)


def realize_kernel(edges: np.ndarray, demand: np.ndarray, budget: int):
    edges = np.ascontiguousarray(edges, dtype=np.int64)
    if edges.ndim != 2:
        edges = edges.reshape(0, 1)
    return dfs_realize(edges, np.ascontiguousarray(demand, dtype=np.int64), np.int64(budget))


def obstruction_mask(incidence: np.ndarray, subsets: np.ndarray, modulus: int) -> np.ndarray:
    return meet_counts(np.ascontiguousarray(incidence, dtype=np.int64),
                       np.ascontiguousarray(subsets, dtype=np.int64), np.int64(modulus))


def first_violation(points: np.ndarray, functionals: np.ndarray, support: np.ndarray) -> np.ndarray:
    return support_violation(np.ascontiguousarray(points, dtype=np.int64),
                             np.ascontiguousarray(functionals, dtype=np.int64),
                             np.ascontiguousarray(support, dtype=np.int64))
