"""Desk-scale searches for lattice points of D that are not degree sequences.

Nothing reported here rests on floating point: candidate generators may be
heuristic, but every point that leaves this module carries an exact
zonotope witness, a lattice check, and either an obstruction witness or an
exhaustive Infeasible search result.
"""
from __future__ import annotations

import logging
import math
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations, combinations_with_replacement, permutations, product
from typing import Sequence

import numpy as np

from . import kernels
from .certificates import ObstructionWitness, obstruction_check
from .core import (Hyperedge, InputError, PartitionShape, degrees, enumerate_edges,
                   incidence_matrix, lattice_member_balanced, lattice_member_uniform)
from .faces import face_split
from .realizability import RealizabilityResult, Status, realize_subhypergraph
from .zonotope import Feasible, zonotope_member

log = logging.getLogger(__name__)

DEFAULT_SIZE_CAP = 8
# {-1,0,1}^n cheap separators are only tried up to this dimension
PREFILTER_MAX_N = 9


@dataclass
class SearchReport:
    n: int
    k: int
    cap: int
    budget: int
    shards: int
    symmetric: bool
    points_examined: int = 0
    members_of_D_cap_L: int = 0
    realizable: int = 0
    prefilter_rejected: int = 0
    lp_calls: int = 0
    nonrealizable_points: list[tuple[int, ...]] = field(default_factory=list)
    status: str = "complete"

    def to_json(self) -> dict:
        return {
            "parameters": {"n": self.n, "k": self.k, "cap": self.cap, "budget": self.budget,
                           "shards": self.shards, "symmetric": self.symmetric},
            "points_examined": self.points_examined,
            "members_of_D_cap_L": self.members_of_D_cap_L,
            "realizable": self.realizable,
            "prefilter_rejected": self.prefilter_rejected,
            "lp_calls": self.lp_calls,
            "nonrealizable_points": [list(p) for p in self.nonrealizable_points],
            "status": self.status,
        }


def sign_functionals(n: int) -> np.ndarray:
    """All nonzero vectors in {-1, 0, 1}^n."""
    rows = [a for a in product((-1, 0, 1), repeat=n) if any(a)]
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


def support_values(functionals: np.ndarray, incidence: np.ndarray) -> np.ndarray:
    """h(a) = sum_S max(0, a.e_S) for every row a."""
    if incidence.shape[0] == 0:
        return np.zeros(functionals.shape[0], dtype=np.int64)
    return np.clip(functionals @ incidence.T, 0, None).sum(axis=1)


def orbit_size(point: Sequence[int]) -> int:
    out = math.factorial(len(point))
    for mult in Counter(point).values():
        out //= math.factorial(mult)
    return out


def _classify(points: list[tuple[int, ...]], edges: list[Hyperedge], budget: int,
              weights: list[int], prefilter: tuple[np.ndarray, np.ndarray] | None):
    """Classify candidate lattice points; returns counters and the bad points."""
    counts = Counter()
    bad = []
    truncated = False
    if not points:
        return counts, bad, truncated
    arr = np.array(points, dtype=np.int64)
    if prefilter is not None:
        viol = kernels.first_violation(arr, prefilter[0], prefilter[1])
    else:
        viol = np.full(len(points), -1)
    for p, v, wt in zip(points, viol, weights):
        counts["examined"] += wt
        if v >= 0:
            counts["prefilter_rejected"] += wt
            continue
        res = realize_subhypergraph(p, edges, budget=budget)
        if res.status is Status.REALIZABLE:
            counts["members"] += wt
            counts["realizable"] += wt
            continue
        if res.status is Status.UNKNOWN:
            truncated = True
            continue
        counts["lp_calls"] += 1
        if isinstance(zonotope_member(p, edges), Feasible):
            counts["members"] += wt
            bad.append(p)
    return counts, bad, truncated


def _exhaustive_shard(args):
    n, k, cap, budget, symmetric, firsts = args
    edges = enumerate_edges(n, k)
    prefilter = None
    if n <= PREFILTER_MAX_N:
        funcs = sign_functionals(n)
        prefilter = (funcs, support_values(funcs, incidence_matrix(edges, n)))
    points, weights = [], []
    for first in firsts:
        if symmetric:
            for rest in combinations_with_replacement(range(first, -1, -1), n - 1):
                p = (first,) + rest
                if sum(p) % k == 0:
                    points.append(p)
                    weights.append(orbit_size(p))
        else:
            for rest in product(range(cap + 1), repeat=n - 1):
                p = (first,) + rest
                if sum(p) % k == 0:
                    points.append(p)
                    weights.append(1)
    counts, bad, truncated = _classify(points, edges, budget, weights, prefilter)
    return dict(counts), bad, truncated


def exhaustive_check(n: int, k: int, cap: int, budget: int = 0, shards: int = 1,
                     symmetric: bool = True, workers: int | None = None) -> SearchReport:
    """Examine every integer point of ``[0, cap]^n`` with sum divisible by k.

    With ``symmetric`` only non-increasing representatives are classified and
    counts are weighted by orbit size; membership and realizability over the
    complete edge set are invariant under vertex permutations. Shards split
    the work by first coordinate and are merged deterministically.
    """
    if n <= k:
        raise InputError(f"need n > k for the lattice description (n={n}, k={k})")
    if cap < 0 or cap > math.comb(n - 1, k - 1):
        raise InputError(f"cap must lie in [0, C(n-1, k-1)] = [0, {math.comb(n - 1, k - 1)}]")
    shards = max(1, int(shards))
    firsts = list(range(cap + 1))
    jobs = [(n, k, cap, budget, symmetric, firsts[s::shards]) for s in range(shards)]
    if shards > 1 and (workers is None or workers > 1):
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_exhaustive_shard, jobs))
    else:
        results = [_exhaustive_shard(j) for j in jobs]

    report = SearchReport(n, k, cap, budget, shards, symmetric)
    bad: set[tuple[int, ...]] = set()
    for counts, shard_bad, truncated in results:
        report.points_examined += counts.get("examined", 0)
        report.members_of_D_cap_L += counts.get("members", 0)
        report.realizable += counts.get("realizable", 0)
        report.prefilter_rejected += counts.get("prefilter_rejected", 0)
        report.lp_calls += counts.get("lp_calls", 0)
        if truncated:
            report.status = "truncated"
        for p in shard_bad:
            bad.update(set(permutations(p)) if symmetric else {p})
    report.nonrealizable_points = sorted(bad)
    return report


def scan_obstructions(edges: Sequence[Hyperedge], m: int, size_cap: int = DEFAULT_SIZE_CAP,
                      n: int | None = None) -> list[tuple[int, ...]]:
    """Vertex sets T, ``1 <= |T| <= size_cap``, that every edge meets in a
    multiple of ``m`` vertices and that at least one edge meets.

    Only vertices covered by some edge are used; adding uncovered vertices
    never changes the condition. Output is ordered by size, then lex.
    """
    if m < 2:
        raise InputError("modulus must be at least 2")
    edges = [tuple(e) for e in edges]
    if not edges:
        log.warning("no edges: every vertex set meets all edges vacuously; "
                    "nothing reported (size cap %d)", size_cap)
        return []
    if n is None:
        n = max(v for e in edges for v in e)
    covered = sorted({v for e in edges for v in e})
    inc = incidence_matrix(edges, n)
    out: list[tuple[int, ...]] = []
    batch: list[tuple[int, ...]] = []

    def flush():
        if not batch:
            return
        subs = np.zeros((len(batch), n), dtype=np.int64)
        for row, T in enumerate(batch):
            subs[row, [v - 1 for v in T]] = 1
        mask = kernels.obstruction_mask(inc, subs, m)
        out.extend(T for T, ok in zip(batch, mask) if ok)
        batch.clear()

    for size in range(1, min(size_cap, len(covered)) + 1):
        for T in combinations(covered, size):
            batch.append(T)
            if len(batch) >= 8192:
                flush()
        flush()
    log.debug("modulus %d: %d obstruction sets among %d covered vertices", m, len(out), len(covered))
    return out


@dataclass
class FindResult:
    status: str  # found | none | truncated
    strategy: str
    point: tuple[int, ...] | None = None
    obstruction: ObstructionWitness | None = None
    realizability: RealizabilityResult | None = None
    candidates_tried: int = 0

    def to_json(self) -> dict:
        return {"status": self.status, "strategy": self.strategy,
                "point": list(self.point) if self.point else None,
                "obstruction": self.obstruction.to_json() if self.obstruction else None,
                "realizability": self.realizability.to_json() if self.realizability else None,
                "candidates_tried": self.candidates_tried}


def _lattice_ok(p: Sequence[int], k: int, shape: PartitionShape | None) -> bool:
    if shape is not None:
        return lattice_member_balanced(p, shape)
    return lattice_member_uniform(p, k)


MILP_TIME_LIMIT = 10.0


def _milp_candidate(edges, n, k, shape, T, m, r, caps):
    """Float MILP proposal for an integer point of D(edges) in the lattice with
    T-sum = r (mod m). Returns an int tuple or None; the caller certifies it."""
    from scipy.optimize import Bounds, LinearConstraint, milp

    ne = len(edges)
    nvar = ne + n + 1 + 1  # c, p, z (T quotient), q (lattice quotient)
    rows, lo, hi = [], [], []
    for v in range(n):
        row = np.zeros(nvar)
        for j, e in enumerate(edges):
            if v + 1 in e:
                row[j] = 1
        row[ne + v] = -1
        rows.append(row); lo.append(0); hi.append(0)
    row = np.zeros(nvar)
    for v in T:
        row[ne + v - 1] = 1
    row[ne + n] = -m
    rows.append(row); lo.append(r); hi.append(r)
    if shape is None:
        row = np.zeros(nvar)
        row[ne:ne + n] = 1
        row[ne + n + 1] = -k
        rows.append(row); lo.append(0); hi.append(0)
    else:
        for part, lam_i in zip(shape.part_ranges(), shape.lam):
            row = np.zeros(nvar)
            for v in part:
                row[ne + v - 1] = 1
            row[ne + n + 1] = -lam_i
            rows.append(row); lo.append(0); hi.append(0)
    cost = np.zeros(nvar)
    cost[ne:ne + n] = 1
    integrality = np.zeros(nvar)
    integrality[ne:] = 1
    lb = np.zeros(nvar)
    # finite quotient bounds keep branch-and-bound from wandering off when the
    # congruence contradicts the lattice
    total = float(sum(caps))
    ub = np.concatenate([np.ones(ne), np.array(caps, dtype=float), [total // m + 1, total]])
    res = milp(cost, constraints=LinearConstraint(np.array(rows), lo, hi),
               integrality=integrality, bounds=Bounds(lb, ub),
               options={"time_limit": MILP_TIME_LIMIT})
    if res.status != 0 or res.x is None:
        return None
    return tuple(int(round(x)) for x in res.x[ne:ne + n])


def _certify(p, edges, k, shape, node_budget):
    """Exact re-verification. Returns (verdict, realizability) where verdict is
    True for a certified non-realizable lattice point of D(edges), False for a
    refuted candidate and None when the search budget ran out."""
    if not _lattice_ok(p, k, shape):
        return False, None
    if not isinstance(zonotope_member(p, edges), Feasible):
        return False, None
    res = realize_subhypergraph(p, edges, budget=node_budget)
    if res.status is Status.UNKNOWN:
        return None, res
    return res.status is Status.INFEASIBLE, res


def face_centers(edges: Sequence[Hyperedge], n: int, functionals) -> list[tuple[int, ...]]:
    """Integral centers of the faces cut out by the given functionals."""
    out = []
    for y in functionals:
        split = face_split(edges, list(y))
        d0 = degrees(split.k_zero, n)
        if not split.k_zero or any(x % 2 for x in d0):
            continue
        base = split.offset(n)
        out.append(tuple(a + b // 2 for a, b in zip(base, d0)))
    return out


def sparse_functionals(n: int, max_support: int = 2) -> np.ndarray:
    """Vectors with 1..max_support nonzero entries, each +-1."""
    rows = []
    for size in range(1, max_support + 1):
        for idx in combinations(range(n), size):
            for signs in product((-1, 1), repeat=size):
                row = [0] * n
                for i, sg in zip(idx, signs):
                    row[i] = sg
                rows.append(row)
    return np.array(rows, dtype=np.int64).reshape(len(rows), n)


def find_nonrealizable_point(edges: Sequence[Hyperedge], n: int, k: int | None = None,
                             shape: PartitionShape | None = None, cap: int | None = None,
                             budget: int = 20_000, node_budget: int = 1_000_000,
                             moduli: Sequence[int] | None = None,
                             size_cap: int = DEFAULT_SIZE_CAP, functionals=(),
                             random_faces: int = 200, seed: int = 0) -> FindResult:
    """Look for a lattice point of D(edges) that no subset of ``edges`` realizes.

    Strategies, in order: (1) obstruction sets from :func:`scan_obstructions`
    with a MILP proposal per residue; (2) integral face centers for the given
    ``functionals`` and ``random_faces`` seeded random ones; (3) odometer
    enumeration of the box, at most ``budget`` box points. Each candidate
    gets at most ``node_budget`` search nodes (0 = unlimited); a candidate that
    exhausts it is skipped and the result can then only be "truncated".
    """
    edges = sorted(tuple(e) for e in edges)
    if shape is not None:
        k = shape.k
        if shape.n != n:
            raise InputError("shape does not match n")
    if k is None:
        k = len(edges[0]) if edges else 1
    if not edges:
        return FindResult("none", "empty edge set")
    deg_max = degrees(edges, n)
    caps = [d if cap is None else min(cap, d) for d in deg_max]
    tried = 0
    undecided = False

    for m in (moduli if moduli is not None else range(2, k + 1)):
        for T in scan_obstructions(edges, m, size_cap=size_cap, n=n):
            for r in range(1, m):
                p = _milp_candidate(edges, n, k, shape, T, m, r, caps)
                if p is None:
                    continue
                tried += 1
                wit = obstruction_check(T, p, edges, m)
                if wit is None:
                    continue
                verdict, res = _certify(p, edges, k, shape, node_budget)
                undecided |= verdict is None
                if verdict:
                    return FindResult("found", "obstruction", p, wit, res, tried)

    rng = np.random.default_rng(seed)
    spread = max(2, k + 1)
    probes = list(functionals) + [rng.integers(-spread, spread + 1, size=n)
                                  for _ in range(random_faces)]
    seen = set()
    for p in face_centers(edges, n, probes):
        if p in seen or any(x > c for x, c in zip(p, caps)):
            continue
        seen.add(p)
        tried += 1
        verdict, res = _certify(p, edges, k, shape, node_budget)
        undecided |= verdict is None
        if verdict:
            return FindResult("found", "face-center", p, None, res, tried)

    funcs = sign_functionals(n) if n <= PREFILTER_MAX_N else sparse_functionals(n)
    support = support_values(funcs, incidence_matrix(edges, n))
    examined = 0
    exhausted = False
    boxes = product(*(range(c + 1) for c in caps))
    while not exhausted and examined < budget:
        chunk = []
        for p in boxes:
            examined += 1
            if _lattice_ok(p, k, shape):
                chunk.append(p)
            if examined >= budget or len(chunk) >= 4096:
                break
        else:
            exhausted = True
        if not chunk:
            continue
        viol = kernels.first_violation(np.array(chunk, dtype=np.int64), funcs, support)
        for p, v in zip(chunk, viol):
            if v >= 0:
                continue
            tried += 1
            res = realize_subhypergraph(p, edges, budget=node_budget)
            if res.status is Status.REALIZABLE:
                continue
            if res.status is Status.UNKNOWN:
                undecided = True
                continue
            if isinstance(zonotope_member(p, edges), Feasible):
                return FindResult("found", "enumeration", p, None, res, tried)
    if examined >= budget and not exhausted:
        return FindResult("truncated", "enumeration", candidates_tried=tried)
    return FindResult("truncated" if undecided else "none", "enumeration", candidates_tried=tried)
