"""End-to-end verification of the two nonconvexity counterexamples.

Every check recomputes its facts from the embedded data; the data itself is
echoed into the report so it can be compared line by line with the source
construction.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Any, Sequence

from .core import (Hyperedge, PartitionShape, degrees, enumerate_balanced_edges,
                   enumerate_edges, lattice_member_balanced, lattice_member_uniform)
from .faces import face_split, lift_edges, lift_map, lift_weights
from .realizability import Status, conjugate, gale_ryser, realize_subhypergraph
from .zonotope import (Feasible, FractionalDecomposition, verify_fractional_decomposition,
                       zonotope_member)

# --- the 16-vertex, 3-uniform example -------------------------------------

EX1_N, EX1_K = 16, 3
EX1_W = (8, 6, 6, 4, 1, 1, 0, 0, 0, 0, -2, -2, -3, -3, -5, -12)
EX1_P = (2, 1, 1, 2, 1, 1, 1, 1, 1, 1, 1, 1, 2, 2, 2, 1)
EX1_THIRDS = ((2, 3, 16), (4, 5, 15), (4, 6, 15), (5, 6, 11), (5, 6, 12),
              (7, 8, 9), (7, 8, 10), (7, 9, 10), (8, 9, 10))
EX1_TWO_THIRDS = ((1, 4, 16), (1, 13, 15), (1, 14, 15), (2, 13, 14), (3, 13, 14), (4, 11, 12))
EX1_DECOMPOSITION = FractionalDecomposition(
    sorted([(e, Fraction(1, 3)) for e in EX1_THIRDS] + [(e, Fraction(2, 3)) for e in EX1_TWO_THIRDS]))
EX1_T = (7, 8, 9, 10)
EX1_MOD = 3

# --- the (5, 6, 6) 3-partite example ---------------------------------------

EX2_SHAPE = PartitionShape((1, 1, 1), (5, 6, 6))
EX2_W = (-7, -7, -7, -7, -7, 1, 1, 2, 2, 3, 3, 6, 6, 5, 5, 4, 4)
EX2_P = (11, 9, 6, 3, 1, 2, 4, 6, 8, 3, 7, 2, 4, 6, 8, 3, 7)
EX2_P_MINUS = (10, 8, 4, 2, 0, 1, 3, 5, 7, 2, 6, 1, 3, 5, 7, 2, 6)
EX2_P_PLUS = (12, 10, 8, 4, 2, 3, 5, 7, 9, 4, 8, 3, 5, 7, 9, 4, 8)
EX2_A = ((1, 2, 0, 0, 0, 0),
         (2, 3, 0, 0, 0, 0),
         (0, 0, 3, 4, 0, 0),
         (0, 0, 4, 5, 0, 0),
         (0, 0, 0, 0, 1, 3),
         (0, 0, 0, 0, 3, 5))
EX2_CAP = 5
# candidate 2x2 blocks as displayed alongside the construction, row-major
EX2_DISPLAYED_BLOCKS = (
    {((0, 2), (2, 2)), ((1, 1), (1, 3)), ((2, 0), (0, 4))},
    {((1, 5), (5, 3)), ((2, 4), (4, 4)), ((3, 3), (3, 5))},
    {((0, 3), (3, 4)), ((1, 2), (2, 5))},
)

Matrix = tuple[tuple[int, ...], ...]


@dataclass
class Check:
    name: str
    passed: bool
    details: dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        return {"name": self.name, "status": "pass" if self.passed else "fail",
                "details": self.details}


@dataclass
class CertificateReport:
    claim: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json(self) -> dict:
        return {"claim": self.claim, "checks": [c.to_json() for c in self.checks],
                "status": "pass" if self.passed else "fail"}

    def summary(self) -> str:
        lines = [f"{self.claim}: {'PASS' if self.passed else 'FAIL'}"]
        lines += [f"  [{'pass' if c.passed else 'FAIL'}] {c.name}" for c in self.checks]
        return "\n".join(lines)


@dataclass(frozen=True)
class ObstructionWitness:
    """Every audited edge meets ``subset`` in a multiple of ``modulus`` vertices
    while the target's ``subset``-sum leaves ``residue != 0``."""

    subset: tuple[int, ...]
    modulus: int
    residue: int
    subset_sum: int

    def to_json(self) -> dict:
        return {"subset": list(self.subset), "modulus": self.modulus,
                "residue": self.residue, "subset_sum": self.subset_sum}


def obstruction_violations(T: Sequence[int], edges: Sequence[Hyperedge], m: int) -> list[Hyperedge]:
    Ts = set(T)
    return [tuple(e) for e in edges if len(Ts.intersection(e)) % m]


def obstruction_check(T: Sequence[int], p: Sequence[int], edges: Sequence[Hyperedge],
                      m: int) -> ObstructionWitness | None:
    """Return a witness if ``T`` proves ``p`` is no sum of distinct (or even
    repeated) generators ``e_S``; None otherwise."""
    if m < 2:
        raise ValueError("modulus must be at least 2")
    T = tuple(sorted(set(int(v) for v in T)))
    if any(v < 1 or v > len(p) for v in T):
        return None
    if obstruction_violations(T, edges, m):
        return None
    total = sum(int(p[v - 1]) for v in T)
    if total % m == 0:
        return None
    return ObstructionWitness(T, m, total % m, total)


def zero_weight_edges(edges: Sequence[Hyperedge], w: Sequence[int]) -> list[Hyperedge]:
    return list(face_split(edges, w).k_zero)


def _vec(p) -> list[int]:
    return [int(x) for x in p]


def verify_example1(p: Sequence[int] | None = None, w: Sequence[int] | None = None) -> CertificateReport:
    p = _vec(EX1_P if p is None else p)
    w = _vec(EX1_W if w is None else w)
    k0 = zero_weight_edges(enumerate_edges(EX1_N, EX1_K), w)
    report = CertificateReport("example1")
    data = {"w": w, "p": p, "k_zero_size": len(k0)}

    total = sum(p)
    report.checks.append(Check("a_lattice", lattice_member_uniform(p, EX1_K),
                               {"sum": total, "k": EX1_K, "quotient": total // EX1_K,
                                "remainder": total % EX1_K, **data}))

    k0_set = set(k0)
    dec_ok = verify_fractional_decomposition(p, EX1_DECOMPOSITION)
    on_face = all(e in k0_set for e, _ in EX1_DECOMPOSITION.terms)
    report.checks.append(Check("b_decomposition", dec_ok and on_face, {
        "reproduces_p": dec_ok, "all_edges_weight_zero": on_face,
        "terms": EX1_DECOMPOSITION.to_json()}))

    lp = zonotope_member(p, k0)
    lp_ok = isinstance(lp, Feasible)
    report.checks.append(Check("c_lp_feasible", lp_ok, {
        "decomposition": lp.decomposition.to_json() if lp_ok else None,
        "certificate": None if lp_ok else lp.certificate.to_json()}))

    wit = obstruction_check(EX1_T, p, k0, EX1_MOD)
    bad = obstruction_violations(EX1_T, k0, EX1_MOD)
    report.checks.append(Check("d_obstruction", wit is not None, {
        "subset": list(EX1_T), "modulus": EX1_MOD,
        "subset_sum": sum(p[v - 1] for v in EX1_T),
        "residue": sum(p[v - 1] for v in EX1_T) % EX1_MOD,
        "meet_sizes": sorted({len(set(EX1_T).intersection(e)) for e in k0}),
        "violating_edges": [list(e) for e in bad]}))

    res = realize_subhypergraph(p, k0, budget=0)
    infeasible = res.status is Status.INFEASIBLE
    report.checks.append(Check("e_exhaustive_infeasible", infeasible, {
        **res.to_json(), "agrees_with_obstruction": wit is None or infeasible}))

    zeros = [i + 1 for i, x in enumerate(w) if x == 0]
    pairs = [(i + 1, j + 1) for i, j in combinations(range(len(w)), 2)
             if w[i] == -w[j] and not (w[i] == 0 and w[j] == 0)]
    scan_ok = tuple(zeros) == EX1_T and not pairs
    report.checks.append(Check("f_negation_scan", scan_ok, {
        "zero_weight_vertices": zeros, "opposite_pairs": [list(x) for x in pairs]}))
    return report


# --- block matrices --------------------------------------------------------

def support_blocks(support: Sequence[Sequence[int]]) -> list[tuple[list[int], list[int]]]:
    """Connected components of the bipartite support graph as (rows, cols)."""
    nr, nc = len(support), len(support[0])
    seen_r, seen_c = set(), set()
    blocks = []
    for r0 in range(nr):
        if r0 in seen_r or not any(support[r0]):
            continue
        rows, cols, stack = {r0}, set(), [("r", r0)]
        seen_r.add(r0)
        while stack:
            kind, i = stack.pop()
            if kind == "r":
                for c in range(nc):
                    if support[i][c] and c not in seen_c:
                        seen_c.add(c)
                        cols.add(c)
                        stack.append(("c", c))
            else:
                for r in range(nr):
                    if support[r][i] and r not in seen_r:
                        seen_r.add(r)
                        rows.add(r)
                        stack.append(("r", r))
        blocks.append((sorted(rows), sorted(cols)))
    return blocks


def enumerate_block_matrices(support: Sequence[Sequence[int]], row_sums: Sequence[int],
                             col_sums: Sequence[int], cap: int = EX2_CAP) -> list[Matrix]:
    """All nonnegative integer matrices supported inside ``support`` with entries
    at most ``cap`` and the given row and column sums, sorted."""
    nr, nc = len(support), len(support[0])
    cells = [(r, c) for r in range(nr) for c in range(nc) if support[r][c]]
    row_left, col_left = list(row_sums), list(col_sums)
    # cells still open per row / column, for the completion bound
    row_open = [sum(1 for (r, _) in cells if r == i) for i in range(nr)]
    col_open = [sum(1 for (_, c) in cells if c == j) for j in range(nc)]
    for i in range(nr):
        if row_open[i] == 0 and row_left[i]:
            return []
    for j in range(nc):
        if col_open[j] == 0 and col_left[j]:
            return []
    cur = [[0] * nc for _ in range(nr)]
    out: list[Matrix] = []

    def go(idx: int) -> None:
        if idx == len(cells):
            if not any(row_left) and not any(col_left):
                out.append(tuple(tuple(row) for row in cur))
            return
        r, c = cells[idx]
        row_open[r] -= 1
        col_open[c] -= 1
        hi = min(cap, row_left[r], col_left[c])
        for v in range(hi + 1):
            if row_left[r] - v > cap * row_open[r] or col_left[c] - v > cap * col_open[c]:
                continue
            if row_open[r] == 0 and row_left[r] != v:
                continue
            if col_open[c] == 0 and col_left[c] != v:
                continue
            cur[r][c] = v
            row_left[r] -= v
            col_left[c] -= v
            go(idx + 1)
            row_left[r] += v
            col_left[c] += v
        cur[r][c] = 0
        row_open[r] += 1
        col_open[c] += 1

    go(0)
    return sorted(out)


def restrict(B: Matrix, rows: Sequence[int], cols: Sequence[int]) -> Matrix:
    return tuple(tuple(B[r][c] for c in cols) for r in rows)


def support_entries(B: Matrix, support: Sequence[Sequence[int]]) -> list[int]:
    return [B[r][c] for r in range(len(B)) for c in range(len(B[0])) if support[r][c]]


def min_sum_condition(mu: Sequence[int], entries: Sequence[int]) -> bool:
    """``mu_1 + .. + mu_q <= sum min(q, b)`` for every q, with mu sorted down."""
    mu = sorted(mu, reverse=True)
    acc = 0
    for q, x in enumerate(mu, start=1):
        acc += x
        if acc > sum(min(q, b) for b in entries):
            return False
    return True


def product_realizable(mu: Sequence[int], rows: Sequence[int], cols: Sequence[int],
                       support: Sequence[Sequence[int]], cap: int) -> tuple[bool, list[Matrix]]:
    """Realizability over first-part x (support pairs) via block matrices plus
    Gale-Ryser. Returns the verdict and the list of admissible B."""
    good = [B for B in enumerate_block_matrices(support, rows, cols, cap)
            if gale_ryser(mu, support_entries(B, support))]
    return bool(good), good


def _matrix_json(B: Matrix) -> list[list[int]]:
    return [list(row) for row in B]


def ex2_k_zero_from_a(A: Matrix = EX2_A) -> list[Hyperedge]:
    r0 = EX2_SHAPE.part_ranges()
    out = []
    for q in r0[0]:
        for r, vr in enumerate(r0[1]):
            for s, vs in enumerate(r0[2]):
                if A[r][s]:
                    out.append((q, vr, vs))
    return sorted(out)


def ex2_layer_edges(strict: bool, A: Matrix = EX2_A) -> list[Hyperedge]:
    """Edges ``(v1_q, v2_r, v3_s)`` with ``q < a_rs`` (strict) or ``q <= a_rs``."""
    r0 = EX2_SHAPE.part_ranges()
    out = []
    for q_idx, q in enumerate(r0[0], start=1):
        for r, vr in enumerate(r0[1]):
            for s, vs in enumerate(r0[2]):
                a = A[r][s]
                if a and (q_idx < a if strict else q_idx <= a):
                    out.append((q, vr, vs))
    return sorted(out)


def verify_example2(mu: Sequence[int] | None = None, cap: int = EX2_CAP) -> CertificateReport:
    shape = EX2_SHAPE
    p = _vec(EX2_P)
    if mu is not None:
        p = _vec(mu) + p[shape.part_sizes[0]:]
    p_minus, p_plus = _vec(EX2_P_MINUS), _vec(EX2_P_PLUS)
    report = CertificateReport("example2")

    sums = {name: [sum(x) for x in shape.split(pt)]
            for name, pt in (("p_minus", p_minus), ("p_plus", p_plus), ("p", p))}
    lat = {name: lattice_member_balanced(pt, shape)
           for name, pt in (("p_minus", p_minus), ("p_plus", p_plus), ("p", p))}
    report.checks.append(Check("a_lattice", all(lat.values()),
                               {"part_sums": sums, "member": lat, "p": p}))

    all_edges = enumerate_balanced_edges(shape)
    k0 = zero_weight_edges(all_edges, EX2_W)
    k0_set = set(k0)
    low, high = ex2_layer_edges(True), ex2_layer_edges(False)
    low_ok = degrees(low, shape.n) == p_minus and set(low) <= k0_set
    high_ok = degrees(high, shape.n) == p_plus and set(high) <= k0_set
    report.checks.append(Check("b_layer_constructions", low_ok and high_ok, {
        "p_minus_edges": len(low), "p_plus_edges": len(high),
        "p_minus_matches": low_ok, "p_plus_matches": high_ok}))

    midpoint = [Fraction(a + b, 2) for a, b in zip(p_minus, p_plus)]
    is_mid = midpoint == [Fraction(x) for x in p]
    lp = zonotope_member(p, k0)
    lp_ok = isinstance(lp, Feasible)
    report.checks.append(Check("c_midpoint_feasible", is_mid and lp_ok, {
        "is_midpoint": is_mid, "lp_feasible": lp_ok,
        "decomposition": lp.decomposition.to_json() if lp_ok else None}))

    expected = ex2_k_zero_from_a()
    report.checks.append(Check("d_k_zero_support", k0 == expected, {
        "k_zero_size": len(k0), "support_size": len(expected),
        "balanced_edges": len(all_edges)}))

    rows, cols = p[5:11], p[11:17]
    mu_vec = p[:5]
    support = [[1 if a else 0 for a in row] for row in EX2_A]
    Bs = enumerate_block_matrices(support, rows, cols, cap)
    blocks = support_blocks(support)
    per_block = [sorted({restrict(B, br, bc) for B in Bs}) for br, bc in blocks]
    matches = (len(per_block) == len(EX2_DISPLAYED_BLOCKS) and
               all(set(got) == want for got, want in zip(per_block, EX2_DISPLAYED_BLOCKS)))
    verdicts = []
    for B in Bs:
        entries = support_entries(B, support)
        verdicts.append({"B": _matrix_json(B), "gale_ryser": gale_ryser(mu_vec, entries),
                         "min_sum": min_sum_condition(mu_vec, entries),
                         "nu": conjugate(entries, len(mu_vec))})
    feasible_B = [v["B"] for v in verdicts if v["gale_ryser"]]
    report.checks.append(Check("e_block_matrices", matches and not feasible_B, {
        "mu": mu_vec, "cap": cap, "count": len(Bs),
        "per_block_counts": [len(x) for x in per_block],
        "per_block": [[_matrix_json(m) for m in blk] for blk in per_block],
        "matches_displayed_sets": matches,
        "feasible_B": feasible_B, "verdicts": verdicts}))

    res = realize_subhypergraph(p, k0, budget=0)
    report.checks.append(Check("f_exhaustive_infeasible", res.status is Status.INFEASIBLE, res.to_json()))

    # the block-matrix criterion and the search must agree on p and on p-/p+
    agree = {}
    for name, pt in (("p", p), ("p_minus", p_minus), ("p_plus", p_plus)):
        crit, _ = product_realizable(pt[:5], pt[5:11], pt[11:17], support, EX2_CAP)
        search = realize_subhypergraph(pt, k0, budget=0).status is Status.REALIZABLE
        agree[name] = {"block_criterion": crit, "search": search, "agree": crit == search}
    report.checks.append(Check("g_criteria_agree", all(v["agree"] for v in agree.values()), agree))
    return report


# --- lift chain ------------------------------------------------------------

def verify_lift_chain(steps: int = 1) -> CertificateReport:
    """Push the 16-vertex counterexample through ``steps`` applications of the lift."""
    report = CertificateReport("lift-chain")
    n, k = EX1_N, EX1_K
    w = list(EX1_W)
    all_edges = enumerate_edges(n, k)
    split = face_split(all_edges, w)
    k0 = list(split.k_zero)
    p = list(EX1_P)
    dec = EX1_DECOMPOSITION
    base = obstruction_check(EX1_T, p, k0, EX1_MOD)
    report.checks.append(Check("base", base is not None and verify_fractional_decomposition(p, dec), {
        "n": n, "k": k, "point": p, "obstruction": base.to_json() if base else None}))

    for step in range(1, steps + 1):
        p = lift_map(p, k)
        k0 = lift_edges(k0, n)
        dec = FractionalDecomposition((e + (n + 1,), c) for e, c in dec.terms)
        w = lift_weights(w, k)
        n, k = n + 1, k + 1
        wit = obstruction_check(EX1_T, p, k0, EX1_MOD)
        in_face = verify_fractional_decomposition(p, dec)
        full_split = face_split(enumerate_edges(n, k), w)
        face_ok = list(full_split.k_zero) == sorted(k0)
        full_point = [a + b for a, b in zip(p, full_split.offset(n))]
        full_dec = FractionalDecomposition(
            sorted([(e, Fraction(1)) for e in full_split.k_plus] + list(dec.terms)))
        full_ok = verify_fractional_decomposition(full_point, full_dec)
        lattice_face = lattice_member_uniform(p, k)
        lattice_full = lattice_member_uniform(full_point, k)
        ok = all((wit is not None, in_face, face_ok, full_ok, lattice_face, lattice_full))
        report.checks.append(Check(f"step_{step}", ok, {
            "n": n, "k": k, "point": p, "appended": p[-1],
            "lattice_face_point": lattice_face, "lattice_full_point": lattice_full,
            "obstruction": wit.to_json() if wit else None,
            "face_decomposition_ok": in_face, "face_matches_lifted_weights": face_ok,
            "weights": w, "full_point_sum": sum(full_point), "full_decomposition_ok": full_ok}))
    return report
