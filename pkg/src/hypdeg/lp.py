"""Exact phase-1 simplex for ``A x = b, 0 <= x <= 1`` over the rationals.

The tableau is kept fraction-free: integer entries over one common positive
denominator ``D`` (the basis determinant up to sign), updated by Bareiss-style
pivots so every division is exact. Upper bounds are implicit (nonbasic
variables sit at 0 or 1). Pivoting follows Bland's smallest-index rule.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence


class SimplexError(RuntimeError):
    """Internal failure of the solver (iteration cap, inconsistent state)."""


@dataclass
class BoxLPResult:
    feasible: bool
    x: list[Fraction] | None
    # Farkas multipliers: y.b > sum_j max(0, y.A_j) whenever infeasible.
    y: list[Fraction] | None
    pivots: int


def solve_box_feasibility(A: Sequence[Sequence[int]], b: Sequence[int],
                          max_pivots: int = 200_000) -> BoxLPResult:
    """Decide whether some x with 0 <= x_j <= 1 satisfies ``A x = b`` exactly.

    ``A`` is m rows of nv integers. On success ``x`` is an exact solution;
    otherwise ``y`` satisfies ``y.b > sum_j max(0, y.A[:, j])``.
    """
    m = len(b)
    nv = len(A[0]) if m else 0
    if any(len(row) != nv for row in A):
        raise ValueError("ragged constraint matrix")
    if m == 0:
        return BoxLPResult(True, [Fraction(0)] * nv, None, 0)

    sign = [1 if bi >= 0 else -1 for bi in b]
    ncol = nv + m
    # rows 0..m-1 constraints, row m reduced costs; column ncol is the rhs
    M = []
    for i in range(m):
        row = [sign[i] * int(A[i][j]) for j in range(nv)]
        row.extend(1 if r == i else 0 for r in range(m))
        row.append(sign[i] * int(b[i]))
        M.append(row)
    cost_row = [-sum(M[i][j] for i in range(m)) for j in range(nv)] + [0] * m
    cost_row.append(-sum(M[i][ncol] for i in range(m)))
    M.append(cost_row)
    D = 1
    basis = [nv + i for i in range(m)]
    is_basic = [False] * nv + [True] * m
    at_upper = [False] * ncol
    has_upper = [True] * nv + [False] * m
    rhs = ncol

    pivots = 0
    z = M[m]
    while True:
        entering = -1
        increase = True
        for j in range(ncol):
            if is_basic[j]:
                continue
            d = z[j]
            if d < 0 and not at_upper[j]:
                entering, increase = j, True
                break
            if d > 0 and at_upper[j]:
                entering, increase = j, False
                break
        if entering < 0:
            break
        if pivots >= max_pivots:
            raise SimplexError(f"no convergence after {max_pivots} pivots")
        pivots += 1
        j = entering
        dirn = 1 if increase else -1

        # ratio test in units of x_j; basic values are M[i][rhs] / D
        best = Fraction(1) if has_upper[j] else None
        leave_row = -1
        leave_to_upper = False
        for i in range(m):
            alpha = dirn * M[i][j]
            if alpha == 0:
                continue
            bv = basis[i]
            if alpha > 0:
                t = Fraction(M[i][rhs], alpha)
                to_upper = False
            else:
                if not has_upper[bv]:
                    continue
                t = Fraction(D - M[i][rhs], -alpha)
                to_upper = True
            if best is None or t < best or (t == best and (leave_row < 0 or bv < basis[leave_row])):
                best, leave_row, leave_to_upper = t, i, to_upper
        if best is None:
            raise SimplexError("unbounded phase-1 direction")

        if leave_row < 0:
            # bound flip: x_B -= dirn * B^{-1} A_j
            for i in range(m + 1):
                if M[i][j]:
                    M[i][rhs] -= dirn * M[i][j]
            at_upper[j] = not at_upper[j]
            continue

        if at_upper[j]:
            # view x_j at its lower bound before pivoting it into the basis
            for i in range(m + 1):
                if M[i][j]:
                    M[i][rhs] += M[i][j]
            at_upper[j] = False
        r = leave_row
        P = M[r][j]
        row_r = M[r]
        for i in range(m + 1):
            if i == r:
                continue
            Mi = M[i]
            f = Mi[j]
            if f:
                for c in range(ncol + 1):
                    rc = row_r[c]
                    if rc:
                        Mi[c] = (Mi[c] * P - f * rc) // D
                    elif Mi[c]:
                        Mi[c] = (Mi[c] * P) // D
            elif P != D:
                for c in range(ncol + 1):
                    if Mi[c]:
                        Mi[c] = (Mi[c] * P) // D
        D = P
        if D < 0:
            for Mi in M:
                for c in range(ncol + 1):
                    if Mi[c]:
                        Mi[c] = -Mi[c]
            D = -D
        leaving = basis[r]
        basis[r] = j
        is_basic[j] = True
        is_basic[leaving] = False
        if leave_to_upper:
            for i in range(m + 1):
                if M[i][leaving]:
                    M[i][rhs] -= M[i][leaving]
            at_upper[leaving] = True
        z = M[m]

    values = [Fraction(1) if at_upper[j] else Fraction(0) for j in range(ncol)]
    for i in range(m):
        values[basis[i]] = Fraction(M[i][rhs], D)
    if all(v == 0 for v in values[nv:]):
        return BoxLPResult(True, values[:nv], None, pivots)
    # reduced cost of artificial r is 1 - y'_r
    y = [sign[r] * (1 - Fraction(z[nv + r], D)) for r in range(m)]
    return BoxLPResult(False, None, y, pivots)
