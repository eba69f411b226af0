"""Exact membership in the zonotope ``D(K) = {sum c_S e_S : 0 <= c_S <= 1}``."""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .core import Hyperedge, InputError, make_edge
from .lp import solve_box_feasibility


@dataclass(frozen=True)
class FractionalDecomposition:
    terms: tuple[tuple[Hyperedge, Fraction], ...]

    def __init__(self, terms):
        object.__setattr__(self, "terms", tuple((tuple(e), Fraction(c)) for e, c in terms))

    def point(self, n: int) -> list[Fraction]:
        out = [Fraction(0)] * n
        for edge, c in self.terms:
            for v in edge:
                out[v - 1] += c
        return out

    def to_json(self) -> list[dict]:
        return [{"edge": list(e), "coeff": format_fraction(c)} for e, c in self.terms]

    @classmethod
    def from_json(cls, data) -> "FractionalDecomposition":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls((make_edge(t["edge"]), parse_fraction(t["coeff"])) for t in data)
        except (KeyError, TypeError) as exc:
            raise InputError(f"malformed decomposition entry: {exc}") from exc


@dataclass(frozen=True)
class SeparationCertificate:
    """Functional ``a`` with ``a.p > threshold >= sum_S max(0, a.e_S)``.

    The right-hand side is the support function of ``D(edges)`` in direction
    ``a``, so the certificate separates ``p`` from the whole zonotope (and in
    particular ``a.e_S <= threshold`` for every single generator).
    """

    functional: tuple[Fraction, ...]
    threshold: Fraction

    def to_json(self) -> dict:
        return {"functional": [format_fraction(x) for x in self.functional],
                "threshold": format_fraction(self.threshold)}


@dataclass(frozen=True)
class Feasible:
    decomposition: FractionalDecomposition


@dataclass(frozen=True)
class Infeasible:
    certificate: SeparationCertificate


def format_fraction(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_fraction(s) -> Fraction:
    if isinstance(s, int):
        return Fraction(s)
    if not isinstance(s, str):
        raise InputError(f"rational must be a string or int, got {s!r}")
    try:
        return Fraction(s)
    except (ValueError, ZeroDivisionError) as exc:
        raise InputError(f"bad rational {s!r}") from exc


def support_value(a: Sequence[Fraction], edges: Sequence[Hyperedge]) -> Fraction:
    """max of ``a.x`` over ``D(edges)``."""
    total = Fraction(0)
    for edge in edges:
        v = sum((Fraction(a[i - 1]) for i in edge), Fraction(0))
        if v > 0:
            total += v
    return total


def check_separation(cert: SeparationCertificate, p: Sequence[int], edges: Sequence[Hyperedge]) -> bool:
    a = cert.functional
    if len(a) != len(p):
        return False
    if support_value(a, edges) > cert.threshold:
        return False
    lhs = sum((Fraction(ai) * int(pi) for ai, pi in zip(a, p)), Fraction(0))
    return lhs > cert.threshold


def verify_fractional_decomposition(p: Sequence[int], dec: FractionalDecomposition) -> bool:
    seen = set()
    for edge, c in dec.terms:
        if not 0 <= c <= 1 or edge in seen:
            return False
        if any(v < 1 or v > len(p) for v in edge):
            return False
        seen.add(edge)
    return dec.point(len(p)) == [Fraction(int(x)) for x in p]


def zonotope_member(p: Sequence[int], edges: Sequence[Hyperedge]) -> Feasible | Infeasible:
    """Exact LP decision of ``p in D(edges)`` with a witness either way."""
    n = len(p)
    edges = [tuple(e) for e in edges]
    if len(set(edges)) != len(edges):
        raise InputError("generator edges must be distinct")
    for edge in edges:
        if any(v < 1 or v > n for v in edge):
            raise InputError(f"edge {edge} does not fit a point of length {n}")
    p = [int(x) for x in p]
    if not edges:
        if any(p):
            a = tuple(Fraction(1 if x > 0 else -1 if x < 0 else 0) for x in p)
            return Infeasible(SeparationCertificate(a, Fraction(0)))
        return Feasible(FractionalDecomposition(()))

    A = [[0] * len(edges) for _ in range(n)]
    for j, edge in enumerate(edges):
        for v in edge:
            A[v - 1][j] = 1
    res = solve_box_feasibility(A, p)
    if res.feasible:
        terms = [(e, c) for e, c in zip(edges, res.x) if c != 0]
        dec = FractionalDecomposition(sorted(terms))
        if not verify_fractional_decomposition(p, dec):
            raise AssertionError("simplex returned a decomposition that does not reproduce p")
        return Feasible(dec)
    a = tuple(res.y)
    cert = SeparationCertificate(a, support_value(a, edges))
    if not check_separation(cert, p, edges):
        raise AssertionError("simplex returned an invalid separation certificate")
    return Infeasible(cert)
