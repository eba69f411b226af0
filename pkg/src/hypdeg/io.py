"""Plain-text formats for hypergraphs, degree sequences and weight vectors.

Hypergraph files start with either ``n k`` or the two lines
``lambda: l_1 ... l_p`` and ``parts: n_1 ... n_p``; every later line is one
edge written as ascending vertex indices. Vectors are whitespace-separated
integers on one line, with ``;`` between parts for balanced objects. ``#``
starts a comment anywhere.
"""
from __future__ import annotations

import re
from typing import Iterator, Sequence

from .core import Hypergraph, InputError, PartitionShape
from .faces import FaceSplit


class ParseError(InputError):
    def __init__(self, message: str, line: int, column: int, source: str = "<input>"):
        self.line, self.column, self.source = line, column, source
        super().__init__(f"{source}:{line}:{column}: {message}")


_TOKEN = re.compile(r"[^\s;]+")


def _lines(text: str) -> Iterator[tuple[int, str]]:
    """(1-based line number, content with the comment stripped) for non-blank lines."""
    for lineno, raw in enumerate(text.splitlines(), start=1):
        body = raw.split("#", 1)[0]
        if body.strip():
            yield lineno, body


def _ints(body: str, lineno: int, source: str) -> list[tuple[int, int]]:
    """Integers on one line paired with their 1-based column."""
    out = []
    for m in _TOKEN.finditer(body):
        try:
            out.append((int(m.group()), m.start() + 1))
        except ValueError:
            raise ParseError(f"expected an integer, found {m.group()!r}", lineno, m.start() + 1,
                             source) from None
    return out


def _header_values(body: str, key: str, lineno: int, source: str) -> list[int]:
    head, _, rest = body.partition(":")
    if head.strip() != key:
        col = len(body) - len(body.lstrip()) + 1
        raise ParseError(f"expected '{key}:' header", lineno, col, source)
    offset = len(head) + 1
    return [v for v, _ in _ints(" " * offset + rest, lineno, source)]


def parse_hypergraph(text: str, source: str = "<input>") -> Hypergraph:
    lines = list(_lines(text))
    if not lines:
        raise ParseError("empty hypergraph file", 1, 1, source)
    lineno, body = lines[0]
    shape = None
    if body.strip().startswith("lambda"):
        lam = _header_values(body, "lambda", lineno, source)
        if len(lines) < 2:
            raise ParseError("missing 'parts:' line", lineno + 1, 1, source)
        lineno2, body2 = lines[1]
        parts = _header_values(body2, "parts", lineno2, source)
        try:
            shape = PartitionShape(tuple(lam), tuple(parts))
        except InputError as exc:
            raise ParseError(str(exc), lineno2, 1, source) from None
        n, k = shape.n, shape.k
        rest = lines[2:]
    else:
        head = _ints(body, lineno, source)
        if len(head) != 2:
            raise ParseError("header must be 'n k'", lineno, 1, source)
        (n, _), (k, col) = head
        if k < 1 or n < 0:
            raise ParseError("need n >= 0 and k >= 1", lineno, col, source)
        rest = lines[1:]

    K = Hypergraph(n, k, [], shape)
    for lineno, body in rest:
        verts = _ints(body, lineno, source)
        if len(verts) != k:
            raise ParseError(f"edge has {len(verts)} vertices, expected {k}", lineno, 1, source)
        for (a, _), (b, col) in zip(verts, verts[1:]):
            if b <= a:
                raise ParseError("edge vertices must be strictly ascending", lineno, col, source)
        for v, col in verts:
            if v < 1 or v > n:
                raise ParseError(f"vertex {v} outside 1..{n}", lineno, col, source)
        try:
            K.add(v for v, _ in verts)
        except InputError as exc:
            raise ParseError(str(exc), lineno, 1, source) from None
    return K


def format_hypergraph(K: Hypergraph) -> str:
    if K.shape is not None:
        head = [f"lambda: {' '.join(map(str, K.shape.lam))}",
                f"parts: {' '.join(map(str, K.shape.part_sizes))}"]
    else:
        head = [f"{K.n} {K.k}"]
    return "\n".join(head + [" ".join(map(str, e)) for e in K.edges]) + "\n"


def parse_parts(text: str, source: str = "<input>") -> list[list[int]]:
    """A vector split at ``;``; an unsplit vector is a single part."""
    lines = list(_lines(text))
    if len(lines) != 1:
        line = lines[1][0] if lines else 1
        raise ParseError("expected exactly one line of integers", line, 1, source)
    lineno, body = lines[0]
    parts, start = [], 0
    for chunk in body.split(";"):
        pad = " " * start
        parts.append([v for v, _ in _ints(pad + chunk, lineno, source)])
        start += len(chunk) + 1
    return parts


def parse_vector(text: str, shape: PartitionShape | None = None,
                 source: str = "<input>") -> list[int]:
    parts = parse_parts(text, source)
    flat = [v for part in parts for v in part]
    if shape is not None:
        if len(parts) > 1 and tuple(len(p) for p in parts) != shape.part_sizes:
            raise ParseError(f"part lengths {[len(p) for p in parts]} do not match "
                             f"{list(shape.part_sizes)}", 1, 1, source)
        if len(flat) != shape.n:
            raise ParseError(f"vector has {len(flat)} entries, expected {shape.n}", 1, 1, source)
    return flat


def format_vector(values: Sequence[int], shape: PartitionShape | None = None) -> str:
    if shape is None:
        return " ".join(str(int(x)) for x in values) + "\n"
    return " ; ".join(" ".join(str(int(x)) for x in part) for part in shape.split(values)) + "\n"


_SECTIONS = ("zero", "plus", "minus")


def format_face_split(split: FaceSplit, n: int, k: int) -> str:
    """Three hypergraph blocks, each introduced by a ``[zero]``/``[plus]``/``[minus]`` line."""
    out = []
    for name, edges in zip(_SECTIONS, (split.k_zero, split.k_plus, split.k_minus)):
        out.append(f"[{name}]\n" + format_hypergraph(Hypergraph(n, k, list(edges))))
    return "".join(out)


def parse_face_split(text: str, source: str = "<input>") -> FaceSplit:
    blocks: dict[str, list[str]] = {}
    current = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.strip()
        if stripped.startswith("[") and stripped.endswith("]"):
            current = stripped[1:-1]
            if current not in _SECTIONS or current in blocks:
                raise ParseError(f"unexpected section [{current}]", lineno, 1, source)
            blocks[current] = [""] * (lineno)  # keep line numbers aligned
            continue
        if current is None:
            if raw.split("#", 1)[0].strip():
                raise ParseError("content before the first section", lineno, 1, source)
            continue
        blocks[current].append(raw)
    missing = [s for s in _SECTIONS if s not in blocks]
    if missing:
        raise ParseError(f"missing section [{missing[0]}]", 1, 1, source)
    edges = [tuple(parse_hypergraph("\n".join(blocks[s]), source).edges) for s in _SECTIONS]
    return FaceSplit(*edges)
