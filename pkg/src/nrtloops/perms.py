"""Permutations as tuples of images, plus 1-based cycle notation.

A permutation ``p`` of ``0..d-1`` is the tuple ``(p[0], ..., p[d-1])``.
Products compose like functions: ``compose(p, q)`` applies ``q`` first, so
``compose(p, q)[a] == p[q[a]]``.
"""

from __future__ import annotations

import re
from typing import Sequence

from .errors import NotAPermutation, ParseError

Perm = tuple[int, ...]

_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def identity(degree: int) -> Perm:
    return tuple(range(degree))


def compose(p: Sequence[int], q: Sequence[int]) -> Perm:
    return tuple(p[a] for a in q)


def inverse(p: Sequence[int]) -> Perm:
    out = [0] * len(p)
    for a, b in enumerate(p):
        out[b] = a
    return tuple(out)


def check_perm(p: Sequence[int], degree: int) -> Perm:
    p = tuple(int(a) for a in p)
    if len(p) != degree or sorted(p) != list(range(degree)):
        raise NotAPermutation(f"{list(p)} is not a permutation of 0..{degree - 1}")
    return p


def cycles(p: Sequence[int]) -> list[list[int]]:
    """Nontrivial cycles of ``p`` (0-based), each starting at its smallest point."""
    seen = [False] * len(p)
    out = []
    for start in range(len(p)):
        if seen[start]:
            continue
        cyc = []
        a = start
        while not seen[a]:
            seen[a] = True
            cyc.append(a)
            a = p[a]
        if len(cyc) > 1:
            out.append(cyc)
    return out


def cycle_type(p: Sequence[int]) -> tuple[int, ...]:
    """Cycle lengths in decreasing order, fixed points included."""
    seen = [False] * len(p)
    lengths = []
    for start in range(len(p)):
        if seen[start]:
            continue
        n = 0
        a = start
        while not seen[a]:
            seen[a] = True
            a = p[a]
            n += 1
        lengths.append(n)
    return tuple(sorted(lengths, reverse=True))


def perm_order(p: Sequence[int]) -> int:
    from math import lcm

    return lcm(*cycle_type(p)) if len(p) else 1


def format_cycles(p: Sequence[int]) -> str:
    """1-based cycle notation; the identity is ``"()"``."""
    cs = cycles(p)
    if not cs:
        return "()"
    return "".join("(" + " ".join(str(a + 1) for a in c) + ")" for c in cs)


def parse_cycles(text: str, degree: int) -> Perm:
    """Parse 1-based cycle notation such as ``"(1 2)(3 4)"``.

    Cycles may be disjoint or not; they are multiplied right to left. An empty
    string, or ``"()"``, is the identity.
    """
    stripped = text.strip()
    leftover = _CYCLE_RE.sub("", stripped).strip()
    if leftover:
        raise ParseError(f"unexpected text {leftover!r} in cycle string {text!r}")
    result = identity(degree)
    for body in reversed(_CYCLE_RE.findall(stripped)):
        tokens = body.replace(",", " ").split()
        if not tokens:
            continue
        try:
            pts = [int(t) - 1 for t in tokens]
        except ValueError:
            raise ParseError(f"non-integer point in cycle ({body})") from None
        if len(set(pts)) != len(pts):
            raise ParseError(f"repeated point in cycle ({body})")
        for a in pts:
            if not 0 <= a < degree:
                raise ParseError(f"point {a + 1} outside 1..{degree}")
        cyc = list(range(degree))
        for i, a in enumerate(pts):
            cyc[a] = pts[(i + 1) % len(pts)]
        result = compose(tuple(cyc), result)
    return result


def parse_generators(text: str, degree: int) -> list[Perm]:
    """Split a generator list like ``"(1 2), (1 2 3)"`` on commas/semicolons
    that sit between cycles, then parse each generator."""
    parts = [s for s in re.split(r"(?<=\))\s*[,;]\s*", text.strip()) if s.strip()]
    return [parse_cycles(s, degree) for s in parts]
