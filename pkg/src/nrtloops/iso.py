"""Isomorphism of right loops: fingerprints, backtracking search, classification."""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from math import lcm
from typing import Iterable, Optional

from . import perms as P
from .loops import RightLoop


@dataclass(frozen=True)
class LoopFingerprint:
    size: int
    rt_cycle_types: tuple[tuple[int, ...], ...]
    left_bijective: int
    unit_solvable_rows: int
    rt_orders: tuple[int, ...]


def _cached(L: RightLoop, key: str, compute):
    val = L.__dict__.get(key)
    if val is None:
        val = compute(L)
        object.__setattr__(L, key, val)
    return val


def _column_types(L: RightLoop) -> tuple[tuple[int, ...], ...]:
    return _cached(L, "_col_types", lambda L: tuple(P.cycle_type(c) for c in L.columns))


def _fingerprint(L: RightLoop) -> LoopFingerprint:
    full = set(range(L.size))
    types = _column_types(L)
    return LoopFingerprint(
        size=L.size,
        rt_cycle_types=tuple(sorted(types)),
        left_bijective=sum(1 for row in L.op if set(row) == full),
        unit_solvable_rows=sum(1 for row in L.op if 0 in row),
        rt_orders=tuple(sorted(lcm(*t) for t in types)),
    )


def fingerprint(L: RightLoop) -> LoopFingerprint:
    return _cached(L, "_fingerprint", _fingerprint)


def _element_keys(L: RightLoop) -> list[tuple]:
    # per-element invariants preserved by any isomorphism fixing 0
    def compute(L):
        types = _column_types(L)
        return [(types[x], len(set(L.op[x])), 0 in L.op[x], L.op[x][x] == 0) for x in range(L.size)]

    return _cached(L, "_elem_keys", compute)


def _key_profile(L: RightLoop) -> tuple:
    return _cached(L, "_key_profile", lambda L: tuple(sorted(_element_keys(L))))


def are_isomorphic(L1: RightLoop, L2: RightLoop) -> Optional[tuple[int, ...]]:
    """A bijection ``p`` with ``p(x o y) = p(x) o' p(y)``, or None.

    ``p(0) = 0`` is forced since 0 is the only idempotent. Images are tried in
    index order; every new assignment is propagated through products of
    already-mapped pairs, which usually pins the rest of the map quickly.
    """
    m = L1.size
    if m != L2.size:
        return None
    if L1.op == L2.op:
        return tuple(range(m))
    if fingerprint(L1) != fingerprint(L2):
        return None
    k1, k2 = _element_keys(L1), _element_keys(L2)
    if _key_profile(L1) != _key_profile(L2):
        return None
    a, b = L1.op, L2.op
    cands = [[y for y in range(m) if k2[y] == k1[x]] for x in range(m)]

    def assign(p, q, x, y):
        """Map x -> y and close under products; False on contradiction."""
        stack = [(x, y)]
        mapped = [u for u in range(m) if p[u] >= 0]
        while stack:
            u, v = stack.pop()
            if p[u] >= 0:
                if p[u] != v:
                    return False
                continue
            if q[v] >= 0 or k1[u] != k2[v]:
                return False
            p[u], q[v] = v, u
            mapped.append(u)
            for w in mapped:
                stack.append((a[u][w], b[v][p[w]]))
                stack.append((a[w][u], b[p[w]][v]))
        return True

    p0 = [-1] * m
    q0 = [-1] * m
    if not assign(p0, q0, 0, 0):
        return None

    def search(p, q):
        x = next((u for u in range(m) if p[u] < 0), None)
        if x is None:
            return tuple(p)
        for y in cands[x]:
            if q[y] >= 0:
                continue
            p2, q2 = list(p), list(q)
            if assign(p2, q2, x, y):
                found = search(p2, q2)
                if found is not None:
                    return found
        return None

    return search(p0, q0)


def is_isomorphism(L1: RightLoop, L2: RightLoop, p) -> bool:
    m = L1.size
    if L2.size != m or sorted(p) != list(range(m)):
        return False
    return all(p[L1.op[x][y]] == L2.op[p[x]][p[y]] for x in range(m) for y in range(m))


def transport(L: RightLoop, p) -> RightLoop:
    """The loop on the same indices with ``p(x) o' p(y) = p(x o y)``."""
    m = L.size
    op = [[0] * m for _ in range(m)]
    for x in range(m):
        for y in range(m):
            op[p[x]][p[y]] = p[L.op[x][y]]
    return RightLoop(m, tuple(map(tuple, op)))


@dataclass
class IsoClassification:
    class_count: int = 0
    class_representatives: list[RightLoop] = field(default_factory=list)
    class_sizes: list[int] = field(default_factory=list)
    assignment: list[int] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "classes": self.class_count,
            "sizes": list(self.class_sizes),
            "representatives": [[list(r) for r in L.op] for L in self.class_representatives],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


class Classifier:
    """Incremental greedy classification; the first loop seen represents its class."""

    def __init__(self):
        self.result = IsoClassification()
        self._by_table: dict = {}
        self._buckets: dict[LoopFingerprint, list[int]] = {}

    def add(self, L: RightLoop) -> int:
        res = self.result
        cid = self._by_table.get(L.op)
        if cid is None:
            fp = fingerprint(L)
            bucket = self._buckets.setdefault(fp, [])
            for c in bucket:
                if are_isomorphic(res.class_representatives[c], L) is not None:
                    cid = c
                    break
            else:
                cid = res.class_count
                res.class_count += 1
                res.class_representatives.append(L)
                res.class_sizes.append(0)
                bucket.append(cid)
            self._by_table[L.op] = cid
        res.class_sizes[cid] += 1
        res.assignment.append(cid)
        return cid


def classify(loops: Iterable[RightLoop]) -> IsoClassification:
    c = Classifier()
    for L in loops:
        c.add(L)
    return c.result


def all_isomorphic(loops: Iterable[RightLoop]) -> bool:
    it = iter(loops)
    try:
        first = next(it)
    except StopIteration:
        raise ValueError("all_isomorphic needs a nonempty stream") from None
    return all(are_isomorphic(first, L) is not None for L in it)
