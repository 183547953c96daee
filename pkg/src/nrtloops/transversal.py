"""Normalized right transversals (NRTs): enumeration and set-level predicates."""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import product
from math import prod
from typing import Iterator, Optional

from .errors import EnumerationTooLarge, SubgroupIsNormal
from .groups import CosetDecomposition, Group, Subgroup, cosets, is_normal

DEFAULT_NRT_CAP = 10**6


@dataclass(frozen=True, eq=False)
class Frame:
    """A pair (G, H) with both coset decompositions precomputed."""

    group: Group
    subgroup: Subgroup
    right: CosetDecomposition
    left: CosetDecomposition

    @classmethod
    def of(cls, G: Group, H: Subgroup) -> "Frame":
        return cls(G, H, cosets(G, H, "right"), cosets(G, H, "left"))

    @property
    def index(self) -> int:
        return len(self.right)

    @cached_property
    def normal(self) -> bool:
        return is_normal(self.group, self.subgroup)


@dataclass(frozen=True, eq=False)
class Transversal:
    frame: Frame
    reps: tuple[int, ...]

    @property
    def group(self) -> Group:
        return self.frame.group

    @property
    def subgroup(self) -> Subgroup:
        return self.frame.subgroup

    @property
    def elements(self) -> frozenset[int]:
        return frozenset(self.reps)

    def __len__(self) -> int:
        return len(self.reps)

    def __eq__(self, other) -> bool:
        return isinstance(other, Transversal) and self.frame is other.frame and self.reps == other.reps

    def __hash__(self) -> int:
        return hash((id(self.frame), self.reps))

    def validate(self) -> None:
        right = self.frame.right
        if len(self.reps) != len(right):
            raise ValueError(f"{len(self.reps)} reps for {len(right)} right cosets")
        for k, r in enumerate(self.reps):
            if right.coset_of[r] != k:
                raise ValueError(f"rep {r} is not in right coset {k}")
        if self.reps[right.rep_index_of_h] != 0:
            raise ValueError("transversal is not normalized: identity missing")

    def to_json(self) -> str:
        return json.dumps(list(self.reps))

    def describe(self) -> str:
        return "{" + ", ".join(self.group.label(r) for r in self.reps) + "}"


def _frame(G: Group, H: Subgroup, frame: Optional[Frame]) -> Frame:
    return frame if frame is not None else Frame.of(G, H)


def transversal_from_reps(G: Group, H: Subgroup, reps, frame: Optional[Frame] = None) -> Transversal:
    """Accept reps in any order; they are re-sorted into coset order and validated."""
    fr = _frame(G, H, frame)
    by_coset = {}
    for r in reps:
        k = fr.right.coset_of[r]
        if k in by_coset:
            raise ValueError(f"{by_coset[k]} and {r} lie in the same right coset")
        by_coset[k] = r
    if len(by_coset) != fr.index:
        raise ValueError(f"{len(by_coset)} reps for {fr.index} right cosets")
    S = Transversal(fr, tuple(by_coset[k] for k in range(fr.index)))
    S.validate()
    return S


def canonical_nrt(G: Group, H: Subgroup, frame: Optional[Frame] = None) -> Transversal:
    fr = _frame(G, H, frame)
    return Transversal(fr, tuple(c[0] for c in fr.right.cosets))


def nrt_count(G: Group, H: Subgroup) -> int:
    return len(H) ** (G.order // len(H) - 1)


def _choices(fr: Frame) -> list[tuple[int, ...]]:
    return [(0,) if k == fr.right.rep_index_of_h else c for k, c in enumerate(fr.right.cosets)]


def enumerate_nrts(G: Group, H: Subgroup, cap: int = DEFAULT_NRT_CAP, frame: Optional[Frame] = None,
                   start: int = 0, stop: Optional[int] = None) -> Iterator[Transversal]:
    """Every NRT once, in odometer order: coset 0 is the most significant digit,
    the last coset turns fastest, and each digit runs through its coset in
    increasing element index.

    ``start``/``stop`` select a slice of odometer indices so disjoint ranges
    can be processed independently.
    """
    total = nrt_count(G, H)
    if total > cap:
        raise EnumerationTooLarge(f"{total} NRTs exceed the cap {cap}")
    fr = _frame(G, H, frame)
    stop = total if stop is None else min(stop, total)
    if start == 0 and stop == total:
        for reps in product(*_choices(fr)):
            yield Transversal(fr, reps)
        return
    for i in range(start, stop):
        yield nrt_at(G, H, i, frame=fr)


def nrt_at(G: Group, H: Subgroup, index: int, frame: Optional[Frame] = None) -> Transversal:
    """The NRT at a given odometer position."""
    fr = _frame(G, H, frame)
    choices = _choices(fr)
    total = prod(len(c) for c in choices)
    if not 0 <= index < total:
        raise IndexError(f"odometer index {index} outside 0..{total - 1}")
    reps = []
    for c in reversed(choices):
        index, d = divmod(index, len(c))
        reps.append(c[d])
    return Transversal(fr, tuple(reversed(reps)))


def nrt_index(S: Transversal) -> int:
    """Inverse of :func:`nrt_at`."""
    idx = 0
    for c, r in zip(_choices(S.frame), S.reps):
        idx = idx * len(c) + c.index(r)
    return idx


def is_left_transversal(S: Transversal) -> bool:
    left = S.frame.left.coset_of
    return len({left[r] for r in S.reps}) == len(S.reps)


def left_coset_collision(S: Transversal) -> Optional[tuple[int, int]]:
    """Two reps sharing a left coset, or None for a both-sided transversal."""
    left = S.frame.left.coset_of
    seen = {}
    for r in S.reps:
        k = left[r]
        if k in seen:
            return seen[k], r
        seen[k] = r
    return None


def is_ar_transversal(S: Transversal) -> bool:
    """True iff conjugation by each ``h`` in H permutes the reps."""
    G = S.group
    reps = S.elements
    for h in S.subgroup.elems:
        if {G.conjugate(s, h) for s in reps} != reps:
            return False
    return True


def build_lemma2_witness(G: Group, H: Subgroup, frame: Optional[Frame] = None) -> Transversal:
    """An NRT that is not a left transversal, built from ``x`` with ``xH != Hx``.

    ``x`` is the smallest such element (swapped for its inverse when ``xH`` is
    inside ``Hx``), ``y`` the smallest element of ``xH - Hx``, and every other
    coset takes its smallest element.
    """
    fr = _frame(G, H, frame)
    t = G.table

    def left(x):
        return {t[x][h] for h in H.elems}

    def right(x):
        return {t[h][x] for h in H.elems}

    x = next((g for g in range(G.order) if left(g) != right(g)), None)
    if x is None:
        raise SubgroupIsNormal("H is normal in G; every NRT is a left transversal")
    if not left(x) - right(x):
        x = G.inv[x]
    y = min(left(x) - right(x))
    reps = [c[0] for c in fr.right.cosets]
    rc = fr.right.coset_of
    reps[rc[x]] = x
    reps[rc[y]] = y
    return Transversal(fr, tuple(reps))
