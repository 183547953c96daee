"""Finite groups as index tables, subgroups, cosets and normalizers.

Every group carries its multiplication table over element indices
``0..n-1`` with the identity pinned at index 0. Permutation groups also keep
the permutation behind each index so elements can be printed in cycle
notation.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Literal, Optional, Sequence

from . import perms as P
from .errors import (
    ClosureTooLarge,
    GroupTooLarge,
    MissingInverse,
    NoIdentityAtZero,
    NotAssociative,
    NotLatinSquare,
    ParseError,
)

Side = Literal["right", "left"]

DEFAULT_CLOSURE_CAP = 10_000
DEFAULT_SUBGROUP_CAP = 48


@dataclass(frozen=True, eq=False)
class Group:
    order: int
    table: tuple[tuple[int, ...], ...]
    inv: tuple[int, ...]
    name: Optional[str] = None
    perms: Optional[tuple[P.Perm, ...]] = field(default=None, repr=False)

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    @property
    def degree(self) -> Optional[int]:
        return len(self.perms[0]) if self.perms else None

    def label(self, i: int) -> str:
        """Cycle notation for permutation groups, the bare index otherwise."""
        if self.perms is not None:
            return P.format_cycles(self.perms[i])
        return str(i)

    def index_of_perm(self, p: Sequence[int]) -> int:
        if self.perms is None:
            raise ParseError(f"group {self.name or '?'} has no permutation representation")
        lookup = self.__dict__.get("_perm_index")
        if lookup is None:
            lookup = {q: i for i, q in enumerate(self.perms)}
            object.__setattr__(self, "_perm_index", lookup)
        try:
            return lookup[tuple(p)]
        except KeyError:
            raise ParseError(f"{P.format_cycles(p)} is not an element of {self.name or 'the group'}") from None

    def element_order(self, a: int) -> int:
        k, x = 1, a
        while x != 0:
            x = self.table[x][a]
            k += 1
        return k

    def conjugate(self, a: int, g: int) -> int:
        """``g^-1 a g``"""
        t = self.table
        return t[t[self.inv[g]][a]][g]

    def to_text(self) -> str:
        lines = [str(self.order)]
        lines += [" ".join(map(str, row)) for row in self.table]
        return "\n".join(lines) + "\n"


@dataclass(frozen=True, eq=False)
class Subgroup:
    elems: tuple[int, ...]
    parent: Group

    @property
    def order(self) -> int:
        return len(self.elems)

    @property
    def index(self) -> int:
        return self.parent.order // len(self.elems)

    @property
    def members(self) -> frozenset[int]:
        m = self.__dict__.get("_members")
        if m is None:
            m = frozenset(self.elems)
            object.__setattr__(self, "_members", m)
        return m

    def __contains__(self, a: int) -> bool:
        return a in self.members

    def __len__(self) -> int:
        return len(self.elems)

    def __iter__(self):
        return iter(self.elems)

    def __eq__(self, other) -> bool:
        return isinstance(other, Subgroup) and self.parent is other.parent and self.elems == other.elems

    def __hash__(self) -> int:
        return hash((id(self.parent), self.elems))


@dataclass(frozen=True)
class CosetDecomposition:
    side: Side
    cosets: tuple[tuple[int, ...], ...]
    coset_of: tuple[int, ...]
    rep_index_of_h: int = 0

    def __len__(self) -> int:
        return len(self.cosets)

    def partition(self) -> frozenset[frozenset[int]]:
        return frozenset(frozenset(c) for c in self.cosets)


def group_from_table(table: Sequence[Sequence[int]], name: Optional[str] = None,
                     perms: Optional[Sequence[P.Perm]] = None) -> Group:
    """Validate a Cayley table and wrap it as a :class:`Group`.

    Checks run in the order identity, latin square, inverses, associativity,
    and the first failure is raised naming the offending indices.
    """
    n = len(table)
    if n == 0:
        raise NotLatinSquare("empty table")
    rows = []
    for i, row in enumerate(table):
        if len(row) != n:
            raise NotLatinSquare(f"row {i} has length {len(row)}, expected {n}")
        for j, v in enumerate(row):
            if not (isinstance(v, int) and 0 <= v < n):
                raise NotLatinSquare(f"entry [{i}][{j}] = {v!r} outside 0..{n - 1}")
        rows.append(tuple(int(v) for v in row))
    full = set(range(n))
    for j in range(n):
        if rows[0][j] != j:
            raise NoIdentityAtZero(f"table[0][{j}] = {rows[0][j]}, expected {j}")
        if rows[j][0] != j:
            raise NoIdentityAtZero(f"table[{j}][0] = {rows[j][0]}, expected {j}")
    for i in range(n):
        if set(rows[i]) != full:
            raise NotLatinSquare(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if {rows[i][j] for i in range(n)} != full:
            raise NotLatinSquare(f"column {j} is not a permutation of 0..{n - 1}")
    inv = []
    for i in range(n):
        j = rows[i].index(0)
        if rows[j][i] != 0:
            raise MissingInverse(f"element {i}: {i}*{j} = 0 but {j}*{i} = {rows[j][i]}")
        inv.append(j)
    # (xy)k = x(yk) holds for a set of k closed under the product, so checking
    # a generating set of the loop suffices.
    for k in _loop_generators(rows):
        for i in range(n):
            ri = rows[i]
            for j in range(n):
                if rows[ri[j]][k] != ri[rows[j][k]]:
                    raise NotAssociative(f"({i}*{j})*{k} != {i}*({j}*{k})")
    return Group(order=n, table=tuple(rows), inv=tuple(inv), name=name,
                 perms=tuple(tuple(p) for p in perms) if perms is not None else None)


def _loop_generators(rows: Sequence[Sequence[int]]) -> list[int]:
    n = len(rows)
    span = {0}
    gens = []
    for g in range(n):
        if g in span:
            continue
        gens.append(g)
        frontier = list(span | {g})
        span.add(g)
        while frontier:
            new = []
            for a in frontier:
                for b in list(span):
                    for c in (rows[a][b], rows[b][a]):
                        if c not in span:
                            span.add(c)
                            new.append(c)
            frontier = new
    return gens


def _closure(degree: int, gens: Sequence[Sequence[int]], cap: int) -> list[P.Perm]:
    gens = [P.check_perm(g, degree) for g in gens]
    ident = P.identity(degree)
    elems = [ident]
    seen = {ident}
    queue = deque([ident])
    while queue:
        a = queue.popleft()
        for g in gens:
            b = P.compose(a, g)
            if b not in seen:
                if len(elems) >= cap:
                    raise ClosureTooLarge(f"closure exceeds {cap} elements")
                seen.add(b)
                elems.append(b)
                queue.append(b)
    return elems


def group_from_perms(elems: Sequence[P.Perm], name: Optional[str] = None) -> Group:
    """Build a group from a closed list of permutations; ``elems[0]`` must be the identity."""
    index = {p: i for i, p in enumerate(elems)}
    table = [[index[P.compose(a, b)] for b in elems] for a in elems]
    return group_from_table(table, name=name, perms=elems)


def group_from_generators(degree: int, gens: Sequence[Sequence[int]], name: Optional[str] = None,
                          cap: int = DEFAULT_CLOSURE_CAP) -> Group:
    """Close ``gens`` under composition.

    Elements are indexed in breadth-first discovery order, right-multiplying
    by the generators in the order given; the identity is index 0.
    """
    return group_from_perms(_closure(degree, gens, cap), name=name)


def parse_group_text(text: str, name: Optional[str] = None) -> Group:
    """Read the plain-text table format: ``n`` then ``n`` rows of ``n`` indices."""
    tokens = text.split()
    if not tokens:
        raise ParseError("empty group file")
    try:
        nums = [int(t) for t in tokens]
    except ValueError as exc:
        raise ParseError(f"non-integer token in group file: {exc}") from None
    n = nums[0]
    if n <= 0 or len(nums) != 1 + n * n:
        raise ParseError(f"expected {n}x{n} table after the order line, got {len(nums) - 1} entries")
    return group_from_table([nums[1 + i * n: 1 + (i + 1) * n] for i in range(n)], name=name)


def _close_set(G: Group, seed: Iterable[int]) -> tuple[int, ...]:
    t = G.table
    elems = {0}
    frontier = [0]
    gens = sorted(set(seed) - {0})
    # right-multiplying by generators reaches everything in a finite group
    while frontier:
        new = []
        for a in frontier:
            row = t[a]
            for g in gens:
                b = row[g]
                if b not in elems:
                    elems.add(b)
                    new.append(b)
        frontier = new
    return tuple(sorted(elems))


def subgroup_generate(G: Group, gens: Iterable[int]) -> Subgroup:
    gens = list(gens)
    for g in gens:
        if not 0 <= g < G.order:
            raise IndexError(f"element index {g} outside 0..{G.order - 1}")
    return Subgroup(_close_set(G, gens), G)


def subgroup_from_elems(G: Group, elems: Iterable[int]) -> Subgroup:
    """Wrap an explicit element list, checking it really is a subgroup."""
    es = tuple(sorted(set(elems)))
    for g in es:
        if not 0 <= g < G.order:
            raise IndexError(f"element index {g} outside 0..{G.order - 1}")
    if _close_set(G, es) != es:
        raise ValueError(f"{list(es)} is not closed under multiplication")
    return Subgroup(es, G)


def all_subgroups(G: Group, cap: int = DEFAULT_SUBGROUP_CAP) -> list[Subgroup]:
    """Every subgroup once, sorted by (size, elements).

    Starts from the cyclic subgroups and keeps extending known subgroups by
    one outside element until nothing new appears.
    """
    if G.order > cap:
        raise GroupTooLarge(f"order {G.order} exceeds subgroup sweep cap {cap}")
    found = {_close_set(G, [g]) for g in range(G.order)}
    frontier = list(found)
    while frontier:
        new = []
        for H in frontier:
            hs = set(H)
            for g in range(G.order):
                if g in hs:
                    continue
                K = _close_set(G, H + (g,))
                if K not in found:
                    found.add(K)
                    new.append(K)
        frontier = new
    return [Subgroup(e, G) for e in sorted(found, key=lambda e: (len(e), e))]


def is_normal(G: Group, H: Subgroup) -> bool:
    members = H.members
    for g in range(G.order):
        for h in H.elems:
            if G.conjugate(h, g) not in members:
                return False
    return True


def cosets(G: Group, H: Subgroup, side: Side = "right") -> CosetDecomposition:
    """Right cosets ``Hx`` or left cosets ``xH``, numbered by smallest unassigned element."""
    t = G.table
    coset_of = [-1] * G.order
    blocks = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        if side == "right":
            block = sorted(t[h][g] for h in H.elems)
        elif side == "left":
            block = sorted(t[g][h] for h in H.elems)
        else:
            raise ValueError(f"side must be 'right' or 'left', not {side!r}")
        for b in block:
            coset_of[b] = len(blocks)
        blocks.append(tuple(block))
    return CosetDecomposition(side, tuple(blocks), tuple(coset_of), coset_of[0])


def normalizer(G: Group, S: Iterable[int]) -> Subgroup:
    """``{g : g^-1 S g = S}`` for an arbitrary nonempty subset ``S``."""
    S = frozenset(S)
    if not S:
        raise ValueError("normalizer needs a nonempty subset")
    keep = [g for g in range(G.order) if {G.conjugate(s, g) for s in S} == S]
    return Subgroup(tuple(keep), G)
