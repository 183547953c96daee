"""Right loops induced on transversals and their c-groupoid data.

Loop elements are numbered by right coset, so loop index ``k`` is the rep of
coset ``k`` and the identity (the coset of H) is index 0.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Optional, Sequence

from . import perms as P
from .transversal import Transversal, is_left_transversal

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True, eq=False)
class RightLoop:
    size: int
    op: Table
    origin: Optional[Transversal] = field(default=None, repr=False)

    def __eq__(self, other) -> bool:
        return isinstance(other, RightLoop) and self.op == other.op

    def __hash__(self) -> int:
        return hash(self.op)

    @classmethod
    def from_table(cls, table: Sequence[Sequence[int]]) -> "RightLoop":
        L = cls(len(table), tuple(tuple(int(v) for v in row) for row in table))
        problems = loop_problems(L)
        if problems:
            raise ValueError("not a right loop: " + "; ".join(problems))
        return L

    def element(self, i: int) -> int:
        """Group element behind loop index ``i``."""
        if self.origin is None:
            raise ValueError("loop has no source transversal")
        return self.origin.reps[i]

    @property
    def columns(self) -> tuple[P.Perm, ...]:
        cols = self.__dict__.get("_columns")
        if cols is None:
            cols = tuple(zip(*self.op)) if self.size else ()
            object.__setattr__(self, "_columns", cols)
        return cols

    def to_dict(self) -> dict:
        return {"size": self.size, "table": [list(r) for r in self.op]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def loop_problems(L: RightLoop) -> list[str]:
    """Violations of the right-loop axioms, empty when the table is valid.

    Also checks that 0 is the only idempotent, which right cancellation forces.
    """
    m = L.size
    out = []
    if len(L.op) != m or any(len(r) != m for r in L.op):
        return [f"table is not {m}x{m}"]
    full = set(range(m))
    for x in range(m):
        if L.op[0][x] != x:
            out.append(f"0*{x} = {L.op[0][x]}")
        if L.op[x][0] != x:
            out.append(f"{x}*0 = {L.op[x][0]}")
    for x, col in enumerate(L.columns):
        if set(col) != full:
            out.append(f"right translation R_{x} is not a bijection")
    for x in range(1, m):
        if L.op[x][x] == x:
            out.append(f"{x} is idempotent")
    return out


def induced_loop(S: Transversal) -> RightLoop:
    """``x o y`` is the unique rep lying in the right coset of ``x*y``."""
    t = S.group.table
    rc = S.frame.right.coset_of
    reps = S.reps
    op = tuple(tuple(rc[row[r]] for r in reps) for row in (t[x] for x in reps))
    return RightLoop(len(reps), op, S)


@dataclass(frozen=True)
class CGroupoid:
    """Index tables for the factorizations ``x*y = f(x,y) (x o y)`` and
    ``x*h = sigma_x(h) (x theta h)``.

    ``h_elems`` lists H; ``sigma[x][k]`` and ``f[x][y]`` are group element
    indices, ``theta[x][k]`` is a loop index, with ``k`` a position in
    ``h_elems``.
    """

    h_elems: tuple[int, ...]
    sigma: Table
    f: Table
    theta: Table

    def to_dict(self) -> dict:
        return {
            "h": list(self.h_elems),
            "sigma": [list(r) for r in self.sigma],
            "f": [list(r) for r in self.f],
            "theta": [list(r) for r in self.theta],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def c_groupoid(S: Transversal, loop: Optional[RightLoop] = None) -> CGroupoid:
    G = S.group
    t, inv = G.table, G.inv
    rc = S.frame.right.coset_of
    reps = S.reps
    hs = S.subgroup.elems
    L = loop if loop is not None else induced_loop(S)
    f = tuple(
        tuple(t[t[x][y]][inv[reps[L.op[i][j]]]] for j, y in enumerate(reps))
        for i, x in enumerate(reps)
    )
    theta = tuple(tuple(rc[t[x][h]] for h in hs) for x in reps)
    sigma = tuple(
        tuple(t[t[x][h]][inv[reps[theta[i][k]]]] for k, h in enumerate(hs))
        for i, x in enumerate(reps)
    )
    return CGroupoid(hs, sigma, f, theta)


def sigma_row(S: Transversal, i: int) -> tuple[int, ...]:
    """``sigma_x`` on H for the rep at loop index ``i``, without the rest of the c-groupoid."""
    G = S.group
    t, inv = G.table, G.inv
    rc = S.frame.right.coset_of
    x = S.reps[i]
    row = t[x]
    return tuple(t[row[h]][inv[S.reps[rc[row[h]]]]] for h in S.subgroup.elems)


def cgroupoid_problems(S: Transversal, C: CGroupoid, loop: Optional[RightLoop] = None) -> list[str]:
    """Check both defining factorizations, the right-action law and normalization."""
    G = S.group
    t = G.table
    reps = S.reps
    H = S.subgroup
    hs = C.h_elems
    pos = {h: k for k, h in enumerate(hs)}
    L = loop if loop is not None else induced_loop(S)
    m = len(reps)
    out = []
    for i, x in enumerate(reps):
        for j, y in enumerate(reps):
            fxy = C.f[i][j]
            if fxy not in H:
                out.append(f"f({i},{j}) not in H")
            elif t[fxy][reps[L.op[i][j]]] != t[x][y]:
                out.append(f"x*y != f(x,y)(x o y) at ({i},{j})")
        for k, h in enumerate(hs):
            s = C.sigma[i][k]
            if s not in H:
                out.append(f"sigma_{i}({h}) not in H")
            elif t[s][reps[C.theta[i][k]]] != t[x][h]:
                out.append(f"x*h != sigma_x(h)(x theta h) at ({i},{h})")
        if C.theta[i][pos[0]] != i:
            out.append(f"{i} theta 1 != {i}")
        for k, h in enumerate(hs):
            for k2, h2 in enumerate(hs):
                lhs = C.theta[i][pos[t[h][h2]]]
                rhs = C.theta[C.theta[i][k]][k2]
                if lhs != rhs:
                    out.append(f"theta is not a right action at ({i},{h},{h2})")
    if C.sigma and list(C.sigma[0]) != list(hs):
        out.append("sigma_1 is not the identity on H")
    for i in range(m):
        if C.f[0][i] != 0 or C.f[i][0] != 0:
            out.append(f"f(1,{i}) or f({i},1) is not 1")
    return out


def right_translation(L: RightLoop, x: int) -> P.Perm:
    """``R_x : y -> y o x`` as an image tuple."""
    return L.columns[x]


def has_rip(L: RightLoop) -> tuple[bool, Optional[tuple[int, ...]]]:
    """Right inverse property: returns the witnessing map ``r`` when it holds."""
    where: dict[P.Perm, int] = {}
    for z, col in enumerate(L.columns):
        where.setdefault(col, z)
    r = []
    for col in L.columns:
        z = where.get(P.inverse(col))
        if z is None:
            return False, None
        r.append(z)
    return True, tuple(r)


def is_rcc(L: RightLoop) -> bool:
    """Every ``R_x R_y R_x^-1`` (rightmost applied first) is some ``R_z``."""
    cols = L.columns
    colset = set(cols)
    for rx in cols:
        rxi = P.inverse(rx)
        for ry in cols:
            if tuple(rx[ry[a]] for a in rxi) not in colset:
                return False
    return True


def solves_unit_equation(L: RightLoop) -> bool:
    """``x o X = 1`` is solvable for every ``x``."""
    return all(0 in row for row in L.op)


def sigma_surjective_all(C: CGroupoid) -> bool:
    # finite H: surjective iff injective
    return all(len(set(row)) == len(row) for row in C.sigma)


def sigma_surjective_fast(S: Transversal) -> bool:
    n = len(S.subgroup)
    return all(len(set(sigma_row(S, i))) == n for i in range(len(S.reps)))


def prop1_check(S: Transversal) -> tuple[bool, bool, bool]:
    """(sigma surjective for all x, unit equation solvable, both-sided)."""
    L = induced_loop(S)
    return (
        sigma_surjective_all(c_groupoid(S, L)),
        solves_unit_equation(L),
        is_left_transversal(S),
    )
