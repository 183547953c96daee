"""Named small groups and the built-in sweep catalog."""

from __future__ import annotations

from itertools import permutations

from . import perms as P
from .errors import ParameterOutOfRange, ParseError, UnknownFamily
from .groups import DEFAULT_CLOSURE_CAP, Group, _closure, group_from_perms, group_from_table

FAMILIES = ("cyclic", "dihedral", "symmetric", "alternating", "quaternion8")
_SHORT = {"cyc": "cyclic", "dih": "dihedral", "sym": "symmetric", "alt": "alternating", "q8": "quaternion8"}
_LONG = {v: k for k, v in _SHORT.items()}
MAX_SYM_DEGREE = 6

# sign * unit; units 0..3 = 1, i, j, k
_QUAT_UNIT = [
    [(1, 0), (1, 1), (1, 2), (1, 3)],
    [(1, 1), (-1, 0), (1, 3), (-1, 2)],
    [(1, 2), (-1, 3), (-1, 0), (1, 1)],
    [(1, 3), (1, 2), (-1, 1), (-1, 0)],
]


def _parity(p) -> int:
    return sum(len(c) - 1 for c in P.cycles(p)) % 2


def _lex_group(elems, name: str) -> Group:
    return group_from_perms(sorted(elems), name=name)


def _quaternion8() -> Group:
    # element order: 1, -1, i, -i, j, -j, k, -k
    elems = [(s, u) for u in range(4) for s in (1, -1)]
    index = {e: i for i, e in enumerate(elems)}

    def mul(a, b):
        s, u = _QUAT_UNIT[a[1]][b[1]]
        return (a[0] * b[0] * s, u)

    table = [[index[mul(a, b)] for b in elems] for a in elems]
    return group_from_table(table, name="q8")


def named_group(family: str, parameter: int = 0, cap: int = DEFAULT_CLOSURE_CAP) -> Group:
    """Build ``cyclic``, ``dihedral``, ``symmetric``, ``alternating`` or ``quaternion8``.

    Permutation families are indexed lexicographically by one-line image
    tuple, which puts the identity first. ``dihedral n`` has order ``2n``.
    """
    family = _SHORT.get(family, family)
    if family not in FAMILIES:
        raise UnknownFamily(f"unknown group family {family!r}; known: {', '.join(FAMILIES)}")
    n = parameter
    if family == "quaternion8":
        return _quaternion8()
    name = f"{_LONG[family]}:{n}"
    if family == "cyclic":
        if n < 1:
            raise ParameterOutOfRange(f"cyclic needs n >= 1, got {n}")
        return _lex_group(_closure(n, [tuple((a + 1) % n for a in range(n))], cap), name)
    if family == "dihedral":
        if n < 1:
            raise ParameterOutOfRange(f"dihedral needs n >= 1, got {n}")
        if n == 1:
            gens = [(1, 0)]
        elif n == 2:
            gens = [(1, 0, 3, 2), (2, 3, 0, 1)]
        else:
            gens = [tuple((a + 1) % n for a in range(n)), tuple((-a) % n for a in range(n))]
        return _lex_group(_closure(len(gens[0]), gens, cap), name)
    if not 1 <= n <= MAX_SYM_DEGREE:
        raise ParameterOutOfRange(f"{family} needs 1 <= n <= {MAX_SYM_DEGREE}, got {n}")
    elems = list(permutations(range(n)))
    if family == "alternating":
        elems = [p for p in elems if _parity(p) == 0]
    return _lex_group(elems, name)


def parse_group_id(ident: str) -> Group:
    """Resolve identifiers such as ``sym:3``, ``dih:4`` or ``q8``."""
    ident = ident.strip()
    if ident == "q8":
        return named_group("quaternion8")
    fam, sep, num = ident.partition(":")
    if not sep or fam not in _SHORT:
        raise UnknownFamily(f"unknown group identifier {ident!r}")
    try:
        n = int(num)
    except ValueError:
        raise ParseError(f"bad parameter in group identifier {ident!r}") from None
    return named_group(fam, n)


CATALOG_IDS: tuple[str, ...] = (
    *(f"cyc:{n}" for n in range(1, 25)),
    *(f"dih:{n}" for n in range(1, 13)),
    "q8",
    "sym:3", "sym:4", "sym:5",
    "alt:4", "alt:5",
)


def catalog(max_order: int | None = None) -> list[Group]:
    """The built-in catalog in its fixed order, optionally filtered by order."""
    groups = [parse_group_id(i) for i in CATALOG_IDS]
    if max_order is not None:
        groups = [G for G in groups if G.order <= max_order]
    return groups
