"""Finite groups as explicit Cayley tables, validated exhaustively.

Elements are dense indices 0..order-1; cayley[g][h] is the product g*h
(row acts on the left). Names exist only in pretty-printing, never in
the core data.
"""

from __future__ import annotations

import itertools
import re
from dataclasses import dataclass

import numpy as np

from .errors import (
    MalformedTable,
    MissingIdentity,
    MissingInverse,
    NoIdentity,
    NoInverse,
    NonAssociative,
    NotClosed,
    UnknownName,
)

CATALOG_MAX_ORDER = 24  # the catalog stops at symmetric(4); all checks are exhaustive


@dataclass(frozen=True)
class FiniteGroup:
    """A group of given order with precomputed identity and inverse tables."""

    order: int
    cayley: tuple[tuple[int, ...], ...]
    identity: int
    inverse: tuple[int, ...]

    def mul(self, g: int, h: int) -> int:
        return self.cayley[g][h]

    def inv(self, g: int) -> int:
        return self.inverse[g]

    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        c = self.cayley
        return all(c[g][h] == c[h][g] for g in self.elements() for h in self.elements())


@dataclass(frozen=True)
class Subgroup:
    parent: FiniteGroup
    members: tuple[int, ...]

    @property
    def order(self) -> int:
        return len(self.members)


def _as_table(order: int, rows, what: str) -> tuple[tuple[int, ...], ...]:
    if order < 1:
        raise MalformedTable(f"{what}: order must be positive, got {order}", order=order)
    rows = [list(r) for r in rows]
    if len(rows) != order:
        raise MalformedTable(
            f"{what}: expected {order} rows, got {len(rows)}", rows=len(rows)
        )
    for i, row in enumerate(rows):
        if len(row) != order:
            raise MalformedTable(
                f"{what}: row {i} has length {len(row)}, expected {order}", row=i
            )
        for j, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or not (0 <= v < order):
                raise MalformedTable(
                    f"{what}: entry [{i}][{j}] = {v!r} out of range", row=i, col=j
                )
    return tuple(tuple(int(v) for v in row) for row in rows)


def _associativity_witness(cayley: np.ndarray):
    """First (g,h,k) with (g*h)*k != g*(h*k), or None. Row-at-a-time to bound memory."""
    n = cayley.shape[0]
    for g in range(n):
        lhs = cayley[cayley[g], :]   # [h,k] -> (g*h)*k
        rhs = cayley[g][cayley]      # [h,k] -> g*(h*k)
        if not np.array_equal(lhs, rhs):
            h, k = np.argwhere(lhs != rhs)[0]
            return g, int(h), int(k)
    return None


def build_group(order: int, cayley) -> FiniteGroup:
    """Validate a Cayley table exhaustively and return the group.

    Checks run in order: shape/range, identity existence, associativity,
    inverse existence. The first violated axiom is reported with a witness.
    """
    table = _as_table(order, cayley, "cayley")
    identity = None
    for e in range(order):
        if all(table[e][g] == g and table[g][e] == g for g in range(order)):
            identity = e
            break
    if identity is None:
        raise NoIdentity("no two-sided identity element")
    arr = np.array(table, dtype=np.int64)
    bad = _associativity_witness(arr)
    if bad is not None:
        g, h, k = bad
        raise NonAssociative(
            f"(g*h)*k != g*(h*k) at (g,h,k)=({g},{h},{k})", g=g, h=h, k=k
        )
    inverse = []
    for g in range(order):
        inv = next(
            (h for h in range(order) if table[g][h] == identity and table[h][g] == identity),
            None,
        )
        if inv is None:
            raise NoInverse(f"element {g} has no inverse", element=g)
        inverse.append(inv)
    return FiniteGroup(order=order, cayley=table, identity=identity, inverse=tuple(inverse))


def _cyclic_table(n: int):
    return [[(a + b) % n for b in range(n)] for a in range(n)]


def _symmetric_table(n: int):
    # elements are one-line tuples in lexicographic order; (g*h)(x) = g(h(x))
    perms = list(itertools.permutations(range(n)))
    index = {p: i for i, p in enumerate(perms)}
    table = [
        [index[tuple(g[h[x]] for x in range(n))] for h in perms]
        for g in perms
    ]
    return table, perms


def symmetric_elements(n: int) -> list[tuple[int, ...]]:
    """One-line notation for the elements of symmetric(n), in catalog order."""
    if not 1 <= n <= 4:
        raise UnknownName(f"symmetric({n}) is out of catalog range", name=f"symmetric({n})")
    return list(itertools.permutations(range(n)))


def catalog_group(name: str) -> FiniteGroup:
    """Builtin catalog: cyclic(n) for n<=12, symmetric(n) for n<=4, klein_four."""
    m = re.fullmatch(r"cyclic\((\d+)\)", name)
    if m:
        n = int(m.group(1))
        if not 1 <= n <= 12:
            raise UnknownName(f"cyclic({n}) is out of catalog range", name=name)
        return build_group(n, _cyclic_table(n))
    m = re.fullmatch(r"symmetric\((\d+)\)", name)
    if m:
        n = int(m.group(1))
        if not 1 <= n <= 4:
            raise UnknownName(f"symmetric({n}) is out of catalog range", name=name)
        table, perms = _symmetric_table(n)
        return build_group(len(perms), table)
    if name == "klein_four":
        return build_group(4, [[a ^ b for b in range(4)] for a in range(4)])
    raise UnknownName(f"unknown catalog name {name!r}", name=name)


def catalog_names() -> list[str]:
    names = [f"cyclic({n})" for n in range(1, 13)]
    names += [f"symmetric({n})" for n in range(1, 5)]
    names.append("klein_four")
    return names


def build_subgroup(parent: FiniteGroup, members) -> Subgroup:
    """Validate a member list as a subgroup of ``parent``."""
    members = sorted(set(int(m) for m in members))
    if not members:
        raise MalformedTable("subgroup must be nonempty")
    for m in members:
        if not 0 <= m < parent.order:
            raise MalformedTable(f"member {m} out of range", element=m)
    member_set = set(members)
    if parent.identity not in member_set:
        raise MissingIdentity("identity element is not a member", identity=parent.identity)
    for a in members:
        for b in members:
            if parent.cayley[a][b] not in member_set:
                raise NotClosed(
                    f"product of ({a},{b}) = {parent.cayley[a][b]} is not a member",
                    a=a,
                    b=b,
                    product=parent.cayley[a][b],
                )
    # unreachable once closure holds on a finite group; kept as defense
    for a in members:
        if parent.inverse[a] not in member_set:
            raise MissingInverse(f"inverse of {a} is not a member", element=a)
    return Subgroup(parent=parent, members=tuple(members))


def subgroup_as_group(sub: Subgroup) -> FiniteGroup:
    """Reindex a subgroup's members to 0..|H|-1 and return it as a group."""
    idx = {m: i for i, m in enumerate(sub.members)}
    table = [
        [idx[sub.parent.cayley[a][b]] for b in sub.members]
        for a in sub.members
    ]
    return build_group(len(sub.members), table)


def trivial_subgroup(parent: FiniteGroup) -> Subgroup:
    return build_subgroup(parent, [parent.identity])


def opposite_group(g: FiniteGroup) -> FiniteGroup:
    """Transpose the Cayley table; identity and inverses are unchanged."""
    table = tuple(tuple(g.cayley[h][k] for h in g.elements()) for k in g.elements())
    out = build_group(g.order, table)
    assert out.identity == g.identity and out.inverse == g.inverse
    return out
