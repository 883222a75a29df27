"""Left actions of finite groups on finite point sets.

Covers orbits, stabilizers, freeness/transitivity decisions with
witnesses, torsor validation via the unique-transport oracle,
transporters, trivializations, basepoint change, the transported group
law, and normalization of right actions to left actions of the opposite
group.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import (
    CompatibilityViolated,
    EmptySet,
    IdentityAxiomViolated,
    MalformedTable,
    NotFree,
    NotTransitive,
    PointOutOfRange,
    RightCompatibilityViolated,
    RightIdentityViolated,
)
from .groups import FiniteGroup, Subgroup, build_group, opposite_group
from .report import Report, passing


@dataclass(frozen=True)
class GroupAction:
    """act[g][x] is the image of point x under element g."""

    group: FiniteGroup
    set_size: int
    act: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Torsor:
    """A validated free, transitive, nonempty action. Build via as_torsor."""

    action: GroupAction

    @property
    def group(self) -> FiniteGroup:
        return self.action.group

    @property
    def set_size(self) -> int:
        return self.action.set_size

    @property
    def act(self):
        return self.action.act


@dataclass(frozen=True)
class Trivialization:
    """Mutually inverse tables between the group and the point set at a basepoint."""

    torsor: Torsor
    basepoint: int
    to_points: tuple[int, ...]  # g -> g.x0
    to_group: tuple[int, ...]   # x -> the unique g with g.x0 = x


@dataclass(frozen=True)
class BasepointChange:
    element: int
    report: Report


def _action_witness(act: np.ndarray, cayley: np.ndarray):
    """First (g,h,x) with (g*h).x != g.(h.x), or None."""
    n = cayley.shape[0]
    for g in range(n):
        lhs = act[cayley[g], :]  # [h,x] -> (g*h).x
        rhs = act[g][act]        # [h,x] -> g.(h.x)
        if not np.array_equal(lhs, rhs):
            h, x = np.argwhere(lhs != rhs)[0]
            return g, int(h), int(x)
    return None


def build_action(group: FiniteGroup, set_size: int, act) -> GroupAction:
    """Validate an action table exhaustively (identity and compatibility axioms)."""
    if set_size < 1:
        raise MalformedTable(f"set_size must be positive, got {set_size}", set_size=set_size)
    rows = [list(r) for r in act]
    if len(rows) != group.order:
        raise MalformedTable(
            f"expected {group.order} rows, got {len(rows)}", rows=len(rows)
        )
    for g, row in enumerate(rows):
        if len(row) != set_size:
            raise MalformedTable(f"row {g} has length {len(row)}, expected {set_size}", row=g)
        for x, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or not (0 <= v < set_size):
                raise MalformedTable(f"entry [{g}][{x}] = {v!r} out of range", row=g, col=x)
    table = tuple(tuple(int(v) for v in row) for row in rows)
    e = group.identity
    for x in range(set_size):
        if table[e][x] != x:
            raise IdentityAxiomViolated(f"identity moves point {x}", x=x)
    bad = _action_witness(np.array(table, dtype=np.int64), np.array(group.cayley, dtype=np.int64))
    if bad is not None:
        g, h, x = bad
        raise CompatibilityViolated(
            f"(g*h).x != g.(h.x) at (g,h,x)=({g},{h},{x})", g=g, h=h, x=x
        )
    return GroupAction(group=group, set_size=set_size, act=table)


def _check_point(action: GroupAction, x: int):
    if not 0 <= x < action.set_size:
        raise PointOutOfRange(f"point {x} out of range [0,{action.set_size})", point=x)


def orbit(action: GroupAction, x: int) -> tuple[int, ...]:
    """All points reachable from x, sorted ascending."""
    _check_point(action, x)
    return tuple(sorted({action.act[g][x] for g in action.group.elements()}))


def stabilizer(action: GroupAction, x: int) -> tuple[int, ...]:
    """All elements fixing x; always contains the identity."""
    _check_point(action, x)
    return tuple(g for g in action.group.elements() if action.act[g][x] == x)


def is_free(action: GroupAction):
    """(True, None) or (False, (g, x)) with the lexicographically least witness."""
    e = action.group.identity
    for g in action.group.elements():
        if g == e:
            continue
        for x in range(action.set_size):
            if action.act[g][x] == x:
                return False, (g, x)
    return True, None


def is_transitive(action: GroupAction):
    """(True, None) or (False, (x, y)) for points in distinct orbits."""
    reached = set(orbit(action, 0))
    if len(reached) == action.set_size:
        return True, None
    missing = min(x for x in range(action.set_size) if x not in reached)
    return False, (0, missing)


def as_torsor(action: GroupAction) -> Torsor:
    """Validate nonempty + free + transitive, then re-verify by unique transport.

    The second pass is an independent oracle: for every pair (x,y) exactly
    one group element must carry x to y.
    """
    if action.set_size < 1:
        raise EmptySet("a torsor must have at least one point")
    free, wit = is_free(action)
    if not free:
        raise NotFree(f"element {wit[0]} fixes point {wit[1]}", g=wit[0], x=wit[1])
    trans, wit = is_transitive(action)
    if not trans:
        raise NotTransitive(
            f"points {wit[0]} and {wit[1]} lie in distinct orbits", x=wit[0], y=wit[1]
        )
    n, m = action.group.order, action.set_size
    for x in range(m):
        counts = [0] * m
        for g in range(n):
            counts[action.act[g][x]] += 1
        assert all(c == 1 for c in counts), "unique-transport oracle disagrees"
    return Torsor(action=action)


def transporter(torsor: Torsor, x: int, y: int) -> int:
    """The unique g with g.x = y, found by exhaustive search."""
    _check_point(torsor.action, x)
    _check_point(torsor.action, y)
    hits = [g for g in torsor.group.elements() if torsor.act[g][x] == y]
    assert len(hits) == 1, f"transport from {x} to {y} is not unique: {hits}"
    return hits[0]


def trivialization(torsor: Torsor, x0: int) -> Trivialization:
    """Fill both direction tables g -> g.x0 and its inverse; assert bijectivity."""
    _check_point(torsor.action, x0)
    to_points = tuple(torsor.act[g][x0] for g in torsor.group.elements())
    to_group = [None] * torsor.set_size
    for g, x in enumerate(to_points):
        assert to_group[x] is None, "g -> g.x0 is not injective"
        to_group[x] = g
    assert None not in to_group, "g -> g.x0 is not surjective"
    return Trivialization(
        torsor=torsor, basepoint=x0, to_points=to_points, to_group=tuple(to_group)
    )


def basepoint_change(torsor: Torsor, x0: int, x1: int) -> BasepointChange:
    """h = tr(x0,x1), with an exhaustive check that g.x1 = (g*h).x0 for all g."""
    h = transporter(torsor, x0, x1)
    cay = torsor.group.cayley
    for g in torsor.group.elements():
        assert torsor.act[g][x1] == torsor.act[cay[g][h]][x0]
    report = passing("basepoint-change", counts={"elements_checked": torsor.group.order})
    return BasepointChange(element=h, report=report)


def transported_group(torsor: Torsor, x0: int) -> FiniteGroup:
    """Push the group law through the basepoint bijection; identity becomes x0."""
    triv = trivialization(torsor, x0)
    cay = torsor.group.cayley
    m = torsor.set_size
    table = [
        [triv.to_points[cay[triv.to_group[x]][triv.to_group[y]]] for y in range(m)]
        for x in range(m)
    ]
    out = build_group(m, table)
    assert out.identity == x0
    return out


def right_action_as_left(group: FiniteGroup, set_size: int, right_table) -> GroupAction:
    """Normalize a right action table (indexed [point][element]) to a left action.

    The result is a left action of opposite_group(group) with
    act[g][x] = right_table[x][g]; torsor status is preserved both ways.
    """
    rows = [list(r) for r in right_table]
    if len(rows) != set_size or any(len(r) != group.order for r in rows):
        raise MalformedTable(
            f"right table must be {set_size} x {group.order}", rows=len(rows)
        )
    for x, row in enumerate(rows):
        for g, v in enumerate(row):
            if not isinstance(v, (int, np.integer)) or isinstance(v, bool) or not (0 <= v < set_size):
                raise MalformedTable(f"entry [{x}][{g}] = {v!r} out of range", row=x, col=g)
    e = group.identity
    for x in range(set_size):
        if rows[x][e] != x:
            raise RightIdentityViolated(f"x*e != x at point {x}", x=x)
    cay = group.cayley
    for x in range(set_size):
        for g in group.elements():
            for h in group.elements():
                if rows[rows[x][g]][h] != rows[x][cay[g][h]]:
                    raise RightCompatibilityViolated(
                        f"(x*g)*h != x*(g*h) at (x,g,h)=({x},{g},{h})", x=x, g=g, h=h
                    )
    left = [[rows[x][g] for x in range(set_size)] for g in group.elements()]
    return build_action(opposite_group(group), set_size, left)


def left_translation_action(group: FiniteGroup) -> GroupAction:
    """The group acting on itself by left multiplication."""
    return build_action(group, group.order, group.cayley)


def coset_action(group: FiniteGroup, sub: Subgroup) -> GroupAction:
    """Left multiplication on left cosets of the subgroup.

    Cosets are indexed by discovery order over ascending representatives,
    so coset 0 always contains the smallest element of the identity coset.
    """
    coset_of = [None] * group.order
    cosets = []
    for g in group.elements():
        if coset_of[g] is not None:
            continue
        members = sorted(group.cayley[g][h] for h in sub.members)
        for m in members:
            coset_of[m] = len(cosets)
        cosets.append(tuple(members))
    table = [
        [coset_of[group.cayley[g][c[0]]] for c in cosets]
        for g in group.elements()
    ]
    return build_action(group, len(cosets), table)


def coset_list(group: FiniteGroup, sub: Subgroup) -> list[tuple[int, ...]]:
    """The left cosets in the same order used by coset_action."""
    seen = set()
    cosets = []
    for g in group.elements():
        if g in seen:
            continue
        members = tuple(sorted(group.cayley[g][h] for h in sub.members))
        seen.update(members)
        cosets.append(members)
    return cosets
