"""JSON interchange for every checkable object.

All indices are 0-based; serialization is canonical (sorted keys, fixed
separators, trailing newline) so identical inputs produce byte-identical
files. Schema problems raise SchemaError; semantic problems raise the
domain errors of the owning module.
"""

from __future__ import annotations

import json

from .actions import GroupAction, build_action
from .cocycles import Nerve, NerveCocycle, build_nerve, check_cocycle
from .groups import FiniteGroup, Subgroup, build_group, build_subgroup, catalog_group
from .sheaves import (
    DescentDatum,
    SheafAction,
    SheafOfGroups,
    SheafOfSets,
    build_descent_datum,
    constant_group_sheaf,
)
from .spaces import FiniteSpace, build_space


class SchemaError(Exception):
    """The JSON is readable but does not match the expected schema."""


def canonical_json(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True) + "\n"


def _expect(obj, key, kind, what):
    if not isinstance(obj, dict) or key not in obj:
        raise SchemaError(f"{what}: missing key {key!r}")
    val = obj[key]
    if kind is not None and not isinstance(val, kind):
        raise SchemaError(f"{what}: key {key!r} has wrong type")
    return val


def _int_list_list(val, what):
    if not isinstance(val, list) or any(not isinstance(r, list) for r in val):
        raise SchemaError(f"{what}: expected a list of lists")
    return val


# groups

def group_to_obj(g: FiniteGroup) -> dict:
    return {"order": g.order, "cayley": [list(r) for r in g.cayley]}


def group_from_obj(obj) -> FiniteGroup:
    if isinstance(obj, str):
        return catalog_group(obj)
    order = _expect(obj, "order", int, "group")
    cayley = _int_list_list(_expect(obj, "cayley", list, "group"), "group.cayley")
    return build_group(order, cayley)


def subgroup_from_obj(obj) -> Subgroup:
    parent = group_from_obj(_expect(obj, "group", None, "subgroup"))
    members = _expect(obj, "members", list, "subgroup")
    return build_subgroup(parent, members)


# actions

def action_to_obj(action: GroupAction) -> dict:
    return {
        "group": group_to_obj(action.group),
        "set_size": action.set_size,
        "act": [list(r) for r in action.act],
    }


def action_from_obj(obj) -> GroupAction:
    group = group_from_obj(_expect(obj, "group", None, "action"))
    set_size = _expect(obj, "set_size", int, "action")
    act = _int_list_list(_expect(obj, "act", list, "action"), "action.act")
    return build_action(group, set_size, act)


# nerves and cocycles

def _pair_key(i: int, j: int) -> str:
    return f"{i},{j}"


def _parse_pair_key(key: str, what) -> tuple[int, int]:
    try:
        parts = [int(v) for v in key.split(",")]
    except ValueError:
        raise SchemaError(f"{what}: bad pair key {key!r}") from None
    if len(parts) != 2:
        raise SchemaError(f"{what}: bad pair key {key!r}")
    return parts[0], parts[1]


def nerve_from_obj(obj) -> Nerve:
    opens = _expect(obj, "opens", int, "nerve")
    edges = _int_list_list(_expect(obj, "edges", list, "nerve"), "nerve.edges")
    triples = _int_list_list(obj.get("triples", []), "nerve.triples")
    return build_nerve(opens, edges, triples)


def nerve_to_obj(nerve: Nerve) -> dict:
    return {
        "opens": nerve.num_opens,
        "edges": [list(e) for e in nerve.edges],
        "triples": [list(t) for t in nerve.triples],
    }


def cocycle_from_obj(obj) -> NerveCocycle:
    nerve = nerve_from_obj(_expect(obj, "nerve", dict, "cocycle"))
    group = group_from_obj(_expect(obj, "group", None, "cocycle"))
    raw = _expect(obj, "g", dict, "cocycle")
    assignments = {}
    for key, val in raw.items():
        if not isinstance(val, int):
            raise SchemaError(f"cocycle: value on edge {key!r} must be an integer")
        assignments[_parse_pair_key(key, "cocycle.g")] = val
    return check_cocycle(nerve, group, assignments)


def cocycle_to_obj(c: NerveCocycle) -> dict:
    return {
        "nerve": nerve_to_obj(c.nerve),
        "group": group_to_obj(c.group),
        "g": {_pair_key(i, j): v for (i, j), v in sorted(c.g.items())},
    }


# spaces and sheaves

def space_to_obj(space: FiniteSpace) -> dict:
    return {"points": space.num_points, "opens": [list(o) for o in space.opens]}


def space_from_obj(obj) -> FiniteSpace:
    points = _expect(obj, "points", int, "space")
    opens = _int_list_list(_expect(obj, "opens", list, "space"), "space.opens")
    return build_space(points, opens)


def _sizes_from_obj(obj, num_opens: int, what) -> tuple[int, ...]:
    raw = _expect(obj, "sections", dict, what)
    sizes = []
    for u in range(num_opens):
        val = raw.get(str(u))
        if not isinstance(val, int) or val < 0:
            raise SchemaError(f"{what}: bad section count for open {u}")
        sizes.append(val)
    return tuple(sizes)


def _restrict_from_obj(obj, what) -> dict:
    raw = _expect(obj, "restrict", dict, what)
    out = {}
    for key, table in raw.items():
        u, v = _parse_pair_key(key, f"{what}.restrict")
        if not isinstance(table, list):
            raise SchemaError(f"{what}: restriction {key!r} must be a list")
        out[(u, v)] = tuple(int(x) for x in table)
    return out


def _restrict_to_obj(restrict: dict) -> dict:
    return {_pair_key(u, v): list(t) for (u, v), t in sorted(restrict.items())}


def sets_sheaf_from_obj(obj, space: FiniteSpace | None = None) -> SheafOfSets:
    if space is None:
        space = space_from_obj(_expect(obj, "space", dict, "sheaf"))
    sizes = _sizes_from_obj(obj, len(space.opens), "sheaf")
    restrict = _restrict_from_obj(obj, "sheaf")
    return SheafOfSets(space=space, sizes=sizes, restrict=restrict)


def sets_sheaf_to_obj(sheaf: SheafOfSets, include_space: bool = True) -> dict:
    out = {
        "sections": {str(u): n for u, n in enumerate(sheaf.sizes)},
        "restrict": _restrict_to_obj(sheaf.restrict),
    }
    if include_space:
        out["space"] = space_to_obj(sheaf.space)
    return out


def sheaf_action_from_obj(obj) -> SheafAction:
    space = space_from_obj(_expect(obj, "space", dict, "sheaf-action"))
    graw = _expect(obj, "groups", dict, "sheaf-action")
    g_sets = sets_sheaf_from_obj(graw, space=space)
    cayley_raw = _expect(graw, "cayley", dict, "sheaf-action.groups")
    groups = []
    for u in range(len(space.opens)):
        table = cayley_raw.get(str(u))
        if table is None:
            raise SchemaError(f"sheaf-action: missing group table for open {u}")
        groups.append(build_group(g_sets.sizes[u], table))
    sraw = _expect(obj, "sets", dict, "sheaf-action")
    f_sets = sets_sheaf_from_obj(sraw, space=space)
    act_raw = _expect(obj, "act", dict, "sheaf-action")
    act = []
    for u in range(len(space.opens)):
        table = act_raw.get(str(u))
        if table is None:
            raise SchemaError(f"sheaf-action: missing action table for open {u}")
        act.append(tuple(tuple(int(x) for x in row) for row in table))
    return SheafAction(
        groups=SheafOfGroups(sets=g_sets, groups=tuple(groups)),
        sets=f_sets,
        act=tuple(act),
    )


def sheaf_action_to_obj(action: SheafAction) -> dict:
    groups_obj = sets_sheaf_to_obj(action.groups.sets, include_space=False)
    groups_obj["cayley"] = {
        str(u): [list(r) for r in grp.cayley]
        for u, grp in enumerate(action.groups.groups)
    }
    return {
        "space": space_to_obj(action.sets.space),
        "groups": groups_obj,
        "sets": sets_sheaf_to_obj(action.sets, include_space=False),
        "act": {
            str(u): [list(r) for r in table] for u, table in enumerate(action.act)
        },
    }


# descent data (always over the constant sheaf of the named group)

def descent_to_obj(space: FiniteSpace, group: FiniteGroup, datum: DescentDatum) -> dict:
    return {
        "space": space_to_obj(space),
        "group": group_to_obj(group),
        "cover": list(datum.cover),
        "transition": {_pair_key(i, j): v for (i, j), v in sorted(datum.transition.items())},
    }


def descent_from_obj(obj) -> DescentDatum:
    space = space_from_obj(_expect(obj, "space", dict, "descent"))
    group = group_from_obj(_expect(obj, "group", None, "descent"))
    cover = _expect(obj, "cover", list, "descent")
    raw = _expect(obj, "transition", dict, "descent")
    transition = {}
    for key, val in raw.items():
        if not isinstance(val, int):
            raise SchemaError(f"descent: transition value on {key!r} must be an integer")
        transition[_parse_pair_key(key, "descent.transition")] = val
    gs = constant_group_sheaf(space, group)
    return build_descent_datum(gs, cover, transition)


def load_json(path: str):
    with open(path, "r", encoding="utf-8") as fh:
        return json.load(fh)


def dump_json(path: str, obj) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(canonical_json(obj))
