"""The four example torsor families over prime fields and finite groups.

Affine spaces as translation torsors, solution sets of linear systems as
kernel torsors, cosets as right-subgroup torsors, and ordered bases as
general-linear torsors. Every constructor returns a fully validated
torsor; vectors over F_p are encoded as base-p integers so that
lexicographic tuple order equals numeric order.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

import numpy as np

from .actions import Torsor, as_torsor, build_action, right_action_as_left
from .errors import (
    DimensionMismatch,
    EmptySolutionSet,
    MalformedTable,
    NotPrime,
    TooLarge,
)
from .groups import FiniteGroup, Subgroup, build_group, subgroup_as_group

AFFINE_MAX_POINTS = 256
SOLUTION_MAX_VECTORS = 4096
BASIS_SUPPORTED = {(2, 2), (3, 2), (2, 3)}


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    return all(p % d for d in range(2, int(p**0.5) + 1))


def _require_prime(p: int):
    if not is_prime(p):
        raise NotPrime(f"{p} is not prime", p=p)


@dataclass(frozen=True)
class PrimeFieldMatrix:
    p: int
    rows: int
    cols: int
    entries: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class LinearSolveResult:
    """Particular solution (if consistent) plus a reduced kernel basis."""

    particular: tuple[int, ...] | None
    kernel_basis: tuple[tuple[int, ...], ...]
    kernel_size: int


def prime_field_matrix(p: int, entries) -> PrimeFieldMatrix:
    """Reduce the entries mod a validated prime and fix the shape."""
    _require_prime(p)
    rows = [list(r) for r in entries]
    if not rows or not rows[0]:
        raise MalformedTable("matrix must have at least one row and column")
    cols = len(rows[0])
    if any(len(r) != cols for r in rows):
        raise MalformedTable("ragged matrix rows")
    reduced = tuple(tuple(int(v) % p for v in r) for r in rows)
    return PrimeFieldMatrix(p=p, rows=len(rows), cols=cols, entries=reduced)


def encode_vector(vec, p: int) -> int:
    out = 0
    for v in vec:
        out = out * p + v
    return out


def decode_vector(idx: int, p: int, n: int) -> tuple[int, ...]:
    digits = []
    for _ in range(n):
        digits.append(idx % p)
        idx //= p
    return tuple(reversed(digits))


def gaussian_solve(T: PrimeFieldMatrix, w) -> LinearSolveResult:
    """Row-reduce [T|w] over F_p.

    The particular solution sets all free variables to zero; the kernel
    basis has one vector per free column, ordered by ascending column, so
    the pivot pattern is strictly increasing.
    """
    p = T.p
    w = [int(v) % p for v in w]
    if len(w) != T.rows:
        raise DimensionMismatch(
            f"rhs length {len(w)} != {T.rows} rows", got=len(w), expected=T.rows
        )
    aug = np.array([list(r) + [wv] for r, wv in zip(T.entries, w)], dtype=np.int64)
    nrows, ncols = T.rows, T.cols
    pivot_cols = []
    r = 0
    for c in range(ncols):
        pivot = next((i for i in range(r, nrows) if aug[i, c] % p), None)
        if pivot is None:
            continue
        aug[[r, pivot]] = aug[[pivot, r]]
        inv = pow(int(aug[r, c]), p - 2, p)
        aug[r] = (aug[r] * inv) % p
        for i in range(nrows):
            if i != r and aug[i, c] % p:
                aug[i] = (aug[i] - aug[i, c] * aug[r]) % p
        pivot_cols.append(c)
        r += 1
        if r == nrows:
            break
    consistent = not any(aug[i, ncols] % p for i in range(r, nrows))
    free_cols = [c for c in range(ncols) if c not in pivot_cols]

    particular = None
    if consistent:
        sol = [0] * ncols
        for i, c in enumerate(pivot_cols):
            sol[c] = int(aug[i, ncols]) % p
        particular = tuple(sol)
        assert all(
            sum(T.entries[i][j] * particular[j] for j in range(ncols)) % p == w[i]
            for i in range(nrows)
        )

    basis = []
    for f in free_cols:
        vec = [0] * ncols
        vec[f] = 1
        for i, c in enumerate(pivot_cols):
            vec[c] = (-int(aug[i, f])) % p
        assert all(
            sum(T.entries[i][j] * vec[j] for j in range(ncols)) % p == 0
            for i in range(nrows)
        )
        basis.append(tuple(vec))

    return LinearSolveResult(
        particular=particular,
        kernel_basis=tuple(basis),
        kernel_size=p ** len(basis),
    )


def _additive_group_table(vectors: list[tuple[int, ...]], p: int):
    index = {v: i for i, v in enumerate(vectors)}
    return [
        [index[tuple((a + b) % p for a, b in zip(u, v))] for v in vectors]
        for u in vectors
    ]


def affine_torsor(p: int, n: int) -> Torsor:
    """F_p^n acting on itself by translation; points share the vector encoding."""
    _require_prime(p)
    if n < 1:
        raise MalformedTable(f"dimension must be positive, got {n}", n=n)
    if p**n > AFFINE_MAX_POINTS:
        raise TooLarge(f"p^n = {p ** n} exceeds {AFFINE_MAX_POINTS}", size=p**n)
    vectors = [decode_vector(i, p, n) for i in range(p**n)]
    table = _additive_group_table(vectors, p)
    group = build_group(p**n, table)
    action = build_action(group, p**n, table)
    return as_torsor(action)


def _matvec(T: PrimeFieldMatrix, vec) -> tuple[int, ...]:
    return tuple(
        sum(T.entries[i][j] * vec[j] for j in range(T.cols)) % T.p
        for i in range(T.rows)
    )


def solution_torsor(T: PrimeFieldMatrix, w) -> Torsor:
    """The solution set of T(v)=w as a torsor under the additive kernel.

    Both the solutions and the kernel are enumerated by brute force over
    F_p^cols, independent of gaussian_solve.
    """
    p = T.p
    w = tuple(int(v) % p for v in w)
    if len(w) != T.rows:
        raise DimensionMismatch(
            f"rhs length {len(w)} != {T.rows} rows", got=len(w), expected=T.rows
        )
    if p**T.cols > SOLUTION_MAX_VECTORS:
        raise TooLarge(f"p^cols = {p ** T.cols} exceeds {SOLUTION_MAX_VECTORS}", size=p**T.cols)
    zero = tuple(0 for _ in range(T.rows))
    solutions = []
    kernel = []
    for i in range(p**T.cols):
        vec = decode_vector(i, p, T.cols)
        image = _matvec(T, vec)
        if image == w:
            solutions.append(vec)
        if image == zero:
            kernel.append(vec)
    if not solutions:
        raise EmptySolutionSet("the system T(v)=w has no solution")
    group = build_group(len(kernel), _additive_group_table(kernel, p))
    sol_index = {v: i for i, v in enumerate(solutions)}
    act = [
        [sol_index[tuple((a + b) % p for a, b in zip(u, s))] for s in solutions]
        for u in kernel
    ]
    return as_torsor(build_action(group, len(solutions), act))


def coset_torsor(group: FiniteGroup, H: Subgroup, g: int) -> Torsor:
    """The left coset gH as a torsor under H acting by right multiplication.

    The right action is normalized through right_action_as_left, so the
    acting group is opposite(H) reindexed to 0..|H|-1.
    """
    if not 0 <= g < group.order:
        raise MalformedTable(f"coset representative {g} out of range", element=g)
    points = sorted({group.cayley[g][h] for h in H.members})
    index = {x: i for i, x in enumerate(points)}
    hgrp = subgroup_as_group(H)
    right = [
        [index[group.cayley[x][H.members[j]]] for j in range(len(H.members))]
        for x in points
    ]
    action = right_action_as_left(hgrp, len(points), right)
    return as_torsor(action)


def _det_mod_p(mat: list[list[int]], p: int) -> int:
    m = [row[:] for row in mat]
    n = len(m)
    det = 1
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] % p), None)
        if pivot is None:
            return 0
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det = (det * m[c][c]) % p
        inv = pow(m[c][c], p - 2, p)
        for r in range(c + 1, n):
            factor = (m[r][c] * inv) % p
            if factor:
                m[r] = [(a - factor * b) % p for a, b in zip(m[r], m[c])]
    return det % p


def general_linear_group(p: int, n: int):
    """All invertible n x n matrices over F_p in lexicographic (row-major) order."""
    mats = []
    for flat in itertools.product(range(p), repeat=n * n):
        mat = [list(flat[i * n : (i + 1) * n]) for i in range(n)]
        if _det_mod_p(mat, p):
            mats.append(tuple(tuple(row) for row in mat))
    index = {m: i for i, m in enumerate(mats)}
    table = []
    for a in mats:
        row = []
        for b in mats:
            prod = tuple(
                tuple(sum(a[i][k] * b[k][j] for k in range(n)) % p for j in range(n))
                for i in range(n)
            )
            row.append(index[prod])
        table.append(row)
    return build_group(len(mats), table), mats


def basis_torsor(p: int, n: int) -> Torsor:
    """Ordered bases of F_p^n as a torsor under GL_n(F_p).

    Bases are n-tuples of independent vectors ordered lexicographically by
    their encoded entries; matrices act componentwise on basis vectors.
    """
    _require_prime(p)
    if (p, n) not in BASIS_SUPPORTED:
        raise TooLarge(
            f"(p,n)=({p},{n}) not supported; exhaustive validation is desk-scale only",
            p=p,
            n=n,
        )
    group, mats = general_linear_group(p, n)
    all_vectors = [decode_vector(i, p, n) for i in range(p**n)]
    bases = []
    for combo in itertools.product(range(p**n), repeat=n):
        mat = [list(all_vectors[i]) for i in combo]  # rows are candidate basis vectors
        if _det_mod_p(mat, p):
            bases.append(combo)
    index = {b: i for i, b in enumerate(bases)}

    def apply(mat, vec_idx):
        vec = all_vectors[vec_idx]
        image = tuple(sum(mat[i][j] * vec[j] for j in range(n)) % p for i in range(n))
        return encode_vector(image, p)

    act = [
        [index[tuple(apply(mat, v) for v in basis)] for basis in bases]
        for mat in mats
    ]
    return as_torsor(build_action(group, len(bases), act))


def count_ordered_bases(p: int, n: int) -> int:
    """The product formula for |GL_n(F_p)|, used as a cross-check."""
    out = 1
    for k in range(n):
        out *= p**n - p**k
    return out
