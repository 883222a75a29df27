"""Prime-field solving and the four example torsor families."""

import itertools

import pytest

import torsorkit as tk
from torsorkit.errors import (
    DimensionMismatch,
    EmptySolutionSet,
    NotPrime,
    TooLarge,
)


def brute_solutions(p, rows, w):
    """Enumerate all of F_p^cols and keep the solutions; the test-side oracle."""
    cols = len(rows[0])
    out = []
    for vec in itertools.product(range(p), repeat=cols):
        if all(sum(r[j] * vec[j] for j in range(cols)) % p == wi for r, wi in zip(rows, w)):
            out.append(vec)
    return out


def test_prime_field_matrix_reduces():
    T = tk.prime_field_matrix(3, [[4, -1]])
    assert T.entries == ((1, 2),)


def test_prime_field_matrix_rejects_composite():
    with pytest.raises(NotPrime):
        tk.prime_field_matrix(4, [[1]])


def test_gaussian_solve_line_in_f3():
    T = tk.prime_field_matrix(3, [[1, 1]])
    res = tk.gaussian_solve(T, [1])
    assert res.particular == (1, 0)
    assert res.kernel_basis == ((2, 1),)
    assert res.kernel_size == 3
    # frozen from the 9-vector enumeration oracle
    assert brute_solutions(3, [[1, 1]], [1]) == [(0, 1), (1, 0), (2, 2)]


def test_gaussian_solve_invertible_f2():
    T = tk.prime_field_matrix(2, [[1, 0], [0, 1]])
    res = tk.gaussian_solve(T, [1, 1])
    assert res.particular == (1, 1)
    assert res.kernel_basis == ()
    assert res.kernel_size == 1


def test_gaussian_solve_inconsistent():
    T = tk.prime_field_matrix(2, [[0, 0]])
    res = tk.gaussian_solve(T, [1])
    assert res.particular is None
    assert res.kernel_size == 4


def test_gaussian_solve_dimension_mismatch():
    T = tk.prime_field_matrix(2, [[1, 0]])
    with pytest.raises(DimensionMismatch):
        tk.gaussian_solve(T, [1, 0])


def test_gaussian_pivot_pattern_strictly_increasing():
    T = tk.prime_field_matrix(5, [[1, 2, 3, 4], [2, 4, 1, 3]])
    res = tk.gaussian_solve(T, [0, 0])
    basis = res.kernel_basis
    # each vector owns one free column: entry 1 there, all other vectors 0
    free_positions = []
    for k, vec in enumerate(basis):
        owned = [
            i
            for i, v in enumerate(vec)
            if v == 1 and all(other[i] == 0 for m, other in enumerate(basis) if m != k)
        ]
        assert owned
        free_positions.append(owned[-1])
    assert free_positions == sorted(free_positions)
    assert len(set(free_positions)) == len(free_positions)


@pytest.mark.parametrize("p,rows,w", [
    (2, [[1, 1, 0], [0, 1, 1]], [1, 0]),
    (3, [[1, 2], [2, 1]], [1, 1]),
    (3, [[0, 0]], [0]),
    (5, [[1, 2, 3]], [4]),
])
def test_gaussian_solve_against_enumeration(p, rows, w):
    T = tk.prime_field_matrix(p, rows)
    res = tk.gaussian_solve(T, w)
    expected = brute_solutions(p, rows, w)
    if expected:
        assert res.particular in expected
        assert res.kernel_size == len(expected)
    else:
        assert res.particular is None


def test_affine_torsor_small(z3):
    t = tk.affine_torsor(3, 1)
    assert t.set_size == 3
    assert t.act == tk.build_action(z3, 3, z3.cayley).act


def test_affine_torsor_9_points_trivial_stabilizers():
    t = tk.affine_torsor(3, 2)
    assert t.set_size == 9
    for x in range(9):
        assert tk.stabilizer(t.action, x) == (t.group.identity,)


def test_affine_torsor_2_cubed():
    t = tk.affine_torsor(2, 3)
    assert t.set_size == 8
    assert t.group.order == 8


def test_affine_space_axioms_exhaustively():
    # a+0=a, (a+v)+w=a+(v+w), unique difference, directly on the tables
    t = tk.affine_torsor(2, 2)
    e = t.group.identity
    for a in range(4):
        assert t.act[e][a] == a
    for v in range(4):
        for w in range(4):
            for a in range(4):
                assert t.act[w][t.act[v][a]] == t.act[t.group.cayley[w][v]][a]
    for a in range(4):
        for b in range(4):
            diffs = [v for v in range(4) if t.act[v][a] == b]
            assert len(diffs) == 1


def test_affine_torsor_guards():
    with pytest.raises(NotPrime):
        tk.affine_torsor(4, 1)
    with pytest.raises(TooLarge):
        tk.affine_torsor(2, 9)


def test_solution_torsor_line_in_f3():
    T = tk.prime_field_matrix(3, [[1, 1]])
    t = tk.solution_torsor(T, [1])
    assert t.set_size == 3
    assert t.group.order == 3


def test_solution_torsor_unique_solution():
    T = tk.prime_field_matrix(2, [[1, 0], [0, 1]])
    t = tk.solution_torsor(T, [0, 0])
    assert t.set_size == 1
    assert t.group.order == 1


def test_solution_torsor_empty():
    T = tk.prime_field_matrix(2, [[0, 0]])
    with pytest.raises(EmptySolutionSet):
        tk.solution_torsor(T, [1])


def test_solution_torsor_too_large():
    T = tk.prime_field_matrix(2, [[1] * 13])
    with pytest.raises(TooLarge):
        tk.solution_torsor(T, [1])


@pytest.mark.parametrize("p,rows,w", [
    (2, [[1, 1, 0], [0, 1, 1]], [1, 0]),
    (3, [[1, 2], [2, 1]], [1, 2]),
    (3, [[1, 0, 2]], [2]),
])
def test_solution_count_matches_kernel_size(p, rows, w):
    T = tk.prime_field_matrix(p, rows)
    t = tk.solution_torsor(T, w)
    assert t.set_size == tk.gaussian_solve(T, w).kernel_size
    assert t.set_size == len(brute_solutions(p, rows, w))


def test_coset_torsor_s3(s3):
    # identity plus the transposition of the first two letters, translated by
    # the transposition of the outer letters: a 2-point torsor
    H = tk.build_subgroup(s3, [0, 2])
    t = tk.coset_torsor(s3, H, 5)
    assert t.set_size == 2
    assert t.group.order == 2


def test_coset_torsor_whole_group(s3):
    H = tk.build_subgroup(s3, range(6))
    t = tk.coset_torsor(s3, H, s3.identity)
    assert t.set_size == 6


def test_coset_torsor_trivial_subgroup(s3):
    H = tk.trivial_subgroup(s3)
    for g in range(6):
        assert tk.coset_torsor(s3, H, g).set_size == 1


def test_cosets_partition_the_group(s3):
    for members in ([0, 1], [0, 2], [0, 5], [0, 3, 4]):
        H = tk.build_subgroup(s3, members)
        cosets = tk.coset_list(s3, H)
        assert all(len(c) == len(members) for c in cosets)
        flat = sorted(x for c in cosets for x in c)
        assert flat == list(range(6))


def test_basis_torsor_2_2():
    t = tk.basis_torsor(2, 2)
    assert t.set_size == 6
    assert t.group.order == 6


def test_basis_torsor_3_2_counts():
    t = tk.basis_torsor(3, 2)
    assert t.set_size == 48
    # independent oracle: brute-force count of invertible 2x2 matrices mod 3
    count = 0
    for a, b, c, d in itertools.product(range(3), repeat=4):
        if (a * d - b * c) % 3:
            count += 1
    assert count == 48 == tk.count_ordered_bases(3, 2)


def test_basis_torsor_identity_fixes_standard_basis():
    t = tk.basis_torsor(2, 2)
    e = t.group.identity
    for x in range(t.set_size):
        assert t.act[e][x] == x
    free, _ = tk.is_free(t.action)
    assert free


def test_basis_torsor_2_3_boundary():
    # the largest supported basis family
    t = tk.basis_torsor(2, 3)
    assert t.set_size == t.group.order == tk.count_ordered_bases(2, 3) == 168


def test_affine_torsor_guard_boundary():
    assert tk.affine_torsor(2, 8).set_size == 256


def test_basis_torsor_guards():
    with pytest.raises(TooLarge):
        tk.basis_torsor(5, 2)
    with pytest.raises(TooLarge):
        tk.basis_torsor(2, 4)
    with pytest.raises(NotPrime):
        tk.basis_torsor(4, 2)


def test_every_constructor_output_is_validated(s3):
    # each family re-validates through as_torsor on its own action
    outs = [
        tk.affine_torsor(2, 2),
        tk.solution_torsor(tk.prime_field_matrix(3, [[1, 1]]), [1]),
        tk.coset_torsor(s3, tk.build_subgroup(s3, [0, 2]), 5),
        tk.basis_torsor(2, 2),
    ]
    for t in outs:
        assert tk.as_torsor(t.action).set_size == t.set_size
