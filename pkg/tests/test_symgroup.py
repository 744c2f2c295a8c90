import itertools

from hypothesis import given, settings
from hypothesis import strategies as st

from pshlab.symgroup import (KMatrix, Perm, double_coset_decompose,
                             kmatrix_of, kmatrix_solutions, w_of_kmatrix,
                             young_double_cosets, young_subgroup)


def test_perm_basics():
    a = Perm((2, 3, 1))
    b = Perm((2, 1, 3))
    assert (a * b)(1) == a(b(1))
    assert (a * b).images == tuple(a(b(x)) for x in (1, 2, 3))
    assert a * a.inv() == Perm.identity(3)
    assert Perm.from_cycles(5, [(1, 2, 4)]).images == (2, 4, 3, 1, 5)


def test_cycle_data():
    g = Perm.from_cycles(7, [(1, 2, 4, 5), (3, 6, 7)])
    assert g.cycle_type() == (4, 3)
    assert g.sign() == (-1) ** (3 + 2)
    assert g.cycle_notation() == "(1,2,4,5)(3,6,7)"
    assert Perm.identity(4).cycle_type() == (1, 1, 1, 1)


def test_sign_multiplicative():
    perms = [Perm(p) for p in itertools.permutations(range(1, 5))]
    for a in perms[:8]:
        for b in perms[:8]:
            assert (a * b).sign() == a.sign() * b.sign()


def test_kmatrix_solution_counts():
    assert len(kmatrix_solutions(1, 1, 2)) == 2
    assert len(kmatrix_solutions(0, 2, 3)) == 1
    # constraint rows and columns
    for k in kmatrix_solutions(2, 3, 5):
        assert k.k11 + k.k12 == 3
        assert k.k21 + k.k22 == 2
        assert k.k11 + k.k21 == 2
        assert k.k12 + k.k22 == 3


def test_block_example_representative():
    k = KMatrix(1, 3, 2, 1)
    w = w_of_kmatrix(k, 3, 4, 7)
    assert w.images == (1, 4, 5, 6, 2, 3, 7)
    # the matrix with column j supported in row w(j)
    mat = tuple(tuple(1 if w(j + 1) == i + 1 else 0 for j in range(7))
                for i in range(7))
    assert mat == ((1, 0, 0, 0, 0, 0, 0),
                   (0, 0, 0, 0, 1, 0, 0),
                   (0, 0, 0, 0, 0, 1, 0),
                   (0, 1, 0, 0, 0, 0, 0),
                   (0, 0, 1, 0, 0, 0, 0),
                   (0, 0, 0, 1, 0, 0, 0),
                   (0, 0, 0, 0, 0, 0, 1))
    assert kmatrix_of(w, 3, 4, 7) == k


def test_representatives_fixed_points():
    for m in range(1, 6):
        for a in range(m + 1):
            for alpha in range(m + 1):
                for k, w in young_double_cosets(a, alpha, m):
                    assert kmatrix_of(w, a, alpha, m) == k


def test_kmatrix_separates_double_cosets():
    m = 5
    for a in range(m + 1):
        for alpha in range(m + 1):
            left = young_subgroup(m, a)
            right = young_subgroup(m, alpha)
            sols = set(kmatrix_solutions(a, alpha, m))
            # the invariant is constant on double cosets and hits every
            # solution exactly once over a full set of representatives
            reps = {}
            for images in itertools.permutations(range(1, m + 1)):
                g = Perm(images)
                k = kmatrix_of(g, a, alpha, m)
                assert k in sols
                reps.setdefault(k, g)
            assert set(reps) == sols
            for k, g in reps.items():
                w = w_of_kmatrix(k, a, alpha, m)
                coset = {(u * w * h).images for u in left for h in right}
                assert g.images in coset


@settings(max_examples=40, deadline=None)
@given(st.permutations(list(range(1, 7))), st.integers(0, 6),
       st.integers(0, 6))
def test_decompose(images, a, alpha):
    g = Perm(images)
    u, w, h = double_coset_decompose(g, a, alpha, 6)
    assert u * w * h == g
    assert all((u(x) <= a) == (x <= a) for x in range(1, 7))
    assert all((h(x) <= alpha) == (x <= alpha) for x in range(1, 7))
    assert w == w_of_kmatrix(kmatrix_of(g, a, alpha, 6), a, alpha, 6)
