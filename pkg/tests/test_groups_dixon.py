import itertools

from pshlab.cyclo import Cyclo
from pshlab.glfq import gl_group
from pshlab.groups import FiniteGroupTable
from pshlab.symgroup import Perm


def sym_table(n: int) -> FiniteGroupTable:
    elements = [Perm(p) for p in itertools.permutations(range(1, n + 1))]
    return FiniteGroupTable(f"S{n}", elements, lambda a, b: a * b,
                            lambda a: a.inv(), Perm.identity(n))


def cyclic_table(n: int) -> FiniteGroupTable:
    return FiniteGroupTable(f"C{n}", list(range(n)),
                            lambda a, b: (a + b) % n, lambda a: (-a) % n, 0)


def test_table_bookkeeping():
    G = sym_table(3)
    assert G.order == 6
    assert G.classes()[0] == [G.identity_idx]
    assert sorted(G.class_sizes().values()) == [1, 2, 3]
    assert G.exponent() == 6
    for x in range(G.order):
        assert G.mul(x, G.inv(x)) == G.identity_idx
        assert G.element_order(x) in (1, 2, 3)


def test_cyclic_all_linear():
    G = cyclic_table(6)
    table = G.character_table()
    assert len(table) == 6
    assert all(chi.degree() == 1 for chi in table)
    for c1 in table:
        for c2 in table:
            assert c1.inner(c2) == (1 if c1 == c2 else 0)


def test_sym3_degrees():
    degrees = sorted(chi.degree() for chi in sym_table(3).character_table())
    assert degrees == [1, 1, 2]


def test_gl23_degrees():
    G = gl_group(2, 3)
    degrees = sorted(chi.degree() for chi in G.character_table())
    assert degrees == [1, 1, 2, 2, 2, 3, 3, 4]
    for c1 in G.character_table():
        for c2 in G.character_table():
            assert c1.inner(c2) == (1 if c1 == c2 else 0)


def _sub_conj(v):
    return v.conj() if isinstance(v, Cyclo) else v


def test_frobenius_reciprocity():
    G = sym_table(4)
    three_cycle = G.index[Perm.from_cycles(4, [(1, 2, 3)])]
    H = sorted(G.closure([three_cycle]))
    assert len(H) == 3
    phi = {h: 1 for h in H}
    ind = G.induced_character(H, phi)
    for chi in G.character_table():
        res = G.restrict_character(chi, H)
        lhs = ind.inner(chi)
        total = Cyclo.rational(0)
        for h in H:
            total = total + phi[h] * _sub_conj(res[h])
        rhs = (total * __import__("fractions").Fraction(1, len(H)))
        assert lhs == rhs.rational_value()


def test_induced_degree():
    G = sym_table(4)
    H = sorted(G.closure([G.index[Perm.from_cycles(4, [(1, 2)])]]))
    ind = G.induced_character(H, {h: 1 for h in H})
    assert ind.degree() == G.order // len(H)


def test_double_cosets_partition():
    G = sym_table(4)
    H = sorted(G.closure([G.index[Perm.from_cycles(4, [(1, 2, 3)])]]))
    K = sorted(G.closure([G.index[Perm.from_cycles(4, [(1, 2), (3, 4)])]]))
    cosets = G.double_cosets(H, K)
    seen = set()
    for rep, members in cosets:
        assert rep == min(members)
        assert rep in members
        assert not (seen & members)
        seen |= members
        # closed under H on the left and K on the right
        for h in H:
            for x in members:
                assert G.mul(h, x) in members
    assert seen == set(range(G.order))


def test_subgroup_registry():
    G = sym_table(3)
    H = sorted(G.closure([G.index[Perm.from_cycles(3, [(1, 2, 3)])]]))
    G.register_subgroup("rot", H)
    assert sorted(G.subgroups["rot"]) == H
    assert G.is_subgroup(H)
    assert not G.is_subgroup(H[:2])  # a three-cycle pair is not closed


def test_class_functions_consistent():
    G = sym_table(3)
    f = G.function_to_class_function(
        lambda i: G.elements[i].cycle_type()[0])
    assert f.degree() == 1
    assert f.values[G.class_of(G.index[Perm.from_cycles(3, [(1, 2, 3)])])] \
        == 3
