import pytest

from pshlab.glfq import gl_group
from pshlab.hyperhecke import (CharacterMismatchError, ContainmentError,
                               HeckeElement, HeckeTriple, SubgroupChar,
                               apply_triple, coproduct,
                               coproduct_well_defined, element_product,
                               enumerate_subgroup_chars, enumerate_triples,
                               graded_product, hecke_product, identity_triple,
                               linear_characters, module_basis, normalize,
                               pair_ambient, subgroup_table, triple_validate,
                               verify_apply_faithful, verify_associativity,
                               verify_hopflike, verify_normal_form)


def borel_char(q=2):
    G = gl_group(2, q)
    B = sorted(G.subgroups["B"])
    return G, SubgroupChar(G, B, {b: 1 for b in B})


def test_subgroup_table_and_linear_characters():
    G = gl_group(2, 2)
    B = sorted(G.subgroups["B"])
    sub = subgroup_table(G, B)
    assert sub.order == len(B)
    chars = linear_characters(G, B)
    assert all(set(c) == set(B) for c in chars)
    assert all(c[G.identity_idx] == 1 for c in chars)


def test_invalid_characters_rejected():
    from pshlab.cyclo import zeta
    G = gl_group(2, 3)
    Z = sorted(G.subgroups["Z"])
    assert len(Z) == 2
    # a cube root of unity on an order-two element is not a homomorphism
    chi = {z: (1 if z == G.identity_idx else zeta(3)) for z in Z}
    with pytest.raises(ValueError):
        SubgroupChar(G, Z, chi)


def test_triple_error_kinds():
    G, bchar = borel_char()
    # a Weyl representative does not normalize the Borel subgroup
    w = next(i for i in range(G.order)
             if i not in bchar.indices and G.mul(i, i) == G.identity_idx)
    with pytest.raises(ContainmentError):
        HeckeTriple(bchar, w, bchar)
    # same subgroup, mismatched characters on a conjugating element
    G3 = gl_group(2, 3)
    B3 = sorted(G3.subgroups["B"])
    chars = linear_characters(G3, B3)
    distinct = [c for c in chars if any(v != 1 for v in c.values())][0]
    s1 = SubgroupChar(G3, B3, {b: 1 for b in B3})
    s2 = SubgroupChar(G3, B3, distinct)
    with pytest.raises(CharacterMismatchError):
        HeckeTriple(s1, G3.identity_idx, s2)


def test_identity_triple_is_unit():
    G, bchar = borel_char()
    e = identity_triple(bchar)
    prod = hecke_product(e, e)
    assert prod == HeckeElement.of(e)
    assert element_product(HeckeElement.of(e), HeckeElement.of(e)) \
        == HeckeElement.of(e)


def test_normalize_idempotent():
    G = gl_group(2, 2)
    for t in enumerate_triples(G):
        c, t0 = normalize(1, t)
        c2, t1 = normalize(c, t0)
        assert (c2, t1) == (c, t0)


def test_product_zero_unless_composable():
    G = gl_group(2, 2)
    triples = enumerate_triples(G)
    for t1 in triples[:10]:
        for t2 in triples[:10]:
            prod = hecke_product(t1, t2)
            if t2.target != t1.source:
                assert prod.is_zero()


def test_reports_gl22():
    G = gl_group(2, 2)
    assert verify_normal_form(G)["pass"]
    assert verify_associativity(G, sample=8)["pass"]
    assert verify_apply_faithful(G)["pass"]


def test_reports_gl23_sampled():
    G = gl_group(2, 3)
    assert verify_normal_form(G, sample=40)["pass"]
    assert verify_associativity(G, sample=6)["pass"]
    assert verify_apply_faithful(G, sample=30)["pass"]


def test_classical_hecke_operator():
    # K = H = Borel of GL_2(F_2) with trivial characters and g a Weyl
    # element gives the adjacency operator of the three cosets
    G, bchar = borel_char()
    w = next(i for i in range(G.order)
             if i not in bchar.indices and G.mul(i, i) == G.identity_idx)
    t = HeckeTriple(bchar, w, bchar, check=False)
    basis = module_basis(bchar)
    mat = []
    for rep in basis:
        image = apply_triple(t, {rep: 1})
        mat.append([image.get(col, 0) for col in basis])
    assert mat == [[0, 1, 1], [1, 0, 1], [1, 1, 0]]


def test_graded_product_valid():
    q = 2
    gens = enumerate_triples(gl_group(1, q))
    t = graded_product(gens[0], gens[0], q)
    assert t.amb is gl_group(2, q)
    t.validate() if hasattr(t, "validate") else None


def test_coproduct_components():
    q = 2
    G = gl_group(2, q)
    for t in enumerate_triples(G)[:6]:
        for a in (0, 1, 2):
            e = coproduct(t, a)
            if a in (0, 2):
                assert not e.is_zero()
            report = coproduct_well_defined(t, a)
            assert report["pass"], report


def test_pair_ambient():
    P = pair_ambient(2, 1, 1)
    assert P.order == gl_group(1, 2).order ** 2
    assert pair_ambient(2, 0, 2) is gl_group(2, 2)
    assert pair_ambient(2, 2, 0) is gl_group(2, 2)


def test_hopflike_runs_and_reports():
    report = verify_hopflike(2, 2)
    assert report["pass"]
    assert report["generator_pairs"] >= 1
    assert report["equal_pairs"] == report["generator_pairs"]
    for finding in report["findings"]:
        assert "equal" in finding


def test_enumerate_subgroup_chars_center():
    G = gl_group(2, 3)
    Z = set(G.subgroups["Z"])
    for sc in enumerate_subgroup_chars(G):
        assert Z <= set(sc.indices)


def test_triple_serialization():
    G = gl_group(2, 2)
    t = enumerate_triples(G)[0]
    blob = t.to_json(coeff=1)
    assert set(blob) == {"source", "g", "target", "coeff"}
    assert blob["source"].keys() == {"subgroup", "chi"}
