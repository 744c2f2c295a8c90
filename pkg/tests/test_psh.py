from pshlab.psh import (PshElement, decompose, gl_instance, primitives,
                        psh_inner, symmetric_instance, verify_cocommutativity,
                        verify_fibred_grading, verify_hopf, verify_positivity,
                        verify_self_adjoint, wreath_instance)


def _all_verifiers(R, maxdeg=None):
    for check in (verify_self_adjoint, verify_hopf, verify_positivity,
                  verify_cocommutativity):
        report = check(R, maxdeg)
        assert report["pass"], report
        assert report["cases"] > 0


def test_symmetric_axioms():
    _all_verifiers(symmetric_instance(4), 4)


def test_symmetric_pieri_square():
    R = symmetric_instance(4)
    x = PshElement.basis(1, (1,))
    prod = R.product_elem(x, x)
    assert prod == PshElement({(2, (2,)): 1, (2, (1, 1)): 1})


def test_symmetric_coproduct_hook():
    R = symmetric_instance(4)
    cop = R.coproduct(3, (2, 1))
    assert cop[((1, (1,)), (2, (2,)))] == 1
    assert cop[((1, (1,)), (2, (1, 1)))] == 1
    assert cop[((2, (2,)), (1, (1,)))] == 1
    assert cop[((2, (1, 1)), (1, (1,)))] == 1
    assert all(v > 0 for v in cop.values())


def test_symmetric_primitives():
    R = symmetric_instance(4)
    assert primitives(R, 1) == [(1,)]
    assert primitives(R, 2) == []
    dec = decompose(R, 4)
    assert not dec["unresolved"]
    # one primitive generates everything
    assert set(dec["blocks"]) == {(1, (1,))}


def test_inner_product():
    x = PshElement({(2, "a"): 2, (2, "b"): 1})
    y = PshElement({(2, "a"): 3})
    assert psh_inner(x, y) == 6


def test_wreath_axioms():
    _all_verifiers(wreath_instance("C2", 2), 2)


def test_gl_axioms():
    _all_verifiers(gl_instance(2, 2), 2)
    _all_verifiers(gl_instance(3, 2), 2)


def test_gl_has_cuspidal_generators():
    R = gl_instance(2, 2)
    assert primitives(R, 1)
    assert primitives(R, 2)


def test_fibred_grading():
    report = verify_fibred_grading(3)
    assert report["pass"], report
