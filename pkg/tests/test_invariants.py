from fractions import Fraction

from pshlab.invariants import (Poly, X, f_lambda, psi_x,
                               verify_induction_invariance, verify_mezzadri,
                               verify_psh_multiplicativity, w_x, w_x_sym,
                               wreath_counterexample_report,
                               wreath_theorem_check)
from pshlab.specht import specht_character
from pshlab.symgroup import Perm


def test_poly_arithmetic():
    p = Poly([1, 2])       # 1 + 2x
    q = Poly([0, 0, 1])    # x^2
    assert p + q == Poly([1, 2, 1])
    assert p * p == Poly([1, 4, 4])
    assert (p - p) == Poly()
    assert p.scale(Fraction(1, 2)) == Poly([Fraction(1, 2), 1])
    assert q.x_scale(2) == Poly([0, 0, 4])
    assert Poly([0, 1]).negate_x() == Poly([0, -1])
    assert X == Poly([0, 1])
    assert Poly([1, 2]).degree() == 1


def test_poly_pretty_and_json():
    assert f_lambda((2, 1)).pretty() == "x^3 - x"
    assert Poly([0, 1]).to_json() == [["0", "1"], ["1", "1"]]
    approx = Poly([1, 1]).approx()
    assert approx[0] == 1.0 and approx[1] == 1.0


def test_psi_x():
    assert psi_x(Perm.identity(3)) == Poly([0, 0, 0, 1])
    assert psi_x(Perm.from_cycles(3, [(1, 2, 3)])) == Poly([0, 1])


def test_f_lambda_oracles():
    assert f_lambda((2, 1)) == Poly([0, -1, 0, 1])          # x^3 - x
    assert f_lambda((3,)) == Poly([0, 2, 3, 1])             # x(x+1)(x+2)
    assert f_lambda((1, 1, 1)) == Poly([0, 2, -3, 1])       # x(x-1)(x-2)
    assert f_lambda((3, 2)) == Poly([0, 0, -2, -1, 2, 1])


def test_w_x_matches_f_lambda():
    for n in range(1, 5):
        report = verify_mezzadri(n)
        assert report["pass"], report
    assert w_x_sym(specht_character((2, 1)), 3) == Poly([0, -1, 0, 1])


def test_w_x_trivial_character():
    # trivial character of the two-element subgroup {e, (12)} in degree 2;
    # the normalization divides by the dimension, not the subgroup order
    elems = [Perm.identity(2), Perm.from_cycles(2, [(1, 2)])]
    assert w_x(elems, lambda h: 1) == Poly([0, 1, 1])


def test_induction_invariance():
    assert verify_induction_invariance(3)["pass"]


def test_psh_multiplicativity():
    report = verify_psh_multiplicativity(1, 3)
    assert report["pass"], report


def test_wreath_theorem_small():
    for n in (1, 2):
        report = wreath_theorem_check(n)
        assert report["pass"], report


def test_wreath_counterexample():
    report = wreath_counterexample_report()
    assert report["pass"]
    assert report["some_character_differs"]
