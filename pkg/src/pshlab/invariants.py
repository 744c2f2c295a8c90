"""Length-weighted character sums on symmetric groups and their wreath
generalization.

W^x averages chi(h) x^(number of cycles of h) over a subgroup of Sigma_n;
for irreducible Specht characters this produces the monic node-product
polynomial f_lambda.  The wreath version twists each cycle by a root of
unity read off the trace of the product of the matrix components, and is
famously not inductive: the module exhibits the explicit counterexample.
"""

from __future__ import annotations

import itertools
from fractions import Fraction
from functools import lru_cache

from .combinat import (addable_nodes, conjugate, partitions,
                       standard_tableaux)
from .cyclo import Cyclo, zeta
from .symgroup import Perm

__all__ = ["Poly", "X", "psi_x", "w_x", "w_x_sym", "f_lambda",
           "verify_mezzadri", "verify_psh_multiplicativity",
           "lambda_invariant", "wreath_invariant", "mu_invariant_formula",
           "wreath_theorem_check", "wreath_counterexample_report"]


def _norm_coeff(c):
    if isinstance(c, Cyclo):
        return c.rational_value() if c.is_rational() else c
    if isinstance(c, Fraction) and c.denominator == 1:
        return int(c)
    return c


class Poly:
    """Polynomial in one indeterminate with exact rational or cyclotomic
    coefficients, stored ascending with no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [_norm_coeff(c) for c in coeffs]
        while cs and (cs[-1] == 0 or (isinstance(cs[-1], Cyclo)
                                      and cs[-1].is_zero())):
            cs.pop()
        object.__setattr__(self, "coeffs", tuple(cs))

    def __setattr__(self, *a):
        raise AttributeError("Poly is immutable")

    @staticmethod
    def const(c) -> "Poly":
        return Poly([c])

    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __add__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        n = max(len(self.coeffs), len(other.coeffs))
        a = list(self.coeffs) + [0] * (n - len(self.coeffs))
        b = list(other.coeffs) + [0] * (n - len(other.coeffs))
        return Poly([x + y for x, y in zip(a, b)])

    __radd__ = __add__

    def __sub__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + other.scale(-1)

    def __mul__(self, other):
        if not isinstance(other, Poly):
            return self.scale(other)
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, a in enumerate(self.coeffs):
            for j, b in enumerate(other.coeffs):
                out[i + j] = out[i + j] + a * b
        return Poly(out)

    __rmul__ = __mul__

    def scale(self, c) -> "Poly":
        return Poly([c * a for a in self.coeffs])

    def x_scale(self, c) -> "Poly":
        """Substitute x -> c x."""
        out = []
        power = 1
        for a in self.coeffs:
            out.append(a * power)
            power = power * c
        return Poly(out)

    def negate_x(self) -> "Poly":
        return self.x_scale(-1)

    def __eq__(self, other):
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return (len(self.coeffs) == len(other.coeffs)
                and all(a == b for a, b in zip(self.coeffs, other.coeffs)))

    def __hash__(self):
        return hash(self.coeffs)

    def __repr__(self):
        return f"Poly({list(self.coeffs)})"

    def pretty(self) -> str:
        if not self.coeffs:
            return "0"
        out = ""
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0 or (isinstance(c, Cyclo) and c.is_zero()):
                continue
            sign = " + "
            if not isinstance(c, Cyclo) and c < 0:
                sign = " - "
                c = -c
            if i == 0:
                term = str(c)
            else:
                xs = "x" if i == 1 else f"x^{i}"
                term = xs if c == 1 else f"{c}*{xs}"
            if not out:
                out = term if sign == " + " else "-" + term
            else:
                out += sign + term
        return out or "0"

    def to_json(self):
        out = []
        for c in self.coeffs:
            if isinstance(c, Cyclo):
                out.append(c.to_json())
            else:
                fc = Fraction(c)
                out.append([str(fc.numerator), str(fc.denominator)])
        return out

    def approx(self):
        """Float (or complex-pair) coefficient list for display."""
        out = []
        for c in self.coeffs:
            if isinstance(c, Cyclo):
                out.append(c.to_complex())
            else:
                out.append(float(c))
        return out


X = Poly([0, 1])


def psi_x(sigma: Perm) -> Poly:
    """x to the number of cycles of sigma."""
    return Poly([0] * len(sigma.cycle_type()) + [1])


def w_x(elements, value_fn) -> Poly:
    """(1/dim) sum over a subgroup of Sigma_n of chi(h) x^(cycles of h);
    value_fn maps a Perm to its exact character value."""
    elements = list(elements)
    total = Poly()
    dim = None
    for h in elements:
        v = value_fn(h)
        if h == Perm.identity(len(h.images)):
            dim = v
        total = total + psi_x(h).scale(v)
    assert dim is not None and dim != 0
    if isinstance(dim, Cyclo):
        return total.scale(dim.inv())
    return total.scale(Fraction(1, dim) if not isinstance(dim, Fraction)
                       else 1 / dim)


def _all_perms(n: int):
    for images in itertools.permutations(range(1, n + 1)):
        yield Perm(images)


def w_x_sym(chi, n: int) -> Poly:
    """w_x over the whole of Sigma_n for a class function keyed by cycle
    type."""
    return w_x(_all_perms(n), lambda h: chi.values[h.cycle_type()])


def verify_induction_invariance(n: int) -> dict:
    """w_x is unchanged by inducing from a cyclic subgroup up to the full
    symmetric group: exhaustive over all cyclic subgroups of Sigma_n and
    all of their linear characters."""
    perms = list(_all_perms(n))
    seen = set()
    cases = 0
    failures = []
    for g in perms:
        chain = [g]
        while chain[-1] != Perm.identity(n):
            chain.append(chain[-1] * g)
        sub = frozenset(chain)
        if sub in seen:
            continue
        seen.add(sub)
        order = len(chain)
        for j in range(order):
            chi = {chain[k]: zeta(order, (j * (k + 1)) % order)
                   for k in range(order)}
            lhs = w_x(chain, chi.__getitem__)

            # the induced character is a class function: evaluate it once
            # per cycle type
            by_type: dict = {}
            for s in perms:
                ct = s.cycle_type()
                if ct in by_type:
                    continue
                total = Cyclo.rational(0)
                for t in perms:
                    c = t * s * t.inv()
                    if c in chi:
                        total = total + chi[c]
                by_type[ct] = total * Fraction(1, order)

            rhs = w_x(perms, lambda s: by_type[s.cycle_type()])
            cases += 1
            if lhs != rhs:
                failures.append({"generator": g.images, "character": j})
    return {"check": "induction-invariance", "n": n, "cases": cases,
            "failures": failures, "pass": not failures}


def f_lambda(lam) -> Poly:
    """Product of (x - i + j) over the nodes (i, j) of the diagram."""
    out = Poly.const(1)
    for i, part in enumerate(lam, start=1):
        for j in range(1, part + 1):
            out = out * Poly([j - i, 1])
    return out


def verify_mezzadri(n: int) -> dict:
    """For every partition of n: the brute-force w_x equals f_lambda, the
    conjugate identity holds, the addable-node dimension sum vanishes, and
    the branching recursion for f holds."""
    from .specht import specht_character, specht_dim
    checks = []
    ok = True
    for lam in partitions(n):
        brute = w_x_sym(specht_character(lam), n)
        target = f_lambda(lam)
        match = brute == target
        conj_ok = brute == f_lambda(conjugate(lam)).negate_x().scale(
            (-1) ** n)
        checks.append({"lambda": lam, "w_x": brute.to_json(),
                       "f_lambda": target.to_json(), "match": match,
                       "conjugate_identity": conj_ok})
        ok = ok and match and conj_ok
    node_sums = []
    for mu in partitions(n):
        total = 0
        rhs = Poly()
        for (i, j) in addable_nodes(mu):
            lam = _add(mu, (i, j))
            total += specht_dim(lam) * (i - j)
            rhs = rhs + f_lambda(lam).scale(specht_dim(lam))
        lhs = (X * f_lambda(mu)).scale((n + 1) * specht_dim(mu))
        node_sums.append({"mu": mu, "node_sum": total,
                          "branching_recursion": lhs == rhs})
        ok = ok and total == 0 and lhs == rhs
    return {"check": "mezzadri", "n": n, "per_partition": checks,
            "node_sums": node_sums, "pass": ok}


def _add(mu, node):
    from .combinat import add_node
    return add_node(mu, node)


def verify_psh_multiplicativity(k: int, n: int) -> dict:
    """w_x of the induced product character factors as the product of the
    w_x's; also the one-step induction multiplies by x."""
    from .psh import _sym_induced_value
    from .specht import specht_character
    checks = []
    ok = True
    for lam in partitions(k):
        for mu in partitions(n - k):
            chi1 = specht_character(lam)
            chi2 = specht_character(mu)
            value = {nu: _sym_induced_value(chi1, chi2, k, n - k, nu)
                     for nu in partitions(n)}
            lhs = w_x(_all_perms(n), lambda h: value[h.cycle_type()])
            rhs = f_lambda(lam) * f_lambda(mu)
            checks.append({"pair": [lam, mu], "match": lhs == rhs})
            ok = ok and lhs == rhs
    one_step = []
    for lam in partitions(n - 1):
        chi1 = specht_character(lam)
        chi2 = specht_character((1,))
        value = {nu: _sym_induced_value(chi1, chi2, n - 1, 1, nu)
                 for nu in partitions(n)}
        lhs = w_x(_all_perms(n), lambda h: value[h.cycle_type()])
        match = lhs == X * f_lambda(lam)
        one_step.append({"lambda": lam, "match": match})
        ok = ok and match
    return {"check": "psh-multiplicativity", "k": k, "n": n,
            "pairs": checks, "one_step": one_step, "pass": ok}


# -- wreath products of matrix groups ----------------------------------------

def _cycles(images):
    n = len(images)
    seen = [False] * n
    out = []
    for start in range(1, n + 1):
        if seen[start - 1]:
            continue
        cyc = [start]
        seen[start - 1] = True
        x = images[start - 1]
        while x != start:
            cyc.append(x)
            seen[x - 1] = True
            x = images[x - 1]
        out.append(tuple(cyc))
    return out


def _cycle_twist(H, alphas, cycle) -> int:
    """Exponent of zeta_p for one cycle: the field trace of the matrix
    trace of the product of the alphas along the cycle."""
    from .glfq import mat_identity, mat_mul, mat_trace
    f = H.field
    prod = mat_identity(f, len(H.elements[0]))
    for pos in cycle:
        prod = mat_mul(f, prod, H.elements[alphas[pos - 1]])
    return f.trace(mat_trace(f, prod))


def lambda_invariant(H, element) -> Cyclo:
    """Product over the cycles of the permutation part of
    zeta_p^(trace of the product of the matrix components on the cycle)."""
    sig, alphas = element
    p = H.field.p
    out = Cyclo.rational(1)
    for cyc in _cycles(sig):
        out = out * zeta(p, _cycle_twist(H, alphas, cyc))
    return out


def mu_invariant_formula(H, w_elt, y_elt) -> Cyclo:
    """Twist of the conjugate y^-1 w y computed from w's own matrix
    components along the cycles of the conjugated permutation."""
    sig, alphas = w_elt
    sig2 = y_elt[0]
    n = len(sig)
    inv2 = [0] * n
    for i, v in enumerate(sig2, start=1):
        inv2[v - 1] = i
    conj_sig = tuple(inv2[sig[sig2[i - 1] - 1] - 1] for i in range(1, n + 1))
    p = H.field.p
    out = Cyclo.rational(1)
    for cyc in _cycles(conj_sig):
        out = out * zeta(p, _cycle_twist(H, alphas, cyc))
    return out


def wreath_invariant(H, elements, chi) -> Poly:
    """(1/dim) sum of chi(X) x^(cycles of sigma) twist(X) over the listed
    wreath elements; chi maps an element to its exact value."""
    total = Poly()
    dim = None
    for x in elements:
        sig = x[0]
        if all(sig[i] == i + 1 for i in range(len(sig))) and all(
                a == H.identity_idx for a in x[1]):
            dim = chi(x)
        term = chi(x) * lambda_invariant(H, x)
        total = total + Poly([0] * len(_cycles(sig)) + [1]).scale(term)
    assert dim is not None
    if isinstance(dim, Cyclo):
        return total.scale(dim.inv())
    return total.scale(Fraction(1, int(dim)))


def _wreath_setup(n: int, q: int = 3):
    from .glfq import gl_group
    from .wreath import wreath_group
    H = gl_group(1, q)
    J = wreath_group(H, n)
    return H, J


def _sym_subgroup(J, H, n):
    ident = (H.identity_idx,) * n
    return [i for i, (sig, alphas) in enumerate(J.elements)
            if alphas == ident]


def wreath_theorem_check(n: int, q: int = 3) -> dict:
    """The invariant of the representation induced from a Specht module
    up the full wreath product equals f_lambda evaluated at
    x zeta_p^(m d)."""
    from .specht import specht_character
    H, J = _wreath_setup(n, q)
    p, d = H.field.p, H.field.d
    m = len(H.elements[0])
    twist = zeta(p, (m * d) % p)
    sub = _sym_subgroup(J, H, n)
    checks = []
    ok = True
    for lam in partitions(n):
        chi = specht_character(lam)
        on_sub = {i: chi.values[Perm(J.elements[i][0]).cycle_type()]
                  for i in sub}
        induced = J.induced_character(sub, on_sub)
        lhs = wreath_invariant(
            H, J.elements,
            lambda x: induced.values[J.class_of(J.index[x])])
        rhs = f_lambda(lam).x_scale(twist)
        match = lhs == rhs
        checks.append({"lambda": lam, "match": match})
        ok = ok and match
    return {"check": "wreath-theorem", "n": n, "q": q,
            "per_partition": checks, "pass": ok}


def _counterexample_groups(q: int = 3):
    """The index-6 subgroup generated by the transposition of the first
    two slots and matrix components supported there, inside the full
    3-fold wreath product."""
    from .groups import FiniteGroupTable
    from .wreath import wreath_inv, wreath_mul
    H, J = _wreath_setup(3, q)
    g_elements = []
    for sig in ((1, 2, 3), (2, 1, 3)):
        for a1 in range(H.order):
            for a2 in range(H.order):
                g_elements.append((sig, (a1, a2, H.identity_idx)))
    G = FiniteGroupTable(f"CounterexampleG(q={q})", g_elements,
                         lambda a, b: wreath_mul(H, a, b),
                         lambda a: wreath_inv(H, a),
                         ((1, 2, 3), (H.identity_idx,) * 3))
    return H, J, G


def induced_invariant_conjugate_route(H, J, G, chi_fn, dim) -> Poly:
    """The invariant of the induced character evaluated by unfolding the
    induction into a double sum over (W, Y) in G x J, with the cycle twist
    of each conjugate read off the conjugated-cycle index formula.

    Note: this is NOT the same as applying the plain definition to the
    induced character.  The cycle twist is a class function (the trace of
    a product along a cycle is conjugation invariant), so the plain
    definition is induction invariant; the conjugated-cycle indexing used
    here breaks that and is what produces the recorded failure."""
    total = Poly()
    for w_elt in G.elements:
        psi = Poly([0] * len(_cycles(w_elt[0])) + [1])
        value = chi_fn(w_elt)
        for y_elt in J.elements:
            total = total + psi.scale(
                value * mu_invariant_formula(H, w_elt, y_elt))
    return total.scale(Fraction(1, J.order * int(dim)))


def wreath_counterexample_report(q: int = 3) -> dict:
    """For every irreducible of the small subgroup: reproduce the
    closed-form expansions of dim * W for both the subgroup invariant and
    the conjugated-cycle evaluation of the induced one, and exhibit the
    failure of induction invariance for at least one character.

    Also records that the definition-level invariant of the induced
    character coincides with the subgroup invariant (the per-cycle twist
    is a class function), so the failure is specific to the
    conjugated-cycle indexed route."""
    H, J, G = _counterexample_groups(q)
    p = H.field.p
    m = len(H.elements[0])
    d = H.field.d
    twist = zeta(p, (m * d) % p)
    id3 = (1, 2, 3)
    swap = (2, 1, 3)
    checks = []
    any_diff = False
    ok = True
    for idx, chi in enumerate(G.character_table()):
        dim = chi.values[0]

        def chi_g(x, chi=chi):
            return chi.values[G.class_of(G.index[x])]

        w_g = wreath_invariant(H, G.elements, chi_g)

        # closed-form expansion of dim * W over the small group: cubic
        # term from sigma = identity, quadratic term from the swap
        expr1 = Poly()
        # closed-form expansion of dim * W of the induced character via
        # the conjugated-cycle route: the cubic term survives unchanged;
        # the quadratic term splits by whether the conjugator fixes the
        # third slot (2 of 6 do), giving weights 1/3 and 2/3
        expr2 = Poly()
        w_prod = Fraction(1, 3)
        w_sum = Fraction(2, 3)
        for a1 in range(H.order):
            for a2 in range(H.order):
                tr_sum = H.field.add(
                    H.field.trace(H.elements[a1][0][0]),
                    H.field.trace(H.elements[a2][0][0]))
                tr_prod = H.field.trace(H.field.mul(
                    H.elements[a1][0][0], H.elements[a2][0][0]))
                alpha = (a1, a2, H.identity_idx)
                cubic = Poly([0, 0, 0, 1]).scale(
                    chi_g((id3, alpha)) * zeta(p, tr_sum) * twist)
                expr1 = expr1 + cubic
                expr2 = expr2 + cubic
                expr1 = expr1 + Poly([0, 0, 1]).scale(
                    chi_g((swap, alpha)) * zeta(p, tr_prod) * twist)
                expr2 = expr2 + Poly([0, 0, 1]).scale(
                    w_prod * chi_g((swap, alpha)) * zeta(p, tr_prod)
                    * twist)
                expr2 = expr2 + Poly([0, 0, 1]).scale(
                    w_sum * chi_g((swap, alpha)) * zeta(p, tr_sum))
        match1 = w_g.scale(dim) == expr1

        # induced character up the full wreath product; plain definition
        sub = [J.index[x] for x in G.elements]
        on_sub = {J.index[x]: chi_g(x) for x in G.elements}
        induced = J.induced_character(sub, on_sub)
        w_j_def = wreath_invariant(
            H, J.elements,
            lambda x: induced.values[J.class_of(J.index[x])])

        # conjugated-cycle double-sum route
        w_j_conj = induced_invariant_conjugate_route(H, J, G, chi_g, dim)
        match2 = w_j_conj.scale(dim) == expr2

        differs = w_g != w_j_conj
        any_diff = any_diff or differs
        ok = ok and match1 and match2
        checks.append({"character": idx, "dim": dim,
                       "expansion_small": match1,
                       "expansion_induced": match2,
                       "definition_route_invariant": w_j_def == w_g,
                       "invariance_fails": differs})
    return {"check": "wreath-counterexample", "q": q,
            "per_character": checks, "some_character_differs": any_diff,
            "pass": ok and any_diff}
