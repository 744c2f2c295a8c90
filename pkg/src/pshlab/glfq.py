"""Finite fields F_q (q <= 64), small GL_n(F_q) with their standard
subgroups, the additive trace measure, Kondo-Gauss sums, Weil characters,
Gauss-sum identities along field extensions, and the double-coset count
for pairs of parabolic subgroups.

Field elements are integer indices into a fixed enumeration; matrices are
tuples of tuples of indices, so they are hashable and canonical.
"""

from __future__ import annotations

import itertools
import math
import os
from fractions import Fraction
from functools import lru_cache

from .chars import ClassFunction
from .cyclo import Cyclo, zeta
from .groups import FiniteGroupTable
from .symgroup import kmatrix_solutions, w_of_kmatrix

__all__ = ["Fq", "build_field", "gl_group", "gl_order", "psi_measure",
           "kondo_gauss", "weil_character", "weil_theta_exponents",
           "gauss_sum", "hasse_davenport_check", "verify_bruhat_bijection",
           "mat_mul", "mat_inv", "mat_det", "mat_identity", "mat_trace",
           "central_character", "max_group_order"]

# fixed irreducible polynomials (coefficients ascending, monic) so that
# serialized data is reproducible bit for bit
_IRREDUCIBLE = {
    (2, 2): (1, 1, 1),
    (2, 3): (1, 1, 0, 1),
    (2, 4): (1, 1, 0, 0, 1),
    (2, 5): (1, 0, 1, 0, 0, 1),
    (2, 6): (1, 1, 0, 1, 1, 0, 1),
    (3, 2): (2, 2, 1),
    (3, 3): (1, 2, 0, 1),
    (5, 2): (2, 4, 1),
    (7, 2): (3, 6, 1),
}


def _is_prime(n: int) -> bool:
    return n > 1 and all(n % d for d in range(2, int(math.isqrt(n)) + 1))


class Fq:
    """The field with p^d elements; elements are indices 0..q-1 with
    0 = zero and 1 = one."""

    def __init__(self, p: int, d: int = 1):
        if not _is_prime(p):
            raise ValueError(f"{p} is not prime")
        q = p ** d
        if q > 64:
            raise ValueError(f"field size {q} exceeds the bound 64")
        self.p, self.d, self.q = p, d, q
        modulus = _IRREDUCIBLE[(p, d)] if d > 1 else None
        # index = c0 + c1 p + ... (constant coefficient first)
        self.elements = []
        for k in range(q):
            digits, t = [], k
            for _ in range(d):
                digits.append(t % p)
                t //= p
            self.elements.append(tuple(digits))
        self.index = {e: i for i, e in enumerate(self.elements)}
        self._modulus = modulus
        self.add_table = [[self.index[self._poly_add(a, b)]
                           for b in self.elements] for a in self.elements]
        self.mul_table = [[self.index[self._poly_mul(a, b)]
                           for b in self.elements] for a in self.elements]
        self.neg_table = [self.index[tuple((-c) % p for c in a)]
                          for a in self.elements]
        self.inv_table = [None] + [next(j for j in range(1, q)
                                        if self.mul_table[i][j] == 1)
                                   for i in range(1, q)]
        self.trace_table = [self._trace(i) for i in range(q)]
        self.norm_table = [self._norm(i) for i in range(q)]
        self.generator = next(g for g in range(1, q)
                              if self.element_order(g) == q - 1)
        self.dlog = {self.pow(self.generator, k): k for k in range(q - 1)}

    def _poly_add(self, a, b):
        return tuple((x + y) % self.p for x, y in zip(a, b))

    def _poly_mul(self, a, b):
        d, p = self.d, self.p
        prod = [0] * (2 * d - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] = (prod[i + j] + x * y) % p
        if d > 1:
            mod = self._modulus
            for k in range(2 * d - 2, d - 1, -1):
                c = prod[k]
                if c:
                    for j in range(d + 1):
                        prod[k - d + j] = (prod[k - d + j] - c * mod[j]) % p
        return tuple(prod[:d])

    def add(self, i, j):
        return self.add_table[i][j]

    def sub(self, i, j):
        return self.add_table[i][self.neg_table[j]]

    def mul(self, i, j):
        return self.mul_table[i][j]

    def neg(self, i):
        return self.neg_table[i]

    def inv(self, i):
        if i == 0:
            raise ZeroDivisionError("inverse of zero field element")
        return self.inv_table[i]

    def pow(self, i, k):
        out = 1
        for _ in range(k):
            out = self.mul_table[out][i]
        return out

    def element_order(self, i):
        if i == 0:
            raise ValueError("zero has no multiplicative order")
        k, x = 1, i
        while x != 1:
            x = self.mul_table[x][i]
            k += 1
        return k

    def from_int(self, c: int) -> int:
        return c % self.p

    def _trace(self, i) -> int:
        """Trace to the prime field as an integer 0..p-1."""
        total, x = 0, i
        for _ in range(self.d):
            total = self.add_table[total][x]
            x = self.pow(x, self.p)
        coeffs = self.elements[total]
        assert all(c == 0 for c in coeffs[1:])
        return coeffs[0]

    def _norm(self, i) -> int:
        """Norm to the prime field as an integer 0..p-1 (norm(0) = 0)."""
        if i == 0:
            return 0
        e = (self.q - 1) // (self.p - 1)
        x = self.pow(i, e)
        coeffs = self.elements[x]
        assert all(c == 0 for c in coeffs[1:])
        return coeffs[0]

    def trace(self, i) -> int:
        return self.trace_table[i]

    def norm(self, i) -> int:
        return self.norm_table[i]

    def __repr__(self):
        return f"Fq({self.p}^{self.d})"


@lru_cache(maxsize=None)
def build_field(p: int, d: int = 1) -> Fq:
    return Fq(p, d)


# -- matrices ------------------------------------------------------------

def mat_identity(f: Fq, n: int):
    return tuple(tuple(1 if i == j else 0 for j in range(n))
                 for i in range(n))


def _dot(f: Fq, row, col):
    total = 0
    for x, y in zip(row, col):
        total = f.add_table[total][f.mul_table[x][y]]
    return total


def mat_mul(f: Fq, a, b):
    n = len(a)
    m = len(b[0])
    k = len(b)
    return tuple(tuple(_dot(f, a[i], tuple(b[t][j] for t in range(k)))
                       for j in range(m)) for i in range(n))


def mat_det(f: Fq, a) -> int:
    n = len(a)
    m = [list(row) for row in a]
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c]), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = f.neg_table[det]
        det = f.mul_table[det][m[c][c]]
        inv = f.inv_table[m[c][c]]
        for i in range(c + 1, n):
            factor = f.mul_table[m[i][c]][inv]
            if factor:
                for j in range(c, n):
                    m[i][j] = f.sub(m[i][j], f.mul_table[factor][m[c][j]])
    return det


def mat_inv(f: Fq, a):
    n = len(a)
    m = [list(row) + [1 if i == j else 0 for j in range(n)]
         for i, row in enumerate(a)]
    for c in range(n):
        piv = next(i for i in range(c, n) if m[i][c])
        m[c], m[piv] = m[piv], m[c]
        inv = f.inv_table[m[c][c]]
        m[c] = [f.mul_table[inv][x] for x in m[c]]
        for i in range(n):
            if i != c and m[i][c]:
                factor = m[i][c]
                m[i] = [f.sub(x, f.mul_table[factor][y])
                        for x, y in zip(m[i], m[c])]
    return tuple(tuple(row[n:]) for row in m)


def mat_trace(f: Fq, a) -> int:
    total = 0
    for i in range(len(a)):
        total = f.add_table[total][a[i][i]]
    return total


def gl_order(n: int, q: int) -> int:
    out = 1
    for k in range(n):
        out *= q ** n - q ** k
    return out


def max_group_order() -> int:
    return int(os.environ.get("PSHLAB_MAX_GROUP_ORDER", "100000"))


@lru_cache(maxsize=None)
def gl_group(n: int, q: int) -> FiniteGroupTable:
    """GL_n(F_q) by full enumeration, with the standard subgroups
    registered: U(k,n-k), P(k,n-k), L(k,n-k), Sigma, Z, D, B."""
    p, d = _prime_power(q)
    f = build_field(p, d)
    if gl_order(n, q) > max_group_order():
        raise ResourceWarning(
            f"|GL({n},{q})| = {gl_order(n, q)} exceeds the group-order "
            f"bound {max_group_order()}")
    elements = []
    for entries in itertools.product(range(q), repeat=n * n):
        a = tuple(tuple(entries[i * n:(i + 1) * n]) for i in range(n))
        if mat_det(f, a):
            elements.append(a)
    assert len(elements) == gl_order(n, q)
    G = FiniteGroupTable(f"GL({n},{q})", elements,
                         lambda a, b: mat_mul(f, a, b),
                         lambda a: mat_inv(f, a),
                         mat_identity(f, n))
    G.field = f
    G.n = n
    for k in range(1, n):
        G.register_subgroup(f"U({k},{n - k})", [
            G.index[a] for a in elements
            if _is_block_unipotent(a, k)])
        G.register_subgroup(f"P({k},{n - k})", [
            G.index[a] for a in elements
            if _is_block_upper(a, k)])
        G.register_subgroup(f"L({k},{n - k})", [
            G.index[a] for a in elements
            if _is_block_diagonal(a, k)])
    G.register_subgroup("Z", [
        G.index[a] for a in elements
        if all(a[i][j] == (a[0][0] if i == j else 0)
               for i in range(n) for j in range(n))])
    G.register_subgroup("D", [
        G.index[a] for a in elements
        if all(a[i][j] == 0 for i in range(n) for j in range(n) if i != j)])
    G.register_subgroup("B", [
        G.index[a] for a in elements
        if all(a[i][j] == 0 for i in range(n) for j in range(n) if i > j)])
    G.register_subgroup("Sigma", [
        G.index[a] for a in elements
        if all(sum(1 for x in row if x) == 1 for row in a)
        and all(x in (0, 1) for row in a for x in row)])
    return G


def _prime_power(q: int):
    for p in range(2, q + 1):
        if _is_prime(p) and q % p == 0:
            d = 0
            t = q
            while t % p == 0:
                t //= p
                d += 1
            if p ** d == q:
                return p, d
    raise ValueError(f"{q} is not a prime power")


def _is_block_upper(a, k) -> bool:
    n = len(a)
    return all(a[i][j] == 0 for i in range(k, n) for j in range(k))


def _is_block_diagonal(a, k) -> bool:
    n = len(a)
    return (_is_block_upper(a, k)
            and all(a[i][j] == 0 for i in range(k) for j in range(k, n)))


def _is_block_unipotent(a, k) -> bool:
    n = len(a)
    return (_is_block_upper(a, k)
            and all(a[i][j] == (1 if i == j else 0)
                    for i in range(n) for j in range(n)
                    if not (i < k <= j)))


# -- measure and Gauss sums ----------------------------------------------

def psi_measure(f: Fq, x) -> Cyclo:
    """zeta_p raised to the trace-of-matrix-trace of x."""
    return zeta(f.p, f.trace(mat_trace(f, x)))


def kondo_gauss(G: FiniteGroupTable, sub_indices, chi: dict) -> Cyclo:
    """(1/dim) sum over the subgroup of chi(X) Psi(X); chi maps each
    subgroup element index to its exact character value."""
    f = G.field
    dim = chi[G.identity_idx]
    if isinstance(dim, Cyclo):
        dim = dim.rational_value()
    if dim == 0:
        raise ValueError("character of dimension zero")
    total = Cyclo.rational(0)
    for i in sub_indices:
        total = total + chi[i] * psi_measure(f, G.elements[i])
    return total * Fraction(1, Fraction(dim))


def gauss_sum(f: Fq, lam: dict) -> Cyclo:
    """tau(lam) = sum over units of lam(x) zeta_p^{trace(x)}; lam maps
    each nonzero field index to its value."""
    total = Cyclo.rational(0)
    for x in range(1, f.q):
        total = total + lam[x] * zeta(f.p, f.trace(x))
    return total


def unit_character(f: Fq, j: int) -> dict:
    """The j-th power character of the cyclic unit group."""
    return {x: zeta(f.q - 1, j * f.dlog[x]) for x in range(1, f.q)}


def hasse_davenport_check(p: int, m: int) -> dict:
    """Check -tau(lam o Norm) = (-1)^m tau(lam)^m over F_{p^m} for every
    character lam of the units of F_p."""
    base = build_field(p)
    ext = build_field(p, m)
    failures = []
    for j in range(p - 1):
        lam = unit_character(base, j)
        tau = gauss_sum(base, lam)
        lifted = {y: lam[ext.norm(y)] for y in range(1, ext.q)}
        tau_ext = gauss_sum(ext, lifted)
        lhs = -tau_ext
        rhs = tau ** m * ((-1) ** m)
        if lhs != rhs:
            failures.append(j)
    return {"p": p, "m": m, "characters": p - 1, "failures": failures,
            "pass": not failures}


# -- Weil characters -------------------------------------------------------

def _nonsplit_torus(G: FiniteGroupTable):
    """The embedded unit group of the quadratic extension: matrices
    [[a, b s], [b, a]] with s the least non-square unit."""
    f = G.field
    q = f.q
    squares = {f.mul(x, x) for x in range(1, q)}
    s = next(x for x in range(1, q) if x not in squares)
    torus = []
    for a in range(q):
        for b in range(q):
            if a == 0 and b == 0:
                continue
            mat = ((a, f.mul(b, s)), (b, a))
            if mat in G.index:
                torus.append(G.index[mat])
    assert len(torus) == q * q - 1
    return torus, s


def weil_theta_exponents(q: int) -> list[int]:
    """Exponents j for which the j-th torus character is moved by the
    field Frobenius (the hypothesis for a Weil character)."""
    return [j for j in range(q * q - 1) if (j * q - j) % (q * q - 1) != 0]


def _torus_dlog(G: FiniteGroupTable, torus):
    """Discrete logs on the cyclic embedded torus; returns (dlog, gen)."""
    order = len(torus)
    members = set(torus)
    for g in torus:
        dlog = {}
        x = G.identity_idx
        for k in range(order):
            dlog[x] = k
            x = G.mul(x, g)
        if len(dlog) == order and set(dlog) == members:
            return dlog, g
    raise AssertionError("torus is not cyclic")


def weil_character(q: int, j: int) -> ClassFunction:
    """The virtual character Ind_H(Theta x Psi) - Ind_T(Theta) for the
    j-th torus character Theta; a true irreducible character of degree
    q - 1 when Theta is moved by Frobenius."""
    if q % 2 == 0:
        raise ValueError("odd q required for the quadratic embedding")
    if j not in weil_theta_exponents(q):
        raise ValueError(f"torus character {j} is Frobenius-invariant")
    G = gl_group(2, q)
    f = G.field
    torus, _ = _nonsplit_torus(G)
    dlog, _ = _torus_dlog(G, torus)
    e = q * q - 1
    theta = {i: zeta(e, j * dlog[i]) for i in torus}
    # scalar-unipotent subgroup [[a, b], [0, a]] with the linear character
    # Theta(a) Psi(b/a); linearity needs the equal diagonal entries
    top = [G.index[((a, b), (0, a))] for a in range(1, q) for b in range(q)]
    chi_top = {}
    for i in top:
        (a, b), _ = G.elements[i]
        scalar = G.index[((a, 0), (0, a))]
        chi_top[i] = theta[scalar] * zeta(f.p, f.trace(f.mul(b, f.inv(a))))
    ind_top = G.induced_character(top, chi_top)
    ind_torus = G.induced_character(torus, theta)
    return ind_top - ind_torus


def weil_identity_check(q: int, j: int) -> dict:
    """Both sides of W_{GL_2}(r(Theta)) = -q W_{torus}(Theta), exactly."""
    G = gl_group(2, q)
    torus, _ = _nonsplit_torus(G)
    dlog, _ = _torus_dlog(G, torus)
    e = q * q - 1
    theta = {i: zeta(e, j * dlog[i]) for i in torus}
    r_theta = weil_character(q, j)
    assert r_theta.degree() == q - 1
    chi = {i: r_theta.values[G.class_of(i)] for i in range(G.order)}
    lhs = kondo_gauss(G, range(G.order), chi)
    w_torus = kondo_gauss(G, torus, theta)
    rhs = -q * w_torus
    return {"q": q, "theta": j, "lhs": lhs, "rhs": rhs, "pass": lhs == rhs}


def verify_kondo_induction(n: int, q: int) -> dict:
    """W of a linear character of a cyclic subgroup equals W of its
    induction to the whole group; exhaustive over all cyclic subgroups
    and all of their characters."""
    G = gl_group(n, q)
    seen = set()
    cases = 0
    failures = []
    for g in range(G.order):
        chain = [g]
        x = g
        while x != G.identity_idx:
            x = G.mul(x, g)
            chain.append(x)
        sub = frozenset(chain)
        if sub in seen:
            continue
        seen.add(sub)
        order = len(chain)
        for j in range(order):
            chi = {chain[k]: zeta(order, (j * (k + 1)) % order)
                   for k in range(order)}
            lhs = kondo_gauss(G, chain, chi)
            ind = G.induced_character(chain, chi)
            chi_full = {i: ind.values[G.class_of(i)]
                        for i in range(G.order)}
            rhs = kondo_gauss(G, range(G.order), chi_full)
            cases += 1
            if lhs != rhs:
                failures.append({"generator": g, "character": j})
    return {"check": "kondo-induction", "n": n, "q": q, "cases": cases,
            "failures": failures, "pass": not failures}


def verify_kondo_multiplicative(q: int) -> dict:
    """W on the diagonally embedded GL_1 x GL_1 inside GL_2 factors as
    the product of the two GL_1 values, for every pair of unit
    characters."""
    G = gl_group(2, q)
    f = G.field
    G1 = gl_group(1, q)
    diag = sorted(G.subgroups["D"])
    cases = 0
    failures = []
    for j1 in range(q - 1):
        for j2 in range(q - 1):
            lam1 = unit_character(f, j1)
            lam2 = unit_character(f, j2)
            w1 = kondo_gauss(G1, range(G1.order),
                             {G1.index[((x,),)]: lam1[x]
                              for x in range(1, q)})
            w2 = kondo_gauss(G1, range(G1.order),
                             {G1.index[((x,),)]: lam2[x]
                              for x in range(1, q)})
            chi = {i: lam1[G.elements[i][0][0]] * lam2[G.elements[i][1][1]]
                   for i in diag}
            lhs = kondo_gauss(G, diag, chi)
            cases += 1
            if lhs != w1 * w2:
                failures.append({"j1": j1, "j2": j2})
    return {"check": "kondo-multiplicative", "q": q, "cases": cases,
            "failures": failures, "pass": not failures}


def central_character(G: FiniteGroupTable, chi: ClassFunction) -> dict:
    """Scalar action of the center on an irreducible: z -> chi(z)/deg."""
    deg = chi.degree()
    out = {}
    for z in G.subgroups["Z"]:
        v = chi.values[G.class_of(z)]
        if isinstance(v, Cyclo):
            out[z] = v * Fraction(1, int(deg))
        else:
            out[z] = Fraction(v, int(deg))
    return out


# -- Bruhat double cosets ---------------------------------------------------

def permutation_matrix(f: Fq, w):
    """Matrix of a permutation w (Perm on 1..m): column j holds 1 in
    row w(j)."""
    m = w.n
    return tuple(tuple(1 if w(j + 1) == i + 1 else 0 for j in range(m))
                 for i in range(m))


def verify_bruhat_bijection(a: int, alpha: int, m: int, q: int) -> dict:
    """Brute-force P_{a,m-a} \\ GL_m / P_{alpha,m-alpha} and compare with
    the 2x2 matrix solutions; the canonical permutation representatives
    must hit each parabolic double coset exactly once."""
    G = gl_group(m, q)
    f = G.field
    left = (G.subgroups[f"P({a},{m - a})"] if 0 < a < m
            else frozenset(range(G.order)))
    right = (G.subgroups[f"P({alpha},{m - alpha})"] if 0 < alpha < m
             else frozenset(range(G.order)))
    cosets = G.double_cosets(left, right)
    sols = kmatrix_solutions(a, alpha, m)
    coset_of = {}
    for label, (_, members) in enumerate(cosets):
        for x in members:
            coset_of[x] = label
    hit = []
    for k in sols:
        w = w_of_kmatrix(k, a, alpha, m)
        hit.append(coset_of[G.index[permutation_matrix(f, w)]])
    ok = (len(cosets) == len(sols) and len(set(hit)) == len(sols))
    return {"a": a, "alpha": alpha, "m": m, "q": q,
            "cosets": len(cosets), "solutions": len(sols),
            "bijection": ok, "pass": ok}
