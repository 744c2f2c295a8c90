"""Exact character tables of small finite groups via the class-algebra
(Burnside/Dixon) method.

The class-sum matrices are simultaneously diagonalized over a prime field
F_l with l = 1 (mod exponent) and l > 2|G|, degrees are recovered from the
second orthogonality relation, and values are lifted to Q(zeta_e) by
discrete Fourier inversion over the power maps.  Both orthogonality
relations are re-verified exactly in cyclotomic arithmetic before the
table is returned.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .cyclo import Cyclo, zeta
from .groups import FiniteGroupTable

__all__ = ["dixon_character_table"]


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    for p in range(2, int(math.isqrt(n)) + 1):
        if n % p == 0:
            return False
    return True


def _choose_prime(e: int, minimum: int) -> int:
    l = e + 1
    while l <= minimum or not _is_prime(l):
        l += e
    return l


def _primitive_root(l: int) -> int:
    fac = []
    n = l - 1
    d = 2
    while d * d <= n:
        if n % d == 0:
            fac.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        fac.append(n)
    for g in range(2, l):
        if all(pow(g, (l - 1) // p, l) != 1 for p in fac):
            return g
    raise AssertionError("no primitive root found")


def _mat_vec(a, v, l):
    return [sum(a[i][j] * v[j] for j in range(len(v))) % l
            for i in range(len(a))]


def _charpoly_eval(a, x, l):
    """det(xI - a) mod l by Gaussian elimination."""
    n = len(a)
    m = [[(x if i == j else 0) - a[i][j] for j in range(n)] for i in range(n)]
    det = 1
    for c in range(n):
        piv = next((i for i in range(c, n) if m[i][c] % l), None)
        if piv is None:
            return 0
        if piv != c:
            m[c], m[piv] = m[piv], m[c]
            det = -det
        inv = pow(m[c][c], l - 2, l)
        det = det * m[c][c] % l
        for i in range(c + 1, n):
            f = m[i][c] * inv % l
            if f:
                m[i] = [(m[i][j] - f * m[c][j]) % l for j in range(n)]
    return det % l


def _eigenvalues(a, l):
    """All eigenvalues in F_l of the matrix a (roots of its char poly)."""
    return [x for x in range(l) if _charpoly_eval(a, x, l) == 0]


def _nullspace(a, l):
    """Basis of the nullspace of a over F_l."""
    rows = [row[:] for row in a]
    n_rows = len(rows)
    n_cols = len(rows[0]) if rows else 0
    piv_cols = []
    r = 0
    for c in range(n_cols):
        piv = next((i for i in range(r, n_rows) if rows[i][c] % l), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = pow(rows[r][c], l - 2, l)
        rows[r] = [x * inv % l for x in rows[r]]
        for i in range(n_rows):
            if i != r and rows[i][c] % l:
                f = rows[i][c]
                rows[i] = [(rows[i][j] - f * rows[r][j]) % l
                           for j in range(n_cols)]
        piv_cols.append(c)
        r += 1
    basis = []
    free = [c for c in range(n_cols) if c not in piv_cols]
    for fc in free:
        v = [0] * n_cols
        v[fc] = 1
        for row_idx, pc in enumerate(piv_cols):
            v[pc] = (-rows[row_idx][fc]) % l
        basis.append(v)
    return basis


def _restrict(a, basis, l):
    """Matrix of the linear map a on the span of basis, in basis coords."""
    d = len(basis)
    n = len(basis[0])
    # augmented solve: [basis^T | a b_j] for all j at once
    cols = [_mat_vec(a, b, l) for b in basis]
    m = [[basis[j][i] for j in range(d)] + [cols[j][i] for j in range(d)]
         for i in range(n)]
    r = 0
    piv_rows = []
    for c in range(d):
        piv = next((i for i in range(r, n) if m[i][c] % l), None)
        assert piv is not None, "basis not independent"
        m[r], m[piv] = m[piv], m[r]
        inv = pow(m[r][c], l - 2, l)
        m[r] = [x * inv % l for x in m[r]]
        for i in range(n):
            if i != r and m[i][c] % l:
                f = m[i][c]
                m[i] = [(m[i][j] - f * m[r][j]) % l for j in range(d + d)]
        piv_rows.append(r)
        r += 1
    for i in range(r, n):
        assert all(x % l == 0 for x in m[i][d:]), "image leaves the span"
    return [[m[i][d + j] for j in range(d)] for i in range(d)]


def _class_matrices(G: FiniteGroupTable):
    classes = G.classes()
    r = len(classes)
    reps = G.class_reps()
    mats = [[[0] * r for _ in range(r)] for _ in range(r)]
    for k in range(r):
        z = reps[k]
        for x in range(G.order):
            i = G.class_of(x)
            j = G.class_of(G.mul(G.inv(x), z))
            mats[i][k][j] += 1
    # mats[i][k][j] currently counts a_{i j k}; transpose to (B_i)_{k j}
    out = []
    for i in range(r):
        out.append([[mats[i][k][j] for j in range(r)] for k in range(r)])
    return out


def dixon_character_table(G: FiniteGroupTable):
    """List of exact irreducible ClassFunctions, sorted by degree."""
    classes = G.classes()
    r = len(classes)
    sizes = G.class_sizes()
    e = G.exponent()
    l = _choose_prime(e, 2 * G.order)
    mats = _class_matrices(G)

    # split the class algebra into common eigenlines over F_l
    spaces = [[[1 if i == j else 0 for j in range(r)] for i in range(r)]]
    for i in range(1, r):
        new_spaces = []
        for basis in spaces:
            if len(basis) == 1:
                new_spaces.append(basis)
                continue
            restricted = _restrict(mats[i], basis, l)
            for lam in _eigenvalues(restricted, l):
                shifted = [[(restricted[a][b] - (lam if a == b else 0)) % l
                            for b in range(len(basis))]
                           for a in range(len(basis))]
                sub = []
                for coords in _nullspace(shifted, l):
                    sub.append([sum(coords[t] * basis[t][c]
                                    for t in range(len(basis))) % l
                                for c in range(r)])
                if sub:
                    new_spaces.append(sub)
        spaces = new_spaces
    assert len(spaces) == r and all(len(b) == 1 for b in spaces), \
        "class algebra failed to split completely"

    z_idx = _primitive_root(l)
    z = pow(z_idx, (l - 1) // e, l)
    inv_e = pow(e, l - 2, l)

    chars = []
    for (v,) in [tuple(b) for b in spaces]:
        omega = []
        pivot = next(c for c in range(r) if v[c] % l)
        pinv = pow(v[pivot], l - 2, l)
        for i in range(r):
            w = _mat_vec(mats[i], v, l)
            omega.append(w[pivot] * pinv % l)
        s = sum(omega[i] * omega[G.inverse_class(i)]
                * pow(sizes[i], l - 2, l) for i in range(r)) % l
        d2 = G.order * pow(s, l - 2, l) % l
        deg = next(d for d in range(1, int(math.isqrt(G.order)) + 1)
                   if d * d % l == d2)
        chi_mod = [deg * omega[i] * pow(sizes[i], l - 2, l) % l
                   for i in range(r)]
        values = {}
        for i in range(r):
            acc = Cyclo.rational(0)
            for k in range(e):
                m_ik = sum(chi_mod[G.power_class(i, j)]
                           * pow(z, (-j * k) % (l - 1), l)
                           for j in range(e)) * inv_e % l
                assert m_ik <= deg, "lifted multiplicity out of range"
                if m_ik:
                    acc = acc + m_ik * zeta(e, k)
            values[i] = (int(acc.rational_value()) if acc.is_rational()
                         else acc)
        assert values[0] == deg
        chars.append(G.class_function(values))

    chars.sort(key=lambda c: (c.values[0] if isinstance(c.values[0], int)
                              else 0,
                              [str(c.values[i]) for i in range(r)]))
    _verify_orthogonality(G, chars)
    return chars


def _verify_orthogonality(G: FiniteGroupTable, chars):
    r = len(G.classes())
    assert len(chars) == r
    assert sum(int(c.values[0]) ** 2 for c in chars) == G.order
    for i, a in enumerate(chars):
        for j, b in enumerate(chars):
            assert a.inner(b) == (1 if i == j else 0), \
                f"orthogonality failure in {G.name} at ({i},{j})"
    # column orthogonality: sum over chars of chi(g) conj(chi(h))
    sizes = G.class_sizes()
    for k in range(r):
        total = 0
        for c in chars:
            v = c.values[k]
            conj = v.conj() if isinstance(v, Cyclo) else v
            total = total + v * conj
        expected = Fraction(G.order, sizes[k])
        assert total == expected, f"column orthogonality failure at {k}"
