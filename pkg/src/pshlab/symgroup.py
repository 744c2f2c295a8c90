"""Permutations, cycle types, Young subgroups and their double cosets.

The double-coset enumeration realizes the bijection between
(Sigma_a x Sigma_{m-a}) \\ Sigma_m / (Sigma_alpha x Sigma_{m-alpha})
and 2x2 matrices of non-negative integers with prescribed row and column
sums, together with the explicit block-interchange representative w(k).
"""

from __future__ import annotations

import itertools
import math
from functools import lru_cache

__all__ = ["Perm", "cycle_data", "conjugacy_classes", "class_of",
           "young_subgroup", "KMatrix", "kmatrix_solutions", "kmatrix_of",
           "w_of_kmatrix", "young_double_cosets", "double_coset_decompose"]


class Perm:
    """A permutation of {1..n}, stored as the tuple of images."""

    __slots__ = ("images",)

    def __init__(self, images):
        images = tuple(images)
        n = len(images)
        if sorted(images) != list(range(1, n + 1)):
            raise ValueError(f"not a bijection of 1..{n}: {images}")
        object.__setattr__(self, "images", images)

    def __setattr__(self, *a):
        raise AttributeError("Perm is immutable")

    @staticmethod
    def identity(n: int) -> "Perm":
        return Perm(range(1, n + 1))

    @staticmethod
    def from_cycles(n: int, cycles) -> "Perm":
        images = list(range(1, n + 1))
        for cyc in cycles:
            for k, x in enumerate(cyc):
                images[x - 1] = cyc[(k + 1) % len(cyc)]
        return Perm(images)

    @property
    def n(self) -> int:
        return len(self.images)

    def __call__(self, x: int) -> int:
        return self.images[x - 1]

    def __mul__(self, other: "Perm") -> "Perm":
        """(self * other)(x) = self(other(x))."""
        return Perm(tuple(self.images[y - 1] for y in other.images))

    def inv(self) -> "Perm":
        out = [0] * self.n
        for x, y in enumerate(self.images, start=1):
            out[y - 1] = x
        return Perm(out)

    def cycles(self) -> list[tuple[int, ...]]:
        """Disjoint cycles covering 1..n, fixed points included, each cycle
        starting at its least element, cycles sorted by length descending
        then by least element."""
        seen = set()
        cycles = []
        for start in range(1, self.n + 1):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            x = self(start)
            while x != start:
                cyc.append(x)
                seen.add(x)
                x = self(x)
            cycles.append(tuple(cyc))
        cycles.sort(key=lambda c: (-len(c), c[0]))
        return cycles

    def cycle_type(self) -> tuple[int, ...]:
        return tuple(sorted((len(c) for c in self.cycles()), reverse=True))

    def sign(self) -> int:
        return -1 if (self.n - len(self.cycles())) % 2 else 1

    def cycle_notation(self) -> str:
        nontrivial = [c for c in self.cycles() if len(c) > 1]
        if not nontrivial:
            return "()"
        return "".join("(" + ",".join(map(str, c)) + ")" for c in nontrivial)

    def __eq__(self, other):
        return isinstance(other, Perm) and self.images == other.images

    def __hash__(self):
        return hash(self.images)

    def __repr__(self):
        return f"Perm{self.images}"


def cycle_data(sigma: Perm):
    """(cycles, cycle type, sign, length) where length = number of cycles."""
    cycles = sigma.cycles()
    ctype = tuple(sorted((len(c) for c in cycles), reverse=True))
    length = len(cycles)
    sign = -1 if (sigma.n - length) % 2 else 1
    return cycles, ctype, sign, length


def class_size(n: int, ctype) -> int:
    mult = {}
    for part in ctype:
        mult[part] = mult.get(part, 0) + 1
    denom = 1
    for i, r in mult.items():
        denom *= i ** r * math.factorial(r)
    return math.factorial(n) // denom


def class_representative(n: int, ctype) -> Perm:
    """Canonical representative: cycles of decreasing length on ascending
    consecutive elements."""
    cycles, k = [], 1
    for part in ctype:
        cycles.append(tuple(range(k, k + part)))
        k += part
    return Perm.from_cycles(n, cycles)


@lru_cache(maxsize=None)
def conjugacy_classes(n: int, bound: int = 8):
    """Map cycle-type partition -> (representative, class size)."""
    if n > bound:
        raise ResourceWarning(f"n = {n} exceeds the bound {bound}")
    from .combinat import partitions
    out = {}
    for lam in partitions(n):
        out[lam] = (class_representative(n, lam), class_size(n, lam))
    assert sum(size for _, size in out.values()) == math.factorial(n)
    return out


def class_of(sigma: Perm):
    return sigma.cycle_type()


def young_subgroup(m: int, a: int) -> list[Perm]:
    """Sigma({1..a}) x Sigma({a+1..m}) as explicit permutations."""
    out = []
    for p in itertools.permutations(range(1, a + 1)):
        for s in itertools.permutations(range(a + 1, m + 1)):
            out.append(Perm(p + s))
    return out


class KMatrix:
    """2x2 non-negative integer matrix with row sums (alpha, m-alpha) and
    column sums (a, m-a); the invariant separating Young double cosets."""

    __slots__ = ("k11", "k12", "k21", "k22")

    def __init__(self, k11, k12, k21, k22):
        for v in (k11, k12, k21, k22):
            if v < 0:
                raise ValueError("KMatrix entries must be non-negative")
        object.__setattr__(self, "k11", k11)
        object.__setattr__(self, "k12", k12)
        object.__setattr__(self, "k21", k21)
        object.__setattr__(self, "k22", k22)

    def __setattr__(self, *a):
        raise AttributeError("KMatrix is immutable")

    def as_tuple(self):
        return (self.k11, self.k12, self.k21, self.k22)

    def __eq__(self, other):
        return isinstance(other, KMatrix) and self.as_tuple() == other.as_tuple()

    def __hash__(self):
        return hash(self.as_tuple())

    def __repr__(self):
        return f"KMatrix(k11={self.k11}, k12={self.k12}, k21={self.k21}, k22={self.k22})"


def kmatrix_solutions(a: int, alpha: int, m: int) -> list[KMatrix]:
    if not (0 <= a <= m and 0 <= alpha <= m):
        raise ValueError("need 0 <= a, alpha <= m")
    out = []
    for k11 in range(max(0, a + alpha - m), min(a, alpha) + 1):
        out.append(KMatrix(k11, alpha - k11, a - k11, m - alpha - (a - k11)))
    return out


def kmatrix_of(g: Perm, a: int, alpha: int, m: int) -> KMatrix:
    """k_{t,v} = #(g(J_t) ∩ I_v) with J_1 = {1..alpha}, I_1 = {1..a}."""
    k11 = sum(1 for x in range(1, alpha + 1) if g(x) <= a)
    k21 = a - k11
    return KMatrix(k11, alpha - k11, k21, m - alpha - k21)


def w_of_kmatrix(k: KMatrix, a: int, alpha: int, m: int) -> Perm:
    """The canonical representative: identity on the two diagonal blocks,
    order-preserving interchange of the off-diagonal blocks."""
    images = [0] * m
    # J blocks (domain): J11 = 1..k11, J12 = k11+1..alpha,
    #                    J21 = alpha+1..alpha+k21, J22 = rest
    # I blocks (range):  I11 = 1..k11, I21 = k11+1..a,
    #                    I12 = a+1..a+k12, I22 = rest
    for t, x in enumerate(range(1, k.k11 + 1)):
        images[x - 1] = 1 + t
    for t, x in enumerate(range(k.k11 + 1, alpha + 1)):
        images[x - 1] = a + 1 + t
    for t, x in enumerate(range(alpha + 1, alpha + k.k21 + 1)):
        images[x - 1] = k.k11 + 1 + t
    for t, x in enumerate(range(alpha + k.k21 + 1, m + 1)):
        images[x - 1] = a + k.k12 + 1 + t
    return Perm(images)


def young_double_cosets(a: int, alpha: int, m: int):
    """One (KMatrix, w(k)) pair per (Sigma_a x Sigma_{m-a}) double coset of
    (Sigma_alpha x Sigma_{m-alpha}) in Sigma_m."""
    return [(k, w_of_kmatrix(k, a, alpha, m))
            for k in kmatrix_solutions(a, alpha, m)]


def double_coset_decompose(g: Perm, a: int, alpha: int, m: int):
    """Factor g = u * w * h with u in Sigma_a x Sigma_{m-a}, h in
    Sigma_alpha x Sigma_{m-alpha} and w the canonical representative."""
    k = kmatrix_of(g, a, alpha, m)
    w = w_of_kmatrix(k, a, alpha, m)
    # h sorts each J block so that elements heading into I_1 come first
    h_images = [0] * m
    j1 = list(range(1, alpha + 1))
    j2 = list(range(alpha + 1, m + 1))
    lo1 = [x for x in j1 if g(x) <= a]
    hi1 = [x for x in j1 if g(x) > a]
    lo2 = [x for x in j2 if g(x) <= a]
    hi2 = [x for x in j2 if g(x) > a]
    for t, x in enumerate(lo1):
        h_images[x - 1] = 1 + t
    for t, x in enumerate(hi1):
        h_images[x - 1] = k.k11 + 1 + t
    for t, x in enumerate(lo2):
        h_images[x - 1] = alpha + 1 + t
    for t, x in enumerate(hi2):
        h_images[x - 1] = alpha + k.k21 + 1 + t
    h = Perm(h_images)
    u = g * h.inv() * w.inv()
    # sanity: u really does preserve the I blocks
    assert all((u(x) <= a) == (x <= a) for x in range(1, m + 1))
    assert u * w * h == g
    return u, w, h
