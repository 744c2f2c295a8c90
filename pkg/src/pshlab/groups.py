"""A uniform carrier for small finite groups given by explicit elements.

FiniteGroupTable wraps an element list plus multiplication and inverse
callbacks, and lazily computes conjugacy classes, subgroup closures,
double cosets and induced characters.  Class labels are integer class
indices; the identity's class is always label 0.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .chars import ClassFunction
from .cyclo import Cyclo

__all__ = ["FiniteGroupTable"]


class FiniteGroupTable:

    def __init__(self, name: str, elements, mul, inv, identity):
        self.name = name
        self.elements = list(elements)
        self.index = {e: i for i, e in enumerate(self.elements)}
        if len(self.index) != len(self.elements):
            raise ValueError("duplicate elements")
        self._mul_fn = mul
        self._inv_fn = inv
        self.identity_idx = self.index[identity]
        self._mul_cache: dict = {}
        self._inv_cache: dict = {}
        self._classes = None
        self._class_of = None
        self._orders: dict = {}
        self.subgroups: dict = {}
        self._char_table = None

    @property
    def order(self) -> int:
        return len(self.elements)

    def mul(self, i: int, j: int) -> int:
        key = (i, j)
        out = self._mul_cache.get(key)
        if out is None:
            out = self.index[self._mul_fn(self.elements[i], self.elements[j])]
            self._mul_cache[key] = out
        return out

    def inv(self, i: int) -> int:
        out = self._inv_cache.get(i)
        if out is None:
            out = self.index[self._inv_fn(self.elements[i])]
            self._inv_cache[i] = out
        return out

    def conj(self, x: int, g: int) -> int:
        """g x g^-1."""
        return self.mul(self.mul(g, x), self.inv(g))

    def element_order(self, i: int) -> int:
        out = self._orders.get(i)
        if out is None:
            out, x = 1, i
            while x != self.identity_idx:
                x = self.mul(x, i)
                out += 1
            self._orders[i] = out
        return out

    def exponent(self) -> int:
        return math.lcm(*(self.element_order(i)
                          for i in range(self.order)))

    # -- subgroups ------------------------------------------------------

    def closure(self, gens) -> frozenset:
        seen = set(gens) | {self.identity_idx}
        frontier = list(seen)
        while frontier:
            nxt = []
            for x in frontier:
                for g in gens:
                    y = self.mul(x, g)
                    if y not in seen:
                        seen.add(y)
                        nxt.append(y)
            frontier = nxt
        return frozenset(seen)

    def small_generators(self, indices) -> list[int]:
        """A short generator list for the subgroup given by its indices."""
        indices = sorted(indices)
        target = len(indices)
        gens: list[int] = []
        current = frozenset({self.identity_idx})
        for i in indices:
            if i not in current:
                gens.append(i)
                current = self.closure(gens)
                if len(current) == target:
                    break
        if len(current) != target:
            raise ValueError("index set is not closed under multiplication")
        return gens

    def register_subgroup(self, name: str, indices):
        indices = frozenset(indices)
        gens = self.small_generators(indices)
        self.subgroups[name] = indices
        return indices, gens

    def is_subgroup(self, indices) -> bool:
        indices = set(indices)
        return (self.identity_idx in indices
                and all(self.mul(a, b) in indices
                        for a in indices for b in indices))

    # -- conjugacy ------------------------------------------------------

    def _compute_classes(self):
        gens = self.small_generators(range(self.order))
        class_of = [-1] * self.order
        classes = []
        for start in range(self.order):
            if class_of[start] >= 0:
                continue
            label = len(classes)
            orbit = {start}
            frontier = [start]
            class_of[start] = label
            while frontier:
                nxt = []
                for x in frontier:
                    for g in gens:
                        y = self.conj(x, g)
                        if y not in orbit:
                            orbit.add(y)
                            class_of[y] = label
                            nxt.append(y)
                frontier = nxt
            classes.append(sorted(orbit))
        # relabel so that the identity's class is 0
        ident = class_of[self.identity_idx]
        if ident != 0:
            classes[0], classes[ident] = classes[ident], classes[0]
            for label, members in enumerate(classes):
                for x in members:
                    class_of[x] = label
        self._classes = classes
        self._class_of = class_of

    def classes(self) -> list[list[int]]:
        if self._classes is None:
            self._compute_classes()
        return self._classes

    def class_of(self, i: int) -> int:
        if self._class_of is None:
            self._compute_classes()
        return self._class_of[i]

    def class_reps(self) -> list[int]:
        return [members[0] for members in self.classes()]

    def class_sizes(self) -> dict:
        return {label: len(members)
                for label, members in enumerate(self.classes())}

    def power_class(self, label: int, k: int) -> int:
        """Class label of rep^k for the representative of a class."""
        rep = self.classes()[label][0]
        x = self.identity_idx
        for _ in range(k % self.element_order(rep)):
            x = self.mul(x, rep)
        return self.class_of(x)

    def inverse_class(self, label: int) -> int:
        return self.class_of(self.inv(self.classes()[label][0]))

    # -- class functions ------------------------------------------------

    def class_function(self, values_by_class: dict) -> ClassFunction:
        return ClassFunction(self.name, values_by_class, self.class_sizes(),
                             0)

    def function_to_class_function(self, fn) -> ClassFunction:
        """Build a ClassFunction from a map element-index -> value,
        checking constancy on classes."""
        values = {}
        for label, members in enumerate(self.classes()):
            first = fn(members[0])
            assert all(fn(x) == first for x in members[1:]), \
                f"not a class function on class {label} of {self.name}"
            values[label] = first
        return self.class_function(values)

    def trivial_character(self) -> ClassFunction:
        return self.class_function({c: 1 for c in range(len(self.classes()))})

    def induced_character(self, sub_indices, chi_on_elements) -> ClassFunction:
        """Induce to the whole group from the subgroup with the given
        index set; chi_on_elements maps each subgroup element index to its
        character value."""
        sub = set(sub_indices)
        values = {}
        for label, members in enumerate(self.classes()):
            g = members[0]
            total = 0
            for y in range(self.order):
                c = self.conj(g, y)
                if c in sub:
                    total = total + chi_on_elements[c]
            if isinstance(total, Cyclo):
                total = total * Fraction(1, len(sub))
                if total.is_rational():
                    total = total.rational_value()
            else:
                total = Fraction(total, len(sub))
                if total.denominator == 1:
                    total = int(total)
            values[label] = total
        return self.class_function(values)

    def restrict_character(self, chi: ClassFunction, sub_indices) -> dict:
        """Restriction as a map subgroup-element-index -> value."""
        return {x: chi.values[self.class_of(x)] for x in sorted(sub_indices)}

    def double_cosets(self, left_indices, right_indices):
        """Partition of the group into H g K double cosets; returns a list
        of (representative, frozenset of members) with the representative
        the least element index in the coset."""
        hgens = self.small_generators(left_indices)
        kgens = self.small_generators(right_indices)
        assigned = [False] * self.order
        out = []
        for start in range(self.order):
            if assigned[start]:
                continue
            orbit = {start}
            frontier = [start]
            assigned[start] = True
            while frontier:
                nxt = []
                for x in frontier:
                    for h in hgens:
                        y = self.mul(h, x)
                        if y not in orbit:
                            orbit.add(y)
                            assigned[y] = True
                            nxt.append(y)
                    for k in kgens:
                        y = self.mul(x, k)
                        if y not in orbit:
                            orbit.add(y)
                            assigned[y] = True
                            nxt.append(y)
                frontier = nxt
            out.append((start, frozenset(orbit)))
        return out

    def character_table(self):
        """Exact irreducible characters via the class-algebra method."""
        if self._char_table is None:
            from .dixon import dixon_character_table
            self._char_table = dixon_character_table(self)
        return self._char_table

    def __repr__(self):
        return f"FiniteGroupTable({self.name}, order {self.order})"
