"""Partitions, Young diagrams, tableaux and tabloids.

Partitions are plain tuples of weakly decreasing positive ints.  Diagram
nodes are 1-based pairs (i, j).  Tabloids are stored canonically with each
row sorted ascending, so orbit equality is structural equality.
"""

from __future__ import annotations

import itertools
from functools import lru_cache

__all__ = ["parse_partition", "format_partition", "partitions", "conjugate",
           "dominates", "lex_compare", "addable_nodes", "removable_nodes",
           "add_node", "remove_node", "diagram_nodes", "Tableau", "Tabloid",
           "standard_tableaux", "all_tableaux", "all_tabloids",
           "combinatorial_lemma_check",
           "tabloid_m_counts", "tabloid_leq", "tabloid_lt"]


class PartitionParseError(ValueError):
    """Malformed partition text; carries the 0-based offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def parse_partition(text: str) -> tuple[int, ...]:
    """Parse "(4,2^2,1)" style text, expanding exponent notation.

    Grammar: "(" item ("," item)* ")" with item = int or int "^" int.
    The result must be weakly decreasing with all parts >= 1; "()" is the
    empty partition of 0.
    """
    s = text.strip()
    off = len(text) - len(text.lstrip())
    if not s.startswith("("):
        raise PartitionParseError("expected '('", off)
    if not s.endswith(")"):
        raise PartitionParseError("expected ')'", off + len(s))
    body = s[1:-1].strip()
    parts: list[int] = []
    if body:
        pos = off + 1
        for item in s[1:-1].split(","):
            stripped = item.strip()
            here = pos + item.index(stripped) if stripped else pos
            base, _, exp = stripped.partition("^")
            try:
                part = int(base)
                count = int(exp) if exp else 1
            except ValueError:
                raise PartitionParseError(f"bad item {stripped!r}", here)
            if part < 1:
                raise PartitionParseError(f"part {part} < 1", here)
            if count < 1:
                raise PartitionParseError(f"exponent {count} < 1", here)
            parts.extend([part] * count)
            pos += len(item) + 1
        for k in range(len(parts) - 1):
            if parts[k] < parts[k + 1]:
                raise PartitionParseError(
                    f"parts not weakly decreasing: {parts[k]} < {parts[k+1]}",
                    off)
    return tuple(parts)


def format_partition(parts) -> str:
    """Inverse of parse_partition, using exponent notation."""
    items = []
    for part, group in itertools.groupby(parts):
        k = len(list(group))
        items.append(f"{part}^{k}" if k > 1 else str(part))
    return "(" + ",".join(items) + ")"


@lru_cache(maxsize=None)
def partitions(n: int) -> tuple[tuple[int, ...], ...]:
    """All partitions of n in lex-descending order."""
    def gen(rem, maxpart):
        if rem == 0:
            yield ()
            return
        for first in range(min(rem, maxpart), 0, -1):
            for rest in gen(rem - first, first):
                yield (first,) + rest
    return tuple(gen(n, n))


def conjugate(parts) -> tuple[int, ...]:
    if not parts:
        return ()
    return tuple(sum(1 for p in parts if p >= j)
                 for j in range(1, parts[0] + 1))


def dominates(lam, mu) -> bool:
    """Partial-sum dominance; both must be partitions of the same n."""
    if sum(lam) != sum(mu):
        raise ValueError("dominance needs equal partition sizes")
    total_l = total_m = 0
    for i in range(max(len(lam), len(mu))):
        total_l += lam[i] if i < len(lam) else 0
        total_m += mu[i] if i < len(mu) else 0
        if total_l < total_m:
            return False
    return True


def lex_compare(lam, mu) -> int:
    """-1 / 0 / +1 lexicographic comparison of equal-size partitions."""
    if sum(lam) != sum(mu):
        raise ValueError("lex order compares partitions of the same n")
    return (lam > mu) - (lam < mu)


def diagram_nodes(parts):
    return [(i + 1, j + 1) for i, p in enumerate(parts) for j in range(p)]


def addable_nodes(parts) -> set[tuple[int, int]]:
    nodes = {(len(parts) + 1, 1)}
    for i, p in enumerate(parts):
        if i == 0 or parts[i - 1] > p:
            nodes.add((i + 1, p + 1))
    return nodes


def removable_nodes(parts) -> set[tuple[int, int]]:
    nodes = set()
    for i, p in enumerate(parts):
        if i == len(parts) - 1 or parts[i + 1] < p:
            nodes.add((i + 1, p))
    return nodes


def add_node(parts, node) -> tuple[int, ...]:
    i, j = node
    if node not in addable_nodes(parts):
        raise ValueError(f"{node} is not addable to {parts}")
    out = list(parts) + [0] * (i - len(parts))
    out[i - 1] += 1
    return tuple(out)


def remove_node(parts, node) -> tuple[int, ...]:
    i, j = node
    if node not in removable_nodes(parts):
        raise ValueError(f"{node} is not removable from {parts}")
    out = list(parts)
    out[i - 1] -= 1
    if out[-1] == 0:
        out.pop()
    return tuple(out)


class Tableau:
    """A filling of the diagram of `shape` by 1..n, one number per node."""

    __slots__ = ("shape", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        shape = tuple(len(r) for r in rows)
        entries = [x for r in rows for x in r]
        n = len(entries)
        if sorted(entries) != list(range(1, n + 1)):
            raise ValueError("tableau entries must be a bijection to 1..n")
        for k in range(len(shape) - 1):
            if shape[k] < shape[k + 1]:
                raise ValueError("row lengths must weakly decrease")
        object.__setattr__(self, "shape", shape)
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *a):
        raise AttributeError("Tableau is immutable")

    @property
    def n(self) -> int:
        return sum(self.shape)

    def columns(self):
        width = self.shape[0] if self.shape else 0
        return [tuple(r[j] for r in self.rows if len(r) > j)
                for j in range(width)]

    def column_of(self) -> dict:
        """Map entry -> 1-based column index."""
        return {x: j + 1 for r in self.rows for j, x in enumerate(r)}

    def row_of(self) -> dict:
        return {x: i + 1 for i, r in enumerate(self.rows) for x in r}

    def apply(self, images) -> "Tableau":
        """Relabel every entry i by images[i-1] (a permutation of 1..n)."""
        return Tableau(tuple(tuple(images[x - 1] for x in r)
                             for r in self.rows))

    def tabloid(self) -> "Tabloid":
        return Tabloid(self.rows)

    def is_standard(self) -> bool:
        for r in self.rows:
            if any(r[j] >= r[j + 1] for j in range(len(r) - 1)):
                return False
        for c in self.columns():
            if any(c[i] >= c[i + 1] for i in range(len(c) - 1)):
                return False
        return True

    def __eq__(self, other):
        return isinstance(other, Tableau) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Tableau({[list(r) for r in self.rows]})"


class Tabloid:
    """Row-equivalence class of a tableau, stored with rows sorted."""

    __slots__ = ("shape", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(sorted(r)) for r in rows)
        object.__setattr__(self, "shape", tuple(len(r) for r in rows))
        object.__setattr__(self, "rows", rows)

    def __setattr__(self, *a):
        raise AttributeError("Tabloid is immutable")

    @property
    def n(self) -> int:
        return sum(self.shape)

    def apply(self, images) -> "Tabloid":
        return Tabloid(tuple(tuple(images[x - 1] for x in r)
                             for r in self.rows))

    def row_of(self) -> dict:
        return {x: i + 1 for i, r in enumerate(self.rows) for x in r}

    def __eq__(self, other):
        return isinstance(other, Tabloid) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __repr__(self):
        return f"Tabloid({[list(r) for r in self.rows]})"


def all_tabloids(shape) -> list[Tabloid]:
    """Every tabloid of the given shape, in a fixed deterministic order."""
    n = sum(shape)
    out = []

    def rec(remaining, rows):
        if not remaining and len(rows) == len(shape):
            out.append(Tabloid(rows))
            return
        i = len(rows)
        for combo in itertools.combinations(sorted(remaining), shape[i]):
            rec(remaining - set(combo), rows + [combo])
    rec(set(range(1, n + 1)), [])
    return out


def all_tableaux(shape) -> list[Tableau]:
    n = sum(shape)
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        rows, k = [], 0
        for p in shape:
            rows.append(perm[k:k + p])
            k += p
        out.append(Tableau(rows))
    return out


def standard_tableaux(shape) -> list[Tableau]:
    """All standard tableaux of the shape, by backtracking on entries."""
    n = sum(shape)
    rows = [list(r) for r in
            [[0] * p for p in shape]]
    out = []

    def place(x):
        if x > n:
            out.append(Tableau([tuple(r) for r in rows]))
            return
        for i, p in enumerate(shape):
            j = next((j for j in range(p) if rows[i][j] == 0), None)
            if j is None:
                continue
            if j > 0 and rows[i][j - 1] == 0:
                continue
            if i > 0 and (len(rows[i - 1]) <= j or rows[i - 1][j] == 0):
                continue
            rows[i][j] = x
            place(x + 1)
            rows[i][j] = 0
    place(1)
    return out


def combinatorial_lemma_check(t1: Tableau, t2: Tableau) -> bool:
    """Whether every row of t2 has its entries in pairwise distinct
    columns of t1."""
    col1 = t1.column_of()
    for row in t2.rows:
        cols = [col1[x] for x in row]
        if len(set(cols)) != len(cols):
            return False
    return True


def tabloid_m_counts(t: Tabloid) -> dict:
    """m[(i, r)] = how many of 1..i sit in rows 1..r of the tabloid."""
    row = t.row_of()
    n = t.n
    counts = {}
    for i in range(1, n + 1):
        for r in range(1, len(t.shape) + 1):
            counts[(i, r)] = sum(1 for x in range(1, i + 1) if row[x] <= r)
    return counts


def tabloid_leq(t1: Tabloid, t2: Tabloid) -> bool:
    """Tabloid dominance: t1 <= t2 iff every m-count of t1 is <= that of
    t2."""
    if t1.shape != t2.shape:
        raise ValueError("tabloid dominance needs equal shapes")
    m1 = tabloid_m_counts(t1)
    m2 = tabloid_m_counts(t2)
    return all(m1[k] <= m2[k] for k in m1)


def tabloid_lt(t1: Tabloid, t2: Tabloid) -> bool:
    return t1 != t2 and tabloid_leq(t1, t2)
