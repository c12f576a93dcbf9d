"""Finite groups as multiplication tables, and their right-regular cycle index.

A group of order ``n`` is stored as an ``n x n`` table of element indices.
Cyclic groups use index ``j`` for ``a^j`` and the labels ``1, a, a2, ...``.
"""

from __future__ import annotations

import math
import random
import re
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Iterable, Sequence

from .errors import InvalidArgumentError, MalformedGroupError

_CYCLIC_SPEC = re.compile(r"^[Cc](\d+)$")
_POWER_LABEL = re.compile(r"^a(\d*)$")

# Above this order associativity is spot-checked on random triples.
EXHAUSTIVE_ASSOCIATIVITY_MAX = 64


@dataclass(frozen=True)
class Group:
    mul: tuple[tuple[int, ...], ...]
    identity: int
    labels: tuple[str, ...]
    cyclic: bool = False

    @property
    def order(self) -> int:
        return len(self.mul)

    @property
    def name(self) -> str:
        return f"C{self.order}" if self.cyclic else f"G{self.order}"

    def op(self, x: int, y: int) -> int:
        return self.mul[x][y]

    def inverse(self, x: int) -> int:
        row = self.mul[x]
        return row.index(self.identity)

    def element_order(self, x: int) -> int:
        k, y = 1, x
        while y != self.identity:
            y = self.mul[y][x]
            k += 1
        return k

    def index(self, label: str) -> int:
        """Return the element index for ``label``.

        Besides the stored labels, ``a1`` is accepted for ``a`` and, in a
        cyclic group, ``a0`` and ``a<n>`` reduce modulo the order.
        """
        label = label.strip()
        try:
            return self.labels.index(label)
        except ValueError:
            pass
        m = _POWER_LABEL.match(label)
        if self.cyclic and m:
            return int(m.group(1) or 1) % self.order
        if label == "a1" and "a" in self.labels:
            return self.labels.index("a")
        raise InvalidArgumentError(f"unknown element label {label!r} in {self.name}")

    def right_translate(self, elements: Iterable[int], g: int) -> list[int]:
        return [self.mul[x][g] for x in elements]


@dataclass(frozen=True)
class GeneratingSet:
    """A set H of element indices; the identity is allowed (it yields loops)."""

    elements: tuple[int, ...]
    has_identity: bool = False

    @property
    def size(self) -> int:
        return len(self.elements)

    def labels(self, group: Group) -> list[str]:
        return [group.labels[x] for x in self.elements]


def generating_set(group: Group, elements: Iterable[int]) -> GeneratingSet:
    elems = list(elements)
    if len(set(elems)) != len(elems):
        raise InvalidArgumentError(f"duplicate generators in {elems}")
    for x in elems:
        if not 0 <= x < group.order:
            raise InvalidArgumentError(f"generator index {x} outside 0..{group.order - 1}")
    return GeneratingSet(tuple(sorted(elems)), group.identity in elems)


def parse_generators(group: Group, text: str) -> GeneratingSet:
    """Parse a comma-separated label list such as ``"a,a2,a3"``."""
    tokens = [tok for tok in text.split(",") if tok.strip()]
    return generating_set(group, [group.index(tok) for tok in tokens])


def make_cyclic(n: int) -> Group:
    if n < 1:
        raise InvalidArgumentError(f"group order must be positive, got {n}")
    mul = tuple(tuple((i + j) % n for j in range(n)) for i in range(n))
    labels = tuple(cyclic_label(j) for j in range(n))
    return Group(mul, 0, labels, cyclic=True)


def cyclic_label(j: int) -> str:
    if j == 0:
        return "1"
    if j == 1:
        return "a"
    return f"a{j}"


def load_cayley_table(
    table: Sequence[Sequence[int]], labels: Sequence[str] | None = None
) -> Group:
    """Validate a multiplication table and wrap it as a :class:`Group`."""
    n = len(table)
    if n == 0:
        raise InvalidArgumentError("empty multiplication table")
    rows = tuple(tuple(int(v) for v in row) for row in table)
    full = set(range(n))
    for i, row in enumerate(rows):
        if len(row) != n:
            raise MalformedGroupError(f"row {i} has {len(row)} entries, expected {n}")
        if set(row) != full:
            raise MalformedGroupError(f"row {i} is not a permutation of 0..{n - 1}")
    for j in range(n):
        if {rows[i][j] for i in range(n)} != full:
            raise MalformedGroupError(f"column {j} is not a permutation of 0..{n - 1}")

    identity = next(
        (e for e in range(n) if all(rows[e][x] == x and rows[x][e] == x for x in range(n))),
        None,
    )
    if identity is None:
        raise MalformedGroupError("no two-sided identity element")

    if n <= EXHAUSTIVE_ASSOCIATIVITY_MAX:
        triples: Iterable[tuple[int, int, int]] = (
            (x, y, z) for x in range(n) for y in range(n) for z in range(n)
        )
    else:
        rng = random.Random(n)
        triples = [tuple(rng.randrange(n) for _ in range(3)) for _ in range(20000)]
    for x, y, z in triples:
        if rows[rows[x][y]][z] != rows[x][rows[y][z]]:
            raise MalformedGroupError(f"associativity fails on ({x}, {y}, {z})")

    if labels is None:
        labels = ["1" if i == identity else f"g{i}" for i in range(n)]
    labels = tuple(labels)
    if len(labels) != n or len(set(labels)) != n:
        raise MalformedGroupError("labels must be n distinct strings")
    cyclic = identity == 0 and all(rows[i][j] == (i + j) % n for i in range(n) for j in range(n))
    return Group(rows, identity, labels, cyclic=cyclic)


def read_cayley_table(path: str | Path) -> Group:
    """Read the plain-text table format.

    First line ``n``, then ``n`` lines of ``n`` space-separated indices,
    then an optional line of ``n`` labels.
    """
    lines = [ln for ln in Path(path).read_text().splitlines() if ln.strip()]
    if not lines:
        raise MalformedGroupError(f"{path}: empty file")
    try:
        n = int(lines[0])
        table = [[int(v) for v in ln.split()] for ln in lines[1 : n + 1]]
    except ValueError as exc:
        raise MalformedGroupError(f"{path}: {exc}") from None
    if len(table) != n:
        raise MalformedGroupError(f"{path}: expected {n} table rows, found {len(table)}")
    rest = lines[n + 1 :]
    if len(rest) > 1:
        raise MalformedGroupError(f"{path}: trailing content after label line")
    labels = rest[0].split() if rest else None
    return load_cayley_table(table, labels)


def write_cayley_table(group: Group, path: str | Path) -> None:
    rows = [str(group.order)] + [" ".join(map(str, row)) for row in group.mul]
    rows.append(" ".join(group.labels))
    Path(path).write_text("\n".join(rows) + "\n")


def parse_group(spec: str) -> Group:
    """``"C<n>"`` builds a cyclic group; anything else is a table file path."""
    m = _CYCLIC_SPEC.match(spec.strip())
    if m:
        return make_cyclic(int(m.group(1)))
    path = Path(spec)
    if not path.is_file():
        raise InvalidArgumentError(f"group spec {spec!r} is neither C<n> nor a readable file")
    return read_cayley_table(path)


@dataclass(frozen=True)
class CycleTerm:
    length: int
    count: int
    coeff: Fraction


@dataclass(frozen=True)
class CycleIndex:
    """Cycle index of the right-regular representation.

    Each term stands for ``coeff * x_length ** count``.
    """

    n: int
    terms: tuple[CycleTerm, ...]

    def evaluate_subset_polynomial(self) -> list[Fraction]:
        """Coefficients of ``P(1 + y, 1 + y^2, ..., 1 + y^n)`` by power of ``y``."""
        total = [Fraction(0)] * (self.n + 1)
        for term in self.terms:
            # (1 + y^d)^c expands to sum_j C(c, j) y^(d j)
            for j in range(term.count + 1):
                total[term.length * j] += term.coeff * math.comb(term.count, j)
        return total

    def __str__(self) -> str:
        parts = []
        for term in self.terms:
            mono = f"x{term.length}" + (f"^{term.count}" if term.count > 1 else "")
            parts.append(f"{term.coeff}*{mono}")
        return " + ".join(parts)


def cycle_index_regular(group: Group) -> CycleIndex:
    n = group.order
    # Right multiplication by g splits the elements into n/ord(g) cycles of length ord(g).
    lengths = Counter(group.element_order(g) for g in range(n))
    terms = tuple(
        CycleTerm(d, n // d, Fraction(lengths[d], n)) for d in sorted(lengths)
    )
    return CycleIndex(n, terms)


def orbit_count(group: Group, k: int) -> int:
    """Number of orbits of k-subsets under right translation."""
    n = group.order
    if not 0 <= k <= n:
        raise InvalidArgumentError(f"subset size {k} outside 0..{n}")
    value = cycle_index_regular(group).evaluate_subset_polynomial()[k]
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral orbit count {value}")
    return value.numerator
