"""Set partitions, coimages, refinement order, and counted function classes.

Partitions are enumerated through restricted growth strings, which are
duplicate-free by construction.  Blocks are canonicalized (sorted within,
ordered by least element) so that structural equality is set equality.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb, factorial
from typing import Iterable, List, Optional, Sequence

POSET_LIMIT = 6  # largest ground set for whole-poset enumeration


@dataclass(frozen=True)
class SetPartition:
    """Unordered partition of ``{1, ..., ground}`` in canonical form."""

    ground: int
    blocks: tuple  # tuple of tuples, each sorted, ordered by least element

    def __post_init__(self):
        blocks = tuple(tuple(sorted(set(int(x) for x in b))) for b in self.blocks)
        blocks = tuple(sorted(blocks, key=lambda b: b[0] if b else 0))
        seen: set = set()
        for b in blocks:
            if not b:
                raise ValueError("partition blocks must be nonempty")
            if seen & set(b):
                raise ValueError("partition blocks must be disjoint")
            seen |= set(b)
        if seen != set(range(1, self.ground + 1)):
            raise ValueError(f"blocks must cover 1..{self.ground}")
        object.__setattr__(self, "blocks", blocks)

    @property
    def block_count(self) -> int:
        return len(self.blocks)

    def block_of(self, x: int) -> tuple:
        for b in self.blocks:
            if x in b:
                return b
        raise ValueError(f"{x} is not in the ground set")

    def sdr(self) -> tuple:
        """Canonical system of distinct representatives: least elements."""
        return tuple(b[0] for b in self.blocks)

    def __str__(self):
        return "|".join("{" + ",".join(str(x) for x in b) + "}" for b in self.blocks)


def from_blocks(blocks: Iterable[Iterable[int]]) -> SetPartition:
    blocks = [list(b) for b in blocks]
    ground = max((x for b in blocks for x in b), default=0)
    return SetPartition(ground, tuple(tuple(b) for b in blocks))


def _rgs_partitions(n: int):
    # restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[:i])
    a = [0] * n
    while True:
        blocks: List[List[int]] = []
        for i, v in enumerate(a):
            while v >= len(blocks):
                blocks.append([])
            blocks[v].append(i + 1)
        yield SetPartition(n, tuple(tuple(b) for b in blocks))
        i = n - 1
        while i > 0:
            if a[i] <= max(a[:i]):
                break
            i -= 1
        if i == 0:
            return
        a[i] += 1
        for j in range(i + 1, n):
            a[j] = 0


def enumerate_partitions(n: int, k: Optional[int] = None) -> list:
    """All partitions of ``{1..n}``, or only those with ``k`` blocks."""
    if n < 1:
        raise ValueError("the ground set must have at least one element")
    if k is not None and not 1 <= k <= n:
        raise ValueError(f"block count {k} out of range 1..{n}")
    parts = list(_rgs_partitions(n))
    if k is not None:
        parts = [p for p in parts if p.block_count == k]
    return parts


def stirling2(n: int, k: int) -> int:
    """Number of partitions of an n-set into k blocks, by recurrence."""
    if n < 0 or k < 0:
        raise ValueError("n and k must be nonnegative")
    if n == 0:
        return 1 if k == 0 else 0
    if k == 0 or k > n:
        return 0
    row = [1] + [0] * k
    for m in range(1, n + 1):
        new = [0] * (k + 1)
        for j in range(1, min(m, k) + 1):
            new[j] = j * row[j] + row[j - 1]
        new[0] = 1 if m == 0 else 0
        row = new
    return row[k]


def bell(n: int) -> int:
    """Total number of partitions of an n-set."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    return sum(stirling2(n, k) for k in range(n + 1)) if n else 1


@dataclass(frozen=True)
class FiniteFunction:
    """A function ``{1..domain} -> {1..codomain}`` given by its value list."""

    domain: int
    codomain: int
    values: tuple

    def __post_init__(self):
        values = tuple(int(v) for v in self.values)
        if len(values) != self.domain:
            raise ValueError(f"need {self.domain} values, got {len(values)}")
        if any(not 1 <= v <= self.codomain for v in values):
            raise ValueError(f"values must lie in 1..{self.codomain}")
        object.__setattr__(self, "values", values)

    def __call__(self, x: int) -> int:
        if not 1 <= x <= self.domain:
            raise ValueError(f"{x} outside the domain 1..{self.domain}")
        return self.values[x - 1]

    def two_line(self) -> str:
        top = " ".join(str(i) for i in range(1, self.domain + 1))
        bot = " ".join(str(v) for v in self.values)
        return f"({top} / {bot})"


def coimage(f: FiniteFunction) -> SetPartition:
    """Partition of the domain into the fibers of ``f``."""
    fibers: dict = {}
    for x in range(1, f.domain + 1):
        fibers.setdefault(f(x), []).append(x)
    return SetPartition(f.domain, tuple(tuple(b) for b in fibers.values()))


def refines(p1: SetPartition, p2: SetPartition) -> bool:
    """True when every block of ``p1`` lies inside some block of ``p2``."""
    if p1.ground != p2.ground:
        raise ValueError("partitions of different ground sets are incomparable")
    lookup = {}
    for b in p2.blocks:
        for x in b:
            lookup[x] = b
    return all(set(b) <= set(lookup[b[0]]) for b in p1.blocks)


def covering_edges(n: int) -> list:
    """Covering pairs ``(x, y)`` of the refinement order on partitions.

    ``x`` is covered by ``y`` exactly when ``y`` arises from ``x`` by
    merging two blocks; the betweenness characterization is verified
    against this in the tests.  Guarded to small ground sets.
    """
    if n < 1:
        raise ValueError("the ground set must have at least one element")
    if n > POSET_LIMIT:
        raise ValueError(f"poset enumeration is limited to n <= {POSET_LIMIT}")
    edges = []
    for x in enumerate_partitions(n):
        for i, j in itertools.combinations(range(x.block_count), 2):
            merged = [b for t, b in enumerate(x.blocks) if t not in (i, j)]
            merged.append(tuple(sorted(x.blocks[i] + x.blocks[j])))
            edges.append((x, SetPartition(n, tuple(merged))))
    return edges


_CLASSES = ("SNC", "WNC", "INJ", "PER")


def _validate_class(cls: str, n: int, p: int) -> str:
    cls = cls.upper()
    if cls not in _CLASSES:
        raise ValueError(f"unknown function class {cls!r}; choose from {_CLASSES}")
    if n < 0 or p < 0:
        raise ValueError("n and p must be nonnegative")
    if cls == "PER" and n != p:
        raise ValueError("permutations need equal domain and range sizes")
    return cls


def count_functions(cls: str, n: int, p: int) -> int:
    """Closed-form size of a function class."""
    cls = _validate_class(cls, n, p)
    if cls == "SNC":
        return comb(p, n)
    if cls == "WNC":
        return comb(p + n - 1, n) if p + n > 0 else 1
    if cls == "INJ":
        out = 1
        for i in range(n):
            out *= p - i
        return max(out, 0)
    return factorial(n)


def enumerate_functions(cls: str, n: int, p: int) -> list:
    """All members of a function class, as value lists."""
    cls = _validate_class(cls, n, p)
    rng = range(1, p + 1)
    if cls == "SNC":
        tuples = itertools.combinations(rng, n)
    elif cls == "WNC":
        tuples = itertools.combinations_with_replacement(rng, n)
    else:  # INJ, PER
        tuples = itertools.permutations(rng, n)
    return [FiniteFunction(n, p, t) for t in tuples]


def position_rank(universe: Sequence, subset: Iterable, x) -> tuple:
    """Position and rank of ``x`` relative to a subset of a linear order.

    Position counts subset elements at or below ``x``; rank counts those
    strictly below.  ``universe`` fixes the order; ``x`` must belong to it.
    """
    order = {}
    for i, v in enumerate(universe):
        if v in order:
            raise ValueError(f"duplicate element {v!r} in the ordered set")
        order[v] = i
    if x not in order:
        raise ValueError(f"{x!r} is not in the ordered set")
    xs = order[x]
    idx = []
    for t in subset:
        if t not in order:
            raise ValueError(f"subset element {t!r} is not in the ordered set")
        idx.append(order[t])
    pi = sum(1 for i in idx if i <= xs)
    rho = sum(1 for i in idx if i < xs)
    return pi, rho
