"""Finite posets stored as bitset closure rows.

Elements are the dense indices ``0..size-1``; labels exist only for input
and output.  ``below[y]`` is the bitmask of every ``x`` with ``x < y``.
"""

from __future__ import annotations

import json
import os
from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from .errors import (
    CycleError,
    DuplicateLabelError,
    IdealBudgetExceeded,
    PosetFormatError,
    UnknownLabelError,
)

DEFAULT_IDEAL_BUDGET = 10_000_000
BUDGET_ENV = "LINEXT_IDEAL_BUDGET"


def default_budget() -> int:
    raw = os.environ.get(BUDGET_ENV)
    if raw is None:
        return DEFAULT_IDEAL_BUDGET
    try:
        cap = int(raw)
    except ValueError:
        raise PosetFormatError(f"{BUDGET_ENV} must be an integer, got {raw!r}") from None
    if cap < 1:
        raise PosetFormatError(f"{BUDGET_ENV} must be positive, got {cap}")
    return cap


def iter_bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True)
class OrderIdeal:
    """A downward-closed set of element indices, encoded as a bitmask."""

    mask: int

    @property
    def members(self) -> frozenset[int]:
        return frozenset(iter_bits(self.mask))

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, index: int) -> bool:
        return bool(self.mask >> index & 1)


@dataclass(frozen=True, eq=False)
class Poset:
    labels: tuple[str, ...]
    below: tuple[int, ...]

    def __post_init__(self) -> None:
        if len(self.labels) != len(self.below):
            raise ValueError("labels and closure rows differ in length")

    # -- structure -----------------------------------------------------

    @property
    def size(self) -> int:
        return len(self.labels)

    @cached_property
    def above(self) -> tuple[int, ...]:
        rows = [0] * self.size
        for y, down in enumerate(self.below):
            for x in iter_bits(down):
                rows[x] |= 1 << y
        return tuple(rows)

    @cached_property
    def _index(self) -> dict[str, int]:
        return {label: i for i, label in enumerate(self.labels)}

    @property
    def full_mask(self) -> int:
        return (1 << self.size) - 1

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise UnknownLabelError(f"unknown element {label!r}") from None

    @property
    def closure(self) -> tuple[tuple[bool, ...], ...]:
        """``closure[x][y]`` is true iff ``x < y``."""
        return tuple(
            tuple(bool(self.below[y] >> x & 1) for y in range(self.size))
            for x in range(self.size)
        )

    @cached_property
    def cover_indices(self) -> tuple[tuple[int, int], ...]:
        # x < y is a cover iff nothing lies strictly between them
        out = []
        for y in range(self.size):
            for x in iter_bits(self.below[y]):
                if not self.above[x] & self.below[y]:
                    out.append((x, y))
        out.sort()
        return tuple(out)

    @property
    def covers(self) -> list[tuple[str, str]]:
        return [(self.labels[x], self.labels[y]) for x, y in self.cover_indices]

    def less(self, x: int, y: int) -> bool:
        return bool(self.below[y] >> x & 1)

    def is_less(self, x: str, y: str) -> bool:
        return self.less(self.index(x), self.index(y))

    def comparable(self, x: int, y: int) -> bool:
        return self.less(x, y) or self.less(y, x)

    def is_chain(self) -> bool:
        return all(
            self.comparable(x, y) for x in range(self.size) for y in range(x + 1, self.size)
        )

    def maximal_elements(self) -> list[int]:
        return [x for x in range(self.size) if not self.above[x]]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.labels == other.labels and self.below == other.below

    def __hash__(self) -> int:
        return hash((self.labels, self.below))

    def __repr__(self) -> str:
        return f"Poset(size={self.size}, covers={self.covers})"

    # -- derived posets ------------------------------------------------

    def with_relation(self, x: int, y: int) -> Poset:
        """Return the poset generated by this one plus ``x < y``."""
        if x == y or self.less(y, x):
            raise CycleError(
                f"adding {self.labels[x]} < {self.labels[y]} would create a cycle"
            )
        if self.less(x, y):
            return self
        # every u <= x falls below every v >= y
        lower = self.below[x] | 1 << x
        upper = self.above[y] | 1 << y
        rows = list(self.below)
        for v in iter_bits(upper):
            rows[v] |= lower
        return Poset(self.labels, tuple(rows))

    def dual(self) -> Poset:
        return Poset(self.labels, self.above)

    def restrict(self, indices: Sequence[int]) -> Poset:
        """Induced sub-poset on ``indices``, reindexed in the given order."""
        pos = {old: new for new, old in enumerate(indices)}
        rows = []
        for old in indices:
            row = 0
            for x in iter_bits(self.below[old]):
                if x in pos:
                    row |= 1 << pos[x]
            rows.append(row)
        return Poset(tuple(self.labels[i] for i in indices), tuple(rows))

    def permuted(self, order: Sequence[int]) -> Poset:
        return self.restrict(order)

    def relabel(self, labels: Sequence[str]) -> Poset:
        labels = tuple(labels)
        if len(labels) != self.size:
            raise ValueError("wrong number of labels")
        if len(set(labels)) != len(labels):
            raise DuplicateLabelError("labels must be distinct")
        return Poset(labels, self.below)


def build_poset(labels: Iterable[str], covers: Iterable[tuple[str, str]]) -> Poset:
    """Build a poset from labels and generating relations ``(x, y)`` meaning x < y.

    The relations need not be a cover relation; the closure is computed and
    :attr:`Poset.covers` reports its transitive reduction.
    """
    labels = tuple(labels)
    index: dict[str, int] = {}
    for i, label in enumerate(labels):
        if label in index:
            raise DuplicateLabelError(f"duplicate element {label!r}")
        index[label] = i
    n = len(labels)
    succ: list[set[int]] = [set() for _ in range(n)]
    for x, y in covers:
        for z in (x, y):
            if z not in index:
                raise UnknownLabelError(f"unknown element {z!r}")
        if x == y:
            raise CycleError(f"reflexive relation on {x!r}")
        succ[index[x]].add(index[y])
    return _from_edges(labels, succ)


def _from_edges(labels: tuple[str, ...], succ: list[set[int]]) -> Poset:
    n = len(labels)
    indeg = [0] * n
    for out in succ:
        for y in out:
            indeg[y] += 1
    ready = [x for x in range(n) if indeg[x] == 0]
    order = []
    while ready:
        x = ready.pop()
        order.append(x)
        for y in succ[x]:
            indeg[y] -= 1
            if indeg[y] == 0:
                ready.append(y)
    if len(order) != n:
        stuck = sorted(labels[x] for x in range(n) if indeg[x] > 0)
        raise CycleError(f"relations contain a directed cycle through {stuck}")
    below = [0] * n
    for x in order:
        down = below[x] | 1 << x
        for y in succ[x]:
            below[y] |= down
    return Poset(labels, tuple(below))


def is_less(p: Poset, x: str, y: str) -> bool:
    return p.is_less(x, y)


def chain(n: int, prefix: str = "c") -> Poset:
    labels = [f"{prefix}{i}" for i in range(1, n + 1)]
    return build_poset(labels, list(zip(labels, labels[1:])))


def antichain(n: int, prefix: str = "x") -> Poset:
    return build_poset([f"{prefix}{i}" for i in range(1, n + 1)], [])


def linear_sum(lower: Poset, upper: Poset) -> Poset:
    """Stack ``upper`` entirely above ``lower``."""
    shift = lower.size
    rows = list(lower.below)
    for down in upper.below:
        rows.append(lower.full_mask | down << shift)
    return Poset(lower.labels + upper.labels, tuple(rows))


def ideal_layers(p: Poset, cap: int | None = None) -> Iterator[list[int]]:
    """Yield the ideal lattice level by level (by ideal size) as bitmasks.

    Raises :class:`IdealBudgetExceeded` once more than ``cap`` ideals exist.
    """
    if cap is None:
        cap = default_budget()
    if cap < 1:
        raise ValueError("cap must be at least 1")
    below = p.below
    full = p.full_mask
    layer = [0]
    seen = 1
    yield layer
    for _ in range(p.size):
        nxt: dict[int, None] = {}
        for mask in layer:
            for x in iter_bits(full & ~mask):
                if below[x] & ~mask == 0:
                    nxt[mask | 1 << x] = None
        seen += len(nxt)
        if seen > cap:
            raise IdealBudgetExceeded(cap)
        layer = list(nxt)
        yield layer


def enumerate_ideals(p: Poset, cap: int | None = None) -> Iterator[OrderIdeal]:
    for layer in ideal_layers(p, cap):
        for mask in layer:
            yield OrderIdeal(mask)


def is_ideal(p: Poset, mask: int) -> bool:
    return all(p.below[y] & ~mask == 0 for y in iter_bits(mask))


# -- text and JSON formats ---------------------------------------------


def parse_poset_text(text: str) -> Poset:
    """Parse the line format: ``e <name>`` declares, ``r <x> <y>`` relates."""
    labels: list[str] = []
    relations: list[tuple[str, str]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "e" and len(parts) == 2:
            labels.append(parts[1])
        elif parts[0] == "r" and len(parts) == 3:
            relations.append((parts[1], parts[2]))
        else:
            raise PosetFormatError(f"line {lineno}: cannot parse {raw!r}")
    return build_poset(labels, relations)


def format_poset_text(p: Poset) -> str:
    lines = [f"e {label}" for label in p.labels]
    lines += [f"r {x} {y}" for x, y in p.covers]
    return "\n".join(lines) + "\n"


def poset_to_json(p: Poset) -> dict:
    return {"elements": list(p.labels), "relations": [list(c) for c in p.covers]}


def poset_from_json(data: dict | str) -> Poset:
    if isinstance(data, str):
        data = json.loads(data)
    try:
        elements = [str(e) for e in data["elements"]]
        relations = [(str(x), str(y)) for x, y in data.get("relations", [])]
    except (KeyError, TypeError, ValueError) as exc:
        raise PosetFormatError(f"bad poset JSON: {exc}") from None
    return build_poset(elements, relations)


def load_poset(path: str) -> Poset:
    with open(path, encoding="utf-8") as fh:
        text = fh.read()
    if text.lstrip().startswith("{"):
        try:
            return poset_from_json(json.loads(text))
        except json.JSONDecodeError as exc:
            raise PosetFormatError(f"{path}: invalid JSON: {exc}") from None
    return parse_poset_text(text)
