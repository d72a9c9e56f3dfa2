"""Exact linear-extension counts, precedence probabilities and balance constants."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .errors import SameElementError, TooLargeForBrute
from .poset import Poset, ideal_layers, iter_bits

BRUTE_LIMIT = 12


def count_extensions(p: Poset, cap: int | None = None) -> int:
    """Count linear extensions as maximal chains of the ideal lattice.

    Walks the lattice level by level, carrying the number of ways to reach
    each ideal from the empty one.
    """
    if p.size == 0:
        raise ValueError("the empty poset has no elements to order")
    below = p.below
    full = p.full_mask
    ways = {0: 1}
    layers = ideal_layers(p, cap)
    next(layers)
    for layer in layers:
        nxt = dict.fromkeys(layer, 0)
        for mask, w in ways.items():
            for x in iter_bits(full & ~mask):
                if below[x] & ~mask == 0:
                    nxt[mask | 1 << x] += w
        ways = nxt
    return ways[full]


def count_extensions_brute(p: Poset) -> int:
    """Count linear extensions by generating permutations position by position.

    A partial permutation is abandoned as soon as its last element has an
    unplaced predecessor, so only order-respecting permutations are completed.
    """
    if p.size > BRUTE_LIMIT:
        raise TooLargeForBrute(f"{p.size} elements exceeds brute-force limit {BRUTE_LIMIT}")
    if p.size == 0:
        raise ValueError("the empty poset has no elements to order")
    n = p.size
    placed = [False] * n
    preds = [list(iter_bits(p.below[y])) for y in range(n)]

    def extend(depth: int) -> int:
        if depth == n:
            return 1
        total = 0
        for y in range(n):
            if placed[y] or not all(placed[x] for x in preds[y]):
                continue
            placed[y] = True
            total += extend(depth + 1)
            placed[y] = False
        return total

    return extend(0)


def _resolve(p: Poset, x: int | str) -> int:
    if isinstance(x, str):
        return p.index(x)
    if not 0 <= x < p.size:
        raise IndexError(f"element index {x} out of range")
    return x


def precedence_probability(
    p: Poset, x: int | str, y: int | str, *, total: int | None = None, cap: int | None = None
) -> Fraction:
    """Fraction of linear extensions of ``p`` in which ``x`` comes before ``y``."""
    i, j = _resolve(p, x), _resolve(p, y)
    if i == j:
        raise SameElementError(f"{p.labels[i]!r} compared with itself")
    if p.less(i, j):
        return Fraction(1)
    if p.less(j, i):
        return Fraction(0)
    if total is None:
        total = count_extensions(p, cap)
    return Fraction(count_extensions(p.with_relation(i, j), cap), total)


@dataclass(frozen=True)
class BalanceReport:
    delta: Fraction
    witness_pair: tuple[int, int] | None
    total: int
    pair_table: dict[tuple[int, int], Fraction] | None = None

    def witness_labels(self, p: Poset) -> tuple[str, str] | None:
        if self.witness_pair is None:
            return None
        x, y = self.witness_pair
        return p.labels[x], p.labels[y]


def balance_constant(
    p: Poset, *, cap: int | None = None, table: bool = False, reverse: bool = False
) -> BalanceReport:
    """Exact balance constant with its witness pair.

    Ties go to the lexicographically smallest index pair.  ``reverse`` only
    changes the sweep order, never the result.
    """
    total = count_extensions(p, cap)
    if p.size == 1:
        return BalanceReport(Fraction(0), None, total, {} if table else None)
    pairs = [(x, y) for x in range(p.size) for y in range(x + 1, p.size)]
    if reverse:
        pairs.reverse()
    probs: dict[tuple[int, int], Fraction] = {}
    for x, y in pairs:
        probs[x, y] = precedence_probability(p, x, y, total=total, cap=cap)
    best: Fraction | None = None
    witness = None
    for pair in sorted(probs):
        pr = probs[pair]
        score = min(pr, 1 - pr)
        if best is None or score > best:
            best, witness = score, pair
    pair_table = None
    if table:
        pair_table = {}
        for (x, y), pr in probs.items():
            pair_table[x, y] = pr
            pair_table[y, x] = 1 - pr
    return BalanceReport(best, witness, total, pair_table)
