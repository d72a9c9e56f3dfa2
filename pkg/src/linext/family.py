"""The two-chain family P(m, n) and its extension-count grid E(m, n).

P(m, n) is the sub-poset of the infinite two-chain poset induced on
``a_1..a_m, b_1..b_n``.  The infinite poset has chain covers on each side
plus the cross covers ``a_i < b_{i+1}`` (i mod 5 in 1..4) and
``b_j < a_{j+2}`` (j mod 5 in {0, 2, 4}).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .errors import EmptyFamilyError, NotAdmissibleError, UndefinedAtOrigin
from .poset import Poset, build_poset


def a(i: int) -> str:
    return f"a{i}"


def b(j: int) -> str:
    return f"b{j}"


def _truncated_covers(m: int, n: int) -> list[tuple[str, str]]:
    rel = [(a(i), a(i + 1)) for i in range(1, m)]
    rel += [(b(j), b(j + 1)) for j in range(1, n)]
    rel += [(a(i), b(i + 1)) for i in range(1, m + 1) if i % 5 != 0 and i + 1 <= n]
    rel += [(b(j), a(j + 2)) for j in range(1, n + 1) if j % 5 in (0, 2, 4) and j + 2 <= m]
    return rel


def build_family(m: int, n: int) -> Poset:
    """Return P(m, n) with elements ordered a_1..a_m, b_1..b_n.

    Anything below b_n has index at most n, and anything below a_m has
    index at most m, so every chain between two elements of P(m, n) stays
    inside the square truncation of side max(m, n).  The induced order is
    read off that square.
    """
    if m < 0 or n < 0:
        raise ValueError("chain lengths must be nonnegative")
    if m == 0 and n == 0:
        raise EmptyFamilyError("P(0, 0) has no elements")
    side = max(m, n)
    square = build_poset(
        [a(i) for i in range(1, side + 1)] + [b(j) for j in range(1, side + 1)],
        _truncated_covers(side, side),
    )
    keep = list(range(m)) + [side + j for j in range(n)]
    return square.restrict(keep)


# offsets n - 5k allowed for each residue m = 5k + r
_ADMISSIBLE_OFFSETS = {
    4: (3, 4),
    3: (1, 2, 3),
    2: (1, 2),
    1: (0, 1),
    0: (-2, -1, 0, 1),
}


def is_admissible(m: int, n: int) -> bool:
    """Residue characterization of the pairs whose tops a_m, b_n are incomparable.

    Applies the five residue forms verbatim; at the boundary this marks
    exactly (1, 0) and (0, 1), matching the bold cells of the published table.
    """
    if m < 0 or n < 0 or (m == 0 and n == 0):
        return False
    k, r = divmod(m, 5)
    return n - 5 * k in _ADMISSIBLE_OFFSETS[r]


def tops_incomparable(m: int, n: int) -> bool:
    """The defining test: P(m, n) has no greatest element."""
    if m < 1 or n < 1:
        return False
    p = build_family(m, n)
    return not p.is_less(a(m), b(n)) and not p.is_less(b(n), a(m))


@dataclass
class GridTable:
    """E(m, n) for 0 <= m <= max_m, 0 <= n <= max_n, excluding (0, 0)."""

    max_m: int
    max_n: int
    values: dict[tuple[int, int], int] = field(default_factory=dict)
    admissible_flags: dict[tuple[int, int], bool] = field(default_factory=dict)
    # which branch of the recursion each interior cell took: "a", "b" or "both"
    branch: dict[tuple[int, int], str] = field(default_factory=dict)

    @classmethod
    def build(cls, max_m: int, max_n: int | None = None) -> GridTable:
        if max_n is None:
            max_n = max_m
        if max_m < 0 or max_n < 0:
            raise ValueError("grid bounds must be nonnegative")
        table = cls(max_m, max_n)
        # every P(m, n) is an induced sub-poset of P(max_m, max_n)
        big = build_family(max(max_m, 1), max(max_n, 1))
        for m in range(max_m + 1):
            for n in range(max_n + 1):
                if m == 0 and n == 0:
                    continue
                table.admissible_flags[m, n] = is_admissible(m, n)
                if m == 0 or n == 0:
                    table.values[m, n] = 1
                    continue
                top_a, top_b = a(m), b(n)
                if big.is_less(top_b, top_a):
                    # a_m is the greatest element
                    table.values[m, n] = table.values[m - 1, n]
                    table.branch[m, n] = "a"
                elif big.is_less(top_a, top_b):
                    table.values[m, n] = table.values[m, n - 1]
                    table.branch[m, n] = "b"
                else:
                    table.values[m, n] = table.values[m - 1, n] + table.values[m, n - 1]
                    table.branch[m, n] = "both"
        return table

    def __getitem__(self, key: tuple[int, int]) -> int:
        m, n = key
        if m == 0 and n == 0:
            raise UndefinedAtOrigin("E(0, 0) is undefined")
        return self.values[key]


_grid_cache: GridTable | None = None


def grid(max_m: int, max_n: int | None = None) -> GridTable:
    """Shared grid covering at least the requested rectangle."""
    global _grid_cache
    if max_n is None:
        max_n = max_m
    cached = _grid_cache
    if cached is None or cached.max_m < max_m or cached.max_n < max_n:
        side = max(max_m, max_n, cached.max_m if cached else 0, 25)
        cached = GridTable.build(side, side)
        _grid_cache = cached
    return cached


def grid_count(m: int, n: int) -> int:
    """E(m, n) by the top-element recursion, E(m, 0) = E(0, n) = 1."""
    if m < 0 or n < 0:
        raise ValueError("chain lengths must be nonnegative")
    if m == 0 and n == 0:
        raise UndefinedAtOrigin("E(0, 0) is undefined")
    return grid(m, n)[m, n]


def check_recurrence(m: int, n: int) -> bool:
    """Whether E(m+10, n+10) = 164 E(m+5, n+5) - 27 E(m, n)."""
    if not is_admissible(m, n):
        raise NotAdmissibleError(f"({m}, {n}) is not admissible")
    g = grid(m + 10, n + 10)
    return g[m + 10, n + 10] == 164 * g[m + 5, n + 5] - 27 * g[m, n]
