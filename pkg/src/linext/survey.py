"""Exhaustive balance-constant survey of all small posets up to isomorphism."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import permutations, product

from .engine import balance_constant
from .errors import TooLargeToSurvey
from .poset import Poset, ideal_layers, iter_bits
from .quad import QuadNum

SURVEY_LIMIT = 7
THIRD = Fraction(1, 3)
# (5 - sqrt 5)/10, the best bound known for every non-chain
BFT_BOUND = QuadNum(Fraction(1, 2), Fraction(-1, 10), 5)


def _labels(n: int) -> tuple[str, ...]:
    return tuple(f"p{i}" for i in range(n))


def _classes(p: Poset) -> list[list[int]]:
    """Elements grouped by an isomorphism-invariant colour, colours sorted."""
    colour = [(p.below[x].bit_count(), p.above[x].bit_count()) for x in range(p.size)]
    for _ in range(2):
        colour = [
            (
                colour[x],
                tuple(sorted(colour[y] for y in iter_bits(p.below[x]))),
                tuple(sorted(colour[y] for y in iter_bits(p.above[x]))),
            )
            for x in range(p.size)
        ]
    groups: dict = {}
    for x in range(p.size):
        groups.setdefault(colour[x], []).append(x)
    return [groups[c] for c in sorted(groups)]


def canonical_code(p: Poset) -> tuple[int, ...]:
    """Smallest relabelled closure among orderings that respect the colour classes."""
    classes = _classes(p)
    best = None
    for choice in product(*(permutations(c) for c in classes)):
        order = [x for group in choice for x in group]
        pos = {old: new for new, old in enumerate(order)}
        code = []
        for old in order:
            row = 0
            for x in iter_bits(p.below[old]):
                row |= 1 << pos[x]
            code.append(row)
        code = tuple(code)
        if best is None or code < best:
            best = code
    return best


def from_code(code: tuple[int, ...]) -> Poset:
    return Poset(_labels(len(code)), code)


def posets_up_to_iso(n: int) -> list[Poset]:
    """All posets on ``n`` elements, one per isomorphism class, in canonical form.

    Each poset on n elements arises from one on n - 1 by adding a maximal
    element whose down-set is an order ideal.
    """
    if n < 1:
        raise ValueError("n must be positive")
    if n > SURVEY_LIMIT:
        raise TooLargeToSurvey(f"n={n} exceeds survey limit {SURVEY_LIMIT}")
    level = {(0,)}
    for size in range(2, n + 1):
        grown = set()
        for code in level:
            base = from_code(code)
            for layer in ideal_layers(base):
                for ideal in layer:
                    child = Poset(_labels(size), code + (ideal,))
                    grown.add(canonical_code(child))
        level = grown
    return [from_code(c) for c in sorted(level)]


def ordinal_summands(p: Poset) -> list[Poset]:
    """Split ``p`` into its irreducible linear-sum components, bottom first."""
    order = sorted(range(p.size), key=lambda x: (p.below[x].bit_count(), x))
    parts, start = [], 0
    for cut in range(1, p.size + 1):
        lower = order[:cut]
        upper = order[cut:]
        mask = sum(1 << x for x in lower)
        if all(p.below[y] & mask == mask for y in upper):
            parts.append(p.restrict(order[start:cut]))
            start = cut
    return parts


def _is_T(p: Poset) -> bool:
    return p.size == 3 and len(p.cover_indices) == 1


def is_T_linear_sum(p: Poset) -> bool:
    """Linear sum of copies of T and singletons, with at least one T."""
    parts = ordinal_summands(p)
    return any(_is_T(q) for q in parts) and all(q.size == 1 or _is_T(q) for q in parts)


@dataclass
class SizeSummary:
    n: int
    posets: int
    non_chains: int
    min_delta: Fraction | None
    achievers: list[Poset] = field(default_factory=list)


@dataclass
class SurveyReport:
    n_max: int
    sizes: list[SizeSummary]
    min_delta: Fraction | None
    achievers: list[Poset]
    below_third: list[Poset]
    below_bft: list[Poset]
    achievers_all_T_sums: bool

    @property
    def conjecture_holds(self) -> bool:
        return not self.below_third

    @property
    def bound_holds(self) -> bool:
        return not self.below_bft

    def to_json(self) -> dict:
        def frac(x: Fraction | None) -> str | None:
            return None if x is None else f"{x.numerator}/{x.denominator}"

        def relations(p: Poset) -> list[list[str]]:
            return [list(c) for c in p.covers]

        return {
            "n_max": self.n_max,
            "min_delta": frac(self.min_delta),
            "conjecture_holds": self.conjecture_holds,
            "bft_bound_holds": self.bound_holds,
            "achievers_all_T_linear_sums": self.achievers_all_T_sums,
            "achievers": [
                {"elements": list(p.labels), "relations": relations(p)} for p in self.achievers
            ],
            "sizes": [
                {
                    "n": s.n,
                    "posets": s.posets,
                    "non_chains": s.non_chains,
                    "min_delta": frac(s.min_delta),
                    "achievers": len(s.achievers),
                }
                for s in self.sizes
            ],
        }


def survey_small_posets(n_max: int) -> SurveyReport:
    if n_max > SURVEY_LIMIT:
        raise TooLargeToSurvey(f"n_max={n_max} exceeds survey limit {SURVEY_LIMIT}")
    if n_max < 1:
        raise ValueError("n_max must be positive")
    sizes = []
    overall: Fraction | None = None
    below_third, below_bft = [], []
    everything: list[tuple[Fraction, Poset]] = []
    for n in range(1, n_max + 1):
        min_n: Fraction | None = None
        achievers: list[Poset] = []
        non_chains = 0
        classes = posets_up_to_iso(n)
        for p in classes:
            if p.is_chain():
                continue
            non_chains += 1
            delta = balance_constant(p).delta
            everything.append((delta, p))
            if delta < THIRD:
                below_third.append(p)
            if QuadNum(delta, 0, 5) < BFT_BOUND:
                below_bft.append(p)
            if min_n is None or delta < min_n:
                min_n, achievers = delta, [p]
            elif delta == min_n:
                achievers.append(p)
        sizes.append(SizeSummary(n, len(classes), non_chains, min_n, achievers))
        if min_n is not None and (overall is None or min_n < overall):
            overall = min_n
    achievers = [p for delta, p in everything if delta == overall]
    return SurveyReport(
        n_max=n_max,
        sizes=sizes,
        min_delta=overall,
        achievers=achievers,
        below_third=below_third,
        below_bft=below_bft,
        achievers_all_T_sums=all(is_T_linear_sum(p) for p in achievers),
    )
