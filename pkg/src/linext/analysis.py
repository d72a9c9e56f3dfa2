"""Case decomposition of P(5k, 5k) and convergence of its balance constant."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .engine import balance_constant, count_extensions
from .errors import IdentityFailure, OutOfRange
from .family import a, b, build_family, grid_count
from .poset import Poset, linear_sum
from .quad import FORMS_BY_EQUATION, THETA, QuadNum, kappa, one_minus_kappa, render_decimal

# where a_{5t+1} sits in the b-chain: strictly between b_lo and b_hi
CASE_WINDOWS = ((-1, 0), (0, 1), (1, 2))


@dataclass(frozen=True)
class CaseDecomposition:
    k: int
    t: int
    counts: tuple[int, int, int]
    total: int

    @property
    def s(self) -> int:
        return self.k - self.t

    @property
    def probabilities(self) -> tuple[Fraction, Fraction, Fraction]:
        return tuple(Fraction(c, self.total) for c in self.counts)


def _check_range(k: int, t: int) -> None:
    if not 1 <= t <= k - 1:
        raise OutOfRange(f"need 1 <= t <= k - 1, got k={k}, t={t}")


def case_decomposition(k: int, t: int) -> CaseDecomposition:
    """Counts for the three positions of a_{5t+1}, from products of grid values."""
    _check_range(k, t)
    s = k - t
    if grid_count(5 * s + 1, 5 * s - 1) != grid_count(5 * s, 5 * s - 1):
        raise IdentityFailure(f"E(5s+1, 5s-1) != E(5s, 5s-1) at s={s}")
    counts = (
        grid_count(5 * t, 5 * t - 1) * grid_count(5 * s + 1, 5 * s - 1),
        grid_count(5 * t, 5 * t) * grid_count(5 * s, 5 * s - 1),
        grid_count(5 * t, 5 * t + 1) * grid_count(5 * s - 1, 5 * s - 1),
    )
    return CaseDecomposition(k, t, counts, grid_count(5 * k, 5 * k))


def case_poset(k: int, t: int, case: int) -> Poset:
    """P(5k, 5k) with a_{5t+1} pinned between two consecutive b's (case 0, 1 or 2)."""
    _check_range(k, t)
    lo, hi = CASE_WINDOWS[case]
    p = build_family(5 * k, 5 * k)
    mid = p.index(a(5 * t + 1))
    p = p.with_relation(p.index(b(5 * t + lo)), mid)
    return p.with_relation(mid, p.index(b(5 * t + hi)))


def case_counts_direct(k: int, t: int) -> tuple[int, int, int]:
    """Same three counts, by counting extensions of the augmented posets."""
    return tuple(count_extensions(case_poset(k, t, c)) for c in range(3))


def case_linear_sums(k: int, t: int) -> tuple[Poset, Poset, Poset]:
    """The linear sums each augmented poset is claimed to be isomorphic to."""
    _check_range(k, t)
    s = k - t
    shapes = (
        ((5 * t, 5 * t - 1), (5 * s + 1, 5 * s - 1)),
        ((5 * t, 5 * t), (5 * s, 5 * s - 1)),
        ((5 * t, 5 * t + 1), (5 * s - 1, 5 * s - 1)),
    )
    return tuple(
        linear_sum(build_family(*low), build_family(*high).dual()) for low, high in shapes
    )


def asymptotic_case_probabilities() -> tuple[QuadNum, QuadNum, QuadNum]:
    """Limits of the three case probabilities as t and k - t grow.

    Each E along a closed form grows like ``lead * theta^k``; the third case
    pairs E(5t, 5t+1) with E(5(s-1)+4, 5(s-1)+4), one power of theta short.
    """
    lead = {eq: FORMS_BY_EQUATION[eq].leading() for eq in (1, 10, 11, 12)}
    whole = lead[11]
    return (
        lead[12] * lead[12] / whole,
        lead[11] * lead[12] / whole,
        lead[10] * lead[1] / (THETA * whole),
    )


def tail_probability_limit_check(k: int) -> tuple[Fraction, QuadNum]:
    """pr(a_{5k} before b_{5k}) in P(5k, 5k) and its signed gap to 1 - kappa."""
    if k < 1:
        raise OutOfRange("k must be at least 1")
    ratio = Fraction(grid_count(5 * k, 5 * k - 1), grid_count(5 * k, 5 * k))
    return ratio, QuadNum(ratio) - one_minus_kappa()


@dataclass(frozen=True)
class ConvergenceRow:
    k: int
    delta_exact: Fraction
    gap: QuadNum
    witness: tuple[str, str] | None
    digits: int = 12

    @property
    def delta_decimal(self) -> str:
        return render_decimal(self.delta_exact, self.digits)

    @property
    def gap_decimal(self) -> str:
        return render_decimal(self.gap, self.digits + 6)


def delta_sequence(k_max: int, *, digits: int = 12, reverse: bool = False,
                   cap: int | None = None) -> list[ConvergenceRow]:
    if k_max < 1:
        raise OutOfRange("k_max must be at least 1")
    rows = []
    for k in range(1, k_max + 1):
        p = build_family(5 * k, 5 * k)
        report = balance_constant(p, cap=cap, reverse=reverse)
        gap = abs(QuadNum(report.delta) - kappa())
        rows.append(ConvergenceRow(k, report.delta, gap, report.witness_labels(p), digits))
    return rows
