"""Exact arithmetic in Q(sqrt(d)), specialised to d = 6697.

The characteristic roots ``theta = 82 + sqrt(6697)`` and its conjugate
satisfy ``t^2 - 164 t + 27 = 0``; powers are tracked through the integer
sequences ``L_k = theta^k + conj^k`` and ``M_k = (theta^k - conj^k)/sqrt(d)``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import NonIntegerResult, OutOfRange

D = 6697


def _sign(x: int | Fraction) -> int:
    return (x > 0) - (x < 0)


@dataclass(frozen=True)
class QuadNum:
    """The number ``a + b*sqrt(d)`` with rational ``a`` and ``b``."""

    a: Fraction
    b: Fraction = Fraction(0)
    d: int = D

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))

    @classmethod
    def sqrt_d(cls, d: int = D) -> QuadNum:
        return cls(Fraction(0), Fraction(1), d)

    def _coerce(self, other: object) -> QuadNum:
        if isinstance(other, QuadNum):
            if other.d != self.d:
                raise ValueError(f"mixed fields Q(sqrt({self.d})) and Q(sqrt({other.d}))")
            return other
        if isinstance(other, (int, Fraction)):
            return QuadNum(Fraction(other), Fraction(0), self.d)
        return NotImplemented

    def __add__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum(self.a + o.a, self.b + o.b, self.d)

    __radd__ = __add__

    def __neg__(self):
        return QuadNum(-self.a, -self.b, self.d)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum(self.a - o.a, self.b - o.b, self.d)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o - self

    def __mul__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return QuadNum(
            self.a * o.a + self.d * self.b * o.b,
            self.a * o.b + o.a * self.b,
            self.d,
        )

    __rmul__ = __mul__

    def conjugate(self) -> QuadNum:
        return QuadNum(self.a, -self.b, self.d)

    def norm(self) -> Fraction:
        return self.a * self.a - self.d * self.b * self.b

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        if not o:
            raise ZeroDivisionError("division by zero in Q(sqrt(d))")
        num = self * o.conjugate()
        nrm = o.norm()
        return QuadNum(num.a / nrm, num.b / nrm, self.d)

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is NotImplemented:
            return o
        return o / self

    def __pow__(self, k: int) -> QuadNum:
        if k < 0:
            return QuadNum(Fraction(1), Fraction(0), self.d) / self ** (-k)
        result = QuadNum(Fraction(1), Fraction(0), self.d)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __bool__(self) -> bool:
        return bool(self.a) or bool(self.b)

    def __eq__(self, other: object) -> bool:
        o = self._coerce(other)
        if o is NotImplemented:
            return NotImplemented
        return self.a == o.a and self.b == o.b

    def __hash__(self) -> int:
        return hash((self.a, self.b, self.d)) if self.b else hash(self.a)

    def sign(self) -> int:
        return quad_sign(self)

    def __lt__(self, other) -> bool:
        return quad_sign(self - other) < 0

    def __le__(self, other) -> bool:
        return quad_sign(self - other) <= 0

    def __gt__(self, other) -> bool:
        return quad_sign(self - other) > 0

    def __ge__(self, other) -> bool:
        return quad_sign(self - other) >= 0

    def __abs__(self) -> QuadNum:
        return -self if quad_sign(self) < 0 else self

    def floor(self) -> int:
        # b*sqrt(d) = sign(p) * sqrt(p^2 d) / q with p/q = b, q > 0
        p, q = self.b.numerator, self.b.denominator
        root = isqrt(p * p * self.d)
        guess = Fraction(_sign(p) * root, q) + self.a
        c = guess.numerator // guess.denominator
        while quad_sign(self - c) < 0:
            c -= 1
        while quad_sign(self - (c + 1)) >= 0:
            c += 1
        return c

    def __float__(self) -> float:
        return float(self.a) + float(self.b) * self.d ** 0.5

    def to_decimal(self, digits: int) -> str:
        return render_decimal(self, digits)

    def exact(self) -> str:
        return render_exact(self)

    def __str__(self) -> str:
        return render_exact(self)


def quad_sign(x: QuadNum) -> int:
    """Sign of ``a + b*sqrt(d)`` decided without floating point."""
    sa, sb = _sign(x.a), _sign(x.b)
    if sb == 0:
        return sa
    if sa == 0 or sa == sb:
        return sb
    # opposite signs: whichever magnitude is larger wins
    lhs, rhs = x.a * x.a, x.d * x.b * x.b
    if lhs > rhs:
        return sa
    if lhs < rhs:
        return sb
    return 0  # unreachable for non-square d


def quad_arith(x: QuadNum, y: QuadNum, op: str) -> QuadNum:
    ops = {
        "add": lambda: x + y,
        "sub": lambda: x - y,
        "mul": lambda: x * y,
        "div": lambda: x / y,
    }
    try:
        return ops[op]()
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None


def render_decimal(x: QuadNum | Fraction | int, digits: int) -> str:
    """Round half to even at ``digits`` places after the point, exactly."""
    if digits < 0:
        raise ValueError("digits must be nonnegative")
    if not isinstance(x, QuadNum):
        x = QuadNum(Fraction(x))
    scaled = x * 10**digits
    lo = scaled.floor()
    frac = scaled - lo
    half = quad_sign(frac - Fraction(1, 2))
    n = lo + 1 if half > 0 or (half == 0 and lo % 2) else lo
    sign = "-" if n < 0 else ""
    n = abs(n)
    if digits == 0:
        return f"{sign}{n}"
    whole, part = divmod(n, 10**digits)
    return f"{sign}{whole}.{part:0{digits}d}"


def render_exact(x: QuadNum) -> str:
    """Render as ``(p + q*sqrt(d))/r``, or ``(p - q*sqrt(d))/r`` when q < 0."""
    r = x.a.denominator * x.b.denominator // gcd(x.a.denominator, x.b.denominator)
    p = x.a.numerator * (r // x.a.denominator)
    q = x.b.numerator * (r // x.b.denominator)
    op = "-" if q < 0 else "+"
    return f"({p} {op} {abs(q)}*sqrt({x.d}))/{r}"


_EXACT_RE = re.compile(
    r"^\(\s*(-?\d+)\s*([+-])\s*(-?\d+)\s*\*\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*/\s*(\d+)$"
)


def parse_exact(text: str) -> QuadNum:
    m = _EXACT_RE.match(text.strip())
    if not m:
        raise ValueError(f"not an exact quadratic form: {text!r}")
    p, op, q, d, r = m.groups()
    qv = int(q) if op == "+" else -int(q)
    return QuadNum(Fraction(int(p), int(r)), Fraction(qv, int(r)), int(d))


THETA = QuadNum(Fraction(82), Fraction(1))
THETA_BAR = QuadNum(Fraction(82), Fraction(-1))
SQRT_D = QuadNum.sqrt_d()


def kappa() -> QuadNum:
    """(93 - sqrt(6697)) / 32."""
    return QuadNum(Fraction(93, 32), Fraction(-1, 32))


def one_minus_kappa() -> QuadNum:
    """(sqrt(6697) - 61) / 32."""
    return QuadNum(Fraction(-61, 32), Fraction(1, 32))


@dataclass(frozen=True)
class LucasPair:
    k: int
    L: int
    M: int

    def two_theta_power(self) -> QuadNum:
        """``L + M*sqrt(d)``, which equals ``2*theta^k``."""
        return QuadNum(Fraction(self.L), Fraction(self.M))


def lucas_pair(k: int) -> LucasPair:
    if k < 0:
        raise ValueError("k must be nonnegative")
    L0, L1 = 2, 164
    M0, M1 = 0, 2
    for _ in range(k):
        L0, L1 = L1, 164 * L1 - 27 * L0
        M0, M1 = M1, 164 * M1 - 27 * M0
    return LucasPair(k, L0, M0)


@dataclass(frozen=True)
class ClosedForm:
    """``E(5k + m_off, 5k + n_off) = c_diff*M_k + c_sum*L_k``."""

    equation: int
    m_off: int
    n_off: int
    c_diff: Fraction
    c_sum: Fraction

    def shape(self, k: int) -> tuple[int, int]:
        return 5 * k + self.m_off, 5 * k + self.n_off

    def min_k(self) -> int:
        k = 0
        while True:
            m, n = self.shape(k)
            if m >= 0 and n >= 0 and (m, n) != (0, 0):
                return k
            k += 1

    def name(self) -> str:
        def part(off: int) -> str:
            return "5k" if off == 0 else f"5k{off:+d}"

        return f"E({part(self.m_off)}, {part(self.n_off)})"

    def leading(self) -> QuadNum:
        """Coefficient of theta^k: ``c_diff/sqrt(d) + c_sum``."""
        return QuadNum(self.c_sum, self.c_diff / D)


_F = Fraction
CLOSED_FORMS: tuple[ClosedForm, ...] = (
    ClosedForm(1, 4, 4, _F(3025, 2), _F(37, 2)),
    ClosedForm(2, 4, 3, _F(1883, 2), _F(23, 2)),
    ClosedForm(3, 3, 3, _F(571), _F(7)),
    ClosedForm(4, 3, 2, _F(741, 2), _F(9, 2)),
    ClosedForm(5, 3, 1, _F(170), _F(2)),
    ClosedForm(6, 2, 2, _F(401, 2), _F(5, 2)),
    ClosedForm(7, 2, 1, _F(247, 2), _F(3, 2)),
    ClosedForm(8, 1, 1, _F(77), _F(1)),
    ClosedForm(9, 1, 0, _F(93, 2), _F(1, 2)),
    ClosedForm(10, 0, 1, _F(61, 2), _F(1, 2)),
    ClosedForm(11, 0, 0, _F(77, 3), _F(1, 3)),
    ClosedForm(12, 0, -1, _F(125, 6), _F(1, 6)),
    ClosedForm(13, 0, -2, _F(16), _F(0)),
)

FORMS_BY_OFFSET = {(f.m_off, f.n_off): f for f in CLOSED_FORMS}
FORMS_BY_EQUATION = {f.equation: f for f in CLOSED_FORMS}


def closed_form(shape: int | tuple[int, int] | ClosedForm, k: int) -> int:
    """Evaluate a closed form for E at ``k``; ``shape`` is an equation number or offsets."""
    if isinstance(shape, ClosedForm):
        form = shape
    elif isinstance(shape, tuple):
        form = FORMS_BY_OFFSET[shape]
    else:
        form = FORMS_BY_EQUATION[shape]
    if k < form.min_k():
        raise OutOfRange(f"{form.name()} needs k >= {form.min_k()}, got {k}")
    lp = lucas_pair(k)
    value = form.c_diff * lp.M + form.c_sum * lp.L
    if value.denominator != 1:
        raise NonIntegerResult(f"{form.name()} at k={k} gave {value}")
    return value.numerator
