"""Exact arithmetic in the ring Z[tau], tau = (1 + sqrt 5) / 2.

Every coordinate and inner product of the 600-cell rays lives in this ring,
so no floating point tolerance is ever needed.
"""

from __future__ import annotations

from dataclasses import dataclass

# Coordinates are tiny; anything beyond this signals a logic error upstream.
LIMIT = 2**31


def _checked(v: int) -> int:
    if not -LIMIT < v < LIMIT:
        raise OverflowError(f"golden-field component {v} out of range")
    return v


@dataclass(frozen=True, order=False, slots=True)
class GoldenNumber:
    """The number ``a + b*tau`` with integer ``a`` and ``b``."""

    a: int = 0
    b: int = 0

    def __post_init__(self) -> None:
        _checked(self.a)
        _checked(self.b)

    @classmethod
    def parse(cls, token: str) -> GoldenNumber:
        """Parse one Table-1 style token: ``0``, ``1``, ``t``, ``k`` with optional ``-``."""
        neg = token.startswith("-")
        body = token[1:] if neg else token
        table = {"0": (0, 0), "1": (1, 0), "2": (2, 0), "t": (0, 1), "k": (-1, 1)}
        if body not in table:
            raise ValueError(f"unknown golden token {token!r}")
        a, b = table[body]
        return cls(-a, -b) if neg else cls(a, b)

    def __add__(self, other: GoldenNumber) -> GoldenNumber:
        return GoldenNumber(_checked(self.a + other.a), _checked(self.b + other.b))

    def __sub__(self, other: GoldenNumber) -> GoldenNumber:
        return GoldenNumber(_checked(self.a - other.a), _checked(self.b - other.b))

    def __neg__(self) -> GoldenNumber:
        return GoldenNumber(-self.a, -self.b)

    def __mul__(self, other: GoldenNumber) -> GoldenNumber:
        return mul(self, other)

    def __bool__(self) -> bool:
        return self.a != 0 or self.b != 0

    def sign(self) -> int:
        return sign(self)

    def __abs__(self) -> GoldenNumber:
        return -self if sign(self) < 0 else self

    def __lt__(self, other: GoldenNumber) -> bool:
        return sign(self - other) < 0

    def __le__(self, other: GoldenNumber) -> bool:
        return sign(self - other) <= 0

    def __gt__(self, other: GoldenNumber) -> bool:
        return sign(self - other) > 0

    def __ge__(self, other: GoldenNumber) -> bool:
        return sign(self - other) >= 0

    def __float__(self) -> float:
        return self.a + self.b * (1 + 5**0.5) / 2

    def __str__(self) -> str:
        return render(self)


ZERO = GoldenNumber(0, 0)
ONE = GoldenNumber(1, 0)
TAU = GoldenNumber(0, 1)
KAPPA = GoldenNumber(-1, 1)


def mul(x: GoldenNumber, y: GoldenNumber) -> GoldenNumber:
    # tau^2 = tau + 1
    a = x.a * y.a + x.b * y.b
    b = x.a * y.b + x.b * y.a + x.b * y.b
    return GoldenNumber(_checked(a), _checked(b))


def sign(x: GoldenNumber) -> int:
    """Exact sign of ``a + b*tau`` using only integer arithmetic.

    ``a + b*tau = ((2a + b) + b*sqrt5) / 2``, so with ``p = 2a + b`` the sign
    follows from the signs of ``p`` and ``b`` and, when they disagree, from
    comparing ``p**2`` with ``5*b**2``.
    """
    a, b = x.a, x.b
    if b == 0:
        return (a > 0) - (a < 0)
    p = 2 * a + b
    if p >= 0 and b > 0:
        return 1
    if p <= 0 and b < 0:
        return -1
    # p and b have opposite signs, and b != 0
    lhs, rhs = p * p, 5 * b * b
    if lhs == rhs:  # impossible for integers unless both zero
        return 0
    dominant = p if lhs > rhs else b
    return 1 if dominant > 0 else -1


def render(x: GoldenNumber) -> str:
    """Text form using the Table-1 symbols where possible."""
    names = {(0, 0): "0", (1, 0): "1", (0, 1): "τ", (-1, 1): "κ"}
    if (x.a, x.b) in names:
        return names[(x.a, x.b)]
    if (-x.a, -x.b) in names:
        return "−" + names[(-x.a, -x.b)]
    if x.b == 0:
        return str(x.a).replace("-", "−")
    for base, sym in (((0, 1), "τ"), ((-1, 1), "κ")):
        # integer multiples of tau or kappa, e.g. 2τ, −2κ
        if base[1] and x.b % base[1] == 0:
            k = x.b // base[1]
            if (base[0] * k, base[1] * k) == (x.a, x.b):
                return f"{k}{sym}".replace("-", "−")
    sb = f"{x.b:+d}".replace("-", "−")
    return f"{x.a}{sb}τ".replace("-", "−")
