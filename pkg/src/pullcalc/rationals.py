"""Exact fractions extended with a single point at infinity.

The turn rules walk through 1/0 (a vertical stack of layers has no
left-hand layer at all), so the standard library Fraction is out: it
refuses a zero denominator.  ExtRational keeps the usual lowest-terms
normal form and folds both signed infinities into 1/0.
"""

from __future__ import annotations

import math
import re
from typing import Iterable, Sequence

ContinuedFraction = tuple  # tuple[int, ...]

_FRACTION_RE = re.compile(r"\s*(-?\d+)(?:/(\d+))?\s*\Z")


class ExtRational:
    """An immutable fraction num/den in lowest terms, den >= 0.

    den == 0 encodes the point at infinity, always stored as 1/0.
    0/0 has no home here and is rejected outright.
    """

    __slots__ = ("num", "den")

    def __init__(self, num: int, den: int = 1):
        if den == 0:
            if num == 0:
                raise ValueError("0/0 has no normal form")
            num, den = 1, 0
        else:
            if den < 0:
                num, den = -num, -den
            g = math.gcd(num, den)
            if g > 1:
                num //= g
                den //= g
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("ExtRational is immutable")

    @property
    def is_infinite(self) -> bool:
        return self.den == 0

    def __eq__(self, other) -> bool:
        if not isinstance(other, ExtRational):
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __str__(self) -> str:
        return "%d/%d" % (self.num, self.den)

    def __repr__(self) -> str:
        return "ExtRational(%d, %d)" % (self.num, self.den)


def make(num: int, den: int = 1) -> ExtRational:
    """Normalize num/den into an ExtRational."""
    return ExtRational(num, den)


def parse_fraction(text: str) -> ExtRational:
    """Parse "a/b", "-a/b" or a bare integer; "1/0" is accepted."""
    match = _FRACTION_RE.match(text)
    if not match:
        raise ValueError("not a fraction: %r" % text)
    num = int(match.group(1))
    den = 1 if match.group(2) is None else int(match.group(2))
    if num == 0 and den == 0:
        raise ValueError("not a fraction: 0/0")
    return ExtRational(num, den)


def apply_turn_rule(q: ExtRational, turn: int) -> ExtRational:
    """One step of the four-way walk from q.

    R sends a/b to (a+b)/b, L to a/(a+b), and the reverse turns
    subtract instead.  Normalization keeps the result in lowest terms
    with a non-negative denominator; at 1/0 both R rules are fixed
    points and the L rules step to +-1/1.
    """
    a, b = q.num, q.den
    if turn == 0:
        return ExtRational(a + b, b)
    if turn == 1:
        return ExtRational(a, a + b)
    if turn == 2:
        return ExtRational(a - b, b)
    if turn == 3:
        return ExtRational(a, b - a)
    raise ValueError("bad turn code %r" % (turn,))


def neg_recip(q: ExtRational) -> ExtRational:
    """-1/q, exchanging 0/1 and 1/0."""
    return ExtRational(-q.den, q.num)


def recip(q: ExtRational) -> ExtRational:
    """1/q, exchanging 0/1 and 1/0."""
    return ExtRational(q.den, q.num)


def cf_eval(coeffs: Sequence[int]) -> ExtRational:
    """Value of the continued fraction [c0; c1, ..., ck].

    Total over all integer coefficients: a zero along the way just
    passes through 1/0 and comes back, so expressions like [2, 0, 2]
    still land on an exact answer.
    """
    coeffs = list(coeffs)
    if not coeffs:
        raise ValueError("a continued fraction needs at least one coefficient")
    value = ExtRational(coeffs[-1], 1)
    for c in reversed(coeffs[:-1]):
        # c + 1/value in one normalized step
        value = ExtRational(c * value.num + value.den, value.num)
    return value


def cf_expand(q: ExtRational) -> ContinuedFraction:
    """Canonical expansion of a non-negative finite fraction.

    The classical division loop: the last coefficient is >= 2 unless
    the whole expansion is a single integer, which makes the output
    unique.
    """
    if q.den == 0:
        raise ValueError("1/0 has no expansion")
    if q.num < 0:
        raise ValueError("negative fractions have no canonical expansion here")
    coeffs = []
    a, b = q.num, q.den
    while b:
        quo, rem = divmod(a, b)
        coeffs.append(quo)
        a, b = b, rem
    return tuple(coeffs)


def format_cf(coeffs: Iterable[int]) -> str:
    """Standard bracket notation: [c0; c1, c2, ...]."""
    coeffs = list(coeffs)
    if len(coeffs) == 1:
        return "[%d]" % coeffs[0]
    return "[%d; %s]" % (coeffs[0], ", ".join(str(c) for c in coeffs[1:]))
