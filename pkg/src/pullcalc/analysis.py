"""Layer growth: tree rows, extremal pulls and Fibonacci numbers.

The alternating pull R L R L ... piles up layers as slowly as a
non-cancelling pull possibly can, and that worst case is exactly the
Fibonacci sequence.  The helpers here make the comparison concrete:
whole tree rows, per-fraction children, closed-form and brute-force
maxima, and step-by-step growth reports for a given pull.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, NamedTuple, Optional, Sequence

from pullcalc import kernel, words
from pullcalc.rationals import ExtRational, apply_turn_rule
from pullcalc.treewalk import LayerCounts
from pullcalc.words import TurnWord

DEFAULT_DEPTH_CAP = 25
BRUTE_FORCE_CAP = 16


@dataclass(frozen=True)
class RowListing:
    depth: int
    entries: tuple  # tuple[ExtRational, ...] in left-to-right tree order


class EffectivenessRow(NamedTuple):
    length: int
    total: int
    ratio: Optional[ExtRational]


def fibonacci(n: int) -> int:
    """F_n with F_0 = 0, F_1 = 1."""
    if n < 0:
        raise ValueError("negative Fibonacci index")
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def alternating_word(n: int) -> TurnWord:
    """R L R L ..., n turns long."""
    if n < 0:
        raise ValueError("word length must be non-negative")
    return tuple(k & 1 for k in range(n))


def alternating_layers(n: int) -> LayerCounts:
    """Layer counts of the alternating pull, in closed form.

    The two consecutive Fibonacci numbers F_n and F_{n+1}; which side
    carries the larger one flips with the parity of n.
    """
    if n % 2:
        return LayerCounts(right=fibonacci(n + 1), left=fibonacci(n))
    return LayerCounts(right=fibonacci(n), left=fibonacci(n + 1))


def cw_row(n: int, depth_cap: int = DEFAULT_DEPTH_CAP) -> RowListing:
    """Row n of the classical two-way tree rooted at 1/1.

    Row sizes double, so a cap (default 25) guards against a typo'd
    depth eating all the memory in sight.
    """
    if n < 1:
        raise ValueError("rows are numbered from 1")
    if n > depth_cap:
        raise ValueError("row %d is beyond the depth cap of %d" % (n, depth_cap))
    row = [ExtRational(1, 1)]
    for _ in range(n - 1):
        children = []
        for q in row:
            a, b = q.num, q.den
            children.append(ExtRational(a, a + b))
            children.append(ExtRational(a + b, b))
        row = children
    return RowListing(depth=n, entries=tuple(row))


def four_way_children(q: ExtRational) -> dict:
    """All four children of q, keyed L, R, L^-1, R^-1 in that order."""
    return {
        "L": apply_turn_rule(q, words.L),
        "R": apply_turn_rule(q, words.R),
        "L^-1": apply_turn_rule(q, words.L_INV),
        "R^-1": apply_turn_rule(q, words.R_INV),
    }


def max_total_layers(n: int, mode: str = "closed-form"):
    """Largest total layer count over all forward pulls of length n.

    Returns (total, witness word).  The closed form is F_{n+2} with the
    alternating pull as witness; brute force scans all 2**n words (so n
    is capped at 16) and reports the lexicographically first maximizer,
    R before L.  The two modes always agree on the total, but from
    n = 2 on the brute witness starts R R instead of R L: a tie the
    lexicographic rule breaks the other way.
    """
    if n < 0:
        raise ValueError("word length must be non-negative")
    if mode == "closed-form":
        return fibonacci(n + 2), alternating_word(n)
    if mode != "brute-force":
        raise ValueError("unknown mode %r" % mode)
    if n > BRUTE_FORCE_CAP:
        raise ValueError("brute force is capped at %d turns" % BRUTE_FORCE_CAP)
    best, bits = kernel.brute_max_total(n)
    witness = tuple((bits >> (n - 1 - k)) & 1 for k in range(n))
    return best, witness


def effectiveness_report(word: Sequence[int]) -> List[EffectivenessRow]:
    """Total layers after each prefix of a pull, with growth ratios.

    The first row is the untouched strand (length 0, total 1, no
    ratio); each later ratio is total_k / total_{k-1} as an exact
    fraction.
    """
    q = ExtRational(0, 1)
    rows = [EffectivenessRow(0, 1, None)]
    previous = 1
    for k, t in enumerate(word, start=1):
        q = apply_turn_rule(q, t)
        total = abs(q.num) + q.den
        rows.append(EffectivenessRow(k, total, ExtRational(total, previous)))
        previous = total
    return rows
