"""Pure-Python kernels, mirrored one for one by the compiled extension.

Everything here works on raw turn codes and integer pairs so the two
implementations stay interchangeable.  Seeds are assumed to be in
lowest terms; the four rules preserve the gcd, so the results are too.
"""

from __future__ import annotations


def fold_turns(word, num=0, den=1):
    """Fold the turn rules over ``word`` starting from num/den.

    Returns the final (num, den) pair with the denominator sign
    normalized and any n/0 collapsed to 1/0.
    """
    a, b = num, den
    for t in word:
        if t == 0:
            a = a + b
        elif t == 1:
            b = a + b
        elif t == 2:
            a = a - b
        elif t == 3:
            b = b - a
        else:
            raise ValueError("bad turn code %r" % (t,))
        if b < 0:
            a, b = -a, -b
        elif b == 0:
            a = 1
    return a, b


def reduce_turns(word):
    """Freely reduce a word: drop every adjacent turn/inverse pair."""
    out = []
    for t in word:
        if t not in (0, 1, 2, 3):
            raise ValueError("bad turn code %r" % (t,))
        if out and out[-1] == t ^ 2:
            out.pop()
        else:
            out.append(t)
    return tuple(out)


def brute_max_total(n):
    """Scan all 2**n forward words of length n for the largest layer total.

    Words are encoded in an integer, most significant bit first, with 0
    for R and 1 for L; iterating the integers in order is exactly
    lexicographic order with R before L, so the first maximum found is
    the lexicographically first witness.  Returns (best_total, bits).
    """
    if n < 0:
        raise ValueError("word length must be non-negative")
    best = 1
    best_bits = 0
    for bits in range(1 << n):
        a, b = 0, 1
        for pos in range(n - 1, -1, -1):
            if (bits >> pos) & 1:
                b += a
            else:
                a += b
        if a + b > best:
            best = a + b
            best_bits = bits
    return best, best_bits
