# cython: language_level=3
"""Compiled kernels: turn-rule folding, free reduction, brute scans.

The signatures and semantics match _purekernel exactly; the test suite
runs both against each other.  fold_turns keeps the state in C int64
while it safely can and falls back to Python integers the moment the
values approach the overflow line, so Fibonacci-sized blowups stay
exact.
"""

from libc.stdlib cimport free, malloc

DEF LIMIT_BITS = 61

cdef long long _LIMIT = (<long long>1) << LIMIT_BITS


def fold_turns(word, num=0, den=1):
    """Fold the turn rules over ``word`` starting from num/den."""
    cdef Py_ssize_t i = 0
    cdef Py_ssize_t n = len(word)
    cdef long long a, b
    cdef int t
    if -_LIMIT < num < _LIMIT and -_LIMIT < den < _LIMIT:
        a = num
        b = den
        while i < n:
            if not (-_LIMIT < a < _LIMIT and -_LIMIT < b < _LIMIT):
                break
            t = word[i]
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
                a = -a
                b = -b
            elif b == 0:
                a = 1
            i += 1
        num = a
        den = b
    # big-integer tail (or the whole word if the seed was already huge)
    oa = num
    ob = den
    while i < n:
        t = word[i]
        if t == 0:
            oa = oa + ob
        elif t == 1:
            ob = oa + ob
        elif t == 2:
            oa = oa - ob
        elif t == 3:
            ob = ob - oa
        else:
            raise ValueError("bad turn code %r" % (t,))
        if ob < 0:
            oa = -oa
            ob = -ob
        elif ob == 0:
            oa = 1
        i += 1
    return oa, ob


def reduce_turns(word):
    """Freely reduce a word: drop every adjacent turn/inverse pair."""
    cdef Py_ssize_t n = len(word)
    cdef Py_ssize_t top = 0
    cdef Py_ssize_t i
    cdef int t
    cdef int *stack
    if n == 0:
        return ()
    stack = <int *>malloc(n * sizeof(int))
    if stack == NULL:
        raise MemoryError()
    try:
        for i in range(n):
            t = word[i]
            if t < 0 or t > 3:
                raise ValueError("bad turn code %r" % (word[i],))
            if top > 0 and stack[top - 1] == (t ^ 2):
                top -= 1
            else:
                stack[top] = t
                top += 1
        return tuple([stack[i] for i in range(top)])
    finally:
        free(stack)


def brute_max_total(n):
    """Exhaustive layer-total scan over all 2**n forward words.

    Same encoding as the pure version: words as integers, most
    significant bit first, 0 for R and 1 for L.  n is capped well below
    anything that could overflow a C long long (F_18 at n = 16).
    """
    cdef int length = n
    cdef long long best = 1
    cdef long long best_bits = 0
    cdef long long bits, a, b
    cdef int pos
    if length < 0:
        raise ValueError("word length must be non-negative")
    if length > 40:
        raise ValueError("scan of 2**%d words is not going to finish" % length)
    for bits in range(<long long>1 << length):
        a = 0
        b = 1
        for pos in range(length - 1, -1, -1):
            if (bits >> pos) & 1:
                b += a
            else:
                a += b
        if a + b > best:
            best = a + b
            best_bits = bits
    return int(best), int(best_bits)
