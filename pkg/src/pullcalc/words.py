"""Words over the four machine turns, as tuples of small integer codes.

A pull is a finite sequence of quarter-turns of the three-peg frame: a
right turn, a left turn, or the reverse of either.  Words are plain
tuples of the codes below so that the compiled kernel can walk them
without boxing anything.

The code arithmetic is load-bearing: ``t ^ 2`` is the inverse turn and
``t & 1`` is the letter (0 for the R family, 1 for the L family).
"""

from __future__ import annotations

from typing import Iterable, Sequence

from pullcalc import kernel

R = 0
L = 1
R_INV = 2
L_INV = 3

TurnWord = tuple  # tuple[int, ...]

_TOKENS = {R: "R", L: "L", R_INV: "R^-1", L_INV: "L^-1"}


class WordSyntaxError(ValueError):
    """Raised for text that does not spell a word; carries the offset."""

    def __init__(self, message: str, offset: int):
        super().__init__("%s at offset %d" % (message, offset))
        self.offset = offset


def inverse_turn(turn: int) -> int:
    """The turn that undoes ``turn``."""
    return turn ^ 2


def turn_letter(turn: int) -> int:
    """0 for R-family turns, 1 for L-family turns."""
    return turn & 1


def is_reverse(turn: int) -> bool:
    return turn >= 2


def tokenize(text: str, letter_codes: dict) -> TurnWord:
    """Scan ``text`` into turn codes using the given uppercase alphabet.

    ``letter_codes`` maps each forward letter to its code; the lowercase
    form of a letter spells its inverse, and ``X^k`` repeats (a negative
    k applying the inverse |k| times).  ``e`` is the empty word and may
    appear anywhere.  Whitespace separates nothing in particular.
    """
    turns = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "e":
            i += 1
            continue
        upper = ch.upper()
        if upper not in letter_codes:
            raise WordSyntaxError("unexpected %r" % ch, offset=i)
        base = letter_codes[upper]
        if ch != upper:
            base ^= 2
        i += 1
        count = 1
        if i < n and text[i] == "^":
            i += 1
            j = i
            if j < n and text[j] in "+-":
                j += 1
            if j >= n or not text[j].isdigit():
                raise WordSyntaxError("expected an integer after '^'", offset=i)
            while j < n and text[j].isdigit():
                j += 1
            count = int(text[i:j])
            i = j
        if count < 0:
            base ^= 2
            count = -count
        turns.extend([base] * count)
    return tuple(turns)


def parse_word(text: str) -> TurnWord:
    """Parse R/L notation ("R^2 L R^-1", "r l", "e") into a word."""
    return tokenize(text, {"R": R, "L": L})


def format_word(word: Sequence[int], style: str = "plain", letters: tuple = ("R", "L")) -> str:
    """Render a word as text.

    ``plain`` writes one token per turn; ``runs`` freely reduces first
    and collects each block into a single exponent.  The empty word
    comes out as ``e`` in both styles.
    """
    if style == "plain":
        names = {
            0: letters[0],
            1: letters[1],
            2: letters[0] + "^-1",
            3: letters[1] + "^-1",
        }
        if not word:
            return "e"
        return " ".join(names[t] for t in word)
    if style != "runs":
        raise ValueError("unknown style %r" % style)
    parts = []
    for pos, n in enumerate(to_run_form(word)):
        if n == 0:
            continue
        letter = letters[pos & 1]
        if n == 1:
            parts.append(letter)
        else:
            parts.append("%s^%d" % (letter, n))
    return " ".join(parts) if parts else "e"


def reduce(word: Iterable[int]) -> TurnWord:
    """Freely reduce: cancel every adjacent turn/inverse pair."""
    return kernel.reduce_turns(tuple(word))


def to_run_form(word: Iterable[int]) -> tuple:
    """Signed run lengths of the reduced word, alternating R, L, R, ...

    A leading 0 appears when the word starts with an L-family turn, so
    even positions always hold R runs.  The empty word maps to ().
    """
    reduced = reduce(word)
    groups = []
    for t in reduced:
        letter = t & 1
        step = -1 if t >= 2 else 1
        if groups and groups[-1][0] == letter:
            groups[-1][1] += step
        else:
            groups.append([letter, step])
    runs = []
    if groups and groups[0][0] == 1:
        runs.append(0)
    runs.extend(value for _, value in groups)
    return tuple(runs)


def from_run_form(runs: Sequence[int]) -> TurnWord:
    """Rebuild the word for a run tuple.

    Zero runs are tolerated at either end (continued-fraction bridges
    produce them) but rejected in the interior, where they would hide a
    cancellation.
    """
    runs = tuple(runs)
    for pos in range(1, len(runs) - 1):
        if runs[pos] == 0:
            raise ValueError("zero run in the interior at position %d" % pos)
    word = []
    for pos, n in enumerate(runs):
        letter = pos & 1
        turn = letter if n > 0 else letter | 2
        word.extend([turn] * abs(n))
    return tuple(word)


def invert_word(word: Sequence[int]) -> TurnWord:
    """The word that undoes ``word``: reversed, each turn inverted."""
    return tuple(t ^ 2 for t in reversed(word))


def negate_runs(word: Sequence[int]) -> TurnWord:
    """Invert every turn in place (run lengths flip sign, order stays)."""
    return tuple(t ^ 2 for t in word)
