import random

import pytest
from hypothesis import given, strategies as st

from pullcalc import words
from pullcalc.words import (
    L,
    L_INV,
    R,
    R_INV,
    WordSyntaxError,
    format_word,
    from_run_form,
    invert_word,
    negate_runs,
    parse_word,
    reduce,
    to_run_form,
)

ALL_TURNS = (R, L, R_INV, L_INV)

turn_lists = st.lists(st.sampled_from(ALL_TURNS), max_size=40)


# --- parsing ---------------------------------------------------------------

def test_parse_plain_letters():
    assert parse_word("RRL") == (R, R, L)


def test_parse_exponents_and_inverse():
    assert parse_word("R^2 L R^-1") == (R, R, L, R_INV)


def test_parse_lowercase_is_inverse():
    assert parse_word("r l^2") == (R_INV, L_INV, L_INV)


def test_parse_empty_symbol():
    assert parse_word("e") == ()
    assert parse_word("") == ()


def test_parse_exponent_zero_yields_no_turns():
    assert parse_word("R^0 L") == (L,)


def test_parse_lowercase_negative_exponent_cancels_out():
    # r^-2 spells the inverse of r twice, which is a forward R
    assert parse_word("r^-2") == (R, R)


def test_parse_ignores_whitespace():
    assert parse_word("  R^2L\tR^-1 ") == (R, R, L, R_INV)


def test_parse_rejects_unknown_token_with_offset():
    with pytest.raises(WordSyntaxError) as exc:
        parse_word("RL Q")
    assert exc.value.offset == 3
    assert "offset 3" in str(exc.value)


def test_parse_rejects_dangling_caret():
    with pytest.raises(WordSyntaxError) as exc:
        parse_word("R^")
    assert exc.value.offset == 2


def test_parse_rejects_caret_without_letter():
    with pytest.raises(WordSyntaxError):
        parse_word("^2")


# --- formatting ------------------------------------------------------------

def test_format_plain():
    assert format_word((R, R, L), "plain") == "R R L"
    assert format_word((R, L_INV), "plain") == "R L^-1"


def test_format_runs_collects_exponents():
    assert format_word((R, R, L), "runs") == "R^2 L"


def test_format_runs_empty_word_is_e():
    assert format_word((), "runs") == "e"
    assert format_word((), "plain") == "e"


def test_format_runs_infinity_word():
    assert format_word((R, L_INV), "runs") == "R L^-1"


def test_format_runs_reduces_first():
    assert format_word((R, R_INV, L), "runs") == "L"


def test_format_rejects_unknown_style():
    with pytest.raises(ValueError):
        format_word((R,), "fancy")


@given(turn_lists)
def test_parse_of_format_reduces_to_reduce(ws):
    word = tuple(ws)
    assert parse_word(format_word(word, "runs")) == reduce(word)
    assert parse_word(format_word(word, "plain")) == word


# --- free reduction --------------------------------------------------------

def test_reduce_examples():
    assert reduce(parse_word("R^-1 R^2 L")) == parse_word("R L")
    assert reduce(parse_word("L L^-1")) == ()
    assert reduce(parse_word("R R^-1 R R L")) == parse_word("R^2 L")


def _reduce_in_random_order(word, rng):
    """Reference reducer: cancel one random eligible pair at a time."""
    work = list(word)
    while True:
        sites = [i for i in range(len(work) - 1) if work[i] == work[i + 1] ^ 2]
        if not sites:
            return tuple(work)
        i = rng.choice(sites)
        del work[i : i + 2]


def test_reduction_is_confluent():
    rng = random.Random(20260815)
    for _ in range(10_000):
        n = rng.randrange(0, 31)
        word = tuple(rng.choice(ALL_TURNS) for _ in range(n))
        assert _reduce_in_random_order(word, rng) == reduce(word)


@given(turn_lists)
def test_reduce_is_idempotent(ws):
    once = reduce(tuple(ws))
    assert reduce(once) == once


@given(turn_lists)
def test_word_times_inverse_reduces_to_identity(ws):
    word = tuple(ws)
    assert reduce(word + invert_word(word)) == ()


# --- run form --------------------------------------------------------------

def test_run_form_examples():
    assert to_run_form(parse_word("R^2 L R^-1")) == (2, 1, -1)
    assert to_run_form(parse_word("L R L")) == (0, 1, 1, 1)
    assert to_run_form(parse_word("R^2 L^3 R")) == (2, 3, 1)


def test_run_form_merges_mixed_signs():
    # R R^-1 R^-1 freely reduces to a single reverse turn
    assert to_run_form((R, R_INV, R_INV)) == (-1,)


def test_from_run_form_examples():
    assert from_run_form((2, 1, -1)) == parse_word("R^2 L R^-1")
    assert from_run_form(()) == ()
    assert from_run_form((-1, -2)) == parse_word("R^-1 L^-2")


def test_from_run_form_accepts_zero_runs_at_the_ends():
    assert from_run_form((0, 1)) == (L,)
    assert from_run_form((1, 1, 0)) == (R, L)


def test_from_run_form_rejects_interior_zero():
    with pytest.raises(ValueError):
        from_run_form((1, 0, 1))


@given(turn_lists)
def test_run_form_round_trips(ws):
    word = tuple(ws)
    runs = to_run_form(word)
    assert from_run_form(runs) == reduce(word)
    assert to_run_form(from_run_form(runs)) == runs


# --- inversion and run negation ---------------------------------------------

def test_invert_word_examples():
    assert invert_word(parse_word("R L")) == parse_word("L^-1 R^-1")
    assert invert_word(()) == ()
    assert invert_word(parse_word("R^2")) == parse_word("R^-2")


def test_negate_runs_flips_every_turn_in_place():
    assert negate_runs(parse_word("R^2 L")) == parse_word("R^-2 L^-1")
    assert negate_runs(parse_word("R^-1 L^-2")) == parse_word("R L^2")
