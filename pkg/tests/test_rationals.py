import math

import pytest
from hypothesis import given, strategies as st

from pullcalc import words
from pullcalc.rationals import (
    ExtRational,
    apply_turn_rule,
    cf_eval,
    cf_expand,
    format_cf,
    make,
    neg_recip,
    parse_fraction,
)

ints = st.integers(min_value=-10_000, max_value=10_000)


# --- normal form -----------------------------------------------------------

def test_make_reduces_to_lowest_terms():
    assert make(2, 4) == make(1, 2)
    assert make(2, 4).num == 1
    assert make(2, 4).den == 2


def test_make_moves_sign_to_numerator():
    q = make(3, -6)
    assert (q.num, q.den) == (-1, 2)


def test_make_collapses_infinities():
    assert make(-1, 0) == make(1, 0)
    assert make(2, 0) == make(1, 0)
    assert make(1, 0).den == 0


def test_make_normalizes_zero():
    q = make(0, -5)
    assert (q.num, q.den) == (0, 1)


def test_make_rejects_zero_over_zero():
    with pytest.raises(ValueError):
        make(0, 0)


def test_str_and_repr():
    assert str(make(-1, 3)) == "-1/3"
    assert str(make(1, 0)) == "1/0"
    assert repr(make(3, 2)) == "ExtRational(3, 2)"


def test_equality_and_hashing():
    assert make(4, 6) == make(2, 3)
    assert hash(make(4, 6)) == hash(make(2, 3))
    assert make(1, 2) != make(2, 1)
    assert len({make(1, 2), make(2, 4), make(-2, 0)}) == 2


@given(ints, ints)
def test_make_is_idempotent(a, b):
    if a == 0 and b == 0:
        return
    q = make(a, b)
    r = make(q.num, q.den)
    assert (r.num, r.den) == (q.num, q.den)
    assert math.gcd(q.num, q.den) == 1
    assert q.den >= 0


# --- parsing ---------------------------------------------------------------

def test_parse_fraction_accepts_the_grammar():
    assert parse_fraction("9/7") == make(9, 7)
    assert parse_fraction("-1/3") == make(-1, 3)
    assert parse_fraction("7") == make(7, 1)
    assert parse_fraction("1/0") == make(1, 0)
    assert parse_fraction(" 2/6 ") == make(1, 3)


@pytest.mark.parametrize("text", ["", "7/", "/3", "1/-2", "0/0", "3 / 2", "a/b"])
def test_parse_fraction_rejects_garbage(text):
    with pytest.raises(ValueError):
        parse_fraction(text)


# --- turn rules ------------------------------------------------------------

def test_turn_rules_from_the_seed():
    q = make(0, 1)
    assert apply_turn_rule(q, words.R) == make(1, 1)
    assert apply_turn_rule(q, words.L) == make(0, 1)
    assert apply_turn_rule(q, words.L_INV) == make(0, 1)
    assert apply_turn_rule(q, words.R_INV) == make(-1, 1)


def test_turn_rules_at_one():
    q = make(1, 1)
    assert apply_turn_rule(q, words.L) == make(1, 2)
    assert apply_turn_rule(q, words.R) == make(2, 1)
    assert apply_turn_rule(q, words.L_INV) == make(1, 0)
    assert apply_turn_rule(q, words.R_INV) == make(0, 1)


def test_turn_rules_at_infinity():
    inf = make(1, 0)
    assert apply_turn_rule(inf, words.R) == inf
    assert apply_turn_rule(inf, words.R_INV) == inf
    assert apply_turn_rule(inf, words.L) == make(1, 1)
    assert apply_turn_rule(inf, words.L_INV) == make(-1, 1)


def test_turn_rules_reject_bad_codes():
    with pytest.raises(ValueError):
        apply_turn_rule(make(1, 1), 7)


def test_forward_rules_against_inverse_rules_exhaustively():
    # every valid fraction with |num| <= 50, den <= 50, plus the point at infinity
    qs = [make(1, 0)]
    for b in range(1, 51):
        for a in range(-50, 51):
            if math.gcd(a, b) == 1:
                qs.append(make(a, b))
    for q in qs:
        for turn in (words.R, words.L, words.R_INV, words.L_INV):
            child = apply_turn_rule(q, turn)
            back = apply_turn_rule(child, words.inverse_turn(turn))
            # the four rules are only mutually inverse away from the fixed points
            if turn in (words.R, words.R_INV) and q == make(1, 0):
                assert back == q
            elif turn == words.L and q == make(0, 1):
                assert back == q
            else:
                assert back == q, (q, turn)


# --- negated reciprocal ----------------------------------------------------

def test_neg_recip_examples():
    assert neg_recip(make(3, 2)) == make(-2, 3)
    assert neg_recip(make(0, 1)) == make(1, 0)
    assert neg_recip(make(1, 0)) == make(0, 1)


@given(ints, ints)
def test_neg_recip_is_an_involution(a, b):
    if a == 0 and b == 0:
        return
    q = make(a, b)
    assert neg_recip(neg_recip(q)) == q


# --- continued fractions ---------------------------------------------------

def test_cf_eval_examples():
    assert cf_eval([-1, 1, 2]) == make(-1, 3)
    assert cf_eval([1, 3, 2]) == make(9, 7)
    assert cf_eval([0, 1, 1, 1, 0]) == make(1, 2)
    assert cf_eval([5]) == make(5, 1)


def test_cf_eval_is_total_over_zero_coefficients():
    # 2 + 1/(0 + 1/2) = 4, passing through the point at infinity
    assert cf_eval([2, 0, 2]) == make(4, 1)
    assert cf_eval([0, -1, 0]) == make(0, 1)


def test_cf_eval_rejects_empty_input():
    with pytest.raises(ValueError):
        cf_eval([])


def test_cf_expand_examples():
    assert cf_expand(make(9, 7)) == (1, 3, 2)
    assert cf_expand(make(1, 1)) == (1,)
    assert cf_expand(make(2, 5)) == (0, 2, 2)
    assert cf_expand(make(7, 9)) == (0, 1, 3, 2)
    assert cf_expand(make(0, 1)) == (0,)


def test_cf_expand_rejects_negatives_and_infinity():
    with pytest.raises(ValueError):
        cf_expand(make(-1, 3))
    with pytest.raises(ValueError):
        cf_expand(make(1, 0))


def test_cf_expand_last_coefficient_is_at_least_two():
    for b in range(1, 80):
        for a in range(0, 80):
            if math.gcd(a, b) != 1:
                continue
            coeffs = cf_expand(make(a, b))
            if len(coeffs) > 1:
                assert coeffs[-1] >= 2, (a, b)


def test_cf_round_trips_for_all_small_fractions():
    for b in range(1, 301):
        for a in range(0, 301):
            if math.gcd(a, b) == 1:
                assert cf_eval(cf_expand(make(a, b))) == make(a, b)


def test_format_cf():
    assert format_cf((1, 3, 2)) == "[1; 3, 2]"
    assert format_cf((5,)) == "[5]"
    assert format_cf((-1, 1, 2)) == "[-1; 1, 2]"
