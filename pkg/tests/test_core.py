import random

import pytest
from hypothesis import given, settings, strategies as st

from chinoid import core
from chinoid.core import CanonicalForm, normalize, parse_word

from _oracles import staircase_word, union_find_classes


def cf(n, **cells):
    """CanonicalForm from keyword cells like k21=1."""
    rows = [[0] * i for i in range(1, n + 1)]
    for name, v in cells.items():
        i, j = int(name[1]), int(name[2])
        rows[i - 1][j - 1] = v
    return CanonicalForm.from_rows(n, rows)


def words(n, max_len=6):
    return st.lists(st.integers(1, n), max_size=max_len).map(tuple)


# -- word format --------------------------------------------------------


def test_word_round_trip():
    assert parse_word("a3 a1 a2") == (3, 1, 2)
    assert parse_word("1") == () == parse_word("")
    assert core.format_word(()) == "1"
    assert parse_word(core.format_word((4, 4, 1))) == (4, 4, 1)


@pytest.mark.parametrize("bad", ["a", "b2", "a-1", "2"])
def test_bad_tokens(bad):
    with pytest.raises(ValueError):
        parse_word(bad)


def test_letters_out_of_range():
    with pytest.raises(ValueError):
        core.congruence_class((3,), 2)


# -- congruence classes -------------------------------------------------


def test_class_examples():
    assert core.congruence_class((), 2) == {()}
    assert core.congruence_class((1, 2, 1), 2) == {(1, 2, 1), (2, 1, 1)}
    assert core.congruence_class((1, 1, 2), 2) == {(1, 1, 2)}


@pytest.mark.parametrize("n,length", [(2, 6), (3, 5), (4, 4)])
def test_classes_match_union_find(n, length):
    assert sorted(core.word_classes(n, length), key=min) == union_find_classes(n, length)


def test_classes_partition():
    classes = core.word_classes(3, 4)
    union = set().union(*classes)
    assert len(union) == 3 ** 4 == sum(map(len, classes))


def test_budget_is_an_error(monkeypatch):
    with pytest.raises(core.ClassBudgetExceeded):
        core.congruence_class((3, 2, 1, 3), 3, budget=2)
    monkeypatch.setenv(core.BUDGET_ENV, "2")
    with pytest.raises(core.ClassBudgetExceeded):
        core.congruence_class((3, 2, 1, 3), 3)


# -- canonical forms ----------------------------------------------------


def test_normalize_examples():
    assert normalize((2, 1, 1), 2) == cf(2, k11=1, k21=1)
    assert normalize((2, 1, 1), 2).expand() == (1, 2, 1)
    assert normalize((), 3) == CanonicalForm.identity(3)
    assert normalize((2, 1), 2) == cf(2, k21=1)


def test_parse_is_deterministic():
    # a2 a1 a1 is not staircase, a1 a2 a1 is: b1 = a1, b2 = a2 a1
    assert core.parse_canonical((2, 1, 1), 2) is None
    assert core.parse_canonical((1, 2, 1), 2) == cf(2, k11=1, k21=1)
    # pairs inside a block must be ordered by the small letter
    assert core.parse_canonical((3, 2, 3, 1), 3) is None


def test_multiply_examples():
    x = cf(2, k21=1)
    assert core.multiply(CanonicalForm.identity(2), x) == x
    assert core.multiply(cf(2, k11=1), cf(2, k22=1)) == cf(2, k11=1, k22=1)
    assert core.multiply(cf(2, k22=1), cf(2, k11=1)) == cf(2, k21=1)


def test_degree_examples():
    assert core.degree(CanonicalForm.identity(3), 2) == 0
    assert core.degree(cf(2, k21=1), 1) == 1
    assert core.degree(normalize((3, 1, 2), 3), 3) == 1


def test_expand_matches_oracle():
    for x in core.canonical_forms(3, 5):
        assert x.expand() == staircase_word(3, x.k)
        assert core.parse_canonical(x.expand(), 3) == x


@pytest.mark.parametrize("n,length", [(2, 7), (3, 5), (4, 4)])
def test_one_staircase_word_per_class(n, length):
    for cls in core.word_classes(n, length):
        shaped = [w for w in cls if core.is_canonical_word(w, n)]
        assert len(shaped) == 1
        target = normalize(shaped[0], n)
        assert all(normalize(w, n) == target for w in cls)


def test_relations_hold_after_normalization():
    n = 4
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            for k in range(j, n + 1):
                forms = {normalize(w, n) for w in core.relation_triples(i, j, k)}
                assert len(forms) == 1


@settings(max_examples=60, deadline=None)
@given(words(3, 3), words(3, 3), words(3, 3))
def test_multiply_associative_and_additive(x, y, z):
    X, Y, Z = (normalize(w, 3) for w in (x, y, z))
    assert (X * Y) * Z == X * (Y * Z)
    for i in range(1, 4):
        assert (X * Y).degree(i) == X.degree(i) + Y.degree(i)


@settings(max_examples=200, deadline=None)
@given(words(5, 8), words(5, 8), words(5, 8))
def test_fast_multiply_associative(x, y, z):
    X, Y, Z = (core.normalize_fast(w, 5) for w in (x, y, z))
    mul = core.multiply_fast
    assert mul(mul(X, Y), Z) == mul(X, mul(Y, Z))


@settings(max_examples=60, deadline=None)
@given(words(4, 7))
def test_idempotent(w):
    x = normalize(w, 4)
    assert normalize(x.expand(), 4) == x


def test_equivalent():
    assert core.equivalent((3, 1, 2), (2, 3, 1), 3)
    assert not core.equivalent((1, 2), (2, 1), 2)
    assert not core.equivalent((1, 1), (1,), 2)


def test_json_round_trip():
    x = normalize((3, 1, 2, 2, 3), 3)
    assert CanonicalForm.from_json(x.to_json()) == x
    assert x.to_json()["n"] == 3


def test_bad_triangle_rejected():
    with pytest.raises(ValueError):
        CanonicalForm.from_rows(2, [[0], [-1, 0]])


# -- a_n x a_1 = a_n a_1 w ----------------------------------------------


def test_left_divisor_shift_examples():
    assert core.left_divisor_shift_check(2, ()) == ()
    assert core.left_divisor_shift_check(3, (2,)) == (2,)
    w = core.left_divisor_shift_check(3, (2, 2))
    assert core.equivalent((3, 2, 2, 1), (3, 1) + w, 3)


def test_left_divisor_shift_sweep():
    rng = random.Random(7)
    for _ in range(40):
        n = rng.randint(2, 4)
        x = tuple(rng.randint(1, n) for _ in range(rng.randint(0, 3)))
        w = core.left_divisor_shift_check(n, x)
        assert core.equivalent((n,) + x + (1,), (n, 1) + w, n)


# -- fast path ----------------------------------------------------------


@pytest.mark.parametrize("n,d", [(2, 8), (3, 6), (4, 5)])
def test_insertion_grid(n, d):
    assert core.validate_insertion(n, d) == []


@settings(max_examples=80, deadline=None)
@given(words(5, 6))
def test_fast_matches_reference(w):
    assert core.normalize_fast(w, 5) == normalize(w, 5)


def test_fast_multiply():
    x, y = normalize((3, 1, 2), 3), normalize((2, 3, 3, 1), 3)
    assert core.multiply_fast(x, y) == core.multiply(x, y)
