import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from voracious import (
    INF,
    CoxeterMatrix,
    CoxeterSystem,
    GroupConfigError,
    parse_group_config,
    word_from_string,
    word_to_string,
)


def _system(rows, gens=None):
    k = len(rows)
    gens = gens or tuple("stuvw"[:k])
    return CoxeterSystem(CoxeterMatrix(tuple(gens), tuple(tuple(r) for r in rows)))


def test_parse_valid_config():
    cox = parse_group_config('{"generators": ["s", "t"], "m": [[1, 3], [3, 1]]}')
    assert cox.generators == ("s", "t")
    assert cox.order(0, 1) == 3
    assert cox.rank == 2
    assert cox.field_modulus() == 3


def test_parse_infinite_order():
    cox = parse_group_config('{"generators": ["s", "t"], "m": [[1, 0], [0, 1]]}')
    assert cox.order(0, 1) == INF
    assert cox.field_modulus() == 1


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        "[1, 2]",
        '{"generators": ["s", "t"]}',
        '{"generators": ["s", "t"], "m": [[1, 3], [2, 1]]}',  # not symmetric
        '{"generators": ["s", "t"], "m": [[2, 3], [3, 1]]}',  # bad diagonal
        '{"generators": ["s", "t"], "m": [[1, 1], [1, 1]]}',  # order 1 off-diagonal
        '{"generators": ["s", "s"], "m": [[1, 3], [3, 1]]}',  # duplicate names
        '{"generators": ["s", "t"], "m": [[1, 3]]}',  # not square
        '{"generators": [], "m": []}',
        '{"generators": ["s", "t"], "m": [[1, 3.0], [3.0, 1]]}',  # non-integer
    ],
)
def test_parse_rejects_malformed(text):
    with pytest.raises(GroupConfigError):
        parse_group_config(text)


def test_word_string_round_trip():
    gens = ("s", "t", "u")
    assert word_to_string((0, 1, 0), gens) == "sts"
    assert word_from_string("sts", gens) == (0, 1, 0)
    assert word_from_string("s,t,s", gens) == (0, 1, 0)
    assert word_from_string("", gens) == ()
    long_gens = ("r1", "r2")
    assert word_to_string((0, 1), long_gens) == "r1,r2"
    assert word_from_string("r1,r2", long_gens) == (0, 1)
    with pytest.raises(GroupConfigError):
        word_from_string("sx", gens)


def test_gram_matrix_entries(stack):
    a2 = stack("a2")
    assert a2.system.gram[0][1] == Fraction(-1, 2)
    assert a2.system.gram2[0][1] == -1
    assert a2.system.gram2[0][0] == 2
    dinf = stack("d_infinity")
    assert dinf.system.gram2[0][1] == -2
    b2 = stack("b2")
    x = b2.system.gram2[0][1]
    assert x.sign() < 0
    assert abs(float(x) + 2 * 0.7071067811865476) < 1e-12


def test_a2_multiplication_table(stack):
    sys_ = stack("a2").system
    words = ["", "s", "t", "st", "ts", "sts"]
    elems = {w: stack("a2").element(w) for w in words}
    assert len({id(e) for e in elems.values()}) == 6
    # Frozen Cayley table: (row word) * s and * t, computed by hand.
    right_s = {"": "s", "s": "", "t": "ts", "st": "sts", "ts": "t", "sts": "st"}
    right_t = {"": "t", "s": "st", "t": "", "st": "s", "ts": "sts", "sts": "ts"}
    for w in words:
        assert sys_.right_mul(elems[w], 0) == elems[right_s[w]]
        assert sys_.right_mul(elems[w], 1) == elems[right_t[w]]
    # Left multiplication example: s * (st) = t.
    assert sys_.left_mul(elems["st"], 0) == elems["t"]


def test_element_identities(stack):
    a2 = stack("a2")
    assert a2.element("ss") == a2.element("")
    assert a2.element("sts") == a2.element("tst")
    assert a2.element("sts").length == 3
    dinf = stack("d_infinity")
    assert dinf.element("sts") != dinf.element("tst")
    assert dinf.element("stst").length == 4


def test_descents(stack):
    a2 = stack("a2")
    sys_ = a2.system
    assert sys_.left_descents(sys_.identity) == ()
    assert sys_.right_descents(sys_.identity) == ()
    st_elem = a2.element("st")
    assert sys_.left_descents(st_elem) == (0,)
    assert sys_.right_descents(st_elem) == (1,)
    w0 = a2.element("sts")
    assert sys_.left_descents(w0) == (0, 1)
    assert sys_.right_descents(w0) == (0, 1)


def test_shortlex(stack):
    a2 = stack("a2")
    assert a2.system.shortlex_word(a2.element("tst")) == (0, 1, 0)
    assert a2.system.shortlex_word(a2.system.identity) == ()
    dinf = stack("d_infinity")
    assert dinf.system.shortlex_word(dinf.element("tst")) == (1, 0, 1)
    for s in (a2, dinf):
        for g in s.system.ball(4):
            word = s.system.shortlex_word(g)
            assert len(word) == g.length
            assert s.system.element_of_word(word) == g


def test_reduced_words(stack):
    a2 = stack("a2")
    assert a2.system.reduced_words(a2.element("s")) == {(0,)}
    assert a2.system.reduced_words(a2.element("sts")) == {(0, 1, 0), (1, 0, 1)}
    dinf = stack("d_infinity")
    assert dinf.system.reduced_words(dinf.element("sts")) == {(0, 1, 0)}


@pytest.mark.parametrize("name,radius", [("a2", 4), ("d_infinity", 4), ("a3", 4)])
def test_reduced_words_match_bruteforce(stack, name, radius):
    s = stack(name)
    sys_ = s.system
    for g in sys_.ball(radius):
        brute = {
            w
            for w in itertools.product(range(s.cox.rank), repeat=g.length)
            if sys_.element_of_word(w) == g
        }
        assert sys_.reduced_words(g) == brute


def test_ball_counts(stack):
    assert len(stack("a2").system.ball(0)) == 1
    assert len(stack("a2").system.ball(3)) == 6
    assert len(stack("a2").system.ball(9)) == 6  # group is exhausted
    assert len(stack("d_infinity").system.ball(3)) == 7
    assert [len(stack("a3").system.sphere(r)) for r in range(7)] == [
        1, 3, 5, 6, 5, 3, 1,
    ]
    assert len(stack("b2").system.ball(4)) == 8
    assert len(stack("i2_5").system.ball(5)) == 10


def test_ball_matches_bruteforce_enumeration(stack):
    s = stack("triangle_333")
    for radius in range(4):
        brute = set()
        for n in range(radius + 1):
            for w in itertools.product(range(3), repeat=n):
                g = s.system.element_of_word(w)
                if g.length == n:
                    brute.add(g)
        assert set(s.system.ball(radius)) == brute


def test_is_finite(stack):
    assert stack("a2").system.is_finite()
    assert stack("b2").system.is_finite()
    assert stack("i2_5").system.is_finite()
    assert stack("a3").system.is_finite()
    assert stack("rank1").system.is_finite()
    assert not stack("d_infinity").system.is_finite()
    assert not stack("triangle_333").system.is_finite()
    assert not stack("triangle_334").system.is_finite()


def test_length_changes_by_one(stack):
    for name in ("a2", "d_infinity", "triangle_334"):
        s = stack(name)
        for g in s.system.ball(3):
            for i in range(s.cox.rank):
                assert abs(s.system.right_mul(g, i).length - g.length) == 1
                assert abs(s.system.left_mul(g, i).length - g.length) == 1


def test_form_is_invariant(stack):
    # g^T (2B) g = 2B, checked exactly entry by entry.
    for name in ("a2", "d_infinity", "triangle_334"):
        s = stack(name)
        sys_ = s.system
        k = s.cox.rank
        for g in sys_.ball(4):
            cols = [[row[j] for row in g.matrix] for j in range(k)]
            for i in range(k):
                for j in range(k):
                    got = sys_.bilinear2(cols[i], cols[j])
                    assert got == sys_.gram2[i][j]


def test_inverse_and_multiply(stack):
    s = stack("triangle_334")
    sys_ = s.system
    for g in sys_.ball(3):
        gi = sys_.inverse(g)
        assert gi.length == g.length
        assert sys_.multiply(g, gi) == sys_.identity
        for h in sys_.ball(2):
            prod = sys_.multiply(g, h)
            assert prod == sys_.element_of_word(
                sys_.shortlex_word(g) + sys_.shortlex_word(h)
            )


def test_automorphisms(stack):
    assert stack("a2").cox.automorphisms() == [(0, 1), (1, 0)]
    assert stack("d_infinity").cox.automorphisms() == [(0, 1), (1, 0)]
    assert stack("triangle_334").cox.automorphisms() == [(0, 1, 2), (0, 2, 1)]
    assert len(stack("triangle_333").cox.automorphisms()) == 6
    assert stack("b2").cox.automorphisms() == [(0, 1), (1, 0)]


@settings(max_examples=80, deadline=None, derandomize=True)
@given(word=st.lists(st.integers(min_value=0, max_value=1), max_size=10))
def test_length_parity(word):
    sys_ = _SYS_334_RANK2
    g = sys_.element_of_word(tuple(w % 2 for w in word))
    assert g.length % 2 == len(word) % 2
    assert g.length <= len(word)


@settings(max_examples=80, deadline=None, derandomize=True)
@given(word=st.lists(st.integers(min_value=0, max_value=2), max_size=8))
def test_descent_shortens(word):
    sys_ = _SYS_333
    g = sys_.element_of_word(tuple(word))
    for i in sys_.right_descents(g):
        assert sys_.right_mul(g, i).length == g.length - 1
    for i in sys_.left_descents(g):
        assert sys_.left_mul(g, i).length == g.length - 1


_SYS_334_RANK2 = _system([[1, 4], [4, 1]])
_SYS_333 = _system([[1, 3, 3], [3, 1, 3], [3, 3, 1]])
