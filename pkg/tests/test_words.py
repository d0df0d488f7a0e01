import itertools

import pytest
from hypothesis import given, strategies as st

from omegaid.core import (
    Alphabet, InconsistentSample, Sample, UPWord, shortlex_cmp, up_canonicalize, up_equal,
    up_suffixes,
)

AB = Alphabet.of("ab")
short = st.text(alphabet="ab", max_size=4)
nonempty = st.text(alphabet="ab", min_size=1, max_size=4)


def unfold(u, v, n):
    """First n symbols of u v v v ..., computed without any canonical form."""
    text = u + v * (n // len(v) + 1)
    return text[:n]


def test_shortlex_examples():
    assert shortlex_cmp("b", "aa", AB) == -1
    assert shortlex_cmp("ab", "ba", AB) == -1
    assert shortlex_cmp("a", "a", AB) == 0
    assert shortlex_cmp("aa", "b", AB) == 1


def test_shortlex_rejects_foreign_symbols():
    with pytest.raises(ValueError):
        shortlex_cmp("c", "a", AB)


def test_alphabet_validation():
    with pytest.raises(ValueError):
        Alphabet.of("")
    with pytest.raises(ValueError):
        Alphabet.of("aa")
    assert list(AB.words_up_to(1)) == ["", "a", "b"]


def test_canonical_examples():
    w = up_canonicalize("ab", "abab")
    assert (w.prefix, w.period) == ("", "ab")
    assert (UPWord("", "a").prefix, UPWord("", "a").period) == ("", "a")
    w = UPWord("a", "ba")
    assert (w.prefix, w.period) == ("", "ab")


def test_empty_period_rejected():
    with pytest.raises(ValueError):
        UPWord("a", "")


def test_parse_and_print():
    assert str(UPWord.parse("ab(ba)")) == "ab(ba)"
    assert str(UPWord.parse("a(ba)")) == "(ab)"
    assert UPWord.parse("(b)") == UPWord("", "b")
    assert str(UPWord.parse("aab(b)")) == "aa(b)"
    with pytest.raises(ValueError):
        UPWord.parse("ab")


def test_up_equal_examples():
    assert not up_equal(UPWord("a", "b"), UPWord("", "ab"))
    assert up_equal(UPWord("", "ab"), UPWord("a", "ba"))
    w = UPWord("ab", "a")
    assert up_equal(w, w)


def test_up_equal_exhaustive_against_unfolding():
    words = [(u, v) for u in AB.words_up_to(4) for v in AB.words_up_to(4) if v]
    for (u1, v1), (u2, v2) in itertools.product(words[::3], words[::5]):
        n = max(len(u1), len(u2)) + len(v1) * len(v2)
        expected = unfold(u1, v1, n) == unfold(u2, v2, n)
        assert up_equal(UPWord(u1, v1), UPWord(u2, v2)) == expected
        assert (UPWord(u1, v1) == UPWord(u2, v2)) == expected


@given(short, nonempty)
def test_canonical_form_denotes_same_word(u, v):
    w = UPWord(u, v)
    n = len(u) + 3 * len(v) + 4
    assert w.take(n) == unfold(u, v, n)
    assert len(w.prefix) <= len(u) and len(w.period) <= len(v)


@given(short, nonempty)
def test_canonical_form_is_idempotent(u, v):
    w = UPWord(u, v)
    again = UPWord(w.prefix, w.period)
    assert (again.prefix, again.period) == (w.prefix, w.period)


def test_suffix_examples():
    assert set(up_suffixes(UPWord("ab", "ba"))) == {
        UPWord("ab", "ba"), UPWord("b", "ba"), UPWord("", "ba"), UPWord("", "ab")}
    assert set(up_suffixes(UPWord("bb", "ba"))) == {
        UPWord("bb", "ba"), UPWord("b", "ba"), UPWord("", "ba"), UPWord("", "ab")}
    assert up_suffixes(UPWord("", "a")) == [UPWord("", "a")]
    assert set(up_suffixes(UPWord("", "ab"))) == {UPWord("", "ab"), UPWord("", "ba")}


@given(short, nonempty)
def test_suffixes_are_true_suffixes(u, v):
    w = UPWord(u, v)
    sufs = up_suffixes(w)
    assert len(sufs) <= w.length
    for s in sufs:
        n = 2 * (len(s.prefix) + len(u)) + len(s.period) * len(v)
        assert any(s.take(n) == unfold(u, v, i + n)[i:] for i in range(len(u) + len(v)))


@given(short, nonempty, st.integers(0, 8))
def test_drop_and_prepend(u, v, k):
    w = UPWord(u, v)
    assert w.drop(k).prepend(w.take(k)) == w


def test_sample_rejects_conflicts():
    t = Sample([("a(b)", 1)])
    t.add(UPWord("a", "bb"), True)
    assert len(t) == 1
    with pytest.raises(InconsistentSample):
        t.add("ab(b)", 0)


def test_sample_length_and_flip():
    t = Sample([("a(b)", 1), ("(ab)", 0)])
    assert t.length == 4
    assert t.flipped()[UPWord("", "ab")] is True
    assert set(t.positives) == {UPWord("a", "b")}
