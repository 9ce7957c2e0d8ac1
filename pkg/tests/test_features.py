import math

import pytest
from hypothesis import given, strategies as st

from kea.corpus import DfModel
from kea.errors import ConsistencyError
from kea.features import first_occurrence, tfidf, tfidf_value
from kea.text import CandidatePhrase, clean_text


def test_worked_example_tfidf():
    assert tfidf_value(16, 5114, 1, 132, doc_in_corpus=False) == pytest.approx(0.0189, abs=1e-4)


def test_phrase_in_every_document_scores_zero():
    assert tfidf_value(1, 100, 50, 50, doc_in_corpus=False) == 0.0
    assert tfidf_value(1, 100, 7, 7, doc_in_corpus=True) == 0.0


def test_in_corpus_arithmetic():
    # 3/200 * log2(99/4)
    assert tfidf_value(3, 200, 4, 99, doc_in_corpus=True) == pytest.approx(0.069440, abs=1e-4)


def test_in_corpus_requires_phrase_in_corpus():
    with pytest.raises(ConsistencyError):
        tfidf_value(3, 200, 0, 10, doc_in_corpus=True)


def test_degenerate_empty_corpus():
    assert tfidf_value(5, 100, 0, 0, doc_in_corpus=False) == 0.0


def test_size_must_be_positive():
    with pytest.raises(ValueError):
        tfidf_value(1, 0, 0, 1)


def test_first_occurrence_values():
    doc = clean_text(" ".join(["w"] * 5114))
    c = CandidatePhrase("w", (("w", 1),), 1, 130, 1)
    assert first_occurrence(c, doc) == pytest.approx(0.0254, abs=1e-4)
    assert first_occurrence(CandidatePhrase("w", (("w", 1),), 1, 0, 1), doc) == 0.0
    doc200 = clean_text(" ".join(["w"] * 200))
    assert first_occurrence(CandidatePhrase("w", (("w", 1),), 1, 99, 1), doc200) == 0.495


def test_tfidf_uses_document_and_model():
    doc = clean_text("cut elimination cut elimination proof")
    c = CandidatePhrase("cut elim", (("cut elimination", 2),), 2, 0, 2)
    model = DfModel(9, {"cut elim": 2})
    assert tfidf(c, doc, model) == pytest.approx(2 / 5 * -math.log2(3 / 10))
    assert tfidf(c, doc, model, doc_in_corpus=True) == pytest.approx(2 / 5 * -math.log2(2 / 9))


counts = st.integers(1, 1000)


@given(counts, counts, st.integers(0, 500), st.integers(0, 500))
def test_rarity_monotonicity(freq, size, df, extra):
    n = df + extra + 5
    if df + 1 <= n:
        assert tfidf_value(freq, size, df, n) > tfidf_value(freq, size, df + 1, n)


@given(counts, counts, st.integers(0, 500), st.integers(0, 500))
def test_frequency_linear(freq, size, df, extra):
    n = df + extra
    one = tfidf_value(1, size, df, n)
    assert tfidf_value(freq, size, df, n) == pytest.approx(freq * one)


@given(counts, counts, st.integers(1, 10_000))
def test_unseen_phrase_is_finite_positive(freq, size, n):
    v = tfidf_value(freq, size, 0, n)
    assert math.isfinite(v) and v > 0
    assert v == pytest.approx(freq / size * -math.log2(1 / (n + 1)))


@given(st.integers(1, 5000), st.data())
def test_first_occurrence_range(size, data):
    index = data.draw(st.integers(0, size - 1))
    doc = clean_text(" ".join(["w"] * size))
    v = first_occurrence(CandidatePhrase("w", (("w", 1),), 1, index, 1), doc)
    assert 0 <= v < 1
