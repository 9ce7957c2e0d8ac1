import random

import pytest
from hypothesis import given, settings, strategies as st

from kea.corpus import DfModel, build_df_model
from kea.discretize import Discretization
from kea.extract import extract, is_subphrase, make_training_instances, score_candidates
from kea.fixtures import load_fixture
from kea.model import FeatureTable, NbModel
from kea.text import clean_text, load_stopwords, phrase_stem_key
from synth import pseudo_words

SW = load_stopwords()
TABLE2 = load_fixture("table2")
CUT, CUT_ELIM, ELIM = (phrase_stem_key(p) for p in ("cut", "cut elimination", "elimination"))


def cut_elimination_document():
    """5114 tokens: "cut elimination" 16 times from word 130, "cut" alone 4 more times."""
    tokens = ["the"] * 5114
    for start in [130] + [1000 + 200 * i for i in range(15)]:
        tokens[start : start + 2] = ["cut", "elimination"]
    for start in (4200, 4400, 4600, 4800):
        tokens[start] = "cut"
    return clean_text(" ".join(tokens))


def cut_elimination_df():
    return DfModel(132, {CUT: 3, CUT_ELIM: 1, ELIM: 40})


def test_ranking_scenario_features():
    doc = cut_elimination_document()
    assert doc.token_count == 5114
    scored = {s.candidate.stem_key: s for s in score_candidates(doc, cut_elimination_df(), TABLE2, SW)}
    assert set(scored) == {CUT, CUT_ELIM, ELIM}
    assert scored[CUT_ELIM].features.tfidf == pytest.approx(0.0189, abs=1e-4)
    assert scored[CUT].features.tfidf == pytest.approx(20 / 5114 * 5.05528, abs=1e-4)
    assert scored[CUT].levels == scored[CUT_ELIM].levels == (4, 3)
    assert scored[CUT].probability == scored[CUT_ELIM].probability
    assert scored[ELIM].probability < scored[CUT].probability


def test_ranking_scenario_output():
    doc = cut_elimination_document()
    for r in range(1, 6):
        result = extract(doc, cut_elimination_df(), TABLE2, r, SW)
        assert ELIM not in result.stem_keys
        assert result.stem_keys == [CUT, CUT_ELIM][:r]
    assert extract(doc, cut_elimination_df(), TABLE2, 2, SW).phrases == ["cut", "cut elimination"]


def test_hyphenated_author_phrase_matches():
    doc = clean_text("We study cut elimination. Cut elimination is central. Proofs of cut elimination.")
    instances = make_training_instances(doc, ["cut-elimination"], DfModel(0), SW)
    assert sum(i.is_keyphrase for i in instances) == 1


def test_single_occurrence_pruned():
    doc = clean_text("graph sharing")
    assert make_training_instances(doc, ["graph sharing"], DfModel(0), SW) == []
    doc = clean_text("graph sharing. graph sharing")
    assert len(make_training_instances(doc, ["graph sharing"], DfModel(0), SW)) == 3


def test_planted_document_labels():
    rng = random.Random(200)
    filler = pseudo_words(rng, 160, {phrase_stem_key(w) for w in ("alpha", "beta", "gamma", "delta")})
    planted = ["alpha beta", "gamma delta"]
    chunks = [filler[i : i + 20] for i in range(0, 160, 20)]
    lines = []
    for k, chunk in enumerate(chunks):
        if k < 6:
            chunk = chunk[:10] + [planted[k % 2]] + chunk[10:]
        lines.append(" ".join(chunk))
    doc = clean_text(". ".join(lines))
    assert doc.token_count == 160 + 12
    instances = make_training_instances(doc, planted, DfModel(0), SW)
    # each planted bigram plus its two words survive pruning; everything else occurs once
    assert len(instances) == 6
    assert sum(i.is_keyphrase for i in instances) == 2
    positives = {(round(i.tfidf, 12), round(i.first_occ, 12)) for i in instances if i.is_keyphrase}
    assert len(positives) == 2


def first_occurrence_model():
    flat = FeatureTable("tfidf", Discretization(()), (1.0,), (1.0,))
    early = FeatureTable("first_occurrence", Discretization((0.5,)), (0.9, 0.1), (0.1, 0.9))
    return NbModel(1, 1, (flat, early))


def test_early_phrase_beats_late_phrase():
    tokens = ["the"] * 100
    for i in (2, 10, 20):
        tokens[i] = "alpha"
    for i in (80, 90, 98):
        tokens[i] = "omega"
    result = extract(clean_text(" ".join(tokens)), DfModel(0), first_occurrence_model(), 5, SW)
    assert result.stem_keys == [phrase_stem_key("alpha"), phrase_stem_key("omega")]
    assert [k.probability for k in result] == pytest.approx([0.9, 0.1])


def test_fewer_candidates_than_r():
    result = extract(clean_text("graph"), DfModel(0), TABLE2, 10, SW)
    assert result.phrases == ["graph"]
    assert len(extract(clean_text("the of"), DfModel(0), TABLE2, 10, SW)) == 0
    with pytest.raises(ValueError):
        extract(clean_text("graph"), DfModel(0), TABLE2, 0, SW)


def test_is_subphrase():
    assert is_subphrase(("cut",), ("cut", "elim"))
    assert is_subphrase(("elim",), ("cut", "elim"))
    assert not is_subphrase(("cut", "net"), ("cut", "elim", "net"))
    assert not is_subphrase(("cut", "elim"), ("cut", "elim"))


VOCAB = ["proof", "nets", "cut", "elimination", "the", "of", "graph", "sharing", "linear", "logic", "and"]
texts = st.lists(st.lists(st.sampled_from(VOCAB), min_size=1, max_size=10).map(" ".join), min_size=1, max_size=8).map(
    ". ".join
)
DF = build_df_model([clean_text(t) for t in ["proof nets", "linear logic", "cut elimination", "graph"]], SW)


@settings(max_examples=150)
@given(texts, st.integers(1, 12), st.integers(1, 12))
def test_extraction_properties(text, a, b):
    doc = clean_text(text)
    small, large = sorted((a, b))
    rs = extract(doc, DF, TABLE2, small, SW)
    rl = extract(doc, DF, TABLE2, large, SW)
    assert len(rs) <= small and len(rl) <= large
    assert rl.ranked[: len(rs)] == rs.ranked
    assert extract(doc, DF, TABLE2, large, SW) == rl
    for i, k in enumerate(rl):
        words = tuple(k.stem_key.split(" "))
        for earlier in rl.ranked[:i]:
            assert not is_subphrase(words, tuple(earlier.stem_key.split(" ")))
            assert (earlier.probability, earlier.tfidf) >= (k.probability, k.tfidf) or earlier.probability > k.probability
            assert earlier.probability >= k.probability
    assert len(set(rl.stem_keys)) == len(rl)
