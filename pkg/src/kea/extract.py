"""Training-instance construction and ranked keyphrase extraction."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from kea.corpus import DfModel
from kea.features import FeatureVector, compute_features
from kea.model import NbModel, TrainingInstance
from kea.text import (
    DEFAULT_MAX_LENGTH,
    CandidatePhrase,
    Document,
    StopwordList,
    canonical_surface,
    generate_candidates,
    phrase_stem_key,
)


@dataclass(frozen=True)
class ScoredCandidate:
    candidate: CandidatePhrase
    features: FeatureVector
    levels: tuple[int, int]
    probability: float


@dataclass(frozen=True)
class Keyphrase:
    phrase: str
    stem_key: str
    probability: float
    tfidf: float


@dataclass(frozen=True)
class ExtractionResult:
    ranked: tuple[Keyphrase, ...]

    def __len__(self) -> int:
        return len(self.ranked)

    def __iter__(self):
        return iter(self.ranked)

    @property
    def stem_keys(self) -> list[str]:
        return [k.stem_key for k in self.ranked]

    @property
    def phrases(self) -> list[str]:
        return [k.phrase for k in self.ranked]


def author_stem_keys(phrases: Iterable[str]) -> set[str]:
    return {key for key in map(phrase_stem_key, phrases) if key}


def make_training_instances(
    doc: Document,
    author_keyphrases: Iterable[str],
    df_model: DfModel,
    stopwords: StopwordList,
    max_length: int = DEFAULT_MAX_LENGTH,
    doc_in_corpus: bool = False,
) -> list[TrainingInstance]:
    """Labeled feature vectors for the candidates that occur more than once."""
    if doc.token_count == 0:
        return []
    positives = author_stem_keys(author_keyphrases)
    instances = []
    for cand in generate_candidates(doc, stopwords, max_length):
        if cand.freq < 2:
            continue
        f = compute_features(cand, doc, df_model, doc_in_corpus)
        instances.append(TrainingInstance(f.tfidf, f.first_occ, cand.stem_key in positives))
    return instances


def score_candidates(
    doc: Document,
    df_model: DfModel,
    model: NbModel,
    stopwords: StopwordList,
    max_length: int = DEFAULT_MAX_LENGTH,
    doc_in_corpus: bool = False,
) -> list[ScoredCandidate]:
    """Score every candidate of ``doc``, best first.

    Order: probability, then raw TF x IDF, then earlier first occurrence,
    then stem key.
    """
    if doc.token_count == 0:
        return []
    scored = []
    for cand in generate_candidates(doc, stopwords, max_length):
        f = compute_features(cand, doc, df_model, doc_in_corpus)
        levels = model.levels(f)
        scored.append(ScoredCandidate(cand, f, levels, model.probability_of_levels(levels)))
    scored.sort(key=lambda s: (-s.probability, -s.features.tfidf, s.candidate.first_token_index, s.candidate.stem_key))
    return scored


def is_subphrase(words: tuple[str, ...], other: tuple[str, ...]) -> bool:
    """True iff ``words`` occurs as a contiguous run inside ``other``."""
    n = len(words)
    if n >= len(other):
        return False
    return any(other[i : i + n] == words for i in range(len(other) - n + 1))


def select_keyphrases(ranked: Iterable[ScoredCandidate], r: int) -> ExtractionResult:
    """Drop subphrases of already selected phrases and keep the top ``r``."""
    if r < 1:
        raise ValueError("r must be at least 1")
    kept: list[ScoredCandidate] = []
    for s in ranked:
        words = s.candidate.words
        if any(is_subphrase(words, k.candidate.words) for k in kept):
            continue
        kept.append(s)
        if len(kept) == r:
            break
    return ExtractionResult(
        tuple(
            Keyphrase(canonical_surface(s.candidate), s.candidate.stem_key, s.probability, s.features.tfidf)
            for s in kept
        )
    )


def extract(
    doc: Document,
    df_model: DfModel,
    model: NbModel,
    r: int,
    stopwords: StopwordList,
    max_length: int = DEFAULT_MAX_LENGTH,
    doc_in_corpus: bool = False,
) -> ExtractionResult:
    """Return up to ``r`` keyphrases for ``doc`` in rank order."""
    scored = score_candidates(doc, df_model, model, stopwords, max_length, doc_in_corpus)
    return select_keyphrases(scored, r)
