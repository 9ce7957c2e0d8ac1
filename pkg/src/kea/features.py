"""The two candidate features: TF x IDF and relative first occurrence."""

from __future__ import annotations

import math
from dataclasses import dataclass

from kea.corpus import DfModel
from kea.errors import ConsistencyError
from kea.text import CandidatePhrase, Document


@dataclass(frozen=True)
class FeatureVector:
    tfidf: float
    first_occ: float


def tfidf_value(freq: int, size: int, df: int, num_docs: int, doc_in_corpus: bool = False) -> float:
    """``freq/size * -log2(df/num_docs)``.

    A document outside the global corpus adds one to both counts, as if it
    had been part of it.
    """
    if size <= 0:
        raise ValueError("document size must be positive")
    if not doc_in_corpus:
        df, num_docs = df + 1, num_docs + 1
    elif df < 1:
        raise ConsistencyError("document is marked in-corpus but the phrase has df = 0")
    # -log2(1) is -0.0; keep the feature at +0.0
    return freq / size * -math.log2(df / num_docs) + 0.0


def tfidf(candidate: CandidatePhrase, doc: Document, df_model: DfModel, doc_in_corpus: bool = False) -> float:
    return tfidf_value(candidate.freq, doc.token_count, df_model[candidate.stem_key], df_model.num_docs, doc_in_corpus)


def first_occurrence(candidate: CandidatePhrase, doc: Document) -> float:
    """Fraction of the document's words that precede the phrase."""
    if doc.token_count <= 0:
        raise ValueError("document is empty")
    return candidate.first_token_index / doc.token_count


def compute_features(candidate: CandidatePhrase, doc: Document, df_model: DfModel, doc_in_corpus: bool = False) -> FeatureVector:
    return FeatureVector(tfidf(candidate, doc, df_model, doc_in_corpus), first_occurrence(candidate, doc))
