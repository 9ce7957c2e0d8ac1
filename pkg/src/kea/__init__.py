"""Supervised keyphrase extraction: candidate phrases, TF x IDF and first
occurrence features, MDL discretization and a Naive Bayes ranker."""

from kea.corpus import DfModel, build_df_model, load_df_model, save_df_model
from kea.discretize import Discretization, apply_discretization, fit_discretization
from kea.evaluate import EvaluationReport, LabeledDocument, evaluate, match_count, run_sweep
from kea.extract import ExtractionResult, extract, make_training_instances
from kea.features import FeatureVector, first_occurrence, tfidf, tfidf_value
from kea.fixtures import load_fixture
from kea.lovins import iterated_stem, lovins_stem
from kea.model import NbModel, TrainingInstance, load_model, save_model, score, train
from kea.text import (
    CandidatePhrase,
    Document,
    StopwordList,
    canonical_surface,
    clean_text,
    generate_candidates,
    is_proper_name,
    load_stopwords,
)

__version__ = "0.1.0"

__all__ = [
    "CandidatePhrase",
    "DfModel",
    "Discretization",
    "Document",
    "EvaluationReport",
    "ExtractionResult",
    "FeatureVector",
    "LabeledDocument",
    "NbModel",
    "StopwordList",
    "TrainingInstance",
    "apply_discretization",
    "build_df_model",
    "canonical_surface",
    "clean_text",
    "evaluate",
    "extract",
    "first_occurrence",
    "fit_discretization",
    "generate_candidates",
    "is_proper_name",
    "iterated_stem",
    "load_df_model",
    "load_fixture",
    "load_model",
    "load_stopwords",
    "lovins_stem",
    "make_training_instances",
    "match_count",
    "run_sweep",
    "save_df_model",
    "save_model",
    "score",
    "tfidf",
    "tfidf_value",
    "train",
]
