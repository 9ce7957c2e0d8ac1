"""Evaluation against author keyphrases and parameter sweeps."""

from __future__ import annotations

import logging
import math
import random
import statistics
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from kea.corpus import DfModel, build_df_model
from kea.errors import TrainingError
from kea.extract import ExtractionResult, author_stem_keys, extract, make_training_instances
from kea.model import NbModel, train
from kea.text import DEFAULT_MAX_LENGTH, Document, StopwordList, generate_candidates, load_stopwords, stem_words

log = logging.getLogger(__name__)

DEFAULT_CUTOFFS = (5, 10, 15, 20)
TSV_COLUMNS = (
    "sweep_value",
    "r",
    "mean_matches",
    "sd",
    "n_docs",
    "mean_author_count",
    "mean_in_text",
    "mean_in_candidates",
)


@dataclass(frozen=True)
class LabeledDocument:
    doc: Document
    keyphrases: tuple[str, ...]


def match_count(extracted: ExtractionResult | Iterable[str], author_keyphrases: Iterable[str]) -> int:
    """Number of extracted phrases whose stem key equals a stemmed author phrase.

    ``extracted`` may be an :class:`ExtractionResult` or a sequence of stem
    keys. Each author phrase is matched at most once.
    """
    keys = extracted.stem_keys if isinstance(extracted, ExtractionResult) else list(extracted)
    remaining = author_stem_keys(author_keyphrases)
    matches = 0
    for key in keys:
        if key in remaining:
            remaining.discard(key)
            matches += 1
    return matches


def _contains_run(stream: Sequence[str], words: Sequence[str]) -> bool:
    n = len(words)
    first = words[0]
    return any(stream[i] == first and list(stream[i : i + n]) == list(words) for i in range(len(stream) - n + 1))


@dataclass(frozen=True)
class DocumentDiagnostics:
    source_id: str
    author_count: int
    in_text: int
    in_candidates: int
    matches: dict[int, int]


@dataclass
class EvaluationReport:
    cutoffs: tuple[int, ...]
    documents: list[DocumentDiagnostics] = field(default_factory=list)

    @property
    def n_docs(self) -> int:
        return len(self.documents)

    def matches(self, r: int) -> list[int]:
        return [d.matches[r] for d in self.documents]

    def mean_matches(self, r: int) -> float:
        return statistics.fmean(self.matches(r))

    def sd(self, r: int) -> float:
        values = self.matches(r)
        return statistics.stdev(values) if len(values) > 1 else 0.0

    def precision(self, r: int) -> float:
        return self.mean_matches(r) / r

    def confidence_halfwidth(self, r: int, level: float = 0.95) -> float:
        """Normal-approximation half-width of a confidence interval on the mean."""
        return normal_halfwidth(self.matches(r), level)

    def mean_author_count(self) -> float:
        return statistics.fmean(d.author_count for d in self.documents)

    def mean_in_text(self) -> float:
        return statistics.fmean(d.in_text for d in self.documents)

    def mean_in_candidates(self) -> float:
        return statistics.fmean(d.in_candidates for d in self.documents)


def normal_halfwidth(values: Sequence[float], level: float = 0.95) -> float:
    if len(values) < 2:
        return 0.0
    z = statistics.NormalDist().inv_cdf((1 + level) / 2)
    return z * statistics.stdev(values) / math.sqrt(len(values))


def evaluate_document(
    doc: Document,
    author_keyphrases: Iterable[str],
    model: NbModel,
    df_model: DfModel,
    cutoffs: Sequence[int],
    stopwords: StopwordList,
    max_length: int = DEFAULT_MAX_LENGTH,
    doc_in_corpus: bool = False,
) -> DocumentDiagnostics:
    authors = author_stem_keys(author_keyphrases)
    stream = [stem_words([t]) for t in doc.tokens()]
    in_text = sum(1 for key in authors if _contains_run(stream, key.split(" ")))
    candidate_keys = {c.stem_key for c in generate_candidates(doc, stopwords, max_length)}
    in_candidates = len(authors & candidate_keys)
    matches = {}
    if doc.token_count:
        # extraction at smaller cutoffs is a prefix of the largest one
        full = extract(doc, df_model, model, max(cutoffs), stopwords, max_length, doc_in_corpus)
        for r in cutoffs:
            matches[r] = match_count(full.stem_keys[:r], author_keyphrases)
    else:
        matches = {r: 0 for r in cutoffs}
    return DocumentDiagnostics(doc.source_id, len(authors), in_text, in_candidates, matches)


def evaluate(
    test_docs: Iterable[LabeledDocument | tuple[Document, Sequence[str]]],
    model: NbModel,
    df_model: DfModel,
    cutoffs: Sequence[int] = DEFAULT_CUTOFFS,
    stopwords: StopwordList | None = None,
    max_length: int = DEFAULT_MAX_LENGTH,
    doc_in_corpus: bool = False,
) -> EvaluationReport:
    """Extract from every test document and compare with its author keyphrases."""
    if stopwords is None:
        stopwords = load_stopwords()
    cutoffs = tuple(sorted(set(cutoffs)))
    if not cutoffs or cutoffs[0] < 1:
        raise ValueError("cutoffs must be positive")
    report = EvaluationReport(cutoffs)
    for item in test_docs:
        doc, phrases = (item.doc, item.keyphrases) if isinstance(item, LabeledDocument) else item
        if not author_stem_keys(phrases):
            log.warning("document %s has no author keyphrases; excluded", doc.source_id or "<unnamed>")
            continue
        report.documents.append(
            evaluate_document(doc, phrases, model, df_model, cutoffs, stopwords, max_length, doc_in_corpus)
        )
    if not report.documents:
        raise ValueError("no test documents with author keyphrases")
    return report


# sweeps ---------------------------------------------------------------------

DIMENSIONS = ("training_size", "df_size", "truncation")


@dataclass
class SweepSettings:
    dimension: str
    points: tuple[float, ...]
    cutoffs: tuple[int, ...] = DEFAULT_CUTOFFS
    seed: int = 0
    max_length: int = DEFAULT_MAX_LENGTH
    training_size: int | None = None
    df_size: int | None = None
    truncation: float = 1.0
    resamples: int = 1
    doc_in_corpus: bool = False

    def __post_init__(self):
        if self.dimension not in DIMENSIONS:
            raise ValueError(f"unknown sweep dimension {self.dimension!r}; expected one of {', '.join(DIMENSIONS)}")
        if self.resamples < 1:
            raise ValueError("resamples must be at least 1")


@dataclass(frozen=True)
class SweepRow:
    sweep_value: str
    r: int
    mean_matches: float | None = None
    sd: float | None = None
    n_docs: int | None = None
    mean_author_count: float | None = None
    mean_in_text: float | None = None
    mean_in_candidates: float | None = None

    @property
    def available(self) -> bool:
        return self.mean_matches is not None


def truncate(doc: Document, fraction: float) -> Document:
    """Keep the first ``fraction`` of a document's tokens (at least one)."""
    if not 0 < fraction <= 1:
        raise ValueError("truncation fraction must lie in (0, 1]")
    if fraction == 1:
        return doc
    return doc.truncated(max(1, math.ceil(fraction * doc.token_count)))


def train_model(
    train_docs: Iterable[LabeledDocument],
    df_model: DfModel,
    stopwords: StopwordList,
    max_length: int = DEFAULT_MAX_LENGTH,
    doc_in_corpus: bool = False,
) -> NbModel:
    instances = []
    for item in train_docs:
        instances.extend(
            make_training_instances(item.doc, item.keyphrases, df_model, stopwords, max_length, doc_in_corpus)
        )
    return train(instances)


def _sample(pool: Sequence, size: int | None, rng: random.Random) -> list | None:
    if size is None:
        return list(pool)
    if size < 0 or size > len(pool):
        return None
    return rng.sample(list(pool), size)


def _format_point(value: float) -> str:
    return str(int(value)) if float(value).is_integer() else repr(float(value))


def run_sweep(
    settings: SweepSettings,
    train_pool: Sequence[LabeledDocument],
    test_set: Sequence[LabeledDocument],
    df_pool: Sequence[Document],
    stopwords: StopwordList,
) -> list[SweepRow]:
    """Train and evaluate once per sweep point (per resample).

    All sampling is driven by ``settings.seed``, so rows are reproducible.
    Points that cannot be run (too few documents, a one-class training set)
    yield rows without values.
    """
    rows: list[SweepRow] = []
    for point in settings.points:
        label = _format_point(point)
        runs = []
        for rep in range(settings.resamples):
            rng = random.Random(f"{settings.seed}/{settings.dimension}/{label}/{rep}")
            report = _run_point(settings, point, rng, train_pool, test_set, df_pool, stopwords)
            if report is None:
                runs = []
                break
            runs.append(report)
        if not runs:
            log.warning("sweep point %s=%s unavailable", settings.dimension, label)
            rows.extend(SweepRow(label, r) for r in settings.cutoffs)
            continue
        for r in settings.cutoffs:
            means = [rep.mean_matches(r) for rep in runs]
            sd = statistics.stdev(means) if len(runs) > 1 else runs[0].sd(r)
            rows.append(
                SweepRow(
                    label,
                    r,
                    statistics.fmean(means),
                    sd,
                    runs[0].n_docs,
                    statistics.fmean(rep.mean_author_count() for rep in runs),
                    statistics.fmean(rep.mean_in_text() for rep in runs),
                    statistics.fmean(rep.mean_in_candidates() for rep in runs),
                )
            )
    return rows


def _run_point(settings, point, rng, train_pool, test_set, df_pool, stopwords) -> EvaluationReport | None:
    training_size = settings.training_size
    df_size = settings.df_size
    fraction = settings.truncation
    if settings.dimension == "training_size":
        training_size = int(point)
        if training_size < 1:
            return None
    elif settings.dimension == "df_size":
        df_size = int(point)
    else:
        fraction = float(point)
        if not 0 < fraction <= 1:
            return None

    train_docs = _sample(train_pool, training_size, rng)
    df_docs = _sample(df_pool, df_size, rng)
    if not train_docs or df_docs is None or not test_set:
        return None
    df_model = build_df_model(df_docs, stopwords, settings.max_length)
    try:
        model = train_model(train_docs, df_model, stopwords, settings.max_length, settings.doc_in_corpus)
    except TrainingError as exc:
        log.warning("training failed: %s", exc)
        return None
    tests = [LabeledDocument(truncate(t.doc, fraction), t.keyphrases) for t in test_set]
    try:
        return evaluate(tests, model, df_model, settings.cutoffs, stopwords, settings.max_length, settings.doc_in_corpus)
    except ValueError as exc:
        log.warning("evaluation failed: %s", exc)
        return None


def report_rows(report: EvaluationReport, sweep_value: str = "-") -> list[SweepRow]:
    return [
        SweepRow(
            sweep_value,
            r,
            report.mean_matches(r),
            report.sd(r),
            report.n_docs,
            report.mean_author_count(),
            report.mean_in_text(),
            report.mean_in_candidates(),
        )
        for r in report.cutoffs
    ]


def format_tsv(rows: Iterable[SweepRow]) -> str:
    out = ["\t".join(TSV_COLUMNS)]
    for row in rows:
        if not row.available:
            out.append("\t".join([row.sweep_value, str(row.r)] + ["NA"] * (len(TSV_COLUMNS) - 2)))
            continue
        out.append(
            "\t".join(
                [
                    row.sweep_value,
                    str(row.r),
                    f"{row.mean_matches:.4f}",
                    f"{row.sd:.4f}",
                    str(row.n_docs),
                    f"{row.mean_author_count:.4f}",
                    f"{row.mean_in_text:.4f}",
                    f"{row.mean_in_candidates:.4f}",
                ]
            )
        )
    return "\n".join(out) + "\n"
