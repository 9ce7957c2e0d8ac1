"""Naive Bayes keyphrase model over discretized features."""

from __future__ import annotations

import math
import os
from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Sequence

from kea.discretize import Discretization
from kea.errors import FormatError, TrainingError, VersionError
from kea.features import FeatureVector

NB_MAGIC = "KEA-NB"
NB_VERSION = 1
FEATURES = ("tfidf", "first_occurrence")


@dataclass(frozen=True)
class TrainingInstance:
    tfidf: float
    first_occ: float
    is_keyphrase: bool


@dataclass(frozen=True)
class FeatureTable:
    """Discretization of one feature plus P[level | class] for each class."""

    name: str
    discretization: Discretization
    yes: tuple[float, ...]
    no: tuple[float, ...]

    def __post_init__(self):
        k = self.discretization.num_levels
        for label, row in (("yes", self.yes), ("no", self.no)):
            if len(row) != k:
                raise ValueError(f"{self.name}: {label} row has {len(row)} entries for {k} levels")
            if any(not 0 < p <= 1 for p in row):
                raise ValueError(f"{self.name}: {label} probabilities must lie in (0, 1]")


@dataclass(frozen=True)
class NbModel:
    y_count: int
    n_count: int
    tables: tuple[FeatureTable, ...]

    def __post_init__(self):
        if self.y_count < 0 or self.n_count < 0 or self.y_count + self.n_count < 1:
            raise ValueError("class counts must be non-negative with a positive total")
        if tuple(t.name for t in self.tables) != FEATURES:
            raise ValueError(f"model must define features {FEATURES}")

    def table(self, name: str) -> FeatureTable:
        for t in self.tables:
            if t.name == name:
                return t
        raise KeyError(name)

    def levels(self, features: FeatureVector) -> tuple[int, int]:
        values = (features.tfidf, features.first_occ)
        return tuple(t.discretization.level(v) for t, v in zip(self.tables, values))

    def probability_of_levels(self, levels: Sequence[int]) -> float:
        total = self.y_count + self.n_count + 2
        log_yes = math.log((self.y_count + 1) / total)
        log_no = math.log((self.n_count + 1) / total)
        for t, level in zip(self.tables, levels):
            log_yes += math.log(t.yes[level - 1])
            log_no += math.log(t.no[level - 1])
        # p = yes / (yes + no) = 1 / (1 + exp(log_no - log_yes))
        diff = log_no - log_yes
        if diff > 0:
            e = math.exp(-diff)
            return e / (1.0 + e)
        return 1.0 / (1.0 + math.exp(diff))

    def score(self, features: FeatureVector) -> float:
        return self.probability_of_levels(self.levels(features))


def score(model: NbModel, features: FeatureVector) -> float:
    """Probability that a candidate with ``features`` is a keyphrase."""
    return model.score(features)


def _laplace_row(levels: Iterable[int], num_levels: int) -> tuple[float, ...]:
    counts = Counter(levels)
    total = sum(counts.values())
    return tuple((counts[i] + 1) / (total + num_levels) for i in range(1, num_levels + 1))


def train(instances: Iterable[TrainingInstance]) -> NbModel:
    """Fit per-feature discretizations and Laplace-smoothed class tables."""
    instances = list(instances)
    labels = [inst.is_keyphrase for inst in instances]
    y = sum(labels)
    n = len(labels) - y
    if y == 0 or n == 0:
        raise TrainingError(f"degenerate class distribution ({y} positive, {n} negative instances)")
    columns = {
        "tfidf": [inst.tfidf for inst in instances],
        "first_occurrence": [inst.first_occ for inst in instances],
    }
    tables = []
    for name in FEATURES:
        values = columns[name]
        if not all(math.isfinite(v) for v in values):
            raise TrainingError(f"non-finite {name} value in training data")
        disc = Discretization.fit(values, labels)
        levels = [disc.level(v) for v in values]
        yes = _laplace_row((lv for lv, lab in zip(levels, labels) if lab), disc.num_levels)
        no = _laplace_row((lv for lv, lab in zip(levels, labels) if not lab), disc.num_levels)
        tables.append(FeatureTable(name, disc, yes, no))
    return NbModel(y, n, tuple(tables))


def _fmt_prob(p: float) -> str:
    return f"{p:.10g}"


def dumps_model(model: NbModel) -> str:
    out = [f"{NB_MAGIC} {NB_VERSION}", f"classes {model.y_count} {model.n_count}"]
    for t in model.tables:
        out.append(" ".join(["feature", t.name, "cuts", *map(repr, t.discretization.cuts)]))
        out.append(" ".join(["yes", *map(_fmt_prob, t.yes)]))
        out.append(" ".join(["no", *map(_fmt_prob, t.no)]))
    return "\n".join(out) + "\n"


def _floats(fields: list[str], path, lineno: int) -> tuple[float, ...]:
    try:
        values = tuple(float(f) for f in fields)
    except ValueError as exc:
        raise FormatError(str(exc), path, lineno) from None
    if not all(math.isfinite(v) for v in values):
        raise FormatError("non-finite number", path, lineno)
    return values


def loads_model(text: str, path=None) -> NbModel:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty file", path, 1)
    header = lines[0].split(" ")
    if len(header) != 2 or header[0] != NB_MAGIC:
        raise FormatError(f"expected '{NB_MAGIC} {NB_VERSION}' header", path, 1)
    if header[1] != str(NB_VERSION):
        raise VersionError(f"unsupported model version {header[1]!r}", path, 1)
    if len(lines) < 2:
        raise FormatError("missing 'classes <Y> <N>' line", path, 2)
    parts = lines[1].split(" ")
    if len(parts) != 3 or parts[0] != "classes" or not (parts[1].isdigit() and parts[2].isdigit()):
        raise FormatError(f"bad class line {lines[1]!r}", path, 2)
    y, n = int(parts[1]), int(parts[2])

    tables = []
    i = 2
    while i < len(lines):
        lineno = i + 1
        fields = lines[i].split(" ")
        if len(fields) < 3 or fields[0] != "feature" or fields[2] != "cuts":
            raise FormatError(f"expected 'feature <name> cuts ...', got {lines[i]!r}", path, lineno)
        name = fields[1]
        cuts = _floats(fields[3:], path, lineno)
        rows = {}
        for offset, label in ((1, "yes"), (2, "no")):
            if i + offset >= len(lines):
                raise FormatError(f"missing '{label}' row for feature {name}", path, lineno + offset)
            row = lines[i + offset].split(" ")
            if row[0] != label:
                raise FormatError(f"expected '{label}' row, got {lines[i + offset]!r}", path, lineno + offset)
            rows[label] = _floats(row[1:], path, lineno + offset)
        try:
            tables.append(FeatureTable(name, Discretization(cuts), rows["yes"], rows["no"]))
        except ValueError as exc:
            raise FormatError(str(exc), path, lineno) from None
        i += 3
    try:
        return NbModel(y, n, tuple(tables))
    except ValueError as exc:
        raise FormatError(str(exc), path) from None


def save_model(model: NbModel, destination: str | os.PathLike) -> None:
    with open(destination, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_model(model))


def load_model(source: str | os.PathLike) -> NbModel:
    with open(source, encoding="utf-8", newline="") as fh:
        return loads_model(fh.read(), path=source)
