"""Global-corpus document frequencies and their on-disk format."""

from __future__ import annotations

import logging
import os
from collections import Counter
from dataclasses import dataclass, field
from pathlib import Path
from types import MappingProxyType
from typing import Iterable, Mapping

from kea.errors import FormatError, VersionError
from kea.text import DEFAULT_MAX_LENGTH, Document, StopwordList, clean_text, generate_candidates

log = logging.getLogger(__name__)

DF_MAGIC = "KEA-DF"
DF_VERSION = 1


@dataclass(frozen=True)
class DfModel:
    num_docs: int
    df: Mapping[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if self.num_docs < 0:
            raise ValueError("num_docs must be non-negative")
        for key, count in self.df.items():
            if not 1 <= count <= self.num_docs:
                raise ValueError(f"df({key!r}) = {count} outside [1, {self.num_docs}]")
        object.__setattr__(self, "df", MappingProxyType(dict(self.df)))

    def __getitem__(self, stem_key: str) -> int:
        return self.df.get(stem_key, 0)

    def __eq__(self, other):
        if not isinstance(other, DfModel):
            return NotImplemented
        return self.num_docs == other.num_docs and dict(self.df) == dict(other.df)

    def __hash__(self):
        return hash((self.num_docs, frozenset(self.df.items())))


def build_df_model(
    corpus: Iterable[Document],
    stopwords: StopwordList,
    max_length: int = DEFAULT_MAX_LENGTH,
) -> DfModel:
    """Count, for every candidate stem key, how many documents contain it."""
    counts: Counter[str] = Counter()
    n = 0
    for doc in corpus:
        n += 1
        counts.update({c.stem_key for c in generate_candidates(doc, stopwords, max_length)})
    return DfModel(n, counts)


def read_documents(paths: Iterable[str | os.PathLike]) -> list[Document]:
    """Read and clean text files, skipping unreadable ones with a warning."""
    docs = []
    for path in paths:
        try:
            raw = Path(path).read_text("utf-8", errors="replace")
        except OSError as exc:
            log.warning("skipping unreadable document %s: %s", path, exc)
            continue
        docs.append(clean_text(raw, source_id=str(path)))
    return docs


def dumps_df_model(model: DfModel) -> str:
    out = [f"{DF_MAGIC} {DF_VERSION}", f"N {model.num_docs}"]
    out.extend(f"{model.df[key]}\t{key}" for key in sorted(model.df))
    return "\n".join(out) + "\n"


def loads_df_model(text: str, path=None) -> DfModel:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if not lines:
        raise FormatError("empty file", path, 1)
    header = lines[0].split(" ")
    if len(header) != 2 or header[0] != DF_MAGIC:
        raise FormatError(f"expected '{DF_MAGIC} {DF_VERSION}' header", path, 1)
    if header[1] != str(DF_VERSION):
        raise VersionError(f"unsupported df file version {header[1]!r}", path, 1)
    if len(lines) < 2:
        raise FormatError("missing 'N <num_docs>' line", path, 2)
    parts = lines[1].split(" ")
    if len(parts) != 2 or parts[0] != "N" or not parts[1].isdigit():
        raise FormatError(f"bad corpus size line {lines[1]!r}", path, 2)
    num_docs = int(parts[1])
    df: dict[str, int] = {}
    for lineno, line in enumerate(lines[2:], start=3):
        count, tab, key = line.partition("\t")
        if not tab or not key:
            raise FormatError(f"expected '<count>\\t<phrase>', got {line!r}", path, lineno)
        if not count.isdigit():
            raise FormatError(f"bad document count {count!r}", path, lineno)
        if key in df:
            raise FormatError(f"duplicate phrase {key!r}", path, lineno)
        value = int(count)
        if not 1 <= value <= num_docs:
            raise FormatError(f"document count {value} outside [1, {num_docs}]", path, lineno)
        df[key] = value
    return DfModel(num_docs, df)


def save_df_model(model: DfModel, destination: str | os.PathLike) -> None:
    with open(destination, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(dumps_df_model(model))


def load_df_model(source: str | os.PathLike) -> DfModel:
    with open(source, encoding="utf-8", newline="") as fh:
        return loads_df_model(fh.read(), path=source)
