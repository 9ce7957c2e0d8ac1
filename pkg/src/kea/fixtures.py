"""Bundled reference data: the sample model and its worked example."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from kea.model import NbModel, loads_model


@dataclass(frozen=True)
class WorkedExample:
    freq: int
    size: int
    first: int
    df: int
    num_docs: int
    doc_in_corpus: bool
    tfidf: float
    first_occ: float
    levels: tuple[int, int]
    p: float


def _read(name: str) -> str:
    return resources.files("kea.data").joinpath(name).read_text("utf-8")


def _load_table2() -> NbModel:
    return loads_model(_read("table2.model"), path="table2.model")


def _load_example3() -> WorkedExample:
    fields = {}
    for line in _read("example3.txt").splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            key, _, value = line.partition("=")
            fields[key.strip()] = value.strip()
    return WorkedExample(
        freq=int(fields["freq"]),
        size=int(fields["size"]),
        first=int(fields["first"]),
        df=int(fields["df"]),
        num_docs=int(fields["num_docs"]),
        doc_in_corpus=fields["doc_in_corpus"] == "true",
        tfidf=float(fields["tfidf"]),
        first_occ=float(fields["first_occ"]),
        levels=tuple(int(v) for v in fields["levels"].split()),
        p=float(fields["p"]),
    )


_FIXTURES = {"table2": _load_table2, "example3": _load_example3}


def fixture_names() -> list[str]:
    return sorted(_FIXTURES)


def load_fixture(name: str):
    """Load a bundled fixture by name ("table2" or "example3")."""
    try:
        loader = _FIXTURES[name]
    except KeyError:
        raise KeyError(f"unknown fixture {name!r}; available: {', '.join(fixture_names())}") from None
    return loader()


def model_text(name: str = "table2") -> str:
    """Raw bytes of a bundled model file, for format-regression checks."""
    if name != "table2":
        raise KeyError(f"no model file for fixture {name!r}")
    return _read("table2.model")
