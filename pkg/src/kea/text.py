"""Input cleaning and candidate phrase identification."""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Iterator

from kea.lovins import iterated_stem

DEFAULT_MAX_LENGTH = 3

# apostrophes vanish without splitting the word ("don't" -> "dont")
_APOSTROPHES = "'‘’"
# punctuation and brackets that end a phrase
_BOUNDARY = set(".,;:!?\"()[]{}<>")


@dataclass(frozen=True)
class TokenLine:
    tokens: tuple[str, ...]
    start_index: int

    def __len__(self) -> int:
        return len(self.tokens)


@dataclass(frozen=True)
class Document:
    """Cleaned token lines of one text, in original capitalization.

    Positions are counted over the concatenation of all lines, so
    ``token_count`` is the document size used by the features.
    """

    lines: tuple[TokenLine, ...]
    token_count: int
    source_id: str = ""

    @classmethod
    def from_lines(cls, lines: Iterable[Iterable[str]], source_id: str = "") -> "Document":
        built = []
        position = 0
        for tokens in lines:
            tokens = tuple(tokens)
            if tokens:
                built.append(TokenLine(tokens, position))
                position += len(tokens)
        return cls(tuple(built), position, source_id)

    def tokens(self) -> Iterator[str]:
        for line in self.lines:
            yield from line.tokens

    def truncated(self, n_tokens: int) -> "Document":
        """Return the document cut down to its first ``n_tokens`` tokens."""
        kept = []
        remaining = n_tokens
        for line in self.lines:
            if remaining <= 0:
                break
            kept.append(line.tokens[:remaining])
            remaining -= len(line.tokens)
        return Document.from_lines(kept, self.source_id)


@dataclass(frozen=True)
class CandidatePhrase:
    stem_key: str
    # (surface form, count) pairs in order of first appearance
    surface_forms: tuple[tuple[str, int], ...]
    freq: int
    first_token_index: int
    length_words: int

    @property
    def words(self) -> tuple[str, ...]:
        return tuple(self.stem_key.split(" "))


@dataclass(frozen=True)
class StopwordList:
    words: frozenset[str] = field(default_factory=frozenset)

    def __post_init__(self):
        if not self.words:
            raise ValueError("stopword list is empty")
        object.__setattr__(self, "words", frozenset(w.lower() for w in self.words))

    def __contains__(self, word: str) -> bool:
        return word.lower() in self.words

    def __len__(self) -> int:
        return len(self.words)


def parse_stopwords(text: str) -> StopwordList:
    words = set()
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            words.add(line.lower())
    return StopwordList(frozenset(words))


def load_stopwords(path: str | os.PathLike | None = None) -> StopwordList:
    """Load a stopword file, falling back to ``$KEA_STOPWORDS`` and then
    the bundled default list."""
    if path is None:
        path = os.environ.get("KEA_STOPWORDS") or None
    if path is None:
        text = resources.files("kea.data").joinpath("stopwords.txt").read_text("utf-8")
    else:
        text = Path(path).read_text("utf-8")
    return parse_stopwords(text)


def _is_alnum(ch: str) -> bool:
    return ch.isascii() and ch.isalnum()


def _raw_lines(raw: str) -> list[list[str]]:
    """Split text into lines of alphanumeric tokens at phrase boundaries."""
    text = "".join(ch for ch in raw if ch not in _APOSTROPHES)
    lines: list[list[str]] = [[]]
    token: list[str] = []

    def end_token():
        if token:
            lines[-1].append("".join(token))
            token.clear()

    def boundary():
        end_token()
        if lines[-1]:
            lines.append([])

    last = len(text) - 1
    for i, ch in enumerate(text):
        if _is_alnum(ch):
            token.append(ch)
        elif ch.isspace():
            end_token()
        elif ch in ".-":
            inner = 0 < i < last and _is_alnum(text[i - 1]) and _is_alnum(text[i + 1])
            if not inner:
                boundary()
            elif ch == ".":
                token.append(ch)
            else:
                end_token()
        elif ch in _BOUNDARY or not ch.isascii():
            boundary()
        else:
            # other symbols are dropped but still separate tokens
            end_token()
    end_token()
    return lines


def clean_text(raw: str, source_id: str = "") -> Document:
    """Turn raw text into a :class:`Document` of token lines.

    Punctuation, brackets, non-ASCII characters and tokens without a letter
    (numbers) end the current line. Apostrophes are deleted in place,
    hyphenated words are split into two tokens of the same line, and
    periods between alphanumerics stay inside the token ("C4.5").
    """
    lines: list[list[str]] = []
    for raw_line in _raw_lines(raw):
        current: list[str] = []
        for token in raw_line:
            if any(ch.isalpha() for ch in token):
                current.append(token)
            else:
                lines.append(current)
                current = []
        lines.append(current)
    return Document.from_lines(lines, source_id)


def phrase_stem_key(phrase: str) -> str:
    """Stem key of a free-text phrase, e.g. an author keyphrase."""
    return " ".join(iterated_stem(t) for t in clean_text(phrase).tokens())


def stem_words(words: Iterable[str]) -> str:
    return " ".join(iterated_stem(w) for w in words)


def proper_names(doc: Document) -> set[str]:
    """Case-folded words of ``doc`` that only ever appear capitalized."""
    capitalized: dict[str, bool] = {}
    for token in doc.tokens():
        key = token.lower()
        capitalized[key] = capitalized.get(key, True) and token[0].isupper()
    return {word for word, always in capitalized.items() if always}


def is_proper_name(word: str, doc: Document) -> bool:
    """True iff every occurrence of ``word`` in ``doc`` starts with a capital."""
    key = word.lower()
    seen = False
    for token in doc.tokens():
        if token.lower() == key:
            seen = True
            if not token[0].isupper():
                return False
    return seen


def generate_candidates(
    doc: Document,
    stopwords: StopwordList,
    max_length: int = DEFAULT_MAX_LENGTH,
) -> list[CandidatePhrase]:
    """Enumerate the candidate phrases of a document.

    Every within-line word sequence of 1..max_length words is kept unless it
    begins or ends with a stopword or is a single word that only ever
    appears capitalized. Occurrences with the same stem key are merged.
    Candidates come back in order of first appearance.
    """
    if max_length < 1:
        raise ValueError("max_length must be at least 1")
    names = proper_names(doc)
    merged: dict[str, dict] = {}
    for line in doc.lines:
        words = line.tokens
        folded = [w.lower() for w in words]
        stems = [iterated_stem(w) for w in folded]
        for i in range(len(words)):
            if folded[i] in stopwords.words:
                continue
            for n in range(1, min(max_length, len(words) - i) + 1):
                j = i + n - 1
                if folded[j] in stopwords.words:
                    continue
                if n == 1 and folded[i] in names:
                    continue
                key = " ".join(stems[i : j + 1])
                surface = " ".join(words[i : j + 1])
                entry = merged.get(key)
                if entry is None:
                    merged[key] = {"forms": {surface: 1}, "first": line.start_index + i, "n": n}
                else:
                    forms = entry["forms"]
                    forms[surface] = forms.get(surface, 0) + 1
    return [
        CandidatePhrase(
            stem_key=key,
            surface_forms=tuple(entry["forms"].items()),
            freq=sum(entry["forms"].values()),
            first_token_index=entry["first"],
            length_words=entry["n"],
        )
        for key, entry in merged.items()
    ]


def canonical_surface(candidate: CandidatePhrase) -> str:
    """Most frequent surface form; the earliest one wins a tie."""
    best, best_count = candidate.surface_forms[0]
    for form, count in candidate.surface_forms[1:]:
        if count > best_count:
            best, best_count = form, count
    return best
