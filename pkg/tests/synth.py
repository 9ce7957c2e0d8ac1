"""Synthetic corpora with planted keyphrases."""

import random
from dataclasses import dataclass

from kea.lovins import iterated_stem
from kea.text import load_stopwords

_ONSETS = "b d f g k l m n p r t v z".split()
_VOWELS = "a e i o u".split()
_CODAS = "k m p t g d".split()
_GLUE = "the of and in to a is for with by on as".split()


@dataclass(frozen=True)
class SyntheticDoc:
    name: str
    text: str
    keyphrases: tuple[str, ...]
    planted: tuple[str, ...]


def pseudo_words(rng, count, taken_stems=None):
    """``count`` pronounceable non-words with pairwise distinct stems."""
    stopwords = load_stopwords()
    taken = set() if taken_stems is None else taken_stems
    words = []
    while len(words) < count:
        syllables = rng.randint(2, 3)
        w = "".join(rng.choice(_ONSETS) + rng.choice(_VOWELS) for _ in range(syllables)) + rng.choice(_CODAS)
        stem = iterated_stem(w)
        if stem in taken or w in stopwords:
            continue
        taken.add(stem)
        words.append(w)
    return words


def make_corpus(n_docs=50, seed=7, n_sentences=45, planted_per_doc=3, repeats=(4, 6), early=0.35):
    rng = random.Random(seed)
    taken = set()
    filler = pseudo_words(rng, 300, taken)
    topic = pseudo_words(rng, 60, taken)
    spare = pseudo_words(rng, 40, taken)
    docs = []
    for d in range(n_docs):
        sentences = []
        for _ in range(n_sentences):
            sentence = []
            for _ in range(rng.randint(6, 12)):
                sentence.append(rng.choice(_GLUE) if rng.random() < 0.35 else rng.choice(filler))
            sentences.append(sentence)
        words = rng.sample(topic, 2 * planted_per_doc)
        planted = [f"{words[2 * i]} {words[2 * i + 1]}" for i in range(planted_per_doc)]
        horizon = max(6, int(early * n_sentences))
        for phrase in planted:
            for idx in rng.sample(range(horizon), rng.randint(*repeats)):
                s = sentences[idx]
                s.insert(rng.randint(0, len(s)), phrase)
        text = "\n".join(" ".join(s) + "." for s in sentences)
        keys = list(planted)
        if d % 4 == 0:
            keys.append(" ".join(rng.sample(spare, 2)))
        docs.append(SyntheticDoc(f"doc{d:03d}", text, tuple(keys), tuple(planted)))
    return docs


def write_corpus(docs, directory):
    directory.mkdir(parents=True, exist_ok=True)
    for doc in docs:
        (directory / f"{doc.name}.txt").write_text(doc.text, encoding="utf-8")
        (directory / f"{doc.name}.key").write_text("\n".join(doc.keyphrases) + "\n", encoding="utf-8")
    return directory
