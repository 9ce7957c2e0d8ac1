"""``kea`` command line: build-df, train, extract, evaluate and sweep."""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Sequence

from kea.corpus import build_df_model, load_df_model, read_documents, save_df_model
from kea.errors import KeaError
from kea.evaluate import (
    DEFAULT_CUTOFFS,
    LabeledDocument,
    SweepSettings,
    evaluate,
    format_tsv,
    report_rows,
    run_sweep,
    train_model,
)
from kea.extract import extract
from kea.model import load_model, save_model
from kea.text import DEFAULT_MAX_LENGTH, clean_text, load_stopwords

log = logging.getLogger("kea")

DOC_SUFFIX = ".txt"
KEY_SUFFIX = ".key"


class UsageError(KeaError):
    pass


def _cutoffs(text: str) -> tuple[int, ...]:
    try:
        values = tuple(int(v) for v in text.replace(",", " ").split())
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad cutoff list {text!r}") from None
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError("cutoffs must be positive integers")
    return values


def expand_inputs(inputs: Sequence[str], key_suffix: str = KEY_SUFFIX) -> list[Path]:
    """Files named directly, plus ``*.txt`` files inside named directories."""
    paths: list[Path] = []
    for item in inputs:
        p = Path(item)
        if p.is_dir():
            paths.extend(sorted(f for f in p.glob(f"*{DOC_SUFFIX}") if f.is_file()))
        elif any(ch in item for ch in "*?["):
            paths.extend(sorted(Path().glob(item)))
        else:
            paths.append(p)
    return [p for p in paths if not p.name.endswith(key_suffix)]


def read_keyphrases(path: Path) -> list[str]:
    phrases = []
    for line in path.read_text("utf-8", errors="replace").splitlines():
        line = line.strip()
        if line and not line.startswith("#"):
            phrases.append(line)
    return phrases


def load_labeled(directory: str | Path, key_suffix: str = KEY_SUFFIX) -> list[LabeledDocument]:
    """Pair each ``name.txt`` with ``name<key_suffix>``; unpaired texts are skipped."""
    directory = Path(directory)
    if not directory.is_dir():
        raise UsageError(f"not a directory: {directory}")
    labeled = []
    for text_path in sorted(directory.glob(f"*{DOC_SUFFIX}")):
        key_path = text_path.with_name(text_path.name[: -len(DOC_SUFFIX)] + key_suffix)
        if not key_path.is_file():
            log.warning("no keyphrase file for %s; skipped", text_path)
            continue
        try:
            raw = text_path.read_text("utf-8", errors="replace")
            phrases = read_keyphrases(key_path)
        except OSError as exc:
            log.warning("skipping %s: %s", text_path, exc)
            continue
        labeled.append(LabeledDocument(clean_text(raw, source_id=str(text_path)), tuple(phrases)))
    return labeled


def cmd_build_df(args) -> int:
    stopwords = load_stopwords(args.stopwords)
    docs = read_documents(expand_inputs(args.inputs))
    if not docs:
        raise UsageError("no input documents")
    model = build_df_model(docs, stopwords, args.max_length)
    save_df_model(model, args.output)
    print(f"{args.output}: {model.num_docs} documents, {len(model.df)} phrases")
    return 0


def cmd_train(args) -> int:
    stopwords = load_stopwords(args.stopwords)
    df_model = load_df_model(args.df)
    docs = load_labeled(args.doc_dir, args.key_suffix)
    if not docs:
        raise UsageError("no usable training documents (text files with keyphrase files)")
    model = train_model(docs, df_model, stopwords, args.max_length, args.in_corpus)
    save_model(model, args.output)
    levels = ", ".join(f"{t.name} {t.discretization.num_levels}" for t in model.tables)
    print(f"{args.output}: Y={model.y_count} N={model.n_count} levels: {levels}")
    return 0


def cmd_extract(args) -> int:
    stopwords = load_stopwords(args.stopwords)
    df_model = load_df_model(args.df)
    model = load_model(args.model)
    paths = expand_inputs(args.inputs)
    if not paths:
        raise UsageError("no input documents")
    for path in paths:
        doc = clean_text(path.read_text("utf-8", errors="replace"), source_id=str(path))
        result = extract(doc, df_model, model, args.count, stopwords, args.max_length, args.in_corpus)
        if args.scores:
            lines = [f"{k.probability:.4f}\t{k.tfidf:.6g}\t{k.phrase}" for k in result]
        else:
            lines = [k.phrase for k in result]
        if args.write:
            target = path.with_suffix(".kea")
            with open(target, "w", encoding="utf-8", newline="\n") as fh:
                fh.write("".join(line + "\n" for line in lines))
        else:
            sys.stdout.write(f"== {path.name}\n" + "".join(line + "\n" for line in lines))
    return 0


def _write_report(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_evaluate(args) -> int:
    stopwords = load_stopwords(args.stopwords)
    df_model = load_df_model(args.df)
    model = load_model(args.model)
    docs = load_labeled(args.test_dir, args.key_suffix)
    if not docs:
        raise UsageError("no usable test documents")
    report = evaluate(docs, model, df_model, args.cutoffs, stopwords, args.max_length, args.in_corpus)
    _write_report(format_tsv(report_rows(report)), args.output)
    return 0


# sweep configuration ----------------------------------------------------------

_SWEEP_KEYS = {
    "dimension", "points", "train_dir", "test_dir", "df_dir", "key_suffix", "cutoffs",
    "seed", "max_length", "stopwords", "training_size", "df_size", "truncation",
    "resamples", "in_corpus", "output",
}
_BOOL = {"true": True, "yes": True, "1": True, "false": False, "no": False, "0": False}


def parse_sweep_config(text: str, base: Path = Path(".")) -> dict:
    """Parse ``key = value`` lines; ``#`` starts a comment."""
    raw = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        key, eq, value = line.partition("=")
        key, value = key.strip(), value.strip()
        if not eq:
            raise UsageError(f"sweep config line {lineno}: expected 'key = value'")
        if key not in _SWEEP_KEYS:
            raise UsageError(f"sweep config line {lineno}: unknown key {key!r}")
        raw[key] = value
    for required in ("dimension", "points", "train_dir", "test_dir"):
        if required not in raw:
            raise UsageError(f"sweep config: missing key {required!r}")

    def path(key):
        return base / raw[key] if key in raw else None

    try:
        settings = SweepSettings(
            dimension=raw["dimension"],
            points=tuple(float(v) for v in raw["points"].replace(",", " ").split()),
            cutoffs=_cutoffs(raw["cutoffs"]) if "cutoffs" in raw else DEFAULT_CUTOFFS,
            seed=int(raw.get("seed", 0)),
            max_length=int(raw.get("max_length", DEFAULT_MAX_LENGTH)),
            training_size=int(raw["training_size"]) if "training_size" in raw else None,
            df_size=int(raw["df_size"]) if "df_size" in raw else None,
            truncation=float(raw.get("truncation", 1.0)),
            resamples=int(raw.get("resamples", 1)),
            doc_in_corpus=_BOOL[raw.get("in_corpus", "false").lower()],
        )
    except (ValueError, KeyError, argparse.ArgumentTypeError) as exc:
        raise UsageError(f"sweep config: {exc}") from None
    return {
        "settings": settings,
        "train_dir": path("train_dir"),
        "test_dir": path("test_dir"),
        "df_dir": path("df_dir"),
        "key_suffix": raw.get("key_suffix", KEY_SUFFIX),
        "stopwords": path("stopwords"),
        "output": path("output"),
    }


def cmd_sweep(args) -> int:
    config_path = Path(args.config)
    config = parse_sweep_config(config_path.read_text("utf-8"), config_path.parent)
    stopwords = load_stopwords(config["stopwords"] or args.stopwords)
    train_pool = load_labeled(config["train_dir"], config["key_suffix"])
    test_set = load_labeled(config["test_dir"], config["key_suffix"])
    if config["df_dir"] is not None:
        df_pool = read_documents(expand_inputs([str(config["df_dir"])], config["key_suffix"]))
    else:
        df_pool = [item.doc for item in train_pool]
    if not test_set:
        raise UsageError("no usable test documents")
    if args.seed is not None:
        config["settings"].seed = args.seed
    rows = run_sweep(config["settings"], train_pool, test_set, df_pool, stopwords)
    output = args.output or config["output"]
    _write_report(format_tsv(rows), str(output) if output else None)
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--max-length", type=int, default=DEFAULT_MAX_LENGTH, help="longest candidate phrase in words")
    common.add_argument("--stopwords", help="stopword file (default: $KEA_STOPWORDS or the bundled list)")
    common.add_argument("--in-corpus", action="store_true", help="documents are part of the df corpus")
    common.add_argument("--key-suffix", default=KEY_SUFFIX, help="suffix of keyphrase files")
    common.add_argument("--seed", type=int, default=None, help="random seed (overrides a sweep file's seed)")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="kea", description="Keyphrase extraction with a Naive Bayes model.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("build-df", parents=[common], help="build a document-frequency file")
    p.add_argument("inputs", nargs="+", help="text files or directories of *.txt files")
    p.add_argument("-o", "--output", required=True)
    p.set_defaults(func=cmd_build_df)

    p = sub.add_parser("train", parents=[common], help="train a model from documents with keyphrases")
    p.add_argument("doc_dir")
    p.add_argument("--df", required=True)
    p.add_argument("-o", "--output", "--model", dest="output", required=True)
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("extract", parents=[common], help="extract keyphrases from documents")
    p.add_argument("inputs", nargs="+")
    p.add_argument("--df", required=True)
    p.add_argument("--model", required=True)
    p.add_argument("-r", "--count", type=int, default=10, help="keyphrases per document")
    p.add_argument("--scores", action="store_true", help="print probability and TF x IDF")
    p.add_argument("--write", action="store_true", help="write <doc>.kea files instead of stdout")
    p.set_defaults(func=cmd_extract)

    p = sub.add_parser("evaluate", parents=[common], help="compare extraction with author keyphrases")
    p.add_argument("test_dir")
    p.add_argument("--df", required=True)
    p.add_argument("--model", required=True)
    p.add_argument("--cutoffs", type=_cutoffs, default=DEFAULT_CUTOFFS)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("sweep", parents=[common], help="run an experiment sweep from a config file")
    p.add_argument("config")
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_sweep)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, format="kea: %(levelname)s: %(message)s")
    if getattr(args, "count", 1) < 1:
        parser.error("-r must be at least 1")
    if args.max_length < 1:
        parser.error("--max-length must be at least 1")
    try:
        return args.func(args)
    except (KeaError, OSError, ValueError) as exc:
        print(f"kea: error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
