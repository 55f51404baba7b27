"""Corpus ingestion and the binary document / lexical-entity model.

A document is a short text; its lexical entities (ELs) are the tokens
produced by :class:`Tokenizer`.  A collection of documents is represented
as a binary presence/absence matrix: cell (j, i) is 1 iff dictionary
entry i occurs in document j.  Term frequency beyond presence is
deliberately discarded, which rules out real-valued weightings such as
tf-idf or cosine downstream.
"""

from __future__ import annotations

import json
import re
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable, Sequence

import numpy as np

from .errors import DataError

DEF_TYPES = ("analytic", "extensional", "functional")

CORPUS_FORMATS = ("jsonl", "plain_lines")

# A token is a maximal run of Unicode letters or digits; everything else
# (punctuation, symbols, underscore) separates tokens.
_WORD_RE = re.compile(r"[^\W_]+", re.UNICODE)


@dataclass(frozen=True)
class Document:
    """One short text with optional metadata.

    ``term`` is the word the text defines, ``def_type`` one of
    ``analytic``/``extensional``/``functional``, ``gold_sense`` an
    acception label used only for evaluation.
    """

    id: str
    text: str
    term: str | None = None
    def_type: str | None = None
    gold_sense: str | None = None

    def __post_init__(self) -> None:
        if not isinstance(self.id, str) or not self.id:
            raise DataError("document id must be a non-empty string")
        if not isinstance(self.text, str) or not self.text.strip():
            raise DataError(f"document {self.id!r} has empty text")
        if self.def_type is not None and self.def_type not in DEF_TYPES:
            raise DataError(
                f"document {self.id!r}: def_type must be one of {DEF_TYPES}, "
                f"got {self.def_type!r}"
            )


@dataclass(frozen=True)
class Tokenizer:
    """Splits raw text into lexical entities.

    The rule is deliberately simple and reproducible: Unicode lowercase,
    then split on every character that is neither a letter nor a digit.
    Diacritics are preserved (the corpora are Spanish).  Optionally,
    known multi-word entities are merged into single tokens and stopwords
    are removed.  No stemming, no lemmatization.
    """

    stopwords: frozenset[str] = frozenset()
    phrases: tuple[tuple[str, ...], ...] = ()
    drop_term: bool = False

    def __call__(self, text: str) -> list[str]:
        words = _WORD_RE.findall(text.lower())
        if self.phrases:
            words = _merge_phrases(words, self.phrases)
        if self.stopwords:
            words = [w for w in words if w not in self.stopwords]
        return words

    def doc_tokens(self, doc: Document) -> list[str]:
        """Tokens of one document; honors ``drop_term`` for its own term."""
        tokens = self(doc.text)
        if self.drop_term and doc.term:
            own = set(self(doc.term))
            tokens = [t for t in tokens if t not in own]
        return tokens


def _merge_phrases(
    words: list[str], phrases: Sequence[tuple[str, ...]]
) -> list[str]:
    """Greedy left-to-right, longest-match merge of listed word n-grams."""
    by_first: dict[str, list[tuple[str, ...]]] = {}
    for phrase in phrases:
        if phrase:
            by_first.setdefault(phrase[0], []).append(phrase)
    for options in by_first.values():
        options.sort(key=len, reverse=True)
    out: list[str] = []
    i = 0
    while i < len(words):
        merged = None
        for phrase in by_first.get(words[i], ()):
            if tuple(words[i : i + len(phrase)]) == phrase:
                merged = phrase
                break
        if merged is not None:
            out.append(" ".join(merged))
            i += len(merged)
        else:
            out.append(words[i])
            i += 1
    return out


def tokenize(
    text: str,
    stopwords: Iterable[str] | None = None,
    phrases: Iterable[str] | None = None,
) -> list[str]:
    """Tokenize one text (convenience wrapper around :class:`Tokenizer`).

    ``phrases`` are multi-word entities given as plain strings; each is
    normalized by the same rule before matching.
    """
    tok = Tokenizer(
        stopwords=frozenset(w.lower() for w in stopwords) if stopwords else frozenset(),
        phrases=tuple(tuple(_WORD_RE.findall(p.lower())) for p in phrases)
        if phrases
        else (),
    )
    return tok(text)


def load_stopwords(path: str | Path) -> frozenset[str]:
    """Stopword file: UTF-8, one token per line."""
    out = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip().lower()
        if word:
            out.add(word)
    return frozenset(out)


def load_phrases(path: str | Path) -> tuple[tuple[str, ...], ...]:
    """Phrase file: UTF-8, one multi-word entity per line."""
    out = []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        words = tuple(_WORD_RE.findall(line.lower()))
        if words:
            out.append(words)
    return tuple(out)


class TermDictionary:
    """The sorted list of unique lexical entities of a collection.

    Entries are ordered lexicographically by code point of the normalized
    form (equivalently, UTF-8 byte order), so the column layout is stable
    no matter how the input documents were ordered.
    """

    __slots__ = ("entries", "index")

    def __init__(self, entities: Iterable[str]):
        self.entries: tuple[str, ...] = tuple(sorted(set(entities)))
        self.index: dict[str, int] = {e: i for i, e in enumerate(self.entries)}

    def __len__(self) -> int:
        return len(self.entries)

    def __contains__(self, entity: str) -> bool:
        return entity in self.index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, TermDictionary) and self.entries == other.entries

    def __repr__(self) -> str:
        return f"TermDictionary({len(self.entries)} entries)"


@dataclass(frozen=True)
class BinaryDocTermMatrix:
    """Binary document x lexical-entity matrix.

    ``data[j, i]`` is 1 iff dictionary entry i occurs in document j.
    Every row has at least one 1: documents that tokenize to nothing are
    rejected at ingestion so evaluation denominators stay honest.
    """

    data: np.ndarray
    doc_ids: tuple[str, ...]
    dictionary: TermDictionary

    def __post_init__(self) -> None:
        if self.data.ndim != 2:
            raise ValueError("matrix data must be two-dimensional")
        n, p = self.data.shape
        if len(self.doc_ids) != n:
            raise ValueError("doc_ids length must match the row count")
        if len(self.dictionary) != p:
            raise ValueError("dictionary size must match the column count")
        if n and not np.isin(self.data, (0, 1)).all():
            raise ValueError("matrix cells must be exactly 0 or 1")
        if n and not self.data.any(axis=1).all():
            raise ValueError("every row must contain at least one 1")

    @property
    def n(self) -> int:
        return self.data.shape[0]

    @property
    def p(self) -> int:
        return self.data.shape[1]


def load_corpus(path: str | Path, format: str = "jsonl") -> list[Document]:
    """Load a document collection from ``path``.

    ``jsonl``: one JSON object per line with required ``id`` and ``text``
    fields and optional ``term``, ``def_type``, ``gold_sense``.
    ``plain_lines``: one document per line; ids are 1-based line numbers
    as decimal strings.  Documents are returned in file order and ids are
    verified unique.
    """
    if format not in CORPUS_FORMATS:
        raise ValueError(f"format must be one of {CORPUS_FORMATS}, got {format!r}")
    lines = Path(path).read_text(encoding="utf-8").splitlines()
    if format == "jsonl":
        return parse_jsonl_corpus(lines, origin=str(path))
    docs = []
    for lineno, line in enumerate(lines, 1):
        try:
            docs.append(Document(id=str(lineno), text=line))
        except DataError as exc:
            raise DataError(f"{path}:{lineno}: {exc}") from None
    return docs


def parse_jsonl_corpus(lines: Iterable[str], origin: str = "<jsonl>") -> list[Document]:
    """Parse JSONL corpus records; blank lines are skipped."""
    docs: list[Document] = []
    seen: set[str] = set()
    for lineno, line in enumerate(lines, 1):
        if not line.strip():
            continue
        try:
            record = json.loads(line)
        except json.JSONDecodeError as exc:
            raise DataError(f"{origin}:{lineno}: invalid JSON ({exc.msg})") from None
        if not isinstance(record, dict):
            raise DataError(f"{origin}:{lineno}: record must be a JSON object")
        for field in ("id", "text"):
            if field not in record:
                raise DataError(f"{origin}:{lineno}: missing required field {field!r}")
        try:
            doc = Document(
                id=record["id"],
                text=record["text"],
                term=record.get("term"),
                def_type=record.get("def_type"),
                gold_sense=record.get("gold_sense"),
            )
        except DataError as exc:
            raise DataError(f"{origin}:{lineno}: {exc}") from None
        if doc.id in seen:
            raise DataError(f"{origin}:{lineno}: duplicate document id {doc.id!r}")
        seen.add(doc.id)
        docs.append(doc)
    return docs


def build_dictionary(
    docs: Sequence[Document], tokenizer: Tokenizer | None = None
) -> TermDictionary:
    """Dictionary of all lexical entities occurring in ``docs``.

    The result is independent of document order (sorted union).
    """
    if not docs:
        raise ValueError("cannot build a dictionary from an empty collection")
    tok = tokenizer if tokenizer is not None else Tokenizer()
    vocabulary: set[str] = set()
    for doc in docs:
        vocabulary.update(tok.doc_tokens(doc))
    if not vocabulary:
        raise DataError("all documents tokenized to nothing")
    return TermDictionary(vocabulary)


def vectorize(
    docs: Sequence[Document],
    dictionary: TermDictionary,
    tokenizer: Tokenizer | None = None,
) -> BinaryDocTermMatrix:
    """Binary presence/absence matrix of ``docs`` over ``dictionary``.

    Deterministic: same documents and dictionary give a bit-identical
    matrix, and row j always corresponds to ``docs[j]``.
    """
    tok = tokenizer if tokenizer is not None else Tokenizer()
    n, p = len(docs), len(dictionary)
    ids = tuple(doc.id for doc in docs)
    if len(set(ids)) != n:
        raise DataError("document ids must be unique within a collection")
    data = np.zeros((n, p), dtype=np.uint8)
    for j, doc in enumerate(docs):
        tokens = tok.doc_tokens(doc)
        if not tokens:
            raise DataError(f"document {doc.id!r} tokenized to nothing")
        for token in tokens:
            i = dictionary.index.get(token)
            if i is None:
                raise DataError(
                    f"token {token!r} of document {doc.id!r} is missing "
                    f"from the dictionary"
                )
            data[j, i] = 1
    return BinaryDocTermMatrix(data=data, doc_ids=ids, dictionary=dictionary)


def build_matrix(
    docs: Sequence[Document], tokenizer: Tokenizer | None = None
) -> BinaryDocTermMatrix:
    """Dictionary construction and vectorization in one step."""
    return vectorize(docs, build_dictionary(docs, tokenizer), tokenizer)
