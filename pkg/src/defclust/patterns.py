"""Definitional-pattern templates, search-pattern expansion, and text scanning.

A template is a surface string with exactly one ``<T>`` placeholder
(``⟨T⟩`` is accepted and normalized).  Crossing templates with a term
list yields literal search patterns; scanning a text for those patterns
yields candidate definitional contexts: the matched span, the term, and
the tail running from the match to the next sentence terminator.

Matching is deliberately shallow: case-insensitive substring search with
flexible whitespace, no tokenization, no syntax.  A match is only ever a
*candidate*; "el miedo a la aguja es el más frecuente" contains
"la aguja es el" without defining anything, which is why every candidate
carries ``verified=False`` until some later judgment.
"""

from __future__ import annotations

import json
import logging
import re
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path
from typing import Iterable, Sequence

from .corpus import DEF_TYPES, Document
from .errors import DataError

log = logging.getLogger(__name__)

PLACEHOLDER = "<T>"

# Mathematical angle brackets, normalized to the ASCII placeholder on input.
_FANCY_PLACEHOLDER = "⟨T⟩"


@dataclass(frozen=True)
class PatternTemplate:
    """Definitional formula with one ``<T>`` slot, e.g. ``"la <T> es un"``.

    ``def_type`` records which kind of definition the formula signals.
    """

    surface: str
    def_type: str = "analytic"

    def __post_init__(self):
        object.__setattr__(
            self, "surface", self.surface.replace(_FANCY_PLACEHOLDER, PLACEHOLDER)
        )
        count = self.surface.count(PLACEHOLDER)
        if count != 1:
            raise DataError(
                f"template {self.surface!r} must contain exactly one "
                f"{PLACEHOLDER}, found {count}"
            )
        if not self.surface.replace(PLACEHOLDER, "").strip():
            raise DataError(
                f"template {self.surface!r} is empty besides the placeholder"
            )
        if self.def_type not in DEF_TYPES:
            raise DataError(
                f"template {self.surface!r}: def_type must be one of "
                f"{DEF_TYPES}, got {self.def_type!r}"
            )

    def instantiate(self, term: str) -> str:
        return self.surface.replace(PLACEHOLDER, term)


def _flexible_regex(text: str) -> re.Pattern:
    # Literal substring match, except any whitespace run matches any other.
    parts = [re.escape(chunk) for chunk in text.split()]
    return re.compile(r"\s+".join(parts), re.IGNORECASE | re.UNICODE)


@dataclass(frozen=True)
class SearchPattern:
    """A template instantiated with a concrete term, compiled for scanning."""

    template: PatternTemplate
    term: str
    text: str = field(init=False)
    regex: re.Pattern = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not self.term or not self.term.strip():
            raise DataError("search-pattern term must be non-empty")
        object.__setattr__(self, "text", self.template.instantiate(self.term))
        object.__setattr__(self, "regex", _flexible_regex(self.text))


@dataclass(frozen=True)
class CandidateContext:
    """One pattern hit in a source text, unverified by construction."""

    source_id: str
    span: tuple[int, int]
    term: str
    matched_pattern: PatternTemplate
    tail: str
    verified: bool = False

    def to_json_dict(self) -> dict:
        return {
            "source_id": self.source_id,
            "span": [self.span[0], self.span[1]],
            "term": self.term,
            "pattern": self.matched_pattern.surface,
            "def_type": self.matched_pattern.def_type,
            "tail": self.tail,
        }


def expand_patterns(
    templates: Sequence[PatternTemplate], terms: Sequence[str]
) -> list[str]:
    """Cross product of templates and terms as literal search strings.

    Templates-major, terms-minor order; duplicates dropped on the fly.
    """
    if not templates or not terms:
        raise ValueError("need at least one template and one term")
    seen: set[str] = set()
    out: list[str] = []
    for template in templates:
        for term in terms:
            text = template.instantiate(term)
            if text not in seen:
                seen.add(text)
                out.append(text)
    return out


def compile_search_patterns(
    templates: Sequence[PatternTemplate], terms: Sequence[str]
) -> list[SearchPattern]:
    """Like expand_patterns but keeps the originating template/term and regexes."""
    if not templates or not terms:
        raise ValueError("need at least one template and one term")
    seen: set[str] = set()
    out: list[SearchPattern] = []
    for template in templates:
        for term in terms:
            pattern = SearchPattern(template=template, term=term)
            if pattern.text not in seen:
                seen.add(pattern.text)
                out.append(pattern)
    return out


_SENTENCE_END = re.compile(r"[.;\n]")


def _tail_after(text: str, end: int) -> str:
    terminator = _SENTENCE_END.search(text, end)
    stop = terminator.start() if terminator else len(text)
    return text[end:stop].strip()


def scan_text(
    text: str, source_id: str, patterns: Sequence[SearchPattern]
) -> list[CandidateContext]:
    """Every pattern occurrence in ``text``, overlaps included.

    The tail runs from the match to the next ``.``, ``;`` or newline and
    is stripped; it may come out empty when the terminator is adjacent.
    Results are sorted by span.
    """
    if not text:
        raise ValueError("text must be non-empty")
    hits: list[CandidateContext] = []
    for pattern in patterns:
        pos = 0
        while True:
            match = pattern.regex.search(text, pos)
            if match is None:
                break
            hits.append(
                CandidateContext(
                    source_id=source_id,
                    span=(match.start(), match.end()),
                    term=pattern.term,
                    matched_pattern=pattern.template,
                    tail=_tail_after(text, match.end()),
                )
            )
            # step one character, not past the match, so overlapping
            # occurrences of the same pattern are all found
            pos = match.start() + 1
    hits.sort(key=lambda c: (c.span, c.matched_pattern.surface, c.term))
    return hits


def candidates_to_corpus(cands: Sequence[CandidateContext]) -> list[Document]:
    """Candidates as documents: text = tail, id = ``source_id#ordinal``.

    Ordinals are 1-based per source over the kept candidates.  Empty
    tails cannot become documents; they are dropped and counted in one
    warning.
    """
    docs: list[Document] = []
    ordinal: dict[str, int] = {}
    dropped = 0
    for cand in cands:
        if not cand.tail:
            dropped += 1
            continue
        ordinal[cand.source_id] = ordinal.get(cand.source_id, 0) + 1
        docs.append(
            Document(
                id=f"{cand.source_id}#{ordinal[cand.source_id]}",
                text=cand.tail,
                term=cand.term,
                def_type=cand.matched_pattern.def_type,
            )
        )
    if dropped:
        log.warning("dropped %d candidate(s) with empty tails", dropped)
    return docs


def candidates_to_jsonl(cands: Sequence[CandidateContext]) -> str:
    return "".join(
        json.dumps(c.to_json_dict(), ensure_ascii=False) + "\n" for c in cands
    )


def load_pattern_file(path: str | Path) -> list[PatternTemplate]:
    """Pattern file: UTF-8, one ``surface<TAB>def_type`` per line.

    Blank lines and ``#`` comments are skipped.
    """
    templates: list[PatternTemplate] = []
    for lineno, line in enumerate(
        Path(path).read_text(encoding="utf-8").splitlines(), 1
    ):
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        parts = line.rstrip("\n").split("\t")
        if len(parts) != 2:
            raise DataError(
                f"{path}:{lineno}: expected surface<TAB>def_type, got {line!r}"
            )
        surface, def_type = parts[0].strip(), parts[1].strip()
        try:
            templates.append(PatternTemplate(surface=surface, def_type=def_type))
        except DataError as exc:
            raise DataError(f"{path}:{lineno}: {exc}") from None
    if not templates:
        raise DataError(f"{path}: no templates found")
    return templates


def default_templates() -> list[PatternTemplate]:
    """The bundled Spanish template inventory (see data/default_patterns.tsv)."""
    source = resources.files("defclust.data").joinpath("default_patterns.tsv")
    with resources.as_file(source) as path:
        return load_pattern_file(path)
