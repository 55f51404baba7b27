"""Bundled demonstration data.

The package ships a small gold-labeled Spanish corpus of synthetic
dictionary-style definitions: 4 ambiguous terms (barra, célula, punto,
ventana), 3 planted senses per term, 10 paraphrases per sense, 120
documents in all.  Each sense mixes tightly-worded core paraphrases with
looser peripheral ones so that a threshold sweep shows the full group
formation story: pure small groups at low thresholds, growing recall as
the threshold rises, and sense mixing near the top of the scale.

The intended pipeline for this corpus filters Spanish function words
with the bundled stopword list (``synthetic_tokenizer``); without the
filter, ubiquitous articles and prepositions couple every pair of
documents and flatten the distance spread.
"""

from __future__ import annotations

from importlib import resources

from .corpus import Document, Tokenizer, load_stopwords, parse_jsonl_corpus
from .evaluation import GoldAnnotation

_PKG = "defclust.data"


def _data_path(name: str):
    return resources.files(_PKG).joinpath(name)


def synthetic_definitions() -> list[Document]:
    """The 120 bundled definition documents, gold labels included."""
    text = _data_path("synthetic_definitions.jsonl").read_text(encoding="utf-8")
    return parse_jsonl_corpus(text.splitlines(), origin="synthetic_definitions.jsonl")


def synthetic_gold() -> GoldAnnotation:
    """Gold sense labels for the bundled corpus, as a standalone annotation."""
    with resources.as_file(_data_path("synthetic_gold.jsonl")) as path:
        return GoldAnnotation.load(path)


def spanish_stopwords() -> frozenset[str]:
    """The bundled Spanish function-word list."""
    with resources.as_file(_data_path("spanish_stopwords.txt")) as path:
        return load_stopwords(path)


def synthetic_tokenizer() -> Tokenizer:
    """The documented tokenizer recipe for the bundled corpus."""
    return Tokenizer(stopwords=spanish_stopwords())
