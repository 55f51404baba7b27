"""Tokenization, corpus ingestion, and the binary doc-term matrix."""

import json

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from defclust import (
    BinaryDocTermMatrix,
    DataError,
    Document,
    TermDictionary,
    Tokenizer,
    build_dictionary,
    build_matrix,
    load_corpus,
    load_phrases,
    load_stopwords,
    parse_jsonl_corpus,
    tokenize,
    vectorize,
)

# word soup for randomized corpora; accents on purpose
WORDS = (
    "aguja", "barra", "célula", "dato", "estrella", "farol", "grieta",
    "hoja", "isla", "jarra", "kilo", "luz", "mapa", "nube", "ñandú",
)


def make_docs(rng, n, max_len=6):
    docs = []
    for j in range(n):
        k = rng.randint(1, max_len)
        text = " ".join(rng.choice(WORDS) for _ in range(k))
        docs.append(Document(id=f"d{j}", text=text))
    return docs


# ---------------------------------------------------------------- tokenize

def test_tokenize_lowercases_and_splits_on_punctuation():
    assert tokenize("La célula, es un") == ["la", "célula", "es", "un"]


def test_tokenize_keeps_opaque_symbols():
    # inintelligible strings are still valid lexical entities
    assert tokenize("B4 Viv") == ["b4", "viv"]


def test_tokenize_punctuation_only_is_empty():
    assert tokenize("¡¡¡") == []


def test_tokenize_underscore_is_a_separator():
    assert tokenize("foo_bar") == ["foo", "bar"]


def test_tokenize_preserves_diacritics():
    assert tokenize("Ñandú según ESTÁ") == ["ñandú", "según", "está"]


def test_tokenize_stopwords_removed_case_insensitively():
    assert tokenize("La célula ES un", stopwords=["LA", "es", "un"]) == ["célula"]


def test_tokenize_phrases_merge_into_single_tokens():
    got = tokenize("la República Francesa existe", phrases=["República Francesa"])
    assert got == ["la", "república francesa", "existe"]


def test_tokenize_phrase_longest_match_wins():
    got = tokenize("a b c d", phrases=["a b", "a b c"])
    assert got == ["a b c", "d"]


def test_tokenizer_drop_term_removes_own_term_only():
    tok = Tokenizer(drop_term=True)
    doc = Document(id="x", text="la barra de la barra", term="barra")
    assert tok.doc_tokens(doc) == ["la", "de", "la"]
    # other docs' terms stay
    other = Document(id="y", text="la barra brilla", term="luz")
    assert tok.doc_tokens(other) == ["la", "barra", "brilla"]


@given(st.lists(st.sampled_from(WORDS), min_size=1, max_size=8))
def test_tokenize_of_joined_words_returns_them(words):
    assert tokenize(" ".join(words)) == list(words)


# ---------------------------------------------------------------- Document

def test_document_rejects_empty_id():
    with pytest.raises(DataError):
        Document(id="", text="algo")


def test_document_rejects_blank_text():
    with pytest.raises(DataError):
        Document(id="d", text="   ")


def test_document_rejects_unknown_def_type():
    with pytest.raises(DataError, match="def_type"):
        Document(id="d", text="algo", def_type="poetic")


# ---------------------------------------------------------------- loaders

def test_load_corpus_jsonl_maps_fields(tmp_path):
    path = tmp_path / "c.jsonl"
    path.write_text(
        '{"id":"d1","text":"la célula es la unidad de vida"}\n'
        '{"id":"d2","text":"otra cosa","term":"cosa","def_type":"analytic","gold_sense":"s1"}\n',
        encoding="utf-8",
    )
    docs = load_corpus(path)
    assert [d.id for d in docs] == ["d1", "d2"]
    assert docs[0].text.startswith("la célula")
    assert docs[1].term == "cosa"
    assert docs[1].def_type == "analytic"
    assert docs[1].gold_sense == "s1"


def test_load_corpus_plain_lines_numbers_from_one(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("uno\ndos\ntres\n", encoding="utf-8")
    docs = load_corpus(path, format="plain_lines")
    assert [d.id for d in docs] == ["1", "2", "3"]
    assert [d.text for d in docs] == ["uno", "dos", "tres"]


def test_load_corpus_rejects_unknown_format(tmp_path):
    path = tmp_path / "c.txt"
    path.write_text("uno\n", encoding="utf-8")
    with pytest.raises(ValueError, match="format"):
        load_corpus(path, format="csv")


def test_jsonl_duplicate_id_is_an_error():
    lines = ['{"id":"d1","text":"a b"}', '{"id":"d1","text":"c d"}']
    with pytest.raises(DataError, match="duplicate document id 'd1'"):
        parse_jsonl_corpus(lines)


def test_jsonl_bad_json_reports_line_number():
    with pytest.raises(DataError, match="f.jsonl:2"):
        parse_jsonl_corpus(['{"id":"d1","text":"a"}', "{oops"], origin="f.jsonl")


def test_jsonl_missing_field_reports_line_number():
    with pytest.raises(DataError, match=":1.*'text'"):
        parse_jsonl_corpus(['{"id":"d1"}'])


def test_jsonl_non_object_record_rejected():
    with pytest.raises(DataError, match="JSON object"):
        parse_jsonl_corpus(["[1, 2]"])


def test_jsonl_blank_lines_skipped():
    docs = parse_jsonl_corpus(['{"id":"d1","text":"a"}', "", '{"id":"d2","text":"b"}'])
    assert [d.id for d in docs] == ["d1", "d2"]


def test_load_stopwords_lowercases_and_skips_blanks(tmp_path):
    path = tmp_path / "sw.txt"
    path.write_text("La\n\nDE\n según \n", encoding="utf-8")
    assert load_stopwords(path) == frozenset({"la", "de", "según"})


def test_load_phrases_normalizes_lines(tmp_path):
    path = tmp_path / "ph.txt"
    path.write_text("República Francesa\n\nbarra de tareas\n", encoding="utf-8")
    assert load_phrases(path) == (
        ("república", "francesa"),
        ("barra", "de", "tareas"),
    )


# ---------------------------------------------------------------- dictionary

def test_dictionary_entries_sorted_and_unique():
    d = TermDictionary(["b", "a", "c", "a"])
    assert d.entries == ("a", "b", "c")
    assert d.index == {"a": 0, "b": 1, "c": 2}
    assert len(d) == 3
    assert "b" in d and "z" not in d


def test_build_dictionary_is_union_of_tokens():
    docs = [Document(id="1", text="a b"), Document(id="2", text="b c")]
    assert build_dictionary(docs).entries == ("a", "b", "c")


def test_build_dictionary_rejects_empty_collection():
    with pytest.raises(ValueError):
        build_dictionary([])


def test_build_dictionary_rejects_all_empty_tokenizations():
    docs = [Document(id="1", text="...")]
    with pytest.raises(DataError, match="tokenized to nothing"):
        build_dictionary(docs)


def test_dictionary_order_stable_under_doc_reordering():
    import random

    rng = random.Random(7)
    docs = make_docs(rng, 12)
    shuffled = list(docs)
    rng.shuffle(shuffled)
    assert build_dictionary(docs) == build_dictionary(shuffled)


# ---------------------------------------------------------------- vectorize

def test_vectorize_presence_collapses_repeats():
    docs = [Document(id="1", text="a a c")]
    dictionary = TermDictionary(["a", "b", "c"])
    m = vectorize(docs, dictionary)
    assert m.data.tolist() == [[1, 0, 1]]


def test_vectorize_identical_docs_identical_rows():
    docs = [Document(id="1", text="a b"), Document(id="2", text="a b")]
    m = build_matrix(docs)
    assert (m.data[0] == m.data[1]).all()


def test_vectorize_missing_token_names_token_and_doc():
    docs = [Document(id="d9", text="a z")]
    dictionary = TermDictionary(["a"])
    with pytest.raises(DataError, match="'z'.*'d9'"):
        vectorize(docs, dictionary)


def test_vectorize_rejects_duplicate_ids():
    docs = [Document(id="1", text="a"), Document(id="1", text="b")]
    dictionary = TermDictionary(["a", "b"])
    with pytest.raises(DataError, match="unique"):
        vectorize(docs, dictionary)


def test_vectorize_rejects_doc_tokenizing_to_nothing():
    docs = [Document(id="1", text="a"), Document(id="2", text="?!")]
    dictionary = TermDictionary(["a"])
    with pytest.raises(DataError, match="'2'"):
        vectorize(docs, dictionary)


def test_vectorize_deterministic_bit_identical():
    import random

    rng = random.Random(3)
    docs = make_docs(rng, 15)
    a = build_matrix(docs)
    b = build_matrix(docs)
    assert np.array_equal(a.data, b.data)
    assert a.doc_ids == b.doc_ids
    assert a.dictionary == b.dictionary


@settings(max_examples=40)
@given(
    st.lists(
        st.lists(st.sampled_from(WORDS), min_size=1, max_size=6),
        min_size=1,
        max_size=8,
    )
)
def test_vectorize_cell_iff_token_present(token_lists):
    docs = [
        Document(id=f"d{j}", text=" ".join(tokens))
        for j, tokens in enumerate(token_lists)
    ]
    m = build_matrix(docs)
    tok = Tokenizer()
    for j, doc in enumerate(docs):
        present = set(tok.doc_tokens(doc))
        for i, entry in enumerate(m.dictionary.entries):
            assert m.data[j, i] == (1 if entry in present else 0)


def test_reordering_docs_permutes_rows_identically():
    import random

    rng = random.Random(11)
    docs = make_docs(rng, 10)
    dictionary = build_dictionary(docs)
    base = vectorize(docs, dictionary)
    order = list(range(len(docs)))
    rng.shuffle(order)
    permuted = vectorize([docs[k] for k in order], dictionary)
    assert np.array_equal(permuted.data, base.data[order])
    assert permuted.doc_ids == tuple(base.doc_ids[k] for k in order)


# ---------------------------------------------------------------- matrix type

def test_matrix_rejects_non_binary_cells():
    with pytest.raises(ValueError, match="0 or 1"):
        BinaryDocTermMatrix(
            data=np.array([[2, 0]]),
            doc_ids=("d1",),
            dictionary=TermDictionary(["a", "b"]),
        )


def test_matrix_rejects_all_zero_row():
    with pytest.raises(ValueError, match="at least one 1"):
        BinaryDocTermMatrix(
            data=np.array([[1, 0], [0, 0]]),
            doc_ids=("d1", "d2"),
            dictionary=TermDictionary(["a", "b"]),
        )


def test_matrix_rejects_shape_mismatches():
    with pytest.raises(ValueError, match="doc_ids"):
        BinaryDocTermMatrix(
            data=np.array([[1, 0]]),
            doc_ids=("d1", "d2"),
            dictionary=TermDictionary(["a", "b"]),
        )
    with pytest.raises(ValueError, match="dictionary"):
        BinaryDocTermMatrix(
            data=np.array([[1, 0]]),
            doc_ids=("d1",),
            dictionary=TermDictionary(["a"]),
        )


def test_matrix_dimensions_exposed():
    m = build_matrix([Document(id="1", text="a b"), Document(id="2", text="c")])
    assert (m.n, m.p) == (2, 3)


# ---------------------------------------------------------------- bundled data

def test_bundled_corpus_shape(synthetic_docs):
    assert len(synthetic_docs) == 120
    terms = {d.term for d in synthetic_docs}
    assert len(terms) == 4
    senses = {d.gold_sense for d in synthetic_docs}
    assert len(senses) == 12
    # ten paraphrases per sense
    per_sense = {}
    for d in synthetic_docs:
        per_sense[d.gold_sense] = per_sense.get(d.gold_sense, 0) + 1
    assert set(per_sense.values()) == {10}


def test_bundled_corpus_matches_gold(synthetic_docs, synthetic_senses):
    for doc in synthetic_docs:
        assert synthetic_senses.sense_of[doc.id] == doc.gold_sense


def test_bundled_tokenizer_strips_function_words(synthetic_docs):
    from defclust import synthetic_tokenizer

    tok = synthetic_tokenizer()
    for doc in synthetic_docs:
        tokens = tok.doc_tokens(doc)
        assert len(tokens) >= 2, doc.id
        assert "la" not in tokens and "de" not in tokens
