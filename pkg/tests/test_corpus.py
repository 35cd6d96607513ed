import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from patopics.corpus import (
    CorpusError,
    build_vocabulary,
    load_stoplist,
    parse_corpus,
    preprocess,
)
from tests.conftest import docs_from_token_lists

FULL_RECORD = {
    "id": "P1",
    "title": "Inhaler device",
    "description": "A device for pulmonary delivery",
    "abstract": "Short summary",
    "drug": "salbutamol",
    "company": "Acme Pharma",
    "url": "https://example.org/P1",
    "strength": "10 mg",
    "trade_name": "Breezo",
    "inventors": ["A. One", "B. Two"],
    "filed_year": 2015,
    "granted_year": 2017,
}


def write_jsonl(path, rows):
    path.write_text("\n".join(json.dumps(r) for r in rows) + "\n", encoding="utf-8")


class TestParseCorpus:
    def test_full_record_round_trips(self, tmp_path):
        path = tmp_path / "one.jsonl"
        write_jsonl(path, [FULL_RECORD])
        records = parse_corpus(path)
        assert len(records) == 1
        r = records[0]
        assert r.id == "P1"
        assert r.inventors == ("A. One", "B. Two")
        assert r.filed_year == 2015 and r.granted_year == 2017
        assert r.modeling_text() == "Inhaler device A device for pulmonary delivery"

    def test_missing_optional_fields_default(self, tmp_path):
        row = {k: v for k, v in FULL_RECORD.items()
               if k not in ("strength", "trade_name", "inventors", "filed_year", "granted_year")}
        path = tmp_path / "opt.jsonl"
        write_jsonl(path, [row])
        r = parse_corpus(path)[0]
        assert r.strength == ""
        assert r.trade_name == ""
        assert r.inventors == ()
        assert r.filed_year is None and r.granted_year is None

    def test_duplicate_id_rejected(self, tmp_path):
        path = tmp_path / "dup.jsonl"
        write_jsonl(path, [FULL_RECORD, FULL_RECORD])
        with pytest.raises(CorpusError, match="P1"):
            parse_corpus(path)

    def test_empty_id_rejected(self, tmp_path):
        path = tmp_path / "empty.jsonl"
        write_jsonl(path, [{**FULL_RECORD, "id": ""}])
        with pytest.raises(CorpusError, match="empty patent id"):
            parse_corpus(path)

    def test_malformed_line_reports_line_number(self, tmp_path):
        path = tmp_path / "bad.jsonl"
        path.write_text(json.dumps(FULL_RECORD) + "\nnot json\n", encoding="utf-8")
        with pytest.raises(CorpusError, match="line 2"):
            parse_corpus(path)

    def test_missing_required_field_reports_line(self, tmp_path):
        row = {k: v for k, v in FULL_RECORD.items() if k != "title"}
        path = tmp_path / "miss.jsonl"
        write_jsonl(path, [row])
        with pytest.raises(CorpusError, match="line 1.*title"):
            parse_corpus(path)

    def test_order_preserved(self, tmp_path):
        rows = [{**FULL_RECORD, "id": f"P{i}"} for i in range(5)]
        path = tmp_path / "many.jsonl"
        write_jsonl(path, rows)
        assert [r.id for r in parse_corpus(path)] == [f"P{i}" for i in range(5)]

    def test_missing_file(self, tmp_path):
        with pytest.raises(CorpusError, match="cannot read"):
            parse_corpus(tmp_path / "nope.jsonl")


class TestPreprocess:
    def test_stoplist_and_min_len(self):
        out = preprocess("The compound of Formula I", {"the", "of"}, min_len=2)
        assert out == ["compound", "formula"]

    def test_empty_text(self):
        assert preprocess("", {"x"}, min_len=2) == []

    def test_numeric_tokens_dropped(self):
        assert preprocess("NMF 2021 nmf", set(), min_len=2) == ["nmf", "nmf"]

    def test_split_on_non_alphanumeric_runs(self):
        out = preprocess("anti-viral (HCV) therapy, 2-stage", set(), min_len=2)
        assert out == ["anti", "viral", "hcv", "therapy", "stage"]

    def test_min_len_validation(self):
        with pytest.raises(ValueError):
            preprocess("x", set(), min_len=0)

    @given(st.text(max_size=200))
    def test_no_stopword_survives(self, text):
        stoplist = frozenset({"and", "the", "with"})
        out = preprocess(text, stoplist, min_len=1)
        assert all(t not in stoplist for t in out)
        assert all(t and t == t.lower() for t in out)

    def test_determinism(self):
        stop = load_stoplist()
        text = "Sustained release of the novel compound; sustained RELEASE!"
        assert preprocess(text, stop) == preprocess(text, stop)


class TestStoplist:
    def test_bundled_smart_list(self):
        stop = load_stoplist()
        assert {"the", "of", "and", "novel", "useful"} <= stop
        assert "compound" not in stop
        assert len(stop) > 500

    def test_custom_file(self, tmp_path):
        path = tmp_path / "stop.txt"
        path.write_text("alpha\nbeta\n\n", encoding="utf-8")
        assert load_stoplist(path) == {"alpha", "beta"}


class TestBuildVocabulary:
    def test_counts_match_hand_oracle(self):
        docs = docs_from_token_lists([["a", "b"], ["b"]])
        vocab = build_vocabulary(docs, min_df=1, max_df_ratio=1.0)
        assert vocab.terms == ("a", "b")
        assert vocab.doc_frequency == {"a": 1, "b": 2}

    def test_min_df_filters(self):
        docs = docs_from_token_lists([["a", "b"], ["b"]])
        vocab = build_vocabulary(docs, min_df=2, max_df_ratio=1.0)
        assert vocab.terms == ("b",)

    def test_max_df_ratio_filters(self):
        docs = docs_from_token_lists([["a", "b"], ["b"], ["b"], ["b"]])
        vocab = build_vocabulary(docs, min_df=1, max_df_ratio=0.5)
        # ceil(0.5 * 4) = 2, so df("b") = 4 is dropped
        assert vocab.terms == ("a",)

    def test_empty_corpus(self):
        with pytest.raises(CorpusError, match="empty corpus"):
            build_vocabulary([], min_df=1, max_df_ratio=1.0)

    def test_all_empty_docs(self):
        docs = docs_from_token_lists([[], []])
        with pytest.raises(CorpusError, match="empty after"):
            build_vocabulary(docs, min_df=1, max_df_ratio=1.0)

    def test_index_is_bijection_and_df_oracle(self):
        docs = docs_from_token_lists(
            [["x", "y", "x"], ["y", "z"], ["z", "x", "w"], ["w"]]
        )
        vocab = build_vocabulary(docs, min_df=1, max_df_ratio=1.0)
        assert sorted(vocab.index.values()) == list(range(len(vocab)))
        for term in vocab.terms:
            brute_df = sum(1 for d in docs if term in d.tokens)
            assert vocab.doc_frequency[term] == brute_df
