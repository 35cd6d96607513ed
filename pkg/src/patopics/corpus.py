"""Patent corpus ingestion: JSONL import, text normalization, vocabulary building.

Only the title and description of a patent feed the modeling text; abstract
and the entity fields (drug, company, inventors, years) are carried along for
analytics and display.
"""

from __future__ import annotations

import json
import math
import re
from collections import Counter
from dataclasses import dataclass, field
from importlib import resources
from pathlib import Path


class CorpusError(ValueError):
    """Malformed patent file or degenerate corpus."""


_TOKEN_SPLIT = re.compile(r"[^a-z0-9]+")

_REQUIRED_KEYS = ("id", "title", "description", "abstract", "drug", "company", "url")
_OPTIONAL_STR_KEYS = ("strength", "trade_name")
_YEAR_KEYS = ("filed_year", "granted_year")


@dataclass(frozen=True)
class PatentRecord:
    """One imported patent with its textual and entity fields."""

    id: str
    title: str
    description: str
    abstract: str
    drug: str
    company: str
    url: str
    strength: str = ""
    trade_name: str = ""
    inventors: tuple[str, ...] = ()
    filed_year: int | None = None
    granted_year: int | None = None

    def modeling_text(self) -> str:
        """Text used for topic modeling: title and description, concatenated."""
        return f"{self.title} {self.description}"

    def to_dict(self) -> dict:
        return {
            "id": self.id,
            "title": self.title,
            "description": self.description,
            "abstract": self.abstract,
            "drug": self.drug,
            "company": self.company,
            "url": self.url,
            "strength": self.strength,
            "trade_name": self.trade_name,
            "inventors": list(self.inventors),
            "filed_year": self.filed_year,
            "granted_year": self.granted_year,
        }


@dataclass(frozen=True)
class ProcessedDocument:
    """Token stream of one patent after normalization and filtering."""

    patent_id: str
    tokens: tuple[str, ...]


@dataclass(frozen=True)
class Vocabulary:
    """Term list with stable column ids (lexicographic) and document frequencies."""

    terms: tuple[str, ...]
    index: dict[str, int] = field(repr=False)
    doc_frequency: dict[str, int] = field(repr=False)

    def __len__(self) -> int:
        return len(self.terms)

    @classmethod
    def from_terms(cls, terms, doc_frequency) -> "Vocabulary":
        ordered = tuple(terms)
        return cls(
            terms=ordered,
            index={t: i for i, t in enumerate(ordered)},
            doc_frequency={t: int(doc_frequency[t]) for t in ordered},
        )


def _record_from_mapping(obj: dict, lineno: int) -> PatentRecord:
    if not isinstance(obj, dict):
        raise CorpusError(f"line {lineno}: expected a JSON object")
    for key in _REQUIRED_KEYS:
        if key not in obj:
            raise CorpusError(f"line {lineno}: missing required field {key!r}")
        if not isinstance(obj[key], str):
            raise CorpusError(f"line {lineno}: field {key!r} must be a string")
    if not obj["id"]:
        raise CorpusError(f"line {lineno}: empty patent id")

    extras: dict = {}
    for key in _OPTIONAL_STR_KEYS:
        value = obj.get(key, "")
        if value is None:
            value = ""
        if not isinstance(value, str):
            raise CorpusError(f"line {lineno}: field {key!r} must be a string")
        extras[key] = value

    inventors = obj.get("inventors", [])
    if inventors is None:
        inventors = []
    if not isinstance(inventors, list) or not all(isinstance(x, str) for x in inventors):
        raise CorpusError(f"line {lineno}: field 'inventors' must be a list of strings")
    extras["inventors"] = tuple(inventors)

    for key in _YEAR_KEYS:
        value = obj.get(key)
        if value is not None and not isinstance(value, int):
            raise CorpusError(f"line {lineno}: field {key!r} must be an integer year")
        extras[key] = value

    return PatentRecord(
        id=obj["id"],
        title=obj["title"],
        description=obj["description"],
        abstract=obj["abstract"],
        drug=obj["drug"],
        company=obj["company"],
        url=obj["url"],
        **extras,
    )


def parse_corpus(path: str | Path, fmt: str = "jsonl") -> list[PatentRecord]:
    """Parse a patent file into records, preserving input order.

    The only supported format is JSON Lines: one UTF-8 JSON object per line
    with the keys listed on :class:`PatentRecord`. Duplicate or empty ids are
    rejected. Blank lines are ignored.
    """
    if fmt != "jsonl":
        raise CorpusError(f"unsupported corpus format {fmt!r}")
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise CorpusError(f"cannot read corpus file {path}: {exc}") from exc
    except UnicodeDecodeError as exc:
        raise CorpusError(f"corpus file {path} is not valid UTF-8: {exc}") from exc

    records: list[PatentRecord] = []
    seen: set[str] = set()
    for lineno, line in enumerate(text.splitlines(), start=1):
        if not line.strip():
            continue
        try:
            obj = json.loads(line)
        except json.JSONDecodeError as exc:
            raise CorpusError(f"line {lineno}: invalid JSON ({exc.msg})") from exc
        record = _record_from_mapping(obj, lineno)
        if record.id in seen:
            raise CorpusError(f"line {lineno}: duplicate patent id {record.id!r}")
        seen.add(record.id)
        records.append(record)
    return records


def load_stoplist(path: str | Path | None = None) -> frozenset[str]:
    """Load a stopword list, one lowercase word per line.

    With no path, the bundled SMART list is used.
    """
    if path is None:
        text = (
            resources.files("patopics").joinpath("data/smart_stoplist.txt").read_text("utf-8")
        )
    else:
        text = Path(path).read_text(encoding="utf-8")
    return frozenset(w.strip() for w in text.splitlines() if w.strip())


def preprocess(text: str, stoplist: frozenset[str] | set[str], min_len: int = 3) -> list[str]:
    """Normalize raw text into modeling tokens.

    Lowercases, splits on runs of non-alphanumeric characters, then drops
    stopwords, tokens shorter than ``min_len``, and purely numeric tokens.
    """
    if min_len < 1:
        raise ValueError("min_len must be >= 1")
    tokens = _TOKEN_SPLIT.split(text.lower())
    return [
        t
        for t in tokens
        if t and len(t) >= min_len and not t.isdigit() and t not in stoplist
    ]


def preprocess_corpus(
    records: list[PatentRecord],
    stoplist: frozenset[str] | set[str],
    min_len: int = 3,
) -> list[ProcessedDocument]:
    """Preprocess every record's modeling text, preserving corpus order."""
    return [
        ProcessedDocument(r.id, tuple(preprocess(r.modeling_text(), stoplist, min_len)))
        for r in records
    ]


def build_vocabulary(
    docs: list[ProcessedDocument],
    min_df: int = 2,
    max_df_ratio: float = 0.95,
) -> Vocabulary:
    """Build the term vocabulary over processed documents.

    Retains terms whose document frequency satisfies
    ``min_df <= df <= ceil(max_df_ratio * n)``; terms are ordered
    lexicographically so column ids are deterministic.
    """
    if min_df < 1:
        raise ValueError("min_df must be >= 1")
    if not 0 < max_df_ratio <= 1:
        raise ValueError("max_df_ratio must be in (0, 1]")
    if not docs:
        raise CorpusError("empty corpus: no documents to build a vocabulary from")

    df: Counter[str] = Counter()
    for doc in docs:
        df.update(set(doc.tokens))

    max_df = math.ceil(max_df_ratio * len(docs))
    retained = sorted(t for t, c in df.items() if min_df <= c <= max_df)
    if not retained:
        raise CorpusError("vocabulary is empty after document-frequency filtering")
    return Vocabulary.from_terms(retained, df)
