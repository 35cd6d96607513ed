"""On-disk model store.

Layout of a store directory:

    corpus.jsonl   normalized copy of the imported records, row order = H rows
    vocab.json     terms and document frequencies
    H.f64, W.f64   factor matrices, row-major little-endian float64
    model.json     shapes, k, seed, iterations, objective trace
    titles.json    editable topic titles (the only file mutated after build)
    config.json    the pipeline configuration that produced the store
    stats.json     dashboard statistics

Matrix bytes round-trip exactly: loading a store reproduces H and W
bit-identically.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .corpus import PatentRecord, Vocabulary, parse_corpus
from .factorization import TopicModel

CORPUS_FILE = "corpus.jsonl"
VOCAB_FILE = "vocab.json"
H_FILE = "H.f64"
W_FILE = "W.f64"
MODEL_FILE = "model.json"
TITLES_FILE = "titles.json"
CONFIG_FILE = "config.json"
STATS_FILE = "stats.json"

_REQUIRED_FILES = (
    CORPUS_FILE,
    VOCAB_FILE,
    H_FILE,
    W_FILE,
    MODEL_FILE,
    TITLES_FILE,
    CONFIG_FILE,
    STATS_FILE,
)


class StoreError(RuntimeError):
    """Missing or corrupt model store content."""


def _write_json(path: Path, payload) -> None:
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", encoding="utf-8")


def _matrix_bytes(arr: np.ndarray) -> bytes:
    return np.ascontiguousarray(arr, dtype="<f8").tobytes(order="C")


def _read_matrix(path: Path, shape: tuple[int, int]) -> np.ndarray:
    data = np.frombuffer(path.read_bytes(), dtype="<f8")
    expected = shape[0] * shape[1]
    if data.size != expected:
        raise StoreError(f"{path.name}: expected {expected} float64 values, found {data.size}")
    return data.reshape(shape).copy()


@dataclass
class ModelStore:
    """Handle on a persisted store directory."""

    directory: Path

    @classmethod
    def write(
        cls,
        directory: str | Path,
        records: list[PatentRecord],
        model: TopicModel,
        stats: dict,
        config: dict,
    ) -> "ModelStore":
        """Persist a full snapshot into ``directory`` (created if needed)."""
        directory = Path(directory)
        directory.mkdir(parents=True, exist_ok=True)
        if model.vocabulary is None or model.row_ids is None:
            raise StoreError("model must carry vocabulary and row ids to be persisted")

        with (directory / CORPUS_FILE).open("w", encoding="utf-8") as fh:
            for r in records:
                fh.write(json.dumps(r.to_dict(), sort_keys=True) + "\n")
        _write_json(
            directory / VOCAB_FILE,
            {
                "terms": list(model.vocabulary.terms),
                "doc_frequency": model.vocabulary.doc_frequency,
            },
        )
        (directory / H_FILE).write_bytes(_matrix_bytes(model.H))
        (directory / W_FILE).write_bytes(_matrix_bytes(model.W))
        _write_json(
            directory / MODEL_FILE,
            {
                "k": model.k,
                "seed": model.seed,
                "iterations_run": model.iterations_run,
                "objective_trace": model.objective_trace,
                "h_shape": list(model.H.shape),
                "w_shape": list(model.W.shape),
                "row_ids": list(model.row_ids),
            },
        )
        _write_json(directory / TITLES_FILE, {"titles": list(model.titles)})
        _write_json(directory / CONFIG_FILE, config)
        _write_json(directory / STATS_FILE, stats)
        return cls(directory)

    def _path(self, name: str) -> Path:
        path = self.directory / name
        if not path.exists():
            raise StoreError(f"model store is missing {name}")
        return path

    def validate(self) -> None:
        for name in _REQUIRED_FILES:
            self._path(name)

    def load_records(self) -> list[PatentRecord]:
        return parse_corpus(self._path(CORPUS_FILE))

    def load_vocabulary(self) -> Vocabulary:
        payload = json.loads(self._path(VOCAB_FILE).read_text(encoding="utf-8"))
        return Vocabulary.from_terms(payload["terms"], payload["doc_frequency"])

    def load_titles(self) -> list[str]:
        payload = json.loads(self._path(TITLES_FILE).read_text(encoding="utf-8"))
        return list(payload["titles"])

    def load_stats(self) -> dict:
        return json.loads(self._path(STATS_FILE).read_text(encoding="utf-8"))

    def load_config(self) -> dict:
        return json.loads(self._path(CONFIG_FILE).read_text(encoding="utf-8"))

    def load_model(self) -> TopicModel:
        meta = json.loads(self._path(MODEL_FILE).read_text(encoding="utf-8"))
        h_shape = tuple(meta["h_shape"])
        w_shape = tuple(meta["w_shape"])
        H = _read_matrix(self._path(H_FILE), h_shape)
        W = _read_matrix(self._path(W_FILE), w_shape)
        titles = self.load_titles()
        if len(titles) != meta["k"]:
            raise StoreError(f"{TITLES_FILE}: expected {meta['k']} titles, found {len(titles)}")
        return TopicModel(
            k=int(meta["k"]),
            H=H,
            W=W,
            titles=titles,
            objective_trace=[float(v) for v in meta["objective_trace"]],
            seed=int(meta["seed"]),
            iterations_run=int(meta["iterations_run"]),
            row_ids=tuple(meta["row_ids"]),
            vocabulary=self.load_vocabulary(),
        )

    def write_titles(self, titles: list[str]) -> None:
        """Replace titles.json atomically so readers never see a torn file."""
        target = self.directory / TITLES_FILE
        fd, tmp_name = tempfile.mkstemp(dir=self.directory, prefix=".titles-", suffix=".json")
        try:
            with os.fdopen(fd, "w", encoding="utf-8") as fh:
                fh.write(json.dumps({"titles": list(titles)}, indent=2, sort_keys=True) + "\n")
            os.replace(tmp_name, target)
        except BaseException:
            if os.path.exists(tmp_name):
                os.unlink(tmp_name)
            raise
