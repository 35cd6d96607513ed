"""End-to-end build: patent file in, persisted model store out.

Stages run in a fixed order (parse, preprocess, phrases, vocabulary, tfidf,
cluwords, nmf, assignments, pertinence, stats, persist). Any failure is
re-raised as a BuildError naming the stage, and nothing is left behind in the
output directory.
"""

from __future__ import annotations

import shutil
import tempfile
from dataclasses import dataclass, field
from pathlib import Path

from . import corpus as corpus_mod
from . import correlation, factorization, representation
from .store import ModelStore


@dataclass
class PipelineConfig:
    input_path: Path
    embeddings_path: Path
    output_dir: Path
    stoplist_path: Path | None = None
    n_topics: int = 30
    top_words: int = 30
    min_token_len: int = 3
    min_df: int = 2
    max_df_ratio: float = 0.95
    phrase_min_count: int = 5
    phrase_threshold: float = 0.5
    neighbors: int = 100
    alpha: float = 0.4
    max_iter: int = 500
    tol: float = 1e-6
    seed: int = 42

    def validate(self) -> None:
        if self.n_topics < 1:
            raise ValueError("n_topics must be >= 1")
        if self.top_words < 1:
            raise ValueError("top_words must be >= 1")
        if self.min_token_len < 1:
            raise ValueError("min_token_len must be >= 1")
        if self.min_df < 1:
            raise ValueError("min_df must be >= 1")
        if not 0 < self.max_df_ratio <= 1:
            raise ValueError("max_df_ratio must be in (0, 1]")
        if self.phrase_min_count < 1:
            raise ValueError("phrase_min_count must be >= 1")
        if not -1 <= self.phrase_threshold <= 1:
            raise ValueError("phrase_threshold must be in [-1, 1]")
        if self.neighbors < 1:
            raise ValueError("neighbors must be >= 1")
        if not 0 < self.alpha <= 1:
            raise ValueError("alpha must be in (0, 1]")
        if self.max_iter < 1:
            raise ValueError("max_iter must be >= 1")
        if self.tol <= 0:
            raise ValueError("tol must be > 0")

    def to_dict(self) -> dict:
        return {
            "input_path": str(self.input_path),
            "embeddings_path": str(self.embeddings_path),
            "output_dir": str(self.output_dir),
            "stoplist_path": str(self.stoplist_path) if self.stoplist_path else None,
            "n_topics": self.n_topics,
            "top_words": self.top_words,
            "min_token_len": self.min_token_len,
            "min_df": self.min_df,
            "max_df_ratio": self.max_df_ratio,
            "phrase_min_count": self.phrase_min_count,
            "phrase_threshold": self.phrase_threshold,
            "neighbors": self.neighbors,
            "alpha": self.alpha,
            "max_iter": self.max_iter,
            "tol": self.tol,
            "seed": self.seed,
        }


class BuildError(RuntimeError):
    """A pipeline stage failed; ``stage`` names which one."""

    def __init__(self, stage: str, message: str):
        super().__init__(f"build failed at stage {stage!r}: {message}")
        self.stage = stage


@dataclass
class BuildResult:
    store: ModelStore
    records: list = field(repr=False)
    model: factorization.TopicModel = field(repr=False)
    stats: correlation.DashboardStats = field(repr=False)


def _stage(name: str, fn, *args, **kwargs):
    try:
        return fn(*args, **kwargs)
    except BuildError:
        raise
    except Exception as exc:
        raise BuildError(name, str(exc)) from exc


def build(config: PipelineConfig) -> BuildResult:
    """Run the full pipeline and persist the store.

    Deterministic: rebuilding with an identical configuration and inputs
    produces byte-identical matrix files. On failure partial outputs are
    removed and the previous store (if any) is left untouched.
    """
    config.validate()

    records = _stage("parse", corpus_mod.parse_corpus, config.input_path)
    stoplist = _stage("parse", corpus_mod.load_stoplist, config.stoplist_path)

    docs = _stage(
        "preprocess", corpus_mod.preprocess_corpus, records, stoplist, config.min_token_len
    )

    phrase_model = _stage(
        "phrases",
        representation.fit_phrases,
        docs,
        config.phrase_min_count,
        config.phrase_threshold,
    )
    docs = _stage(
        "phrases", lambda: [representation.apply_phrases(d, phrase_model) for d in docs]
    )

    vocab = _stage(
        "vocabulary", corpus_mod.build_vocabulary, docs, config.min_df, config.max_df_ratio
    )

    tfidf = _stage("tfidf", representation.compute_tfidf, docs, vocab)

    embeddings = _stage("cluwords", representation.load_embeddings, config.embeddings_path)
    neighborhoods = _stage(
        "cluwords",
        representation.semantic_neighbors,
        embeddings,
        vocab,
        config.neighbors,
        config.alpha,
    )
    cluwords = _stage("cluwords", representation.build_cluwords, tfidf, neighborhoods)

    model = _stage(
        "nmf",
        factorization.nmf_fit,
        cluwords,
        config.n_topics,
        config.max_iter,
        config.tol,
        config.seed,
    )

    assignments = _stage("assignments", factorization.assign_topics, model)

    emaps = _stage("pertinence", correlation.entity_maps, records)
    for emap in emaps.values():
        _stage("pertinence", correlation.compute_pertinence, model, emap)

    stats = _stage("stats", correlation.corpus_stats, records, assignments)

    store = _stage(
        "persist", _persist, config, records, model, stats.to_dict()
    )
    return BuildResult(store=store, records=records, model=model, stats=stats)


def _persist(config: PipelineConfig, records, model, stats_dict) -> ModelStore:
    """Write into a scratch directory, then swap it into place."""
    target = Path(config.output_dir)
    target.parent.mkdir(parents=True, exist_ok=True)
    scratch = Path(tempfile.mkdtemp(prefix=target.name + ".build-", dir=target.parent))
    try:
        ModelStore.write(scratch, records, model, stats_dict, config.to_dict())
        if target.exists():
            shutil.rmtree(target)
        scratch.replace(target)
    except BaseException:
        shutil.rmtree(scratch, ignore_errors=True)
        raise
    return ModelStore(target)
