"""Non-negative matrix factorization of the document-term matrix.

Factorizes a non-negative A (n docs x m terms) into H (n x k) and W (k x m)
minimizing the Frobenius reconstruction error with the classic multiplicative
updates:

    H <- H * (A W^T) / (H W W^T + eps)
    W <- W * (H^T A) / (H^T H W + eps)

Both factors stay non-negative by construction and the objective is
non-increasing across iterations, which the tests assert directly.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np
import scipy.sparse as sp

from .corpus import Vocabulary
from .representation import DocTermMatrix

_EPS = 1e-12


@dataclass
class TopicModel:
    """Fitted factor pair plus editable topic titles.

    H rows follow the corpus order (``row_ids``); W columns follow the
    vocabulary order. ``objective_trace`` holds the Frobenius objective after
    each iteration.
    """

    k: int
    H: np.ndarray
    W: np.ndarray
    titles: list[str]
    objective_trace: list[float]
    seed: int
    iterations_run: int
    row_ids: tuple[str, ...] | None = None
    vocabulary: Vocabulary | None = None

    @property
    def n_docs(self) -> int:
        return self.H.shape[0]

    @property
    def n_terms(self) -> int:
        return self.W.shape[1]


@dataclass(frozen=True)
class TopicDistribution:
    """A patent's topic shares: H row normalized to sum 1, or zero-flagged."""

    patent_id: str
    shares: np.ndarray
    dominant: int
    is_zero: bool = False


@dataclass(frozen=True)
class TopicAssignments:
    """Dominant-topic assignment per patent and the per-topic patent counts."""

    by_patent: dict[str, int]
    counts: tuple[int, ...]
    zero_row_ids: tuple[str, ...] = ()


def _objective(norm_a_sq: float, cross: float, quad: float) -> float:
    # ||A - HW||_F^2 expanded; clamp tiny negative round-off near exact fits
    return float(np.sqrt(max(norm_a_sq - 2.0 * cross + quad, 0.0)))


def nmf_fit(
    A: DocTermMatrix | np.ndarray,
    k: int,
    max_iter: int = 500,
    tol: float = 1e-6,
    seed: int = 42,
) -> TopicModel:
    """Fit NMF by multiplicative updates on the Frobenius objective.

    Initialization draws H and W uniformly from (0, 1] with the given seed and
    scales by ``sqrt(mean(A) / k)``; the fit is deterministic for fixed
    ``(A, k, seed, max_iter, tol)``. Iteration stops when the relative
    objective improvement drops below ``tol`` or after ``max_iter`` rounds.
    """
    row_ids: tuple[str, ...] | None = None
    vocab: Vocabulary | None = None
    if isinstance(A, DocTermMatrix):
        row_ids = A.row_ids
        vocab = A.vocabulary
        X = A.matrix
    else:
        X = np.asarray(A, dtype=np.float64)

    sparse = sp.issparse(X)
    n, m = X.shape
    if not 1 <= k <= min(n, m):
        raise ValueError(f"k={k} out of range 1..min(n, m)={min(n, m)}")
    if max_iter < 1:
        raise ValueError("max_iter must be >= 1")
    if tol <= 0:
        raise ValueError("tol must be > 0")

    if sparse:
        values = X.data
        if values.size and values.min() < 0:
            raise ValueError("input matrix contains a negative entry")
        total = float(values.sum())
        norm_a_sq = float((values * values).sum())
    else:
        if X.size and X.min() < 0:
            raise ValueError("input matrix contains a negative entry")
        total = float(X.sum())
        norm_a_sq = float((X * X).sum())
    if total == 0.0:
        raise ValueError("input matrix is all zeros")

    rng = np.random.default_rng(seed)
    scale = np.sqrt(total / (n * m) / k)
    # 1 - random() maps [0, 1) onto (0, 1]
    H = (1.0 - rng.random((n, k))) * scale
    W = (1.0 - rng.random((k, m))) * scale

    trace: list[float] = []
    iterations = 0
    prev: float | None = None
    for _ in range(max_iter):
        AWt = X @ W.T
        H *= AWt / (H @ (W @ W.T) + _EPS)

        P = X.T @ H  # m x k, reused for the objective
        HtH = H.T @ H
        W *= P.T / (HtH @ W + _EPS)

        if __debug__:
            assert H.min() >= 0 and W.min() >= 0

        cross = float(np.sum(P * W.T))
        quad = float(np.sum(HtH * (W @ W.T)))
        obj = _objective(norm_a_sq, cross, quad)
        trace.append(obj)
        iterations += 1

        if prev is not None:
            improvement = (prev - obj) / prev if prev > 0 else 0.0
            if improvement < tol:
                break
        prev = obj

    return TopicModel(
        k=k,
        H=H,
        W=W,
        titles=[f"Topic {i}" for i in range(k)],
        objective_trace=trace,
        seed=seed,
        iterations_run=iterations,
        row_ids=row_ids,
        vocabulary=vocab,
    )


def reconstruction_error(A: DocTermMatrix | np.ndarray, model: TopicModel) -> float:
    """Relative Frobenius error ||A - HW||_F / ||A||_F."""
    X = A.matrix.toarray() if isinstance(A, DocTermMatrix) else np.asarray(A, dtype=np.float64)
    return float(
        np.linalg.norm(X - model.H @ model.W) / np.linalg.norm(X)
    )


def top_words(model: TopicModel, topic: int, n: int) -> list[tuple[str, float]]:
    """The n heaviest vocabulary terms of one topic, ties lexicographic."""
    if model.vocabulary is None:
        raise ValueError("model carries no vocabulary")
    if not 0 <= topic < model.k:
        raise IndexError(f"topic index {topic} out of range 0..{model.k - 1}")
    if not 1 <= n <= model.n_terms:
        raise ValueError(f"n={n} out of range 1..{model.n_terms}")
    row = model.W[topic]
    terms = model.vocabulary.terms
    order = sorted(range(len(terms)), key=lambda i: (-row[i], terms[i]))
    return [(terms[i], float(row[i])) for i in order[:n]]


def topic_distribution(model: TopicModel, row: int) -> TopicDistribution:
    """Normalize one H row into topic shares; zero rows are flagged."""
    if not 0 <= row < model.n_docs:
        raise IndexError(f"document row {row} out of range 0..{model.n_docs - 1}")
    patent_id = model.row_ids[row] if model.row_ids is not None else str(row)
    h = model.H[row]
    total = float(h.sum())
    if total == 0.0:
        return TopicDistribution(patent_id, np.zeros_like(h), dominant=0, is_zero=True)
    shares = h / total
    return TopicDistribution(patent_id, shares, dominant=int(np.argmax(shares)))


def assign_topics(model: TopicModel) -> TopicAssignments:
    """Assign each patent to the argmax of its H row (ties to lowest index).

    Zero rows go to topic 0 by convention and are reported separately; the
    per-topic counts partition the corpus.
    """
    counts = [0] * model.k
    by_patent: dict[str, int] = {}
    zero_rows: list[str] = []
    for row in range(model.n_docs):
        dist = topic_distribution(model, row)
        by_patent[dist.patent_id] = dist.dominant
        counts[dist.dominant] += 1
        if dist.is_zero:
            zero_rows.append(dist.patent_id)
    return TopicAssignments(by_patent, tuple(counts), tuple(zero_rows))


def set_topic_title(model: TopicModel, topic: int, title: str) -> TopicModel:
    """Replace one topic title. Titles are the only mutable part of a model."""
    if not 0 <= topic < model.k:
        raise IndexError(f"topic index {topic} out of range 0..{model.k - 1}")
    cleaned = title.strip()
    if not cleaned:
        raise ValueError("topic title must be non-empty")
    model.titles[topic] = cleaned
    return model
