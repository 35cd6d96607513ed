"""Non-negative document-term representations.

Three layers build the factorization input matrix:

1. plain TF-IDF with ``tf * ln(N / df)`` weighting,
2. bigram phrase enrichment gated by normalized PMI,
3. a semantically enriched reweighting in which every vocabulary term
   collects TF-IDF mass from its embedding-space nearest neighbors.

All outputs are non-negative, which the factorization stage requires.
"""

from __future__ import annotations

import math
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

import numpy as np
import scipy.sparse as sp

from .corpus import ProcessedDocument, Vocabulary


class EmbeddingFormatError(ValueError):
    """Word-vector file violates the text embedding format."""


@dataclass(frozen=True)
class DocTermMatrix:
    """Sparse non-negative documents-by-terms matrix with row/column identity.

    ``matrix`` is CSR with shape ``(n_docs, n_terms)``; ``row_ids[i]`` is the
    patent id of row ``i`` and columns follow ``vocabulary`` order.
    """

    matrix: sp.csr_array
    row_ids: tuple[str, ...]
    vocabulary: Vocabulary

    def __post_init__(self) -> None:
        n, m = self.matrix.shape
        if n != len(self.row_ids):
            raise ValueError("row_ids length does not match matrix rows")
        if m != len(self.vocabulary):
            raise ValueError("vocabulary size does not match matrix columns")
        if self.matrix.nnz and self.matrix.data.min() < 0:
            raise ValueError("document-term matrix must be non-negative")

    @property
    def n_docs(self) -> int:
        return self.matrix.shape[0]

    @property
    def n_terms(self) -> int:
        return self.matrix.shape[1]

    def entries(self):
        """Yield (doc_row, term_col, weight) triples for the nonzero entries."""
        coo = self.matrix.tocoo()
        yield from zip(coo.row.tolist(), coo.col.tolist(), coo.data.tolist())

    def toarray(self) -> np.ndarray:
        return self.matrix.toarray()


@dataclass(frozen=True)
class PhraseModel:
    """Accepted adjacent word pairs: joint count >= min_count and npmi >= threshold."""

    min_count: int
    threshold: float
    accepted: frozenset[tuple[str, str]]


@dataclass(frozen=True)
class EmbeddingTable:
    """Dense word vectors of a shared dimension; absent words return None."""

    dim: int
    vectors: dict[str, np.ndarray]

    def get(self, term: str) -> np.ndarray | None:
        return self.vectors.get(term)

    def __contains__(self, term: str) -> bool:
        return term in self.vectors

    def __len__(self) -> int:
        return len(self.vectors)


def compute_tfidf(docs: list[ProcessedDocument], vocab: Vocabulary) -> DocTermMatrix:
    """TF-IDF weighting: ``weight(d, t) = count(t in d) * ln(N / df(t))``.

    Rows are not length-normalized, so entity aggregation downstream stays
    additive. Terms present in every document get idf ``ln(1) = 0`` and vanish.
    Tokens outside the vocabulary are skipped.
    """
    if not docs:
        raise ValueError("empty corpus: nothing to weight")
    n = len(docs)
    idf = {t: math.log(n / vocab.doc_frequency[t]) for t in vocab.terms}

    rows: list[int] = []
    cols: list[int] = []
    data: list[float] = []
    for i, doc in enumerate(docs):
        for token, tf in Counter(doc.tokens).items():
            col = vocab.index.get(token)
            if col is None:
                continue
            w = tf * idf[token]
            if w != 0.0:
                rows.append(i)
                cols.append(col)
                data.append(w)

    matrix = sp.coo_array(
        (np.asarray(data, dtype=np.float64), (rows, cols)),
        shape=(n, len(vocab)),
    ).tocsr()
    return DocTermMatrix(matrix, tuple(d.patent_id for d in docs), vocab)


def _pair_statistics(docs: list[ProcessedDocument]):
    unigrams: Counter[str] = Counter()
    pairs: Counter[tuple[str, str]] = Counter()
    total = 0
    for doc in docs:
        toks = doc.tokens
        unigrams.update(toks)
        total += len(toks)
        pairs.update(zip(toks, toks[1:]))
    return unigrams, pairs, total


def npmi(count_a: int, count_b: int, count_ab: int, total_tokens: int) -> float:
    """Normalized pointwise mutual information in [-1, 1].

    ``ln(p(a,b) / (p(a) p(b))) / (-ln p(a,b))`` with all probabilities taken
    over the corpus token count: unigram probabilities from unigram counts,
    the joint probability from the adjacent-pair count.
    """
    if count_ab <= 0:
        return -1.0
    p_a = count_a / total_tokens
    p_b = count_b / total_tokens
    p_ab = count_ab / total_tokens
    denom = -math.log(p_ab)
    if denom == 0.0:
        return 1.0
    return math.log(p_ab / (p_a * p_b)) / denom


def fit_phrases(
    docs: list[ProcessedDocument],
    min_count: int = 5,
    threshold: float = 0.5,
) -> PhraseModel:
    """Detect bigram collocations over adjacent token pairs.

    A pair is accepted when its adjacent-pair count reaches ``min_count`` and
    its normalized PMI reaches ``threshold``. Adjacency never crosses document
    boundaries.
    """
    if min_count < 1:
        raise ValueError("min_count must be >= 1")
    if not -1.0 <= threshold <= 1.0:
        raise ValueError("threshold must be in [-1, 1]")
    unigrams, pairs, total = _pair_statistics(docs)
    if total < 2:
        raise ValueError("corpus has fewer than 2 tokens; no adjacent pairs exist")

    accepted = frozenset(
        pair
        for pair, c_ab in pairs.items()
        if c_ab >= min_count
        and npmi(unigrams[pair[0]], unigrams[pair[1]], c_ab, total) >= threshold
    )
    return PhraseModel(min_count=min_count, threshold=threshold, accepted=accepted)


def apply_phrases(doc: ProcessedDocument, model: PhraseModel) -> ProcessedDocument:
    """Join accepted adjacent pairs into single ``a_b`` tokens.

    Single greedy left-to-right pass: a token consumed by a join cannot start
    another join in the same pass.
    """
    toks = doc.tokens
    out: list[str] = []
    i = 0
    while i < len(toks):
        if i + 1 < len(toks) and (toks[i], toks[i + 1]) in model.accepted:
            out.append(f"{toks[i]}_{toks[i + 1]}")
            i += 2
        else:
            out.append(toks[i])
            i += 1
    return ProcessedDocument(doc.patent_id, tuple(out))


def load_embeddings(path: str | Path) -> EmbeddingTable:
    """Parse a text word-vector file: ``word v1 ... vd`` per line.

    An optional first line ``count dim`` (two integers) is consumed as a
    header. Duplicate words keep their first occurrence. All vectors must
    share one dimension.
    """
    path = Path(path)
    vectors: dict[str, np.ndarray] = {}
    dim: int | None = None
    header_dim: int | None = None
    with path.open(encoding="utf-8") as fh:
        for lineno, line in enumerate(fh, start=1):
            fields = line.split()
            if not fields:
                continue
            if lineno == 1 and len(fields) == 2:
                try:
                    int(fields[0])
                    header_dim = int(fields[1])
                    continue
                except ValueError:
                    pass  # not a header, fall through to vector parsing
            word = fields[0]
            try:
                vec = np.array([float(x) for x in fields[1:]], dtype=np.float64)
            except ValueError as exc:
                raise EmbeddingFormatError(f"line {lineno}: unparsable float") from exc
            if vec.size == 0:
                raise EmbeddingFormatError(f"line {lineno}: no vector components")
            if dim is None:
                dim = vec.size
                if header_dim is not None and header_dim != dim:
                    raise EmbeddingFormatError(
                        f"line {lineno}: vector dimension {dim} contradicts header {header_dim}"
                    )
            elif vec.size != dim:
                raise EmbeddingFormatError(
                    f"line {lineno}: dimension mismatch ({vec.size} != {dim})"
                )
            if word not in vectors:
                vectors[word] = vec
    if dim is None:
        raise EmbeddingFormatError(f"{path}: no word vectors found")
    return EmbeddingTable(dim=dim, vectors=vectors)


Neighborhoods = dict[str, tuple[tuple[str, float], ...]]


def semantic_neighbors(
    table: EmbeddingTable,
    vocab: Vocabulary,
    k: int = 100,
    alpha: float = 0.4,
    chunk_size: int = 1024,
) -> Neighborhoods:
    """Cosine nearest neighbors within the vocabulary, filtered at ``alpha``.

    For each vocabulary term with an embedding: take its k nearest embedded
    vocabulary terms by cosine similarity (ties broken lexicographically),
    drop those below ``alpha``, and always include the term itself with
    similarity exactly 1. Terms without embeddings get the singleton
    neighborhood ``{self: 1}``.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    if not 0 < alpha <= 1:
        raise ValueError("alpha must be in (0, 1]")

    embedded = [t for t in vocab.terms if t in table]
    result: Neighborhoods = {
        t: ((t, 1.0),) for t in vocab.terms if t not in table
    }
    if not embedded:
        return result

    mat = np.stack([table.vectors[t] for t in embedded])
    norms = np.linalg.norm(mat, axis=1, keepdims=True)
    # zero vectors stay zero: cosine against them is treated as 0
    np.divide(mat, norms, out=mat, where=norms > 0)

    kk = min(k, len(embedded))
    for start in range(0, len(embedded), chunk_size):
        stop = min(start + chunk_size, len(embedded))
        sims = mat[start:stop] @ mat.T
        for local, row in enumerate(sims):
            i = start + local
            term = embedded[i]
            # stable sort on -sim keeps lexicographic order among ties,
            # because `embedded` preserves the sorted vocabulary order
            order = np.argsort(-row, kind="stable")[:kk]
            neigh = {embedded[j]: float(row[j]) for j in order if row[j] >= alpha}
            neigh[term] = 1.0
            result[term] = tuple(
                sorted(neigh.items(), key=lambda kv: (-kv[1], kv[0]))
            )
    return result


def build_cluwords(tfidf: DocTermMatrix, neighbors: Neighborhoods) -> DocTermMatrix:
    """Combine TF-IDF with semantic neighborhoods.

    ``weight(d, c) = sum over t in neighborhood(c) of sim(c, t) * tfidf(d, t)``.
    With all-singleton neighborhoods this is the identity and returns the
    TF-IDF weights unchanged.
    """
    vocab = tfidf.vocabulary
    if set(neighbors) != set(vocab.terms):
        raise ValueError("neighborhood map does not cover the vocabulary")

    rows: list[int] = []
    cols: list[int] = []
    data: list[float] = []
    for term, neigh in neighbors.items():
        c = vocab.index[term]
        for other, sim in neigh:
            t = vocab.index.get(other)
            if t is None:
                raise ValueError(f"neighbor term {other!r} is outside the vocabulary")
            rows.append(c)
            cols.append(t)
            data.append(sim)
    sim_matrix = sp.coo_array(
        (np.asarray(data, dtype=np.float64), (rows, cols)),
        shape=(len(vocab), len(vocab)),
    ).tocsr()

    combined = (tfidf.matrix @ sim_matrix.T).tocsr()
    return DocTermMatrix(combined, tfidf.row_ids, vocab)
