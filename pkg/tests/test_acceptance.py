"""Acceptance suite: one test per criterion, each printing a pass/fail line.

Run with ``pytest tests/test_acceptance.py -s`` to see the per-criterion
report lines.
"""

import json
import time
from collections import Counter

import numpy as np
import pytest
from fastapi.testclient import TestClient

from patopics import corpus as corpus_mod
from patopics import representation as rep
from patopics.api import create_app
from patopics.correlation import EntityMap, aggregate_entity_topics, normalize_pertinence
from patopics.factorization import assign_topics, nmf_fit, reconstruction_error
from patopics.pipeline import PipelineConfig, build
from patopics.store import ModelStore
from tests.conftest import docs_from_token_lists
from tests.test_representation import brute_force_npmi_pairs


def report(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"[{status}] {name}{suffix}")
    assert ok, f"{name}{suffix}"


def test_table1_exactness():
    rows = np.array([[30.0, 70.0, 10.0], [20.0, 65.0, 40.0], [17.0, 80.0, 8.0]])
    ids = ("P1", "P2", "P3")
    emap = EntityMap("inventor", {"Inventor 1": frozenset(ids)})

    def table1():
        _, r = aggregate_entity_topics(rows, ids, emap)
        norm, _ = normalize_pertinence(r)
        return r, norm

    table1()  # warm-up before timing
    elapsed = float("inf")
    for _ in range(5):
        t0 = time.perf_counter()
        raw, normalized = table1()
        elapsed = min(elapsed, time.perf_counter() - t0)

    sums_exact = raw[0].tolist() == [67.0, 215.0, 58.0]
    percents = [round(100 * x) for x in normalized[0]]
    report(
        "table1-exactness",
        sums_exact and percents == [20, 63, 17] and elapsed < 1e-3,
        f"sums={raw[0].tolist()} percents={percents} {elapsed * 1e6:.0f}us",
    )


def test_nmf_rank1_exact_recovery():
    A = np.array([[3.0, 4.0, 5.0], [6.0, 8.0, 10.0]])
    t0 = time.perf_counter()
    model = nmf_fit(A, k=1, max_iter=500, tol=1e-10, seed=0)
    elapsed = time.perf_counter() - t0
    err = reconstruction_error(A, model)
    report(
        "nmf-rank1-recovery",
        err < 1e-6 and elapsed < 1.0,
        f"rel_err={err:.2e} iters={model.iterations_run} {elapsed:.3f}s",
    )


def test_nmf_monotonicity():
    rng = np.random.default_rng(2024)
    A = rng.random((100, 50))
    t0 = time.perf_counter()
    model = nmf_fit(A, k=10, max_iter=200, tol=1e-15, seed=1)
    elapsed = time.perf_counter() - t0
    trace = model.objective_trace
    worst = max(
        (trace[i + 1] - trace[i] for i in range(len(trace) - 1)), default=0.0
    )
    report(
        "nmf-monotonicity",
        worst <= 1e-10 and elapsed < 5.0,
        f"iterations={len(trace)} worst_step={worst:.2e} {elapsed:.2f}s",
    )


def test_planted_topic_recovery(
    tmp_path, fixture_corpus_path, fixture_embeddings_path, fixture_labels
):
    config = PipelineConfig(
        input_path=fixture_corpus_path,
        embeddings_path=fixture_embeddings_path,
        output_dir=tmp_path / "store",
        n_topics=3,
    )
    t0 = time.perf_counter()
    result = build(config)
    elapsed = time.perf_counter() - t0

    assignments = assign_topics(result.model)
    per_topic: dict[int, Counter] = {}
    for pid, topic in assignments.by_patent.items():
        per_topic.setdefault(topic, Counter())[fixture_labels[pid]] += 1
    purity = sum(c.most_common(1)[0][1] for c in per_topic.values()) / len(fixture_labels)
    report(
        "planted-topic-recovery",
        purity >= 0.90 and elapsed < 10.0,
        f"purity={purity:.3f} {elapsed:.2f}s",
    )


def test_phrase_oracle_equivalence():
    rng = np.random.default_rng(77)
    words = [f"w{i}" for i in range(25)]
    token_lists = []
    total = 0
    while total < 1000:
        doc = [words[int(j)] for j in rng.integers(0, 25, size=rng.integers(2, 20))]
        if rng.random() < 0.4:
            doc.extend(["fused", "pair"])
        token_lists.append(doc)
        total += len(doc)
    docs = docs_from_token_lists(token_lists)

    t0 = time.perf_counter()
    equal = True
    accepted_sizes = []
    for threshold in (0.2, 0.5, 0.8):
        model = rep.fit_phrases(docs, min_count=3, threshold=threshold)
        oracle = frozenset(brute_force_npmi_pairs(token_lists, 3, threshold))
        equal = equal and model.accepted == oracle
        accepted_sizes.append(len(model.accepted))
    elapsed = time.perf_counter() - t0
    report(
        "phrase-oracle-equivalence",
        equal and elapsed < 1.0,
        f"tokens={total} accepted={accepted_sizes} {elapsed:.3f}s",
    )


def test_cluwords_degeneracy(fixture_corpus_path, fixture_embeddings_path):
    records = corpus_mod.parse_corpus(fixture_corpus_path)
    stoplist = corpus_mod.load_stoplist()
    docs = corpus_mod.preprocess_corpus(records, stoplist)
    phrases = rep.fit_phrases(docs, min_count=5, threshold=0.5)
    docs = [rep.apply_phrases(d, phrases) for d in docs]
    vocab = corpus_mod.build_vocabulary(docs, min_df=2, max_df_ratio=0.95)
    tfidf = rep.compute_tfidf(docs, vocab)

    table = rep.load_embeddings(fixture_embeddings_path)
    neighborhoods = rep.semantic_neighbors(table, vocab, k=100, alpha=1.0)
    cluwords = rep.build_cluwords(tfidf, neighborhoods)
    gap = np.max(np.abs(cluwords.toarray() - tfidf.toarray()))
    report("cluwords-degeneracy", gap < 1e-12, f"max_gap={gap:.2e}")


def test_partition_invariant(fixture_corpus_path, fixture_embeddings_path, tmp_path):
    config = PipelineConfig(
        input_path=fixture_corpus_path,
        embeddings_path=fixture_embeddings_path,
        output_dir=tmp_path / "store",
        n_topics=3,
    )
    result = build(config)
    model = result.model
    assignments = assign_topics(model)
    partition_ok = sum(assignments.counts) == model.n_docs

    # random assignment-based partitions of H rows must conserve column mass
    rng = np.random.default_rng(99)
    conservation_ok = True
    for _ in range(5):
        groups = rng.integers(0, 4, size=model.n_docs)
        emap = EntityMap(
            "company",
            {
                f"G{g}": frozenset(
                    pid for pid, grp in zip(model.row_ids, groups) if grp == g
                )
                for g in range(4)
            },
        )
        _, raw = aggregate_entity_topics(model.H, model.row_ids, emap)
        gap = np.max(np.abs(raw.sum(axis=0) - model.H.sum(axis=0)))
        conservation_ok = conservation_ok and gap <= 1e-9

    # synthetic corpora of several shapes
    for n, k in ((7, 2), (31, 5)):
        H = np.random.default_rng(n).random((n, k))
        ids = tuple(f"S{i}" for i in range(n))
        from tests.test_factorization import model_from_matrices

        synthetic = model_from_matrices(H, np.ones((k, 2)), row_ids=ids)
        partition_ok = partition_ok and sum(assign_topics(synthetic).counts) == n

    report(
        "partition-invariant",
        partition_ok and conservation_ok,
        f"counts={assignments.counts}",
    )


def test_persistence_roundtrip(
    tmp_path, fixture_corpus_path, fixture_embeddings_path
):
    out = tmp_path / "store"
    config = PipelineConfig(
        input_path=fixture_corpus_path,
        embeddings_path=fixture_embeddings_path,
        output_dir=out,
        n_topics=3,
    )
    result = build(config)
    loaded = ModelStore(out).load_model()
    matrices_ok = (
        loaded.H.tobytes() == result.model.H.tobytes()
        and loaded.W.tobytes() == result.model.W.tobytes()
    )

    auth = tmp_path / "auth.json"
    auth.write_text(json.dumps({"users": {"u": "p"}}), encoding="utf-8")
    client = TestClient(create_app(out, auth))
    stats_ok = client.get("/api/stats").json() == json.loads((out / "stats.json").read_text())

    token = client.post("/api/auth/login", json={"user": "u", "password": "p"}).json()["token"]
    resp = client.patch(
        "/api/topics/0/title",
        json={"title": "Oncology and immunotherapy"},
        headers={"Authorization": f"Bearer {token}"},
    )
    restarted = TestClient(create_app(out, auth))
    title_ok = (
        resp.status_code == 200
        and restarted.get("/api/topics/0").json()["title"] == "Oncology and immunotherapy"
    )
    report(
        "persistence-roundtrip",
        matrices_ok and stats_ok and title_ok,
        f"matrices={matrices_ok} stats={stats_ok} title={title_ok}",
    )
