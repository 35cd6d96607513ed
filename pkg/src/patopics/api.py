"""HTTP JSON API over a persisted model store.

The server loads one immutable snapshot of the store and answers all reads
from it. Topic title edits are the only mutation: they are serialized through
a single writer lock, persisted atomically to titles.json, and published by
swapping in a fresh snapshot, so concurrent readers see either the old or the
new title but never a torn state. Reads are public; mutations require a
bearer token from /api/auth/login.
"""

from __future__ import annotations

import json
import secrets
import threading
import time
from dataclasses import dataclass, replace
from pathlib import Path

import numpy as np
from fastapi import Depends, FastAPI, Header, HTTPException, Request
from fastapi.exceptions import RequestValidationError
from fastapi.responses import JSONResponse
from pydantic import BaseModel

from . import correlation, factorization
from .corpus import PatentRecord
from .correlation import EntityMap, EntityPertinence
from .factorization import TopicModel
from .store import ModelStore, StoreError

SESSION_TTL_SECONDS = 12 * 3600
COMPANIES_PER_TOPIC_CHOICES = (5, 10, 15, 20)


@dataclass(frozen=True)
class Session:
    token: str
    user: str
    expiry: float


@dataclass(frozen=True)
class Snapshot:
    """Immutable view of one loaded store."""

    store: ModelStore
    records: tuple[PatentRecord, ...]
    by_id: dict[str, PatentRecord]
    row_of: dict[str, int]
    model: TopicModel
    assignments: factorization.TopicAssignments
    emaps: dict[str, EntityMap]
    pertinence: dict[str, EntityPertinence]
    stats: dict
    config: dict


def load_snapshot(store: ModelStore) -> Snapshot:
    store.validate()
    records = store.load_records()
    model = store.load_model()
    if model.row_ids != tuple(r.id for r in records):
        raise StoreError("corpus.jsonl row order does not match the model row ids")
    assignments = factorization.assign_topics(model)
    emaps = correlation.entity_maps(list(records))
    pertinence = {
        kind: correlation.compute_pertinence(model, emap) for kind, emap in emaps.items()
    }
    return Snapshot(
        store=store,
        records=tuple(records),
        by_id={r.id: r for r in records},
        row_of={r.id: i for i, r in enumerate(records)},
        model=model,
        assignments=assignments,
        emaps=emaps,
        pertinence=pertinence,
        stats=store.load_stats(),
        config=store.load_config(),
    )


def _load_credentials(auth_path: str | Path | None) -> dict[str, str]:
    if auth_path is None:
        return {}
    payload = json.loads(Path(auth_path).read_text(encoding="utf-8"))
    users = payload.get("users", payload)
    if not isinstance(users, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in users.items()
    ):
        raise ValueError("credentials file must map user names to passwords")
    return dict(users)


class TitleUpdate(BaseModel):
    title: str


class LoginRequest(BaseModel):
    user: str
    password: str


def _shares(dist: factorization.TopicDistribution) -> list[float]:
    return [float(x) for x in dist.shares]


def _distribution_payload(dist: factorization.TopicDistribution) -> dict:
    return {
        "id": dist.patent_id,
        "shares": _shares(dist),
        "dominant": dist.dominant,
        "is_zero": dist.is_zero,
    }


def _patent_payload(snap: Snapshot, record: PatentRecord) -> dict:
    row = snap.row_of[record.id]
    dist = factorization.topic_distribution(snap.model, row)
    payload = record.to_dict()
    payload["distribution"] = _distribution_payload(dist)
    payload["topic"] = dist.dominant
    payload["topic_title"] = snap.model.titles[dist.dominant]
    return payload


def _topic_payload(snap: Snapshot, topic: int, n_words: int) -> dict:
    return {
        "topic": topic,
        "title": snap.model.titles[topic],
        "patent_count": snap.assignments.counts[topic],
        "top_words": [
            {"term": t, "weight": w}
            for t, w in factorization.top_words(snap.model, topic, n_words)
        ],
    }


def _entity_detail(snap: Snapshot, kind: str, name: str) -> dict:
    pert = snap.pertinence[kind]
    if name not in pert.entities:
        raise HTTPException(status_code=404, detail=f"unknown {kind} {name!r}")
    e = pert.row(name)
    emap_ids = sorted(snap.emaps[kind].owner[name])
    patents = []
    per_topic: dict[int, int] = {}
    for pid in emap_ids:
        record = snap.by_id[pid]
        topic = snap.assignments.by_patent[pid]
        per_topic[topic] = per_topic.get(topic, 0) + 1
        patents.append(
            {
                "id": pid,
                "title": record.title,
                "topic": topic,
                "drug": record.drug,
                "company": record.company,
                "granted_year": record.granted_year,
                "filed_year": record.filed_year,
            }
        )
    return {
        "kind": kind,
        "name": name,
        "patent_count": len(emap_ids),
        "patents_per_topic": {str(t): c for t, c in sorted(per_topic.items())},
        "pertinence_raw": [float(x) for x in pert.raw[e]],
        "pertinence": [float(x) for x in pert.normalized[e]],
        "is_zero": e in pert.zero_rows,
        "patents": patents,
    }


def create_app(
    model_dir: str | Path,
    auth_path: str | Path | None = None,
    ui_dir: str | Path | None = None,
) -> FastAPI:
    """Build the API application for one store directory.

    With ``ui_dir`` set, the built single-page explorer in that directory is
    served at the web root (API routes keep precedence).
    """
    store = ModelStore(Path(model_dir))
    app = FastAPI(title="patopics", docs_url=None, redoc_url=None)
    app.state.snapshot = load_snapshot(store)
    app.state.credentials = _load_credentials(auth_path)
    app.state.sessions = {}
    app.state.write_lock = threading.Lock()

    @app.exception_handler(HTTPException)
    async def http_error(_request: Request, exc: HTTPException):
        body = exc.detail if isinstance(exc.detail, dict) else {"error": str(exc.detail)}
        return JSONResponse(status_code=exc.status_code, content=body)

    @app.exception_handler(RequestValidationError)
    async def validation_error(_request: Request, exc: RequestValidationError):
        return JSONResponse(status_code=400, content={"error": str(exc.errors()[:1])})

    def snapshot() -> Snapshot:
        return app.state.snapshot

    def require_auth(authorization: str | None = Header(default=None)) -> Session:
        if not authorization or not authorization.startswith("Bearer "):
            raise HTTPException(status_code=401, detail="missing bearer token")
        token = authorization.removeprefix("Bearer ").strip()
        session = app.state.sessions.get(token)
        if session is None or session.expiry < time.time():
            app.state.sessions.pop(token, None)
            raise HTTPException(status_code=401, detail="invalid or expired token")
        return session

    def valid_topic(snap: Snapshot, topic: int) -> int:
        if not 0 <= topic < snap.model.k:
            raise HTTPException(status_code=404, detail=f"topic {topic} does not exist")
        return topic

    @app.post("/api/auth/login")
    def login(body: LoginRequest):
        expected = app.state.credentials.get(body.user)
        if expected is None or not secrets.compare_digest(expected, body.password):
            raise HTTPException(status_code=401, detail="invalid credentials")
        session = Session(
            token=secrets.token_urlsafe(32),
            user=body.user,
            expiry=time.time() + SESSION_TTL_SECONDS,
        )
        app.state.sessions[session.token] = session
        return {"token": session.token, "user": session.user}

    @app.get("/api/stats")
    def stats():
        return snapshot().stats

    @app.get("/api/topics")
    def topics(top_words: int | None = None):
        snap = snapshot()
        n = top_words if top_words is not None else int(snap.config.get("top_words", 30))
        n = min(n, snap.model.n_terms)
        if n < 1:
            raise HTTPException(status_code=400, detail="top_words must be >= 1")
        return {
            "k": snap.model.k,
            "top_words": n,
            "topics": [_topic_payload(snap, t, n) for t in range(snap.model.k)],
        }

    @app.get("/api/topics/{topic}")
    def topic_detail(topic: int, top_words: int | None = None):
        snap = snapshot()
        valid_topic(snap, topic)
        n = top_words if top_words is not None else int(snap.config.get("top_words", 30))
        n = min(n, snap.model.n_terms)
        if n < 1:
            raise HTTPException(status_code=400, detail="top_words must be >= 1")
        return _topic_payload(snap, topic, n)

    @app.get("/api/topics/{topic}/patents")
    def topic_patents(topic: int):
        snap = snapshot()
        valid_topic(snap, topic)
        entries = []
        for pid, assigned in snap.assignments.by_patent.items():
            if assigned != topic:
                continue
            record = snap.by_id[pid]
            dist = factorization.topic_distribution(snap.model, snap.row_of[pid])
            share = float(dist.shares[topic]) if not dist.is_zero else 0.0
            entries.append(
                {
                    "id": pid,
                    "title": record.title,
                    "company": record.company,
                    "drug": record.drug,
                    "strength": record.strength,
                    "granted_year": record.granted_year,
                    "filed_year": record.filed_year,
                    "abstract": record.abstract,
                    "share": share,
                }
            )
        entries.sort(key=lambda e: (-e["share"], e["id"]))
        return {
            "topic": topic,
            "title": snap.model.titles[topic],
            "patent_count": len(entries),
            "patents": entries,
        }

    @app.patch("/api/topics/{topic}/title")
    def patch_title(topic: int, body: TitleUpdate, _session: Session = Depends(require_auth)):
        with app.state.write_lock:
            snap = snapshot()
            valid_topic(snap, topic)
            title = body.title.strip()
            if not title:
                raise HTTPException(status_code=400, detail="title must be non-empty")
            titles = list(snap.model.titles)
            titles[topic] = title
            snap.store.write_titles(titles)
            model = replace_titles(snap.model, titles)
            app.state.snapshot = replace(snap, model=model)
        return {"topic": topic, "title": title}

    @app.get("/api/companies")
    def companies(per_topic: int = 10):
        snap = snapshot()
        if per_topic not in COMPANIES_PER_TOPIC_CHOICES:
            raise HTTPException(
                status_code=400,
                detail=f"per_topic must be one of {list(COMPANIES_PER_TOPIC_CHOICES)}",
            )
        pert = snap.pertinence["company"]
        payload = []
        for t in range(snap.model.k):
            names = correlation.top_entities_per_topic(pert, t, per_topic)
            payload.append(
                {
                    "topic": t,
                    "title": snap.model.titles[t],
                    "companies": [
                        {"name": n, "weight": float(pert.raw[pert.row(n), t])} for n in names
                    ],
                }
            )
        return {"per_topic": per_topic, "topics": payload}

    @app.get("/api/companies/{name}")
    def company_detail(name: str):
        return _entity_detail(snapshot(), "company", name)

    @app.get("/api/molecules")
    def molecules():
        snap = snapshot()
        pert = snap.pertinence["molecule"]
        counts = snap.stats.get("patents_per_molecule", {})
        entries = []
        for name in pert.entities:
            e = pert.row(name)
            entries.append(
                {
                    "name": name,
                    "patent_count": int(counts.get(name, 0)),
                    "dominant_topic": int(np.argmax(pert.raw[e])) if pert.raw.size else 0,
                    "shares": [float(x) for x in pert.normalized[e]],
                }
            )
        entries.sort(key=lambda m: (-m["patent_count"], m["name"]))
        return {"molecules": entries}

    @app.get("/api/molecules/{name}")
    def molecule_detail(name: str):
        return _entity_detail(snapshot(), "molecule", name)

    @app.get("/api/inventors/{name}")
    def inventor_detail(name: str):
        return _entity_detail(snapshot(), "inventor", name)

    @app.get("/api/patents/{patent_id}")
    def patent_detail(patent_id: str):
        snap = snapshot()
        record = snap.by_id.get(patent_id)
        if record is None:
            raise HTTPException(status_code=404, detail=f"unknown patent {patent_id!r}")
        return _patent_payload(snap, record)

    @app.get("/api/compare")
    def compare(ids: str, threshold: float = 0.05):
        snap = snapshot()
        wanted = [x.strip() for x in ids.split(",") if x.strip()]
        for pid in wanted:
            if pid not in snap.by_id:
                raise HTTPException(status_code=404, detail=f"unknown patent {pid!r}")
        distributions = [
            factorization.topic_distribution(snap.model, snap.row_of[pid]) for pid in wanted
        ]
        try:
            result = correlation.compare_patents(distributions, threshold)
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return {
            "patent_ids": list(result.patent_ids),
            "threshold": threshold,
            "shared_topics": sorted(result.shared_topics),
            "pairwise_shared": [
                {"pair": list(pair), "topics": sorted(topics)}
                for pair, topics in sorted(result.pairwise_shared.items())
            ],
            "per_patent": [_distribution_payload(d) for d in result.per_patent],
        }

    @app.get("/api/wordcloud")
    def wordcloud(n: int = 100):
        snap = snapshot()
        if n < 1:
            raise HTTPException(status_code=400, detail="n must be >= 1")
        return {
            "terms": [
                {"term": t, "weight": w} for t, w in correlation.word_cloud(snap.model, n)
            ]
        }

    @app.post("/api/reload")
    def reload(_session: Session = Depends(require_auth)):
        with app.state.write_lock:
            app.state.snapshot = load_snapshot(store)
        return {"reloaded": True}

    if ui_dir is not None:
        from fastapi.staticfiles import StaticFiles

        app.mount("/", StaticFiles(directory=Path(ui_dir), html=True), name="ui")

    return app


def replace_titles(model: TopicModel, titles: list[str]) -> TopicModel:
    """Copy a model with new titles; factors are shared, not copied."""
    return TopicModel(
        k=model.k,
        H=model.H,
        W=model.W,
        titles=list(titles),
        objective_trace=model.objective_trace,
        seed=model.seed,
        iterations_run=model.iterations_run,
        row_ids=model.row_ids,
        vocabulary=model.vocabulary,
    )


def serve(model_dir: str | Path, port: int, auth_path: str | Path | None = None,
          host: str = "127.0.0.1", ui_dir: str | Path | None = None) -> None:
    """Run the API server (blocking)."""
    import uvicorn

    uvicorn.run(
        create_app(model_dir, auth_path, ui_dir), host=host, port=port, log_level="info"
    )
