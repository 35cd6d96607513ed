#!/usr/bin/env python3
"""Capture real API responses from the bundled demo store for frontend tests.

Builds the demo store into a temp directory, then saves selected endpoint
payloads as JSON files under frontend/tests/fixtures/.
"""

from __future__ import annotations

import json
import tempfile
from pathlib import Path

from fastapi.testclient import TestClient

from patopics.api import create_app
from patopics.pipeline import PipelineConfig, build

ROOT = Path(__file__).resolve().parents[1]
FIXTURE = ROOT / "src" / "patopics" / "data" / "fixture"
OUT = ROOT / "frontend" / "tests" / "fixtures"

ENDPOINTS = {
    "stats.json": "/api/stats",
    "topics.json": "/api/topics?top_words=10",
    "topic0_patents.json": "/api/topics/0/patents",
    "companies.json": "/api/companies?per_topic=5",
    "molecules.json": "/api/molecules",
    "wordcloud.json": "/api/wordcloud?n=30",
    "patent_P001.json": "/api/patents/P001",
    "patent_P002.json": "/api/patents/P002",
    "patent_P021.json": "/api/patents/P021",
    "compare.json": "/api/compare?ids=P001,P002,P021&threshold=0.05",
    "compare_pair.json": "/api/compare?ids=P001,P002&threshold=0.05",
}


def main() -> None:
    OUT.mkdir(parents=True, exist_ok=True)
    with tempfile.TemporaryDirectory() as tmp:
        store = Path(tmp) / "store"
        build(
            PipelineConfig(
                input_path=FIXTURE / "corpus.jsonl",
                embeddings_path=FIXTURE / "embeddings.txt",
                output_dir=store,
                n_topics=3,
            )
        )
        client = TestClient(create_app(store))
        for name, url in ENDPOINTS.items():
            resp = client.get(url)
            resp.raise_for_status()
            (OUT / name).write_text(
                json.dumps(resp.json(), indent=2, sort_keys=True) + "\n", encoding="utf-8"
            )
            print(f"wrote {name}")


if __name__ == "__main__":
    main()
