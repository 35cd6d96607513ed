import json
from pathlib import Path

import pytest

from patopics.corpus import ProcessedDocument

FIXTURE_DIR = Path(__file__).resolve().parents[1] / "src" / "patopics" / "data" / "fixture"


@pytest.fixture(scope="session")
def fixture_corpus_path() -> Path:
    return FIXTURE_DIR / "corpus.jsonl"


@pytest.fixture(scope="session")
def fixture_embeddings_path() -> Path:
    return FIXTURE_DIR / "embeddings.txt"


@pytest.fixture(scope="session")
def fixture_labels() -> dict[str, str]:
    return json.loads((FIXTURE_DIR / "labels.json").read_text())


def docs_from_token_lists(token_lists) -> list[ProcessedDocument]:
    return [
        ProcessedDocument(f"D{i}", tuple(tokens)) for i, tokens in enumerate(token_lists)
    ]


@pytest.fixture
def tiny_docs() -> list[ProcessedDocument]:
    return docs_from_token_lists(
        [
            ["cancer", "cancer", "treat"],
            ["pain", "treat"],
        ]
    )
