import json
import threading

import pytest
from fastapi.testclient import TestClient

from patopics.api import create_app
from patopics.pipeline import PipelineConfig, build


@pytest.fixture(scope="module")
def store_dir(tmp_path_factory, fixture_corpus_path, fixture_embeddings_path):
    out = tmp_path_factory.mktemp("api-store") / "model"
    config = PipelineConfig(
        input_path=fixture_corpus_path,
        embeddings_path=fixture_embeddings_path,
        output_dir=out,
        n_topics=3,
        max_iter=300,
        tol=1e-8,
        seed=42,
    )
    build(config)
    return out


@pytest.fixture(scope="module")
def auth_file(tmp_path_factory):
    path = tmp_path_factory.mktemp("auth") / "credentials.json"
    path.write_text(json.dumps({"users": {"curator": "s3cret"}}), encoding="utf-8")
    return path


@pytest.fixture()
def client(store_dir, auth_file):
    app = create_app(store_dir, auth_file)
    with TestClient(app) as c:
        yield c


def login(client) -> dict:
    resp = client.post("/api/auth/login", json={"user": "curator", "password": "s3cret"})
    assert resp.status_code == 200
    token = resp.json()["token"]
    return {"Authorization": f"Bearer {token}"}


class TestStats:
    def test_stats_equals_stats_json(self, client, store_dir):
        expected = json.loads((store_dir / "stats.json").read_text())
        assert client.get("/api/stats").json() == expected

    def test_topic_counts_sum_to_total(self, client):
        stats = client.get("/api/stats").json()
        topics = client.get("/api/topics").json()["topics"]
        assert sum(t["patent_count"] for t in topics) == stats["total_patents"]


class TestTopics:
    def test_topics_listing_shape(self, client):
        payload = client.get("/api/topics", params={"top_words": 5}).json()
        assert payload["k"] == 3
        assert len(payload["topics"]) == 3
        for topic in payload["topics"]:
            assert len(topic["top_words"]) == 5
            weights = [w["weight"] for w in topic["top_words"]]
            assert weights == sorted(weights, reverse=True)

    def test_topic_detail(self, client):
        payload = client.get("/api/topics/1").json()
        assert payload["topic"] == 1
        assert payload["title"]
        assert payload["patent_count"] > 0

    def test_topic_out_of_range_404(self, client):
        resp = client.get("/api/topics/99")
        assert resp.status_code == 404
        assert "error" in resp.json()

    def test_topic_patents_match_assignments(self, client):
        stats = client.get("/api/stats").json()
        for t in range(3):
            payload = client.get(f"/api/topics/{t}/patents").json()
            assert payload["patent_count"] == stats["patents_per_topic"][t]
            for p in payload["patents"]:
                assert 0.0 <= p["share"] <= 1.0

    def test_bad_top_words_rejected(self, client):
        assert client.get("/api/topics", params={"top_words": 0}).status_code == 400


class TestAuthAndTitleEdits:
    def test_unauthenticated_patch_rejected(self, client):
        resp = client.patch("/api/topics/0/title", json={"title": "X"})
        assert resp.status_code == 401
        assert "error" in resp.json()

    def test_reads_are_public(self, client):
        assert client.get("/api/topics").status_code == 200

    def test_bad_login_rejected(self, client):
        resp = client.post("/api/auth/login", json={"user": "curator", "password": "nope"})
        assert resp.status_code == 401

    def test_patch_title_roundtrip_and_restart(self, client, store_dir, auth_file):
        headers = login(client)
        resp = client.patch(
            "/api/topics/2/title",
            json={"title": "Delivery systems and devices"},
            headers=headers,
        )
        assert resp.status_code == 200
        assert client.get("/api/topics/2").json()["title"] == "Delivery systems and devices"

        # a fresh app instance simulates a server restart over the same store
        restarted = TestClient(create_app(store_dir, auth_file))
        assert restarted.get("/api/topics/2").json()["title"] == "Delivery systems and devices"

    def test_empty_title_rejected(self, client):
        headers = login(client)
        resp = client.patch("/api/topics/0/title", json={"title": "   "}, headers=headers)
        assert resp.status_code == 400

    def test_patch_out_of_range_404(self, client):
        headers = login(client)
        resp = client.patch("/api/topics/99/title", json={"title": "X"}, headers=headers)
        assert resp.status_code == 404

    def test_invalid_token_rejected(self, client):
        resp = client.patch(
            "/api/topics/0/title",
            json={"title": "X"},
            headers={"Authorization": "Bearer bogus"},
        )
        assert resp.status_code == 401

    def test_no_torn_titles_under_concurrent_reads(self, client):
        headers = login(client)
        titles = ("Alpha title", "Beta title")
        seen = set()
        stop = threading.Event()

        def reader():
            while not stop.is_set():
                seen.add(client.get("/api/topics/0").json()["title"])

        threads = [threading.Thread(target=reader) for _ in range(4)]
        for t in threads:
            t.start()
        for i in range(20):
            client.patch("/api/topics/0/title", json={"title": titles[i % 2]}, headers=headers)
        stop.set()
        for t in threads:
            t.join()
        assert seen <= {"Topic 0", *titles}


class TestEntities:
    def test_companies_per_topic_choices(self, client):
        payload = client.get("/api/companies", params={"per_topic": 5}).json()
        assert payload["per_topic"] == 5
        assert len(payload["topics"]) == 3
        for t in payload["topics"]:
            assert len(t["companies"]) <= 5
            weights = [c["weight"] for c in t["companies"]]
            assert weights == sorted(weights, reverse=True)

    def test_companies_invalid_choice_400(self, client):
        assert client.get("/api/companies", params={"per_topic": 7}).status_code == 400

    def test_company_detail(self, client):
        name = client.get("/api/companies", params={"per_topic": 5}).json()["topics"][0][
            "companies"
        ][0]["name"]
        detail = client.get(f"/api/companies/{name}").json()
        assert detail["name"] == name
        assert detail["patent_count"] == len(detail["patents"])
        assert abs(sum(detail["pertinence"]) - 1.0) < 1e-9

    def test_unknown_company_404(self, client):
        assert client.get("/api/companies/Nonexistent Corp").status_code == 404

    def test_molecules_listing_and_detail(self, client):
        molecules = client.get("/api/molecules").json()["molecules"]
        assert molecules
        counts = [m["patent_count"] for m in molecules]
        assert counts == sorted(counts, reverse=True)
        top = molecules[0]["name"]
        detail = client.get(f"/api/molecules/{top}").json()
        assert detail["kind"] == "molecule"
        assert detail["patent_count"] == molecules[0]["patent_count"]

    def test_inventor_detail(self, client, store_dir):
        first = json.loads((store_dir / "corpus.jsonl").read_text().splitlines()[0])
        inventor = first["inventors"][0]
        detail = client.get(f"/api/inventors/{inventor}").json()
        assert detail["kind"] == "inventor"
        assert first["id"] in [p["id"] for p in detail["patents"]]


class TestPatentsAndCompare:
    def test_patent_detail_includes_distribution_and_url(self, client):
        detail = client.get("/api/patents/P001").json()
        assert detail["id"] == "P001"
        assert detail["url"].startswith("https://")
        shares = detail["distribution"]["shares"]
        assert len(shares) == 3
        assert abs(sum(shares) - 1.0) < 1e-9

    def test_unknown_patent_404(self, client):
        assert client.get("/api/patents/NOPE").status_code == 404

    def test_compare_matches_per_patent_thresholding(self, client):
        ids = ["P001", "P002", "P021"]
        threshold = 0.05
        resp = client.get(
            "/api/compare", params={"ids": ",".join(ids), "threshold": threshold}
        ).json()
        above = []
        for pid in ids:
            shares = client.get(f"/api/patents/{pid}").json()["distribution"]["shares"]
            above.append({t for t, s in enumerate(shares) if s >= threshold})
        expected = set.intersection(*above)
        assert set(resp["shared_topics"]) == expected
        assert len(resp["pairwise_shared"]) == 3

    def test_compare_requires_two_ids(self, client):
        assert client.get("/api/compare", params={"ids": "P001"}).status_code == 400

    def test_compare_unknown_id_404(self, client):
        resp = client.get("/api/compare", params={"ids": "P001,NOPE"})
        assert resp.status_code == 404

    def test_compare_duplicate_ids_400(self, client):
        assert client.get("/api/compare", params={"ids": "P001,P001"}).status_code == 400

    def test_wordcloud(self, client):
        terms = client.get("/api/wordcloud", params={"n": 10}).json()["terms"]
        assert 0 < len(terms) <= 10
        weights = [t["weight"] for t in terms]
        assert weights == sorted(weights, reverse=True)
        assert client.get("/api/wordcloud", params={"n": 0}).status_code == 400

    def test_reload_requires_auth(self, client):
        assert client.post("/api/reload").status_code == 401

    def test_reload_with_auth(self, client):
        headers = login(client)
        assert client.post("/api/reload", headers=headers).json() == {"reloaded": True}


class TestUiMount:
    def test_ui_served_at_root_when_configured(self, store_dir, tmp_path):
        ui = tmp_path / "ui"
        ui.mkdir()
        (ui / "index.html").write_text("<html><body>explorer</body></html>", encoding="utf-8")
        with TestClient(create_app(store_dir, ui_dir=ui)) as c:
            assert "explorer" in c.get("/").text
            # API routes keep precedence over the static mount
            assert c.get("/api/stats").status_code == 200

    def test_no_ui_mount_by_default(self, client):
        assert client.get("/").status_code == 404
