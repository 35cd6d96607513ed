"""Entity-level analytics over a fitted topic model.

The pertinence of an inventor, company, or molecule for a topic is the sum of
that entity's patents' H-row values in the topic column; normalizing each
entity row to fractions gives the per-topic impact percentages. The same
arithmetic serves all three entity kinds.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from .corpus import PatentRecord
from .factorization import TopicAssignments, TopicDistribution, TopicModel

ENTITY_KINDS = ("inventor", "company", "molecule")


@dataclass(frozen=True)
class EntityMap:
    """Ownership map for one entity kind: entity name -> set of patent ids."""

    kind: str
    owner: dict[str, frozenset[str]]


@dataclass(frozen=True)
class EntityPertinence:
    """Raw (summed) and normalized entity-by-topic mass for one entity kind."""

    kind: str
    entities: tuple[str, ...]
    raw: np.ndarray
    normalized: np.ndarray
    zero_rows: tuple[int, ...] = ()

    def row(self, entity: str) -> int:
        return self.entities.index(entity)


@dataclass(frozen=True)
class ComparisonResult:
    """Topic intersection of two or more patents at a share threshold."""

    patent_ids: tuple[str, ...]
    per_patent: tuple[TopicDistribution, ...]
    shared_topics: frozenset[int]
    pairwise_shared: dict[tuple[str, str], frozenset[int]]


@dataclass(frozen=True)
class DashboardStats:
    """Corpus-wide counts surfaced on the explorer homepage."""

    total_patents: int
    total_companies: int
    total_molecules: int
    total_inventors: int
    patents_per_filed_year: dict[int, int]
    patents_per_granted_year: dict[int, int]
    patents_per_company: dict[str, int]
    patents_per_molecule: dict[str, int]
    patents_per_topic: tuple[int, ...]
    recent_patents: tuple[dict, ...]

    def to_dict(self) -> dict:
        return {
            "total_patents": self.total_patents,
            "total_companies": self.total_companies,
            "total_molecules": self.total_molecules,
            "total_inventors": self.total_inventors,
            "patents_per_filed_year": {str(y): c for y, c in sorted(self.patents_per_filed_year.items())},
            "patents_per_granted_year": {str(y): c for y, c in sorted(self.patents_per_granted_year.items())},
            "patents_per_company": dict(sorted(self.patents_per_company.items())),
            "patents_per_molecule": dict(sorted(self.patents_per_molecule.items())),
            "patents_per_topic": list(self.patents_per_topic),
            "recent_patents": [dict(p) for p in self.recent_patents],
        }


def entity_maps(records: list[PatentRecord]) -> dict[str, EntityMap]:
    """Build the inventor, company, and molecule ownership maps of a corpus."""
    owners: dict[str, dict[str, set[str]]] = {kind: {} for kind in ENTITY_KINDS}
    for r in records:
        for inventor in r.inventors:
            owners["inventor"].setdefault(inventor, set()).add(r.id)
        if r.company:
            owners["company"].setdefault(r.company, set()).add(r.id)
        if r.drug:
            owners["molecule"].setdefault(r.drug, set()).add(r.id)
    return {
        kind: EntityMap(kind, {name: frozenset(ids) for name, ids in table.items()})
        for kind, table in owners.items()
    }


def aggregate_entity_topics(
    H: np.ndarray,
    row_ids: tuple[str, ...],
    emap: EntityMap,
) -> tuple[tuple[str, ...], np.ndarray]:
    """Sum H rows per owning entity.

    Returns the entity names (lexicographic) and the raw pertinence matrix,
    one row per entity. Entities owning no patents are excluded; an unknown
    patent id is an error.
    """
    row_of = {pid: i for i, pid in enumerate(row_ids)}
    names = tuple(sorted(name for name, ids in emap.owner.items() if ids))
    k = H.shape[1]
    raw = np.zeros((len(names), k), dtype=np.float64)
    for e, name in enumerate(names):
        for pid in emap.owner[name]:
            row = row_of.get(pid)
            if row is None:
                raise KeyError(f"entity map references unknown patent id {pid!r}")
            raw[e] += H[row]
    return names, raw


def normalize_pertinence(raw: np.ndarray) -> tuple[np.ndarray, tuple[int, ...]]:
    """Divide each row by its sum; zero rows are flagged, not divided."""
    if raw.size and raw.min() < 0:
        raise ValueError("pertinence matrix must be non-negative")
    sums = raw.sum(axis=1)
    zero_rows = tuple(int(i) for i in np.flatnonzero(sums == 0))
    safe = np.where(sums == 0, 1.0, sums)
    return raw / safe[:, None], zero_rows


def compute_pertinence(
    model: TopicModel,
    emap: EntityMap,
) -> EntityPertinence:
    """Raw plus normalized pertinence for one entity kind."""
    if model.row_ids is None:
        raise ValueError("model carries no patent row ids")
    names, raw = aggregate_entity_topics(model.H, model.row_ids, emap)
    normalized, zero_rows = normalize_pertinence(raw)
    return EntityPertinence(emap.kind, names, raw, normalized, zero_rows)


def top_entities_per_topic(
    pert: EntityPertinence,
    topic: int,
    n: int,
) -> list[str]:
    """The n entities with the largest raw mass in one topic column.

    Descending by mass, ties lexicographic; fewer than n entities returns all.
    """
    k = pert.raw.shape[1]
    if not 0 <= topic < k:
        raise IndexError(f"topic index {topic} out of range 0..{k - 1}")
    if n < 1:
        raise ValueError("n must be >= 1")
    column = pert.raw[:, topic]
    order = sorted(range(len(pert.entities)), key=lambda i: (-column[i], pert.entities[i]))
    return [pert.entities[i] for i in order[:n]]


def compare_patents(
    distributions: list[TopicDistribution],
    share_threshold: float = 0.05,
) -> ComparisonResult:
    """Intersect the above-threshold topics of two or more patents.

    ``shared_topics`` holds the topics on which every compared patent's share
    reaches the threshold; ``pairwise_shared`` the same per unordered pair.
    The result is independent of input order.
    """
    if len(distributions) < 2:
        raise ValueError("comparison needs at least 2 patents")
    ids = [d.patent_id for d in distributions]
    if len(set(ids)) != len(ids):
        raise ValueError("duplicate patent ids in comparison")
    if not 0 < share_threshold < 1:
        raise ValueError("share_threshold must be in (0, 1)")

    above = {
        d.patent_id: frozenset(int(t) for t in np.flatnonzero(d.shares >= share_threshold))
        for d in distributions
    }
    shared = frozenset.intersection(*above.values())
    pairwise: dict[tuple[str, str], frozenset[int]] = {}
    for i in range(len(ids)):
        for j in range(i + 1, len(ids)):
            key = tuple(sorted((ids[i], ids[j])))
            pairwise[key] = above[ids[i]] & above[ids[j]]
    return ComparisonResult(tuple(ids), tuple(distributions), shared, pairwise)


def _recency_key(r: PatentRecord):
    year = r.granted_year if r.granted_year is not None else r.filed_year
    # undated records sort after every dated one
    return (0, -year, r.id) if year is not None else (1, 0, r.id)


def corpus_stats(
    records: list[PatentRecord],
    assignments: TopicAssignments,
) -> DashboardStats:
    """Dashboard totals, histograms, per-topic counts, and recent patents."""
    companies = Counter(r.company for r in records if r.company)
    molecules = Counter(r.drug for r in records if r.drug)
    inventors = {name for r in records for name in r.inventors}
    filed = Counter(r.filed_year for r in records if r.filed_year is not None)
    granted = Counter(r.granted_year for r in records if r.granted_year is not None)

    recent = sorted(records, key=_recency_key)[:10]
    recent_payload = tuple(
        {
            "id": r.id,
            "title": r.title,
            "company": r.company,
            "drug": r.drug,
            "granted_year": r.granted_year,
            "filed_year": r.filed_year,
        }
        for r in recent
    )
    return DashboardStats(
        total_patents=len(records),
        total_companies=len(companies),
        total_molecules=len(molecules),
        total_inventors=len(inventors),
        patents_per_filed_year=dict(filed),
        patents_per_granted_year=dict(granted),
        patents_per_company=dict(companies),
        patents_per_molecule=dict(molecules),
        patents_per_topic=assignments.counts,
        recent_patents=recent_payload,
    )


def word_cloud(model: TopicModel, n: int) -> list[tuple[str, float]]:
    """Top n terms by total W column mass, ties lexicographic, zeros omitted."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if model.vocabulary is None:
        raise ValueError("model carries no vocabulary")
    sums = model.W.sum(axis=0)
    terms = model.vocabulary.terms
    nonzero = [i for i in range(len(terms)) if sums[i] > 0]
    order = sorted(nonzero, key=lambda i: (-sums[i], terms[i]))
    return [(terms[i], float(sums[i])) for i in order[:n]]
