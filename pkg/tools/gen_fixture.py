#!/usr/bin/env python3
"""Generate the bundled synthetic demo corpus.

Writes three files into src/patopics/data/fixture/:

    corpus.jsonl    60 patents, 20 per planted theme
    embeddings.txt  8-dim toy vectors for the 60 theme terms
    labels.json     patent id -> planted theme, the clustering oracle

Themes use disjoint 20-term vocabularies so a 3-topic factorization can
recover them; a small shared pool of generic pharma words adds realistic
noise. Deterministic for a fixed seed.
"""

from __future__ import annotations

import json
import random
from pathlib import Path

OUT_DIR = Path(__file__).resolve().parents[1] / "src" / "patopics" / "data" / "fixture"

THEMES = {
    "oncology": [
        "tumor", "carcinoma", "oncology", "metastasis", "cytotoxic", "kinase",
        "lymphoma", "chemotherapy", "antibody", "apoptosis", "leukemia",
        "melanoma", "mitosis", "angiogenesis", "biomarker", "remission",
        "oncogene", "checkpoint", "immunotherapy", "proliferation",
    ],
    "cardio": [
        "hypertension", "cardiac", "statin", "arrhythmia", "cholesterol",
        "vascular", "thrombosis", "anticoagulant", "myocardial", "infarction",
        "diuretic", "systolic", "diastolic", "lipoprotein", "triglyceride",
        "angina", "stent", "ischemia", "betablocker", "vasodilator",
    ],
    "delivery": [
        "inhaler", "transdermal", "injector", "capsule", "aerosol",
        "nebulizer", "liposome", "microneedle", "sustained", "release",
        "coating", "excipient", "bioavailability", "polymer", "nanoparticle",
        "hydrogel", "lozenge", "syringe", "implant", "patch",
    ],
}

# adjacent pairs planted often enough to clear the collocation gate
BIGRAMS = {
    "oncology": ("kinase", "inhibitor"),
    "cardio": ("myocardial", "infarction"),
    "delivery": ("sustained", "release"),
}

GENERIC = ["composition", "treatment", "formulation", "dosage", "administration", "patient"]
FILLER = ["the", "of", "and", "a", "in", "for", "with", "to"]

MOLECULES = {
    "oncology": ["tazeronib", "oncubrix", "celomastat"],
    "cardio": ["cardivol", "lipranol", "thrombexin"],
    "delivery": ["dermapatch", "nebulaire", "liposyn"],
}

COMPANIES = {
    "oncology": ["Altapharm", "Bluecrest Biologics"],
    "cardio": ["Corvid Laboratories", "Delta Therapeutics"],
    "delivery": ["Evergreen Pharma", "Foxglove Sciences"],
}
ALL_COMPANIES = [c for pair in COMPANIES.values() for c in pair]

INVENTORS = [
    "M. Arsantes", "K. Obuya", "L. Ferraz", "D. Nowak", "S. Hightower",
    "R. Castellan", "J. Pereda", "T. Ilves", "A. Mbeki", "C. Laurent",
    "P. Svoboda", "V. Ramache",
]

NO_YEAR_IDS = {"P020", "P040", "P059"}


def make_text(rng: random.Random, theme: str, molecule: str) -> tuple[str, str, str]:
    terms = THEMES[theme]
    focus = rng.sample(terms, 8)
    title_words = rng.sample(focus, 4)
    title = f"{molecule.capitalize()} {title_words[0]} {title_words[1]} for {title_words[2]} {title_words[3]}"

    words: list[str] = []
    n_body = rng.randint(35, 50)
    while len(words) < n_body:
        r = rng.random()
        if r < 0.70:
            words.append(rng.choice(focus))
        elif r < 0.80:
            words.append(rng.choice(terms))
        elif r < 0.88:
            words.append(rng.choice(GENERIC))
        elif r < 0.93:
            words.append(molecule)
        else:
            words.append(rng.choice(FILLER))
    # plant the theme collocation as literal adjacency
    a, b = BIGRAMS[theme]
    for _ in range(rng.randint(1, 3)):
        pos = rng.randrange(0, len(words))
        words[pos:pos] = [a, b]
    description = " ".join(words)

    abstract = (
        f"A {rng.choice(GENERIC)} of {molecule} addressing {rng.choice(focus)} "
        f"and {rng.choice(focus)}."
    )
    return title, description, abstract


def make_corpus(rng: random.Random) -> tuple[list[dict], dict[str, str]]:
    records = []
    labels = {}
    pid = 0
    for theme in THEMES:
        for i in range(20):
            pid += 1
            patent_id = f"P{pid:03d}"
            labels[patent_id] = theme
            molecule = MOLECULES[theme][i % 3]
            title, description, abstract = make_text(rng, theme, molecule)
            if rng.random() < 0.85:
                company = COMPANIES[theme][i % 2]
            else:
                company = rng.choice(ALL_COMPANIES)
            record = {
                "id": patent_id,
                "title": title,
                "description": description,
                "abstract": abstract,
                "drug": molecule,
                "company": company,
                "url": f"https://patents.example.org/{patent_id}",
                "strength": f"{rng.choice([5, 10, 25, 50, 100])} mg" if rng.random() < 0.6 else "",
                "trade_name": f"{molecule.capitalize()}ex" if rng.random() < 0.3 else "",
                "inventors": rng.sample(INVENTORS, rng.randint(1, 3)),
            }
            if patent_id not in NO_YEAR_IDS:
                filed = rng.randint(2003, 2019)
                record["filed_year"] = filed
                record["granted_year"] = min(filed + rng.randint(1, 3), 2021)
            records.append(record)
    return records, labels


def make_embeddings(rng: random.Random) -> dict[str, list[float]]:
    centers = {
        "oncology": [1.0, 1.0, 0.0, 0.0, 0.0, 0.0, 0.0, 0.0],
        "cardio": [0.0, 0.0, 1.0, 1.0, 0.0, 0.0, 0.0, 0.0],
        "delivery": [0.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0],
    }
    vectors = {}
    for theme, terms in THEMES.items():
        center = centers[theme]
        for term in terms:
            vec = [c + rng.gauss(0.0, 0.12) for c in center]
            vectors[term] = [round(v, 4) for v in vec]
    return vectors


def main() -> None:
    rng = random.Random(7)
    OUT_DIR.mkdir(parents=True, exist_ok=True)

    records, labels = make_corpus(rng)
    with (OUT_DIR / "corpus.jsonl").open("w", encoding="utf-8") as fh:
        for r in records:
            fh.write(json.dumps(r) + "\n")

    vectors = make_embeddings(rng)
    with (OUT_DIR / "embeddings.txt").open("w", encoding="utf-8") as fh:
        fh.write(f"{len(vectors)} 8\n")
        for term, vec in vectors.items():
            fh.write(term + " " + " ".join(f"{v:.4f}" for v in vec) + "\n")

    (OUT_DIR / "labels.json").write_text(json.dumps(labels, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {len(records)} records, {len(vectors)} vectors to {OUT_DIR}")


if __name__ == "__main__":
    main()
