"""patopics: patent corpus topic modeling and analytics.

Pipeline: JSONL patents -> preprocessing -> bigram phrases -> TF-IDF ->
embedding-based semantic reweighting -> NMF -> entity pertinence analytics,
served over an HTTP JSON API.
"""

__version__ = "0.1.0"
