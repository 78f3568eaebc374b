"""Field-weighted tf-idf search over title, content, categories and tags.

Tags are indexed as text: every token of a tag enters the tags field with a
term frequency equal to the tag's distinct-annotator weight, so terms that
many users agreed on rank higher. This is what makes tag-only retrieval
work: an article whose content never says "programming" is still found once
two users tagged it that way.

Scoring is additive over query terms and enabled fields::

    score(a) = sum_q sum_f  field_weight(f) * tf_f(q, a) * idf(q)
    idf(q)   = ln((N + 1) / (df(q) + 1)) + 1

df counts distinct articles containing the term in any indexed field and is
a property of the built index, so toggling fields at query time only adds
or removes non-negative score terms — enabling the tags field can never
demote an article. Zero-score articles are omitted; ranking ties break by
article id. Disjunctive (OR) matching, no stemming, no stopwords.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field as dataclass_field

from .corpus import ArticleSet, tokenize
from .errors import EmptyQuery, UnknownArticle
from .tags import WeightedTagList

__all__ = ["FIELDS", "FieldConfig", "Index", "SearchResult", "build_index", "search", "explain"]

FIELDS = ("title", "content", "categories", "tags")

DEFAULT_WEIGHTS = {"title": 2.0, "content": 1.0, "categories": 1.5, "tags": 1.5}


@dataclass(frozen=True)
class FieldConfig:
    """Which fields participate and how heavily each one counts."""

    enabled: tuple[str, ...] = FIELDS
    weights: dict[str, float] = dataclass_field(default_factory=lambda: dict(DEFAULT_WEIGHTS))

    def __post_init__(self):
        unknown = [f for f in self.enabled if f not in FIELDS]
        if unknown:
            raise ValueError(f"unknown fields: {unknown}")
        if not self.enabled:
            raise ValueError("at least one field must be enabled")
        bad = [f for f, w in self.weights.items() if w <= 0]
        if bad:
            raise ValueError(f"field weights must be positive: {bad}")
        # canonical field order regardless of how the caller listed them
        object.__setattr__(self, "enabled", tuple(f for f in FIELDS if f in self.enabled))

    @classmethod
    def for_fields(cls, enabled: tuple[str, ...] | list[str]) -> "FieldConfig":
        return cls(enabled=tuple(enabled))


@dataclass
class Index:
    """Immutable inverted index: per-field term -> {article -> tf}."""

    postings: dict[str, dict[str, dict[str, int]]]
    df: dict[str, int]
    doc_count: int
    fields: tuple[str, ...]
    article_ids: set[str]

    def idf(self, term: str) -> float:
        return math.log((self.doc_count + 1) / (self.df.get(term, 0) + 1)) + 1.0

    def postings_for(self, field: str, term: str) -> list[tuple[str, int]]:
        """The (article, tf) postings of a term in one field, sorted by id."""
        return sorted(self.postings.get(field, {}).get(term, {}).items())


@dataclass(frozen=True)
class SearchResult:
    article: str
    score: float
    matched_fields: dict[str, list[str]]


def _field_tokens(article, taglist: WeightedTagList | None, field: str) -> list[tuple[str, int]]:
    """(term, tf-increment) pairs contributed by one field of one article."""
    if field == "title":
        return [(t, 1) for t in tokenize(article.title)]
    if field == "content":
        return [(t, 1) for t in tokenize(article.content)]
    if field == "categories":
        return [(t, 1) for name in article.categories for t in tokenize(name)]
    if field == "tags":
        if taglist is None:
            return []
        return [(t, w) for tag, w in taglist.weights.items() for t in tokenize(tag)]
    raise ValueError(f"unknown field: {field}")


def build_index(
    articles: ArticleSet,
    taglists: dict[str, WeightedTagList],
    config: FieldConfig | None = None,
) -> Index:
    """Index the corpus over the config's enabled fields.

    Every article in ``articles`` counts toward N, tagged or not; articles
    appearing only in ``taglists`` are rejected. Multi-token tags contribute
    each token, and tokens shared by several tags of one article accumulate
    their weights.
    """
    config = config or FieldConfig()
    unknown = set(taglists) - articles.ids()
    if unknown:
        raise UnknownArticle(sorted(unknown)[0])
    postings: dict[str, dict[str, dict[str, int]]] = {f: {} for f in config.enabled}
    seen_in: dict[str, set[str]] = {}
    for article in articles:
        taglist = taglists.get(article.id)
        for field in config.enabled:
            field_postings = postings[field]
            for term, increment in _field_tokens(article, taglist, field):
                bucket = field_postings.setdefault(term, {})
                bucket[article.id] = bucket.get(article.id, 0) + increment
                seen_in.setdefault(term, set()).add(article.id)
    df = {term: len(ids) for term, ids in seen_in.items()}
    return Index(
        postings=postings,
        df=df,
        doc_count=len(articles),
        fields=config.enabled,
        article_ids=articles.ids(),
    )


def search(index: Index, query: str, config: FieldConfig | None = None) -> list[SearchResult]:
    """Rank articles for the query over the enabled fields.

    The query is tokenized with the corpus tokenizer; a query with no terms
    raises :class:`EmptyQuery`. Fields enabled in the config but absent from
    the index contribute nothing. ``matched_fields`` records, per query
    term, which fields of the result contain it.
    """
    config = config or FieldConfig(enabled=index.fields)
    terms = tokenize(query)
    if not terms:
        raise EmptyQuery()
    fields = [f for f in config.enabled if f in index.fields]
    scores: dict[str, float] = {}
    matched: dict[str, dict[str, list[str]]] = {}
    for term in terms:
        idf = index.idf(term)
        for field in fields:
            weight = config.weights.get(field, DEFAULT_WEIGHTS[field])
            for article_id, tf in index.postings.get(field, {}).get(term, {}).items():
                scores[article_id] = scores.get(article_id, 0.0) + weight * tf * idf
                term_fields = matched.setdefault(article_id, {}).setdefault(term, [])
                if field not in term_fields:
                    term_fields.append(field)
    ranked = sorted(
        (a for a, s in scores.items() if s > 0),
        key=lambda a: (-scores[a], a),
    )
    return [
        SearchResult(article=a, score=scores[a], matched_fields=matched[a]) for a in ranked
    ]


def explain(index: Index, article_id: str, term: str) -> dict[str, int]:
    """Per-field term frequency of one term in one article.

    The diagnostic behind "found via tags only": a tag-only match shows
    zero everywhere except the tags field. The term is tokenized like any
    query text and must reduce to a single term.
    """
    if article_id not in index.article_ids:
        raise UnknownArticle(article_id)
    terms = tokenize(term)
    if not terms:
        raise EmptyQuery()
    if len(terms) > 1:
        raise ValueError(f"explain takes a single term, got {terms}")
    token = terms[0]
    return {
        field: index.postings.get(field, {}).get(token, {}).get(article_id, 0)
        for field in index.fields
    }
