"""Wiki-style article corpus: JSONL loading, validation and tokenization.

Articles arrive as JSON Lines, one object per line::

    {"id": str, "title": str, "content": str, "categories": [str], "links": [str]}

The tokenizer defined here is the single matching substrate shared by the
search index and the presence analytics: case-fold, split on every maximal
run of non-alphanumeric characters, drop empties. No stemming, no stopwords,
so "does this tag occur in this text" stays exact and reproducible.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from itertools import groupby
from pathlib import Path

from .errors import DuplicateId, MalformedLine

__all__ = [
    "Article",
    "ArticleSet",
    "ValidationReport",
    "load_articles",
    "save_articles",
    "tokenize",
    "validate",
]


@dataclass(frozen=True)
class Article:
    """One wiki article: taxonomy (categories) plus link graph plus text."""

    id: str
    title: str
    content: str
    categories: tuple[str, ...] = ()
    links: tuple[str, ...] = ()


@dataclass
class ArticleSet:
    """Id-keyed article collection; the key always equals ``Article.id``."""

    articles: dict[str, Article] = field(default_factory=dict)

    def __len__(self) -> int:
        return len(self.articles)

    def __contains__(self, article_id: str) -> bool:
        return article_id in self.articles

    def __getitem__(self, article_id: str) -> Article:
        return self.articles[article_id]

    def __iter__(self):
        return iter(self.articles.values())

    def ids(self) -> set[str]:
        return set(self.articles)


@dataclass(frozen=True)
class ValidationReport:
    """Diagnostic counts; validation never rejects a loadable corpus."""

    dangling_links: int
    empty_content: int
    empty_title: int

    @property
    def clean(self) -> bool:
        return self.dangling_links == 0 and self.empty_content == 0 and self.empty_title == 0


def tokenize(text: str) -> list[str]:
    """Split text into normalized terms.

    Case-folds the whole string first, then keeps every maximal run of
    alphanumeric characters. Deterministic and idempotent on its own
    output: ``tokenize(" ".join(tokenize(t))) == tokenize(t)``.
    """
    folded = text.casefold()
    return ["".join(run) for is_word, run in groupby(folded, key=str.isalnum) if is_word]


def _parse_article(obj: object, line_number: int, path: str | None) -> Article:
    if not isinstance(obj, dict):
        raise MalformedLine(line_number, "expected a JSON object", path)
    article_id = obj.get("id")
    if not isinstance(article_id, str) or not article_id:
        raise MalformedLine(line_number, "missing or empty 'id'", path)
    title = obj.get("title", "")
    content = obj.get("content", "")
    categories = obj.get("categories", [])
    links = obj.get("links", [])
    if not isinstance(title, str) or not isinstance(content, str):
        raise MalformedLine(line_number, "'title' and 'content' must be strings", path)
    for name, value in (("categories", categories), ("links", links)):
        if not isinstance(value, list) or not all(isinstance(x, str) for x in value):
            raise MalformedLine(line_number, f"'{name}' must be a list of strings", path)
    return Article(
        id=article_id,
        title=title,
        content=content,
        categories=tuple(categories),
        links=tuple(links),
    )


def load_articles(path: str | Path) -> ArticleSet:
    """Load a JSONL article file.

    Raises :class:`MalformedLine` on unparseable lines or missing ids and
    :class:`DuplicateId` when two records share an id. Blank lines are
    skipped. The result is independent of record order.
    """
    path = Path(path)
    articles: dict[str, Article] = {}
    with path.open(encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedLine(line_number, f"invalid JSON ({exc.msg})", str(path)) from exc
            article = _parse_article(obj, line_number, str(path))
            if article.id in articles:
                raise DuplicateId(article.id)
            articles[article.id] = article
    return ArticleSet(articles)


def save_articles(articles: ArticleSet, path: str | Path) -> None:
    """Write the set back as JSONL, sorted by id for stable diffs."""
    path = Path(path)
    with path.open("w", encoding="utf-8", newline="\n") as handle:
        for article_id in sorted(articles.articles):
            article = articles[article_id]
            record = {
                "id": article.id,
                "title": article.title,
                "content": article.content,
                "categories": list(article.categories),
                "links": list(article.links),
            }
            handle.write(json.dumps(record, ensure_ascii=False) + "\n")


def validate(articles: ArticleSet) -> ValidationReport:
    """Count dangling links and empty-content / empty-title articles.

    Dangling links are warnings, not errors: real wiki dumps contain them.
    Each (article, missing target) link occurrence counts once.
    """
    known = articles.ids()
    dangling = sum(1 for article in articles for link in article.links if link not in known)
    no_content = sum(1 for article in articles if not article.content)
    no_title = sum(1 for article in articles if not article.title)
    return ValidationReport(
        dangling_links=dangling,
        empty_content=no_content,
        empty_title=no_title,
    )
