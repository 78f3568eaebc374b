"""Tag-driven navigation plus the category/link baselines it augments.

Three tag modes:

* pivot — from a tag to the tags that co-occur with it on articles,
* popular — articles where the tag is top-weighted, not merely present,
* filter — articles carrying all include-tags and none of the exclude-tags,

alongside the classic category membership and link following. Everything is
a pure read over immutable aggregates; all orderings carry deterministic
tie-breaks (alphabetical for tags, id order for articles).
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .corpus import ArticleSet
from .errors import ConflictingFilter, EmptyFilter, UnknownArticle
from .tags import WeightedTagList

__all__ = ["Navigator", "RankedArticle", "RelatedTag"]


@dataclass(frozen=True)
class RelatedTag:
    """A tag plus the number of articles it shares with the pivot tag."""

    tag: str
    cooccurrence: int


@dataclass(frozen=True)
class RankedArticle:
    """An article with its mode-specific score (tag weight here)."""

    article: str
    score: int


class Navigator:
    """Read-only navigation over a corpus and its aggregated tag lists.

    Articles without a tag list take part in category and link navigation
    only; the tag-based modes range over tagged articles.
    """

    def __init__(self, articles: ArticleSet, taglists: dict[str, WeightedTagList]):
        self.articles = articles
        self.taglists = taglists
        self._articles_by_tag: dict[str, dict[str, int]] = {}
        for article_id, taglist in taglists.items():
            for tag, weight in taglist.weights.items():
                self._articles_by_tag.setdefault(tag, {})[article_id] = weight
        self._categories: dict[str, set[str]] = {}
        for article in articles:
            for name in article.categories:
                self._categories.setdefault(name.strip().casefold(), set()).add(article.id)

    # -- tag modes ---------------------------------------------------------

    def pivot(self, tag: str, n: int | None = None) -> list[RelatedTag]:
        """Top-n tags co-occurring with ``tag``, by article-level co-occurrence.

        Ordered by co-occurrence descending, ties alphabetical. An unused
        tag pivots to nothing.
        """
        hosts = self._articles_by_tag.get(tag)
        if not hosts:
            return []
        counts: Counter[str] = Counter()
        for article_id in hosts:
            for other in self.taglists[article_id].weights:
                if other != tag:
                    counts[other] += 1
        ranked = sorted(counts.items(), key=lambda item: (-item[1], item[0]))
        if n is not None:
            ranked = ranked[:n]
        return [RelatedTag(tag=t, cooccurrence=c) for t, c in ranked]

    def articles_with_tag(self, tag: str, n: int | None = None) -> list[RankedArticle]:
        """Articles carrying the tag, ranked by its weight, ties by id."""
        hosts = self._articles_by_tag.get(tag, {})
        ranked = sorted(hosts.items(), key=lambda item: (-item[1], item[0]))
        if n is not None:
            ranked = ranked[:n]
        return [RankedArticle(article=a, score=w) for a, w in ranked]

    def popular(self, tag: str, n: int | None = None) -> list[RankedArticle]:
        """The subset of ``articles_with_tag`` where the tag is top-weighted.

        Top-weighted means the tag's weight equals the article's maximum tag
        weight; ties with other tags keep the article in.
        """
        hits = [
            r
            for r in self.articles_with_tag(tag)
            if r.score == self.taglists[r.article].max_weight()
        ]
        return hits[:n] if n is not None else hits

    def filter_articles(self, include: set[str], exclude: set[str]) -> set[str]:
        """Tagged articles carrying all include-tags and no exclude-tags."""
        include, exclude = set(include), set(exclude)
        if not include and not exclude:
            raise EmptyFilter()
        clash = include & exclude
        if clash:
            raise ConflictingFilter(clash)
        result = set()
        for article_id, taglist in self.taglists.items():
            tags = taglist.weights.keys()
            if include <= tags and not (exclude & tags):
                result.add(article_id)
        return result

    # -- taxonomy baselines --------------------------------------------------

    def category_members(self, category: str) -> set[str]:
        """Articles in the category; names match case-insensitively, trimmed."""
        return set(self._categories.get(category.strip().casefold(), set()))

    def linked_articles(self, article_id: str) -> list[str]:
        """The article's outgoing links that resolve, in original order."""
        if article_id not in self.articles:
            raise UnknownArticle(article_id)
        known = self.articles.articles
        return [link for link in self.articles[article_id].links if link in known]
