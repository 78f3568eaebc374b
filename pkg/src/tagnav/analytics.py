"""Tag-presence analytics and tag clouds.

The presence study asks, for every (article, tag) pair, whether the tag's
token sequence occurs in the article — in the content, in the category
names, or anywhere in the document (title, content or categories). Pairs
the scan does not find are exactly the vocabulary tagging adds: terms users
reach for that the article never says.

Matching is contiguous on tokens, not substrings, so "art" never matches
inside "artificial", and a multi-token tag like "science fiction" needs its
tokens adjacent and in order. Category names are scanned one by one; a tag
cannot straddle the boundary between two names.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from decimal import ROUND_HALF_UP, Decimal

from .corpus import Article, ArticleSet, tokenize
from .errors import MissingArticle, NoPairs
from .tags import WeightedTagList

__all__ = [
    "SCOPES",
    "CurveRow",
    "PresenceStats",
    "ScopeCounts",
    "TagCloud",
    "build_cloud",
    "cloud_json",
    "curve_csv",
    "percent",
    "presence_by_tag_count",
    "presence_csv",
    "presence_stats",
    "tag_found_in",
]

SCOPES = ("document", "content", "categories")


def percent(found: int, not_found: int) -> float:
    """100 * found / (found + not_found), rounded half-up to 2 decimals."""
    total = found + not_found
    if total == 0:
        raise NoPairs()
    value = Decimal(100) * Decimal(found) / Decimal(total)
    return float(value.quantize(Decimal("0.01"), rounding=ROUND_HALF_UP))


def _percent_or_zero(found: int, not_found: int) -> float:
    return percent(found, not_found) if found + not_found else 0.0


@dataclass(frozen=True)
class ScopeCounts:
    found: int
    not_found: int

    @property
    def percent(self) -> float:
        return _percent_or_zero(self.found, self.not_found)


@dataclass(frozen=True)
class PresenceStats:
    """Found / not-found pair counts per scope; every scope sums to total_pairs."""

    scopes: dict[str, ScopeCounts]
    total_pairs: int


@dataclass(frozen=True)
class CurveRow:
    """Presence percentages for articles with exactly ``tag_count`` tags."""

    tag_count: int
    articles: int
    pairs: int
    pct_document: float
    pct_content: float
    pct_categories: float


@dataclass(frozen=True)
class CloudEntry:
    tag: str
    weight: int
    font: int


@dataclass(frozen=True)
class TagCloud:
    entries: list[CloudEntry]
    min_font: int
    max_font: int


def tag_found_in(tag: str, terms: list[str]) -> bool:
    """True iff the tag's tokens occur as a contiguous run inside ``terms``."""
    needle = tokenize(tag)
    if not needle or len(needle) > len(terms):
        return False
    first = needle[0]
    span = len(needle)
    for i, term in enumerate(terms[: len(terms) - span + 1]):
        if term == first and terms[i : i + span] == needle:
            return True
    return False


def _scope_hits(article: Article, tag: str) -> dict[str, bool]:
    in_content = tag_found_in(tag, tokenize(article.content))
    in_categories = any(tag_found_in(tag, tokenize(name)) for name in article.categories)
    in_title = tag_found_in(tag, tokenize(article.title))
    return {
        "document": in_title or in_content or in_categories,
        "content": in_content,
        "categories": in_categories,
    }


def presence_stats(
    articles: ArticleSet, taglists: dict[str, WeightedTagList]
) -> PresenceStats:
    """Scan every (article, distinct canonical tag) pair against all scopes.

    The document scope is the union of title, content and categories, so
    document-found always dominates the per-scope counts.
    """
    found = {scope: 0 for scope in SCOPES}
    total = 0
    for article_id, taglist in sorted(taglists.items()):
        if article_id not in articles:
            raise MissingArticle(article_id)
        article = articles[article_id]
        for tag in taglist.weights:
            total += 1
            for scope, hit in _scope_hits(article, tag).items():
                if hit:
                    found[scope] += 1
    return PresenceStats(
        scopes={s: ScopeCounts(found=found[s], not_found=total - found[s]) for s in SCOPES},
        total_pairs=total,
    )


def presence_by_tag_count(
    articles: ArticleSet, taglists: dict[str, WeightedTagList]
) -> list[CurveRow]:
    """Presence percentages grouped by how many distinct tags an article has.

    Rows ascend by tag count; groups with no articles are absent. The rows'
    pair counts sum to the presence total.
    """
    groups: dict[int, list[str]] = {}
    for article_id, taglist in taglists.items():
        groups.setdefault(len(taglist.weights), []).append(article_id)
    rows = []
    for tag_count in sorted(groups):
        members = groups[tag_count]
        stats = presence_stats(articles, {a: taglists[a] for a in members})
        rows.append(
            CurveRow(
                tag_count=tag_count,
                articles=len(members),
                pairs=stats.total_pairs,
                pct_document=stats.scopes["document"].percent,
                pct_content=stats.scopes["content"].percent,
                pct_categories=stats.scopes["categories"].percent,
            )
        )
    return rows


def _half_up(value: float) -> int:
    return int(Decimal(value).quantize(Decimal("1"), rounding=ROUND_HALF_UP))


def build_cloud(
    weights: dict[str, int],
    top_n: int = 50,
    min_font: int = 10,
    max_font: int = 30,
) -> TagCloud:
    """The top-n tags with log-interpolated font sizes.

    font(t) = min_font + round((max_font - min_font) * (ln w - ln w_min) / (ln w_max - ln w_min))

    with w_min/w_max taken over the kept entries, so the heaviest kept tag
    always renders at max_font and the lightest at min_font. When all kept
    weights are equal, every entry gets max_font: a cloud of equals is a
    cloud of maxima. Entries are ordered by weight descending, ties
    alphabetical.
    """
    if min_font > max_font:
        raise ValueError("min_font must be <= max_font")
    if top_n < 1:
        raise ValueError("top_n must be >= 1")
    kept = sorted(weights.items(), key=lambda item: (-item[1], item[0]))[:top_n]
    if not kept:
        return TagCloud(entries=[], min_font=min_font, max_font=max_font)
    w_max = kept[0][1]
    w_min = kept[-1][1]
    entries = []
    for tag, weight in kept:
        if w_max == w_min:
            font = max_font
        else:
            span = math.log(w_max) - math.log(w_min)
            ratio = (math.log(weight) - math.log(w_min)) / span
            font = min_font + _half_up((max_font - min_font) * ratio)
        entries.append(CloudEntry(tag=tag, weight=weight, font=font))
    return TagCloud(entries=entries, min_font=min_font, max_font=max_font)


# -- emitters ----------------------------------------------------------------


def presence_csv(stats: PresenceStats) -> str:
    """CSV rows ``scope,found,not_found,percent`` in document/content/categories order."""
    lines = ["scope,found,not_found,percent"]
    for scope in SCOPES:
        counts = stats.scopes[scope]
        lines.append(f"{scope},{counts.found},{counts.not_found},{counts.percent:.2f}")
    return "\n".join(lines) + "\n"


def curve_csv(rows: list[CurveRow]) -> str:
    lines = ["tag_count,articles,pairs,pct_document,pct_content,pct_categories"]
    for row in rows:
        lines.append(
            f"{row.tag_count},{row.articles},{row.pairs},"
            f"{row.pct_document:.2f},{row.pct_content:.2f},{row.pct_categories:.2f}"
        )
    return "\n".join(lines) + "\n"


def cloud_json(cloud: TagCloud) -> str:
    payload = [{"tag": e.tag, "weight": e.weight, "font": e.font} for e in cloud.entries]
    return json.dumps(payload, ensure_ascii=False, indent=2) + "\n"
