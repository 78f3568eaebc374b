"""Per-user tag assignments and their aggregation into weighted tag lists.

The cleaning pipeline mirrors the dataset-generation recipe this engine is
built around: drop a small blacklist of tags that describe the wiki itself
rather than any article, then keep only articles annotated by at least a
minimum number of distinct users. Aggregation turns the surviving
assignments into one weighted tag list per article, where a tag's weight is
the number of distinct users who assigned it (in any spelling that
canonicalizes to it).
"""

from __future__ import annotations

import json
from collections import Counter, defaultdict
from dataclasses import dataclass, field
from pathlib import Path

from .errors import EmptyTag, MalformedLine
from .normalize import SynonymGraph, normalize

__all__ = [
    "DEFAULT_BLACKLIST",
    "AssignmentSet",
    "TagAssignment",
    "WeightedTagList",
    "aggregate",
    "annotator_count",
    "apply_blacklist",
    "global_weights",
    "import_assignments",
    "prune_min_annotators",
    "usage_counts",
]

DEFAULT_BLACKLIST = ("wikipedia", "reference", "wiki")


@dataclass(frozen=True)
class TagAssignment:
    """One (user, article, raw tag) tagging event."""

    user: str
    article: str
    raw_tag: str

    @property
    def tag(self) -> str:
        """The normalized form of the raw tag."""
        return normalize(self.raw_tag)


@dataclass
class AssignmentSet:
    """An ordered batch of tag assignments."""

    assignments: list[TagAssignment] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.assignments)

    def __iter__(self):
        return iter(self.assignments)

    def articles(self) -> set[str]:
        return {a.article for a in self.assignments}


@dataclass(frozen=True)
class WeightedTagList:
    """Per-article map canonical tag -> distinct-annotator count."""

    article: str
    weights: dict[str, int]

    def max_weight(self) -> int:
        return max(self.weights.values())


def import_assignments(path: str | Path) -> AssignmentSet:
    """Read raw assignments from a JSONL file, no cleaning applied.

    Each line must carry non-empty string fields ``user``, ``article`` and
    ``tag``, and the tag must survive normalization; anything else raises
    :class:`MalformedLine` with the offending line number.
    """
    path = Path(path)
    assignments: list[TagAssignment] = []
    with path.open(encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, start=1):
            if not line.strip():
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedLine(line_number, f"invalid JSON ({exc.msg})", str(path)) from exc
            if not isinstance(obj, dict):
                raise MalformedLine(line_number, "expected a JSON object", str(path))
            values = []
            for name in ("user", "article", "tag"):
                value = obj.get(name)
                if not isinstance(value, str) or not value:
                    raise MalformedLine(line_number, f"missing or empty '{name}'", str(path))
                values.append(value)
            user, article, raw_tag = values
            try:
                normalize(raw_tag)
            except EmptyTag as exc:
                raise MalformedLine(
                    line_number, f"tag {raw_tag!r} is empty after normalization", str(path)
                ) from exc
            assignments.append(TagAssignment(user=user, article=article, raw_tag=raw_tag))
    return AssignmentSet(assignments)


def apply_blacklist(assignments: AssignmentSet, blacklist: set[str] | tuple[str, ...]) -> AssignmentSet:
    """Drop assignments whose normalized tag is in the normalized blacklist.

    Matching happens after normalization on both sides, so "WIKIPEDIA" is
    removed by a blacklist entry "wikipedia". Survivors keep their order.
    """
    banned = {normalize(entry) for entry in blacklist}
    kept = [a for a in assignments if a.tag not in banned]
    return AssignmentSet(kept)


def annotator_count(assignments: AssignmentSet, article: str) -> int:
    """Distinct users with at least one assignment on the article; 0 if none."""
    return len({a.user for a in assignments if a.article == article})


def prune_min_annotators(assignments: AssignmentSet, k: int) -> AssignmentSet:
    """Keep only assignments for articles with >= k distinct annotators.

    Counts are taken over the set as given, so run this after the blacklist
    to reproduce the canonical pipeline order. Articles below the threshold
    vanish entirely; k=0 is the identity.
    """
    if k < 0:
        raise ValueError("threshold k must be >= 0")
    users_per_article: dict[str, set[str]] = defaultdict(set)
    for a in assignments:
        users_per_article[a.article].add(a.user)
    kept = [a for a in assignments if len(users_per_article[a.article]) >= k]
    return AssignmentSet(kept)


def usage_counts(assignments: AssignmentSet) -> dict[str, int]:
    """Global assignment counts per normalized tag (for representative election)."""
    return dict(Counter(a.tag for a in assignments))


def aggregate(assignments: AssignmentSet, graph: SynonymGraph) -> dict[str, WeightedTagList]:
    """Aggregate assignments into one weighted tag list per article.

    weight(article, c) = number of distinct users with at least one
    assignment on the article whose canonical form is c. A user tagging the
    same article with two spellings that canonicalize identically counts
    once. Articles with no assignments are absent from the result, and the
    output is insensitive to input order: articles and tags are emitted in
    sorted order.
    """
    users: dict[str, dict[str, set[str]]] = defaultdict(lambda: defaultdict(set))
    for a in assignments:
        users[a.article][graph.canonical(a.tag)].add(a.user)
    result: dict[str, WeightedTagList] = {}
    for article in sorted(users):
        weights = {tag: len(users[article][tag]) for tag in sorted(users[article])}
        result[article] = WeightedTagList(article=article, weights=weights)
    return result


def global_weights(taglists: dict[str, WeightedTagList]) -> dict[str, int]:
    """Sum per-article weights into corpus-level tag weights, sorted by tag."""
    totals: Counter[str] = Counter()
    for taglist in taglists.values():
        totals.update(taglist.weights)
    return {tag: totals[tag] for tag in sorted(totals)}
