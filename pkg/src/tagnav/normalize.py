"""Tag normalization and user-declared synonym relations.

Two layers keep the open tag vocabulary from turning into a mess:

1. ``normalize`` collapses trivially identical spellings by rule alone —
   "Science-Fiction", "science_fiction" and "science  fiction" all become
   "science fiction".
2. :class:`SynonymGraph` holds explicit, user-declared equivalences for
   spellings no rule should guess at ("sci fi" vs "science fiction").
   Relations are declared pairwise and closed under union, and each class
   elects the community's dominant spelling as its canonical representative.

No stemming and no edit-distance guessing: silent fuzzy merges would be a
worse, invisible mess than the one they fix.
"""

from __future__ import annotations

import re
from pathlib import Path

from .errors import EmptyTag

__all__ = [
    "SynonymGraph",
    "load_relations",
    "normalize",
    "save_relations",
]

_SEPARATORS = re.compile(r"[\s_\-]+")


def normalize(raw: str) -> str:
    """Normalize a raw tag: case-fold, trim, unify separator runs to one space.

    Whitespace, hyphens and underscores all count as separators; every other
    character (e.g. the dot in "web2.0") is preserved. Idempotent.
    Raises :class:`EmptyTag` when nothing remains.
    """
    value = _SEPARATORS.sub(" ", raw.casefold()).strip()
    if not value:
        raise EmptyTag(raw)
    return value


class SynonymGraph:
    """Equivalence classes over normalized tags, with representative election.

    Union-find with path compression. ``usage_counts`` holds global
    assignment counts per normalized tag; the representative of a class is
    its most-used member, ties broken by the lexicographically smallest
    spelling. Tags never related to anything are their own canonical form.
    """

    def __init__(self, usage_counts: dict[str, int] | None = None):
        self._parent: dict[str, str] = {}
        self.usage_counts: dict[str, int] = dict(usage_counts or {})

    def _find(self, tag: str) -> str:
        parent = self._parent
        if tag not in parent:
            return tag
        root = tag
        while parent[root] != root:
            root = parent[root]
        while parent[tag] != root:
            parent[tag], tag = root, parent[tag]
        return root

    def relate(self, a: str, b: str) -> None:
        """Declare a and b synonymous (both already normalized).

        Relating already-related tags is a no-op; the relation is closed
        under transitivity by the union itself.
        """
        root_a, root_b = self._find(a), self._find(b)
        self._parent.setdefault(root_a, root_a)
        self._parent.setdefault(root_b, root_b)
        if root_a != root_b:
            self._parent[root_b] = root_a

    def canonical(self, tag: str) -> str:
        """Return the elected representative of the tag's class."""
        root = self._find(tag)
        if root not in self._parent:
            return tag
        members = self._class_members(root)
        return min(members, key=lambda t: (-self.usage_counts.get(t, 0), t))

    def _class_members(self, root: str) -> list[str]:
        return [t for t in self._parent if self._find(t) == root]

    def classes(self) -> list[tuple[str, list[str]]]:
        """All non-singleton classes as (representative, sorted members)."""
        groups: dict[str, list[str]] = {}
        for tag in self._parent:
            groups.setdefault(self._find(tag), []).append(tag)
        result = []
        for members in groups.values():
            if len(members) > 1:
                rep = min(members, key=lambda t: (-self.usage_counts.get(t, 0), t))
                result.append((rep, sorted(members)))
        result.sort(key=lambda pair: pair[0])
        return result


def load_relations(path: str | Path, usage_counts: dict[str, int] | None = None) -> SynonymGraph:
    """Build a graph by replaying a relations file.

    One relation per line, two tags separated by ``" = "``; blank lines and
    ``#`` comments are skipped. Tags are normalized on the way in, so the
    file may contain raw spellings.
    """
    graph = SynonymGraph(usage_counts)
    path = Path(path)
    with path.open(encoding="utf-8") as handle:
        for line in handle:
            line = line.strip()
            if not line or line.startswith("#"):
                continue
            left, sep, right = line.partition(" = ")
            if not sep:
                continue
            graph.relate(normalize(left), normalize(right))
    return graph


def save_relations(pairs: list[tuple[str, str]], path: str | Path, append: bool = False) -> None:
    """Append (or write) relation pairs in the auditable one-per-line format."""
    path = Path(path)
    mode = "a" if append else "w"
    with path.open(mode, encoding="utf-8", newline="\n") as handle:
        for left, right in pairs:
            handle.write(f"{left} = {right}\n")
