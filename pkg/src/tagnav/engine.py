"""Build pipeline and state lifecycle for the CLI and the HTTP gateway.

One build runs the whole chain: load articles -> import assignments ->
blacklist -> annotator threshold -> synonym graph -> aggregate -> index.
The result is an immutable :class:`EngineState`; an :class:`Engine` holds
the current state and lets one writer at a time replace it atomically while
readers keep whatever snapshot they grabbed. Each successful build bumps a
generation counter so responses can prove which snapshot they came from.
"""

from __future__ import annotations

import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import tags as tag_store
from .corpus import ArticleSet, load_articles, validate
from .navigation import Navigator
from .normalize import SynonymGraph, load_relations, normalize, save_relations
from .search import FieldConfig, Index, build_index
from .tags import (
    DEFAULT_BLACKLIST,
    AssignmentSet,
    WeightedTagList,
    aggregate,
    apply_blacklist,
    import_assignments,
    prune_min_annotators,
)

__all__ = ["BuildReport", "Engine", "EngineState", "build_state"]


@dataclass(frozen=True)
class BuildReport:
    """What the pipeline kept and dropped, for logs and the status endpoint."""

    articles: int
    assignments_imported: int
    assignments_unknown_article: int
    assignments_after_blacklist: int
    assignments_kept: int
    tagged_articles: int
    distinct_tags: int
    dangling_links: int
    blacklist: tuple[str, ...]
    min_users: int


@dataclass(frozen=True)
class EngineState:
    """One immutable generation of derived structures, built together."""

    articles: ArticleSet
    assignments: AssignmentSet
    graph: SynonymGraph
    taglists: dict[str, WeightedTagList]
    index: Index
    navigator: Navigator
    report: BuildReport
    generation: int
    built_at: float


def build_state(
    articles_path: str | Path,
    tags_path: str | Path,
    relations_path: str | Path | None = None,
    blacklist: tuple[str, ...] = DEFAULT_BLACKLIST,
    min_users: int = 10,
    field_config: FieldConfig | None = None,
    extra_relations: list[tuple[str, str]] | None = None,
    generation: int = 1,
) -> EngineState:
    """Run the full pipeline over the input files.

    Assignments referencing articles absent from the corpus are dropped
    before cleaning (their count lands in the report). The synonym graph is
    fed usage counts from the cleaned assignments so representative
    election reflects the surviving corpus.
    """
    articles = load_articles(articles_path)
    imported = import_assignments(tags_path)
    known = articles.ids()
    resolved = AssignmentSet([a for a in imported if a.article in known])
    after_blacklist = apply_blacklist(resolved, blacklist)
    cleaned = prune_min_annotators(after_blacklist, min_users)

    counts = tag_store.usage_counts(cleaned)
    if relations_path is not None and Path(relations_path).exists():
        graph = load_relations(relations_path, counts)
    else:
        graph = SynonymGraph(counts)
    for left, right in extra_relations or []:
        graph.relate(normalize(left), normalize(right))

    taglists = aggregate(cleaned, graph)
    index = build_index(articles, taglists, field_config)
    report = BuildReport(
        articles=len(articles),
        assignments_imported=len(imported),
        assignments_unknown_article=len(imported) - len(resolved),
        assignments_after_blacklist=len(after_blacklist),
        assignments_kept=len(cleaned),
        tagged_articles=len(taglists),
        distinct_tags=len({t for tl in taglists.values() for t in tl.weights}),
        dangling_links=validate(articles).dangling_links,
        blacklist=tuple(blacklist),
        min_users=min_users,
    )
    return EngineState(
        articles=articles,
        assignments=cleaned,
        graph=graph,
        taglists=taglists,
        index=index,
        navigator=Navigator(articles, taglists),
        report=report,
        generation=generation,
        built_at=time.time(),
    )


@dataclass
class Engine:
    """Holds the current state; rebuilds swap it in one assignment.

    Readers grab ``engine.state`` once per request and work on that
    snapshot; they never observe a half-built generation. Declared
    relations go to the relations file when one is configured (so merges
    stay auditable), otherwise they are kept in memory, and take effect at
    the next rebuild.
    """

    articles_path: str | Path
    tags_path: str | Path
    relations_path: str | Path | None = None
    blacklist: tuple[str, ...] = DEFAULT_BLACKLIST
    min_users: int = 10
    field_config: FieldConfig | None = None
    _state: EngineState | None = None
    _pending_relations: list[tuple[str, str]] = field(default_factory=list)
    _write_lock: threading.Lock = field(default_factory=threading.Lock)

    @property
    def state(self) -> EngineState:
        if self._state is None:
            raise RuntimeError("engine not built yet")
        return self._state

    def build(self) -> EngineState:
        return self._rebuild(generation=1)

    def rebuild(self) -> EngineState:
        current = self._state
        return self._rebuild(generation=(current.generation + 1) if current else 1)

    def _rebuild(self, generation: int) -> EngineState:
        with self._write_lock:
            state = build_state(
                self.articles_path,
                self.tags_path,
                self.relations_path,
                blacklist=self.blacklist,
                min_users=self.min_users,
                field_config=self.field_config,
                extra_relations=self._pending_relations,
                generation=generation,
            )
            self._state = state
            return state

    def relate(self, a: str, b: str) -> tuple[str, str]:
        """Record a synonym relation; visible after the next rebuild."""
        pair = (normalize(a), normalize(b))
        with self._write_lock:
            if self.relations_path is not None:
                save_relations([pair], self.relations_path, append=True)
            else:
                self._pending_relations.append(pair)
        return pair
