"""tagnav: tag-augmented navigation, search and analytics for wiki corpora.

Aggregates per-user tag assignments into weighted tag lists per article,
cleans them (blacklist + minimum-annotator threshold), and exposes
pivot-browsing, popularity ranking, include/exclude filtering,
field-weighted search and tag-presence analytics over the result.
"""

from .analytics import (
    CurveRow,
    PresenceStats,
    TagCloud,
    build_cloud,
    percent,
    presence_by_tag_count,
    presence_stats,
    tag_found_in,
)
from .corpus import Article, ArticleSet, ValidationReport, load_articles, save_articles, tokenize, validate
from .engine import BuildReport, Engine, EngineState, build_state
from .navigation import Navigator, RankedArticle, RelatedTag
from .normalize import SynonymGraph, load_relations, normalize, save_relations
from .search import FieldConfig, Index, SearchResult, build_index, explain, search
from .tags import (
    DEFAULT_BLACKLIST,
    AssignmentSet,
    TagAssignment,
    WeightedTagList,
    aggregate,
    annotator_count,
    apply_blacklist,
    global_weights,
    import_assignments,
    prune_min_annotators,
)

__version__ = "0.1.0"

__all__ = [
    "Article",
    "ArticleSet",
    "AssignmentSet",
    "BuildReport",
    "CurveRow",
    "DEFAULT_BLACKLIST",
    "Engine",
    "EngineState",
    "FieldConfig",
    "Index",
    "Navigator",
    "PresenceStats",
    "RankedArticle",
    "RelatedTag",
    "SearchResult",
    "SynonymGraph",
    "TagAssignment",
    "TagCloud",
    "ValidationReport",
    "WeightedTagList",
    "aggregate",
    "annotator_count",
    "apply_blacklist",
    "build_cloud",
    "build_index",
    "build_state",
    "explain",
    "global_weights",
    "import_assignments",
    "load_articles",
    "load_relations",
    "normalize",
    "percent",
    "presence_by_tag_count",
    "presence_stats",
    "prune_min_annotators",
    "save_articles",
    "save_relations",
    "search",
    "tag_found_in",
    "tokenize",
    "validate",
]
