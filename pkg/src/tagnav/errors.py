"""Exception types raised by the tagnav library.

Every data-level failure mode has its own class so the CLI and the HTTP
gateway can map it to a stable machine-readable code.
"""

from __future__ import annotations


class TagnavError(Exception):
    """Base class for all tagnav data errors."""

    code = "error"


class MalformedLine(TagnavError):
    """A JSONL input line could not be parsed or is missing required fields."""

    code = "malformed_line"

    def __init__(self, line_number: int, reason: str, path: str | None = None):
        self.line_number = line_number
        self.reason = reason
        self.path = path
        where = f"{path}:{line_number}" if path else f"line {line_number}"
        super().__init__(f"{where}: {reason}")


class DuplicateId(TagnavError):
    """Two articles in one input share an id."""

    code = "duplicate_id"

    def __init__(self, article_id: str):
        self.article_id = article_id
        super().__init__(f"duplicate article id: {article_id!r}")


class EmptyTag(TagnavError):
    """A tag normalized to the empty string."""

    code = "empty_tag"

    def __init__(self, raw: str = ""):
        self.raw = raw
        super().__init__(f"tag {raw!r} is empty after normalization")


class EmptyFilter(TagnavError):
    """filter_articles called with neither include nor exclude tags."""

    code = "empty_filter"

    def __init__(self) -> None:
        super().__init__("filter needs at least one include or exclude tag")


class ConflictingFilter(TagnavError):
    """A tag appears in both the include and the exclude set."""

    code = "conflicting_filter"

    def __init__(self, tags: set[str]):
        self.tags = tags
        listed = ", ".join(sorted(tags))
        super().__init__(f"tags both included and excluded: {listed}")


class UnknownArticle(TagnavError):
    """An article id was requested that is not in the corpus."""

    code = "unknown_article"

    def __init__(self, article_id: str):
        self.article_id = article_id
        super().__init__(f"unknown article: {article_id!r}")


class MissingArticle(TagnavError):
    """A tag list references an article absent from the article set."""

    code = "missing_article"

    def __init__(self, article_id: str):
        self.article_id = article_id
        super().__init__(f"tag list references missing article: {article_id!r}")


class EmptyQuery(TagnavError):
    """A search query produced no terms after tokenization."""

    code = "empty_query"

    def __init__(self) -> None:
        super().__init__("query contains no searchable terms")


class NoPairs(TagnavError):
    """A percentage was requested over zero (article, tag) pairs."""

    code = "no_pairs"

    def __init__(self) -> None:
        super().__init__("no pairs to compute a percentage over")
