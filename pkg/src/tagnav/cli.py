"""Command-line interface.

Every query subcommand is stateless: it builds the engine from the input
files given by ``--articles/--tags/--relations`` (plus the cleaning flags)
and runs one operation with deterministic, line-oriented output. Exit codes:
0 success, 1 usage error, 2 data error (unreadable or malformed inputs,
conflicting filters, and friends).
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from . import analytics
from .corpus import load_articles, validate
from .engine import Engine
from .errors import TagnavError
from .normalize import normalize, save_relations
from .search import FieldConfig, search
from .tags import DEFAULT_BLACKLIST, global_weights, import_assignments

__all__ = ["main"]

USAGE_ERROR = 1
DATA_ERROR = 2


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; the CLI contract says 1."""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(USAGE_ERROR)


def _add_data_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--articles", default="articles.jsonl", help="articles JSONL file")
    parser.add_argument("--tags-file", default="tags.jsonl", help="tag assignments JSONL file")
    parser.add_argument(
        "--relations", default="relations.txt", help="synonym relations file (optional)"
    )
    parser.add_argument(
        "--blacklist",
        default=",".join(DEFAULT_BLACKLIST),
        help="comma-separated tags to drop (matched after normalization)",
    )
    parser.add_argument(
        "--min-users", type=int, default=10, help="minimum distinct annotators per article"
    )


def _build_engine(args: argparse.Namespace) -> Engine:
    blacklist = tuple(t for t in args.blacklist.split(",") if t.strip()) if args.blacklist else ()
    relations = args.relations if args.relations and Path(args.relations).exists() else None
    engine = Engine(
        articles_path=args.articles,
        tags_path=args.tags_file,
        relations_path=relations,
        blacklist=blacklist,
        min_users=args.min_users,
    )
    engine.build()
    return engine


def _emit(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tagnav", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("ingest", help="load and validate an articles file")
    p.add_argument("--articles", default="articles.jsonl")

    p = sub.add_parser("import-tags", help="read a tag assignments file and report counts")
    p.add_argument("--tags-file", default="tags.jsonl")

    p = sub.add_parser("relate", help="declare two tags synonymous")
    p.add_argument("--tags", required=True, help='the pair, e.g. "sci fi,science fiction"')
    p.add_argument("--relations", default="relations.txt")

    p = sub.add_parser("analyze", help="presence statistics")
    p.add_argument("report", choices=["presence", "curve"])
    p.add_argument("--out", default=None, help="write CSV here instead of stdout")
    _add_data_flags(p)

    p = sub.add_parser("cloud", help="emit the corpus tag cloud as JSON")
    p.add_argument("--top", type=int, default=50)
    p.add_argument("--min-font", type=int, default=10)
    p.add_argument("--max-font", type=int, default=30)
    p.add_argument("--out", default=None)
    _add_data_flags(p)

    p = sub.add_parser("search", help="field-weighted search")
    p.add_argument("query")
    p.add_argument("--fields", default=None, help="comma-separated subset of title,content,categories,tags")
    p.add_argument("--top", type=int, default=50)
    _add_data_flags(p)

    p = sub.add_parser("pivot", help="related tags by co-occurrence")
    p.add_argument("tag")
    p.add_argument("--top", type=int, default=50)
    _add_data_flags(p)

    p = sub.add_parser("popular", help="articles where the tag is top-weighted")
    p.add_argument("tag")
    p.add_argument("--top", type=int, default=50)
    _add_data_flags(p)

    p = sub.add_parser("filter", help="articles with all include-tags and no exclude-tags")
    p.add_argument("--include", default="")
    p.add_argument("--exclude", default="")
    _add_data_flags(p)

    p = sub.add_parser("serve", help="serve the HTTP JSON API")
    p.add_argument("--addr", default="127.0.0.1:8080", help="host:port (TAGNAV_ADDR overrides)")
    _add_data_flags(p)

    return parser


def _cmd_ingest(args) -> int:
    articles = load_articles(args.articles)
    report = validate(articles)
    print(f"articles: {len(articles)}")
    print(f"dangling_links: {report.dangling_links}")
    print(f"empty_content: {report.empty_content}")
    print(f"empty_title: {report.empty_title}")
    return 0


def _cmd_import_tags(args) -> int:
    assignments = import_assignments(args.tags_file)
    users = {a.user for a in assignments}
    print(f"assignments: {len(assignments)}")
    print(f"users: {len(users)}")
    print(f"articles: {len(assignments.articles())}")
    return 0


def _cmd_relate(args) -> int:
    parts = [p for p in args.tags.split(",") if p.strip()]
    if len(parts) != 2:
        print("relate expects exactly two comma-separated tags", file=sys.stderr)
        return USAGE_ERROR
    pair = (normalize(parts[0]), normalize(parts[1]))
    save_relations([pair], args.relations, append=True)
    print(f"related: {pair[0]} = {pair[1]}")
    return 0


def _cmd_analyze(args) -> int:
    state = _build_engine(args).state
    if args.report == "presence":
        stats = analytics.presence_stats(state.articles, state.taglists)
        _emit(analytics.presence_csv(stats), args.out)
    else:
        rows = analytics.presence_by_tag_count(state.articles, state.taglists)
        _emit(analytics.curve_csv(rows), args.out)
    return 0


def _cmd_cloud(args) -> int:
    state = _build_engine(args).state
    cloud = analytics.build_cloud(
        global_weights(state.taglists),
        top_n=args.top,
        min_font=args.min_font,
        max_font=args.max_font,
    )
    _emit(analytics.cloud_json(cloud), args.out)
    return 0


def _cmd_search(args) -> int:
    state = _build_engine(args).state
    config = None
    if args.fields:
        config = FieldConfig.for_fields([f.strip() for f in args.fields.split(",") if f.strip()])
    results = search(state.index, args.query, config)[: args.top]
    for result in results:
        print(f"{result.article}\t{result.score:.6f}")
    return 0


def _cmd_pivot(args) -> int:
    state = _build_engine(args).state
    tag = state.graph.canonical(normalize(args.tag))
    for related in state.navigator.pivot(tag, args.top):
        print(f"{related.tag} {related.cooccurrence}")
    return 0


def _cmd_popular(args) -> int:
    state = _build_engine(args).state
    tag = state.graph.canonical(normalize(args.tag))
    for ranked in state.navigator.popular(tag, args.top):
        print(f"{ranked.article} {ranked.score}")
    return 0


def _cmd_filter(args) -> int:
    state = _build_engine(args).state
    include = {state.graph.canonical(normalize(t)) for t in args.include.split(",") if t.strip()}
    exclude = {state.graph.canonical(normalize(t)) for t in args.exclude.split(",") if t.strip()}
    for article_id in sorted(state.navigator.filter_articles(include, exclude)):
        print(article_id)
    return 0


def _cmd_serve(args) -> int:
    from .api import serve

    addr = os.environ.get("TAGNAV_ADDR", args.addr)
    host, _, port = addr.rpartition(":")
    if not host or not port.isdigit():
        print(f"invalid address: {addr!r} (expected host:port)", file=sys.stderr)
        return USAGE_ERROR
    engine = _build_engine(args)
    report = engine.state.report
    print(
        f"built: {report.articles} articles, {report.assignments_kept} assignments, "
        f"{report.distinct_tags} tags over {report.tagged_articles} tagged articles"
    )
    serve(engine, host=host, port=int(port))
    return 0


_COMMANDS = {
    "ingest": _cmd_ingest,
    "import-tags": _cmd_import_tags,
    "relate": _cmd_relate,
    "analyze": _cmd_analyze,
    "cloud": _cmd_cloud,
    "search": _cmd_search,
    "pivot": _cmd_pivot,
    "popular": _cmd_popular,
    "filter": _cmd_filter,
    "serve": _cmd_serve,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except TagnavError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except FileNotFoundError as exc:
        print(f"error: file not found: {exc.filename}", file=sys.stderr)
        return DATA_ERROR
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DATA_ERROR


if __name__ == "__main__":
    raise SystemExit(main())
