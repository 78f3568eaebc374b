"""HTTP JSON API over a built engine.

Every GET endpoint is a pure projection of one library call on the current
state snapshot, serialized canonically (sorted keys, compact separators,
scores rounded to six decimals), so payloads are byte-stable and can be
asserted against library results directly. Handlers grab the state once
and never touch the engine again, which makes a concurrent rebuild
invisible mid-request; the ``X-Engine-Generation`` header says which
generation answered.

Endpoints (all JSON, under /api):

    GET  /articles/{id}                   article fields + resolved links + weighted tags
    GET  /tags?top=N                      tag cloud entries {tag, weight, font}
    GET  /tags/{tag}/articles?popular=&top=N
    GET  /tags/{tag}/related?top=N        pivot targets {tag, cooccurrence}
    GET  /filter?include=a,b&exclude=c&top=N
    GET  /search?q=...&fields=f1,f2&top=N
    GET  /categories/{name}/articles?top=N
    GET  /stats/presence                  presence table
    GET  /stats/curve                     presence-by-tag-count rows
    GET  /status                          build report + generation
    POST /relations {"a": .., "b": ..}    record a synonym pair, 202
    POST /rebuild                         re-run the pipeline, swap state

List endpoints take ``?top=N`` (default 50) and wrap results as
``{"items": [...], "total": <count before the cut>}``. Errors come back as
``{"code": .., "message": ..}`` with the matching HTTP status.
"""

from __future__ import annotations

import json
from typing import Iterable

from fastapi import FastAPI, Query, Request, Response
from fastapi.exceptions import RequestValidationError

from . import analytics
from .engine import Engine, EngineState
from .errors import (
    ConflictingFilter,
    EmptyFilter,
    EmptyQuery,
    EmptyTag,
    MissingArticle,
    TagnavError,
    UnknownArticle,
)
from .normalize import normalize
from .search import FIELDS, FieldConfig, explain, search
from .tags import global_weights

__all__ = ["canonical_json", "create_app", "serve"]

_STATUS_BY_CODE = {
    UnknownArticle.code: 404,
    MissingArticle.code: 500,
    ConflictingFilter.code: 400,
    EmptyFilter.code: 400,
    EmptyQuery.code: 400,
    EmptyTag.code: 400,
}

DEFAULT_TOP = 50
CLOUD_MIN_FONT = 10
CLOUD_MAX_FONT = 30


def canonical_json(payload: object) -> bytes:
    """The one serialization used by every endpoint: sorted keys, compact."""
    return json.dumps(payload, sort_keys=True, separators=(",", ":"), ensure_ascii=False).encode(
        "utf-8"
    )


def _listing(items: list, total: int, top: int) -> dict:
    return {"items": items[:top], "total": total}


def _score(value: float) -> float:
    return round(value, 6)


def _split_csv(value: str | None) -> list[str]:
    if not value:
        return []
    return [part.strip() for part in value.split(",") if part.strip()]


def article_payload(state: EngineState, article_id: str) -> dict:
    if article_id not in state.articles:
        raise UnknownArticle(article_id)
    article = state.articles[article_id]
    taglist = state.taglists.get(article_id)
    weights = taglist.weights if taglist else {}
    tags = [
        {"tag": tag, "weight": weight}
        for tag, weight in sorted(weights.items(), key=lambda kv: (-kv[1], kv[0]))
    ]
    return {
        "id": article.id,
        "title": article.title,
        "content": article.content,
        "categories": list(article.categories),
        "links": state.navigator.linked_articles(article_id),
        "tags": tags,
    }


def cloud_payload(state: EngineState, top: int) -> dict:
    weights = global_weights(state.taglists)
    cloud = analytics.build_cloud(
        weights, top_n=max(top, 1), min_font=CLOUD_MIN_FONT, max_font=CLOUD_MAX_FONT
    )
    items = [{"tag": e.tag, "weight": e.weight, "font": e.font} for e in cloud.entries]
    return {"items": items, "total": len(weights)}


def presence_payload(state: EngineState) -> dict:
    stats = analytics.presence_stats(state.articles, state.taglists)
    return {
        "scopes": {
            scope: {
                "found": counts.found,
                "not_found": counts.not_found,
                "percent": counts.percent,
            }
            for scope, counts in stats.scopes.items()
        },
        "total_pairs": stats.total_pairs,
    }


def curve_payload(state: EngineState) -> dict:
    rows = analytics.presence_by_tag_count(state.articles, state.taglists)
    return {
        "rows": [
            {
                "tag_count": r.tag_count,
                "articles": r.articles,
                "pairs": r.pairs,
                "pct_document": r.pct_document,
                "pct_content": r.pct_content,
                "pct_categories": r.pct_categories,
            }
            for r in rows
        ]
    }


def status_payload(state: EngineState) -> dict:
    report = state.report
    return {
        "generation": state.generation,
        "articles": report.articles,
        "assignments_imported": report.assignments_imported,
        "assignments_unknown_article": report.assignments_unknown_article,
        "assignments_after_blacklist": report.assignments_after_blacklist,
        "assignments_kept": report.assignments_kept,
        "tagged_articles": report.tagged_articles,
        "distinct_tags": report.distinct_tags,
        "dangling_links": report.dangling_links,
        "blacklist": list(report.blacklist),
        "min_users": report.min_users,
    }


def search_payload(state: EngineState, query: str, fields: Iterable[str] | None, top: int) -> dict:
    config = FieldConfig.for_fields(tuple(fields)) if fields else None
    results = search(state.index, query, config)
    items = [
        {
            "article": r.article,
            "score": _score(r.score),
            "matched_fields": r.matched_fields,
        }
        for r in results
    ]
    return _listing(items, len(results), top)


def create_app(engine: Engine) -> FastAPI:
    app = FastAPI(title="tagnav", docs_url=None, redoc_url=None)

    def respond(state: EngineState, payload: object, status_code: int = 200) -> Response:
        return Response(
            content=canonical_json(payload),
            status_code=status_code,
            media_type="application/json",
            headers={"X-Engine-Generation": str(state.generation)},
        )

    @app.exception_handler(TagnavError)
    async def tagnav_error(request: Request, exc: TagnavError) -> Response:
        status = _STATUS_BY_CODE.get(exc.code, 400)
        return Response(
            content=canonical_json({"code": exc.code, "message": str(exc)}),
            status_code=status,
            media_type="application/json",
        )

    @app.exception_handler(RequestValidationError)
    async def invalid_request(request: Request, exc: RequestValidationError) -> Response:
        return Response(
            content=canonical_json({"code": "invalid_request", "message": str(exc.errors())}),
            status_code=400,
            media_type="application/json",
        )

    def canonical_tag(state: EngineState, raw: str) -> str:
        return state.graph.canonical(normalize(raw))

    @app.get("/api/articles/{article_id}")
    def get_article(article_id: str) -> Response:
        state = engine.state
        return respond(state, article_payload(state, article_id))

    @app.get("/api/tags")
    def get_tags(top: int = Query(DEFAULT_TOP, ge=1)) -> Response:
        state = engine.state
        return respond(state, cloud_payload(state, top))

    @app.get("/api/tags/{tag}/articles")
    def get_tag_articles(tag: str, popular: bool = False, top: int = Query(DEFAULT_TOP, ge=1)) -> Response:
        state = engine.state
        canon = canonical_tag(state, tag)
        nav = state.navigator
        ranked = nav.popular(canon) if popular else nav.articles_with_tag(canon)
        items = [{"article": r.article, "score": r.score} for r in ranked]
        return respond(state, _listing(items, len(ranked), top))

    @app.get("/api/tags/{tag}/related")
    def get_related(tag: str, top: int = Query(DEFAULT_TOP, ge=1)) -> Response:
        state = engine.state
        related = state.navigator.pivot(canonical_tag(state, tag))
        items = [{"tag": r.tag, "cooccurrence": r.cooccurrence} for r in related]
        return respond(state, _listing(items, len(related), top))

    @app.get("/api/filter")
    def get_filter(
        include: str | None = None,
        exclude: str | None = None,
        top: int = Query(DEFAULT_TOP, ge=1),
    ) -> Response:
        state = engine.state
        include_tags = {canonical_tag(state, t) for t in _split_csv(include)}
        exclude_tags = {canonical_tag(state, t) for t in _split_csv(exclude)}
        ids = sorted(state.navigator.filter_articles(include_tags, exclude_tags))
        return respond(state, _listing(ids, len(ids), top))

    @app.get("/api/search")
    def get_search(
        q: str,
        fields: str | None = None,
        top: int = Query(DEFAULT_TOP, ge=1),
    ) -> Response:
        state = engine.state
        requested = _split_csv(fields)
        unknown = [f for f in requested if f not in FIELDS]
        if unknown:
            payload = {"code": "invalid_request", "message": f"unknown fields: {unknown}"}
            return Response(
                content=canonical_json(payload), status_code=400, media_type="application/json"
            )
        return respond(state, search_payload(state, q, requested or None, top))

    @app.get("/api/categories/{name}/articles")
    def get_category(name: str, top: int = Query(DEFAULT_TOP, ge=1)) -> Response:
        state = engine.state
        ids = sorted(state.navigator.category_members(name))
        return respond(state, _listing(ids, len(ids), top))

    @app.get("/api/explain/{article_id}")
    def get_explain(article_id: str, term: str) -> Response:
        state = engine.state
        return respond(state, explain(state.index, article_id, term))

    @app.get("/api/stats/presence")
    def get_presence() -> Response:
        state = engine.state
        return respond(state, presence_payload(state))

    @app.get("/api/stats/curve")
    def get_curve() -> Response:
        state = engine.state
        return respond(state, curve_payload(state))

    @app.get("/api/status")
    def get_status() -> Response:
        state = engine.state
        return respond(state, status_payload(state))

    @app.post("/api/relations")
    async def post_relation(request: Request) -> Response:
        body = await request.json()
        a, b = str(body.get("a", "")), str(body.get("b", ""))
        pair = engine.relate(a, b)
        state = engine.state
        payload = {"a": pair[0], "b": pair[1], "rebuild_required": True}
        return respond(state, payload, status_code=202)

    @app.post("/api/rebuild")
    def post_rebuild() -> Response:
        state = engine.rebuild()
        return respond(state, status_payload(state))

    return app


def serve(engine: Engine, host: str = "127.0.0.1", port: int = 8080) -> None:
    """Run the API until interrupted. Blocking; raises OSError if the port is taken."""
    import uvicorn

    uvicorn.run(create_app(engine), host=host, port=port, log_level="info")
