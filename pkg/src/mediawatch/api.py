"""HTTP service exposing query, steering and administration endpoints.

A thin pass-through over the store and the pipeline service: every read
endpoint mirrors one store query, every mutation mirrors one store or
taxonomy operation, and no business logic lives here. Mutating endpoints
require the bearer token (MONITOR_TOKEN overrides the configured one).
"""

from __future__ import annotations

from typing import Literal

from fastapi import Depends, FastAPI, HTTPException, Query, Request, Response
from pydantic import BaseModel, Field

from . import __version__
from .ingest import SourceConfig
from .pipeline import MonitorService
from .store import NotFound
from .taxonomy import TaxonomyError
from .timeutil import parse_period, to_rfc3339


class MatchOut(BaseModel):
    keyword_id: str
    category_path: str


class MentionOut(BaseModel):
    mention_id: int
    source_id: str
    native_id: str
    text: str
    lang: str
    timestamp: str
    author_id: str
    matches: list[MatchOut]
    polarity: str | None
    corrected: str | None
    is_repost: bool
    in_census: bool
    source_kind: str


class AggregateOut(BaseModel):
    day: str
    category_path: str
    lang: str
    polarity: str
    source_kind: str
    count: int


class AuthorOut(BaseModel):
    author_id: str
    mentions: int


class SpreadOut(BaseModel):
    mention: MentionOut
    reposts: int


class HealthOut(BaseModel):
    status: str
    version: str
    view_version: int
    taxonomy_version: int


class TaxonomyOut(BaseModel):
    version: int
    content: str


class TaxonomyPutOut(BaseModel):
    version: int
    keywords: int


class PolarityPatchIn(BaseModel):
    label: Literal["positive", "negative", "neutral"]
    operator_id: str = "api"


class SourceIn(BaseModel):
    source_id: str
    kind: Literal["feed", "stream_replay", "stream_live"]
    endpoint: str
    poll_interval: int = Field(default=300, ge=0)
    enabled: bool = True


class RetrainIn(BaseModel):
    lang: str


class RetrainOut(BaseModel):
    lang: str
    examples: int
    model_path: str


def _mention_out(record) -> MentionOut:
    return MentionOut(
        mention_id=record.mention_id,
        source_id=record.source_id,
        native_id=record.native_id,
        text=record.unit_text,
        lang=record.lang,
        timestamp=to_rfc3339(record.timestamp),
        author_id=record.author_id,
        matches=[MatchOut(keyword_id=k, category_path=p) for k, p in record.matches],
        polarity=record.predicted_label,
        corrected=record.corrected_label,
        is_repost=record.is_repost,
        in_census=record.in_census,
        source_kind=record.source_kind,
    )


def _parse_period_param(period: str | None) -> tuple[str, str] | None:
    if period is None:
        return None
    try:
        return parse_period(period)
    except ValueError as exc:
        raise HTTPException(status_code=400, detail=str(exc)) from exc


def create_app(service: MonitorService) -> FastAPI:
    app = FastAPI(title="mediawatch", version=__version__)

    def require_token(request: Request) -> None:
        expected = service.config.auth_token
        supplied = request.headers.get("Authorization", "")
        if not expected or supplied != f"Bearer {expected}":
            raise HTTPException(status_code=401, detail="missing or invalid bearer token")

    @app.get("/health", response_model=HealthOut)
    def health() -> HealthOut:
        return HealthOut(
            status="ok",
            version=__version__,
            view_version=service.store.current_view_version(),
            taxonomy_version=service.matcher.version if service.matcher else 0,
        )

    @app.get("/mentions", response_model=list[MentionOut])
    def mentions(
        period: str | None = None,
        lang: str | None = None,
        category: str | None = None,
        source_kind: str | None = None,
        polarity: str | None = None,
        page: int = Query(default=0, ge=0),
        page_size: int = Query(default=20, ge=1, le=500),
    ) -> list[MentionOut]:
        records = service.store.recent_mentions(
            n=page_size,
            offset=page * page_size,
            period=_parse_period_param(period),
            lang=lang,
            category_prefix=category,
            source_kind=source_kind,
            polarity=polarity,
        )
        return [_mention_out(r) for r in records]

    @app.get("/aggregates", response_model=list[AggregateOut])
    def aggregates(
        period: str | None = None,
        lang: str | None = None,
        category: str | None = None,
        source_kind: str | None = None,
        polarity: str | None = None,
        influence: str | None = None,
    ) -> list[AggregateOut]:
        rows = service.store.query_aggregates(
            period=_parse_period_param(period),
            lang=lang,
            category_prefix=category,
            source_kind=source_kind,
            polarity=polarity,
            influence_tier=influence,
        )
        return [
            AggregateOut(
                day=r.day, category_path=r.category_path, lang=r.lang,
                polarity=r.polarity, source_kind=r.source_kind, count=r.count,
            )
            for r in rows
        ]

    @app.get("/authors/top", response_model=list[AuthorOut])
    def authors_top(period: str | None = None, n: int = Query(default=10, ge=0)) -> list[AuthorOut]:
        pairs = service.store.top_authors(period=_parse_period_param(period), n=n)
        return [AuthorOut(author_id=a, mentions=c) for a, c in pairs]

    @app.get("/mentions/spread", response_model=list[SpreadOut])
    def mentions_spread(period: str | None = None, n: int = Query(default=10, ge=0)) -> list[SpreadOut]:
        ranked = service.store.top_spread(period=_parse_period_param(period), n=n)
        return [SpreadOut(mention=_mention_out(r), reposts=c) for r, c in ranked]

    @app.get("/taxonomy", response_model=TaxonomyOut)
    def get_taxonomy() -> TaxonomyOut:
        return TaxonomyOut(
            version=service.matcher.version if service.matcher else 0,
            content=service.taxonomy_text,
        )

    @app.put("/taxonomy", response_model=TaxonomyPutOut, dependencies=[Depends(require_token)])
    async def put_taxonomy(request: Request) -> TaxonomyPutOut:
        body = (await request.body()).decode("utf-8")
        try:
            matcher = service.update_taxonomy_text(body)
        except TaxonomyError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        return TaxonomyPutOut(version=matcher.version, keywords=matcher.keyword_count)

    @app.patch("/mentions/{mention_id}/polarity", dependencies=[Depends(require_token)])
    def patch_polarity(mention_id: int, payload: PolarityPatchIn) -> dict:
        try:
            service.store.correct_label(mention_id, payload.label, payload.operator_id)
        except NotFound as exc:
            raise HTTPException(status_code=404, detail=str(exc)) from exc
        return {"mention_id": mention_id, "corrected": payload.label}

    @app.post("/sources", dependencies=[Depends(require_token)])
    def post_source(payload: SourceIn) -> dict:
        try:
            SourceConfig(**payload.model_dump())
        except ValueError as exc:
            raise HTTPException(status_code=400, detail=str(exc)) from exc
        service.store.upsert_source(
            payload.source_id, payload.kind, payload.endpoint,
            payload.poll_interval, payload.enabled,
        )
        return {"source_id": payload.source_id}

    @app.post("/admin/retrain", response_model=RetrainOut, dependencies=[Depends(require_token)])
    def admin_retrain(payload: RetrainIn) -> RetrainOut:
        from .polarity import EmptyData, SingleClassData

        try:
            report = service.retrain(payload.lang)
        except (SingleClassData, EmptyData) as exc:
            raise HTTPException(status_code=409, detail=str(exc)) from exc
        return RetrainOut(**report)

    @app.get("/export")
    def export(period: str | None = None) -> Response:
        lines = "\n".join(service.store.export_jsonl(_parse_period_param(period)))
        return Response(content=lines + ("\n" if lines else ""), media_type="application/x-ndjson")

    return app


def serve(service: MonitorService, host: str | None = None, port: int | None = None) -> None:
    """Run the HTTP service (blocking) with periodic view refresh."""
    import threading

    import uvicorn

    refresh_s = max(60, service.config.refresh_minutes * 60)
    stop = threading.Event()

    def refresher() -> None:
        while not stop.wait(refresh_s):
            service.store.refresh_view()

    thread = threading.Thread(target=refresher, daemon=True, name="view-refresh")
    thread.start()
    try:
        uvicorn.run(
            create_app(service),
            host=host or service.config.bind_host,
            port=port or service.config.bind_port,
            log_level="info",
        )
    finally:
        stop.set()
