"""Pipeline wiring: sources -> bounded queue -> workers -> store.

One poller thread per enabled source produces RawMessages into a bounded
queue (full queue blocks the producer: backpressure, never drops). A
configurable number of workers runs the per-message chain: language
identification, keyword matching / article segmentation, normalization,
analysis, polarity prediction, census flag, store insert. The compiled
matcher is swapped atomically on taxonomy updates; in-flight messages
finish on the version they started with.
"""

from __future__ import annotations

import logging
import queue
import threading
import time
from dataclasses import dataclass, field
from pathlib import Path

from . import polarity
from .census import load_census
from .config import MonitorConfig
from .ingest import FetchError, ParseError, RawMessage, ReplaySource, SourceConfig, poll_feed
from .langid import UNKNOWN_LANG
from .langstack import LanguageStack
from .store import DuplicateMention, MentionRecord, Store
from .taxonomy import (
    CompiledMatcher,
    KeywordSpec,
    compile_taxonomy,
    load_taxonomy_file,
    match_unit,
    segment_article,
    serialize_taxonomy,
)

log = logging.getLogger("mediawatch.pipeline")

_SENTINEL = None


@dataclass
class RunStats:
    processed: int = 0
    stored_mentions: int = 0
    duplicates: int = 0
    errors: int = 0
    elapsed_seconds: float = 0.0

    @property
    def rate(self) -> float:
        return self.processed / self.elapsed_seconds if self.elapsed_seconds > 0 else 0.0


class MonitorService:
    """Owns the store, language stack, matcher, models and census set."""

    def __init__(
        self,
        config: MonitorConfig,
        store: Store | None = None,
        stack: LanguageStack | None = None,
    ):
        self.config = config
        self.store = store or Store(config.db_path)
        self.stack = stack or LanguageStack.load(
            config.resources_dir, config.nlp_backend, config.languages
        )
        self._matcher: CompiledMatcher | None = None
        self._matcher_lock = threading.Lock()
        self._taxonomy_text = ""
        if config.taxonomy_path:
            text = Path(config.taxonomy_path).read_text(encoding="utf-8")
            self.update_taxonomy_text(text)
        self.models: dict[str, polarity.PolarityModel] = {}
        for lang, path in config.models.items():
            self.models[lang] = polarity.load_model(path)
        self.census: set[str] = set()
        if config.census_path and Path(config.census_path).exists():
            self.census = set(load_census(config.census_path))
        if config.authors_path and Path(config.authors_path).exists():
            for line in Path(config.authors_path).read_text(encoding="utf-8").splitlines():
                if line.strip() and not line.startswith("#"):
                    author_id, followers = line.split("\t")
                    self.store.upsert_author(author_id, int(followers))

    # -- taxonomy ------------------------------------------------------------
    @property
    def matcher(self) -> CompiledMatcher | None:
        return self._matcher

    def update_taxonomy(self, specs: list[KeywordSpec]) -> CompiledMatcher:
        """Compile off-line and swap atomically; version strictly increases."""
        with self._matcher_lock:
            version = (self._matcher.version + 1) if self._matcher else 1
            matcher = compile_taxonomy(specs, version=version)
            self._taxonomy_text = serialize_taxonomy(specs)
            self._matcher = matcher
        return matcher

    def update_taxonomy_text(self, text: str) -> CompiledMatcher:
        from .taxonomy import parse_taxonomy

        specs = parse_taxonomy(text)
        matcher = self.update_taxonomy(specs)
        self._taxonomy_text = text
        return matcher

    @property
    def taxonomy_text(self) -> str:
        return self._taxonomy_text

    # -- the per-message chain -------------------------------------------------
    def process_raw(self, message: RawMessage, message_kind: str) -> list[int]:
        """Run one message through the full chain; returns stored mention ids."""
        if not self.store.admit(message.source_id, message.native_id):
            return []
        matcher = self._matcher
        if matcher is None:
            return []
        identification = self.stack.identify(message.text, message_kind)
        lang = identification.lang

        if message_kind == "feed":
            units = [
                (u.text, u.span, u.matches)
                for u in segment_article(matcher, message.text, lang)
            ]
        else:
            matches = match_unit(matcher, message.text, lang)
            units = [(message.text, (0, len(message.text)), tuple(matches))] if matches else []
        if not units:
            return []

        model = self.models.get(lang) if lang != UNKNOWN_LANG else None
        inserted: list[int] = []
        for text, span, matches in units:
            label = None
            if model is not None:
                label, _ = polarity.predict(model, text, self.stack, message_kind)
            record = MentionRecord(
                source_id=message.source_id,
                native_id=message.native_id,
                unit_text=text,
                unit_span=span,
                full_text_ref=f"{message.source_id}/{message.native_id}",
                lang=lang,
                timestamp=message.timestamp,
                author_id=message.author_id,
                matches=tuple((m.keyword_id, "/".join(m.category_path)) for m in matches),
                predicted_label=label,
                is_repost=message.is_repost,
                repost_of=message.repost_of,
                in_census=message.author_id in self.census,
                source_kind=message_kind,
            )
            try:
                inserted.append(self.store.insert_mention(record))
            except DuplicateMention:
                continue
        return inserted

    # -- retraining ----------------------------------------------------------------
    def retrain(self, lang: str) -> dict:
        """Operator-triggered retrain from corrections plus the base dataset."""
        examples = [
            polarity.LabeledExample(text=text, lang=lang, label=label)
            for text, label in self.store.corrected_examples(lang)
        ]
        base_path = self.config.base_datasets.get(lang)
        if base_path and Path(base_path).exists():
            examples.extend(e for e in polarity.load_dataset(base_path) if e.lang == lang)
        if len(examples) < 2 or len({e.label for e in examples}) < 2:
            raise polarity.SingleClassData(
                f"{lang}: need labeled examples from >=2 classes to retrain"
            )
        model = polarity.train(examples, self.stack)
        out_dir = Path(self.config.models_dir)
        out_dir.mkdir(parents=True, exist_ok=True)
        out_path = out_dir / f"{lang}.model.json"
        polarity.save_model(model, out_path)
        self.models[lang] = model
        return {"lang": lang, "examples": len(examples), "model_path": str(out_path)}

    # -- run loop ---------------------------------------------------------------
    def run(
        self,
        sources: list[SourceConfig],
        workers: int | None = None,
        replay_speed: float | str = "max",
        once: bool | None = None,
        stop_event: threading.Event | None = None,
    ) -> RunStats:
        """Run pollers and workers; returns when sources are exhausted.

        once=None auto-detects: replay-only source sets run to completion,
        otherwise pollers loop until *stop_event* is set.
        """
        enabled = [s for s in sources if s.enabled]
        if once is None:
            once = all(s.kind == "stream_replay" for s in enabled)
        stop = stop_event or threading.Event()
        n_workers = workers or self.config.workers
        q: queue.Queue = queue.Queue(maxsize=self.config.queue_capacity)
        stats = RunStats()
        stats_lock = threading.Lock()
        started = time.monotonic()

        def poll_source(source: SourceConfig) -> None:
            try:
                while not stop.is_set():
                    if source.kind == "feed":
                        try:
                            messages = poll_feed(
                                source, seen=lambda nid: self.store.seen(source.source_id, nid)
                            )
                        except (FetchError, ParseError) as exc:
                            log.warning("%s: %s", source.source_id, exc)
                            messages = []
                        for msg in messages:
                            q.put((msg, source.message_kind))
                    elif source.kind == "stream_replay":
                        replay = ReplaySource(source, speed=replay_speed)
                        for msg in replay:
                            if stop.is_set():
                                return
                            q.put((msg, source.message_kind))
                        if replay.skipped:
                            log.warning(
                                "%s: skipped %d malformed lines", source.source_id, replay.skipped
                            )
                        return  # a replay file plays once
                    else:
                        log.warning("%s: no live adapter configured", source.source_id)
                        return
                    if once:
                        return
                    stop.wait(source.poll_interval)
            except Exception:
                log.exception("%s: poller crashed", source.source_id)

        def work() -> None:
            while True:
                item = q.get()
                if item is _SENTINEL:
                    q.task_done()
                    return
                message, kind = item
                try:
                    ids = self.process_raw(message, kind)
                    with stats_lock:
                        stats.processed += 1
                        stats.stored_mentions += len(ids)
                except Exception:
                    log.exception("worker failed on %s/%s", message.source_id, message.native_id)
                    with stats_lock:
                        stats.processed += 1
                        stats.errors += 1
                finally:
                    q.task_done()

        pollers = [
            threading.Thread(target=poll_source, args=(s,), name=f"poll-{s.source_id}")
            for s in enabled
        ]
        worker_threads = [
            threading.Thread(target=work, name=f"worker-{i}") for i in range(n_workers)
        ]
        for t in worker_threads:
            t.start()
        for t in pollers:
            t.start()
        for t in pollers:
            t.join()
        for _ in worker_threads:
            q.put(_SENTINEL)
        for t in worker_threads:
            t.join()
        stats.elapsed_seconds = time.monotonic() - started
        self.store.refresh_view()
        return stats

    def close(self) -> None:
        self.store.close()
