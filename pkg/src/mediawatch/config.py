"""Runtime configuration for the pipeline and the HTTP service.

A single JSON file configures everything; relative paths resolve against
the config file's directory. Resource paths default to the bundled data.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass, field
from pathlib import Path

DEFAULT_LANGS = ["eu", "es", "en", "fr"]
TOKEN_ENV_VAR = "MONITOR_TOKEN"


@dataclass
class MonitorConfig:
    db_path: str = "monitor.db"
    taxonomy_path: str | None = None
    sources_path: str | None = None
    resources_dir: str | None = None  # None -> bundled resources
    languages: list[str] = field(default_factory=lambda: list(DEFAULT_LANGS))
    models: dict[str, str] = field(default_factory=dict)  # lang -> model file
    models_dir: str = "models"  # retrain output
    base_datasets: dict[str, str] = field(default_factory=dict)  # lang -> jsonl
    census_path: str | None = None
    authors_path: str | None = None  # author_id<TAB>followers_total
    bind_host: str = "127.0.0.1"
    bind_port: int = 8800
    token: str = ""
    refresh_minutes: int = 15
    workers: int = 4
    queue_capacity: int = 10_000
    nlp_backend: str = "lexicon"

    @property
    def auth_token(self) -> str:
        """MONITOR_TOKEN overrides the configured token."""
        return os.environ.get(TOKEN_ENV_VAR) or self.token


def load_config(path: str | Path) -> MonitorConfig:
    path = Path(path)
    payload = json.loads(path.read_text(encoding="utf-8"))
    unknown = set(payload) - set(MonitorConfig.__dataclass_fields__)
    if unknown:
        raise ValueError(f"{path}: unknown config keys {sorted(unknown)}")
    config = MonitorConfig(**payload)
    base = path.parent
    for attr in ("db_path", "taxonomy_path", "sources_path", "resources_dir",
                 "census_path", "authors_path", "models_dir"):
        value = getattr(config, attr)
        if value is not None and not Path(value).is_absolute():
            setattr(config, attr, str(base / value))
    config.models = {
        lang: str(base / p) if not Path(p).is_absolute() else p
        for lang, p in config.models.items()
    }
    config.base_datasets = {
        lang: str(base / p) if not Path(p).is_absolute() else p
        for lang, p in config.base_datasets.items()
    }
    return config
