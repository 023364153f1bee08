from .app import canonical_json, create_app
from .config import ConfigError, ServiceConfig, load_config
from .store import (
    CorpusLoadFailure,
    LibraryStore,
    SessionStore,
    UnknownChapter,
    UnknownDocument,
    build_pipeline,
    load_service_taxonomy,
    model_seed,
)

__all__ = [
    "ConfigError",
    "CorpusLoadFailure",
    "LibraryStore",
    "ServiceConfig",
    "SessionStore",
    "UnknownChapter",
    "UnknownDocument",
    "build_pipeline",
    "canonical_json",
    "create_app",
    "load_config",
    "load_service_taxonomy",
    "model_seed",
]
