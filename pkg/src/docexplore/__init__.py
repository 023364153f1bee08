"""Health document exploration: corpus ingestion, topic-based views, and
interaction provenance analytics behind an HTTP service and CLI."""

__version__ = "0.1.0"
