"""Identity audit subsystem: grid config, registry, runner, reports."""

from __future__ import annotations

from .config import AuditConfig, ConfigError, GridSpec, load_config
from .registry import IdentityEntry, Verdict, build_registry
from .runner import (
    AuditReport,
    EntryResult,
    evaluate_entry,
    render_csv,
    render_json,
    render_markdown,
    run_audit,
)

__all__ = [
    "AuditConfig",
    "AuditReport",
    "ConfigError",
    "EntryResult",
    "GridSpec",
    "IdentityEntry",
    "Verdict",
    "build_registry",
    "evaluate_entry",
    "load_config",
    "render_csv",
    "render_json",
    "render_markdown",
    "run_audit",
]
