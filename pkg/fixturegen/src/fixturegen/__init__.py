"""Offline exporter producing knot files for the certification engine."""

from .export import (
    ExportError,
    ExportRequest,
    KNOWN_TREFOIL_RANKS,
    ToolMissingError,
    convention_selftest,
    export,
    serialize,
    translate,
)

__version__ = "0.1.0"

__all__ = [
    "ExportError",
    "ExportRequest",
    "KNOWN_TREFOIL_RANKS",
    "ToolMissingError",
    "convention_selftest",
    "export",
    "serialize",
    "translate",
    "__version__",
]
