"""Parsing of edge-list and metadata files.

Canonical edge-list format: one ``source target timestamp`` record per
line, delimiter auto-detected among tab, comma, and whitespace.  Lines
starting with ``#`` are comments; malformed lines are skipped and reported
with their 1-based line numbers.  Metadata files are two-column
``node,label`` records.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

from .model import AnalysisError, TemporalEdge


class NoValidEdges(AnalysisError):
    """Raised when a parsed stream yields no usable edge."""


@dataclass(frozen=True)
class IngestOptions:
    delimiter: Optional[str] = None  # None = auto-detect
    has_header: bool = False
    source_column: int = 0
    target_column: int = 1
    timestamp_column: int = 2

    def __post_init__(self):
        cols = (self.source_column, self.target_column, self.timestamp_column)
        if len(set(cols)) != 3:
            raise ValueError(f"column indices must be distinct, got {cols}")


@dataclass
class ParseReport:
    """Per-line diagnostics collected while parsing."""

    bad_lines: list[tuple[int, str]] = field(default_factory=list)
    duplicate_metadata: list[str] = field(default_factory=list)

    def add(self, lineno: int, reason: str) -> None:
        self.bad_lines.append((lineno, reason))


def _detect_delimiter(line: str) -> Optional[str]:
    if "\t" in line:
        return "\t"
    if "," in line:
        return ","
    return None  # split on any whitespace


def _split(line: str, delimiter: Optional[str]) -> list[str]:
    if delimiter is None:
        return line.split()
    return [part.strip() for part in line.split(delimiter)]


def _decode(text: Union[bytes, str]) -> str:
    if isinstance(text, bytes):
        return text.decode("utf-8")
    return text


def parse_edge_list(
    text: Union[bytes, str],
    opts: IngestOptions = IngestOptions(),
    report: Optional[ParseReport] = None,
) -> list[TemporalEdge]:
    """Parse delimited text into temporal edges.

    Accepts LF or CRLF endings.  Edges are returned in file order and are
    not canonicalized; pass them to `model.build_network` for that.
    Raises `NoValidEdges` if no line parses.
    """
    if report is None:
        report = ParseReport()
    lines = _decode(text).splitlines()
    delimiter = opts.delimiter
    edges: list[TemporalEdge] = []
    need = max(opts.source_column, opts.target_column, opts.timestamp_column) + 1
    header_pending = opts.has_header
    for lineno, line in enumerate(lines, start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if header_pending:
            header_pending = False
            continue
        if delimiter is None:
            delimiter = _detect_delimiter(stripped)
        parts = _split(stripped, delimiter)
        if len(parts) < need or any(not p for p in parts[:need]):
            report.add(lineno, "expected at least 3 fields")
            continue
        ts_text = parts[opts.timestamp_column]
        try:
            timestamp = int(ts_text)
        except ValueError:
            report.add(lineno, f"non-integer timestamp {ts_text!r}")
            continue
        edges.append(
            TemporalEdge(parts[opts.source_column], parts[opts.target_column], timestamp)
        )
    if not edges:
        raise NoValidEdges(
            f"no valid edges in input ({len(report.bad_lines)} malformed lines)"
        )
    return edges


def parse_metadata(
    text: Union[bytes, str], report: Optional[ParseReport] = None
) -> dict[str, str]:
    """Parse two-column node/label text.  Duplicate keys: last value wins."""
    if report is None:
        report = ParseReport()
    result: dict[str, str] = {}
    delimiter: Optional[str] = None
    for lineno, line in enumerate(_decode(text).splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if delimiter is None:
            delimiter = _detect_delimiter(stripped)
        parts = _split(stripped, delimiter)
        if len(parts) < 2 or not parts[0] or not parts[1]:
            report.add(lineno, "expected two fields")
            continue
        node, label = parts[0], parts[1]
        if node in result:
            report.duplicate_metadata.append(node)
        result[node] = label
    return result


def format_edge_list(edges: Sequence[TemporalEdge]) -> str:
    """Serialize edges back to the canonical ``source target timestamp`` text."""
    return "".join(f"{e.source} {e.target} {e.timestamp}\n" for e in edges)
