"""Uniform timeslicing and slice-count suggestion.

Slicing always cuts the observation period into equal-length intervals
(the last one may be shorter).  The suggestion routine scans local edge
density to propose a min/default/max slice count: it measures, at window
starts spread over the active timestamps, how long an interval must be to
capture an equal share of the edge mass, then converts the shortest,
longest, and mean such lengths into slice counts.  This realizes the
density-driven principle only approximately; the measured lengths are a
single-pass surrogate, not a reproduction of any particular nonuniform
slicer.
"""

from __future__ import annotations

import bisect
import logging
import math

from .model import AnalysisError, SliceSuggestion, TemporalNetwork, Timeslice

log = logging.getLogger(__name__)


class InvalidSliceCount(AnalysisError):
    pass


def uniform_slices(net: TemporalNetwork, k: int) -> list[Timeslice]:
    """Partition the observation period into ``k`` equal-length slices.

    Slice length is ``ceil(span / k)``; the last slice absorbs the
    remainder.  When the ceiling makes trailing slices start past ``t_max``
    the count is clamped down (fewer slices are returned) and a warning is
    logged.  Every edge lands in exactly one slice.
    """
    span = net.span
    if not 1 <= k <= span:
        raise InvalidSliceCount(
            f"timeslice count {k} outside [1, {span}] for this network"
        )
    length = math.ceil(span / k)
    effective = math.ceil(span / length)
    if effective < k:
        log.warning("slice count clamped from %d to %d (length %d)", k, effective, length)

    buckets: list[list] = [[] for _ in range(effective)]
    for edge in net.edges:
        buckets[(edge.timestamp - net.t_min) // length].append(edge)

    slices = []
    for i in range(effective):
        t_start = net.t_min + i * length
        t_end = min(t_start + length - 1, net.t_max)
        slices.append(Timeslice(index=i + 1, t_start=t_start, t_end=t_end, edges=tuple(buckets[i])))
    return slices


def suggest_slice_counts(
    net: TemporalNetwork, window: int = 0, baseline: int = 50
) -> SliceSuggestion:
    """Suggest a (min, default, max) slice-count range from edge density.

    ``baseline`` sets the target edge mass per interval (|E| / baseline);
    ``window`` is the stride between measurement positions (0 = auto,
    ceil(span/100)).  Dense regions need short intervals to reach the
    target and push ``max_count`` up; sparse regions push ``min_count``
    down.  Degenerate networks return (1, 1, 1).
    """
    span = net.span
    active = net.active_timestamps
    if window <= 0:
        window = max(1, math.ceil(span / 100))
    if baseline < 2 or span == 1 or len(active) == 1:
        return SliceSuggestion(1, 1, 1)

    timestamps = [e.timestamp for e in net.edges]  # already sorted
    total = len(timestamps)
    target = total / baseline

    lengths: list[int] = []
    next_pos = active[0]
    for p in active:
        if p < next_pos:
            continue
        next_pos = p + window
        # suffix mass check: positions whose remaining stream cannot reach
        # the target would only measure the end-of-range artifact
        start_idx = bisect.bisect_left(timestamps, p)
        if total - start_idx < target:
            break
        # smallest length with >= target edges in [p, p + length)
        end_idx = start_idx + math.ceil(target) - 1
        length = timestamps[end_idx] - p + 1
        lengths.append(min(length, span))

    if not lengths:
        return SliceSuggestion(1, 1, 1)

    cap = min(span, len(active))

    def to_count(length: float) -> int:
        return max(1, min(cap, math.ceil(span / length)))

    return SliceSuggestion(
        min_count=to_count(max(lengths)),
        default_count=to_count(sum(lengths) / len(lengths)),
        max_count=to_count(min(lengths)),
    )
