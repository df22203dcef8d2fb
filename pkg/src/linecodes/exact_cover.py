"""Exact-cover search for partial spreads with a prescribed hole set.

Knuth's Algorithm X on a column -> rows dict of sets; removing and restoring
rows mirrors the dancing-links updates.  Column choice is deterministic:
fewest remaining candidates, ties broken by the lowest point.
"""
from __future__ import annotations

from typing import Dict, Iterable, List, Optional, Set

from .constructions import PartialSpread
from .errors import UsageError
from .geometry import Line, enumerate_lines

MAX_SEARCH_DIM = 7


def _select(cols: Dict[int, Set[Line]], rows: Dict[Line, tuple], row: Line) -> list:
    removed = []
    for c in rows[row]:
        for other in cols[c]:
            for c2 in rows[other]:
                if c2 != c:
                    cols[c2].discard(other)
        removed.append(cols.pop(c))
    return removed


def _deselect(cols: Dict[int, Set[Line]], rows: Dict[Line, tuple], row: Line, removed: list) -> None:
    for c in reversed(rows[row]):
        cols[c] = removed.pop()
        for other in cols[c]:
            for c2 in rows[other]:
                if c2 != c:
                    cols[c2].add(other)


def _search(cols, rows, partial: List[Line]) -> bool:
    if not cols:
        return True
    col = min(cols, key=lambda c: (len(cols[c]), c))
    for row in sorted(cols[col]):
        partial.append(row)
        removed = _select(cols, rows, row)
        if _search(cols, rows, partial):
            return True
        _deselect(cols, rows, row, removed)
        partial.pop()
    return False


def exact_cover_partial_spread(
    l: int, holes: Iterable[int], max_dim: int = MAX_SEARCH_DIM
) -> Optional[PartialSpread]:
    """Find disjoint lines covering exactly the points outside ``holes``, or None."""
    if l < 2 or l > max_dim:
        raise UsageError(f"exact-cover search supports 2 <= l <= {max_dim}, got {l}")
    hole_set = frozenset(holes)
    if any(not 0 < p < (1 << l) for p in hole_set):
        raise UsageError(f"hole set {sorted(hole_set)} is not a set of points of dimension {l}")
    targets = [p for p in range(1, 1 << l) if p not in hole_set]
    rows = {line: line.points for line in enumerate_lines(l) if not hole_set & set(line.points)}
    cols: Dict[int, Set[Line]] = {p: set() for p in targets}
    for line, pts in rows.items():
        for p in pts:
            cols[p].add(line)
    partial: List[Line] = []
    if not _search(cols, rows, partial):
        return None
    return PartialSpread(l, tuple(sorted(partial)), hole_set)
