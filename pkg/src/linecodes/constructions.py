"""Explicit line sets: all lines, spreads, partial spreads with a Fano hole set,
3-covers and the two-weight variant family."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Dict, FrozenSet, Optional, Sequence, Tuple

from .code import AdditiveLineCode
from .errors import UsageError
from .geometry import Line, enumerate_lines, fano_subplane, line_through

MAX_ALL_LINES_DIM = 12
MAX_SPREAD_DIM = 12
MAX_COVER_DIM = 11

# Irreducible polynomials (bit i = coefficient of x^i) for the layer fields.
IRREDUCIBLE = {
    2: 0b111,  # x^2+x+1
    3: 0b1011,  # x^3+x+1
    4: 0b10011,  # x^4+x+1
    5: 0b100101,  # x^5+x^2+1
    6: 0b1000011,  # x^6+x+1
    7: 0b10000011,  # x^7+x+1
    8: 0b100011011,  # x^8+x^4+x^3+x+1
    9: 0b1000010001,  # x^9+x^4+1
    10: 0b10000001001,  # x^10+x^3+1
}


@dataclass(frozen=True)
class PartialSpread:
    l: int
    lines: Tuple[Line, ...]
    holes: FrozenSet[int]

    def __post_init__(self) -> None:
        covered = set()
        for line in self.lines:
            pts = set(line.points)
            if covered & pts:
                raise ValueError(f"{line!r} meets an earlier line of the partial spread")
            covered |= pts
        everything = set(range(1, 1 << self.l))
        if covered | set(self.holes) != everything or covered & set(self.holes):
            raise ValueError("holes must be exactly the uncovered points")


@dataclass(frozen=True)
class CompleteMapping:
    """Linear map on F_2^dim with ``sigma`` and ``x -> x ^ sigma(x)`` both bijective.

    ``columns[i]`` is the image of the i-th unit vector.
    """

    dim: int
    columns: Tuple[int, ...]

    def __call__(self, x: int) -> int:
        y = 0
        for i, col in enumerate(self.columns):
            if (x >> i) & 1:
                y ^= col
        return y

    def is_complete(self) -> bool:
        size = 1 << self.dim
        images = {self(x) for x in range(size)}
        shifted = {x ^ self(x) for x in range(size)}
        return len(images) == size and len(shifted) == size


def _check_range(name: str, value: int, lo: int, hi: int, parity: Optional[int] = None) -> None:
    if not isinstance(value, int) or not lo <= value <= hi:
        raise UsageError(f"{name} must be in [{lo}, {hi}], got {value!r}")
    if parity is not None and value % 2 != parity:
        raise UsageError(f"{name} must be {'even' if parity == 0 else 'odd'}, got {value}")


def all_lines_code(l: int) -> AdditiveLineCode:
    _check_range("l", l, 3, MAX_ALL_LINES_DIM)
    return AdditiveLineCode(l, tuple((line, 1) for line in enumerate_lines(l)))


def _omega(p: int, l: int) -> int:
    # (u, v) -> (v, u ^ v) on every coordinate pair (2i, 2i+1)
    even = p & int("01" * (l // 2), 2)
    odd = (p >> 1) & int("01" * (l // 2), 2)
    return odd | ((even ^ odd) << 1)


def spread_lines(l: int) -> Tuple[Line, ...]:
    """The orbits {p, wp, w^2 p} of multiplication by w on F_4^(l/2)."""
    _check_range("l", l, 2, MAX_SPREAD_DIM, parity=0)
    seen = set()
    lines = []
    for p in range(1, 1 << l):
        if p in seen:
            continue
        line = line_through(p, _omega(p, l))
        seen.update(line.points)
        lines.append(line)
    return tuple(lines)


def spread_code(l: int) -> AdditiveLineCode:
    _check_range("l", l, 4, MAX_SPREAD_DIM, parity=0)
    return AdditiveLineCode(l, tuple((line, 1) for line in spread_lines(l)))


def complete_mapping(dim: int) -> CompleteMapping:
    """Multiplication by the class of x in F_2[x] / (fixed irreducible of degree dim)."""
    if dim not in IRREDUCIBLE:
        raise UsageError(f"no complete mapping configured for dimension {dim}")
    poly = IRREDUCIBLE[dim]
    columns = []
    for i in range(dim):
        y = 1 << (i + 1)
        if y >> dim:
            y ^= poly
        columns.append(y)
    return CompleteMapping(dim, tuple(columns))


def _layer_lines(l: int) -> list:
    # points outside the subspace of the low l-2 coordinates, split by their top bits
    low = l - 2
    sigma = complete_mapping(low)
    e1, e2, e3 = (1 << low, 2 << low, 3 << low)
    lines = []
    for v in range(1 << low):
        sv = sigma(v)
        lines.append(Line(*sorted((v | e1, sv | e2, (v ^ sv) | e3))))
    return lines


def partial_spread_outside_fano(l: int) -> PartialSpread:
    """Disjoint lines covering every point except those of the canonical Fano plane."""
    _check_range("l", l, 3, MAX_COVER_DIM, parity=1)
    lines = []
    for layer in range(5, l + 1, 2):
        lines.extend(_layer_lines(layer))
    return PartialSpread(l, tuple(sorted(lines)), frozenset(fano_subplane(l).points))


def three_cover_code(l: int) -> AdditiveLineCode:
    _check_range("l", l, 3, MAX_COVER_DIM, parity=1)
    counts: Counter = Counter()
    for line in partial_spread_outside_fano(l).lines:
        counts[line] += 3
    for line in fano_subplane(l).lines:
        counts[line] += 1
    return AdditiveLineCode.from_lines(l, counts)


def variant_code(m: int, fano_lines: Optional[Sequence[Line]] = None) -> AdditiveLineCode:
    """Partial spread outside the Fano plane plus three of the plane's lines.

    By default the three lexicographically smallest Fano lines are used.
    """
    _check_range("m", m, 2, 5)
    l = 2 * m + 1
    plane = fano_subplane(l)
    if fano_lines is None:
        fano_lines = sorted(plane.lines)[:3]
    chosen = set(fano_lines)
    if len(chosen) != 3 or not chosen <= set(plane.lines):
        raise UsageError(f"need three different lines of the Fano plane, got {fano_lines!r}")
    lines = list(partial_spread_outside_fano(l).lines) + sorted(chosen)
    return AdditiveLineCode.from_lines(l, lines)


def cover_multiplicity(code: AdditiveLineCode) -> Dict[int, int]:
    cover = {p: 0 for p in range(1, 1 << code.l)}
    for line, mult in code.lines:
        for p in line.points:
            cover[p] += mult
    return cover


def is_m_cover(code: AdditiveLineCode, m: int) -> bool:
    return all(c == m for c in cover_multiplicity(code).values())
