"""Points, lines and hyperplanes of the binary projective space PG(l-1, 2).

A point is a nonzero integer mask below ``2**l``; bit ``i`` is the i-th
coordinate.  A hyperplane is identified with its nonzero dual vector and
contains the points whose AND with it has even parity.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import List, Tuple

import numpy as np

from .errors import DegenerateLineError, UsageError

Point = int
Hyperplane = int


def parity(x: int) -> int:
    return x.bit_count() & 1


@lru_cache(maxsize=None)
def parity_table(l: int) -> np.ndarray:
    """Parity of every mask below ``2**l`` as a read-only uint8 array."""
    table = np.zeros(1, dtype=np.uint8)
    for _ in range(l):
        table = np.concatenate([table, table ^ 1])
    table.setflags(write=False)
    return table


def _check_dim(l: int, minimum: int) -> None:
    if not isinstance(l, (int, np.integer)) or l < minimum:
        raise UsageError(f"ambient dimension must be an integer >= {minimum}, got {l!r}")


@dataclass(frozen=True, order=True)
class Line:
    """A line of PG(l-1, 2) stored as its sorted point triple."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if not (0 < self.a < self.b < self.c):
            raise DegenerateLineError(f"line points must satisfy 0 < a < b < c: {self.points}")
        if self.a ^ self.b != self.c:
            raise DegenerateLineError(f"{self.points} is not XOR-closed")

    @property
    def points(self) -> Tuple[int, int, int]:
        return (self.a, self.b, self.c)

    def fits(self, l: int) -> bool:
        return self.c < (1 << l)

    def __iter__(self):
        return iter(self.points)

    def __repr__(self) -> str:
        return f"Line({self.a}, {self.b}, {self.c})"


@dataclass(frozen=True)
class FanoPlane:
    points: Tuple[int, ...]
    lines: Tuple[Line, ...]


def enumerate_points(l: int) -> List[int]:
    _check_dim(l, 1)
    return list(range(1, 1 << l))


def line_through(a: int, b: int) -> Line:
    if a <= 0 or b <= 0:
        raise DegenerateLineError(f"points must be nonzero masks, got {a}, {b}")
    if a == b:
        raise DegenerateLineError(f"need two distinct points, got {a} twice")
    return Line(*sorted((a, b, a ^ b)))


def line_count(l: int) -> int:
    """Number of lines of PG(l-1, 2)."""
    _check_dim(l, 2)
    return ((1 << l) - 1) * ((1 << l) - 2) // 6


def enumerate_lines(l: int) -> List[Line]:
    _check_dim(l, 2)
    lines = []
    top = 1 << l
    for a in range(1, top):
        for b in range(a + 1, top):
            c = a ^ b
            if c > b:
                lines.append(Line(a, b, c))
    return lines


def point_in_hyperplane(p: int, h: int) -> bool:
    return not parity(p & h)


def line_in_hyperplane(line: Line, h: int) -> bool:
    # the third point is the XOR of the first two, so two checks suffice
    return not (parity(line.a & h) or parity(line.b & h))


def hyperplanes_containing_line(line: Line, l: int) -> List[int]:
    """Dual vectors of the ``2**(l-2) - 1`` hyperplanes through ``line``.

    Brings the two spanning points to reduced echelon form on two pivot
    bits, then solves for those bits over every choice of the free ones.
    """
    _check_dim(l, 2)
    if not line.fits(l):
        raise UsageError(f"{line!r} does not live in dimension {l}")
    p, q = line.a, line.b
    i = (p & -p).bit_length() - 1
    if (q >> i) & 1:
        q ^= p
    j = (q & -q).bit_length() - 1
    if (p >> j) & 1:
        p ^= q
    free = [bit for bit in range(l) if bit != i and bit != j]
    out = []
    for f in range(1, 1 << len(free)):
        v = 0
        for pos, bit in enumerate(free):
            if (f >> pos) & 1:
                v |= 1 << bit
        v |= parity(v & p) << i
        v |= parity(v & q) << j
        out.append(v)
    return sorted(out)


def fano_subplane(l: int) -> FanoPlane:
    """The Fano plane spanned by the three lowest coordinate vectors."""
    _check_dim(l, 3)
    return FanoPlane(points=tuple(range(1, 8)), lines=tuple(enumerate_lines(3)))
