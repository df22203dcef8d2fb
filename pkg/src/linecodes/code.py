"""Additive quaternary codes given as multisets of lines in PG(l-1, 2).

Each codeline is one coordinate.  The codeword attached to a dual vector
``v`` has a zero in coordinate ``j`` exactly when the hyperplane ``v``
contains codeline ``j``, so its weight is the number of codelines outside
that hyperplane.  Everything here is exact integer arithmetic.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Dict, Iterable, Mapping, Optional, Tuple, Union

import numpy as np

from .errors import DegenerateCodeError, OracleRefusedError, UsageError
from .geometry import Line, line_in_hyperplane, parity_table

STRATEGIES = ("auto", "scan", "dual")

# "auto" picks dual accumulation once n >= DUAL_THRESHOLD * 2**l
DUAL_THRESHOLD = 0.25

# cap on the size of the temporary (hyperplanes x lines) blocks
_BLOCK = 1 << 22


@dataclass(frozen=True)
class AdditiveLineCode:
    """A multiset of lines of PG(l-1, 2); ``l`` is twice the code dimension."""

    l: int
    lines: Tuple[Tuple[Line, int], ...]

    def __post_init__(self) -> None:
        if self.l < 2:
            raise UsageError(f"ambient dimension must be >= 2, got {self.l}")
        if not self.lines:
            raise UsageError("a code needs at least one codeline")
        seen = set()
        for line, mult in self.lines:
            if not isinstance(line, Line):
                raise UsageError(f"expected a Line, got {line!r}")
            if not line.fits(self.l):
                raise UsageError(f"{line!r} does not live in dimension {self.l}")
            if mult < 1:
                raise UsageError(f"multiplicity of {line!r} must be positive, got {mult}")
            if line in seen:
                raise UsageError(f"{line!r} listed twice")
            seen.add(line)
        if list(self.lines) != sorted(self.lines):
            object.__setattr__(self, "lines", tuple(sorted(self.lines)))

    @classmethod
    def from_lines(cls, l: int, lines: Union[Iterable[Line], Mapping[Line, int]]) -> "AdditiveLineCode":
        """Build from an iterable of lines (repeats add up) or a line -> multiplicity map."""
        counts = Counter(lines) if not isinstance(lines, Mapping) else Counter(dict(lines))
        return cls(l, tuple(sorted(counts.items())))

    @property
    def n(self) -> int:
        return sum(mult for _, mult in self.lines)

    @property
    def two_k(self) -> int:
        return self.l

    def multiset(self) -> Counter:
        return Counter(dict(self.lines))

    def expanded(self) -> Tuple[Line, ...]:
        """Codelines in coordinate order, repeated by multiplicity."""
        return tuple(line for line, mult in self.lines for _ in range(mult))

    @cached_property
    def _arrays(self) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
        p = np.array([line.a for line, _ in self.lines], dtype=np.int64)
        q = np.array([line.b for line, _ in self.lines], dtype=np.int64)
        m = np.array([mult for _, mult in self.lines], dtype=np.int64)
        return p, q, m


@dataclass(frozen=True)
class CodeParameters:
    n: int
    two_k: int
    d: int
    s: int

    def __post_init__(self) -> None:
        if not (1 <= self.d <= self.n) or self.s != self.n - self.d:
            raise UsageError(f"inconsistent parameters {self!r}")

    @property
    def k(self) -> Fraction:
        return Fraction(self.two_k, 2)

    def __str__(self) -> str:
        return f"[{self.n},{format_dimension(self.two_k)},{self.d}]_4"


@dataclass(frozen=True)
class HyperplaneProfile:
    dual_mask: int
    inside: int
    outside: int


def format_dimension(two_k: int) -> str:
    return str(two_k // 2) if two_k % 2 == 0 else f"{two_k // 2}.5"


def format_ratio(r: Fraction) -> str:
    return f"{r.numerator}/{r.denominator}"


# ---------- hyperplane loads


def hyperplane_profile(code: AdditiveLineCode, h: int) -> HyperplaneProfile:
    if not 0 < h < (1 << code.l):
        raise UsageError(f"dual mask {h} is not a hyperplane of dimension {code.l}")
    inside = sum(mult for line, mult in code.lines if line_in_hyperplane(line, h))
    return HyperplaneProfile(h, inside, code.n - inside)


def _loads_scan(code: AdditiveLineCode) -> np.ndarray:
    par = parity_table(code.l)
    p, q, m = code._arrays
    total = 1 << code.l
    loads = np.zeros(total, dtype=np.int64)
    step = max(1, _BLOCK // len(p))
    for start in range(1, total, step):
        v = np.arange(start, min(start + step, total), dtype=np.int64)[:, None]
        outside = par[v & p] | par[v & q]
        loads[start : start + len(v)] = (outside == 0).astype(np.int64) @ m
    return loads


def _lowbit_index(x: np.ndarray) -> np.ndarray:
    return np.log2(x & -x).astype(np.int64)


def _loads_dual(code: AdditiveLineCode) -> np.ndarray:
    # Per codeline, put the two spanning points in reduced echelon form on
    # pivot bits i, j; the hyperplanes through the line are then the free
    # bit patterns with bits i, j solved from the two parity conditions.
    l = code.l
    par = parity_table(l)
    p, q, m = code._arrays
    i = _lowbit_index(p)
    q = np.where((q >> i) & 1, q ^ p, q)
    j = _lowbit_index(q)
    p = np.where((p >> j) & 1, p ^ q, p)
    lo, hi = np.minimum(i, j)[:, None], np.maximum(i, j)[:, None]
    free = np.arange(1 << (l - 2), dtype=np.int64)[None, :]
    acc = np.zeros(1 << l, dtype=np.int64)
    step = max(1, _BLOCK // free.shape[1])
    for start in range(0, len(p), step):
        sl = slice(start, start + step)
        a, b = lo[sl], hi[sl]
        v = (free & ((1 << a) - 1)) | ((free >> a) << (a + 1))
        v = (v & ((1 << b) - 1)) | ((v >> b) << (b + 1))
        v |= par[v & p[sl, None]].astype(np.int64) << i[sl, None]
        v |= par[v & q[sl, None]].astype(np.int64) << j[sl, None]
        weights = np.broadcast_to(m[sl, None], v.shape)
        acc += np.bincount(v.ravel(), weights=weights.ravel(), minlength=1 << l).astype(np.int64)
    acc[0] = 0
    return acc


def resolve_strategy(code: AdditiveLineCode, strategy: str = "auto") -> str:
    if strategy not in STRATEGIES:
        raise UsageError(f"unknown strategy {strategy!r}; choose from {STRATEGIES}")
    if strategy == "auto":
        return "dual" if code.n >= DUAL_THRESHOLD * (1 << code.l) else "scan"
    return strategy


def hyperplane_loads(code: AdditiveLineCode, strategy: str = "auto") -> np.ndarray:
    """Array indexed by dual mask: codelines (with multiplicity) inside each hyperplane.

    Entry 0 is unused and set to 0.
    """
    if resolve_strategy(code, strategy) == "dual":
        return _loads_dual(code)
    return _loads_scan(code)


def code_parameters(code: AdditiveLineCode, strategy: str = "auto") -> CodeParameters:
    return parameters_from_loads(code, hyperplane_loads(code, strategy))


def parameters_from_loads(code: AdditiveLineCode, loads: np.ndarray) -> CodeParameters:
    s = int(loads[1:].max())
    if s == code.n:
        h = int(np.argmax(loads[1:] == s)) + 1
        raise DegenerateCodeError(f"every codeline lies in hyperplane {h}")
    return CodeParameters(n=code.n, two_k=code.l, d=code.n - s, s=s)


def weight_distribution(code: AdditiveLineCode, strategy: str = "auto") -> Dict[int, int]:
    """Histogram {weight: number of hyperplanes}, one entry per nonzero dual vector."""
    weights = code.n - hyperplane_loads(code, strategy)[1:]
    keys, counts = np.unique(weights, return_counts=True)
    return {int(w): int(c) for w, c in zip(keys, counts)}


# ---------- generator matrices

GF4_SYMBOLS = "01wW"  # value u + 2v stands for u + v*w, with w^2 = w + 1


def quaternary_generator_matrix(code: AdditiveLineCode) -> np.ndarray:
    """``l x n`` matrix of GF(4) symbols encoded as ``u + 2v`` for ``u + v*w``.

    Column ``j`` uses the two smallest points of codeline ``j`` as basis.
    """
    lines = code.expanded()
    p = np.array([line.a for line in lines], dtype=np.int64)
    q = np.array([line.b for line in lines], dtype=np.int64)
    bits = np.arange(code.l, dtype=np.int64)[:, None]
    return (((p >> bits) & 1) | (((q >> bits) & 1) << 1)).astype(np.uint8)


def concatenated_binary_generator(code: AdditiveLineCode) -> np.ndarray:
    """``l x 3n`` binary generator; each GF(4) symbol goes through the [3,2,2] code."""
    lines = code.expanded()
    pts = np.array([line.points for line in lines], dtype=np.int64).reshape(-1)
    bits = np.arange(code.l, dtype=np.int64)[:, None]
    return ((pts >> bits) & 1).astype(np.uint8)


ORACLE_MAX_ROWS = 20


def _row_ints(gen: np.ndarray) -> list:
    gen = np.asarray(gen, dtype=np.uint8)
    if gen.ndim != 2:
        raise UsageError("generator must be a 2-d array")
    return [int.from_bytes(np.packbits(row, bitorder="little").tobytes(), "little") for row in gen]


def brute_force_min_weight(gen: np.ndarray, max_rows: int = ORACLE_MAX_ROWS) -> int:
    """Minimum weight of a nonzero codeword, by walking all row combinations in Gray order."""
    rows = _row_ints(gen)
    if len(rows) > max_rows:
        raise OracleRefusedError(f"{len(rows)} rows exceeds the oracle limit of {max_rows}")
    best: Optional[int] = None
    word = 0
    for step in range(1, 1 << len(rows)):
        word ^= rows[(step & -step).bit_length() - 1]
        if word:
            w = word.bit_count()
            if best is None or w < best:
                best = w
    if best is None:
        raise UsageError("generator spans only the zero word")
    return best


# ---------- bounds and asymptotics


def griesmer_sum(k2: int, d2: int) -> int:
    return sum(-(-d2 // (1 << i)) for i in range(k2))


def griesmer_holds(n2: int, k2: int, d2: int) -> bool:
    if min(n2, k2, d2) < 1:
        raise UsageError(f"Griesmer bound needs positive n, k, d; got {(n2, k2, d2)}")
    return griesmer_sum(k2, d2) <= n2


def griesmer_max_n(two_k: int, s: int) -> Optional[int]:
    """Largest ``n`` whose concatenated [3n, 2k, 2(n-s)]_2 passes the Griesmer bound.

    Returns None when no ``n > s`` passes.
    """
    if two_k < 3 or s < 1:
        raise UsageError(f"need two_k >= 3 and s >= 1, got {two_k}, {s}")
    # the bound forces n <= s * (4*2^t - 4) / (2^t - 4); scanning up to it is exhaustive
    t = 1 << two_k
    ceiling = (s * (4 * t - 4)) // (t - 4)
    best = None
    for n in range(s + 1, ceiling + 2):
        if griesmer_holds(3 * n, two_k, 2 * (n - s)):
            best = n
    return best


def lambda_k(two_k: int) -> Fraction:
    """Exact limsup of n/s for additive codes of dimension two_k / 2."""
    if two_k < 3:
        raise UsageError(f"two_k must be >= 3, got {two_k}")
    return Fraction((1 << two_k) - 1, (1 << (two_k - 2)) - 1)


def s_k(two_k: int) -> int:
    """Smallest s with n/s equal to lambda_k."""
    if two_k < 3:
        raise UsageError(f"two_k must be >= 3, got {two_k}")
    base = (1 << (two_k - 2)) - 1
    return base // 3 if two_k % 2 == 0 else base


def sum_code(c1: AdditiveLineCode, c2: AdditiveLineCode) -> AdditiveLineCode:
    """Juxtapose two codes of the same dimension (multiset union of codelines)."""
    if c1.l != c2.l:
        raise UsageError(f"dimension mismatch: {c1.l} vs {c2.l}")
    return AdditiveLineCode.from_lines(c1.l, c1.multiset() + c2.multiset())
