"""Verification reports: build a family member, measure it exhaustively and
compare with its closed-form parameters."""
from __future__ import annotations

import os
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from typing import Dict, List, Optional, Tuple

import numpy as np

from .code import (
    AdditiveLineCode,
    CodeParameters,
    brute_force_min_weight,
    code_parameters,
    concatenated_binary_generator,
    format_ratio,
    griesmer_holds,
    hyperplane_loads,
    lambda_k,
    parameters_from_loads,
    s_k,
    sum_code,
)
from .constructions import (
    all_lines_code,
    is_m_cover,
    spread_code,
    three_cover_code,
    variant_code,
)
from .errors import OracleRefusedError, UsageError
from .geometry import line_count

FAMILIES = ("all-lines", "spread", "three-cover", "variant", "fano")
ORACLE_ENV = "LINECODES_ORACLE_LIMIT"
DEFAULT_ORACLE_LIMIT = 14


def default_oracle_limit() -> int:
    raw = os.environ.get(ORACLE_ENV)
    if raw is None:
        return DEFAULT_ORACLE_LIMIT
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ORACLE_ENV} must be an integer, got {raw!r}") from None


@dataclass
class VerificationReport:
    family: str
    size: Optional[int]
    claimed: Optional[CodeParameters]
    measured: CodeParameters
    weight_distribution: Dict[int, int]
    weight_set: Tuple[int, ...]
    claimed_weight_set: Optional[Tuple[int, ...]] = None
    is_cover: Optional[Tuple[int, bool]] = None
    profile_identity: Optional[bool] = None
    ratio: Fraction = Fraction(0)
    lambda_k: Fraction = Fraction(0)
    lambda_match: Optional[bool] = None
    s_k_match: Optional[bool] = None
    griesmer_concatenated: bool = False
    oracle_min_weight: Optional[int] = None
    oracle_match: Optional[bool] = None
    mismatches: List[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        out = asdict(self)
        for key in ("ratio", "lambda_k"):
            out[key] = format_ratio(getattr(self, key))
        out["weight_distribution"] = {str(w): c for w, c in self.weight_distribution.items()}
        out["weight_set"] = list(self.weight_set)
        if self.claimed_weight_set is not None:
            out["claimed_weight_set"] = list(self.claimed_weight_set)
        if self.is_cover is not None:
            out["is_cover"] = {"m": self.is_cover[0], "holds": self.is_cover[1]}
        out["pass"] = self.passed
        return out


def cross_check_oracle(
    code: AdditiveLineCode, limit: Optional[int] = None, strategy: str = "auto"
) -> bool:
    """Geometric distance against brute force on the concatenated binary code."""
    limit = default_oracle_limit() if limit is None else limit
    if code.l > limit:
        raise OracleRefusedError(f"dimension {code.l} exceeds the oracle limit {limit}")
    d = code_parameters(code, strategy).d
    return 2 * d == brute_force_min_weight(concatenated_binary_generator(code), max_rows=limit)


def _build(family: str, size: Optional[int]) -> Tuple[AdditiveLineCode, Optional[int]]:
    if family not in FAMILIES:
        raise UsageError(f"unknown family {family!r}; choose from {FAMILIES}")
    if family == "fano":
        if size not in (None, 3):
            raise UsageError("the fano family has only l = 3")
        return all_lines_code(3), 3
    if size is None:
        raise UsageError(f"family {family!r} needs a size parameter")
    builder = {
        "all-lines": all_lines_code,
        "spread": spread_code,
        "three-cover": three_cover_code,
        "variant": variant_code,
    }[family]
    return builder(size), size


def construct(family: str, size: Optional[int] = None) -> AdditiveLineCode:
    return _build(family, size)[0]


def claimed_parameters(family: str, size: Optional[int]) -> CodeParameters:
    """Closed-form parameters of each family member."""
    if family in ("fano", "all-lines"):
        l = 3 if family == "fano" else size
        n, s = line_count(l), line_count(l - 1)
        return CodeParameters(n, l, n - s, s)
    if family == "spread":
        n, s = ((1 << size) - 1) // 3, ((1 << (size - 2)) - 1) // 3
        return CodeParameters(n, size, n - s, s)
    if family == "three-cover":
        n, s = (1 << size) - 1, (1 << (size - 2)) - 1
        return CodeParameters(n, size, n - s, s)
    if family == "variant":
        n, d = ((1 << (2 * size + 1)) + 1) // 3, 1 << (2 * size - 1)
        return CodeParameters(n, 2 * size + 1, d, n - d)
    raise UsageError(f"unknown family {family!r}")


def _measure(
    code: AdditiveLineCode,
    family: str,
    size: Optional[int],
    claimed: Optional[CodeParameters],
    oracle_limit: Optional[int],
    strategy: str,
) -> VerificationReport:
    oracle_limit = default_oracle_limit() if oracle_limit is None else oracle_limit
    loads = hyperplane_loads(code, strategy)
    measured = parameters_from_loads(code, loads)
    weights = code.n - loads[1:]
    keys, counts = np.unique(weights, return_counts=True)
    dist = {int(w): int(c) for w, c in zip(keys, counts)}
    ratio = Fraction(measured.n, measured.s) if measured.s else Fraction(0)
    report = VerificationReport(
        family=family,
        size=size,
        claimed=claimed,
        measured=measured,
        weight_distribution=dist,
        weight_set=tuple(dist),
        ratio=ratio,
        lambda_k=lambda_k(code.l) if code.l >= 3 else Fraction(0),
        griesmer_concatenated=griesmer_holds(3 * measured.n, code.l, 2 * measured.d),
    )
    bad = report.mismatches
    if claimed is not None and claimed != measured:
        bad.append(f"parameters: claimed {claimed}, measured {measured}")
    if not report.griesmer_concatenated:
        bad.append(f"concatenated code [{3 * measured.n},{code.l},{2 * measured.d}]_2 violates Griesmer")
    if code.l <= oracle_limit:
        report.oracle_min_weight = brute_force_min_weight(
            concatenated_binary_generator(code), max_rows=oracle_limit
        )
        report.oracle_match = report.oracle_min_weight == 2 * measured.d
        if not report.oracle_match:
            bad.append(f"oracle: binary minimum weight {report.oracle_min_weight} != 2d = {2 * measured.d}")
    _family_checks(report, code, loads)
    return report


def _family_checks(report: VerificationReport, code: AdditiveLineCode, loads: np.ndarray) -> None:
    family, l, bad = report.family, code.l, report.mismatches
    inside = loads[1:]
    hyperplane_size = (1 << (l - 1)) - 1
    if family in ("fano", "all-lines", "spread", "three-cover"):
        report.lambda_match = report.ratio == report.lambda_k
        if not report.lambda_match:
            bad.append(f"ratio {format_ratio(report.ratio)} != lambda {format_ratio(report.lambda_k)}")
    if family == "all-lines" and report.measured.s != line_count(l - 1):
        bad.append(f"all-lines load {report.measured.s} != g({l - 1})")
    if family in ("spread", "three-cover"):
        m = 1 if family == "spread" else 3
        holds = is_m_cover(code, m)
        report.is_cover = (m, holds)
        report.profile_identity = bool(np.all(3 * inside + (code.n - inside) == m * hyperplane_size))
        report.s_k_match = report.measured.s == s_k(l)
        if not holds:
            bad.append(f"not a {m}-cover")
        if not report.profile_identity:
            bad.append(f"some hyperplane breaks 3*inside + outside = {m}*|H|")
        if not report.s_k_match:
            bad.append(f"load {report.measured.s} != s_k = {s_k(l)}")
    if family == "variant":
        d = 1 << (l - 2)
        report.claimed_weight_set = (d, d + 1)
        if report.weight_set != report.claimed_weight_set:
            bad.append(f"weight set {report.weight_set} != {report.claimed_weight_set}")


def verify_construction(
    family: str,
    size: Optional[int] = None,
    oracle_limit: Optional[int] = None,
    strategy: str = "auto",
) -> VerificationReport:
    code, size = _build(family, size)
    return _measure(code, family, size, claimed_parameters(family, size), oracle_limit, strategy)


def verify_code(
    code: AdditiveLineCode, oracle_limit: Optional[int] = None, strategy: str = "auto"
) -> VerificationReport:
    """Report for an arbitrary code: no claims, only Griesmer and oracle checks."""
    return _measure(code, "custom", None, None, oracle_limit, strategy)


def sum_construction_check(
    code: AdditiveLineCode,
    copies: int,
    oracle_limit: Optional[int] = None,
    strategy: str = "auto",
) -> VerificationReport:
    """Juxtapose ``copies`` copies of ``code``; every load scales by ``copies``."""
    if copies < 2:
        raise UsageError(f"copies must be >= 2, got {copies}")
    base = code_parameters(code, strategy)
    total = code
    for _ in range(copies - 1):
        total = sum_code(total, code)
    claimed = CodeParameters(copies * base.n, base.two_k, copies * base.d, copies * base.s)
    return _measure(total, "sum", copies, claimed, oracle_limit, strategy)
