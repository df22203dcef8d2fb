"""JSON code files and plain-text generator matrix exports."""
from __future__ import annotations

import json
from pathlib import Path
from typing import Union

from .code import (
    GF4_SYMBOLS,
    AdditiveLineCode,
    concatenated_binary_generator,
    quaternary_generator_matrix,
    weight_distribution,
)
from .errors import CodeFileError, DegenerateLineError, UsageError
from .geometry import Line

EXPORT_FORMATS = ("json", "csv-weights", "gf4-genmat", "bin-genmat")


def code_to_json(code: AdditiveLineCode) -> str:
    rows = ",\n".join(f"    [{line.a}, {line.b}, {line.c}, {mult}]" for line, mult in code.lines)
    return f'{{\n  "ambient_dim": {code.l},\n  "lines": [\n{rows}\n  ]\n}}\n'


def code_from_json(text: str) -> AdditiveLineCode:
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise CodeFileError(f"line {exc.lineno}: malformed JSON ({exc.msg})") from None
    if not isinstance(data, dict):
        raise CodeFileError("top level must be an object")
    l = data.get("ambient_dim")
    if not isinstance(l, int) or isinstance(l, bool) or l < 2:
        raise CodeFileError(f"ambient_dim: expected an integer >= 2, got {l!r}")
    entries = data.get("lines")
    if not isinstance(entries, list) or not entries:
        raise CodeFileError("lines: expected a non-empty list of [a, b, c, multiplicity]")
    pairs = []
    for idx, entry in enumerate(entries):
        where = f"lines[{idx}]"
        if (
            not isinstance(entry, list)
            or len(entry) != 4
            or not all(isinstance(x, int) and not isinstance(x, bool) for x in entry)
        ):
            raise CodeFileError(f"{where}: expected four integers, got {entry!r}")
        a, b, c, mult = entry
        try:
            line = Line(a, b, c)
        except DegenerateLineError as exc:
            raise CodeFileError(f"{where}: {exc}") from None
        if not line.fits(l):
            raise CodeFileError(f"{where}: point {c} outside dimension {l}")
        if mult < 1:
            raise CodeFileError(f"{where}: multiplicity must be positive, got {mult}")
        pairs.append((line, mult))
    try:
        return AdditiveLineCode(l, tuple(pairs))
    except UsageError as exc:
        raise CodeFileError(f"lines: {exc}") from None


def save_code(code: AdditiveLineCode, path: Union[str, Path]) -> None:
    Path(path).write_text(code_to_json(code))


def load_code(path: Union[str, Path]) -> AdditiveLineCode:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise CodeFileError(f"{path}: {exc.strerror}") from None
    return code_from_json(text)


def export_text(code: AdditiveLineCode, fmt: str, strategy: str = "auto") -> str:
    if fmt == "json":
        return code_to_json(code)
    if fmt == "csv-weights":
        dist = weight_distribution(code, strategy)
        return "weight,count\n" + "".join(f"{w},{c}\n" for w, c in dist.items())
    if fmt == "gf4-genmat":
        gen = quaternary_generator_matrix(code)
        return "".join("".join(GF4_SYMBOLS[x] for x in row) + "\n" for row in gen)
    if fmt == "bin-genmat":
        gen = concatenated_binary_generator(code)
        return "".join("".join("01"[x] for x in row) + "\n" for row in gen)
    raise UsageError(f"unknown export format {fmt!r}; choose from {EXPORT_FORMATS}")
