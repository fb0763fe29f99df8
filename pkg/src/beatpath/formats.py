"""Text formats: matrix CSV, beatpath CSV and order files."""

from __future__ import annotations

import csv
import io

import numpy as np

from .core import BeatpathMatrix, CandidateSet, MarginMatrix, ModelError, PartialOrderSpec, WeightedDigraph

HEADER = "candidates"


class FormatError(ValueError):
    pass


def looks_like_matrix(text: str) -> bool:
    for line in text.splitlines():
        if line.strip():
            return line.strip().split(",")[0].strip() == HEADER
    return False


def read_matrix(text: str, antisymmetric: bool = True) -> WeightedDigraph:
    """Parse ``candidates,A,B,...`` followed by one integer row per candidate."""
    rows = [r for r in csv.reader(io.StringIO(text)) if any(c.strip() for c in r)]
    if not rows or rows[0][0].strip() != HEADER:
        raise FormatError(f"matrix must start with a '{HEADER},...' header row")
    names = [c.strip() for c in rows[0][1:]]
    try:
        cands = CandidateSet(names)
    except ModelError as exc:
        raise FormatError(str(exc)) from None
    body = rows[1:]
    if len(body) != cands.m:
        raise FormatError(f"expected {cands.m} rows, got {len(body)}")
    w = []
    for i, row in enumerate(body):
        if row[0].strip() != names[i]:
            raise FormatError(f"row {i + 1} is labelled {row[0].strip()!r}, expected {names[i]!r}")
        if len(row) != cands.m + 1:
            raise FormatError(f"row {names[i]} has {len(row) - 1} entries, expected {cands.m}")
        try:
            w.append([int(c) for c in row[1:]])
        except ValueError:
            raise FormatError(f"row {names[i]} has a non-integer entry") from None
    arr = np.array(w, dtype=object).reshape(cands.m, cands.m)
    try:
        if antisymmetric:
            return MarginMatrix(cands, arr)
        return WeightedDigraph(cands, arr)
    except ModelError as exc:
        raise FormatError(str(exc)) from None


def write_matrix(g: WeightedDigraph) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([HEADER, *g.candidates.names])
    for name, row in zip(g.candidates.names, g.w.tolist()):
        writer.writerow([name, *row])
    return out.getvalue()


def write_beatpaths(b: BeatpathMatrix) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    writer.writerow([HEADER, *b.candidates.names])
    for name, row in zip(b.candidates.names, b.rows()):
        writer.writerow([name, *(str(v) for v in row)])
    return out.getvalue()


def read_order(text: str, extra: tuple[str, ...] = ()) -> PartialOrderSpec:
    """Lines of ``x < y``; the relation is closed transitively.

    Candidates are numbered in order of first appearance; names in ``extra``
    that never appear are appended at the end.
    """
    names: list[str] = []
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = [p.strip() for p in line.split("<")]
        if len(parts) != 2 or not all(parts):
            raise FormatError(f"line {lineno}: expected 'x < y'")
        for p in parts:
            if p not in names:
                names.append(p)
        pairs.append((names.index(parts[0]), names.index(parts[1])))
    for name in extra:
        if name not in names:
            names.append(name)
    try:
        return PartialOrderSpec.from_pairs(CandidateSet(names), pairs)
    except ModelError as exc:
        raise FormatError(str(exc)) from None
