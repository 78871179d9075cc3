"""Parsing and validation of rank-ordered series.

A RankedSeries is the package's core data shape: values sorted in
decreasing order with dense integer ranks 1..n attached. Raw unordered
values get ranked by a stable descending sort, so ties keep their input
order and still receive distinct consecutive ranks.
"""

from __future__ import annotations

import csv
import io
from dataclasses import dataclass, field
from typing import Iterator, Sequence

import numpy as np

from .errors import ParseError, ValidationError


@dataclass(frozen=True, eq=False)
class RankedSeries:
    """A finite, positive, non-increasing sequence of ranked values.

    Invariants, enforced at construction:

    * ranks are exactly 1..n (implicit: position i holds rank i + 1)
    * values are non-increasing in rank
    * all values are strictly positive and finite
    """

    values: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        values = np.asarray(self.values, dtype=np.float64)
        if values.ndim != 1:
            raise ValidationError(f"values must be one-dimensional, got shape {values.shape}")
        if values.size == 0:
            raise ValidationError("series must contain at least one value")
        if not np.all(np.isfinite(values)):
            raise ValidationError("series values must all be finite")
        if not np.all(values > 0):
            raise ValidationError("series values must all be strictly positive")
        if np.any(np.diff(values) > 0):
            raise ValidationError("series values must be non-increasing in rank")
        values = values.copy()
        values.setflags(write=False)
        object.__setattr__(self, "values", values)
        if self.labels is not None:
            labels = tuple(self.labels)
            if len(labels) != values.size:
                raise ValidationError(f"got {len(labels)} labels for {values.size} values")
            object.__setattr__(self, "labels", labels)

    @property
    def n(self) -> int:
        return int(self.values.size)

    @property
    def ranks(self) -> np.ndarray:
        return np.arange(1, self.n + 1)

    def entries(self) -> Iterator[tuple[int, float, str | None]]:
        """Yield (rank, value, label) triples in rank order."""
        for i, v in enumerate(self.values):
            label = self.labels[i] if self.labels is not None else None
            yield i + 1, float(v), label

    def __len__(self) -> int:
        return self.n

    def __eq__(self, other) -> bool:
        if not isinstance(other, RankedSeries):
            return NotImplemented
        return np.array_equal(self.values, other.values) and self.labels == other.labels

    def __repr__(self) -> str:
        return f"RankedSeries(n={self.n}, max={self.values[0]!r}, min={self.values[-1]!r})"


@dataclass(frozen=True)
class IngestOptions:
    """How tabular input is interpreted.

    mode "raw" expects a value column (optionally preceded by a label
    column) and assigns ranks by sorting; mode "pre-ranked" expects an
    explicit rank column and validates it. Non-positive values are either
    rejected (library default) or dropped with a warning.
    """

    mode: str = "raw"
    zero_policy: str = "reject"
    delimiter: str = ","

    def __post_init__(self):
        if self.mode not in ("raw", "pre-ranked"):
            raise ValidationError(f"mode must be 'raw' or 'pre-ranked', got {self.mode!r}")
        if self.zero_policy not in ("reject", "drop"):
            raise ValidationError(f"zero_policy must be 'reject' or 'drop', got {self.zero_policy!r}")
        if len(self.delimiter) != 1 or not (self.delimiter.isprintable() or self.delimiter == "\t"):
            raise ValidationError(f"delimiter must be a single printable character or tab, got {self.delimiter!r}")


def rank_raw(values: Sequence[float] | np.ndarray, labels: Sequence[str] | None = None) -> RankedSeries:
    """Rank raw values by a stable descending sort.

    Equal values keep their input order and get distinct consecutive
    ranks. All values must be finite and strictly positive; there is no
    drop policy at this level.
    """
    arr = np.asarray(values, dtype=np.float64)
    if arr.ndim != 1:
        raise ValidationError(f"values must be one-dimensional, got shape {arr.shape}")
    if arr.size == 0:
        raise ValidationError("cannot rank an empty value sequence")
    if not np.all(np.isfinite(arr)):
        raise ValidationError("values must all be finite")
    if not np.all(arr > 0):
        raise ValidationError("values must all be strictly positive")
    order = np.argsort(-arr, kind="stable")
    sorted_labels = None
    if labels is not None:
        labels = tuple(labels)
        if len(labels) != arr.size:
            raise ValidationError(f"got {len(labels)} labels for {arr.size} values")
        sorted_labels = tuple(labels[i] for i in order)
    return RankedSeries(arr[order], sorted_labels)


def _parse_value(cell: str, line: int) -> float:
    try:
        value = float(cell)
    except ValueError:
        raise ParseError(f"could not parse value {cell!r} as a number", line=line) from None
    if not np.isfinite(value):
        raise ParseError(f"value {cell!r} is not finite", line=line)
    return value


def _parse_rank(cell: str, line: int) -> int:
    try:
        return int(cell)
    except ValueError:
        raise ParseError(f"could not parse rank {cell!r} as an integer", line=line) from None


def _looks_numeric(cell: str) -> bool:
    try:
        float(cell)
    except ValueError:
        return False
    return True


def parse_csv(text: str, options: IngestOptions | None = None) -> tuple[RankedSeries, list[str]]:
    """Parse delimited text into a RankedSeries plus a list of warnings.

    Column layout by mode (detected from the first data row's width):

    * raw:        ``value`` or ``label,value``
    * pre-ranked: ``rank,value`` or ``rank,label,value``

    An optional header row is recognized by its value cell failing numeric
    parse. Under the "drop" policy, rows with non-positive values are
    dropped and reported in the warnings; in pre-ranked mode the surviving
    rows are re-numbered densely after the original ranks have been
    validated as a permutation of 1..n.
    """
    if options is None:
        options = IngestOptions()

    reader = csv.reader(io.StringIO(text), delimiter=options.delimiter)
    rows: list[tuple[int, list[str]]] = []
    for cells in reader:
        if not cells or all(c.strip() == "" for c in cells):
            continue
        rows.append((reader.line_num, [c.strip() for c in cells]))
    if not rows:
        raise ValidationError("input contains no data rows")

    width = len(rows[0][1])
    if options.mode == "raw":
        valid_widths, value_col = (1, 2), width - 1
    else:
        valid_widths, value_col = (2, 3), width - 1
    if width not in valid_widths:
        raise ParseError(
            f"expected {' or '.join(map(str, valid_widths))} columns in {options.mode} mode, found {width}",
            line=rows[0][0],
        )
    if not _looks_numeric(rows[0][1][value_col]):
        rows = rows[1:]  # header row
        if not rows:
            raise ValidationError("input contains no data rows")

    warnings: list[str] = []
    parsed: list[tuple[int, float, str | None]] = []  # (rank or line, value, label)
    for line, cells in rows:
        if len(cells) != width:
            raise ParseError(f"expected {width} columns, found {len(cells)}", line=line)
        value = _parse_value(cells[value_col], line)
        label = None
        if options.mode == "raw":
            key = line
            if width == 2:
                label = cells[0]
        else:
            key = _parse_rank(cells[0], line)
            if width == 3:
                label = cells[1]
        if value <= 0:
            if options.zero_policy == "reject":
                raise ValidationError(f"non-positive value {value!r}", line=line)
            warnings.append(f"line {line}: dropped non-positive value {value!r}")
            parsed.append((key, value, label))  # kept for rank validation, dropped below
            continue
        parsed.append((key, value, label))

    has_labels = width == (2 if options.mode == "raw" else 3)

    if options.mode == "pre-ranked":
        expected = set(range(1, len(parsed) + 1))
        seen: set[int] = set()
        for line_row, (rank, _, _) in zip(rows, parsed):
            if rank in seen:
                raise ValidationError(f"duplicate rank {rank}", line=line_row[0])
            seen.add(rank)
        missing = sorted(expected - seen)
        if missing:
            raise ValidationError(f"ranks are not a permutation of 1..{len(parsed)}: missing {missing}")
        parsed.sort(key=lambda item: item[0])

    kept = [(v, lab) for _, v, lab in parsed if v > 0]
    if not kept:
        raise ValidationError("all rows were dropped; no positive values remain")
    values = np.array([v for v, _ in kept], dtype=np.float64)
    labels = tuple(lab if lab is not None else "" for _, lab in kept) if has_labels else None

    if options.mode == "raw":
        return rank_raw(values, labels), warnings
    return RankedSeries(values, labels), warnings
