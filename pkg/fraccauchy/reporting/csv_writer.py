"""CSV Writer - plot-ready numeric output

Every number is written with 17 significant digits, so a double survives
the text round trip exactly. Lines end in LF on every platform.
"""

import csv
import io
from pathlib import Path
from typing import Iterable, List, Optional, Sequence, Union

from fraccauchy.solver import FieldSample

Cell = Union[float, int, str]


def format_value(value: Cell) -> str:
    if isinstance(value, str):
        return value
    return f"{float(value):.17g}"


def render_csv(header: Sequence[str], rows: Iterable[Sequence[Cell]]) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    writer.writerow(header)
    for row in rows:
        writer.writerow([format_value(v) for v in row])
    return buffer.getvalue()


def _emit(text: str, path: Optional[Union[str, Path]]) -> str:
    if path is not None:
        # newline="" keeps LF on Windows too
        with open(path, "w", encoding="utf-8", newline="") as f:
            f.write(text)
    return text


def write_values_csv(
    header: Sequence[str], rows: Iterable[Sequence[Cell]], path: Optional[Union[str, Path]] = None
) -> str:
    """Write rows under header; returns the CSV text (also when path is given)."""
    return _emit(render_csv(header, rows), path)


def field_header(dim: int, with_stderr: bool) -> List[str]:
    header = ["t"] + [f"x{i + 1}" for i in range(dim)] + ["value", "tail_bound", "engine"]
    if with_stderr:
        header.append("stderr")
    return header


def write_field_csv(samples: Sequence[FieldSample], path: Optional[Union[str, Path]] = None) -> str:
    """
    One row per (sample, point): t, coordinates, value, tail_bound, engine[, stderr].

    The stderr column appears when any sample carries standard errors.

    Raises:
        ValueError: if samples are empty or mix dimensions
    """
    if not samples:
        raise ValueError("no field samples to write")
    dims = {s.dim for s in samples}
    if len(dims) != 1:
        raise ValueError(f"field samples mix dimensions {sorted(dims)}")
    with_stderr = any(s.stderr is not None for s in samples)

    rows = []
    for s in samples:
        for i, point in enumerate(s.points):
            row: List[Cell] = [s.t, *point, s.values[i], s.tail_bound, s.engine_tag.value]
            if with_stderr:
                row.append(s.stderr[i] if s.stderr is not None else 0.0)
            rows.append(row)
    return _emit(render_csv(field_header(dims.pop(), with_stderr), rows), path)
