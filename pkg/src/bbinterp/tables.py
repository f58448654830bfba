"""CSV/JSON input and output for node sets, samples and result tables.

Floats are written with ``repr``, the shortest string that round-trips the
binary value, independent of locale.
"""

from __future__ import annotations

import csv
import json
from pathlib import Path
from typing import IO, Iterable, Sequence

import numpy as np

from bbinterp.errors import BBInterpError
from bbinterp.interp import SampleData
from bbinterp.nodes import NodeSet


def _read_columns(path, expected: Sequence[str]) -> list[list[float]]:
    with open(path, newline="") as fh:
        reader = csv.reader(fh)
        try:
            header = [h.strip() for h in next(reader)]
        except StopIteration:
            raise BBInterpError(f"{path}: empty file") from None
        if header != list(expected):
            raise BBInterpError(f"{path}: expected header {','.join(expected)!r}, got {','.join(header)!r}")
        rows = []
        for lineno, row in enumerate(reader, start=2):
            if not row or all(not c.strip() for c in row):
                continue
            if len(row) != len(expected):
                raise BBInterpError(f"{path}:{lineno}: expected {len(expected)} columns, got {len(row)}")
            try:
                rows.append([float(c) for c in row])
            except ValueError:
                raise BBInterpError(f"{path}:{lineno}: not a number: {row!r}") from None
    if not rows:
        raise BBInterpError(f"{path}: no data rows")
    return rows


def read_nodes_csv(path) -> NodeSet:
    """Single column ``x``; must already be strictly increasing."""
    rows = _read_columns(path, ["x"])
    return NodeSet(np.array([r[0] for r in rows]))


def write_nodes_csv(nodes: NodeSet, path) -> None:
    with open(path, "w", newline="") as fh:
        write_table(["x"], ([float(x)] for x in nodes.interior), fh)


def read_samples_csv(path) -> SampleData:
    """Two columns ``x,f``."""
    rows = _read_columns(path, ["x", "f"])
    arr = np.array(rows)
    return SampleData(NodeSet(arr[:, 0]), arr[:, 1])


def parse_nodes(spec: str) -> NodeSet:
    """``equispaced:N`` or a path to a nodes CSV."""
    if spec.startswith("equispaced:"):
        count = spec.split(":", 1)[1]
        try:
            n = int(count)
        except ValueError:
            raise BBInterpError(f"bad node count in {spec!r}") from None
        return NodeSet.equispaced(n)
    if not Path(spec).is_file():
        raise BBInterpError(f"no such nodes file: {spec}")
    return read_nodes_csv(spec)


def _cell(v) -> str:
    if isinstance(v, (bool, np.bool_)):
        return "true" if v else "false"
    if isinstance(v, (int, np.integer)):
        return str(int(v))
    if isinstance(v, (float, np.floating)):
        return repr(float(v))
    return str(v)


def _jsonable(v):
    if isinstance(v, np.integer):
        return int(v)
    if isinstance(v, np.floating):
        return float(v)
    return v


def write_table(header: Sequence[str], rows: Iterable[Sequence], stream: IO[str], fmt: str = "csv") -> None:
    if fmt == "csv":
        writer = csv.writer(stream, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([_cell(v) for v in row])
    elif fmt == "json":
        records = [{k: _jsonable(v) for k, v in zip(header, row)} for row in rows]
        json.dump(records, stream)
        stream.write("\n")
    else:
        raise BBInterpError(f"unknown output format {fmt!r}")
