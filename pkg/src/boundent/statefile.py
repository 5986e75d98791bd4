"""Plain-text density matrix files.

Format::

    dims 3 3
    <9 whitespace-separated complex entries, e.g. 0.095238095238-0j>
    ... (one line per row)
"""
from __future__ import annotations

import numpy as np

from .errors import InvalidState
from .model import DensityMatrix


def format_state(rho: DensityMatrix) -> str:
    lines = [f"dims {rho.dim_a} {rho.dim_b}"]
    for row in rho.mat:
        lines.append(" ".join(f"{float(z.real)!r}{float(z.imag):+.17g}j" for z in row))
    return "\n".join(lines) + "\n"


def write_state(rho: DensityMatrix, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_state(rho))


def parse_state(text: str) -> DensityMatrix:
    """Parse and validate; malformed text and invalid states raise :class:`InvalidState`."""
    lines = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 3 or lines[0][0] != "dims":
        raise InvalidState("state file must start with 'dims <dim_a> <dim_b>'")
    try:
        da, db = int(lines[0][1]), int(lines[0][2])
    except ValueError as exc:
        raise InvalidState(f"bad dims line: {' '.join(lines[0])}") from exc
    n = da * db
    rows = lines[1:]
    if len(rows) != n or any(len(r) != n for r in rows):
        raise InvalidState(f"expected {n} rows of {n} entries")
    try:
        mat = np.array([[complex(tok) for tok in r] for r in rows], dtype=np.complex128)
    except ValueError as exc:
        raise InvalidState(f"unparseable complex entry: {exc}") from exc
    return DensityMatrix(mat, da, db)


def read_state(path) -> DensityMatrix:
    with open(path, encoding="utf-8") as fh:
        return parse_state(fh.read())
