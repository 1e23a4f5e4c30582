"""Plain-text interchange: code files and witness vectors.

A code file is::

    <ring spec>
    k <rows> n <cols>
    <rows of n*r canonical integers>

where Galois-ring entries are written as their r coefficients, constant first.
"""

from __future__ import annotations

from pathlib import Path

import numpy as np

from .codes import Code
from .ring import format_ring, get_ring, parse_ring


class FormatError(ValueError):
    pass


def format_code(code: Code) -> str:
    R = code.ring
    lines = [format_ring(code.spec), f"k {code.k} n {code.n}"]
    flat = R.coeffs(code.gen).reshape(code.k, code.n * code.spec.r)
    lines += [" ".join(map(str, row)) for row in flat.tolist()]
    return "\n".join(lines) + "\n"


def parse_code(text: str, name: str = "") -> Code:
    lines = [ln.split("#", 1)[0].strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln]
    if len(lines) < 2:
        raise FormatError("need a ring line and a size line")
    spec = parse_ring(lines[0])
    tok = lines[1].split()
    if len(tok) != 4 or tok[0] != "k" or tok[2] != "n":
        raise FormatError(f"bad size line {lines[1]!r}")
    try:
        k, n = int(tok[1]), int(tok[3])
        rows = [[int(t) for t in ln.split()] for ln in lines[2:]]
    except ValueError as exc:
        raise FormatError(f"non-integer entry: {exc}") from None
    if len(rows) != k:
        raise FormatError(f"expected {k} rows, found {len(rows)}")
    width = n * spec.r
    if any(len(r) != width for r in rows):
        raise FormatError(f"every row needs {width} integers")
    arr = np.array(rows, dtype=np.int64).reshape(k, n, spec.r) % spec.char
    gen = get_ring(spec).pack(arr) if k else np.zeros((0, n), dtype=np.int64)
    return Code(spec, np.asarray(gen).reshape(k, n), name)


def read_code(path) -> Code:
    p = Path(path)
    return parse_code(p.read_text(), p.stem)


def write_code(path, code: Code) -> None:
    Path(path).write_text(format_code(code))


def parse_vector(text: str, spec=None) -> np.ndarray:
    """Comma- or space-separated integers; with ``spec`` and r > 1 they are
    grouped into r coefficients per entry."""
    tok = [t for t in text.replace(",", " ").split() if t]
    v = np.array([int(t) for t in tok], dtype=np.int64)
    if spec is None or spec.r == 1:
        return v % (spec.char if spec else 1 << 62)
    if v.size % spec.r:
        raise FormatError(f"vector length must be a multiple of {spec.r}")
    return np.asarray(get_ring(spec).pack(v.reshape(-1, spec.r) % spec.char))


def read_vector(arg: str, spec=None) -> np.ndarray:
    """A vector given inline or as a path to a CSV file."""
    p = Path(arg)
    text = p.read_text() if p.exists() else arg
    return parse_vector(text, spec)


def format_vector(v, spec=None) -> str:
    if spec is not None and spec.r > 1:
        v = get_ring(spec).coeffs(np.asarray(v)).reshape(-1)
    return ",".join(str(int(x)) for x in np.asarray(v).reshape(-1))
