"""Reading and writing the line-oriented ``.scx`` format.

::

    # comment
    scx <d> <n>
    <v0> <v1> ... <vd> <weight>
    ...

Vertex ids inside a line may come in any order on input and are written in
ascending order. Simplex lines are written in lexicographic order and weights
use the shortest decimal that round-trips.
"""

from __future__ import annotations

import math
import os
from importlib import resources
from typing import Union

from .complex import WeightedComplex
from .errors import ParseError

FIXTURES = ("fig2", "fig3", "fig5", "fig6")


def format_weight(w: float) -> str:
    if w.is_integer() and abs(w) < 2**53:
        return str(int(w))
    return repr(w)


def parse(text: Union[str, bytes]) -> WeightedComplex:
    if isinstance(text, bytes):
        try:
            text = text.decode("ascii")
        except UnicodeDecodeError as exc:
            raise ParseError(0, f"not ASCII: {exc}") from None
    header = None
    top: dict[tuple[int, ...], float] = {}
    for lineno, raw in enumerate(text.split("\n"), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if header is None:
            if len(tokens) != 3 or tokens[0] != "scx":
                raise ParseError(lineno, "expected header 'scx <d> <n>'")
            try:
                d, n = int(tokens[1]), int(tokens[2])
            except ValueError:
                raise ParseError(lineno, "header dimension and vertex count must be integers") from None
            if d < 1 or n < 1:
                raise ParseError(lineno, "header dimension and vertex count must be positive")
            header = (d, n)
            continue
        d, n = header
        if len(tokens) != d + 2:
            raise ParseError(lineno, f"expected {d + 1} vertex ids and a weight, got {len(tokens)} tokens")
        try:
            verts = [int(t) for t in tokens[:-1]]
        except ValueError:
            raise ParseError(lineno, f"bad vertex id in {tokens[:-1]}") from None
        for v in verts:
            if not 1 <= v <= n:
                raise ParseError(lineno, f"vertex {v} out of range 1..{n}")
        tau = tuple(sorted(verts))
        if len(set(tau)) != len(tau):
            raise ParseError(lineno, f"repeated vertex in {tau}")
        try:
            w = float(tokens[-1])
        except ValueError:
            raise ParseError(lineno, f"bad weight {tokens[-1]!r}") from None
        if not math.isfinite(w):
            raise ParseError(lineno, f"non-finite weight {tokens[-1]!r}")
        if tau in top:
            raise ParseError(lineno, f"duplicate simplex {','.join(map(str, tau))}")
        top[tau] = w
    if header is None:
        raise ParseError(0, "missing header 'scx <d> <n>'")
    return WeightedComplex(header[0], header[1], top)


def serialize(X: WeightedComplex) -> bytes:
    lines = [f"scx {X.d} {X.n}"]
    for tau in sorted(X.top):
        lines.append(" ".join(map(str, tau)) + " " + format_weight(X.top[tau]))
    return ("\n".join(lines) + "\n").encode("ascii")


def load(path: Union[str, os.PathLike]) -> WeightedComplex:
    with open(path, "rb") as fh:
        return parse(fh.read())


def dump(X: WeightedComplex, path: Union[str, os.PathLike]) -> None:
    with open(path, "wb") as fh:
        fh.write(serialize(X))


def load_fixture(name: str) -> WeightedComplex:
    """One of the bundled example complexes: ``fig2``, ``fig3``, ``fig5`` or ``fig6``."""
    if name not in FIXTURES:
        raise KeyError(f"unknown fixture {name!r}; choose from {', '.join(FIXTURES)}")
    return parse(resources.files("scxpath.fixtures").joinpath(f"{name}.scx").read_bytes())
