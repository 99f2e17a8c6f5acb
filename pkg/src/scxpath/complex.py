"""Weighted d-complexes with a complete (d-1)-skeleton.

Only the top-dimensional simplices and their weights are stored. Every
d-subset of ``1..n`` is implicitly a (d-1)-simplex; the ones not contained
in any stored d-simplex simply have degree 0.

Simplices are plain tuples of strictly increasing positive ints, so
``(1, 3)`` is the edge {1, 3} and ``(1, 2, 3)`` the triangle {1, 2, 3}.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, NamedTuple

from .errors import InvalidSimplex, InvalidWeights

Simplex = tuple[int, ...]


def simplex(vertices: Iterable[int]) -> Simplex:
    """Canonicalize ``vertices`` into a sorted tuple.

    Raises InvalidSimplex on an empty set, repeated ids, or ids that are not
    positive integers.
    """
    vs = tuple(sorted(vertices))
    if not vs:
        raise InvalidSimplex("a simplex needs at least one vertex")
    for v in vs:
        if isinstance(v, bool) or not isinstance(v, int) or v < 1:
            raise InvalidSimplex(f"vertex ids must be positive integers, got {v!r}")
    if len(set(vs)) != len(vs):
        raise InvalidSimplex(f"repeated vertex in {vs}")
    return vs


def facets(tau: Simplex) -> list[Simplex]:
    """Faces of ``tau`` with one vertex removed, in ascending order of the removed vertex."""
    return [tau[:i] + tau[i + 1:] for i in range(len(tau))]


class NeighborRecord(NamedTuple):
    neighbor: Simplex
    via: Simplex
    weight: float


@dataclass(frozen=True)
class Violation:
    kind: str
    simplex: tuple
    detail: str

    def __str__(self) -> str:
        return f"{self.kind}: {','.join(map(str, self.simplex))}: {self.detail}"


# violation kinds
MALFORMED = "MalformedSimplex"
OUT_OF_RANGE = "OutOfRangeVertex"
NAN_WEIGHT = "NaNWeight"
INFINITE_WEIGHT = "NonFiniteWeight"
NEGATIVE_WEIGHT = "NegativeWeight"
NON_POSITIVE_WEIGHT = "NonPositiveWeight"


class WeightedComplex:
    """An immutable weighted d-complex on vertices ``1..n``.

    ``top`` maps each d-simplex to its weight. Keys are canonicalized (sorted)
    on construction; two keys that collapse onto the same simplex raise
    InvalidSimplex. Any other defect (wrong arity, out-of-range ids, bad
    weights) is kept and reported by :func:`validate`.
    """

    def __init__(self, d: int, n: int, top: Mapping[Iterable[int], float] | None = None):
        if not isinstance(d, int) or d < 1:
            raise ValueError(f"dimension must be a positive integer, got {d!r}")
        if not isinstance(n, int) or n < 1:
            raise ValueError(f"vertex count must be a positive integer, got {n!r}")
        self.d = d
        self.n = n
        canon: dict[Simplex, float] = {}
        for key, w in (top or {}).items():
            tau = tuple(sorted(key))
            if tau in canon:
                raise InvalidSimplex(f"duplicate d-simplex {tau}")
            canon[tau] = float(w)
        self._top = canon

    @property
    def top(self) -> Mapping[Simplex, float]:
        return self._top

    @property
    def m(self) -> int:
        """Number of d-simplices."""
        return len(self._top)

    def weight(self, tau: Iterable[int]) -> float | None:
        return self._top.get(tuple(sorted(tau)))

    def __contains__(self, tau: object) -> bool:
        return tau in self._top

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeightedComplex):
            return NotImplemented
        return self.d == other.d and self.n == other.n and self._top == other._top

    def __hash__(self) -> int:
        return hash((self.d, self.n, frozenset(self._top.items())))

    def __repr__(self) -> str:
        return f"WeightedComplex(d={self.d}, n={self.n}, m={self.m})"

    def check_simplex(self, sigma: Iterable[int], size: int | None = None) -> Simplex:
        """Canonicalize ``sigma`` and check it is a (d-1)-simplex over ``1..n``.

        Pass ``size`` to check a different cardinality (``d + 1`` for top simplices).
        """
        s = simplex(sigma)
        want = self.d if size is None else size
        if len(s) != want:
            raise InvalidSimplex(f"expected {want} vertices, got {len(s)} in {s}")
        if s[-1] > self.n:
            raise InvalidSimplex(f"vertex {s[-1]} exceeds n={self.n}")
        return s

    @cached_property
    def incidence(self) -> dict[Simplex, list[tuple[float, Simplex, list[Simplex]]]]:
        """Map each incident (d-1)-simplex to ``(weight, tau, facets(tau))`` for the d-simplices containing it.

        Built once, from the top simplices in sorted order, touching only facets
        that actually occur: O(m * (d+1)) entries.
        """
        inc: dict[Simplex, list[tuple[float, Simplex, list[Simplex]]]] = {}
        for tau in sorted(self._top):
            if len(tau) != self.d + 1:
                continue
            w = self._top[tau]
            fs = facets(tau)
            rec = (w, tau, fs)
            for f in fs:
                bucket = inc.get(f)
                if bucket is None:
                    inc[f] = [rec]
                else:
                    bucket.append(rec)
        return inc

    @cached_property
    def violations(self) -> tuple[Violation, ...]:
        return tuple(validate(self))


def neighbors(X: WeightedComplex, sigma: Iterable[int]) -> list[NeighborRecord]:
    """All ``(sigma', tau)`` with ``sigma ∪ sigma' = tau`` in X^d, sorted by neighbor."""
    s = X.check_simplex(sigma)
    out = []
    for w, tau, fs in X.incidence.get(s, ()):
        out.extend(NeighborRecord(f, tau, w) for f in fs if f != s)
    out.sort()
    return out


def degree(X: WeightedComplex, sigma: Iterable[int]) -> int:
    """Number of d-simplices containing ``sigma``."""
    return len(X.incidence.get(X.check_simplex(sigma), ()))


def validate(X: WeightedComplex, strict_positive: bool = False) -> list[Violation]:
    """Every defect of ``X`` as a list of violations; empty means valid.

    Negative and NaN weights are always violations. Zero weights are only
    reported when ``strict_positive`` is set.
    """
    report = []
    for tau, w in X.top.items():
        if len(tau) != X.d + 1 or len(set(tau)) != len(tau):
            report.append(Violation(MALFORMED, tau, f"expected {X.d + 1} distinct vertices"))
        elif any(not isinstance(v, int) or v < 1 or v > X.n for v in tau):
            report.append(Violation(OUT_OF_RANGE, tau, f"vertices must lie in 1..{X.n}"))
        if math.isnan(w):
            report.append(Violation(NAN_WEIGHT, tau, "weight is NaN"))
        elif math.isinf(w):
            report.append(Violation(INFINITE_WEIGHT, tau, f"weight is {w}"))
        elif w < 0:
            report.append(Violation(NEGATIVE_WEIGHT, tau, f"weight {w} is negative"))
        elif strict_positive and w == 0:
            report.append(Violation(NON_POSITIVE_WEIGHT, tau, "weight is zero"))
    return report


def require_valid(X: WeightedComplex) -> None:
    """Raise if ``X`` cannot be searched: InvalidSimplex for bad shapes, InvalidWeights for bad weights."""
    for v in X.violations:
        if v.kind in (MALFORMED, OUT_OF_RANGE):
            raise InvalidSimplex(str(v))
    for v in X.violations:
        raise InvalidWeights(str(v))
