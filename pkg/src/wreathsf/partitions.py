"""Partitions, colored partitions and skew shapes.

Partitions are stored as tuples of positive integers in weakly decreasing
order, so they hash, compare and slice like tuples.  Text syntax used by the
CLI and JSON output:

* a partition is comma separated, ``"4,3,2,2,1"``; the empty partition is ``"-"``
  (an empty string is also accepted on input);
* a colored partition joins its components with ``;``, e.g. ``"2,1;-;1"``.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Iterable, Sequence

from .errors import (
    ColorCountMismatch,
    ContainmentViolated,
    IncomparableWeights,
    InvalidInput,
    InvalidPartition,
    ParseError,
)

__all__ = [
    "Partition",
    "ColoredPartition",
    "SkewShape",
    "ColoredSkewShape",
    "normalize",
    "conjugate",
    "dominance_leq",
    "contains",
    "z_value",
    "hook_product",
    "partitions_of",
    "colored_partitions_of",
    "skew_components",
    "strip_type",
    "parse_partition",
    "parse_colored",
    "format_partition",
    "format_colored",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] | int = ()):
        if isinstance(parts, int):
            parts = (parts,)
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise InvalidPartition(f"parts must be positive: {parts}")
        if any(parts[i] < parts[i + 1] for i in range(len(parts) - 1)):
            raise InvalidPartition(f"parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @property
    def weight(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def part(self, i: int) -> int:
        """The i-th part (0-based), zero past the end."""
        return self[i] if i < len(self) else 0

    def multiplicities(self) -> dict[int, int]:
        return dict(Counter(self))

    def conjugate(self) -> "Partition":
        return conjugate(self)

    def cells(self) -> list[tuple[int, int]]:
        return [(i, j) for i, row in enumerate(self) for j in range(row)]

    def __repr__(self):
        return f"Partition({tuple(self)!r})"

    def __str__(self):
        return format_partition(self)


class ColoredPartition(tuple):
    """An r-tuple of partitions; r is len(self)."""

    __slots__ = ()

    def __new__(cls, components: Iterable[Iterable[int]]):
        comps = tuple(c if isinstance(c, Partition) else Partition(c) for c in components)
        if not comps:
            raise InvalidInput("a colored partition needs at least one color")
        return super().__new__(cls, comps)

    @property
    def r(self) -> int:
        return len(self)

    @property
    def weight(self) -> int:
        return sum(p.weight for p in self)

    # alias used when the colors are thought of as one shape
    total_weight = weight

    @classmethod
    def empty(cls, r: int) -> "ColoredPartition":
        return cls([()] * r)

    def __repr__(self):
        return f"ColoredPartition({[tuple(p) for p in self]!r})"

    def __str__(self):
        return format_colored(self)


@dataclass(frozen=True)
class SkewShape:
    outer: Partition
    inner: Partition = Partition()

    def __post_init__(self):
        object.__setattr__(self, "outer", _as_partition(self.outer))
        object.__setattr__(self, "inner", _as_partition(self.inner))
        if not contains(self.outer, self.inner):
            raise ContainmentViolated(f"{self.inner} is not contained in {self.outer}")

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight

    def row_range(self, i: int) -> range:
        return range(self.inner.part(i), self.outer.part(i))

    def cells(self) -> list[tuple[int, int]]:
        """Cells (row, col), 0-based, in row-major order."""
        return [(i, j) for i in range(len(self.outer)) for j in self.row_range(i)]

    def __str__(self):
        if not self.inner:
            return format_partition(self.outer)
        return f"{format_partition(self.outer)}/{format_partition(self.inner)}"


@dataclass(frozen=True)
class ColoredSkewShape:
    outer: ColoredPartition
    inner: ColoredPartition

    def __post_init__(self):
        outer = self.outer if isinstance(self.outer, ColoredPartition) else ColoredPartition(self.outer)
        inner = self.inner if isinstance(self.inner, ColoredPartition) else ColoredPartition(self.inner)
        if not contains(outer, inner):
            raise ContainmentViolated(f"{inner} is not contained in {outer}")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inner", inner)

    @property
    def r(self) -> int:
        return self.outer.r

    def components(self) -> list[SkewShape]:
        """The per-color skew shapes."""
        return [SkewShape(o, i) for o, i in zip(self.outer, self.inner)]

    @property
    def size(self) -> int:
        return self.outer.weight - self.inner.weight


def _as_partition(parts) -> Partition:
    return parts if isinstance(parts, Partition) else Partition(parts)


def normalize(raw: Sequence[int]) -> Partition:
    """Drop zeros and sort decreasingly.  Negative entries are rejected."""
    raw = [int(x) for x in raw]
    if any(x < 0 for x in raw):
        raise InvalidPartition(f"negative entry in {raw}")
    return Partition(sorted((x for x in raw if x), reverse=True))


def conjugate(lam: Sequence[int]) -> Partition:
    lam = _as_partition(lam)
    if not lam:
        return Partition()
    return Partition(sum(1 for p in lam if p >= k) for k in range(1, lam[0] + 1))


def dominance_leq(mu: Sequence[int], lam: Sequence[int]) -> bool:
    """True iff mu is dominated by lam.  Both must have the same weight."""
    mu, lam = _as_partition(mu), _as_partition(lam)
    if mu.weight != lam.weight:
        raise IncomparableWeights(f"|{mu}| != |{lam}|")
    s_mu = s_lam = 0
    for k in range(max(len(mu), len(lam))):
        s_mu += mu.part(k)
        s_lam += lam.part(k)
        if s_mu > s_lam:
            return False
    return True


def contains(lam, mu) -> bool:
    """Diagram containment mu ⊆ lam, per color for colored partitions."""
    if isinstance(lam, ColoredPartition) or isinstance(mu, ColoredPartition):
        lam = lam if isinstance(lam, ColoredPartition) else ColoredPartition(lam)
        mu = mu if isinstance(mu, ColoredPartition) else ColoredPartition(mu)
        if lam.r != mu.r:
            raise ColorCountMismatch(f"r={lam.r} vs r={mu.r}")
        return all(contains(a, b) for a, b in zip(lam, mu))
    lam, mu = _as_partition(lam), _as_partition(mu)
    if len(mu) > len(lam):
        return False
    return all(m <= l for m, l in zip(mu, lam))


def z_value(lam: Sequence[int]) -> int:
    lam = _as_partition(lam)
    return prod(i**m * factorial(m) for i, m in Counter(lam).items())


def hook_product(lam: Sequence[int]) -> int:
    lam = _as_partition(lam)
    conj = conjugate(lam)
    return prod((lam[i] - j) + (conj[j] - i) - 1 for i, j in lam.cells())


@lru_cache(maxsize=None)
def _partitions_bounded(n: int, largest: int) -> tuple[Partition, ...]:
    if n == 0:
        return (Partition(),)
    out = []
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            out.append(Partition((first,) + tuple(rest)))
    return tuple(out)


def partitions_of(n: int) -> list[Partition]:
    """All partitions of n in reverse lexicographic order, (n) first."""
    if not isinstance(n, int) or n < 0:
        raise InvalidInput(f"n must be a non-negative integer, got {n!r}")
    return list(_partitions_bounded(n, n))


def _weak_compositions(n: int, r: int):
    # reverse lexicographic: the first color takes the most weight first
    if r == 1:
        yield (n,)
        return
    for first in range(n, -1, -1):
        for rest in _weak_compositions(n - first, r - 1):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _colored_partitions(n: int, r: int) -> tuple[ColoredPartition, ...]:
    out = []
    for comp in _weak_compositions(n, r):
        for combo in product(*(partitions_of(k) for k in comp)):
            out.append(ColoredPartition(combo))
    return tuple(out)


def colored_partitions_of(n: int, r: int) -> list[ColoredPartition]:
    """All r-colored partitions of total weight n.

    Ordered by the weight vector (reverse lexicographic), then by the
    components' own reverse lexicographic order.
    """
    if not isinstance(n, int) or n < 0:
        raise InvalidInput(f"n must be a non-negative integer, got {n!r}")
    if not isinstance(r, int) or r < 1:
        raise InvalidInput(f"r must be a positive integer, got {r!r}")
    return list(_colored_partitions(n, r))


def skew_components(shape: SkewShape) -> list[SkewShape]:
    """Edge-connected components of a skew diagram, top to bottom.

    Each component is translated so that its lowest row starts in column 0.
    """
    rows = [(i, shape.row_range(i)) for i in range(len(shape.outer)) if len(shape.row_range(i))]
    groups: list[list[tuple[int, range]]] = []
    for i, cols in rows:
        if groups:
            pi, pcols = groups[-1][-1]
            # rows of a skew shape are intervals; consecutive rows touch by an
            # edge iff their column intervals overlap
            if pi == i - 1 and cols.start < pcols.stop and pcols.start < cols.stop:
                groups[-1].append((i, cols))
                continue
        groups.append([(i, cols)])
    comps = []
    for g in groups:
        shift = g[-1][1].start
        outer = [c.stop - shift for _, c in g]
        inner = [c.start - shift for _, c in g]
        comps.append(SkewShape(Partition(outer), normalize(inner)))
    return comps


def strip_type(shape: SkewShape) -> str:
    """One of ``"horizontal"``, ``"vertical"``, ``"both"``, ``"neither"``."""
    o, i = shape.outer, shape.inner
    oc, ic = conjugate(o), conjugate(i)
    horizontal = all(oc.part(k) - ic.part(k) <= 1 for k in range(len(oc)))
    vertical = all(o.part(k) - i.part(k) <= 1 for k in range(len(o)))
    if horizontal and vertical:
        return "both"
    if horizontal:
        return "horizontal"
    if vertical:
        return "vertical"
    return "neither"


# -- text syntax -------------------------------------------------------------

def parse_partition(text: str) -> Partition:
    text = text.strip()
    if text in ("", "-", "()", "0"):
        return Partition()
    try:
        parts = [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError as exc:
        raise ParseError(f"cannot parse partition {text!r}") from exc
    try:
        return Partition(parts)
    except InvalidPartition as exc:
        raise ParseError(f"{text!r} is not a partition: {exc}") from exc


def parse_colored(text: str, r: int | None = None) -> ColoredPartition:
    cp = ColoredPartition(parse_partition(tok) for tok in text.split(";"))
    if r is not None and cp.r != r:
        raise ColorCountMismatch(f"{text!r} has {cp.r} colors, expected {r}")
    return cp


def format_partition(lam: Sequence[int]) -> str:
    return ",".join(str(p) for p in lam) if len(lam) else "-"


def format_colored(cp: Sequence[Sequence[int]]) -> str:
    return ";".join(format_partition(p) for p in cp)
