"""Semistandard tableaux of (colored) skew shape, Kostka numbers and words."""

from __future__ import annotations

import json
from dataclasses import dataclass
from math import prod
from typing import Iterator, Mapping, Sequence

from .errors import ColorCountMismatch, ContentSizeMismatch, MalformedFilling, ParseError
from .partitions import ColoredSkewShape, Partition, SkewShape

__all__ = [
    "Tableau",
    "ColoredTableau",
    "validate_ssyt",
    "iter_ssyt",
    "enumerate_ssyt",
    "kostka",
    "colored_kostka",
    "word",
    "is_lattice",
    "colored_word_lattice",
]


@dataclass(frozen=True)
class Tableau:
    """A filling of a skew shape.

    ``rows[i]`` lists the entries of row i of ``shape`` left to right, only
    for the cells of the skew shape (so ``len(rows[i]) == outer[i] - inner[i]``).
    """

    shape: SkewShape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        rows = tuple(tuple(int(x) for x in row) for row in self.rows)
        _check_cover(self.shape, rows)
        n_rows = len(self.shape.outer)
        rows = rows[:n_rows] + ((),) * (n_rows - len(rows))
        object.__setattr__(self, "rows", rows)

    @classmethod
    def from_rows(cls, outer, rows, inner=()) -> "Tableau":
        return cls(SkewShape(Partition(outer), Partition(inner)), rows)

    def entries(self) -> dict[tuple[int, int], int]:
        shape = self.shape
        return {
            (i, j): v
            for i, row in enumerate(self.rows)
            for j, v in zip(shape.row_range(i), row)
        }

    def content(self) -> tuple[int, ...]:
        values = [v for row in self.rows for v in row]
        if not values:
            return ()
        counts = [0] * max(values)
        for v in values:
            counts[v - 1] += 1
        return tuple(counts)

    def monomial(self) -> tuple[int, ...]:
        return self.content()

    def is_semistandard(self) -> bool:
        return validate_ssyt(self.shape, self.rows)

    def to_json(self) -> dict:
        return {
            "outer": list(self.shape.outer),
            "inner": list(self.shape.inner),
            "rows": [list(r) for r in self.rows],
        }

    @classmethod
    def from_json(cls, doc) -> "Tableau":
        if isinstance(doc, str):
            try:
                doc = json.loads(doc)
            except json.JSONDecodeError as exc:
                raise ParseError(f"bad tableau JSON: {exc}") from exc
        try:
            return cls.from_rows(doc["outer"], doc["rows"], doc.get("inner", ()))
        except (KeyError, TypeError) as exc:
            raise ParseError(f"bad tableau document: {exc}") from exc

    def __str__(self):
        lines = []
        for i, row in enumerate(self.rows):
            pad = "  " * self.shape.inner.part(i)
            lines.append(pad + " ".join(str(v) for v in row))
        return "\n".join(lines)


@dataclass(frozen=True)
class ColoredTableau:
    components: tuple[Tableau, ...]

    @property
    def r(self) -> int:
        return len(self.components)

    def content(self) -> tuple[tuple[int, ...], ...]:
        return tuple(t.content() for t in self.components)

    def to_json(self) -> list:
        return [t.to_json() for t in self.components]


def _rows_from(shape: SkewShape, entries) -> tuple[tuple[int, ...], ...]:
    """Accept either a row list or a cell -> value mapping."""
    if isinstance(entries, Mapping):
        cells = set(shape.cells())
        if set(entries) != cells:
            missing = sorted(cells - set(entries))
            extra = sorted(set(entries) - cells)
            raise MalformedFilling(f"missing cells {missing}, extra cells {extra}")
        return tuple(
            tuple(entries[(i, j)] for j in shape.row_range(i)) for i in range(len(shape.outer))
        )
    rows = tuple(tuple(r) for r in entries)
    _check_cover(shape, rows)
    return rows + ((),) * (len(shape.outer) - len(rows))


def _check_cover(shape: SkewShape, rows) -> None:
    n_rows = len(shape.outer)
    # trailing empty rows may be omitted
    if len(rows) > n_rows and any(rows[n_rows:]):
        raise MalformedFilling(f"filling has {len(rows)} rows, shape has {n_rows}")
    for i in range(n_rows):
        want = len(shape.row_range(i))
        got = len(rows[i]) if i < len(rows) else 0
        if want != got:
            raise MalformedFilling(f"row {i} has {got} entries, shape needs {want}")
    if any(v < 1 for r in rows for v in r):
        raise MalformedFilling("entries must be positive integers")


def validate_ssyt(shape: SkewShape, entries) -> bool:
    """Rows weakly increase, columns strictly increase."""
    rows = _rows_from(shape, entries)
    cell = {}
    for i, row in enumerate(rows):
        for j, v in zip(shape.row_range(i), row):
            cell[i, j] = v
    for (i, j), v in cell.items():
        right = cell.get((i, j + 1))
        if right is not None and right < v:
            return False
        below = cell.get((i + 1, j))
        if below is not None and below <= v:
            return False
    return True


def _normalize_content(content: Sequence[int]) -> tuple[int, ...]:
    c = [int(x) for x in content]
    if any(x < 0 for x in c):
        raise ContentSizeMismatch(f"negative content entry in {c}")
    while c and c[-1] == 0:
        c.pop()
    return tuple(c)


def _backtrack(shape: SkewShape, max_entry: int, content: tuple[int, ...] | None) -> Iterator[Tableau]:
    cells = shape.cells()
    n = len(cells)
    outer, inner = shape.outer, shape.inner
    filled: dict[tuple[int, int], int] = {}
    remaining = list(content) if content is not None else None
    top = len(content) if content is not None else max_entry
    # cells below a given cell within the shape, used for the column-room bound
    depth = {}
    for i, j in cells:
        k = i
        while k + 1 < len(outer) and inner.part(k + 1) <= j < outer.part(k + 1):
            k += 1
        depth[i, j] = k - i

    def rec(idx: int):
        if idx == n:
            yield tuple(
                tuple(filled[i, j] for j in shape.row_range(i)) for i in range(len(outer))
            )
            return
        i, j = cells[idx]
        lo = 1
        if (i, j - 1) in filled:
            lo = filled[i, j - 1]
        if (i - 1, j) in filled:
            lo = max(lo, filled[i - 1, j] + 1)
        hi = top - depth[i, j]
        for v in range(lo, hi + 1):
            if remaining is not None:
                if remaining[v - 1] == 0:
                    continue
                remaining[v - 1] -= 1
            filled[i, j] = v
            yield from rec(idx + 1)
            del filled[i, j]
            if remaining is not None:
                remaining[v - 1] += 1

    for rows in rec(0):
        yield Tableau(shape, rows)


def iter_ssyt(shape: SkewShape, max_entry: int) -> Iterator[Tableau]:
    """All semistandard fillings with entries in 1..max_entry, lexicographic order."""
    return _backtrack(shape, max_entry, None)


def enumerate_ssyt(shape: SkewShape, content: Sequence[int]) -> list[Tableau]:
    """All semistandard tableaux of the given skew shape and content.

    ``content[k]`` is the number of entries equal to k+1; it need not be a
    partition.  Tableaux come out in row-major lexicographic order of entries.
    """
    content = _normalize_content(content)
    if sum(content) != shape.size:
        raise ContentSizeMismatch(f"content {content} sums to {sum(content)}, shape has {shape.size} cells")
    return list(_backtrack(shape, len(content), content))


def kostka(shape, content: Sequence[int]) -> int:
    if not isinstance(shape, SkewShape):
        shape = SkewShape(Partition(shape))
    return len(enumerate_ssyt(shape, content))


def colored_kostka(shape: ColoredSkewShape, contents: Sequence[Sequence[int]]) -> int:
    if len(contents) != shape.r:
        raise ColorCountMismatch(f"{len(contents)} contents for {shape.r} colors")
    return prod(kostka(s, c) for s, c in zip(shape.components(), contents))


def word(T: Tableau) -> tuple[int, ...]:
    """Read each row right to left, top row first."""
    return tuple(v for row in T.rows for v in reversed(row))


def is_lattice(w: Sequence[int]) -> bool:
    counts: dict[int, int] = {}
    for a in w:
        c = counts.get(a, 0) + 1
        if a > 1 and c > counts.get(a - 1, 0):
            return False
        counts[a] = c
    return True


def colored_word_lattice(T: ColoredTableau) -> bool:
    return all(is_lattice(word(t)) for t in T.components)
