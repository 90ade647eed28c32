"""Finite-group class data with exact character tables.

A group enters the library only through its conjugacy classes and character
table; no group elements are ever multiplied.  Rows of ``table`` are the
irreducible characters γ^(0..r-1), columns the classes c_0..c_{r-1}.  Class 0
is always the identity class and row 0 the trivial character.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

from .cyclotomic import Cyclotomic, zeta
from .errors import MalformedGroup, ParseError, UnknownGroup, ValidationFailed

__all__ = [
    "ClassInfo",
    "GroupData",
    "ValidationReport",
    "zeta_order",
    "validate",
    "builtin",
    "load_group",
    "BUILTIN_NAMES",
]


@dataclass(frozen=True)
class ClassInfo:
    label: str
    size: int
    inverse: int


@dataclass(frozen=True, eq=False)
class GroupData:
    name: str
    order: int
    exponent: int
    classes: tuple[ClassInfo, ...]
    table: tuple[tuple[Cyclotomic, ...], ...]

    @property
    def r(self) -> int:
        return len(self.classes)

    @property
    def degrees(self) -> tuple[int, ...]:
        """Character degrees d_i = γ^(i)(c_0)."""
        out = []
        for row in self.table:
            v = row[0].rational_value() if row[0].is_rational() else None
            if v is None or v.denominator != 1:
                raise MalformedGroup(f"degree {row[0]} is not an integer")
            out.append(int(v))
        return tuple(out)

    def value(self, i: int, j: int) -> Cyclotomic:
        """γ^(i)(c_j)."""
        return self.table[i][j]

    def value_at_inverse(self, i: int, j: int) -> Cyclotomic:
        """γ^(i)(c_j^{-1})."""
        return self.table[i][self.classes[j].inverse]

    def zeta(self, s: int) -> int:
        return zeta_order(self, s)

    def __eq__(self, other):
        if not isinstance(other, GroupData):
            return NotImplemented
        return (self.name, self.order, self.exponent, self.classes) == (
            other.name, other.order, other.exponent, other.classes
        ) and all(a == b for ra, rb in zip(self.table, other.table) for a, b in zip(ra, rb))

    def __hash__(self):
        return hash((self.name, self.order, self.classes))

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "order": self.order,
            "exponent": self.exponent,
            "classes": [{"label": c.label, "size": c.size, "inverse": c.inverse} for c in self.classes],
            "table": [[v.to_json() for v in row] for row in self.table],
        }


@dataclass
class ValidationReport:
    group: str
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.violations

    def __bool__(self):
        return self.ok

    def to_json(self) -> dict:
        return {"group": self.group, "valid": self.ok, "violations": list(self.violations)}


def zeta_order(G: GroupData, s: int) -> int:
    """Centralizer order |G| / |c_s|."""
    size = G.classes[s].size
    if size <= 0 or G.order % size:
        raise MalformedGroup(f"class {s} size {size} does not divide |G| = {G.order}")
    return G.order // size


def validate(G: GroupData) -> ValidationReport:
    """Check the structural invariants and both orthogonality relations exactly."""
    rep = ValidationReport(G.name)
    bad = rep.violations.append
    r = G.r

    if len(G.table) != r or any(len(row) != r for row in G.table):
        bad(f"table is not {r}x{r}")
        return rep
    if sum(c.size for c in G.classes) != G.order:
        bad(f"class sizes sum to {sum(c.size for c in G.classes)}, not |G| = {G.order}")
    if G.classes[0].size != 1:
        bad("class 0 must be the identity class (size 1)")
    zetas = []
    for s, c in enumerate(G.classes):
        if c.size <= 0 or G.order % c.size:
            bad(f"class {s} size {c.size} does not divide |G| = {G.order}")
            zetas.append(None)
        else:
            zetas.append(G.order // c.size)
    inv = [c.inverse for c in G.classes]
    if any(not (0 <= j < r) for j in inv):
        bad("inverse map points outside the class list")
        return rep
    for s in range(r):
        if inv[inv[s]] != s:
            bad(f"inverse map is not an involution at class {s}")
        if G.classes[inv[s]].size != G.classes[s].size:
            bad(f"class {s} and its inverse {inv[s]} have different sizes")
    if inv[0] != 0:
        bad("inverse map must fix the identity class")
    if any(not v.is_rational() or v.rational_value() != 1 for v in G.table[0]):
        bad("row 0 must be the trivial character")
    for i, row in enumerate(G.table):
        d = row[0]
        if not d.is_rational() or d.rational_value() <= 0 or d.rational_value().denominator != 1:
            bad(f"degree of character {i} is {d}, not a positive integer")
        for s in range(r):
            if row[inv[s]] != row[s].conjugate():
                bad(f"character {i}: value at inverse of class {s} is not the complex conjugate")
    if None in zetas:
        return rep

    for i in range(r):
        for j in range(r):
            total = Cyclotomic.rational(0)
            for s in range(r):
                total = total + G.table[i][s] * G.table[j][inv[s]] / zetas[s]
            want = 1 if i == j else 0
            if total != want:
                bad(f"row orthogonality ({i},{j}): sum is {total}, expected {want}")
    for s in range(r):
        for t in range(r):
            total = Cyclotomic.rational(0)
            for i in range(r):
                total = total + G.table[i][s] * G.table[i][inv[t]]
            want = zetas[s] if s == t else 0
            if total != want:
                bad(f"column orthogonality ({s},{t}): sum is {total}, expected {want}")
    return rep


# -- built-ins -----------------------------------------------------------------

def _cyclic(n: int) -> GroupData:
    classes = tuple(ClassInfo("1" if j == 0 else f"g^{j}", 1, (-j) % n) for j in range(n))
    table = tuple(tuple(zeta(n, i * j) for j in range(n)) for i in range(n))
    if n <= 2:
        table = tuple(tuple(Cyclotomic.rational(v.rational_value()) for v in row) for row in table)
    return GroupData(f"z{n}", n, n, classes, table)


def _s3() -> GroupData:
    classes = (ClassInfo("()", 1, 0), ClassInfo("(12)", 3, 1), ClassInfo("(123)", 2, 2))
    rows = ((1, 1, 1), (1, -1, 1), (2, 0, -1))
    table = tuple(tuple(Cyclotomic.rational(v) for v in row) for row in rows)
    return GroupData("s3", 6, 6, classes, table)


def _trivial() -> GroupData:
    return GroupData("trivial", 1, 1, (ClassInfo("1", 1, 0),), ((Cyclotomic.rational(1),),))


_BUILDERS = {
    "trivial": _trivial,
    "z2": lambda: _cyclic(2),
    "z3": lambda: _cyclic(3),
    "z4": lambda: _cyclic(4),
    "s3": _s3,
}
BUILTIN_NAMES = tuple(_BUILDERS)
_builtin_cache: dict[str, GroupData] = {}


def builtin(name: str) -> GroupData:
    """One of ``trivial``, ``z2``, ``z3``, ``z4``, ``s3``, validated."""
    key = name.lower()
    if key not in _BUILDERS:
        raise UnknownGroup(f"unknown group {name!r}; built-ins are {', '.join(BUILTIN_NAMES)}")
    if key not in _builtin_cache:
        G = _BUILDERS[key]()
        report = validate(G)
        if not report.ok:
            raise ValidationFailed(report)
        _builtin_cache[key] = G
    return _builtin_cache[key]


# -- group-spec documents --------------------------------------------------------

def _infer_inverses(table: Sequence[Sequence[Cyclotomic]]) -> list[int]:
    r = len(table)
    inverses = []
    for j in range(r):
        conj = [table[i][j].conjugate() for i in range(r)]
        matches = [k for k in range(r) if all(table[i][k] == conj[i] for i in range(r))]
        if len(matches) != 1:
            raise ParseError(f"cannot infer the inverse of class {j}: {len(matches)} candidates")
        inverses.append(matches[0])
    return inverses


def load_group(spec) -> GroupData:
    """Build and validate a group from a group-spec document.

    ``spec`` may be a dict, a JSON string, or a path to a JSON file.  Missing
    ``inverse`` entries are inferred from the table (the unique class whose
    column is the complex conjugate); ``exponent`` defaults to the lcm of the
    conductors appearing in the table.
    """
    if isinstance(spec, Path) or (isinstance(spec, str) and not spec.lstrip().startswith("{")):
        try:
            spec = Path(spec).read_text()
        except OSError as exc:
            raise ParseError(f"cannot read group spec: {exc}") from exc
    if isinstance(spec, str):
        try:
            spec = json.loads(spec)
        except json.JSONDecodeError as exc:
            raise ParseError(f"group spec is not valid JSON: {exc}") from exc
    if not isinstance(spec, dict):
        raise ParseError("group spec must be a JSON object")
    try:
        name = str(spec.get("name", "G"))
        order = int(spec["order"])
        raw_classes = spec["classes"]
        table = tuple(tuple(Cyclotomic.from_json(v) for v in row) for row in spec["table"])
        r = len(raw_classes)
        if len(table) != r or any(len(row) != r for row in table):
            raise ParseError(f"table must be {r}x{r}")
        if any("inverse" not in c for c in raw_classes):
            inverses = _infer_inverses(table)
        else:
            inverses = [int(c["inverse"]) for c in raw_classes]
        classes = tuple(
            ClassInfo(str(c.get("label", j)), int(c["size"]), inverses[j])
            for j, c in enumerate(raw_classes)
        )
        if "exponent" in spec:
            exponent = int(spec["exponent"])
        else:
            from math import lcm

            exponent = lcm(1, *(v.conductor for row in table for v in row))
    except ParseError:
        raise
    except (KeyError, TypeError, ValueError) as exc:
        raise ParseError(f"malformed group spec: {exc}") from exc
    if r == 0:
        raise ParseError("group spec has no classes")
    G = GroupData(name, order, exponent, classes, table)
    report = validate(G)
    if not report.ok:
        raise ValidationFailed(report)
    return G
