"""Symmetric functions attached to a wreath product Γ≀S_n.

The ring is a polynomial ring in power sums p_k(γ), one family per
irreducible character γ of Γ.  Three bases are used, all indexed by
r-colored partitions (r = number of classes = number of irreducibles):

``p_char``
    p_ρ = Π_i p_{ρ^(i)}(γ^(i)); component i belongs to the character γ^(i).
    This is the working basis.  The p_k(γ) are real, so the hermitian form
    ⟨f, g⟩ = Σ c_ρ · conj(d_ρ) · z_ρ acts on coefficients only.
``P_class``
    P_ρ = Π_j p_{ρ^(j)}(c_j) with p_k(c) = Σ_γ γ(c^{-1}) p_k(γ); component j
    belongs to the class c_j.  These index the conjugacy classes of Γ≀S_n.
``S``
    wreath Schur functions S_λ = Π_i s_{λ^(i)} written in the alphabet of
    γ^(i); an orthonormal basis.

Irreducible characters of Γ≀S_n are χ^λ(ρ) = ⟨S_λ, P_ρ⟩.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import factorial, prod
from typing import Mapping

from .cyclotomic import Cyclotomic, as_cyclotomic
from .errors import (
    ColorCountMismatch,
    ContainmentViolated,
    GroupMismatch,
    InternalError,
    InvalidInput,
    WeightMismatch,
)
from .groups import GroupData
from .lr import colored_lr
from .partitions import (
    ColoredPartition,
    Partition,
    colored_partitions_of,
    contains,
    format_colored,
    hook_product,
    partitions_of,
    z_value,
)
from .symfunc import SymFunc, to_basis

__all__ = [
    "WREATH_BASES",
    "WreathSymFunc",
    "ClassFunction",
    "CharacterTable",
    "big_Z",
    "small_z",
    "power_sum_class",
    "power_sum_char",
    "class_to_char_basis",
    "char_to_class_basis",
    "sesqui_inner",
    "wreath_schur",
    "wreath_skew_schur",
    "character",
    "character_table",
    "dimension",
    "identity_class",
    "frobenius_ch",
]

WREATH_BASES = ("p_char", "P_class", "S")

_ZERO = Cyclotomic.rational(0)
_ONE = Cyclotomic.rational(1)


def _cp(x, r: int | None = None) -> ColoredPartition:
    cp = x if isinstance(x, ColoredPartition) else ColoredPartition(x)
    if r is not None and cp.r != r:
        raise ColorCountMismatch(f"{format_colored(cp)} has {cp.r} colors, the group has {r}")
    return cp


def _add_into(acc: dict, key, value) -> None:
    cur = acc.get(key)
    acc[key] = value if cur is None else cur + value


def _prune(coeffs: dict) -> dict:
    return {k: v for k, v in coeffs.items() if not v.is_zero()}


class WreathSymFunc:
    """A homogeneous element of the wreath-product ring over a fixed group."""

    __slots__ = ("group", "degree", "basis", "coeffs")

    def __init__(self, group: GroupData, basis: str, coeffs: Mapping, degree: int | None = None):
        if basis not in WREATH_BASES:
            raise InvalidInput(f"unknown wreath basis {basis!r}; expected one of {WREATH_BASES}")
        r = group.r
        clean: dict[ColoredPartition, Cyclotomic] = {}
        for lam, c in coeffs.items():
            c = as_cyclotomic(c)
            if c is NotImplemented:
                raise InvalidInput(f"coefficient {c!r} is not exact")
            _add_into(clean, _cp(lam, r), c)
        clean = _prune(clean)
        weights = {lam.weight for lam in clean}
        if degree is None:
            if len(weights) != 1:
                raise InvalidInput("degree is ambiguous; pass it explicitly")
            degree = weights.pop()
        elif weights - {degree}:
            raise InvalidInput(f"index weights {sorted(weights)} differ from degree {degree}")
        self.group = group
        self.basis = basis
        self.degree = degree
        self.coeffs = clean

    @classmethod
    def zero(cls, group: GroupData, degree: int, basis: str = "p_char") -> "WreathSymFunc":
        return cls(group, basis, {}, degree)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to(self, basis: str) -> "WreathSymFunc":
        if basis == self.basis:
            return self
        pc = self._pchar()
        if basis == "p_char":
            return WreathSymFunc(self.group, "p_char", pc, self.degree)
        if basis == "P_class":
            return WreathSymFunc(self.group, "P_class", _pchar_to_class(self.group, pc), self.degree)
        if basis == "S":
            return WreathSymFunc(self.group, "S", _pchar_to_schur(self.group.r, pc), self.degree)
        raise InvalidInput(f"unknown wreath basis {basis!r}")

    def _pchar(self) -> dict:
        if self.basis == "p_char":
            return self.coeffs
        acc: dict = {}
        for lam, c in self.coeffs.items():
            if self.basis == "P_class":
                expansion = _class_monomial_in_char(self.group, lam)
            else:
                expansion = _schur_in_char(lam)
            for mu, x in expansion.items():
                _add_into(acc, mu, c * x)
        return _prune(acc)

    def coefficient(self, lam) -> Cyclotomic:
        return self.coeffs.get(_cp(lam), _ZERO)

    def is_rational(self) -> bool:
        return all(c.is_rational() for c in self.coeffs.values())

    def _check(self, other: "WreathSymFunc"):
        if other.group != self.group:
            raise GroupMismatch(f"{self.group.name} vs {other.group.name}")

    def __add__(self, other):
        if not isinstance(other, WreathSymFunc):
            return NotImplemented
        self._check(other)
        if other.degree != self.degree:
            raise InvalidInput(f"degrees differ: {self.degree} vs {other.degree}")
        other = other.to(self.basis)
        acc = dict(self.coeffs)
        for k, v in other.coeffs.items():
            _add_into(acc, k, v)
        return WreathSymFunc(self.group, self.basis, acc, self.degree)

    def __neg__(self):
        return WreathSymFunc(self.group, self.basis, {k: -v for k, v in self.coeffs.items()}, self.degree)

    def __sub__(self, other):
        if not isinstance(other, WreathSymFunc):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, WreathSymFunc):
            self._check(other)
            a, b = self._pchar(), other._pchar()
            acc: dict = {}
            for la, ca in a.items():
                for lb, cb in b.items():
                    key = ColoredPartition(
                        Partition(sorted(x + y, reverse=True)) for x, y in zip(la, lb)
                    )
                    _add_into(acc, key, ca * cb)
            out = WreathSymFunc(self.group, "p_char", _prune(acc), self.degree + other.degree)
            return out.to(self.basis)
        c = as_cyclotomic(other)
        if c is NotImplemented:
            return NotImplemented
        return WreathSymFunc(self.group, self.basis, {k: v * c for k, v in self.coeffs.items()}, self.degree)

    def __rmul__(self, other):
        return self.__mul__(other)

    def __truediv__(self, other):
        return WreathSymFunc(self.group, self.basis, {k: v / other for k, v in self.coeffs.items()}, self.degree)

    def __eq__(self, other):
        if not isinstance(other, WreathSymFunc):
            return NotImplemented
        if other.group != self.group:
            return False
        if self.degree != other.degree:
            return self.is_zero() and other.is_zero()
        a, b = self._pchar(), other._pchar()
        return a.keys() == b.keys() and all(a[k] == b[k] for k in a)

    __hash__ = None

    def items(self):
        return sorted(self.coeffs.items(), key=lambda kv: _order_key(kv[0]))

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "basis": self.basis,
            "degree": self.degree,
            "terms": [[format_colored(k), v.to_json()] for k, v in self.items()],
        }

    def __str__(self):
        if not self.coeffs:
            return "0"
        name = {"p_char": "p", "P_class": "P", "S": "S"}[self.basis]
        pieces = []
        for lam, c in self.items():
            term = f"{name}[{format_colored(lam)}]"
            if c == 1:
                pieces.append(term)
            elif c == -1:
                pieces.append("-" + term)
            elif c.is_rational():
                pieces.append(f"{c}*{term}")
            else:
                pieces.append(f"({c})*{term}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"WreathSymFunc({self.group.name}, {self})"


def _order_key(cp: ColoredPartition):
    # the enumeration order of colored_partitions_of
    weights = tuple(-p.weight for p in cp)
    return weights, tuple(tuple(-x for x in p) for p in cp)


# -- statistics --------------------------------------------------------------

def small_z(lam: ColoredPartition) -> int:
    """z_λ = Π_i z_{λ^(i)}, the norm of p_λ in the character basis."""
    return prod(z_value(part) for part in lam)


def big_Z(G: GroupData, lam) -> int:
    """Z_λ = Π_j z_{λ^(j)} ζ_{c_j}^{l(λ^(j))}: the centralizer order of class λ in Γ≀S_n."""
    lam = _cp(lam, G.r)
    return prod(z_value(part) * G.zeta(j) ** len(part) for j, part in enumerate(lam))


def identity_class(G: GroupData, n: int) -> ColoredPartition:
    """(1^n) on the identity class c_0, empty elsewhere."""
    return ColoredPartition([(1,) * n] + [()] * (G.r - 1))


# -- change of basis ---------------------------------------------------------

def _linear_product(r: int, factors) -> dict:
    """Expand Π_f Σ_i w_f[i] · p_{k_f}(color i); factors are (k, weights)."""
    acc: dict[tuple, Cyclotomic] = {((),) * r: _ONE}
    for k, weights in factors:
        nxt: dict = {}
        for mono, c in acc.items():
            for i, w in enumerate(weights):
                if w.is_zero():
                    continue
                comp = mono[i]
                # keep parts sorted decreasingly while inserting k
                pos = 0
                while pos < len(comp) and comp[pos] >= k:
                    pos += 1
                new = mono[:i] + (comp[:pos] + (k,) + comp[pos:],) + mono[i + 1:]
                _add_into(nxt, new, c * w)
        acc = _prune(nxt)
    return {ColoredPartition(m): c for m, c in acc.items()}


@lru_cache(maxsize=None)
def _class_monomial_in_char(G: GroupData, rho: ColoredPartition) -> dict:
    r = G.r
    factors = []
    for j, part in enumerate(rho):
        weights = [G.value_at_inverse(i, j) for i in range(r)]
        factors.extend((k, weights) for k in part)
    return _linear_product(r, factors)


@lru_cache(maxsize=None)
def _char_monomial_in_class(G: GroupData, lam: ColoredPartition) -> dict:
    r = G.r
    factors = []
    for i, part in enumerate(lam):
        weights = [G.value(i, j) / G.zeta(j) for j in range(r)]
        factors.extend((k, weights) for k in part)
    return _linear_product(r, factors)


def _pchar_to_class(G: GroupData, coeffs: dict) -> dict:
    acc: dict = {}
    for lam, c in coeffs.items():
        for rho, x in _char_monomial_in_class(G, lam).items():
            _add_into(acc, rho, c * x)
    return _prune(acc)


@lru_cache(maxsize=None)
def _schur_in_char(lam: ColoredPartition) -> dict:
    per_color = [to_basis(SymFunc.basis_element("s", part), "p").items() for part in lam]
    out = {}
    for combo in product(*per_color):
        key = ColoredPartition(mu for mu, _ in combo)
        out[key] = Cyclotomic.rational(prod((c for _, c in combo), start=Fraction(1)))
    return out


@lru_cache(maxsize=None)
def _char_monomial_in_schur(rho: ColoredPartition) -> dict:
    per_color = [to_basis(SymFunc.basis_element("p", part), "s").items() for part in rho]
    out = {}
    for combo in product(*per_color):
        key = ColoredPartition(mu for mu, _ in combo)
        out[key] = Cyclotomic.rational(prod((c for _, c in combo), start=Fraction(1)))
    return out


def _pchar_to_schur(r: int, coeffs: dict) -> dict:
    acc: dict = {}
    for rho, c in coeffs.items():
        for lam, x in _char_monomial_in_schur(rho).items():
            _add_into(acc, lam, c * x)
    return _prune(acc)


def power_sum_class(G: GroupData, rho) -> WreathSymFunc:
    """P_ρ as an element (stored in the P_class basis)."""
    rho = _cp(rho, G.r)
    return WreathSymFunc(G, "P_class", {rho: 1}, rho.weight)


def power_sum_char(G: GroupData, lam) -> WreathSymFunc:
    lam = _cp(lam, G.r)
    return WreathSymFunc(G, "p_char", {lam: 1}, lam.weight)


def class_to_char_basis(f: WreathSymFunc) -> WreathSymFunc:
    """Rewrite each p_k(c_j) as Σ_i γ^(i)(c_j^{-1}) p_k(γ^(i)) and collect."""
    if f.basis != "P_class":
        raise InvalidInput(f"expected an element in the P_class basis, got {f.basis}")
    return f.to("p_char")


def char_to_class_basis(f: WreathSymFunc) -> WreathSymFunc:
    """Inverse of :func:`class_to_char_basis`, via p_k(γ) = Σ_c ζ_c^{-1} γ(c) p_k(c)."""
    if f.basis != "p_char":
        raise InvalidInput(f"expected an element in the p_char basis, got {f.basis}")
    return f.to("P_class")


# -- inner product and Schur functions ---------------------------------------

def sesqui_inner(f: WreathSymFunc, g: WreathSymFunc) -> Cyclotomic:
    """⟨f, g⟩, linear in f and conjugate-linear in g."""
    if f.group != g.group:
        raise GroupMismatch(f"{f.group.name} vs {g.group.name}")
    if f.degree != g.degree:
        return _ZERO
    a, b = f._pchar(), g._pchar()
    if len(b) < len(a):
        small, large, flip = b, a, True
    else:
        small, large, flip = a, b, False
    total = _ZERO
    for lam, x in small.items():
        y = large.get(lam)
        if y is None:
            continue
        c, d = (y, x) if flip else (x, y)
        total = total + c * d.conjugate() * small_z(lam)
    return total


def wreath_schur(G: GroupData, lam) -> WreathSymFunc:
    """S_λ expanded in the p_char basis (all coefficients rational)."""
    lam = _cp(lam, G.r)
    return WreathSymFunc(G, "p_char", _schur_in_char(lam), lam.weight)


def wreath_skew_schur(G: GroupData, lam, mu) -> WreathSymFunc:
    """S_{λ/μ} = Σ_ν c^λ_{μν} S_ν, returned in the S basis."""
    lam, mu = _cp(lam, G.r), _cp(mu, G.r)
    if not contains(lam, mu):
        raise ContainmentViolated(f"{format_colored(mu)} is not contained in {format_colored(lam)}")
    sizes = [a.weight - b.weight for a, b in zip(lam, mu)]
    coeffs = {}
    for combo in product(*(partitions_of(k) for k in sizes)):
        nu = ColoredPartition(combo)
        c = colored_lr(lam, mu, nu)
        if c:
            coeffs[nu] = c
    return WreathSymFunc(G, "S", coeffs, sum(sizes))


# -- characters ----------------------------------------------------------------

def character(G: GroupData, lam, rho) -> Cyclotomic:
    """χ^λ(ρ) = ⟨S_λ, P_ρ⟩; λ indexed by irreducibles of Γ, ρ by classes of Γ."""
    lam, rho = _cp(lam, G.r), _cp(rho, G.r)
    if lam.weight != rho.weight:
        raise WeightMismatch(f"|{format_colored(lam)}| != |{format_colored(rho)}|")
    return sesqui_inner(wreath_schur(G, lam), power_sum_class(G, rho))


@dataclass(frozen=True)
class CharacterTable:
    """Rows are irreducibles λ, columns classes ρ, both in colored_partitions_of order."""

    group: GroupData
    n: int
    rows: tuple[ColoredPartition, ...]
    cols: tuple[ColoredPartition, ...]
    entries: tuple[tuple[Cyclotomic, ...], ...]

    def __getitem__(self, key) -> Cyclotomic:
        lam, rho = key
        return self.entries[self.rows.index(_cp(lam))][self.cols.index(_cp(rho))]

    def __len__(self):
        return len(self.rows)

    def degrees(self) -> list[int]:
        j = self.cols.index(identity_class(self.group, self.n))
        return [int(row[j].rational_value()) for row in self.entries]

    def to_json(self) -> dict:
        return {
            "group": self.group.name,
            "n": self.n,
            "rows": [format_colored(x) for x in self.rows],
            "cols": [format_colored(x) for x in self.cols],
            "entries": [[v.to_json() for v in row] for row in self.entries],
        }

    def to_text(self) -> str:
        cells = [[str(v) for v in row] for row in self.entries]
        head = [""] + [format_colored(c) for c in self.cols]
        body = [[format_colored(lam)] + row for lam, row in zip(self.rows, cells)]
        widths = [max(len(r[k]) for r in [head] + body) for k in range(len(head))]
        lines = ["  ".join(x.rjust(w) for x, w in zip(r, widths)) for r in [head] + body]
        return "\n".join(lines)


def character_table(G: GroupData, n: int) -> CharacterTable:
    if not isinstance(n, int) or n < 0:
        raise InvalidInput(f"n must be a non-negative integer, got {n!r}")
    index = tuple(colored_partitions_of(n, G.r))
    schurs = [_schur_in_char(lam) for lam in index]
    classes = [
        {mu: c.conjugate() * small_z(mu) for mu, c in _class_monomial_in_char(G, rho).items()}
        for rho in index
    ]
    entries = []
    for s in schurs:
        row = []
        for pc in classes:
            total = _ZERO
            small, large = (s, pc) if len(s) <= len(pc) else (pc, s)
            for mu, x in small.items():
                y = large.get(mu)
                if y is not None:
                    total = total + x * y
            row.append(total)
        entries.append(tuple(row))
    return CharacterTable(G, n, index, index, tuple(entries))


def dimension(G: GroupData, lam) -> int:
    """n! Π_i d_i^{|λ^(i)|} / h(λ^(i)), the degree of the irreducible χ^λ."""
    lam = _cp(lam, G.r)
    d = G.degrees
    num = factorial(lam.weight) * prod(d[i] ** part.weight for i, part in enumerate(lam))
    den = prod(hook_product(part) for part in lam)
    q, rem = divmod(num, den)
    if rem:
        raise InternalError(f"dimension of {format_colored(lam)} is not an integer: {num}/{den}")
    return q


# -- class functions and the characteristic map ------------------------------

@dataclass(frozen=True, eq=False)
class ClassFunction:
    """A function on the conjugacy classes of Γ≀S_n, keyed by colored partitions."""

    group: GroupData
    n: int
    values: Mapping

    def __post_init__(self):
        vals = {}
        for rho, v in self.values.items():
            c = as_cyclotomic(v)
            if c is NotImplemented:
                raise InvalidInput(f"value {v!r} is not exact")
            vals[_cp(rho, self.group.r)] = c
        domain = set(colored_partitions_of(self.n, self.group.r))
        extra = set(vals) - domain
        if extra:
            raise InvalidInput(f"classes outside the domain: {sorted(map(format_colored, extra))}")
        for rho in domain:
            vals.setdefault(rho, _ZERO)
        object.__setattr__(self, "values", vals)

    def __call__(self, rho) -> Cyclotomic:
        return self.values[_cp(rho)]

    @classmethod
    def irreducible(cls, G: GroupData, lam) -> "ClassFunction":
        lam = _cp(lam, G.r)
        n = lam.weight
        return cls(G, n, {rho: character(G, lam, rho) for rho in colored_partitions_of(n, G.r)})

    def inner(self, other: "ClassFunction") -> Cyclotomic:
        """Σ_ρ Z_ρ^{-1} f(ρ) conj(g(ρ)), the usual inner product of class functions."""
        if other.group != self.group or other.n != self.n:
            raise GroupMismatch("class functions live on different groups")
        total = _ZERO
        for rho, v in self.values.items():
            total = total + v * other.values[rho].conjugate() / big_Z(self.group, rho)
        return total


def frobenius_ch(f: ClassFunction) -> WreathSymFunc:
    """ch(f) = Σ_ρ f(ρ) Z_ρ^{-1} P_ρ, returned in the p_char basis."""
    G = f.group
    coeffs = {rho: v / big_Z(G, rho) for rho, v in f.values.items() if not v.is_zero()}
    return WreathSymFunc(G, "P_class", coeffs, f.n).to("p_char")
