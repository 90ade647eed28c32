"""Exact symmetric functions of bounded degree.

Two independent computation paths live here:

* a polynomial engine (:class:`SymPolynomial`) that realizes m, e, h, p and
  (skew) s in K variables straight from their definitions, s by summing
  ``x^T`` over semistandard tableaux;
* an algebra of homogeneous elements (:class:`SymFunc`) whose arithmetic
  goes through the power-sum basis, where products are concatenation and the
  Hall inner product is diagonal with weights ``z_λ``.

Transition matrices between the two are obtained from the polynomial engine
by reading off coefficients of dominant monomials, which identifies the m
expansion since the m_λ have disjoint supports.
"""

from __future__ import annotations

import json
import os
import threading
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, combinations_with_replacement
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from . import _linalg
from .errors import DegreeCapExceeded, InsufficientVariables, InvalidInput, ParseError
from .partitions import (
    Partition,
    SkewShape,
    format_partition,
    normalize,
    partitions_of,
    skew_components,
    z_value,
)
from .tableaux import iter_ssyt, kostka

__all__ = [
    "BASES",
    "SymPolynomial",
    "SymFunc",
    "TransitionMatrix",
    "gen_basis_poly",
    "skew_schur_poly",
    "transition",
    "to_basis",
    "multiply",
    "hall_inner",
    "gram_schmidt_schur",
    "realize",
    "identify",
    "get_degree_cap",
    "set_degree_cap",
    "set_cache_dir",
    "m", "e", "h", "p", "s",
]

BASES = ("m", "e", "h", "p", "s")

_DEGREE_CAP = int(os.environ.get("WREATHSF_DEGREE_CAP", "8"))
_CACHE_DIR: Path | None = (
    Path(os.environ["WREATHSF_CACHE_DIR"]) if os.environ.get("WREATHSF_CACHE_DIR") else None
)


def get_degree_cap() -> int:
    return _DEGREE_CAP


def set_degree_cap(cap: int) -> None:
    """Largest degree for which transition matrices will be built."""
    global _DEGREE_CAP
    if cap < 0:
        raise InvalidInput("degree cap must be non-negative")
    _DEGREE_CAP = int(cap)


def set_cache_dir(path: str | os.PathLike | None) -> None:
    """Persist transition matrices under ``path`` (``None`` disables)."""
    global _CACHE_DIR
    _CACHE_DIR = Path(path) if path is not None else None


def _check_basis(basis: str) -> str:
    if basis not in BASES:
        raise InvalidInput(f"unknown basis {basis!r}; expected one of {BASES}")
    return basis


# -- polynomial engine -------------------------------------------------------

class SymPolynomial:
    """A polynomial in K variables with exact rational coefficients.

    Terms map exponent vectors of length K to nonzero Fractions.
    """

    __slots__ = ("nvars", "terms")

    def __init__(self, nvars: int, terms: Mapping[tuple[int, ...], object] | None = None):
        self.nvars = nvars
        clean = {}
        for exps, c in (terms or {}).items():
            if len(exps) != nvars:
                raise InvalidInput(f"exponent {exps} does not have {nvars} entries")
            c = Fraction(c)
            if c:
                clean[tuple(exps)] = c
        self.terms = clean

    @classmethod
    def one(cls, nvars: int) -> "SymPolynomial":
        return cls(nvars, {(0,) * nvars: 1})

    @classmethod
    def monomial(cls, exps: Sequence[int], coeff=1) -> "SymPolynomial":
        return cls(len(exps), {tuple(exps): coeff})

    @property
    def variable_count(self) -> int:
        return self.nvars

    def coefficient(self, exps: Sequence[int]) -> Fraction:
        exps = tuple(exps) + (0,) * (self.nvars - len(exps))
        return self.terms.get(exps, Fraction(0))

    def is_zero(self) -> bool:
        return not self.terms

    def is_symmetric(self) -> bool:
        return all(self.terms.get(tuple(sorted(k, reverse=True))) == c for k, c in self.terms.items())

    def _same(self, other: "SymPolynomial"):
        if self.nvars != other.nvars:
            raise InvalidInput(f"variable counts differ: {self.nvars} vs {other.nvars}")

    def __add__(self, other):
        if not isinstance(other, SymPolynomial):
            return NotImplemented
        self._same(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return SymPolynomial(self.nvars, out)

    def __neg__(self):
        return SymPolynomial(self.nvars, {k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, SymPolynomial):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return SymPolynomial(self.nvars, {k: c * other for k, c in self.terms.items()})
        if not isinstance(other, SymPolynomial):
            return NotImplemented
        self._same(other)
        out: dict[tuple[int, ...], Fraction] = {}
        for k1, c1 in self.terms.items():
            for k2, c2 in other.terms.items():
                k = tuple(a + b for a, b in zip(k1, k2))
                out[k] = out.get(k, 0) + c1 * c2
        return SymPolynomial(self.nvars, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, SymPolynomial):
            return NotImplemented
        return self.nvars == other.nvars and self.terms == other.terms

    def __hash__(self):
        return hash((self.nvars, frozenset(self.terms.items())))

    def __str__(self):
        if not self.terms:
            return "0"
        pieces = []
        for exps in sorted(self.terms, reverse=True):
            c = self.terms[exps]
            mono = "*".join(
                f"x{i + 1}" + (f"^{a}" if a > 1 else "") for i, a in enumerate(exps) if a
            )
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")

    def __repr__(self):
        return f"SymPolynomial({self.nvars}, {self})"


def _multiset_permutations(items: Sequence[int]) -> Iterable[tuple[int, ...]]:
    items = sorted(items)
    n = len(items)
    yield tuple(items)
    # next-permutation in lexicographic order
    while True:
        i = n - 2
        while i >= 0 and items[i] >= items[i + 1]:
            i -= 1
        if i < 0:
            return
        j = n - 1
        while items[j] <= items[i]:
            j -= 1
        items[i], items[j] = items[j], items[i]
        items[i + 1:] = reversed(items[i + 1:])
        yield tuple(items)


def _one_part_poly(basis: str, k: int, K: int) -> SymPolynomial:
    if basis == "e":
        terms = {}
        for idx in combinations(range(K), k):
            exps = [0] * K
            for i in idx:
                exps[i] = 1
            terms[tuple(exps)] = 1
        return SymPolynomial(K, terms)
    if basis == "h":
        terms = {}
        for idx in combinations_with_replacement(range(K), k):
            exps = [0] * K
            for i in idx:
                exps[i] += 1
            terms[tuple(exps)] = 1
        return SymPolynomial(K, terms)
    if basis == "p":
        terms = {}
        for i in range(K):
            exps = [0] * K
            exps[i] = k
            terms[tuple(exps)] = 1
        return SymPolynomial(K, terms)
    raise AssertionError(basis)


@lru_cache(maxsize=4096)
def _basis_poly(basis: str, lam: Partition, K: int) -> SymPolynomial:
    if basis == "m":
        if len(lam) > K:
            return SymPolynomial(K)
        padded = list(lam) + [0] * (K - len(lam))
        return SymPolynomial(K, {perm: 1 for perm in _multiset_permutations(padded)})
    if basis == "s":
        return skew_schur_poly(SkewShape(lam), K, strict=False)
    poly = SymPolynomial.one(K)
    for part in lam:
        poly = poly * _one_part_poly(basis, part, K)
    return poly


def gen_basis_poly(basis: str, lam: Sequence[int], K: int, *, strict: bool = True) -> SymPolynomial:
    """Realize the basis element indexed by ``lam`` as a polynomial in K variables.

    With ``strict`` (the default) K must be at least ``|lam|``, the bound
    under which distinct basis elements stay distinct.  Pass ``strict=False``
    for deliberate low-variable evaluations.
    """
    _check_basis(basis)
    lam = lam if isinstance(lam, Partition) else Partition(lam)
    if K < 0 or (strict and K < lam.weight):
        raise InsufficientVariables(f"K={K} < |{format_partition(lam)}|={lam.weight}")
    return _basis_poly(basis, lam, K)


def skew_schur_poly(shape: SkewShape, K: int, *, strict: bool = True) -> SymPolynomial:
    """Sum of ``x^T`` over semistandard tableaux of ``shape`` with entries at most K."""
    if K < 0 or (strict and K < shape.size):
        raise InsufficientVariables(f"K={K} < {shape.size} cells")
    terms: dict[tuple[int, ...], int] = {}
    for T in iter_ssyt(shape, K):
        c = T.content()
        exps = c + (0,) * (K - len(c))
        terms[exps] = terms.get(exps, 0) + 1
    return SymPolynomial(K, terms)


# -- transition matrices -----------------------------------------------------

class TransitionMatrix:
    """Change of basis at a fixed degree.

    Row λ holds the expansion of ``from_basis[λ]`` in ``to_basis``:
    ``from_λ = Σ_μ M[λ, μ] to_μ``.  Rows and columns are indexed by
    :func:`partitions_of` (reverse lexicographic).
    """

    __slots__ = ("degree", "from_basis", "to_basis", "index", "rows", "_pos")

    def __init__(self, degree: int, from_basis: str, to_basis: str, rows):
        self.degree = degree
        self.from_basis = from_basis
        self.to_basis = to_basis
        self.index = tuple(partitions_of(degree))
        self.rows = tuple(tuple(Fraction(x) for x in row) for row in rows)
        if len(self.rows) != len(self.index) or any(len(r) != len(self.index) for r in self.rows):
            raise InvalidInput("transition matrix must be square over partitions of the degree")
        self._pos = {lam: i for i, lam in enumerate(self.index)}

    def __getitem__(self, key):
        lam, mu = key
        return self.rows[self._pos[Partition(lam)]][self._pos[Partition(mu)]]

    def __eq__(self, other):
        if not isinstance(other, TransitionMatrix):
            return NotImplemented
        return (self.degree, self.from_basis, self.to_basis, self.rows) == (
            other.degree, other.from_basis, other.to_basis, other.rows)

    def __hash__(self):
        return hash((self.degree, self.from_basis, self.to_basis, self.rows))

    def __repr__(self):
        return f"TransitionMatrix({self.from_basis}->{self.to_basis}, n={self.degree})"

    def inverse(self) -> "TransitionMatrix":
        return TransitionMatrix(self.degree, self.to_basis, self.from_basis, _linalg.inverse(self.rows))

    def compose(self, other: "TransitionMatrix") -> "TransitionMatrix":
        """self: a -> b, other: b -> c; returns a -> c."""
        if self.to_basis != other.from_basis or self.degree != other.degree:
            raise InvalidInput(f"cannot compose {self!r} with {other!r}")
        return TransitionMatrix(self.degree, self.from_basis, other.to_basis,
                                _linalg.matmul(self.rows, other.rows))

    def determinant(self) -> Fraction:
        return _linalg.determinant(self.rows)

    def is_identity(self) -> bool:
        return all(x == (i == j) for i, row in enumerate(self.rows) for j, x in enumerate(row))

    def to_records(self) -> list[dict]:
        """Sparse JSON-ready form: one record per nonzero entry."""
        return [
            {"row_partition": list(lam), "col_partition": list(mu),
             "numerator": x.numerator, "denominator": x.denominator}
            for lam, row in zip(self.index, self.rows)
            for mu, x in zip(self.index, row)
            if x
        ]

    @classmethod
    def from_records(cls, degree: int, from_basis: str, to_basis: str, records) -> "TransitionMatrix":
        index = partitions_of(degree)
        pos = {lam: i for i, lam in enumerate(index)}
        rows = [[Fraction(0)] * len(index) for _ in index]
        try:
            for rec in records:
                i = pos[Partition(rec["row_partition"])]
                j = pos[Partition(rec["col_partition"])]
                rows[i][j] = Fraction(rec["numerator"], rec["denominator"])
        except (KeyError, TypeError, ValueError) as exc:
            raise ParseError(f"bad transition record: {exc}") from exc
        return cls(degree, from_basis, to_basis, rows)


_cache: dict[tuple[str, str, int], TransitionMatrix] = {}
_cache_lock = threading.Lock()


def _to_m_rows(basis: str, n: int) -> list[list[Fraction]]:
    index = partitions_of(n)
    if basis == "m":
        return _linalg.identity(len(index))
    if basis == "s":
        # coefficient of x^ν in s_λ is the number of tableaux of content ν
        return [[Fraction(kostka(lam, nu)) for nu in index] for lam in index]
    rows = []
    for lam in index:
        poly = _basis_poly(basis, lam, n)
        rows.append([poly.coefficient(nu) for nu in index])
    return rows


def _cache_file(from_basis: str, to_basis: str, n: int) -> Path | None:
    if _CACHE_DIR is None:
        return None
    return _CACHE_DIR / f"transition_{from_basis}_{to_basis}_{n}.json"


def transition(from_basis: str, to_basis: str, n: int) -> TransitionMatrix:
    """Exact change-of-basis matrix at degree n, cached per (from, to, n)."""
    _check_basis(from_basis)
    _check_basis(to_basis)
    if not isinstance(n, int) or n < 0:
        raise InvalidInput(f"degree must be a non-negative integer, got {n!r}")
    if n > _DEGREE_CAP:
        raise DegreeCapExceeded(f"degree {n} exceeds the cap {_DEGREE_CAP}")
    key = (from_basis, to_basis, n)
    hit = _cache.get(key)
    if hit is not None:
        return hit
    path = _cache_file(*key)
    if path is not None and path.exists():
        mat = TransitionMatrix.from_records(n, from_basis, to_basis, json.loads(path.read_text()))
    elif from_basis == to_basis:
        mat = TransitionMatrix(n, from_basis, to_basis, _linalg.identity(len(partitions_of(n))))
    else:
        a = _to_m_rows(from_basis, n)
        b = _to_m_rows(to_basis, n)
        rows = a if to_basis == "m" else _linalg.matmul(a, _linalg.inverse(b))
        mat = TransitionMatrix(n, from_basis, to_basis, rows)
        if path is not None:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(f".tmp{os.getpid()}.{threading.get_ident()}")
            tmp.write_text(json.dumps(mat.to_records()))
            os.replace(tmp, path)
    with _cache_lock:
        return _cache.setdefault(key, mat)


def clear_cache() -> None:
    with _cache_lock:
        _cache.clear()


# -- the algebra -------------------------------------------------------------

class SymFunc:
    """A homogeneous symmetric function: exact coefficients over one basis.

    >>> s(2, 1) * s(1) == s(3, 1) + s(2, 2) + s(2, 1, 1)
    True
    """

    __slots__ = ("degree", "basis", "coeffs")

    def __init__(self, basis: str, coeffs: Mapping[Sequence[int], object], degree: int | None = None):
        self.basis = _check_basis(basis)
        clean: dict[Partition, Fraction] = {}
        for lam, c in coeffs.items():
            lam = lam if isinstance(lam, Partition) else Partition(lam)
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, 0) + c
        clean = {k: v for k, v in clean.items() if v}
        weights = {lam.weight for lam in clean}
        if degree is None:
            if len(weights) != 1:
                if not weights:
                    raise InvalidInput("the zero SymFunc needs an explicit degree")
                raise InvalidInput(f"inhomogeneous coefficients, weights {sorted(weights)}")
            degree = weights.pop()
        elif weights - {degree}:
            raise InvalidInput(f"index weights {sorted(weights)} differ from degree {degree}")
        self.degree = degree
        self.coeffs = clean

    @classmethod
    def basis_element(cls, basis: str, lam: Sequence[int]) -> "SymFunc":
        lam = lam if isinstance(lam, Partition) else normalize(lam)
        return cls(basis, {lam: 1}, lam.weight)

    @classmethod
    def zero(cls, basis: str, degree: int) -> "SymFunc":
        return cls(basis, {}, degree)

    def is_zero(self) -> bool:
        return not self.coeffs

    def to(self, basis: str) -> "SymFunc":
        return to_basis(self, basis)

    def coefficient(self, lam: Sequence[int]) -> Fraction:
        return self.coeffs.get(Partition(lam), Fraction(0))

    def items(self):
        """(partition, coefficient) pairs in reverse lexicographic order."""
        return sorted(self.coeffs.items(), reverse=True)

    def _coerce(self, other) -> "SymFunc":
        if not isinstance(other, SymFunc):
            raise TypeError(f"expected SymFunc, got {type(other).__name__}")
        if other.degree != self.degree:
            raise InvalidInput(f"degrees differ: {self.degree} vs {other.degree}")
        return other if other.basis == self.basis else to_basis(other, self.basis)

    def __add__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        other = self._coerce(other)
        out = dict(self.coeffs)
        for k, c in other.coeffs.items():
            out[k] = out.get(k, 0) + c
        return SymFunc(self.basis, out, self.degree)

    def __neg__(self):
        return SymFunc(self.basis, {k: -c for k, c in self.coeffs.items()}, self.degree)

    def __sub__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, SymFunc):
            return multiply(self, other)
        if isinstance(other, (int, Fraction)):
            return SymFunc(self.basis, {k: c * other for k, c in self.coeffs.items()}, self.degree)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, (int, Fraction)):
            return self * other
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, SymFunc):
            return NotImplemented
        if self.degree != other.degree:
            return self.is_zero() and other.is_zero()
        return self.coeffs == self._coerce(other).coeffs

    __hash__ = None

    def __repr__(self):
        return f"SymFunc({self})"

    def __str__(self):
        if not self.coeffs:
            return "0"
        pieces = []
        for lam, c in self.items():
            name = f"{self.basis}[{format_partition(lam)}]" if lam else "1"
            if c == 1:
                pieces.append(name)
            elif c == -1:
                pieces.append("-" + name)
            else:
                pieces.append(f"{c}*{name}" if lam else str(c))
        return " + ".join(pieces).replace("+ -", "- ")


def _element(basis):
    def make(*parts) -> SymFunc:
        if len(parts) == 1 and not isinstance(parts[0], int):
            parts = tuple(parts[0])
        return SymFunc.basis_element(basis, parts)
    make.__name__ = basis
    make.__doc__ = f"The basis element {basis}_λ, e.g. ``{basis}(2, 1)``."
    return make


m, e, h, p, s = (_element(b) for b in BASES)


def to_basis(f: SymFunc, basis: str) -> SymFunc:
    _check_basis(basis)
    if f.basis == basis:
        return f
    if f.is_zero():
        return SymFunc.zero(basis, f.degree)
    M = transition(f.basis, basis, f.degree)
    out = [Fraction(0)] * len(M.index)
    for lam, c in f.coeffs.items():
        row = M.rows[M._pos[lam]]
        for j, x in enumerate(row):
            if x:
                out[j] += c * x
    return SymFunc(basis, dict(zip(M.index, out)), f.degree)


def multiply(f: SymFunc, g: SymFunc) -> SymFunc:
    """Product, computed in the power-sum basis and returned in ``f``'s basis."""
    fp, gp = to_basis(f, "p"), to_basis(g, "p")
    out: dict[Partition, Fraction] = {}
    for a, ca in fp.coeffs.items():
        for b, cb in gp.coeffs.items():
            lam = Partition(sorted(a + b, reverse=True))
            out[lam] = out.get(lam, 0) + ca * cb
    return to_basis(SymFunc("p", out, f.degree + g.degree), f.basis)


def hall_inner(f: SymFunc, g: SymFunc) -> Fraction:
    """⟨f, g⟩ with ⟨p_λ, p_μ⟩ = δ z_λ; zero across degrees."""
    if f.degree != g.degree:
        return Fraction(0)
    fp, gp = to_basis(f, "p"), to_basis(g, "p")
    return sum((c * gp.coeffs[lam] * z_value(lam) for lam, c in fp.coeffs.items() if lam in gp.coeffs),
               Fraction(0))


def gram_schmidt_schur(n: int) -> TransitionMatrix:
    """Schur functions by orthogonalizing the monomial basis.

    The m_λ are processed in increasing lexicographic order, a linear
    extension of dominance, so each result is m_λ plus dominated terms and is
    orthogonal to everything before it.  Only the Hall form on m (through the
    power sums) is used; no tableaux.
    """
    index = list(reversed(partitions_of(n)))
    m_to_p = transition("m", "p", n)
    zs = [z_value(rho) for rho in m_to_p.index]

    def inner(u: list[Fraction], v: list[Fraction]) -> Fraction:
        # u, v are m-coordinates in `index` order
        up = _in_p(u)
        vp = _in_p(v)
        return sum((a * b * z for a, b, z in zip(up, vp, zs) if a and b), Fraction(0))

    def _in_p(u):
        out = [Fraction(0)] * len(zs)
        for lam, c in zip(index, u):
            if c:
                row = m_to_p.rows[m_to_p._pos[lam]]
                for j, x in enumerate(row):
                    if x:
                        out[j] += c * x
        return out

    basis: list[list[Fraction]] = []
    norms: list[Fraction] = []
    for k in range(len(index)):
        vec = [Fraction(int(i == k)) for i in range(len(index))]
        for u, nu in zip(basis, norms):
            coef = inner(vec, u) / nu
            if coef:
                vec = [a - coef * b for a, b in zip(vec, u)]
        basis.append(vec)
        norms.append(inner(vec, vec))
    by_lam = {lam: dict(zip(index, vec)) for lam, vec in zip(index, basis)}
    order = partitions_of(n)
    rows = [[by_lam[lam][mu] for mu in order] for lam in order]
    return TransitionMatrix(n, "s", "m", rows)


def realize(f: SymFunc, K: int, *, strict: bool = True) -> SymPolynomial:
    """Evaluate a SymFunc as a polynomial in K variables."""
    out = SymPolynomial(K)
    for lam, c in f.coeffs.items():
        out = out + gen_basis_poly(f.basis, lam, K, strict=strict) * c
    return out


def identify(poly: SymPolynomial, degree: int | None = None) -> SymFunc:
    """Read a homogeneous symmetric polynomial back as an m-basis SymFunc.

    Only faithful when ``poly.nvars`` is at least the degree.
    """
    if not poly.is_symmetric():
        raise InvalidInput("polynomial is not symmetric")
    degrees = {sum(k) for k in poly.terms}
    if len(degrees) > 1:
        raise InvalidInput("polynomial is not homogeneous")
    if degree is None:
        if not degrees:
            raise InvalidInput("zero polynomial needs an explicit degree")
        degree = degrees.pop()
    coeffs = {}
    for exps, c in poly.terms.items():
        if list(exps) == sorted(exps, reverse=True):
            coeffs[normalize(exps)] = c
    return SymFunc("m", coeffs, degree)
