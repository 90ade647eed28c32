"""Exact arithmetic in cyclotomic fields Q(ζ_N).

An element is stored by its conductor N and the coordinates of its residue
modulo Φ_N in the power basis 1, ζ, …, ζ^{φ(N)-1}.  Elements with different
conductors are combined by lifting both to the lcm conductor.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Sequence

__all__ = ["Cyclotomic", "cyclotomic_poly", "zeta", "as_cyclotomic"]


def _poly_divmod(num: list[int], den: list[int]) -> tuple[list[int], list[int]]:
    # integer polynomials, lowest degree first; den is monic
    num = list(num)
    q = [0] * max(len(num) - len(den) + 1, 1)
    for k in range(len(num) - len(den), -1, -1):
        c = num[k + len(den) - 1]
        if c:
            q[k] = c
            for i, d in enumerate(den):
                num[k + i] -= c * d
    rem = num[: len(den) - 1]
    return q, rem


@lru_cache(maxsize=None)
def cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients of Φ_n, lowest degree first: (x^n - 1) / Π_{d|n, d<n} Φ_d."""
    if n < 1:
        raise ValueError("cyclotomic polynomial index must be positive")
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            poly, rem = _poly_divmod(poly, list(cyclotomic_poly(d)))
            assert not any(rem)
    while len(poly) > 1 and poly[-1] == 0:
        poly.pop()
    return tuple(poly)


def _phi(n: int) -> int:
    return len(cyclotomic_poly(n)) - 1


def _reduce(coeffs: Sequence[Fraction], n: int) -> tuple[Fraction, ...]:
    """Reduce a polynomial in ζ_n modulo Φ_n."""
    phi = cyclotomic_poly(n)
    deg = len(phi) - 1
    work = [Fraction(c) for c in coeffs]
    for k in range(len(work) - 1, deg - 1, -1):
        c = work[k]
        if c:
            shift = k - deg
            for i, d in enumerate(phi):
                if d:
                    work[shift + i] -= c * d
    work = work[:deg] + [Fraction(0)] * (deg - len(work))
    return tuple(work)


class Cyclotomic:
    """An element of Q(ζ_N) in canonical form."""

    __slots__ = ("conductor", "coeffs")

    def __init__(self, conductor: int, coeffs: Sequence = ()):
        if conductor < 1:
            raise ValueError("conductor must be positive")
        self.conductor = conductor
        self.coeffs = _reduce([Fraction(c) for c in coeffs] or [Fraction(0)], conductor)

    @classmethod
    def _raw(cls, conductor: int, coeffs: tuple[Fraction, ...]) -> "Cyclotomic":
        obj = object.__new__(cls)
        obj.conductor = conductor
        obj.coeffs = coeffs
        return obj

    @classmethod
    def rational(cls, value) -> "Cyclotomic":
        return cls._raw(1, (Fraction(value),))

    @classmethod
    def root_of_unity(cls, n: int, k: int = 1) -> "Cyclotomic":
        """ζ_n^k."""
        k %= n
        poly = [0] * (k + 1)
        poly[k] = 1
        return cls(n, poly)

    # -- inspection --

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def rational_value(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self.coeffs[0]

    def __complex__(self):
        import cmath

        z = cmath.exp(2j * cmath.pi / self.conductor)
        return complex(sum(float(c) * z**k for k, c in enumerate(self.coeffs)))

    # -- conductor handling --

    def lift(self, conductor: int) -> "Cyclotomic":
        """The same number written at a multiple of the current conductor."""
        if conductor == self.conductor:
            return self
        if conductor % self.conductor:
            raise ValueError(f"{conductor} is not a multiple of {self.conductor}")
        if self.is_rational():
            c0 = self.coeffs[0]
            return Cyclotomic._raw(conductor, (c0,) + (Fraction(0),) * (_phi(conductor) - 1))
        step = conductor // self.conductor
        poly = [Fraction(0)] * ((len(self.coeffs) - 1) * step + 1)
        for k, c in enumerate(self.coeffs):
            poly[k * step] = c
        return Cyclotomic(conductor, poly)

    def _common(self, other: "Cyclotomic") -> tuple["Cyclotomic", "Cyclotomic"]:
        if self.conductor == other.conductor:
            return self, other
        n = self.conductor * other.conductor // gcd(self.conductor, other.conductor)
        return self.lift(n), other.lift(n)

    # -- arithmetic --

    def __add__(self, other):
        other = as_cyclotomic(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return Cyclotomic._raw(a.conductor, tuple(x + y for x, y in zip(a.coeffs, b.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic._raw(self.conductor, tuple(-x for x in self.coeffs))

    def __sub__(self, other):
        other = as_cyclotomic(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.conductor, tuple(x * other for x in self.coeffs))
        other = as_cyclotomic(other)
        if other is NotImplemented:
            return NotImplemented
        if other.is_rational():
            return self * other.coeffs[0]
        if self.is_rational():
            return other * self.coeffs[0]
        a, b = self._common(other)
        prod_ = [Fraction(0)] * (len(a.coeffs) + len(b.coeffs) - 1)
        for i, x in enumerate(a.coeffs):
            if x:
                for j, y in enumerate(b.coeffs):
                    if y:
                        prod_[i + j] += x * y
        return Cyclotomic._raw(a.conductor, _reduce(prod_, a.conductor))

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, Cyclotomic):
            if not other.is_rational():
                return self * other.inverse()
            other = other.coeffs[0]
        if isinstance(other, (int, Fraction)):
            return Cyclotomic._raw(self.conductor, tuple(x / other for x in self.coeffs))
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            return self.inverse() ** (-k)
        out = Cyclotomic.rational(1)
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def galois(self, a: int) -> "Cyclotomic":
        """Apply ζ ↦ ζ^a (a coprime to the conductor)."""
        n = self.conductor
        if gcd(a, n) != 1:
            raise ValueError(f"{a} is not a unit mod {n}")
        poly = [Fraction(0)] * n
        for k, c in enumerate(self.coeffs):
            poly[(k * a) % n] += c
        return Cyclotomic(n, poly)

    def conjugate(self) -> "Cyclotomic":
        if self.is_rational():
            return self
        return self.galois(self.conductor - 1)

    def norm(self) -> Fraction:
        """Field norm down to Q: the product of all Galois conjugates."""
        n = self.conductor
        out = Cyclotomic.rational(1)
        for a in range(1, n + 1):
            if gcd(a, n) == 1:
                out = out * self.galois(a)
        return out.rational_value()

    def inverse(self) -> "Cyclotomic":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return Cyclotomic.rational(1 / self.coeffs[0])
        n = self.conductor
        others = Cyclotomic.rational(1)
        for a in range(2, n + 1):
            if gcd(a, n) == 1:
                others = others * self.galois(a)
        return others / (self * others).rational_value()

    # -- comparison --

    def __eq__(self, other):
        other = as_cyclotomic(other)
        if other is NotImplemented:
            return NotImplemented
        a, b = self._common(other)
        return a.coeffs == b.coeffs

    def __hash__(self):
        if self.is_rational():
            return hash(self.coeffs[0])
        # equal values may sit at different conductors; no cheap invariant
        return hash("cyclotomic")

    def __bool__(self):
        return not self.is_zero()

    # -- serialization --

    def to_json(self):
        """An int when the value is an integer, else the conductor/coeffs object."""
        if self.is_rational() and self.coeffs[0].denominator == 1:
            return int(self.coeffs[0])
        return {
            "conductor": self.conductor,
            "coeffs": [[c.numerator, c.denominator] for c in self.coeffs],
        }

    @classmethod
    def from_json(cls, doc) -> "Cyclotomic":
        if isinstance(doc, bool):
            raise ValueError("booleans are not cyclotomic values")
        if isinstance(doc, int):
            return cls.rational(doc)
        if isinstance(doc, dict):
            n = int(doc["conductor"])
            coeffs = []
            for c in doc["coeffs"]:
                if isinstance(c, (list, tuple)):
                    num, den = c
                    coeffs.append(Fraction(int(num), int(den)))
                else:
                    coeffs.append(Fraction(c))
            if len(coeffs) > _phi(n):
                raise ValueError(f"{len(coeffs)} coefficients for conductor {n} (phi = {_phi(n)})")
            return cls(n, coeffs)
        raise ValueError(f"cannot read a cyclotomic value from {doc!r}")

    def __repr__(self):
        return f"Cyclotomic({self.conductor}, {[str(c) for c in self.coeffs]})"

    def __str__(self):
        if self.is_rational():
            return str(self.coeffs[0])
        z = f"z{self.conductor}"
        pieces = []
        for k, c in enumerate(self.coeffs):
            if not c:
                continue
            mono = "" if k == 0 else (z if k == 1 else f"{z}^{k}")
            if not mono:
                pieces.append(str(c))
            elif c == 1:
                pieces.append(mono)
            elif c == -1:
                pieces.append("-" + mono)
            else:
                pieces.append(f"{c}*{mono}")
        return " + ".join(pieces).replace("+ -", "- ")


def as_cyclotomic(x):
    if isinstance(x, Cyclotomic):
        return x
    if isinstance(x, (int, Fraction)) and not isinstance(x, bool):
        return Cyclotomic.rational(x)
    return NotImplemented


def zeta(n: int, k: int = 1) -> Cyclotomic:
    return Cyclotomic.root_of_unity(n, k)
