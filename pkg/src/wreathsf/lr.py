"""Littlewood-Richardson coefficients, skew Schur expansions and Pieri rules."""

from __future__ import annotations

from functools import lru_cache
from itertools import product
from math import prod
from typing import Sequence

from .errors import ColorCountMismatch, DegreeCapExceeded, InvalidInput
from .partitions import (
    ColoredPartition,
    Partition,
    SkewShape,
    conjugate,
    contains,
    partitions_of,
)
from .symfunc import SymFunc, get_degree_cap, multiply, s as schur
from .tableaux import enumerate_ssyt, is_lattice, word

__all__ = [
    "lr_coeff",
    "lr_coeff_oracle",
    "lr_tableaux",
    "skew_schur_expand",
    "horizontal_strips",
    "vertical_strips",
    "pieri",
    "colored_lr",
]


def _p(x) -> Partition:
    return x if isinstance(x, Partition) else Partition(x)


def lr_tableaux(lam, mu, nu) -> list:
    """Tableaux of shape lam/mu and content nu whose reading word is a lattice word."""
    lam, mu, nu = _p(lam), _p(mu), _p(nu)
    if lam.weight != mu.weight + nu.weight or not contains(lam, mu):
        return []
    return [T for T in enumerate_ssyt(SkewShape(lam, mu), nu) if is_lattice(word(T))]


@lru_cache(maxsize=None)
def _lr(lam: Partition, mu: Partition, nu: Partition) -> int:
    return len(lr_tableaux(lam, mu, nu))


def lr_coeff(lam, mu, nu) -> int:
    """c^λ_{μν}: the coefficient of s_λ in s_μ s_ν, by counting lattice tableaux."""
    return _lr(_p(lam), _p(mu), _p(nu))


@lru_cache(maxsize=None)
def _schur_product(mu: Partition, nu: Partition) -> SymFunc:
    return multiply(schur(mu), schur(nu))


def lr_coeff_oracle(lam, mu, nu) -> int:
    """Same coefficient, read off the product s_μ·s_ν computed in the symfunc algebra."""
    lam, mu, nu = _p(lam), _p(mu), _p(nu)
    deg = mu.weight + nu.weight
    if deg > get_degree_cap():
        raise DegreeCapExceeded(f"|μ|+|ν| = {deg} exceeds the cap {get_degree_cap()}")
    if lam.weight != deg:
        return 0
    c = _schur_product(mu, nu).coefficient(lam)
    if c.denominator != 1:
        raise AssertionError(f"non-integral Schur coefficient {c}")
    return int(c)


def skew_schur_expand(shape: SkewShape) -> SymFunc:
    """s_{λ/μ} = Σ_ν c^λ_{μν} s_ν, in the s basis."""
    lam, mu = shape.outer, shape.inner
    n = shape.size
    coeffs = {nu: lr_coeff(lam, mu, nu) for nu in partitions_of(n)}
    return SymFunc("s", coeffs, n)


def horizontal_strips(lam, k: int) -> list[Partition]:
    """All μ ⊇ λ with μ/λ a horizontal strip of k cells, reverse lexicographic."""
    lam = _p(lam)
    if k < 0:
        raise InvalidInput("strip size must be non-negative")
    out = []
    # μ interlaces λ: μ_1 ≥ λ_1 ≥ μ_2 ≥ λ_2 ≥ ... ; μ has at most len(λ)+1 parts
    rows = len(lam) + 1

    def rec(i: int, left: int, acc: list[int]):
        if i == rows:
            if left == 0:
                out.append(Partition(x for x in acc if x))
            return
        base = lam.part(i)
        cap = left if i == 0 else min(left, lam.part(i - 1) - base)
        for add in range(cap, -1, -1):
            rec(i + 1, left - add, acc + [base + add])

    rec(0, k, [])
    return out


def vertical_strips(lam, k: int) -> list[Partition]:
    """All μ ⊇ λ with μ/λ a vertical strip of k cells, reverse lexicographic."""
    out = [conjugate(mu) for mu in horizontal_strips(conjugate(_p(lam)), k)]
    return sorted(out, reverse=True)


def pieri(lam, m: Sequence[int] | int, mode: str = "row") -> list:
    """Shapes appearing (each with coefficient one) in S_λ·S_m (row) or S_λ·S_{1^m} (column).

    ``lam`` may be a colored partition with ``m`` one integer per color, or a
    plain partition with a single integer ``m``.
    """
    if mode not in ("row", "column"):
        raise InvalidInput(f"mode must be 'row' or 'column', got {mode!r}")
    strips = horizontal_strips if mode == "row" else vertical_strips
    if not isinstance(lam, ColoredPartition):
        if not isinstance(m, int):
            (m,) = m
        return strips(lam, m)
    if isinstance(m, int):
        m = (m,)
    if len(m) != lam.r:
        raise ColorCountMismatch(f"{len(m)} strip sizes for {lam.r} colors")
    per_color = [strips(part, k) for part, k in zip(lam, m)]
    return [ColoredPartition(combo) for combo in product(*per_color)]


def colored_lr(lam: ColoredPartition, mu: ColoredPartition, nu: ColoredPartition) -> int:
    """Product of the per-color LR coefficients."""
    if not (lam.r == mu.r == nu.r):
        raise ColorCountMismatch(f"r values {lam.r}, {mu.r}, {nu.r}")
    return prod(lr_coeff(a, b, c) for a, b, c in zip(lam, mu, nu))
