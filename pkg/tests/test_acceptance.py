"""Acceptance suite: nine end-to-end criteria, each with a wall-clock budget.

Run under pytest (a summary line per criterion is printed at the end of the
session) or directly with ``python tests/test_acceptance.py``.
"""

import os
import subprocess
import sys
import time
from math import factorial

import pytest

from wreathsf import symfunc
from wreathsf.cyclotomic import Cyclotomic, zeta
from wreathsf.groups import BUILTIN_NAMES, GroupData, builtin, validate
from wreathsf.lr import lr_coeff, lr_coeff_oracle, pieri
from wreathsf.partitions import SkewShape, colored_partitions_of, conjugate, hook_product, partitions_of, skew_components
from wreathsf.symfunc import gen_basis_poly, gram_schmidt_schur, hall_inner, identify, s
from wreathsf.tableaux import Tableau, word
from wreathsf.wreath import (
    ClassFunction,
    big_Z,
    character_table,
    dimension,
    frobenius_ch,
    identity_class,
    power_sum_class,
    sesqui_inner,
    wreath_schur,
)

RESULTS = []


def criterion(number, title, budget):
    """Time the wrapped check, record a PASS/FAIL line, fail if over budget."""

    def wrap(fn):
        def test():
            start = time.perf_counter()
            err = None
            try:
                fn()
            except Exception as exc:  # recorded, then re-raised for pytest
                err = exc
            elapsed = time.perf_counter() - start
            over = budget is not None and elapsed > budget
            status = "PASS" if err is None and not over else "FAIL"
            limit = f"< {budget:g} s" if budget is not None else "no limit"
            note = ""
            if err is not None:
                note = f"  ({type(err).__name__}: {err})"
            elif over:
                note = "  (over budget)"
            RESULTS.append(f"[{status}] criterion {number}: {title}  {elapsed:.2f} s ({limit}){note}")
            if err is not None:
                raise err
            assert not over, f"criterion {number} took {elapsed:.2f} s, budget {budget} s"

        test.__name__ = fn.__name__
        test.__doc__ = fn.__doc__
        return test

    return wrap


@criterion(1, "worked examples (conjugate, skew components, reading word)", 1)
def test_c1_worked_examples():
    assert conjugate((4, 3, 2, 2, 1)) == (5, 4, 2, 1)
    assert len(skew_components(SkewShape((6, 4, 2, 2), (4, 2)))) == 3
    rows = [[5, 5], [1, 1, 6, 7], [2, 3, 3, 3, 7, 8], [4, 4, 6, 7, 8, 9]]
    T = Tableau.from_rows((6, 6, 6, 6), rows, inner=(4, 2))
    assert T.is_semistandard()
    assert "".join(map(str, word(T))) == "557611873332987644"


@criterion(2, "tableau s->m equals Gram-Schmidt s->m; <s,s> = delta, n <= 5", 30)
def test_c2_schur_consistency():
    symfunc.clear_cache()
    for n in range(0, 6):
        ps = partitions_of(n)
        gs = gram_schmidt_schur(n)
        for lam in ps:
            from_tableaux = identify(gen_basis_poly("s", lam, n), n) if n else None
            for mu in ps:
                want = from_tableaux.coefficient(mu) if n else 1
                assert gs[lam, mu] == want
                assert hall_inner(s(lam), s(mu)) == int(lam == mu)


@criterion(3, "lr_coeff equals polynomial oracle, full sweep |mu|+|nu| <= 6", 60)
def test_c3_lr_oracle():
    symfunc.clear_cache()
    checked = 0
    for total in range(0, 7):
        for a in range(total + 1):
            for mu in partitions_of(a):
                for nu in partitions_of(total - a):
                    for lam in partitions_of(total):
                        assert lr_coeff(lam, mu, nu) == lr_coeff_oracle(lam, mu, nu), (lam, mu, nu)
                        checked += 1
    assert checked > 0


@criterion(4, "Pieri rule agrees with LR, row and column, |lambda| <= 5, m <= 3", 10)
def test_c4_pieri():
    for n in range(0, 6):
        for lam in partitions_of(n):
            for m in range(0, 4):
                for mode, nu in (("row", (m,) if m else ()), ("column", (1,) * m)):
                    got = pieri(lam, m, mode)
                    assert len(got) == len(set(got))
                    want = sorted(mu for mu in partitions_of(n + m) if lr_coeff(mu, lam, nu))
                    assert sorted(got) == want
                    assert all(lr_coeff(mu, lam, nu) == 1 for mu in got)


@criterion(5, "built-in groups validate; every single-entry perturbation of z2/z3 fails", 1)
def test_c5_group_validation():
    for name in BUILTIN_NAMES:
        assert validate(builtin(name)).ok, name
    deltas = (Cyclotomic.rational(1), Cyclotomic.rational(-1), zeta(3), zeta(4))
    for name in ("z2", "z3"):
        G = builtin(name)
        for i in range(G.r):
            for j in range(G.r):
                for d in deltas:
                    table = [list(row) for row in G.table]
                    table[i][j] = table[i][j] + d
                    bad = GroupData(G.name, G.order, G.exponent, G.classes, tuple(map(tuple, table)))
                    assert not validate(bad).ok, (name, i, j, d)


@criterion(6, "<P_lambda, P_rho> = delta Z_lambda, trivial/Z2/Z3, weight <= 4", 60)
def test_c6_class_power_sums():
    for name in ("trivial", "z2", "z3"):
        G = builtin(name)
        for n in range(0, 5):
            idx = colored_partitions_of(n, G.r)
            P = [power_sum_class(G, rho) for rho in idx]
            for a, fa in zip(idx, P):
                for b, fb in zip(idx, P):
                    assert sesqui_inner(fa, fb) == (big_Z(G, a) if a == b else 0), (name, a, b)


@criterion(7, "character tables: S_n for n <= 5, hyperoctahedral for n <= 3", 120)
def test_c7_character_tables():
    triv = builtin("trivial")
    for n in range(0, 6):
        T = character_table(triv, n)
        j = T.cols.index(identity_class(triv, n))
        for lam, row in zip(T.rows, T.entries):
            assert row[j] == factorial(n) // hook_product(lam[0])
            assert row[j] == dimension(triv, lam)
    z2 = builtin("z2")
    for n in range(0, 4):
        T = character_table(z2, n)
        Z = [big_Z(z2, rho) for rho in T.cols]
        for row in T.entries:
            for v in row:
                assert v.is_rational() and v.rational_value().denominator == 1
        degrees = T.degrees()
        assert degrees == [dimension(z2, lam) for lam in T.rows]
        assert sum(d * d for d in degrees) == 2**n * factorial(n)
        zero = Cyclotomic.rational(0)
        for a, ra in enumerate(T.entries):
            for b, rb in enumerate(T.entries):
                total = sum((x * y.conjugate() / z for x, y, z in zip(ra, rb, Z)), zero)
                assert total == int(a == b)
        for c in range(len(T.cols)):
            for d in range(len(T.cols)):
                total = sum((row[c] * row[d].conjugate() for row in T.entries), zero)
                assert total == (Z[c] if c == d else 0)


@criterion(8, "ch(chi^lambda) = S_lambda in p_char, Z2, |lambda| <= 3", 30)
def test_c8_frobenius_round_trip():
    G = builtin("z2")
    for n in range(0, 4):
        for lam in colored_partitions_of(n, G.r):
            assert frobenius_ch(ClassFunction.irreducible(G, lam)) == wreath_schur(G, lam)


@criterion(9, "chartable --group z2 --n 3 --format json is byte-identical across runs", None)
def test_c9_determinism():
    cmd = [sys.executable, "-m", "wreathsf", "chartable", "--group", "z2", "--n", "3", "--format", "json"]
    outputs = []
    for seed in ("0", "1", "random"):
        env = dict(os.environ, PYTHONHASHSEED=seed)
        res = subprocess.run(cmd, capture_output=True, env=env, check=True)
        outputs.append(res.stdout)
    assert outputs[0] and all(o == outputs[0] for o in outputs)


if __name__ == "__main__":
    tests = [v for k, v in sorted(globals().items()) if k.startswith("test_c")]
    failed = 0
    for t in tests:
        try:
            t()
        except Exception:
            failed += 1
    print("\n".join(RESULTS))
    sys.exit(1 if failed else 0)
