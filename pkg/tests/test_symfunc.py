import json
from fractions import Fraction
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from wreathsf import symfunc
from wreathsf.errors import DegreeCapExceeded, InsufficientVariables, InvalidInput
from wreathsf.partitions import SkewShape, contains, partitions_of, skew_components, strip_type
from wreathsf.symfunc import (
    BASES,
    SymFunc,
    SymPolynomial,
    TransitionMatrix,
    e,
    gen_basis_poly,
    gram_schmidt_schur,
    h,
    hall_inner,
    identify,
    m,
    multiply,
    p,
    realize,
    s,
    skew_schur_poly,
    to_basis,
    transition,
)
from wreathsf.tableaux import kostka


def x(*exps):
    return SymPolynomial.monomial(exps)


def jacobi_trudi_poly(lam, K):
    """det(h_{λ_i - i + j}) by Leibniz expansion; touches no tableaux."""
    k = len(lam)
    if k == 0:
        return SymPolynomial.one(K)

    def hpoly(n):
        if n < 0:
            return SymPolynomial(K)
        if n == 0:
            return SymPolynomial.one(K)
        return gen_basis_poly("h", (n,), K, strict=False)

    total = SymPolynomial(K)
    for perm in permutations(range(k)):
        sign = 1
        for i in range(k):
            for j in range(i + 1, k):
                if perm[i] > perm[j]:
                    sign = -sign
        term = SymPolynomial.one(K)
        for i in range(k):
            term = term * hpoly(lam[i] - i + perm[i])
        total = total + term * sign
    return total


class TestPolynomials:
    def test_examples(self):
        assert gen_basis_poly("m", (2, 1), 2, strict=False) == x(2, 1) + x(1, 2)
        assert gen_basis_poly("h", (2,), 2) == x(2, 0) + x(1, 1) + x(0, 2)
        assert gen_basis_poly("s", (1, 1), 2) == x(1, 1)

    def test_strict_variable_bound(self):
        with pytest.raises(InsufficientVariables):
            gen_basis_poly("m", (2, 1), 2)
        with pytest.raises(InsufficientVariables):
            skew_schur_poly(SkewShape((2, 1)), 2)

    def test_skew_examples(self):
        assert skew_schur_poly(SkewShape((2, 2), (2,)), 2) == gen_basis_poly("s", (2,), 2)
        assert skew_schur_poly(SkewShape((3, 1), (3, 1)), 0) == SymPolynomial.one(0)

    @pytest.mark.parametrize("n", range(1, 6))
    def test_schur_matches_jacobi_trudi(self, n):
        for lam in partitions_of(n):
            assert gen_basis_poly("s", lam, n) == jacobi_trudi_poly(lam, n)

    @pytest.mark.parametrize("basis", BASES)
    @pytest.mark.parametrize("n", range(1, 6))
    def test_symmetric_and_faithful(self, basis, n):
        polys = [gen_basis_poly(basis, lam, n) for lam in partitions_of(n)]
        for poly in polys:
            assert poly.is_symmetric()
        assert len({tuple(sorted(P.terms.items())) for P in polys}) == len(polys)

    def test_skew_factorization(self):
        for n in range(1, 7):
            for lam in partitions_of(n):
                for k in range(n):
                    for mu in partitions_of(k):
                        if not contains(lam, mu):
                            continue
                        shape = SkewShape(lam, mu)
                        comps = skew_components(shape)
                        if len(comps) < 2:
                            continue
                        K = shape.size
                        prod_poly = SymPolynomial.one(K)
                        for c in comps:
                            prod_poly = prod_poly * skew_schur_poly(c, K, strict=False)
                        assert skew_schur_poly(shape, K) == prod_poly

    def test_one_variable(self):
        for n in range(1, 7):
            for lam in partitions_of(n):
                poly = gen_basis_poly("s", lam, 1, strict=False)
                if len(lam) > 1:
                    assert poly.is_zero()
                else:
                    assert poly == x(n)
                for k in range(n):
                    for mu in partitions_of(k):
                        if not contains(lam, mu):
                            continue
                        shape = SkewShape(lam, mu)
                        if strip_type(shape) in ("horizontal", "both"):
                            assert skew_schur_poly(shape, 1, strict=False) == x(shape.size)

    def test_polynomial_printing(self):
        assert str(x(2, 1) + x(1, 2)) == "x1^2*x2 + x1*x2^2"
        assert str(SymPolynomial(2)) == "0"


class TestTransitions:
    def test_identity(self):
        for b in BASES:
            assert transition(b, b, 3).is_identity()

    def test_h_to_m_degree_two(self):
        M = transition("h", "m", 2)
        assert M[(2,), (2,)] == 1 and M[(2,), (1, 1)] == 1
        assert M[(1, 1), (2,)] == 1 and M[(1, 1), (1, 1)] == 2

    @pytest.mark.parametrize("n", range(0, 7))
    def test_s_to_m_rows_are_kostka(self, n):
        M = transition("s", "m", n)
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert M[lam, mu] == kostka(lam, mu)

    @pytest.mark.parametrize("basis", ["e", "h", "p", "s"])
    @pytest.mark.parametrize("n", range(1, 6))
    def test_against_polynomial_solve(self, basis, n):
        # read each row from the explicit polynomial in n variables
        M = transition(basis, "m", n)
        for lam in partitions_of(n):
            f = identify(gen_basis_poly(basis, lam, n), n)
            for mu in partitions_of(n):
                assert M[lam, mu] == f.coefficient(mu)

    @pytest.mark.parametrize("n", range(0, 9))
    def test_invertible_up_to_cap(self, n):
        for b in ("e", "h", "p", "s"):
            assert transition(b, "m", n).determinant() != 0

    def test_round_trips(self):
        for n in range(1, 6):
            for a in BASES:
                for b in BASES:
                    AB, BA = transition(a, b, n), transition(b, a, n)
                    assert AB.compose(BA).is_identity()

    def test_records_roundtrip(self, tmp_path):
        M = transition("h", "p", 4)
        recs = M.to_records()
        assert all(set(r) == {"row_partition", "col_partition", "numerator", "denominator"} for r in recs)
        text = json.dumps(recs)
        back = TransitionMatrix.from_records(4, "h", "p", json.loads(text))
        assert back == M

    def test_disk_cache(self, tmp_path):
        symfunc.set_cache_dir(tmp_path)
        symfunc.clear_cache()
        try:
            M = transition("e", "s", 4)
            assert list(tmp_path.iterdir())
            symfunc.clear_cache()
            assert transition("e", "s", 4) == M
        finally:
            symfunc.set_cache_dir(None)
            symfunc.clear_cache()

    def test_degree_cap(self):
        old = symfunc.get_degree_cap()
        try:
            symfunc.set_degree_cap(3)
            with pytest.raises(DegreeCapExceeded):
                transition("s", "p", 4)
        finally:
            symfunc.set_degree_cap(old)

    def test_bad_basis(self):
        with pytest.raises(InvalidInput):
            transition("q", "m", 2)


class TestAlgebra:
    def test_to_basis_examples(self):
        assert to_basis(h(2), "p") == SymFunc("p", {(2,): Fraction(1, 2), (1, 1): Fraction(1, 2)})
        assert to_basis(e(2), "p") == SymFunc("p", {(2,): Fraction(-1, 2), (1, 1): Fraction(1, 2)})
        for b in BASES:
            assert to_basis(p(1), b) == SymFunc(b, {(1,): 1})

    def test_multiply_examples(self):
        assert multiply(p(2), p(1)) == p(2, 1)
        assert multiply(s(1), s(1)) == s(2) + s(1, 1)
        one = SymFunc("s", {(): 1})
        assert multiply(s(2, 1), one) == s(2, 1)

    @settings(max_examples=40, deadline=None)
    @given(st.data())
    def test_multiply_matches_polynomial_product(self, data):
        a = data.draw(st.integers(1, 3))
        b = data.draw(st.integers(1, 3))
        ba = data.draw(st.sampled_from(BASES))
        bb = data.draw(st.sampled_from(BASES))
        lam = data.draw(st.sampled_from(partitions_of(a)))
        mu = data.draw(st.sampled_from(partitions_of(b)))
        f, g = SymFunc.basis_element(ba, lam), SymFunc.basis_element(bb, mu)
        K = a + b
        assert realize(multiply(f, g), K) == realize(f, K) * realize(g, K)

    def test_hall_examples(self):
        assert hall_inner(p(2), p(2)) == 2
        assert hall_inner(h(2, 1), m(2, 1)) == 1
        assert hall_inner(s(2), s(1, 1)) == 0
        assert hall_inner(s(2), s(1)) == 0

    @pytest.mark.parametrize("n", range(0, 6))
    def test_schur_orthonormal(self, n):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert hall_inner(s(lam), s(mu)) == (lam == mu)

    @pytest.mark.parametrize("n", range(0, 7))
    def test_h_m_duality(self, n):
        for lam in partitions_of(n):
            for mu in partitions_of(n):
                assert hall_inner(h(lam), m(mu)) == (lam == mu)

    def test_hall_is_symmetric(self):
        for lam in partitions_of(4):
            for mu in partitions_of(4):
                assert hall_inner(e(lam), s(mu)) == hall_inner(s(mu), e(lam))

    def test_printing(self):
        assert str(to_basis(h(2), "p")) == "1/2*p[2] + 1/2*p[1,1]"
        assert str(to_basis(e(2), "p")) == "-1/2*p[2] + 1/2*p[1,1]"

    def test_linear_ops(self):
        f = s(2) + s(1, 1)
        assert (f - s(2)) == s(1, 1)
        assert (2 * f).coefficient((2,)) == 2
        with pytest.raises(InvalidInput):
            s(2) + s(1)


class TestGramSchmidt:
    def test_small(self):
        assert gram_schmidt_schur(1).is_identity()
        G = gram_schmidt_schur(2)
        assert G[(2,), (2,)] == 1 and G[(2,), (1, 1)] == 1
        assert G[(1, 1), (2,)] == 0 and G[(1, 1), (1, 1)] == 1

    @pytest.mark.parametrize("n", range(0, 7))
    def test_equals_tableau_matrix(self, n):
        assert gram_schmidt_schur(n) == transition("s", "m", n)
