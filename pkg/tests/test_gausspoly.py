"""Exact polynomial and matrix arithmetic."""

import pytest
from hypothesis import given, strategies as st

from plumbtrace.gausspoly import GaussInt, GaussPoly, Mat2, canonical_sign


def P(arity, terms):
    return GaussPoly.from_terms(arity, terms)


T1 = GaussPoly.var(1, 0)
ONE = GaussPoly.const(1, 1)
I = GaussPoly.const(1, 0, 1)


class TestAdd:
    def test_additive_inverse(self):
        assert (T1 + (-T1)).is_zero()

    def test_like_terms_merge(self):
        t1t2 = P(2, {(1, 1): 2})
        assert t1t2 + P(2, {(1, 1): 3}) == P(2, {(1, 1): 5})

    def test_gaussian_components_combine(self):
        # (i*t1 + 1) + (t1 - 1) = (1+i)*t1
        left = P(1, {(1,): (0, 1), (0,): 1})
        right = P(1, {(1,): 1, (0,): -1})
        assert left + right == P(1, {(1,): (1, 1)})

    def test_arity_mismatch(self):
        with pytest.raises(ValueError, match="arity"):
            T1 + GaussPoly.var(2, 0)


class TestMul:
    def test_difference_of_squares(self):
        assert (T1 + ONE) * (T1 - ONE) == P(1, {(2,): 1, (0,): -1})

    def test_imaginary_unit_squares_to_minus_one(self):
        assert I * I == GaussPoly.const(1, -1)

    def test_scaled_square(self):
        four = GaussPoly.const(1, 4)
        assert four * (T1 - ONE) ** 2 == P(1, {(2,): 4, (1,): -8, (0,): 4})

    def test_arity_mismatch(self):
        with pytest.raises(ValueError, match="arity"):
            T1 * GaussPoly.var(3, 1)


class TestCoefficient:
    poly = P(1, {(2,): -4, (1,): 8, (0,): -6})

    def test_reads_stored(self):
        assert self.poly.coefficient((2,)) == GaussInt(-4)

    def test_absent_monomial_is_zero(self):
        assert self.poly.coefficient((3,)) == GaussInt(0)

    def test_single_term(self):
        assert P(2, {(1, 1): (1, 1)}).coefficient((1, 1)) == GaussInt(1, 1)


class TestCanonicalSign:
    def test_flips_negative_leading(self):
        poly = P(1, {(2,): -4, (1,): 8, (0,): -6})
        assert canonical_sign(poly) == P(1, {(2,): 4, (1,): -8, (0,): 6})

    def test_positive_constant_fixed(self):
        two = GaussPoly.const(1, 2)
        assert canonical_sign(two) == two

    def test_negative_imaginary_flips(self):
        assert canonical_sign(P(1, {(1,): (0, -1)})) == P(1, {(1,): (0, 1)})

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            canonical_sign(GaussPoly.zero(1))


def test_grlex_rendering_order():
    poly = P(2, {(0, 0): -6, (2, 0): -4, (1, 0): 8, (0, 1): (0, 1), (1, 1): (1, 1)})
    # degree 2 block first (t1*t2 beats t1^2 since t2 is more significant)
    assert str(poly) == "(1+i)*t1*t2 - 4*t1^2 + i*t2 + 8*t1 - 6"


@pytest.mark.parametrize(
    "terms,expected",
    [
        ({}, "0"),
        ({(0,): 2}, "2"),
        ({(1,): (0, 1), (0,): (0, -1)}, "i*t1 - i"),
        ({(2,): 4, (1,): -8, (0,): 6}, "4*t1^2 - 8*t1 + 6"),
        ({(3,): -1}, "-t1^3"),
        ({(1,): (3, -2)}, "(3-2i)*t1"),
        ({(0,): (-3, 1)}, "(-3+i)"),
    ],
)
def test_rendering_grammar(terms, expected):
    arity = len(next(iter(terms), (0,)))
    assert str(GaussPoly.from_terms(arity, terms)) == expected


def test_shift_var_binomial():
    # (t1 + 1)^2 via shifting t1^2 by +1
    assert P(1, {(2,): 1}).shift_var(0, 1) == P(1, {(2,): 1, (1,): 2, (0,): 1})
    p = P(2, {(2, 1): (1, 1), (0, 1): 3})
    assert p.shift_var(0, -2).shift_var(0, 2) == p


# -- hypothesis: ring axioms on random small polynomials ---------------------

coeffs = st.tuples(st.integers(-4, 4), st.integers(-4, 4))
monos = st.tuples(st.integers(0, 3), st.integers(0, 3))
polys = st.dictionaries(monos, coeffs, max_size=5).map(
    lambda d: GaussPoly.from_terms(2, d)
)


@given(polys, polys, polys)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert (a + b) + c == a + (b + c)
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(polys, polys)
def test_product_total_degree(a, b):
    if not a.is_zero() and not b.is_zero():
        assert (a * b).total_degree() == a.total_degree() + b.total_degree()


@given(polys)
def test_canonical_sign_idempotent(p):
    if p.is_zero():
        return
    c = canonical_sign(p)
    assert c in (p, -p)
    assert canonical_sign(c) == c


def _random_unimodular(rng, arity=2, steps=3):
    """Random det-1 matrix: product of elementary shears with poly entries."""
    m = Mat2.identity(arity)
    for _ in range(steps):
        entry = GaussPoly.from_terms(
            arity,
            {
                (rng.randint(0, 2), rng.randint(0, 2)): (
                    rng.randint(-2, 2),
                    rng.randint(-2, 2),
                )
            },
        )
        one = GaussPoly.const(arity, 1)
        zero = GaussPoly.zero(arity)
        if rng.random() < 0.5:
            m = m @ Mat2(one, entry, zero, one)
        else:
            m = m @ Mat2(one, zero, entry, one)
    return m


def test_det_multiplicative_and_trace_identity():
    import random

    rng = random.Random(42)
    one = GaussPoly.const(2, 1)
    for _ in range(60):
        a = _random_unimodular(rng)
        b = _random_unimodular(rng)
        assert (a @ b).det() == a.det() * b.det() == one
        # Tr(AB) = Tr(A)Tr(B) - Tr(AB^-1); B^-1 is the adjugate since det B = 1
        lhs = (a @ b).trace()
        rhs = a.trace() * b.trace() - (a @ b.adjugate()).trace()
        assert lhs == rhs


def test_matmul_identity_and_arity_guard():
    m = _random_unimodular(__import__("random").Random(7))
    assert m @ Mat2.identity(2) == m
    assert Mat2.identity(2).trace() == GaussPoly.const(2, 2)
    with pytest.raises(ValueError):
        m @ Mat2.identity(3)


def test_gaussint_str():
    assert str(GaussInt(1, 1)) == "1+i"
    assert str(GaussInt(0, -4)) == "-4i"
    assert str(GaussInt(-4, 0)) == "-4"
