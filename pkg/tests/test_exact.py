from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliffordinv.exact import (
    Cyclotomic,
    ExactMatrix,
    Polynomial,
    SqrtTwo,
    TruncatedSeries,
    dumps,
    embed_sqrt2,
    hermite_normal_form,
    in_row_lattice,
    nullspace,
    rank,
    series_inverse,
    sqrt2,
    sqrt2_in,
    to_complex,
    zeta,
)

small = st.integers(-20, 20)
rationals = st.fractions(min_value=-10, max_value=10, max_denominator=12)
sqrt_two = st.builds(SqrtTwo, rationals, rationals)
cyclo8 = st.lists(small, min_size=4, max_size=4).map(lambda c: Cyclotomic(8, c))


@given(sqrt_two, sqrt_two, sqrt_two)
def test_sqrt_two_is_a_commutative_ring(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert (a + b) - b == a


@given(sqrt_two)
def test_sqrt_two_inverse(a):
    if a:
        assert a * a.inverse() == 1
        assert a.norm() == a.a**2 - 2 * a.b**2


@given(cyclo8, cyclo8)
def test_cyclotomic_field_axioms(a, b):
    assert a * b == b * a
    if b:
        assert (a / b) * b == a
    assert (a * b).conj() == a.conj() * b.conj()


@given(cyclo8, cyclo8)
def test_complex_embedding_is_a_homomorphism(a, b):
    assert abs(to_complex(a * b) - to_complex(a) * to_complex(b)) < 1e-6 * (1 + abs(to_complex(a * b)))
    assert abs(to_complex(a.conj()) - to_complex(a).conjugate()) < 1e-9 * (1 + abs(to_complex(a)))


def test_roots_of_unity():
    assert zeta(8) ** 8 == 1
    assert zeta(8) ** 4 == -1
    assert zeta(4) ** 2 == -1
    assert sqrt2() * sqrt2() == 2
    r = sqrt2_in(8)
    assert r * r == 2
    assert embed_sqrt2(SqrtTwo(1, 1)) == 1 + r
    w = zeta(12)
    assert w**12 == 1 and w**6 == -1


def test_matrix_det_and_char_poly():
    A = ExactMatrix([[1, 2], [3, 4]])
    assert A.det() == -2
    assert A.char_poly() == [-2, -5, 1]
    assert A @ A.inverse() == ExactMatrix.identity(2)


def test_hadamard_is_orthogonal():
    r = SqrtTwo(0, Fraction(1, 2))
    h = ExactMatrix([[r, r], [r, -r]])
    assert h.is_unitary()
    assert (h @ h).is_identity()
    assert h.det() == -1


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=4))
def test_nullspace_is_orthogonal_to_rows(rows):
    rows = [[Fraction(x) for x in r] for r in rows]
    ns = nullspace(rows, 3)
    assert len(ns) + rank(rows, 3) == 3
    for v in ns:
        for r in rows:
            assert sum(a * b for a, b in zip(r, v)) == 0


@given(st.lists(st.lists(small, min_size=3, max_size=3), min_size=1, max_size=5))
def test_hnf_generates_the_same_lattice(rows):
    hnf = hermite_normal_form(rows)
    for r in rows:
        assert in_row_lattice(hnf, r)
    for i, r in enumerate(hnf):
        lead = next(k for k, x in enumerate(r) if x)
        assert r[lead] > 0
        assert all(0 <= hnf[j][lead] < r[lead] for j in range(i))


def test_polynomial_arithmetic():
    x, y = Polynomial.variable(2, 0), Polynomial.variable(2, 1)
    p = (x + y) ** 2
    assert p == x * x + (x * y).scale(2) + y * y
    assert p.degree() == 2 and p.is_homogeneous()
    assert (x**2 - y**2).laplacian() == Polynomial(2)
    assert p.substitute([y, x]) == p


@given(st.lists(small, min_size=1, max_size=6))
def test_series_inverse_truncates_to_one(coeffs):
    if coeffs[0] == 0:
        coeffs[0] = 1
    s = TruncatedSeries(coeffs, 8)
    one = s * series_inverse(s)
    assert one.coeffs == [1] + [0] * 8


def test_json_is_deterministic_and_exact():
    a = dumps({"b": 2**70, "a": sqrt2()})
    assert a == dumps({"a": sqrt2(), "b": 2**70})
    assert '"1180591620717411303424"' in a
    assert '"schema_version": 1' in a


def test_cyclotomic_needs_right_length():
    with pytest.raises(ValueError):
        Cyclotomic(8, [1, 2])
