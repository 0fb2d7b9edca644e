import itertools
import math

import pytest
from hypothesis import given
from hypothesis import strategies as st

from cliffordinv.codes import (
    BinaryCode,
    PrimeFieldCode,
    canonical_form,
    enumerate_self_dual,
    enumerate_self_orthogonal,
    hamming_code_8,
    named_code,
    repetition_pairs,
    self_dual_supercodes,
    shadow_vectors,
    tetracode,
    ternary_golay_12,
)
from cliffordinv.errors import NotSelfDualError, UnknownCodeError


def automorphism_count(code):
    n = code.length
    words = set(code.codewords())
    basis = code.basis
    count = 0
    for perm in itertools.permutations(range(n)):
        ok = True
        for b in basis:
            img = sum(1 << perm[j] for j in range(n) if (b >> j) & 1)
            if img not in words:
                ok = False
                break
        count += ok
    return count


@pytest.mark.parametrize("N,count", [(2, 1), (4, 1), (6, 1), (8, 2), (10, 2)])
def test_number_of_self_dual_classes(N, count):
    assert len(enumerate_self_dual(N)) == count


def test_doubly_even_classes():
    assert len(enumerate_self_dual(8, doubly_even=True)) == 1
    assert enumerate_self_dual(4, doubly_even=True) == []


@pytest.mark.parametrize("N", [2, 4, 6, 8])
def test_mass_formula(N):
    # every self-dual code of length N, counted through its class
    mass = sum(
        math.factorial(N) // automorphism_count(cc.representative) for cc in enumerate_self_dual(N)
    )
    assert mass == math.prod(2**i + 1 for i in range(1, N // 2))


def test_doubly_even_mass_formula():
    mass = sum(
        math.factorial(8) // automorphism_count(cc.representative)
        for cc in enumerate_self_dual(8, doubly_even=True)
    )
    assert mass == math.prod(2**i + 1 for i in range(0, 3))


def test_self_dual_supercodes_of_ones():
    assert len(self_dual_supercodes(BinaryCode.all_ones(6))) == 15
    assert len(self_dual_supercodes(BinaryCode.all_ones(8))) == 135
    assert len(self_dual_supercodes(BinaryCode.all_ones(8), doubly_even=True)) == 30


words8 = st.lists(st.integers(0, 255), min_size=1, max_size=4)


@given(words8)
def test_dual_dimension_and_involution(rows):
    c = BinaryCode(8, rows)
    d = c.dual()
    assert c.dim + d.dim == 8
    assert d.dual() == c
    for a in c.basis:
        for b in d.basis:
            assert c.inner(a, b) == 0


@given(st.permutations(range(8)), st.integers(0, 6))
def test_canonical_form_ignores_coordinate_order(perm, which):
    classes = enumerate_self_orthogonal(8)
    code = classes[which % len(classes)].representative
    moved = code.permute(list(perm))
    assert canonical_form(moved).key == canonical_form(code).key


def test_classes_are_distinct():
    for N in (6, 8):
        keys = [cc.key for cc in enumerate_self_orthogonal(N, contain_one=False)]
        assert len(keys) == len(set(keys))


def test_self_orthogonal_classes_contain_ones():
    for cc in enumerate_self_orthogonal(8):
        c = cc.representative
        assert c.is_self_orthogonal() and c.contains_ones()


def test_hamming_code():
    h = hamming_code_8()
    assert h.is_self_dual() and h.is_doubly_even()
    assert h.weight_distribution() == (1, 0, 0, 0, 14, 0, 0, 0, 1)


def test_ternary_codes():
    t = tetracode()
    assert t.is_self_dual()
    assert t.weight_distribution() == (1, 0, 0, 8, 0)
    g = ternary_golay_12()
    assert g.is_self_dual() and g.contains_ones()
    assert g.weight_distribution() == (1, 0, 0, 0, 0, 0, 264, 0, 0, 440, 0, 0, 24)
    assert len(enumerate_self_dual(4, p=3)) == 1


def test_no_ternary_length_four_code_contains_ones():
    assert enumerate_self_orthogonal(4, p=3) == []
    assert not PrimeFieldCode.all_ones(3, 4).is_self_orthogonal()


def test_shadow_vectors():
    h = hamming_code_8()
    v0, _ = shadow_vectors(h)
    assert h.reduce(v0) == 0  # doubly even: the shadow is the code itself
    c = repetition_pairs(3)
    v0, _ = shadow_vectors(c)
    for w in c.codewords():
        assert ((v0 ^ w).bit_count() - v0.bit_count()) % 4 == 0
    with pytest.raises(NotSelfDualError):
        shadow_vectors(BinaryCode.all_ones(4))


def test_registry(tmp_path):
    assert named_code("H8") == named_code("e8") == hamming_code_8()
    assert named_code("i2^3") == repetition_pairs(3)
    assert named_code("1^6") == BinaryCode.all_ones(6)
    f = tmp_path / "c.txt"
    f.write_text("# a code\n1100\n0011\n")
    assert named_code(str(f)) == repetition_pairs(2)
    f.write_text("1011\n0112\n")
    assert named_code(str(f), p=3) == tetracode()
    with pytest.raises(UnknownCodeError):
        named_code("nonsense")
