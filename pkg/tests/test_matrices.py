import itertools

import pytest
from hypothesis import given
from hypothesis import strategies as st

from gl3census.matrices import (
    CLASS_LABELS,
    ClassLabel,
    classify,
    determinant2,
    determinant3,
    format_mat3,
    is_invertible,
    mat2,
    mat3,
    parse_mat3,
    permanent2,
    permanent3,
    sub_permanents,
)

# the running example matrix over Z/3 with permanent 0
EXAMPLE = ((1, 0, 0), (2, 1, 2), (1, 1, 1))


def rand_mat3(draw_n=st.integers(min_value=2, max_value=60)):
    @st.composite
    def build(draw):
        n = draw(draw_n)
        entries = draw(
            st.lists(st.integers(min_value=0, max_value=n - 1), min_size=9, max_size=9)
        )
        return mat3((entries[0:3], entries[3:6], entries[6:9]), n)

    return build()


def test_permanent_examples():
    assert permanent3(mat3(((1, 0, 0), (0, 1, 0), (0, 0, 1)), 5)).value == 1
    assert permanent3(mat3(EXAMPLE, 3)).value == 0
    assert permanent3(mat3(((1, 1, 1),) * 3, 7)).value == 6


def test_determinant_examples():
    assert determinant3(mat3(((1, 0, 0), (0, 1, 0), (0, 0, 1)), 7)).value == 1
    assert determinant3(mat3(EXAMPLE, 3)).value == 2
    assert determinant3(mat3(((1, 2, 3), (1, 2, 3), (4, 0, 1)), 5)).value == 0


def test_two_by_two_examples():
    m = mat2(((1, 0), (0, 1)), 3)
    assert permanent2(m).value == 1 and determinant2(m).value == 1
    m = mat2(((1, 1), (1, 1)), 5)
    assert permanent2(m).value == 2 and determinant2(m).value == 0
    m = mat2(((1, 2), (1, 1)), 3)
    assert permanent2(m).value == 0 and determinant2(m).value == 2


def test_sub_permanents_examples():
    s = sub_permanents(mat3(((1, 0, 0), (0, 1, 0), (0, 0, 1)), 5))
    assert [r.value for r in s.ordered()] == [1, 0, 0, 0, 1]
    s = sub_permanents(mat3(EXAMPLE, 3))
    assert [r.value for r in s.ordered()] == [0, 1, 0, 0, 1]
    s = sub_permanents(mat3(((1, 1, 1),) * 3, 7))
    assert [r.value for r in s.ordered()] == [2] * 5


def test_is_invertible():
    assert is_invertible(mat3(((1, 0, 0), (0, 1, 0), (0, 0, 1)), 12))
    assert not is_invertible(mat3(((0, 0, 0),) * 3, 3))
    assert is_invertible(mat3(EXAMPLE, 3))


def test_classify_examples():
    assert classify(mat3(((1, 0, 0), (0, 1, 0), (0, 0, 1)), 5), 5) is ClassLabel.C11
    assert classify(mat3(EXAMPLE, 3), 3) is ClassLabel.C12
    # witness for the C21 class at p = 5, x = 5: entry a31 = x - 1 = 4
    assert classify(mat3(((0, 0, 1), (1, 1, 0), (4, 1, 0)), 5), 5) is ClassLabel.C21
    assert classify(mat3(((0, 0, 0),) * 3, 3), 3) is ClassLabel.NON_INVERTIBLE


def test_classify_needs_dividing_prime():
    with pytest.raises(ValueError):
        classify(mat3(EXAMPLE, 3), 5)
    with pytest.raises(ValueError):
        classify(mat3(EXAMPLE, 9), 9)


def test_classify_reduces_prime_powers_mod_p():
    m = mat3(((4, 0, 0), (2, 1, 2), (1, 1, 1)), 9)
    assert classify(m, 3) is ClassLabel.C12


@pytest.mark.parametrize("p", [2, 3])
def test_classify_total_on_invertibles(p):
    # every invertible matrix mod p lands in one of the five classes
    seen = set()
    for entries in itertools.product(range(p), repeat=9):
        m = mat3((entries[0:3], entries[3:6], entries[6:9]), p)
        label = classify(m, p)
        if is_invertible(m):
            assert label in CLASS_LABELS
            seen.add(label)
        else:
            assert label is ClassLabel.NON_INVERTIBLE
    assert seen <= set(CLASS_LABELS)


@given(rand_mat3())
def test_row_expansion_consistency(m):
    s = sub_permanents(m)
    n = m.modulus.n
    (a11, a12, a13) = m.rows[0]
    direct = (a11 * s.p11.value + a12 * s.p12.value + a13 * s.p13.value) % n
    assert permanent3(m).value == direct


@given(rand_mat3())
def test_five_subpermanent_identity(m):
    # 2 a22 P22 - a11 P11 + a12 P12 - 2 a21 P21 - 3 a13 P13 = det - 6 a13 a21 a32
    n = m.modulus.n
    s = sub_permanents(m)
    (a11, a12, a13), (a21, a22, _), (_, a32, _) = m.rows
    lhs = (
        2 * a22 * s.p22.value
        - a11 * s.p11.value
        + a12 * s.p12.value
        - 2 * a21 * s.p21.value
        - 3 * a13 * s.p13.value
    ) % n
    rhs = (determinant3(m).value - 6 * a13 * a21 * a32) % n
    assert lhs == rhs


@given(rand_mat3())
def test_transpose_invariance(m):
    t = m.transpose()
    assert permanent3(t) == permanent3(m)
    assert determinant3(t) == determinant3(m)


def test_literal_round_trip():
    m = parse_mat3("1,0,0;2,1,2;1,1,1", 3)
    assert m.rows == EXAMPLE
    assert format_mat3(m) == "1,0,0;2,1,2;1,1,1"
    assert parse_mat3(format_mat3(m), 3) == m


def test_literal_rejects_garbage():
    with pytest.raises(ValueError):
        parse_mat3("1,2;3,4", 5)
    with pytest.raises(ValueError):
        parse_mat3("a,b,c;1,2,3;4,5,6", 5)


def test_entry_access_and_update():
    m = mat3(EXAMPLE, 3)
    assert m.entry(2, 3) == 2
    m2 = m.with_entry(2, 3, 7)
    assert m2.entry(2, 3) == 1  # reduced mod 3
    assert m.entry(2, 3) == 2  # original untouched
