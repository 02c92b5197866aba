"""Finite-type recognition: round trips, normalizations, invariants.

The classifier is the foundation everything else stands on (vertex sets
of the odd graphs are defined through it), so it gets both pinned
examples and a permutation-invariance property test.
"""

import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from artifact.classify import (
    NON_SPHERICAL,
    IrreducibleType,
    TypeDecomposition,
    all_parts_central,
    classify_irreducible,
    coxeter_number,
    decompose,
    group_order,
    has_central_longest,
    is_spherical,
)
from artifact.diagram import INFINITY, CoxeterMatrix, parse_name

NAMES_RANK7 = [
    "A1", "A2", "A3", "A4", "A5", "A6", "A7",
    "B2", "B3", "B4", "B5", "B6", "B7",
    "D4", "D5", "D6", "D7",
    "E6", "E7",
    "F4", "G2", "H3", "H4",
    "I2(5)", "I2(7)", "I2(8)", "I2(12)",
]


@pytest.mark.parametrize("name", NAMES_RANK7)
def test_named_types_round_trip(name):
    assert str(decompose(parse_name(name))) == name


@pytest.mark.parametrize(
    "name,canonical",
    [
        ("I2(3)", "A2"),
        ("I2(4)", "B2"),
        ("I2(6)", "G2"),
        ("H2", "I2(5)"),
        ("C4", "B4"),
        ("I2(2)", "A1+A1"),  # parseable for completeness, classified reducible
    ],
)
def test_coincidences_normalize(name, canonical):
    assert str(decompose(parse_name(name))) == canonical


def test_irreducible_type_constructor_normalizes():
    assert IrreducibleType("I2", param=3) == IrreducibleType("A", 2)
    assert IrreducibleType("I2", param=4) == IrreducibleType("B", 2)
    assert IrreducibleType("I2", param=6) == IrreducibleType("G", 2)
    assert IrreducibleType("H", 2) == IrreducibleType("I2", param=5)
    assert IrreducibleType("B", 1) == IrreducibleType("A", 1)
    assert IrreducibleType("D", 3) == IrreducibleType("A", 3)


@pytest.mark.parametrize(
    "family,rank,param",
    [
        ("I2", None, 2),
        ("I2", None, INFINITY),
        ("I2", None, 1),
        ("E", 5, None),
        ("E", 9, None),
        ("D", 2, None),
        ("H", 5, None),
        ("F", 3, None),
        ("A", 0, None),
        ("G", 3, None),
        ("A", 3, 7),
    ],
)
def test_irreducible_type_rejects(family, rank, param):
    with pytest.raises(ValueError):
        IrreducibleType(family, rank=rank, param=param)


def test_type_is_immutable_and_ordered():
    t = IrreducibleType("B", 3)
    with pytest.raises(AttributeError):
        t.rank = 5
    assert IrreducibleType("A", 1) < IrreducibleType("A", 2) < IrreducibleType("B", 2)
    assert repr(t) == "IrreducibleType(B3)"


@pytest.mark.parametrize(
    "name",
    ["Delta(2,3,6)", "Delta(3,3,3)", "U3", "~A1", "~C3", "~E8", "Delta(inf,inf,inf)"],
)
def test_infinite_diagrams_are_nonspherical(name):
    mat = parse_name(name)
    assert classify_irreducible(mat) == NON_SPHERICAL
    assert not is_spherical(mat)


def test_spherical_triangles_classify():
    assert str(decompose(parse_name("Delta(2,3,3)"))) == "A3"
    assert str(decompose(parse_name("Delta(2,3,4)"))) == "B3"
    assert str(decompose(parse_name("Delta(2,3,5)"))) == "H3"
    assert str(decompose(parse_name("Delta(3,2,3)"))) == "A3"  # order-insensitive


def test_decompose_subset_and_empty():
    mat = parse_name("B4")
    assert str(decompose(mat, [0, 1, 3])) == "A1+A2"
    assert str(decompose(mat, [])) == "1"
    assert len(decompose(mat, [])) == 0
    assert str(decompose(parse_name("A2+A1+B3"))) == "A1+A2+B3"


def test_type_decomposition_equality():
    a = TypeDecomposition([IrreducibleType("A", 1), IrreducibleType("B", 2)])
    b = TypeDecomposition([IrreducibleType("B", 2), IrreducibleType("A", 1)])
    assert a == b and hash(a) == hash(b)
    assert len(a) == 2


CENTRAL = [
    ("A1", True),
    ("A2", False),
    ("A5", False),
    ("B2", True),
    ("B3", True),
    ("B7", True),
    ("D4", True),
    ("D5", False),
    ("D6", True),
    ("D7", False),
    ("E6", False),
    ("E7", True),
    ("E8", True),
    ("F4", True),
    ("G2", True),
    ("H3", True),
    ("H4", True),
    ("I2(5)", False),
    ("I2(7)", False),
    ("I2(8)", True),
    ("I2(12)", True),
]


@pytest.mark.parametrize("name,expected", CENTRAL)
def test_central_longest_membership(name, expected):
    t = classify_irreducible(parse_name(name))
    assert has_central_longest(t) is expected


def test_central_longest_excludes_nonspherical():
    assert has_central_longest(NON_SPHERICAL) is False
    assert not all_parts_central(decompose(parse_name("A1+A2")))
    assert all_parts_central(decompose(parse_name("A1+B2+F4")))
    assert all_parts_central(decompose(parse_name("A1")))
    assert all_parts_central(TypeDecomposition())  # trivially


@pytest.mark.parametrize(
    "name,h",
    [
        ("A1", 2),
        ("A4", 5),
        ("B4", 8),
        ("D6", 10),
        ("E6", 12),
        ("E7", 18),
        ("E8", 30),
        ("F4", 12),
        ("G2", 6),
        ("H3", 10),
        ("H4", 30),
        ("I2(8)", 8),
    ],
)
def test_coxeter_number(name, h):
    assert coxeter_number(classify_irreducible(parse_name(name))) == h


def test_coxeter_number_rejects_nonspherical():
    with pytest.raises(ValueError):
        coxeter_number(NON_SPHERICAL)


@pytest.mark.parametrize(
    "name,order",
    [
        ("A1+A1", 4),
        ("A4", 120),
        ("B3", 48),
        ("D5", 1920),
        ("E6", 51840),
        ("F4", 1152),
        ("G2", 12),
        ("H3", 120),
        ("H4", 14400),
        ("I2(7)", 14),
        ("B2+H3", 8 * 120),
    ],
)
def test_group_order(name, order):
    assert group_order(decompose(parse_name(name))) == order


def test_group_order_rejects_nonspherical():
    with pytest.raises(ValueError):
        group_order(decompose(parse_name("~A2")))


def _permuted(mat, perm):
    n = mat.rank
    rows = [[mat.entries[perm[i]][perm[j]] for j in range(n)] for i in range(n)]
    return CoxeterMatrix(rows)


@given(
    st.sampled_from(NAMES_RANK7 + ["~C3", "~D5", "U4", "Delta(2,4,5)", "A2+B3", "A1+A1+A1"]),
    st.randoms(use_true_random=False),
)
@settings(max_examples=150, deadline=None)
def test_decompose_is_permutation_invariant(name, rng):
    mat = parse_name(name)
    perm = list(range(mat.rank))
    rng.shuffle(perm)
    assert decompose(_permuted(mat, perm)) == decompose(mat)


def test_classifier_rejects_lookalikes():
    # a path with bonds (4, 4) is neither B3 nor anything else finite
    assert classify_irreducible(parse_name("~C2")) == NON_SPHERICAL
    # the right fork but a 4-bond in the handle is not D4
    mat = CoxeterMatrix(
        [
            [1, 4, 2, 2],
            [4, 1, 3, 3],
            [2, 3, 1, 2],
            [2, 3, 2, 1],
        ]
    )
    assert classify_irreducible(mat) == NON_SPHERICAL
    # two branch vertices
    assert classify_irreducible(parse_name("~D4")) == NON_SPHERICAL


def test_is_spherical_accepts_both_shapes():
    mat = parse_name("H3")
    assert is_spherical(mat)
    assert is_spherical(decompose(mat))
    assert not is_spherical(decompose(parse_name("U3")))
