from fractions import Fraction

import pytest

from lib.data_types import IndexOutOfRange, InvalidRank, NotInWeightLattice, RootCoords, RootSystemSpec, Weight
from lib.rootsystem import (
    bilinear_form,
    build,
    classical_root_count,
    diagram_automorphisms,
    dynkin_edges,
    pairing,
    to_root_coords,
    to_weight,
)

ALL_LABELS = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(2, 9)]
    + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


def rs_of(label):
    return build(RootSystemSpec.from_label(label))


def test_a2_positive_roots():
    assert set(rs_of("A2").positive_roots) == {(1, 0), (0, 1), (1, 1)}


def test_g2_positive_roots():
    assert set(rs_of("G2").positive_roots) == {(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)}


def test_b3_highest_long_root():
    rs = rs_of("B3")
    assert rs.highest_long_root_coords == (1, 2, 2)
    assert rs.highest_long_root == Weight([0, 1, 0])


@pytest.mark.parametrize("label", ALL_LABELS)
def test_root_counts(label):
    rs = rs_of(label)
    assert len(rs.positive_roots) == classical_root_count(rs.spec)


@pytest.mark.parametrize("label", ALL_LABELS)
def test_cartan_shape(label):
    cartan = rs_of(label).cartan
    n = cartan.shape[0]
    for i in range(n):
        assert cartan[i, i] == 2
        for j in range(n):
            if i != j:
                assert cartan[i, j] <= 0
                assert (cartan[i, j] == 0) == (cartan[j, i] == 0)


@pytest.mark.parametrize("label", ALL_LABELS)
def test_symmetrizers_symmetrize(label):
    rs = rs_of(label)
    d = rs.symmetrizers
    for i in range(rs.rank):
        for j in range(rs.rank):
            assert d[i] * rs.cartan[i, j] == d[j] * rs.cartan[j, i]


@pytest.mark.parametrize(
    "label, expected",
    [("A3", (1, 1, 1)), ("B3", (2, 2, 1)), ("C3", (1, 1, 2)), ("F4", (2, 2, 1, 1)), ("G2", (1, 3))],
)
def test_symmetrizer_values(label, expected):
    assert rs_of(label).symmetrizers == expected


@pytest.mark.parametrize("label", ["A4", "B4", "C3", "D5", "E6", "F4", "G2"])
def test_roots_built_by_simple_steps(label):
    rs = rs_of(label)
    roots = set(rs.positive_roots)
    for root in rs.positive_roots:
        if sum(root) == 1:
            continue
        assert any(
            tuple(c - (j == i) for j, c in enumerate(root)) in roots for i in range(rs.rank)
        ), root


@pytest.mark.parametrize("label", ALL_LABELS)
def test_highest_long_root(label):
    rs = rs_of(label)
    top = rs.highest_long_root_coords
    assert all(c >= 1 for c in top)
    assert rs.highest_long_root.is_dominant
    for root in rs.positive_roots:
        assert all(a >= b for a, b in zip(top, root))
    assert bilinear_form(rs, top, top) == 2


@pytest.mark.parametrize(
    "label, weight, coords",
    [
        ("A2", (1, 1), (1, 1)),
        ("A3", (0, 2, 0), (1, 2, 1)),
        ("C3", (2, 0, 0), (2, 2, 1)),
        ("A2", (1, 0), (Fraction(2, 3), Fraction(1, 3))),
    ],
)
def test_to_root_coords(label, weight, coords):
    rs = rs_of(label)
    result = to_root_coords(rs, weight)
    assert result == RootCoords(coords)
    assert to_weight(rs, result) == Weight(weight)


def test_to_weight_rejects_non_lattice_vector():
    with pytest.raises(NotInWeightLattice) as e:
        to_weight(rs_of("A2"), [Fraction(1, 2), 0])
    assert e.value.message["root_coords"] == ["1/2", "0"]
    with pytest.raises(ValueError):
        to_weight(rs_of("A2"), [Fraction(1, 2), 0])


@pytest.mark.parametrize("label", ["A3", "B3", "C4", "D4", "E6", "G2"])
def test_fundamental_weights_invert_cartan(label):
    rs = rs_of(label)
    for i, coords in enumerate(rs.fundamental_weights):
        assert to_weight(rs, coords) == Weight(int(i == j) for j in range(rs.rank))


def test_pairing():
    assert pairing(rs_of("A2"), RootCoords([1, 0]), 1) == 2
    b3 = rs_of("B3")
    assert pairing(b3, RootCoords(b3.highest_long_root_coords), 2) == 1
    assert pairing(rs_of("A4"), Weight([2, 0, 1, 0]), 2) == 0


def test_bilinear_form_normalization():
    assert bilinear_form(rs_of("A2"), (1, 0), (1, 0)) == 2
    b2 = rs_of("B2")
    assert bilinear_form(b2, (1, 0), (1, 0)) == 2
    assert bilinear_form(b2, (0, 1), (0, 1)) == 1
    g2 = rs_of("G2")
    assert bilinear_form(g2, (1, 0), (0, 1)) == -1
    assert bilinear_form(g2, (1, 0), (1, 0)) == Fraction(2, 3)
    assert bilinear_form(g2, (0, 1), (0, 1)) == 2


@pytest.mark.parametrize("label", ["E9", "D3", "B1", "C1", "F5", "G3", "A0", "X2"])
def test_invalid_rank(label):
    with pytest.raises(InvalidRank):
        build(RootSystemSpec.from_label(label))


def test_unparseable_label():
    with pytest.raises(InvalidRank):
        RootSystemSpec.from_label("B")


def test_check_index():
    rs = rs_of("A2")
    assert rs.check_index(2) == 1
    with pytest.raises(IndexOutOfRange):
        rs.check_index(3)
    with pytest.raises(IndexOutOfRange):
        rs.check_index(0)


@pytest.mark.parametrize("label, edges", [("A4", 3), ("D4", 3), ("D5", 4), ("E6", 5), ("E8", 7), ("G2", 1)])
def test_dynkin_edges(label, edges):
    assert len(dynkin_edges(RootSystemSpec.from_label(label))) == edges


@pytest.mark.parametrize("label, count", [("D4", 6), ("A3", 2), ("B3", 1), ("E6", 2), ("D5", 2)])
def test_diagram_automorphisms(label, count):
    automorphisms = diagram_automorphisms(rs_of(label))
    assert len(automorphisms) == count
    assert automorphisms[0] == tuple(range(rs_of(label).rank))
