from itertools import product
from math import comb

import pytest

from lib.data_types import NonDominant, RootSystemSpec, Weight, WeylGroupCapExceeded
from lib.multiplicity import (
    invariant_dim,
    kostant_multiplicity_oracle,
    partition_function,
    weight_multiplicities,
    weight_multiplicity,
    weyl_dim,
)
from lib.rootsystem import build
from lib.weyl import weyl_group_elements


def rs_of(label):
    return build(RootSystemSpec.from_label(label))


@pytest.mark.parametrize(
    "label, lam, dim",
    [
        ("B3", (2, 0, 0), 27),
        ("D4", (2, 0, 0, 0), 35),
        ("A2", (1, 1), 8),
        ("A2", (0, 0), 1),
        ("G2", (0, 0), 1),
        ("G2", (1, 0), 7),
        ("G2", (0, 1), 14),
        ("B2", (1, 0), 5),
        ("C3", (1, 0, 0), 6),
        ("E6", (1, 0, 0, 0, 0, 0), 27),
        ("E7", (0, 0, 0, 0, 0, 0, 1), 56),
        ("E8", (0, 0, 0, 0, 0, 0, 0, 1), 248),
        ("F4", (0, 0, 0, 1), 26),
    ],
)
def test_weyl_dim(label, lam, dim):
    assert weyl_dim(rs_of(label), lam) == dim


@pytest.mark.parametrize("n", [2, 3, 4])
def test_type_b_symmetric_square(n):
    rs = rs_of(f"B{n}")
    two_w1 = [2] + [0] * (n - 1)
    assert weyl_dim(rs, two_w1) == n * (2 * n + 3)
    assert weyl_dim(rs, two_w1) + 1 == (n + 1) * (2 * n + 1)
    assert invariant_dim(rs, two_w1) == n


def test_d4_symmetric_square():
    d4 = rs_of("D4")
    assert weyl_dim(d4, [2, 0, 0, 0]) + 1 == 36
    assert invariant_dim(d4, [2, 0, 0, 0]) == 3


def test_non_dominant_rejected():
    with pytest.raises(NonDominant):
        weyl_dim(rs_of("A2"), [-1, 0])
    with pytest.raises(NonDominant):
        weight_multiplicity(rs_of("A2"), [1, -1], [0, 0])


@pytest.mark.parametrize(
    "label, lam, mu, m",
    [
        ("A2", (1, 1), (0, 0), 2),
        ("A2", (1, 1), (2, -1), 1),
        ("A2", (2, 2), (0, 0), 3),
        ("B3", (2, 0, 0), (0, 0, 0), 3),
        ("A4", (2, 0, 1, 0), (0, 0, 0, 0), 6),
        ("A2", (1, 1), (3, 0), 0),
        ("G2", (0, 1), (0, 0), 2),
    ],
)
def test_weight_multiplicity(label, lam, mu, m):
    assert weight_multiplicity(rs_of(label), lam, mu) == m


@pytest.mark.parametrize(
    "label, lam, mu, m",
    [
        ("A2", (1, 1), (2, -1), 1),
        ("A2", (2, 2), (0, 0), 3),
        ("B2", (0, 2), (0, 0), 2),
        ("G2", (0, 1), (0, 0), 2),
    ],
)
def test_kostant_oracle(label, lam, mu, m):
    assert kostant_multiplicity_oracle(rs_of(label), lam, mu) == m


def test_kostant_oracle_cap():
    with pytest.raises(WeylGroupCapExceeded):
        kostant_multiplicity_oracle(rs_of("A3"), [1, 0, 1], [0, 0, 0], weyl_cap=10)


def test_partition_function_a2():
    count = partition_function(rs_of("A2"))
    assert count((0, 0)) == 1
    assert count((1, 1)) == 2
    assert count((2, 2)) == 3
    assert count((1, -1)) == 0


@pytest.mark.parametrize("label, limit", [("A2", 3), ("A3", 2), ("B2", 3), ("C3", 1), ("G2", 2)])
def test_freudenthal_matches_kostant(label, limit):
    rs = rs_of(label)
    for lam in product(range(limit + 1), repeat=rs.rank):
        table = weight_multiplicities(rs, lam)
        for mu in table.dominant_weights():
            assert table.multiplicity(mu) == kostant_multiplicity_oracle(rs, lam, mu)


@pytest.mark.parametrize(
    "label, lam",
    [("A3", (1, 0, 1)), ("B3", (1, 1, 0)), ("C3", (0, 1, 1)), ("G2", (2, 1)), ("D4", (1, 0, 1, 1)), ("F4", (1, 0, 0, 0))],
)
def test_table_sums_to_weyl_dim(label, lam):
    rs = rs_of(label)
    table = weight_multiplicities(rs, lam)
    assert table.dimension() == weyl_dim(rs, lam)
    assert sum(table.full().values()) == weyl_dim(rs, lam)


@pytest.mark.parametrize("label, lam", [("A2", (2, 1)), ("B2", (1, 2)), ("G2", (1, 1))])
def test_multiplicities_are_weyl_invariant(label, lam):
    rs = rs_of(label)
    table = weight_multiplicities(rs, lam)
    full = table.full()
    for w in weyl_group_elements(rs):
        for mu, m in full.items():
            assert table.multiplicity(w.act(mu)) == m


def test_table_accepts_lists_and_tuples():
    rs = rs_of("A2")
    assert weight_multiplicities(rs, [1, 1]) is weight_multiplicities(rs, (1, 1))


def test_shared_table_is_read_only():
    rs = rs_of("A2")
    table = weight_multiplicities(rs, [1, 1])
    with pytest.raises(TypeError):
        table.entries[Weight([0, 0])] = 0
    with pytest.raises(AttributeError):
        table.entries = {}
    assert weight_multiplicity(rs, [1, 1], [0, 0]) == 2


@pytest.mark.parametrize("label", ["A1", "A3", "B3", "C4", "D4", "D5", "E6", "E7", "E8", "F4", "G2"])
def test_adjoint_zero_weight_is_rank(label):
    rs = rs_of(label)
    assert invariant_dim(rs, rs.highest_long_root) == rs.rank


@pytest.mark.parametrize(
    "label, chi, d, dim",
    [
        ("A3", (0, 2, 0), 1, 2),
        ("A4", (5, 0, 0, 0), 1, 1),
        ("D4", (2, 0, 0, 0), 1, 3),
        ("A2", (1, 0), 1, 0),
        ("A2", (1, 0), 3, 1),
        ("A2", (1, 1), 2, 3),
    ],
)
def test_invariant_dim(label, chi, d, dim):
    assert invariant_dim(rs_of(label), chi, d) == dim


@pytest.mark.parametrize("n, i", [(5, 2), (6, 2), (6, 3), (6, 1), (5, 3)])
def test_hook_zero_weight_is_binomial(n, i):
    rs = rs_of(f"A{n - 1}")
    chi = [0] * (n - 1)
    chi[0] += i
    chi[n - i - 1] += 1
    dual = list(reversed(chi))
    assert invariant_dim(rs, chi) == comb(n - 1, i)
    assert invariant_dim(rs, dual) == comb(n - 1, i)


def test_weight_type_is_normalised():
    table = weight_multiplicities(rs_of("A2"), [1, 1])
    assert table.highest_weight == Weight([1, 1])
    assert all(isinstance(mu, Weight) for mu in table.dominant_weights())
