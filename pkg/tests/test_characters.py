import pytest

from lib.characters import (
    character_from_root_coords,
    coefficient_law_violations,
    coxeter_semistable,
    descent_violations,
    dominant_root_lattice_characters,
    enumerate_semistable_indecomposables,
    find_semistable_coxeter,
    hook_character,
    is_dominant_root_lattice,
    is_indecomposable,
    make_character,
    middle_coxeter_law,
    middle_coxeter_words,
    mirror_coefficient_law_violations,
    verify_descent_lemma,
)
from lib.data_types import (
    DominantCharacter,
    NonDominant,
    NotInRootLattice,
    RootSystemSpec,
    Weight,
    WrongType,
    ZeroCharacter,
)
from lib.rootsystem import build
from lib.weyl import CoxeterElement, dual_character, enumerate_coxeter_elements, from_word


def rs_of(label):
    return build(RootSystemSpec.from_label(label))


def coxeter(rs, word):
    return CoxeterElement(from_word(rs, word))


def coords_of(entries):
    return sorted(e.character.root_coords for e in entries)


def test_is_dominant_root_lattice():
    assert not is_dominant_root_lattice(rs_of("A2"), [1, 0])
    assert is_dominant_root_lattice(rs_of("A2"), [3, 0])
    assert is_dominant_root_lattice(rs_of("B2"), [0, 2])
    assert not is_dominant_root_lattice(rs_of("B2"), [0, 1])
    assert not is_dominant_root_lattice(rs_of("A2"), [-3, 3])


def test_make_character():
    a3 = rs_of("A3")
    chi = make_character(a3, [0, 2, 0])
    assert chi.root_coords == (1, 2, 1)
    assert chi.height == 4
    assert character_from_root_coords(a3, (1, 2, 1)) == chi
    with pytest.raises(NotInRootLattice):
        make_character(a3, [1, 0, 0])
    with pytest.raises(NonDominant):
        make_character(a3, [2, -1, 0])


def test_coxeter_semistable():
    a2 = rs_of("A2")
    assert coxeter_semistable(a2, coxeter(a2, (2, 1)), make_character(a2, [1, 1]))
    a3 = rs_of("A3")
    two_w2 = make_character(a3, [0, 2, 0])
    assert not coxeter_semistable(a3, coxeter(a3, (3, 2, 1)), two_w2)
    assert coxeter_semistable(a3, coxeter(a3, (1, 3, 2)), two_w2)


@pytest.mark.parametrize("label", ["B3", "G2", "D4"])
def test_alpha0_has_no_witness(label):
    rs = rs_of(label)
    alpha0 = make_character(rs, rs.highest_long_root)
    assert not find_semistable_coxeter(rs, alpha0).exists


@pytest.mark.parametrize("label", ["A1", "A2", "A3", "A4", "B2", "C2", "C3"])
def test_alpha0_has_witness(label):
    rs = rs_of(label)
    assert find_semistable_coxeter(rs, make_character(rs, rs.highest_long_root)).exists


def test_b2_witness():
    b2 = rs_of("B2")
    result = find_semistable_coxeter(b2, character_from_root_coords(b2, (1, 1)))
    assert from_word(b2, (2, 1)).key in {w.key for w in result.witnesses}


def test_decomposable_but_semistable():
    a2 = rs_of("A2")
    assert find_semistable_coxeter(a2, character_from_root_coords(a2, (3, 3))).exists


def test_witness_order_is_canonical():
    rs = rs_of("A3")
    result = find_semistable_coxeter(rs, make_character(rs, [1, 0, 1]))
    keys = [w.key for w in result.witnesses]
    assert keys == sorted(keys)


@pytest.mark.parametrize("label, d_max", [("A2", 4), ("A3", 3), ("B2", 4)])
def test_predicate_is_scale_invariant(label, d_max):
    rs = rs_of(label)
    elements = enumerate_coxeter_elements(rs)
    for chi in dominant_root_lattice_characters(rs, 8):
        for d in range(2, d_max + 1):
            scaled = DominantCharacter(weight=chi.weight.scaled(d), root_coords=tuple(d * c for c in chi.root_coords))
            for w in elements:
                assert coxeter_semistable(rs, w, chi) == coxeter_semistable(rs, w, scaled)


def test_is_indecomposable():
    a2 = rs_of("A2")
    assert is_indecomposable(a2, character_from_root_coords(a2, (1, 1)))
    assert is_indecomposable(a2, character_from_root_coords(a2, (2, 1)))
    assert not is_indecomposable(a2, character_from_root_coords(a2, (2, 2)))
    assert is_indecomposable(rs_of("A3"), character_from_root_coords(rs_of("A3"), (1, 2, 1)))
    b3 = rs_of("B3")
    assert is_indecomposable(b3, make_character(b3, [1, 0, 0]))
    assert not is_indecomposable(b3, make_character(b3, [2, 0, 0]))


def test_zero_character():
    with pytest.raises(ZeroCharacter):
        is_indecomposable(rs_of("A2"), DominantCharacter(weight=Weight([0, 0]), root_coords=(0, 0)))


@pytest.mark.parametrize("label", ["A3", "B3", "C3", "G2"])
def test_root_lattice_characters_are_strictly_positive(label):
    rs = rs_of(label)
    characters = list(dominant_root_lattice_characters(rs, 10))
    assert characters
    for chi in characters:
        assert chi.weight.is_dominant
        assert all(c >= 1 for c in chi.root_coords)
        assert make_character(rs, chi.weight) == chi
    heights = [chi.height for chi in characters]
    assert heights == sorted(heights)


def test_enumerate_a2():
    found = enumerate_semistable_indecomposables(rs_of("A2"), 12)
    assert coords_of(found) == [(1, 1), (1, 2), (2, 1)]


def test_enumerate_b2():
    found = enumerate_semistable_indecomposables(rs_of("B2"), 12)
    assert coords_of(found) == [(1, 1), (1, 2)]


def test_enumerate_a3():
    found = enumerate_semistable_indecomposables(rs_of("A3"), 16)
    listed = [(1, 1, 1), (3, 2, 1), (1, 2, 1), (1, 2, 3)]
    extra = [(2, 2, 1), (1, 2, 2)]
    assert coords_of(found) == sorted(listed + extra)
    names = {e.character.root_coords: e.names for e in found}
    assert "s3s2s1" in names[(2, 2, 1)]
    assert "s1s2s3" in names[(1, 2, 2)]
    assert names[(1, 2, 1)] == ["s1s3s2"]


def test_semistability_is_dual_invariant():
    a3 = rs_of("A3")
    for entry in enumerate_semistable_indecomposables(a3, 12):
        dual = make_character(a3, dual_character(a3, entry.character.weight))
        assert find_semistable_coxeter(a3, dual).exists


def test_d4_witness_elements():
    d4 = rs_of("D4")
    found = enumerate_semistable_indecomposables(d4, 12)
    assert sorted(e.character.weight for e in found) == [Weight([0, 0, 0, 2]), Weight([0, 0, 2, 0]), Weight([2, 0, 0, 0])]
    assert [len(e.witnesses) for e in found] == [1, 1, 1]
    keys = {w.key for e in found for w in e.witnesses}
    assert keys == {from_word(d4, word).key for word in [(4, 3, 2, 1), (4, 1, 2, 3), (3, 1, 2, 4)]}
    # a Coxeter element that admits no semistable character
    assert from_word(d4, (1, 2, 3, 4)).key in {c.key for c in enumerate_coxeter_elements(d4)}
    assert from_word(d4, (1, 2, 3, 4)).key not in keys


def test_b3_first_fundamental_weight():
    b3 = rs_of("B3")
    found = {e.character.weight: e for e in enumerate_semistable_indecomposables(b3, 12)}
    assert found[Weight([1, 0, 0])].names == ["s3s2s1"]
    assert b3.highest_long_root not in found


def test_descent_bound_a2():
    assert verify_descent_lemma(rs_of("A2"), 12)


def test_descent_exception_a3():
    violations = descent_violations(rs_of("A3"), 16)
    assert [(v.character.weight, v.witness, v.descents) for v in violations] == [(Weight([0, 2, 0]), "s1s3s2", (2,))]
    assert not verify_descent_lemma(rs_of("A3"), 16)


@pytest.mark.slow
def test_descent_bound_a4():
    assert verify_descent_lemma(rs_of("A4"), 20)


def test_descent_bound_wrong_type():
    with pytest.raises(WrongType):
        verify_descent_lemma(rs_of("B2"), 12)


@pytest.mark.parametrize("label", ["A2", "A3"])
def test_coefficient_laws(label):
    rs = rs_of(label)
    entries = enumerate_semistable_indecomposables(rs, 16)
    assert coefficient_law_violations(rs, entries) == []
    assert mirror_coefficient_law_violations(rs, entries) == []


def test_middle_coxeter_words():
    assert middle_coxeter_words(rs_of("A3")) == []
    assert middle_coxeter_words(rs_of("A4")) == [(3, 4, 2, 1)]
    assert middle_coxeter_words(rs_of("A5")) == [(3, 4, 5, 2, 1), (4, 5, 3, 2, 1)]


def test_middle_coxeter_law_sees_theta():
    a4 = rs_of("A4")
    seen = middle_coxeter_law(a4, enumerate_semistable_indecomposables(a4, 10))
    assert [1, 1, 1, 1] in seen["s3s4s2s1"]


def test_hook_character():
    a4 = rs_of("A4")
    assert hook_character(a4, 2) == Weight([2, 0, 1, 0])
    assert hook_character(a4, 1) == Weight([1, 0, 0, 1])
    assert hook_character(a4, 4) == Weight([5, 0, 0, 0])
    with pytest.raises(WrongType):
        hook_character(rs_of("B3"), 1)
