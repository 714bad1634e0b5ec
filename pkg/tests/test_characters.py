from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from foldmv.characters import (
    CharacterSystem,
    FormalCharacter,
    freudenthal_multiplicity,
    kostant_multiplicity,
    merge,
    mv_character,
    mv_weight_multiplicity,
    twining_character,
    verify_twining,
    weyl_character,
    weyl_dimension,
)
from foldmv.folding import build_folding, parse_sigma
from foldmv.root_datum import parse_type, weights_of


def system(name):
    return CharacterSystem.of_group(parse_type(name))


def folding(name, sigma="flip"):
    root = parse_type(name)
    return build_folding(root, parse_sigma(root, sigma))


def test_freudenthal_examples():
    assert freudenthal_multiplicity(system("A1"), (1,), (0,)) == 1
    assert freudenthal_multiplicity(system("A2"), (1, 1), (0, 0)) == 2
    assert freudenthal_multiplicity(system("A2"), (1, 1), (3, 3)) == 0
    for lam in [(1, 1), (2, 1), (1, 2, 1)]:
        s = system(f"A{len(lam)}")
        assert freudenthal_multiplicity(s, lam, lam) == 1
    with pytest.raises(ValueError):
        freudenthal_multiplicity(system("A2"), (1, 0), (0, 0))


def test_weyl_character_examples():
    # A1 coweight lattice is the coroot lattice, so <lam, alpha> = 1 needs a folded system
    ch = weyl_character(CharacterSystem.of_folding(folding("A2")), (1, 1))
    assert dict(ch.items()) == {(1, 1): 1, (-1, -1): 1}
    ch = weyl_character(system("A2"), (1, 1))
    assert ch.dimension == 8
    assert sorted(ch[mu] for mu in ch.support) == [1, 1, 1, 1, 1, 1, 2]


def test_rho_pairs_to_one():
    for name in ["A3", "B3", "C3", "G2", "F4"]:
        s = system(name)
        assert s.labels(tuple(2 * x for x in s.rho)) == tuple([2] * s.rank)


def test_form_is_normalized():
    s = system("G2")
    norms = [s.inner(b, b) for b in s.betas]
    assert min(norms) == 2 and max(norms) == 6


@pytest.mark.parametrize(
    "name,lam",
    [("A2", (2, 1)), ("A3", (1, 2, 1)), ("A3", (2, 2, 2)), ("B2", (1, 1)), ("C2", (1, 2)), ("G2", (2, 3)), ("B3", (2, 2, 1))],
)
def test_freudenthal_matches_kostant_and_weyl_dimension(name, lam):
    s = system(name)
    ch = weyl_character(s, lam)
    assert ch.dimension == weyl_dimension(s, lam)
    for mu in ch.support[:8]:
        assert ch[mu] == kostant_multiplicity(s, lam, mu)


def test_folded_systems_kostant():
    cases = [(folding("A3"), (1, 2, 1)), (folding("A4"), (1, 1, 1, 1)), (folding("D4", "triality"), (1, 2, 1, 1))]
    for f, lam in cases:
        s = CharacterSystem.of_folding(f)
        ch = weyl_character(s, lam)
        assert ch.dimension == weyl_dimension(s, lam)
        for mu in ch.support:
            assert ch[mu] == kostant_multiplicity(s, lam, mu)


def test_mv_multiplicity_examples():
    a2, a1 = parse_type("A2"), parse_type("A1")
    assert mv_weight_multiplicity(a2, (1, 1), (0, 0)) == 2
    assert mv_weight_multiplicity(a2, (1, 1), (1, 1)) == 1
    assert mv_weight_multiplicity(a1, (1,), (-2,)) == 0
    assert mv_weight_multiplicity(a1, (1,), (0,)) == 1


@settings(max_examples=10, deadline=None)
@given(st.sampled_from(["A2", "A3"]), st.data())
def test_mv_character_is_freudenthal(name, data):
    root = parse_type(name)
    lam = tuple(data.draw(st.lists(st.integers(0, 2), min_size=root.rank, max_size=root.rank)))
    if not root.is_dominant(lam):
        return
    ch = mv_character(root, lam)
    assert ch == weyl_character(system(name), lam)
    assert ch.dimension == weyl_dimension(system(name), lam)


def test_twining_examples():
    f = folding("A2")
    tw = twining_character(f, (1, 1))
    assert [tw[mu] for mu in [(1, 1), (0, 0), (-1, -1)]] == [1, 0, 1]
    assert tw.support == [(1, 1), (-1, -1)]
    report = verify_twining(f, (1, 1))
    assert report.equal
    assert [(r.twining, r.folded, r.multiplicity) for r in report.rows] == [(1, 1, 1), (0, 0, 2), (1, 1, 1)]
    assert verify_twining(f, (0, 0)).equal
    with pytest.raises(ValueError):
        twining_character(folding("A3"), (1, 0, 0))


def test_twining_bounded_by_multiplicity_a3():
    f = folding("A3")
    report = verify_twining(f, (1, 1, 1))
    assert report.equal
    for row in report.rows:
        assert 0 <= row.twining <= row.multiplicity
        assert f.is_invariant(row.weight)
    assert report.rows[0].weight == (1, 1, 1) and report.rows[0].twining == 1


def test_twining_lift_convention_does_not_matter():
    f = folding("A3")
    assert twining_character(f, (1, 2, 1)) == twining_character(f, (1, 2, 1), convention="descending")
    assert twining_character(f, (1, 2, 1)) == twining_character(f, (1, 2, 1), word_sigma=(2, 1, 2, 1))


def test_formal_character_helpers():
    a = FormalCharacter({(1,): 2, (0,): 0})
    assert a.support == [(1,)]
    assert merge([a, FormalCharacter({(1,): -2, (2,): 1})]) == FormalCharacter({(2,): 1})
    assert a[(5,)] == 0


def test_weights_of_matches_character_support():
    for name, lam in [("A3", (1, 2, 1)), ("C2", (1, 2)), ("G2", (2, 3))]:
        root = parse_type(name)
        assert set(weights_of(root, lam)) == set(weyl_character(system(name), lam).support)


def test_rho_is_rational():
    assert all(isinstance(x, Fraction) for x in system("A3").rho)
