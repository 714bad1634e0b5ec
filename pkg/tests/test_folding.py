import pytest
from hypothesis import given, settings, strategies as st

from foldmv.folding import (
    FoldingInconsistency,
    NotSigmaInvariant,
    apply_sigma,
    build_folded_polytope,
    build_folding,
    cycle_notation,
    fold_datum,
    fold_word,
    folded_transport,
    is_block_constant,
    is_sigma_invariant,
    lift_word,
    parse_sigma,
    theta_P,
    unfold_datum,
)
from foldmv.lusztig import LusztigDatum, coweight_of, transport
from foldmv.polytope import build_polytope, enumerate_data, point_polytope
from foldmv.root_datum import parse_type
from foldmv.weyl import longest_element, word_graph


def folding(name, sigma="flip"):
    root = parse_type(name)
    return build_folding(root, parse_sigma(root, sigma))


A2F, A3F, A4F, D4T = folding("A2"), folding("A3"), folding("A4"), folding("D4", "triality")


@pytest.mark.parametrize(
    "name,sigma,folded,cartan",
    [
        ("A2", "flip", "A1", ((2,),)),
        ("A3", "flip", "C2", ((2, -2), (-1, 2))),
        ("A4", "flip", "B2", ((2, -1), (-2, 2))),
        ("D4", "triality", "G2", ((2, -3), (-1, 2))),
        ("D4", "flip", "B3", None),
        ("A5", "flip", "C3", None),
        ("E6", "flip", "F4", None),
    ],
)
def test_folded_types(name, sigma, folded, cartan):
    f = folding(name, sigma)
    assert f.folded.name == folded
    if cartan is not None:
        assert f.folded.cartan == cartan


def test_orbit_data():
    assert [(o.nodes, o.h, o.r) for o in A4F.orbits] == [((1, 4), 0, 2), ((2, 3), 1, 3)]
    assert A4F.coroot(2) == (0, 2, 2, 0)
    assert A2F.coroot(1) == (2, 2)
    assert [(o.nodes, o.r) for o in D4T.orbits] == [((1, 3, 4), 3), ((2,), 1)]
    assert D4T.order == 3 and A4F.order == 2


def test_sigma_parsing():
    a4 = parse_type("A4")
    assert parse_sigma(a4, "(1 4)(2 3)") == parse_sigma(a4, "flip") == (4, 3, 2, 1)
    assert cycle_notation((4, 3, 2, 1)) == "(1 4)(2 3)"
    with pytest.raises(ValueError):
        build_folding(parse_type("A3"), parse_sigma(parse_type("A3"), "(1 2)"))
    with pytest.raises(ValueError):
        parse_sigma(parse_type("A3"), "triality")
    with pytest.raises(ValueError):
        parse_sigma(a4, "1 4")


def test_lift_examples():
    assert lift_word(A4F, (1, 2, 1, 2)) == (1, 4, 2, 3, 2, 1, 4, 2, 3, 2)
    assert lift_word(A4F, (2, 1, 2, 1)) == (2, 3, 2, 1, 4, 2, 3, 2, 1, 4)
    assert lift_word(A2F, (1,)) == (1, 2, 1)
    assert lift_word(A2F, (1,), "descending") == (2, 1, 2)
    assert fold_word(A4F, (1, 4, 2, 3, 2, 1, 4, 2, 3, 2)) == (1, 2, 1, 2)
    with pytest.raises(ValueError):
        fold_word(A4F, (1, 2, 3, 4, 1, 2, 3, 1, 2, 1))
    with pytest.raises(ValueError):
        lift_word(A4F, (1, 2, 1))


def test_block_pattern_a4():
    word = (1, 4, 2, 3, 2, 1, 4, 2, 3, 2)
    assert is_block_constant(A4F, LusztigDatum(A4F.root, word, (1, 1, 2, 2, 2, 0, 0, 3, 3, 3)))
    assert not is_block_constant(A4F, LusztigDatum(A4F.root, word, (1, 1, 2, 2, 2, 0, 0, 3, 4, 3)))
    folded = fold_datum(A4F, LusztigDatum(A4F.root, word, (1, 1, 2, 2, 2, 0, 0, 3, 3, 3)))
    assert folded.word == (1, 2, 1, 2) and folded.values == (1, 2, 0, 3)
    assert unfold_datum(A4F, folded).values == (1, 1, 2, 2, 2, 0, 0, 3, 3, 3)
    with pytest.raises(NotSigmaInvariant):
        fold_datum(A4F, LusztigDatum(A4F.root, word, (1, 0, 0, 0, 0, 0, 0, 0, 0, 0)))


def test_a2_coweights_match_under_embedding():
    for n in range(4):
        d = LusztigDatum(A2F.root, (1, 2, 1), (n, n, n))
        folded = fold_datum(A2F, d)
        assert folded.values == (n,)
        assert coweight_of(d) == A2F.embed(coweight_of(folded)) == (-2 * n, -2 * n)


def test_sigma_invariance_examples():
    a2 = A2F.root
    assert not is_sigma_invariant(A2F, build_polytope(LusztigDatum(a2, (1, 2, 1), (1, 0, 1))))
    assert is_sigma_invariant(A2F, build_polytope(LusztigDatum(a2, (1, 2, 1), (1, 1, 1))))
    assert is_sigma_invariant(A2F, point_polytope(a2))


def test_theta_examples():
    p = build_polytope(LusztigDatum(A2F.root, (1, 2, 1), (1, 1, 1)))
    q = theta_P(A2F, p)
    assert set(q.vertices.values()) == {(0,), (-1,)}
    assert q.datum.values == (1,)
    assert set(theta_P(A2F, point_polytope(A2F.root)).vertices.values()) == {(0,)}
    with pytest.raises(NotSigmaInvariant):
        theta_P(A2F, build_polytope(LusztigDatum(A2F.root, (1, 2, 1), (1, 0, 1))))

    p = build_polytope(LusztigDatum(A3F.root, (1, 3, 2, 1, 3, 2), (1, 1, 0, 0, 0, 0)))
    q = theta_P(A3F, p)
    assert q.datum.values == (1, 0, 0, 0)
    nonzero = {w.word for w, mu in q.items() if mu != (0, 0)}
    assert nonzero == {(1,), (1, 2), (1, 2, 1), (1, 2, 1, 2)}
    assert all(mu == (-1, 0) for w, mu in q.items() if w.word in nonzero)


def test_folded_transport_examples():
    d = LusztigDatum(A3F.folded, (1, 2, 1, 2), (1, 0, 0, 0))
    assert folded_transport(A3F, d, (2, 1, 2, 1)).values == (0, 0, 0, 1)
    z = LusztigDatum.zero(A3F.folded, (1, 2, 1, 2))
    assert folded_transport(A3F, z, (2, 1, 2, 1)).values == (0, 0, 0, 0)
    assert folded_transport(A3F, d, (1, 2, 1, 2)) == d


def test_folded_transport_g2():
    d = LusztigDatum(D4T.folded, (1, 2, 1, 2, 1, 2), (1, 2, 0, 1, 3, 0))
    moved = folded_transport(D4T, d, (2, 1, 2, 1, 2, 1))
    assert folded_transport(D4T, moved, d.word) == d
    assert folded_transport(D4T, d, d.word, "descending") == d
    assert moved == folded_transport(D4T, d, (2, 1, 2, 1, 2, 1), "descending")


def test_inconsistency_is_an_error_type():
    assert issubclass(FoldingInconsistency, RuntimeError)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([A2F, A3F, A4F, D4T]), st.data())
def test_apply_sigma_is_an_action(f, data):
    root = f.root
    words = sorted(word_graph(root, longest_element(root)[0].word))
    word = data.draw(st.sampled_from(words))
    values = tuple(data.draw(st.lists(st.integers(0, 2), min_size=len(word), max_size=len(word))))
    p = build_polytope(LusztigDatum(root, word, values))
    q = p
    for _ in range(f.order):
        q = apply_sigma(f, q)
    assert q == p
    assert is_sigma_invariant(f, p) == (apply_sigma(f, p) == p)


@settings(max_examples=25, deadline=None)
@given(st.sampled_from([A3F, A4F, D4T]), st.data())
def test_block_constant_iff_invariant_random(f, data):
    folded_words = sorted(word_graph(f.folded, longest_element(f.folded)[0].word))
    word_sigma = data.draw(st.sampled_from(folded_words))
    values = tuple(data.draw(st.lists(st.integers(0, 2), min_size=len(word_sigma), max_size=len(word_sigma))))
    lifted = unfold_datum(f, LusztigDatum(f.folded, word_sigma, values))
    p = build_polytope(lifted)
    assert is_sigma_invariant(f, p)
    # the same polytope, read on another lifted word, stays block-constant
    other = data.draw(st.sampled_from(folded_words))
    moved = transport(lifted, lift_word(f, other))
    assert is_block_constant(f, moved)
    # theta_P reproduces the folded datum on the original word
    assert theta_P(f, p).datum.values == values


def test_block_criterion_exhaustive_small_a3():
    word = lift_word(A3F, (1, 2, 1, 2))
    for nu in [(-1, -1, -1), (-2, -2, -2), (-2, -1, -2), (-1, -2, -1)]:
        for d in enumerate_data(A3F.root, word, nu):
            assert is_block_constant(A3F, d) == is_sigma_invariant(A3F, build_polytope(d))


def test_build_folded_polytope_matches_theta():
    d = LusztigDatum(A4F.folded, (1, 2, 1, 2), (1, 2, 0, 3))
    q = build_folded_polytope(A4F, d)
    assert q.datum == d
    assert q.coweight == coweight_of(d)
