import math
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from foldmv.lusztig import LusztigDatum, UnsupportedMove, coweight_of, transport, tropical_move, vertex_chain
from foldmv.root_datum import parse_type
from foldmv.weyl import BraidMove, braid_moves, longest_element, word_graph

A2 = parse_type("A2")


def valuation_oracle(a: int, b: int, c: int, seed: int) -> tuple[int, int, int]:
    """Evaluate the positive rational transition map for a length-3 braid
    move at b_k = c_k t^{n_k} and read valuations from log|x| / log t."""
    rng = random.Random(seed)
    t = Fraction(1, 10**12)
    x, y, z = (Fraction(rng.randint(1, 9)) * t**n for n in (a, b, c))
    out = (y * z / (x + z), x + z, x * y / (x + z))
    return tuple(round(math.log(float(v)) / math.log(float(t))) for v in out)


def test_window_examples():
    m = BraidMove(1, 3, (1, 2))
    assert tropical_move(LusztigDatum(A2, (1, 2, 1), (0, 0, 0)), m).values == (0, 0, 0)
    for n in range(5):
        assert tropical_move(LusztigDatum(A2, (1, 2, 1), (n, 0, 0)), m).values == (0, 0, n)
    assert tropical_move(LusztigDatum(A2, (1, 2, 1), (1, 0, 2)), m).values == (1, 1, 0)


@given(st.integers(0, 8), st.integers(0, 8), st.integers(0, 8), st.integers(0, 100))
def test_length_three_move_matches_rational_map(a, b, c, seed):
    moved = tropical_move(LusztigDatum(A2, (1, 2, 1), (a, b, c)), BraidMove(1, 3, (1, 2)))
    assert moved.values == valuation_oracle(a, b, c, seed)


def test_transport_examples():
    d = LusztigDatum(A2, (1, 2, 1), (1, 0, 1))
    assert transport(d, (2, 1, 2)) == LusztigDatum(A2, (2, 1, 2), (0, 1, 0))
    assert transport(d, (1, 2, 1)) == d
    d = LusztigDatum(A2, (1, 2, 1), (1, 1, 1))
    assert transport(d, (2, 1, 2)).values == (1, 1, 1)


def test_coweight_examples():
    assert coweight_of(LusztigDatum(A2, (1, 2, 1), (1, 0, 1))) == (-1, -1)
    assert coweight_of(LusztigDatum(A2, (1, 2, 1), (1, 1, 1))) == (-2, -2)
    assert coweight_of(LusztigDatum.zero(A2, (1, 2, 1))) == (0, 0)


def test_vertex_chain_steps():
    chain = vertex_chain(LusztigDatum(A2, (1, 2, 1), (1, 1, 1)))
    assert chain == [(0, 0), (-1, 0), (-2, -1), (-2, -2)]


def test_invalid_data():
    with pytest.raises(ValueError):
        LusztigDatum(A2, (1, 2, 1), (1, -1, 0))
    with pytest.raises(ValueError):
        LusztigDatum(A2, (1, 2, 1), (1, 1))
    with pytest.raises(ValueError):
        LusztigDatum(A2, (1, 1, 2), (0, 0, 0)).validate()


@pytest.mark.parametrize("name", ["B2", "G2"])
def test_non_simply_laced_moves_refused(name):
    root = parse_type(name)
    w0 = longest_element(root)[0]
    d = LusztigDatum.zero(root, w0.word)
    (move,) = braid_moves(root, w0.word)
    with pytest.raises(UnsupportedMove):
        tropical_move(d, move)


def _words(name):
    root = parse_type(name)
    return root, sorted(word_graph(root, longest_element(root)[0].word))


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(["A2", "A3", "A4", "D4"]), st.data())
def test_transport_preserves_coweight_and_round_trips(name, data):
    root, words = _words(name)
    src = data.draw(st.sampled_from(words))
    dst = data.draw(st.sampled_from(words))
    values = tuple(data.draw(st.lists(st.integers(0, 4), min_size=len(src), max_size=len(src))))
    d = LusztigDatum(root, src, values)
    moved = transport(d, dst)
    assert all(v >= 0 for v in moved.values)
    assert coweight_of(moved) == coweight_of(d)
    assert vertex_chain(moved)[-1] == vertex_chain(d)[-1]
    assert transport(moved, src) == d
