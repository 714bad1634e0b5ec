"""Lusztig data and their piecewise-linear transport along braid moves.

A Lusztig datum is a tuple ``n`` of naturals attached to a reduced word of
``w0``.  Its vertex chain is ``mu_e = 0`` and
``mu_{w_k} = mu_{w_{k-1}} - n_k * w_{k-1}(alpha_{i_k}^vee)``.

Braid moves act by the valuations of the rational substitutions on
``b``-coordinates: a commuting swap exchanges two entries, and a length-3
move sends ``(a, b, c)`` to ``(b + c - p, p, a + b - p)`` with
``p = min(a, c)``.  Moves of order 4 and 6 only occur in non-simply-laced
types; those are handled by unfolding (see :mod:`foldmv.folding`).
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .root_datum import Coweight, RootDatum, add, neg, scale, sub
from .weyl import BraidMove, ReducedWord, apply_move, braid_path, coroot_sequence, longest_element


class UnsupportedMove(ValueError):
    """Raised for braid moves of order 4 or 6; use folded transport instead."""


@dataclass(frozen=True)
class LusztigDatum:
    root: RootDatum
    word: ReducedWord
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "word", tuple(int(i) for i in self.word))
        object.__setattr__(self, "values", tuple(int(n) for n in self.values))
        if len(self.word) != len(self.values):
            raise ValueError(
                f"word has length {len(self.word)} but datum has {len(self.values)} entries"
            )
        if any(n < 0 for n in self.values):
            raise ValueError(f"negative entry in Lusztig datum {self.values}")

    @classmethod
    def zero(cls, root: RootDatum, word: Sequence[int]) -> "LusztigDatum":
        return cls(root, tuple(word), (0,) * len(word))

    def validate(self) -> "LusztigDatum":
        """Check that ``word`` is a reduced word of the longest element."""
        from .weyl import _check_reduced_w0

        _check_reduced_w0(self.root, self.word)
        return self


def tropical_move(datum: LusztigDatum, move: BraidMove) -> LusztigDatum:
    word = apply_move(datum.word, move)  # raises on mismatch
    values = list(datum.values)
    k = move.position - 1
    if move.order == 2:
        values[k], values[k + 1] = values[k + 1], values[k]
    elif move.order == 3:
        a, b, c = values[k:k + 3]
        p = min(a, c)
        values[k:k + 3] = [b + c - p, p, a + b - p]
    else:
        raise UnsupportedMove(
            f"order-{move.order} move at position {move.position}: use folded transport"
        )
    return LusztigDatum(datum.root, word, tuple(values))


def transport_along(datum: LusztigDatum, moves: Sequence[BraidMove]) -> LusztigDatum:
    for move in moves:
        datum = tropical_move(datum, move)
    return datum


def transport(datum: LusztigDatum, target: Sequence[int]) -> LusztigDatum:
    """The Lusztig transform from ``datum.word`` to ``target``."""
    target = tuple(target)
    if target == datum.word:
        return datum
    return transport_along(datum, braid_path(datum.root, datum.word, target))


def vertex_chain(datum: LusztigDatum) -> list[Coweight]:
    """``[mu_{w_0}, ..., mu_{w_m}]`` along ``datum.word``, starting at 0."""
    betas = coroot_sequence(datum.root, datum.word)
    mu = datum.root.zero()
    chain = [mu]
    for n, beta in zip(datum.values, betas):
        mu = sub(mu, scale(n, beta))
        chain.append(mu)
    return chain


def coweight_of(datum: LusztigDatum) -> Coweight:
    """``mu_{w0}`` of the polytope with this datum."""
    total = datum.root.zero()
    for n, beta in zip(datum.values, coroot_sequence(datum.root, datum.word)):
        total = add(total, scale(n, beta))
    return neg(total)


def default_word(root: RootDatum) -> ReducedWord:
    """The lexicographically greedy reduced word of ``w0``."""
    return longest_element(root)[0].word
