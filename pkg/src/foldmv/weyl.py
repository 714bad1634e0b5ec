"""Weyl group elements, reduced words and the braid-move graph."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .root_datum import (
    Coweight,
    RootDatum,
    WeylElement,
    element_of,
    identity_element,
    is_nonnegative,
    is_reduced,
    positive_coroots,
    reflection_matrix,
)

__all__ = [
    "BraidMove",
    "CapExceeded",
    "WeylElement",
    "all_elements",
    "all_reduced_words",
    "apply_move",
    "braid_moves",
    "braid_order",
    "braid_path",
    "coroot_sequence",
    "element_of",
    "is_reduced",
    "longest_element",
    "replay",
    "word_graph",
]

DEFAULT_WORD_CAP = 100_000

ReducedWord = tuple[int, ...]


class CapExceeded(RuntimeError):
    pass


@dataclass(frozen=True)
class BraidMove:
    """Rewrite of the alternating window ``i j i ...`` (length ``order``) at
    1-based ``position`` into ``j i j ...``."""

    position: int
    order: int
    nodes: tuple[int, int]

    def window(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        i, j = self.nodes
        before = tuple(i if k % 2 == 0 else j for k in range(self.order))
        after = tuple(j if k % 2 == 0 else i for k in range(self.order))
        return before, after


def braid_order(datum: RootDatum, i: int, j: int) -> int:
    """``m_ij`` read off the Cartan matrix."""
    if i == j:
        return 1
    product = datum.cartan[i - 1][j - 1] * datum.cartan[j - 1][i - 1]
    return {0: 2, 1: 3, 2: 4, 3: 6}[product]


def apply_move(word: Sequence[int], move: BraidMove) -> ReducedWord:
    before, after = move.window()
    start = move.position - 1
    if tuple(word[start:start + move.order]) != before:
        raise ValueError(f"move {move} does not match word {tuple(word)}")
    return tuple(word[:start]) + after + tuple(word[start + move.order:])


def replay(word: Sequence[int], moves: Sequence[BraidMove]) -> ReducedWord:
    word = tuple(word)
    for move in moves:
        word = apply_move(word, move)
    return word


def braid_moves(datum: RootDatum, word: Sequence[int]) -> list[BraidMove]:
    """Every braid move applicable somewhere in ``word``."""
    moves = []
    for start in range(len(word) - 1):
        i, j = word[start], word[start + 1]
        if i == j:
            continue
        m = braid_order(datum, i, j)
        move = BraidMove(start + 1, m, (i, j))
        if tuple(word[start:start + m]) == move.window()[0]:
            moves.append(move)
    return moves


@lru_cache(maxsize=None)
def all_elements(datum: RootDatum) -> tuple[WeylElement, ...]:
    """Every element of W with its shortlex-first reduced word, in BFS order."""
    e = identity_element(datum)
    seen = {e.matrix: e}
    queue = deque([e])
    while queue:
        w = queue.popleft()
        for i in datum.nodes:
            # right multiplication by s_i lengthens w iff w(alpha_i^vee) > 0
            if not is_nonnegative(w(datum.simple_coroot(i))):
                continue
            v = w * WeylElement(datum, reflection_matrix(datum, i), (i,))
            if v.matrix not in seen:
                seen[v.matrix] = v
                queue.append(v)
    return tuple(seen.values())


@lru_cache(maxsize=None)
def longest_element(datum: RootDatum) -> tuple[WeylElement, int]:
    w = identity_element(datum)
    grown = True
    while grown:
        grown = False
        for i in datum.nodes:
            if is_nonnegative(w(datum.simple_coroot(i))):
                w = w * WeylElement(datum, reflection_matrix(datum, i), (i,))
                grown = True
                break
    return w, len(w.word)


def all_reduced_words(datum: RootDatum, w: WeylElement, cap: int = DEFAULT_WORD_CAP) -> set[ReducedWord]:
    """Every reduced word of ``w``, by recursion on right descents."""
    memo: dict = {}

    def words(v: WeylElement) -> list[ReducedWord]:
        if v.matrix in memo:
            return memo[v.matrix]
        if v.is_identity():
            return [()]
        out: list[ReducedWord] = []
        for i in datum.nodes:
            # i is a right descent of v iff v(alpha_i^vee) < 0
            if is_nonnegative(v(datum.simple_coroot(i))):
                continue
            u = v * WeylElement(datum, reflection_matrix(datum, i), (i,))
            for prefix in words(u):
                out.append(prefix + (i,))
                if len(out) > cap:
                    raise CapExceeded(f"more than {cap} reduced words")
        memo[v.matrix] = out
        return out

    return set(words(w))


def _check_reduced_w0(datum: RootDatum, word: Sequence[int]) -> None:
    w0, m = longest_element(datum)
    if len(word) != m or element_of(datum, word) != w0:
        raise ValueError(f"{tuple(word)} is not a reduced word of w0 in {datum.name}")


@lru_cache(maxsize=None)
def word_graph(datum: RootDatum, root: ReducedWord, cap: int = DEFAULT_WORD_CAP) -> dict:
    """BFS tree over reduced words reachable from ``root`` by braid moves.

    Maps each word to ``(parent, move)``; the root maps to ``(None, None)``.
    Insertion order is BFS order.
    """
    tree: dict = {root: (None, None)}
    queue = deque([root])
    while queue:
        word = queue.popleft()
        for move in braid_moves(datum, word):
            nxt = apply_move(word, move)
            if nxt not in tree:
                tree[nxt] = (word, move)
                if len(tree) > cap:
                    raise CapExceeded(f"more than {cap} reduced words reachable from {root}")
                queue.append(nxt)
    return tree


def _path_to(tree: dict, word: ReducedWord) -> list[BraidMove]:
    moves = []
    while True:
        parent, move = tree[word]
        if parent is None:
            break
        moves.append(move)
        word = parent
    moves.reverse()
    return moves


@lru_cache(maxsize=4096)
def braid_path(datum: RootDatum, src: ReducedWord, dst: ReducedWord) -> tuple[BraidMove, ...]:
    """A shortest sequence of braid moves turning ``src`` into ``dst``."""
    src, dst = tuple(src), tuple(dst)
    if not is_reduced(datum, src) or not is_reduced(datum, dst):
        raise ValueError("braid_path needs reduced words")
    if element_of(datum, src) != element_of(datum, dst):
        raise ValueError(f"{src} and {dst} represent different elements")
    if src == dst:
        return ()
    tree: dict = {src: (None, None)}
    queue = deque([src])
    while queue:
        word = queue.popleft()
        for move in braid_moves(datum, word):
            nxt = apply_move(word, move)
            if nxt in tree:
                continue
            tree[nxt] = (word, move)
            if nxt == dst:
                return tuple(_path_to(tree, dst))
            queue.append(nxt)
    raise AssertionError("braid graph disconnected")  # Matsumoto's theorem


@lru_cache(maxsize=None)
def coroot_sequence(datum: RootDatum, word: ReducedWord) -> tuple[Coweight, ...]:
    """``beta_k = w_{k-1}(alpha_{i_k}^vee)`` along ``word``."""
    out = []
    w = identity_element(datum)
    for i in word:
        out.append(w(datum.simple_coroot(i)))
        w = w * WeylElement(datum, reflection_matrix(datum, i), (i,))
    return tuple(out)


def prefixes(datum: RootDatum, word: Sequence[int]) -> Iterator[WeylElement]:
    """``w_0^i = e, w_1^i, ..., w_m^i``."""
    w = identity_element(datum)
    yield w
    for i in word:
        w = w * WeylElement(datum, reflection_matrix(datum, i), (i,))
        yield w


def positive_coroot_count(datum: RootDatum) -> int:
    return len(positive_coroots(datum))
