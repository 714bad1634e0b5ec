"""MV polytopes as dense vertex maps ``w -> mu_w`` over the Weyl group."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Sequence

from .lusztig import LusztigDatum, tropical_move, vertex_chain
from .root_datum import (
    Coweight,
    RootDatum,
    WeylElement,
    add,
    is_nonnegative,
    leq,
    pair,
    sub,
    weight_orbit,
)
from .weyl import CapExceeded, ReducedWord, all_elements, coroot_sequence, longest_element, prefixes, word_graph

# Largest Weyl group for which dense vertex maps are built without opting in.
DENSE_VERTEX_LIMIT = 192

DEFAULT_DATA_CAP = 10**6


class CorruptVertexMap(ValueError):
    pass


@dataclass(frozen=True)
class MVPolytope:
    """Vertex map normalized so that ``mu_e = 0``.

    Equality compares vertex maps only; ``base_word`` and ``datum`` record how
    the polytope was built.
    """

    root: RootDatum
    vertices: dict[WeylElement, Coweight]
    base_word: ReducedWord = field(compare=False)
    datum: LusztigDatum = field(compare=False)

    def __hash__(self) -> int:
        return hash(frozenset(self.vertices.items()))

    def vertex(self, w: WeylElement) -> Coweight:
        return self.vertices[w]

    @property
    def coweight(self) -> Coweight:
        return self.vertices[longest_element(self.root)[0]]

    def distinct_vertices(self) -> list[Coweight]:
        return sorted(set(self.vertices.values()), reverse=True)

    def items(self) -> Iterator[tuple[WeylElement, Coweight]]:
        return iter(self.vertices.items())


@lru_cache(maxsize=None)
def _prefix_elements(root: RootDatum, word: ReducedWord) -> tuple[WeylElement, ...]:
    return tuple(prefixes(root, word))


@lru_cache(maxsize=None)
def _build_plan(root: RootDatum, base: ReducedWord):
    """Braid-move steps from ``base`` reaching a set of words whose prefixes
    cover W.  Returns ``(steps, covering)`` where ``steps`` lists
    ``(word, parent, move)`` in BFS order."""
    tree = word_graph(root, base)
    remaining = {w.matrix for w in all_elements(root)}
    covering = []
    for word in tree:
        fresh = {w.matrix for w in _prefix_elements(root, word)} & remaining
        if fresh:
            covering.append(word)
            remaining -= fresh
            if not remaining:
                break
    if remaining:
        raise AssertionError("reduced words of w0 do not cover W")
    needed = set()
    for word in covering:
        while word is not None and word not in needed:
            needed.add(word)
            word = tree[word][0]
    steps = [(word, tree[word][0], tree[word][1]) for word in tree if word in needed and word != base]
    return tuple(steps), tuple(covering)


def _check_size(root: RootDatum, limit: int | None) -> None:
    limit = DENSE_VERTEX_LIMIT if limit is None else limit
    size = len(all_elements(root))
    if size > limit:
        raise ValueError(
            f"|W({root.name})| = {size} exceeds the dense vertex limit {limit}; pass a larger limit"
        )


def build_polytope(datum: LusztigDatum, limit: int | None = None) -> MVPolytope:
    """Vertices of the MV polytope with Lusztig datum ``datum``.

    Each ``mu_w`` is read from the vertex chain of a reduced word of ``w0``
    having a reduced word of ``w`` as a prefix, after transporting the datum
    to that word.
    """
    root = datum.root
    _check_size(root, limit)
    datum.validate()
    steps, covering = _build_plan(root, datum.word)
    data = {datum.word: datum}
    for word, parent, move in steps:
        data[word] = tropical_move(data[parent], move)
    found: dict[WeylElement, Coweight] = {}
    for word in covering:
        for w, mu in zip(_prefix_elements(root, word), vertex_chain(data[word])):
            found.setdefault(w, mu)
    vertices = {w: found[w] for w in all_elements(root)}
    return MVPolytope(root, vertices, datum.word, datum)


def vertices_via_all_words(datum: LusztigDatum) -> dict[WeylElement, set[Coweight]]:
    """Every value of ``mu_w`` obtained over all reduced words of ``w0``; used to
    test that the choice of word does not matter."""
    root = datum.root
    tree = word_graph(root, datum.word)
    data = {datum.word: datum}
    seen: dict[WeylElement, set[Coweight]] = {}
    for word, (parent, move) in tree.items():
        if parent is not None:
            data[word] = tropical_move(data[parent], move)
        for w, mu in zip(_prefix_elements(root, word), vertex_chain(data[word])):
            seen.setdefault(w, set()).add(mu)
    return seen


def datum_along(polytope: MVPolytope, word: Sequence[int]) -> LusztigDatum:
    """Read the Lusztig datum of ``polytope`` along a reduced word of ``w0``."""
    root = polytope.root
    word = tuple(word)
    LusztigDatum.zero(root, word).validate()
    elems = _prefix_elements(root, word)
    values = []
    for k, beta in enumerate(coroot_sequence(root, word)):
        step = sub(polytope.vertices[elems[k]], polytope.vertices[elems[k + 1]])
        coords = [c for c in range(root.rank) if beta[c] != 0]
        n, rem = divmod(step[coords[0]], beta[coords[0]])
        if rem or n < 0 or tuple(n * b for b in beta) != step:
            raise CorruptVertexMap(
                f"edge {k + 1} difference {step} is not a nonnegative multiple of {beta}"
            )
        values.append(n)
    return LusztigDatum(root, word, tuple(values))


def _check_dominant(root: RootDatum, lam: Sequence) -> None:
    for i in root.nodes:
        if sum(Fraction(m) * root.cartan[k][i - 1] for k, m in enumerate(lam)) < 0:
            raise ValueError(f"lambda = {tuple(lam)} is not dominant (fails at node {i})")


def lies_in_weyl_hull(polytope: MVPolytope, lam: Sequence) -> bool:
    """``lam + P`` inside ``Conv(W lam)``, tested vertexwise as
    ``w^{-1}(mu_w + lam) <= lam`` for every ``w``.

    ``lam`` may have rational coordinates (folded coweights need not lie in
    the folded coroot lattice).
    """
    root = polytope.root
    lam = tuple(Fraction(x) for x in lam)
    if len(lam) != root.rank:
        raise ValueError("rank mismatch")
    _check_dominant(root, lam)
    for w, mu in polytope.vertices.items():
        shifted = tuple(Fraction(a) + b for a, b in zip(mu, lam))
        if not is_nonnegative(sub(lam, w.inverse()(shifted))):
            return False
    return True


def lies_in_weyl_hull_brute(polytope: MVPolytope, lam: Coweight) -> bool:
    """Check every shifted vertex against every facet ``<x, u lambda_i> <= <lam, lambda_i>``."""
    root = polytope.root
    _check_dominant(root, lam)
    facets = []
    for i in root.nodes:
        fw = root.fundamental_weights[i - 1]
        bound = pair(lam, fw)
        facets.extend((xi, bound) for xi in weight_orbit(root, fw))
    for mu in set(polytope.vertices.values()):
        x = add(mu, lam)
        if any(pair(x, xi) > bound for xi, bound in facets):
            return False
    return True


def is_pseudo_weyl(polytope: MVPolytope) -> bool:
    """``mu_v <=_w mu_w`` for all ``v, w``."""
    for w, mu_w in polytope.vertices.items():
        inv = w.inverse()
        top = inv(mu_w)
        for mu_v in polytope.vertices.values():
            if not leq(inv(mu_v), top):
                return False
    return True


# -- enumeration -------------------------------------------------------------


def _suffix_support(betas: Sequence[Coweight], rank: int) -> list[frozenset[int]]:
    out = [frozenset()] * (len(betas) + 1)
    acc: set[int] = set()
    for k in range(len(betas) - 1, -1, -1):
        acc |= {c for c in range(rank) if betas[k][c] > 0}
        out[k] = frozenset(acc)
    return out


def enumerate_data(
    root: RootDatum, word: Sequence[int], nu: Coweight, cap: int = DEFAULT_DATA_CAP
) -> list[LusztigDatum]:
    """All Lusztig data on ``word`` with coweight ``nu``, in lexicographic order."""
    word = tuple(word)
    nu = root.check_coweight(nu)
    target = tuple(-x for x in nu)
    if not is_nonnegative(target):
        return []
    betas = coroot_sequence(root, word)
    support = _suffix_support(betas, root.rank)
    m = len(word)
    out: list[LusztigDatum] = []
    values = [0] * m

    def dfs(k: int, residual: Coweight) -> None:
        if any(residual[c] > 0 and c not in support[k] for c in range(root.rank)):
            return
        if k == m:
            out.append(LusztigDatum(root, word, tuple(values)))
            if len(out) > cap:
                raise CapExceeded(
                    f"more than {cap} data; exact count {count_data(root, word, nu)}"
                )
            return
        beta = betas[k]
        top = min(residual[c] // beta[c] for c in range(root.rank) if beta[c] > 0)
        for n in range(top + 1):
            values[k] = n
            dfs(k + 1, tuple(r - n * b for r, b in zip(residual, beta)))
        values[k] = 0

    dfs(0, target)
    return out


def count_data(root: RootDatum, word: Sequence[int], nu: Coweight) -> int:
    """Number of data of coweight ``nu`` (Kostant partition function), by DP."""
    betas = coroot_sequence(root, tuple(word))
    target = tuple(-x for x in root.check_coweight(nu))
    if not is_nonnegative(target):
        return 0

    @lru_cache(maxsize=None)
    def count(k: int, residual: Coweight) -> int:
        if k == len(betas):
            return int(not any(residual))
        beta = betas[k]
        total, r = 0, residual
        while is_nonnegative(r):
            total += count(k + 1, r)
            r = sub(r, beta)
        return total

    return count(0, target)


def point_polytope(root: RootDatum, word: Sequence[int] | None = None) -> MVPolytope:
    from .lusztig import default_word

    return build_polytope(LusztigDatum.zero(root, word or default_word(root)))

