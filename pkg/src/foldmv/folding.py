"""Diagram automorphisms, the folded root datum, and folding of MV polytopes.

An orbit ``eta`` of ``sigma`` on the nodes gets the folded coroot
``alpha_eta^vee = 2^h * sum(alpha_i^vee for i in eta)`` where ``h = 1``
exactly when ``eta = {i, j}`` with ``a_ij = -1``.  The reflection ``s_eta``
is the longest element of the parabolic subgroup on ``eta``; its fixed
reduced expression (the *lift*) is

* ``(i,)`` for a singleton,
* the nodes in ascending order for a commuting orbit,
* ``(i, j, i)`` with ``i < j`` for an ``h = 1`` pair.

The ``"descending"`` convention reverses node order (``(j, i, j)`` for a
pair); both give reduced words of ``w0`` and must fold identically.

Folded coweights are kept in the folded simple-coroot basis; ``embed`` maps
them into the coweights of the unfolded group.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .lusztig import LusztigDatum, coweight_of, transport
from .polytope import MVPolytope, build_polytope, datum_along
from .root_datum import Coweight, RootDatum, WeylElement, element_of
from .weyl import ReducedWord, all_elements, longest_element

CONVENTIONS = ("ascending", "descending")


class NotSigmaInvariant(ValueError):
    pass


class FoldingInconsistency(RuntimeError):
    """Transport of a block-constant datum left the block-constant locus."""


@dataclass(frozen=True)
class Orbit:
    nodes: tuple[int, ...]
    h: int
    r: int

    def expression(self, convention: str = "ascending") -> tuple[int, ...]:
        nodes = self.nodes if convention == "ascending" else tuple(reversed(self.nodes))
        if self.h == 1:
            i, j = nodes
            return (i, j, i)
        return nodes


@dataclass(frozen=True)
class FoldingData:
    root: RootDatum
    sigma: tuple[int, ...]  # sigma[i - 1] = sigma(i)
    orbits: tuple[Orbit, ...]
    folded: RootDatum

    @property
    def order(self) -> int:
        k, perm = 1, self.sigma
        while any(perm[i] != i + 1 for i in range(len(perm))):
            perm = tuple(self.sigma[p - 1] for p in perm)
            k += 1
        return k

    def coroot(self, eta: int) -> Coweight:
        """``alpha_eta^vee`` as a coweight of the unfolded group."""
        orbit = self.orbits[eta - 1]
        return tuple(2**orbit.h if i + 1 in orbit.nodes else 0 for i in range(self.root.rank))

    def embed(self, nu: Sequence) -> Coweight:
        """Folded coweight (folded coroot basis) to unfolded coweight."""
        if len(nu) != self.folded.rank:
            raise ValueError("rank mismatch")
        out = [Fraction(0)] * self.root.rank
        for eta, c in enumerate(nu, start=1):
            for k, x in enumerate(self.coroot(eta)):
                out[k] += Fraction(c) * x
        return tuple(int(x) if x.denominator == 1 else x for x in out)

    def restrict(self, mu: Sequence) -> tuple:
        """Inverse of :meth:`embed`; coordinates may be half-integers when
        ``mu`` lies outside the folded coroot lattice."""
        if not self.is_invariant(mu):
            raise NotSigmaInvariant(f"{tuple(mu)} is not sigma-invariant")
        out = []
        for orbit in self.orbits:
            x = Fraction(mu[orbit.nodes[0] - 1], 2**orbit.h)
            out.append(int(x) if x.denominator == 1 else x)
        return tuple(out)

    def act(self, mu: Sequence) -> tuple:
        """``sigma(mu)``: coordinate of ``alpha_i^vee`` moves to ``alpha_{sigma(i)}^vee``."""
        out = [None] * len(mu)
        for i, x in enumerate(mu):
            out[self.sigma[i] - 1] = x
        return tuple(out)

    def is_invariant(self, mu: Sequence) -> bool:
        return tuple(mu) == self.act(mu)

    def act_on_element(self, w: WeylElement) -> WeylElement:
        """``sigma w sigma^{-1}``, computed on the word."""
        return element_of(self.root, tuple(self.sigma[i - 1] for i in w.word))


def _orbits(sigma: Sequence[int]) -> list[tuple[int, ...]]:
    seen: set[int] = set()
    out = []
    for start in range(1, len(sigma) + 1):
        if start in seen:
            continue
        orbit, i = [], start
        while i not in orbit:
            orbit.append(i)
            i = sigma[i - 1]
        seen.update(orbit)
        out.append(tuple(sorted(orbit)))
    return out


@lru_cache(maxsize=None)
def build_folding(root: RootDatum, sigma: tuple[int, ...]) -> FoldingData:
    sigma = tuple(int(s) for s in sigma)
    n = root.rank
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError(f"{sigma} is not a permutation of the nodes of {root.name}")
    if sigma == tuple(range(1, n + 1)):
        raise ValueError("sigma must be nontrivial")
    for i in range(n):
        for j in range(n):
            if root.cartan[sigma[i] - 1][sigma[j] - 1] != root.cartan[i][j]:
                raise ValueError(f"{sigma} is not a diagram automorphism of {root.name}")
    orbits = []
    for nodes in _orbits(sigma):
        pairs_adjacent = [
            (i, j) for i in nodes for j in nodes if i < j and root.cartan[i - 1][j - 1] != 0
        ]
        if pairs_adjacent:
            if len(nodes) != 2 or root.cartan[nodes[0] - 1][nodes[1] - 1] != -1:
                raise ValueError(f"unsupported orbit {nodes}")
            orbits.append(Orbit(nodes, 1, 3))
        else:
            orbits.append(Orbit(nodes, 0, len(nodes)))
    k = len(orbits)
    cartan = []
    for a in orbits:
        row = []
        for b in orbits:
            # <alpha_a^vee, alpha_j> for any j in b
            j = b.nodes[0]
            row.append(2**a.h * sum(root.cartan[i - 1][j - 1] for i in a.nodes))
        cartan.append(row)
    folded = RootDatum.from_cartan(cartan)
    return FoldingData(root, sigma, tuple(orbits), folded)


_KEYWORDS = ("flip", "triality")


def sigma_from_keyword(root: RootDatum, keyword: str) -> tuple[int, ...]:
    """Permutation for ``flip`` (order 2) or ``triality`` (D4, order 3)."""
    n = root.rank
    kind = root.name[0]
    if keyword == "flip":
        if kind == "A":
            return tuple(n + 1 - i for i in range(1, n + 1))
        if kind == "D":
            return tuple(range(1, n - 1)) + (n, n - 1)
        if root.name == "E6":
            return (6, 2, 5, 4, 3, 1)
    elif keyword == "triality" and root.name == "D4":
        return (3, 2, 4, 1)
    raise ValueError(f"no {keyword!r} automorphism for {root.name}")


def parse_sigma(root: RootDatum, text: str) -> tuple[int, ...]:
    """``flip``, ``triality`` or cycle notation such as ``(1 4)(2 3)``."""
    text = text.strip()
    if text in _KEYWORDS:
        return sigma_from_keyword(root, text)
    cycles = re.findall(r"\(([^()]*)\)", text)
    if not cycles or re.sub(r"\([^()]*\)", "", text).strip():
        raise ValueError(f"cannot parse permutation {text!r}")
    perm = list(range(1, root.rank + 1))
    for cycle in cycles:
        nodes = [int(x) for x in re.split(r"[\s,]+", cycle.strip()) if x]
        for a, b in zip(nodes, nodes[1:] + nodes[:1]):
            if not 1 <= a <= root.rank:
                raise ValueError(f"node {a} out of range")
            perm[a - 1] = b
    if sorted(perm) != list(range(1, root.rank + 1)):
        raise ValueError(f"{text!r} is not a permutation")
    return tuple(perm)


def cycle_notation(sigma: Sequence[int]) -> str:
    parts = []
    for orbit in _orbits(sigma):
        if len(orbit) == 1:
            continue
        cycle, i = [orbit[0]], sigma[orbit[0] - 1]
        while i != orbit[0]:
            cycle.append(i)
            i = sigma[i - 1]
        parts.append("(" + " ".join(map(str, cycle)) + ")")
    return "".join(parts)


# -- words ---------------------------------------------------------------------


def lift_word(folding: FoldingData, word_sigma: Sequence[int], convention: str = "ascending") -> ReducedWord:
    """Concatenate the fixed expressions of ``s_eta`` along a folded word of ``w0``."""
    _check_convention(convention)
    word_sigma = tuple(word_sigma)
    LusztigDatum.zero(folding.folded, word_sigma).validate()
    out: tuple[int, ...] = ()
    for eta in word_sigma:
        out += folding.orbits[eta - 1].expression(convention)
    LusztigDatum.zero(folding.root, out).validate()
    return out


def fold_word(folding: FoldingData, word: Sequence[int], convention: str = "ascending") -> ReducedWord:
    """Inverse of :func:`lift_word`; raises if ``word`` is not a lift."""
    _check_convention(convention)
    word = tuple(word)
    blocks = {o.expression(convention): eta for eta, o in enumerate(folding.orbits, start=1)}
    out, k = [], 0
    while k < len(word):
        for expr, eta in blocks.items():
            if word[k:k + len(expr)] == expr:
                out.append(eta)
                k += len(expr)
                break
        else:
            raise ValueError(f"{word} is not a lifted word ({convention} convention)")
    return tuple(out)


def block_lengths(folding: FoldingData, word_sigma: Sequence[int]) -> list[int]:
    return [folding.orbits[eta - 1].r for eta in word_sigma]


def is_block_constant(folding: FoldingData, datum: LusztigDatum, convention: str = "ascending") -> bool:
    word_sigma = fold_word(folding, datum.word, convention)
    k = 0
    for r in block_lengths(folding, word_sigma):
        if len(set(datum.values[k:k + r])) != 1:
            return False
        k += r
    return True


def fold_datum(folding: FoldingData, datum: LusztigDatum, convention: str = "ascending") -> LusztigDatum:
    if not is_block_constant(folding, datum, convention):
        raise NotSigmaInvariant(f"{datum.values} is not block-constant on {datum.word}")
    word_sigma = fold_word(folding, datum.word, convention)
    values, k = [], 0
    for r in block_lengths(folding, word_sigma):
        values.append(datum.values[k])
        k += r
    return LusztigDatum(folding.folded, word_sigma, tuple(values))


def unfold_datum(folding: FoldingData, folded: LusztigDatum, convention: str = "ascending") -> LusztigDatum:
    word = lift_word(folding, folded.word, convention)
    values: list[int] = []
    for eta, n in zip(folded.word, folded.values):
        values.extend([n] * folding.orbits[eta - 1].r)
    return LusztigDatum(folding.root, word, tuple(values))


def folded_transport(
    folding: FoldingData, folded: LusztigDatum, target: Sequence[int], convention: str = "ascending"
) -> LusztigDatum:
    """Transport a folded datum by unfolding, transporting in the unfolded
    group and folding back."""
    target = tuple(target)
    lifted_target = lift_word(folding, target, convention)
    moved = transport(unfold_datum(folding, folded, convention), lifted_target)
    if not is_block_constant(folding, moved, convention):
        raise FoldingInconsistency(
            f"transport of {folded.values} to {target} gave non-block-constant {moved.values}"
        )
    return fold_datum(folding, moved, convention)


def _check_convention(convention: str) -> None:
    if convention not in CONVENTIONS:
        raise ValueError(f"unknown lift convention {convention!r}")


# -- polytopes -----------------------------------------------------------------


def apply_sigma(folding: FoldingData, polytope: MVPolytope) -> MVPolytope:
    """The polytope with vertex map ``w -> sigma(mu_{sigma^{-1}(w)})``."""
    moved = {folding.act_on_element(w): folding.act(mu) for w, mu in polytope.items()}
    vertices = {w: moved[w] for w in polytope.vertices}
    return MVPolytope(polytope.root, vertices, polytope.base_word, polytope.datum)


def is_sigma_invariant(folding: FoldingData, polytope: MVPolytope) -> bool:
    """``sigma(mu_w) = mu_{sigma(w)}`` for every ``w``."""
    return all(
        polytope.vertices[folding.act_on_element(w)] == folding.act(mu)
        for w, mu in polytope.items()
    )


@lru_cache(maxsize=None)
def folded_elements(folding: FoldingData) -> tuple[tuple[WeylElement, WeylElement], ...]:
    """Pairs ``(w_sigma, w)``: each folded Weyl element and its image in W."""
    out = []
    for w_sigma in all_elements(folding.folded):
        lifted: tuple[int, ...] = ()
        for eta in w_sigma.word:
            lifted += folding.orbits[eta - 1].expression()
        out.append((w_sigma, element_of(folding.root, lifted)))
    return tuple(out)


def default_folded_word(folding: FoldingData) -> ReducedWord:
    return longest_element(folding.folded)[0].word


def theta_P(folding: FoldingData, polytope: MVPolytope, convention: str = "ascending") -> MVPolytope:
    """``P -> P^sigma``: restrict the vertex map to ``W^sigma``."""
    if not is_sigma_invariant(folding, polytope):
        raise NotSigmaInvariant("polytope is not sigma-invariant")
    vertices = {}
    for w_sigma, w in folded_elements(folding):
        nu = folding.restrict(polytope.vertices[w])
        if any(isinstance(x, Fraction) for x in nu):
            raise FoldingInconsistency(f"vertex {polytope.vertices[w]} not in folded coroot lattice")
        vertices[w_sigma] = nu
    try:
        word_sigma = fold_word(folding, polytope.base_word, convention)
    except ValueError:
        word_sigma = default_folded_word(folding)
    lifted = lift_word(folding, word_sigma, convention)
    datum = fold_datum(folding, datum_along(polytope, lifted), convention)
    return MVPolytope(folding.folded, vertices, word_sigma, datum)


def build_folded_polytope(folding: FoldingData, folded: LusztigDatum, limit: int | None = None) -> MVPolytope:
    """Folded MV polytope of a folded datum, via its unfolding."""
    return theta_P(folding, build_polytope(unfold_datum(folding, folded), limit))


def folded_coweight(folding: FoldingData, folded: LusztigDatum) -> Coweight:
    return coweight_of(folded)
