"""Formal characters, weight multiplicities and the twining character.

Representations live on the dual side: ``V(lambda)`` is a representation of
the Langlands dual group, so its weights are coweights of ``G`` and its
simple roots are the simple coroots of ``G``.  A :class:`CharacterSystem`
records that dual root system.  For a folding, the simple roots are the
folded coroots ``alpha_eta^vee`` and the simple coroots are the restricted
roots ``alpha_eta``.

Characters are keyed by coweights of the *unfolded* group in every case, so
a twining character and a folded character can be compared entry by entry.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Mapping, Sequence

from .folding import FoldingData, default_folded_word, lift_word
from .lusztig import LusztigDatum, default_word
from .polytope import build_polytope, enumerate_data, lies_in_weyl_hull
from .root_datum import Coweight, RootDatum, pair, sub, weights_of
from .weyl import coroot_sequence


def _sort_key(mu: Coweight) -> tuple:
    return (-sum(mu), tuple(-x for x in mu))


@dataclass(frozen=True)
class FormalCharacter:
    """Finitely supported integer function on coweights (zeros dropped)."""

    terms: Mapping[Coweight, int]

    def __post_init__(self) -> None:
        clean = {tuple(k): int(v) for k, v in self.terms.items() if v != 0}
        object.__setattr__(self, "terms", dict(sorted(clean.items(), key=lambda kv: _sort_key(kv[0]))))

    def __getitem__(self, mu: Sequence[int]) -> int:
        return self.terms.get(tuple(mu), 0)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FormalCharacter):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def items(self):
        return self.terms.items()

    @property
    def support(self) -> list[Coweight]:
        return list(self.terms)

    @property
    def dimension(self) -> int:
        return sum(self.terms.values())


@dataclass(frozen=True)
class CharacterSystem:
    """Dual-side root system.

    ``betas[j]`` is simple root ``j`` (a coweight of ``ambient``),
    ``gammas[i]`` is simple coroot ``i`` (a weight vector of ``ambient``), and
    ``cartan[i][j] = <betas[j], gammas[i]>``.
    """

    name: str
    ambient: RootDatum
    betas: tuple[Coweight, ...]
    gammas: tuple[tuple[Fraction, ...], ...]
    cartan: tuple[tuple[int, ...], ...] = field(init=False)

    def __post_init__(self) -> None:
        cartan = tuple(
            tuple(int(pair(beta, gamma)) for beta in self.betas) for gamma in self.gammas
        )
        object.__setattr__(self, "cartan", cartan)

    @classmethod
    def of_group(cls, root: RootDatum) -> "CharacterSystem":
        return cls(
            f"{root.name}^vee",
            root,
            tuple(root.simple_coroot(i) for i in root.nodes),
            tuple(root.simple_root(i) for i in root.nodes),
        )

    @classmethod
    def of_folding(cls, folding: FoldingData) -> "CharacterSystem":
        root = folding.root
        return cls(
            f"{folding.folded.name}^vee",
            root,
            tuple(folding.coroot(eta) for eta in range(1, len(folding.orbits) + 1)),
            tuple(root.simple_root(orbit.nodes[0]) for orbit in folding.orbits),
        )

    @property
    def rank(self) -> int:
        return len(self.betas)

    def labels(self, mu: Sequence) -> tuple[int, ...]:
        out = []
        for gamma in self.gammas:
            x = pair(mu, gamma)
            if x.denominator != 1:
                raise ValueError(f"{tuple(mu)} is not integral for {self.name}")
            out.append(int(x))
        return tuple(out)

    def is_dominant(self, mu: Sequence) -> bool:
        return all(x >= 0 for x in self.labels(mu))

    def lower(self, lam: Coweight, depth: Sequence[int]) -> Coweight:
        """``lam - sum(depth_j * betas[j])``."""
        out = list(lam)
        for k, beta in zip(depth, self.betas):
            for c, b in enumerate(beta):
                out[c] -= k * b
        return tuple(out)

    @cached_property
    def _norms(self) -> tuple[Fraction, ...]:
        # (beta_i, beta_i) / 2, symmetrizing cartan; smallest set to 1
        n = self.rank
        eps: list[Fraction | None] = [None] * n
        for start in range(n):
            if eps[start] is not None:
                continue
            eps[start] = Fraction(1)
            queue = deque([start])
            while queue:
                i = queue.popleft()
                for j in range(n):
                    if i != j and self.cartan[i][j] and eps[j] is None:
                        eps[j] = eps[i] * self.cartan[i][j] / self.cartan[j][i]
                        queue.append(j)
        low = min(eps)
        return tuple(e / low for e in eps)

    @cached_property
    def form(self) -> tuple[tuple[Fraction, ...], ...]:
        """``(beta_i, beta_j)`` with short simple roots of squared length 2."""
        eps = self._norms
        return tuple(
            tuple(Fraction(self.cartan[i][j]) * eps[i] for j in range(self.rank))
            for i in range(self.rank)
        )

    def inner(self, x: Sequence, y: Sequence) -> Fraction:
        """Form on vectors in simple-root coordinates."""
        return sum(
            (Fraction(x[i]) * self.form[i][j] * y[j] for i in range(self.rank) for j in range(self.rank)),
            Fraction(0),
        )

    @cached_property
    def _cartan_inverse(self) -> tuple[tuple[Fraction, ...], ...]:
        n = self.rank
        m = [[Fraction(self.cartan[i][j]) for j in range(n)] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
        for c in range(n):
            p = next(r for r in range(c, n) if m[r][c] != 0)
            m[c], m[p] = m[p], m[c]
            piv = m[c][c]
            m[c] = [x / piv for x in m[c]]
            for r in range(n):
                if r != c and m[r][c] != 0:
                    f = m[r][c]
                    m[r] = [a - f * b for a, b in zip(m[r], m[c])]
        return tuple(tuple(row[n:]) for row in m)

    def root_coords(self, labels: Sequence[int]) -> tuple[Fraction, ...]:
        """Simple-root coordinates of the weight with the given labels."""
        inv = self._cartan_inverse
        return tuple(sum((inv[j][i] * labels[i] for i in range(self.rank)), Fraction(0)) for j in range(self.rank))

    @cached_property
    def positive_roots(self) -> tuple[tuple[int, ...], ...]:
        """Positive roots in simple-root coordinates."""
        n = self.rank
        simple = [tuple(int(i == j) for i in range(n)) for j in range(n)]
        seen = set(simple)
        queue = deque(simple)
        while queue:
            alpha = queue.popleft()
            lab = [sum(self.cartan[i][j] * alpha[j] for j in range(n)) for i in range(n)]
            for i in range(n):
                gamma = list(alpha)
                gamma[i] -= lab[i]
                gamma = tuple(gamma)
                if all(x >= 0 for x in gamma) and gamma not in seen:
                    seen.add(gamma)
                    queue.append(gamma)
        return tuple(sorted(seen, key=lambda a: (sum(a), a)))

    @cached_property
    def rho(self) -> tuple[Fraction, ...]:
        """Half the sum of positive roots, in simple-root coordinates."""
        n = self.rank
        return tuple(Fraction(sum(a[j] for a in self.positive_roots), 2) for j in range(n))


def _check_dominant(system: CharacterSystem, lam: Coweight) -> tuple[int, ...]:
    labels = system.labels(lam)
    for i, x in enumerate(labels, start=1):
        if x < 0:
            raise ValueError(f"lambda = {tuple(lam)} is not dominant for {system.name} (node {i})")
    return labels


@lru_cache(maxsize=None)
def _freudenthal_table(system: CharacterSystem, lam: Coweight) -> dict[tuple[int, ...], int]:
    """Multiplicities keyed by depth ``k`` (weight ``lam - sum k_j beta_j``)."""
    labels = _check_dominant(system, lam)
    n = system.rank
    top = tuple(c + r for c, r in zip(system.root_coords(labels), system.rho))  # lam + rho
    top_norm = system.inner(top, top)
    pos = system.positive_roots
    mult: dict[tuple[int, ...], int] = {(0,) * n: 1}
    level = [(0,) * n]
    while level:
        candidates = sorted({tuple(k[:j] + (k[j] + 1,) + k[j + 1:]) for k in level for j in range(n)})
        level = []
        for k in candidates:
            mu_rho = tuple(t - x for t, x in zip(top, k))
            denom = top_norm - system.inner(mu_rho, mu_rho)
            total = Fraction(0)
            for alpha in pos:
                j = 1
                while True:
                    depth = tuple(a - j * b for a, b in zip(k, alpha))
                    if any(x < 0 for x in depth):
                        break
                    m = mult.get(depth, 0)
                    if m:
                        # (mu + j alpha, alpha) with mu + j alpha = lam - depth.beta
                        shifted = tuple(t - r - x for t, r, x in zip(top, system.rho, depth))
                        total += m * system.inner(shifted, alpha)
                    j += 1
            total *= 2
            if denom == 0:
                if total != 0:
                    raise ArithmeticError("Freudenthal recursion hit a zero denominator")
                continue
            value = total / denom
            if value.denominator != 1 or value < 0:
                raise ArithmeticError(f"non-integral multiplicity {value} at depth {k}")
            if value:
                mult[k] = int(value)
                level.append(k)
    return mult


def weyl_character(system: CharacterSystem, lam: Sequence[int]) -> FormalCharacter:
    """Full character of ``V(lam)`` by the Freudenthal recursion."""
    lam = tuple(lam)
    table = _freudenthal_table(system, lam)
    return FormalCharacter({system.lower(lam, k): m for k, m in table.items()})


def freudenthal_multiplicity(system: CharacterSystem, lam: Sequence[int], mu: Sequence[int]) -> int:
    return weyl_character(system, lam)[tuple(mu)]


def weyl_dimension(system: CharacterSystem, lam: Sequence[int]) -> int:
    labels = _check_dominant(system, tuple(lam))
    lam_rho = tuple(c + r for c, r in zip(system.root_coords(labels), system.rho))
    num = Fraction(1)
    for alpha in system.positive_roots:
        num *= system.inner(lam_rho, alpha) / system.inner(system.rho, alpha)
    assert num.denominator == 1
    return int(num)


def _orbit_with_signs(system: CharacterSystem, labels: tuple[int, ...]) -> dict[tuple[int, ...], int]:
    """W-orbit of a regular weight (given by labels) with the sign of the
    element reaching each point."""
    n = system.rank
    signs = {labels: 1}
    queue = deque([labels])
    while queue:
        x = queue.popleft()
        for i in range(n):
            c = x[i]
            y = tuple(x[r] - c * system.cartan[r][i] for r in range(n))
            if y not in signs:
                signs[y] = -signs[x]
                queue.append(y)
    return signs


def kostant_multiplicity(system: CharacterSystem, lam: Sequence[int], mu: Sequence[int]) -> int:
    """``sum_w (-1)^{l(w)} P(w(lam + rho) - (mu + rho))``: the Weyl character
    formula read at a single weight, with ``P`` the Kostant partition
    function."""
    lam_labels = _check_dominant(system, tuple(lam))
    mu_labels = system.labels(tuple(mu))
    n = system.rank
    pos = system.positive_roots

    @lru_cache(maxsize=None)
    def partitions(k: int, target: tuple[int, ...]) -> int:
        if not any(target):
            return 1
        if k == len(pos):
            return 0
        total, t = 0, target
        while all(x >= 0 for x in t):
            total += partitions(k + 1, t)
            t = tuple(a - b for a, b in zip(t, pos[k]))
        return total

    total = 0
    start = tuple(x + 1 for x in lam_labels)
    for labels, sign in _orbit_with_signs(system, start).items():
        diff = system.root_coords(tuple(a - (b + 1) for a, b in zip(labels, mu_labels)))
        if all(x.denominator == 1 and x >= 0 for x in diff):
            total += sign * partitions(0, tuple(int(x) for x in diff))
    return total


# -- counting MV polytopes -------------------------------------------------------


def mv_weight_multiplicity(
    root: RootDatum, lam: Sequence[int], mu: Sequence[int], word: Sequence[int] | None = None
) -> int:
    """Number of MV polytopes of coweight ``mu - lam`` whose ``lam``-shift lies
    in ``Conv(W lam)``."""
    lam = root.check_coweight(lam)
    if not root.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    word = tuple(word) if word is not None else default_word(root)
    nu = sub(tuple(mu), lam)
    return sum(
        1 for d in enumerate_data(root, word, nu) if lies_in_weyl_hull(build_polytope(d), lam)
    )


def mv_character(root: RootDatum, lam: Sequence[int], word: Sequence[int] | None = None) -> FormalCharacter:
    lam = root.check_coweight(lam)
    return FormalCharacter({mu: mv_weight_multiplicity(root, lam, mu, word) for mu in weights_of(root, lam)})


def enumerate_block_constant(
    folding: FoldingData, word: Sequence[int], nu: Coweight, convention: str = "ascending"
) -> list[LusztigDatum]:
    """Block-constant data on a lifted word with coweight ``nu``, found by
    searching over one value per block."""
    from .folding import fold_word

    root = folding.root
    word = tuple(word)
    word_sigma = fold_word(folding, word, convention)
    betas = coroot_sequence(root, word)
    blocks = []
    k = 0
    for eta in word_sigma:
        r = folding.orbits[eta - 1].r
        vec = tuple(sum(b[c] for b in betas[k:k + r]) for c in range(root.rank))
        blocks.append((r, vec))
        k += r
    target = tuple(-x for x in nu)
    if any(x < 0 for x in target):
        return []
    out = []
    values: list[int] = []

    def dfs(b: int, residual: tuple[int, ...]) -> None:
        if b == len(blocks):
            if not any(residual):
                data = []
                for (r, _), n in zip(blocks, values):
                    data.extend([n] * r)
                out.append(LusztigDatum(root, word, tuple(data)))
            return
        r, vec = blocks[b]
        n = 0
        while all(x >= 0 for x in residual):
            values.append(n)
            dfs(b + 1, residual)
            values.pop()
            residual = tuple(x - y for x, y in zip(residual, vec))
            n += 1

    dfs(0, target)
    return out


def twining_character(
    folding: FoldingData,
    lam: Sequence[int],
    word_sigma: Sequence[int] | None = None,
    convention: str = "ascending",
) -> FormalCharacter:
    """``sum_mu #(sigma-fixed MV basis vectors of V_mu(lam)) e^mu``: count
    block-constant data on the lifted word that pass the hull test."""
    root = folding.root
    lam = root.check_coweight(lam)
    if not folding.is_invariant(lam):
        raise ValueError(f"{lam} is not sigma-invariant")
    if not root.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    word_sigma = tuple(word_sigma) if word_sigma is not None else default_folded_word(folding)
    word = lift_word(folding, word_sigma, convention)
    terms = {}
    for mu in invariant_weights(folding, lam):
        data = enumerate_block_constant(folding, word, sub(mu, lam), convention)
        terms[mu] = sum(1 for d in data if lies_in_weyl_hull(build_polytope(d), lam))
    return FormalCharacter(terms)


def invariant_weights(folding: FoldingData, lam: Coweight) -> list[Coweight]:
    return [mu for mu in weights_of(folding.root, lam) if folding.is_invariant(mu)]


@dataclass(frozen=True)
class TwiningRow:
    weight: Coweight
    twining: int
    folded: int
    multiplicity: int


@dataclass(frozen=True)
class TwiningReport:
    equal: bool
    rows: tuple[TwiningRow, ...]


def verify_twining(
    folding: FoldingData,
    lam: Sequence[int],
    word_sigma: Sequence[int] | None = None,
    convention: str = "ascending",
) -> TwiningReport:
    """Compare the twining character of ``V(lam)`` with the folded Weyl
    character of highest weight ``lam``, weight by weight."""
    lam = folding.root.check_coweight(lam)
    twining = twining_character(folding, lam, word_sigma, convention)
    folded = weyl_character(CharacterSystem.of_folding(folding), lam)
    full = weyl_character(CharacterSystem.of_group(folding.root), lam)
    weights = set(invariant_weights(folding, lam)) | set(folded.support) | set(twining.support)
    rows = tuple(
        TwiningRow(mu, twining[mu], folded[mu], full[mu]) for mu in sorted(weights, key=_sort_key)
    )
    return TwiningReport(twining == folded, rows)


def merge(characters: Iterable[FormalCharacter]) -> FormalCharacter:
    total: dict[Coweight, int] = {}
    for ch in characters:
        for mu, m in ch.items():
            total[mu] = total.get(mu, 0) + m
    return FormalCharacter(total)
