"""Root data of finite type with exact lattice arithmetic.

Conventions (fixed across the package):

* Nodes are numbered ``1..rank`` following Bourbaki.
* ``cartan[i][j] = <alpha_i^vee, alpha_j>`` (0-based indices into the tuple).
* Coweights are integer tuples in the simple-coroot basis; the group is
  simply connected, so the coweight lattice is the coroot lattice.
* Weight vectors are tuples of ``Fraction`` in the basis dual to the simple
  coroots, so ``pair(mu, xi) = sum(mu_i * xi_i)`` and the fundamental
  weights are the standard basis vectors.
* Weyl group elements act on coweights by integer matrices whose column ``j``
  is the image of ``alpha_j^vee``.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from itertools import permutations
from typing import Iterable, Sequence

Coweight = tuple[int, ...]
WeightVector = tuple[Fraction, ...]
Matrix = tuple[tuple[int, ...], ...]

SUPPORTED_TYPES = ("A", "B", "C", "D", "E", "F", "G")


class UnsupportedType(ValueError):
    pass


def cartan_matrix(label: str, rank: int) -> Matrix:
    """Bourbaki Cartan matrix of the finite type ``label``/``rank``."""
    label = label.upper()
    minimum = {"A": 1, "B": 2, "C": 2, "D": 4}
    if label in minimum:
        if rank < minimum[label]:
            raise UnsupportedType(f"{label}{rank} is not a supported type")
    elif (label, rank) not in {("E", 6), ("F", 4), ("G", 2)}:
        raise UnsupportedType(f"{label}{rank} is not a supported type")

    a = [[2 if i == j else 0 for j in range(rank)] for i in range(rank)]

    def bond(i: int, j: int, aij: int = -1, aji: int = -1) -> None:
        a[i - 1][j - 1] = aij
        a[j - 1][i - 1] = aji

    if label in "ABC":
        for i in range(1, rank):
            bond(i, i + 1)
        if label == "B":
            bond(rank - 1, rank, -1, -2)
        elif label == "C":
            bond(rank - 1, rank, -2, -1)
    elif label == "D":
        for i in range(1, rank - 1):
            bond(i, i + 1)
        bond(rank - 2, rank)
    elif label == "E":
        for i, j in [(1, 3), (3, 4), (4, 5), (5, 6), (2, 4)]:
            bond(i, j)
    elif label == "F":
        bond(1, 2)
        bond(2, 3, -1, -2)
        bond(3, 4)
    elif label == "G":
        bond(1, 2, -3, -1)
    return tuple(tuple(row) for row in a)


def _is_finite_type(cartan: Matrix) -> bool:
    # Symmetrize with d_i a_ij = d_j a_ji, then test positive definiteness by
    # leading principal minors (exact).
    n = len(cartan)
    d: list[Fraction | None] = [None] * n
    for start in range(n):
        if d[start] is not None:
            continue
        d[start] = Fraction(1)
        queue = deque([start])
        while queue:
            i = queue.popleft()
            for j in range(n):
                if i != j and cartan[i][j] != 0:
                    value = d[i] * cartan[i][j] / cartan[j][i]
                    if d[j] is None:
                        d[j] = value
                        queue.append(j)
                    elif d[j] != value:
                        return False
    sym = [[d[i] * cartan[i][j] for j in range(n)] for i in range(n)]
    for k in range(1, n + 1):
        if _determinant([row[:k] for row in sym[:k]]) <= 0:
            return False
    return True


def _determinant(m: list[list[Fraction]]) -> Fraction:
    m = [list(map(Fraction, row)) for row in m]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        pivot = next((r for r in range(c, n) if m[r][c] != 0), None)
        if pivot is None:
            return Fraction(0)
        if pivot != c:
            m[c], m[pivot] = m[pivot], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            for k in range(c, n):
                m[r][k] -= f * m[c][k]
    return det


@dataclass(frozen=True)
class RootDatum:
    label: str
    rank: int
    cartan: Matrix
    fundamental_weights: tuple[WeightVector, ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self) -> None:
        n = self.rank
        if len(self.cartan) != n or any(len(row) != n for row in self.cartan):
            raise ValueError("cartan matrix has the wrong shape")
        for i in range(n):
            if self.cartan[i][i] != 2:
                raise ValueError(f"diagonal entry {i + 1} is not 2")
            for j in range(n):
                if i != j:
                    if self.cartan[i][j] > 0:
                        raise ValueError("positive off-diagonal Cartan entry")
                    if (self.cartan[i][j] == 0) != (self.cartan[j][i] == 0):
                        raise ValueError("Cartan matrix zero pattern is not symmetric")
        if not _is_finite_type(self.cartan):
            raise ValueError("Cartan matrix is not of finite type")
        basis = tuple(
            tuple(Fraction(int(i == j)) for i in range(n)) for j in range(n)
        )
        object.__setattr__(self, "fundamental_weights", basis)

    @classmethod
    def from_cartan(cls, cartan: Sequence[Sequence[int]], label: str | None = None) -> "RootDatum":
        matrix = tuple(tuple(int(x) for x in row) for row in cartan)
        return cls(label or identify_type(matrix) or "?", len(matrix), matrix)

    @property
    def name(self) -> str:
        return self.label if self.label[-1:].isdigit() else f"{self.label}{self.rank}"

    @property
    def nodes(self) -> range:
        return range(1, self.rank + 1)

    def simple_coroot(self, i: int) -> Coweight:
        self._check_node(i)
        return tuple(int(k == i - 1) for k in range(self.rank))

    def simple_root(self, j: int) -> WeightVector:
        """``alpha_j`` in the basis dual to the simple coroots (column ``j``)."""
        self._check_node(j)
        return tuple(Fraction(self.cartan[i][j - 1]) for i in range(self.rank))

    def root_pairing(self, mu: Coweight, i: int) -> int:
        """``<mu, alpha_i>`` for an integral coweight."""
        return sum(m * self.cartan[k][i - 1] for k, m in enumerate(mu))

    def labels(self, mu: Coweight) -> tuple[int, ...]:
        return tuple(self.root_pairing(mu, i) for i in self.nodes)

    def is_dominant(self, mu: Coweight) -> bool:
        return all(x >= 0 for x in self.labels(mu))

    def zero(self) -> Coweight:
        return (0,) * self.rank

    def _check_node(self, i: int) -> None:
        if not 1 <= i <= self.rank:
            raise IndexError(f"node {i} out of range 1..{self.rank}")

    def check_coweight(self, mu: Sequence[int]) -> Coweight:
        if len(mu) != self.rank:
            raise ValueError(f"expected {self.rank} coordinates, got {len(mu)}")
        return tuple(int(x) for x in mu)


def identify_type(cartan: Matrix) -> str | None:
    """Name of the type whose Cartan matrix is ``cartan`` up to renumbering
    the nodes, if any."""
    n = len(cartan)
    targets = []
    for label in SUPPORTED_TYPES:
        try:
            targets.append((label, cartan_matrix(label, n)))
        except UnsupportedType:
            continue
    for label, target in targets:
        if target == cartan:
            return f"{label}{n}"
    for label, target in targets:
        for perm in permutations(range(n)):
            if all(cartan[perm[i]][perm[j]] == target[i][j] for i in range(n) for j in range(n)):
                return f"{label}{n}"
    return None


@lru_cache(maxsize=None)
def build_root_datum(label: str, rank: int) -> RootDatum:
    label = label.upper()
    return RootDatum(f"{label}{rank}", rank, cartan_matrix(label, rank))


def parse_type(text: str) -> RootDatum:
    """``"A4"`` -> ``build_root_datum("A", 4)``."""
    text = text.strip()
    if len(text) < 2 or not text[1:].isdigit():
        raise UnsupportedType(f"cannot parse type label {text!r}")
    return build_root_datum(text[0], int(text[1:]))


def pair(mu: Sequence[int | Fraction], xi: Sequence[int | Fraction]) -> Fraction:
    if len(mu) != len(xi):
        raise ValueError("rank mismatch in pairing")
    return sum((Fraction(a) * Fraction(b) for a, b in zip(mu, xi)), Fraction(0))


def add(mu: Coweight, nu: Coweight) -> Coweight:
    return tuple(a + b for a, b in zip(mu, nu))


def sub(mu: Coweight, nu: Coweight) -> Coweight:
    return tuple(a - b for a, b in zip(mu, nu))


def scale(c: int, mu: Coweight) -> Coweight:
    return tuple(c * a for a in mu)


def neg(mu: Coweight) -> Coweight:
    return tuple(-a for a in mu)


def reflect(datum: RootDatum, i: int, mu: Coweight) -> Coweight:
    """``s_i(mu) = mu - <mu, alpha_i> alpha_i^vee``."""
    datum._check_node(i)
    out = list(mu)
    out[i - 1] -= datum.root_pairing(mu, i)
    return tuple(out)


def reflect_weight(datum: RootDatum, i: int, xi: WeightVector) -> WeightVector:
    """``s_i(xi) = xi - <alpha_i^vee, xi> alpha_i`` on the weight side."""
    c = xi[i - 1]
    return tuple(x - c * a for x, a in zip(xi, datum.simple_root(i)))


def is_nonnegative(mu: Iterable[int]) -> bool:
    return all(x >= 0 for x in mu)


def leq(mu: Coweight, nu: Coweight) -> bool:
    """Dominance order: ``nu - mu`` is a nonnegative sum of simple coroots."""
    return is_nonnegative(sub(nu, mu))


# -- Weyl group elements -------------------------------------------------------


def _matmul(a: Matrix, b: Matrix) -> Matrix:
    n = len(a)
    return tuple(
        tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n))
        for i in range(n)
    )


def _apply(m: Matrix, mu: Sequence[int]) -> Coweight:
    return tuple(sum(row[k] * mu[k] for k in range(len(mu))) for row in m)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


@lru_cache(maxsize=None)
def reflection_matrix(datum: RootDatum, i: int) -> Matrix:
    cols = [reflect(datum, i, datum.simple_coroot(j)) for j in datum.nodes]
    return tuple(tuple(cols[j][r] for j in range(datum.rank)) for r in range(datum.rank))


@lru_cache(maxsize=None)
def positive_coroots(datum: RootDatum) -> tuple[Coweight, ...]:
    """All positive coroots, closed under simple reflections, sorted by height."""
    seen = {datum.simple_coroot(i) for i in datum.nodes}
    queue = deque(seen)
    while queue:
        beta = queue.popleft()
        for i in datum.nodes:
            gamma = reflect(datum, i, beta)
            if is_nonnegative(gamma) and gamma not in seen:
                seen.add(gamma)
                queue.append(gamma)
    return tuple(sorted(seen, key=lambda b: (sum(b), b)))


@dataclass(frozen=True, eq=False)
class WeylElement:
    """A Weyl group element; equality and hashing go through the matrix only."""

    datum: RootDatum
    matrix: Matrix
    word: tuple[int, ...] = ()

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, WeylElement):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self) -> int:
        return hash(self.matrix)

    def __repr__(self) -> str:
        return f"WeylElement({self.datum.name}, word={self.word})"

    def __call__(self, mu: Sequence[int]) -> Coweight:
        return _apply(self.matrix, mu)

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return WeylElement(self.datum, _matmul(self.matrix, other.matrix), self.word + other.word)

    @cached_property
    def length(self) -> int:
        return sum(1 for beta in positive_coroots(self.datum) if not is_nonnegative(self(beta)))

    def inverse(self) -> "WeylElement":
        return self._inverse

    @cached_property
    def _inverse(self) -> "WeylElement":
        m = identity_matrix(self.datum.rank)
        for i in self.word:
            m = _matmul(reflection_matrix(self.datum, i), m)
        return WeylElement(self.datum, m, tuple(reversed(self.word)))

    def is_identity(self) -> bool:
        return self.matrix == identity_matrix(self.datum.rank)


def identity_element(datum: RootDatum) -> WeylElement:
    return WeylElement(datum, identity_matrix(datum.rank), ())


def simple_reflection(datum: RootDatum, i: int) -> WeylElement:
    datum._check_node(i)
    return WeylElement(datum, reflection_matrix(datum, i), (i,))


def element_of(datum: RootDatum, word: Sequence[int]) -> WeylElement:
    m = identity_matrix(datum.rank)
    for i in word:
        datum._check_node(i)
        m = _matmul(m, reflection_matrix(datum, i))
    return WeylElement(datum, m, tuple(word))


def is_reduced(datum: RootDatum, word: Sequence[int]) -> bool:
    return element_of(datum, word).length == len(word)


def leq_twisted(datum: RootDatum, mu: Coweight, nu: Coweight, w: WeylElement) -> bool:
    """``mu <=_w nu`` iff ``w^{-1}(nu) - w^{-1}(mu)`` is a nonnegative coroot sum."""
    inv = w.inverse()
    return leq(inv(mu), inv(nu))


def dominant_representative(datum: RootDatum, mu: Coweight) -> tuple[Coweight, WeylElement]:
    """Return ``(mu_plus, v)`` with ``v(mu) = mu_plus`` dominant."""
    mu = datum.check_coweight(mu)
    word: list[int] = []
    current = mu
    while True:
        bad = next((i for i in datum.nodes if datum.root_pairing(current, i) < 0), None)
        if bad is None:
            break
        current = reflect(datum, bad, current)
        word.append(bad)
    # v = s_{last} ... s_{first}
    return current, element_of(datum, tuple(reversed(word)))


def weyl_orbit(datum: RootDatum, mu: Coweight) -> frozenset[Coweight]:
    seen = {tuple(mu)}
    queue = deque(seen)
    while queue:
        nu = queue.popleft()
        for i in datum.nodes:
            rho = reflect(datum, i, nu)
            if rho not in seen:
                seen.add(rho)
                queue.append(rho)
    return frozenset(seen)


def weight_orbit(datum: RootDatum, xi: WeightVector) -> frozenset[WeightVector]:
    seen = {tuple(xi)}
    queue = deque(seen)
    while queue:
        eta = queue.popleft()
        for i in datum.nodes:
            zeta = reflect_weight(datum, i, eta)
            if zeta not in seen:
                seen.add(zeta)
                queue.append(zeta)
    return frozenset(seen)


def dominant_coweights_below(datum: RootDatum, lam: Coweight) -> list[Coweight]:
    """Dominant ``nu <= lam``; reached from ``lam`` by subtracting positive coroots."""
    lam = datum.check_coweight(lam)
    if not datum.is_dominant(lam):
        raise ValueError(f"{lam} is not dominant")
    pos = positive_coroots(datum)
    seen = {lam}
    queue = deque([lam])
    while queue:
        nu = queue.popleft()
        for beta in pos:
            rho = sub(nu, beta)
            if rho not in seen and datum.is_dominant(rho):
                seen.add(rho)
                queue.append(rho)
    return sorted(seen, reverse=True)


def weights_of(datum: RootDatum, lam: Coweight) -> list[Coweight]:
    """Support of ``V(lam)``: coweights whose dominant representative is ``<= lam``."""
    out: set[Coweight] = set()
    for nu in dominant_coweights_below(datum, lam):
        out |= weyl_orbit(datum, nu)
    return sorted(out, reverse=True)
