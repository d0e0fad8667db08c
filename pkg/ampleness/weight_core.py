# ampleness/weight_core.py
"""
Exact integer arithmetic on weights written in ε-coordinates.

A Weight is the coefficient vector (c_1, ..., c_N) of Σ c_i ε_i. The compact
root data 𝔨 is a product of classical blocks (A, B, C, D) acting on disjoint
coordinate ranges; everything here is a pure function of immutable values.

Usage:
    k = KRootData(rank=4, blocks=(BlockDescriptor(RootFamily.A, 1, 4),))
    orbit = weyl_orbit(Weight.basis(4, 1, 2), k.simple_roots)
    weight_index(Weight.basis(4, 4, 2), k)    # -> 3
"""
import logging
from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from typing import Dict, FrozenSet, Iterable, Sequence, Tuple

from sympy import Matrix
from sympy.liealgebras.cartan_type import CartanType

from ampleness.errors import ConsistencyError, InputError

logger = logging.getLogger("flagcav.weight_core")

_SUBSCRIPTS = str.maketrans("0123456789", "₀₁₂₃₄₅₆₇₈₉")


# ---------- Weights ----------
@dataclass(frozen=True, order=True)
class Weight:
    coords: Tuple[int, ...]

    def __post_init__(self):
        coords = tuple(self.coords)
        if not all(isinstance(c, int) for c in coords):
            raise InputError(f"weight coordinates must be integers, got {coords}")
        object.__setattr__(self, "coords", coords)

    @classmethod
    def zero(cls, rank: int) -> "Weight":
        return cls((0,) * rank)

    @classmethod
    def basis(cls, rank: int, index: int, coeff: int = 1) -> "Weight":
        """coeff·ε_index (1-based index)."""
        return cls.from_terms(rank, {index: coeff})

    @classmethod
    def from_terms(cls, rank: int, terms: Dict[int, int]) -> "Weight":
        coords = [0] * rank
        for index, coeff in terms.items():
            if not 1 <= index <= rank:
                raise InputError(f"ε_{index} is outside coordinate rank {rank}")
            coords[index - 1] += coeff
        return cls(tuple(coords))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def is_zero(self) -> bool:
        return not any(self.coords)

    def scaled(self, factor: int) -> "Weight":
        return Weight(tuple(factor * c for c in self.coords))

    def __neg__(self) -> "Weight":
        return Weight(tuple(-c for c in self.coords))

    def __add__(self, other: "Weight") -> "Weight":
        _check_rank(self, other)
        return Weight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: "Weight") -> "Weight":
        _check_rank(self, other)
        return Weight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def as_list(self) -> list[int]:
        return list(self.coords)

    def __str__(self) -> str:
        parts = []
        for i, c in enumerate(self.coords, start=1):
            if c == 0:
                continue
            sign = "−" if c < 0 else "+"
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(f"{sign}{mag}ε{str(i).translate(_SUBSCRIPTS)}")
        if not parts:
            return "0"
        text = "".join(parts)
        return text[1:] if text.startswith("+") else text


def _check_rank(u: Weight, v: Weight) -> None:
    if u.rank != v.rank:
        raise InputError(f"weight rank mismatch: {u.rank} vs {v.rank}")


def _terms(w: Weight) -> Tuple[Tuple[int, int], ...]:
    return tuple((i, c) for i, c in enumerate(w.coords) if c)


# ---------- Root data of 𝔨 ----------
class RootFamily(str, Enum):
    A = "A"
    B = "B"
    C = "C"
    D = "D"


@dataclass(frozen=True)
class BlockDescriptor:
    """One simple factor of 𝔨 acting on coordinates start..stop (inclusive, 1-based)."""

    family: RootFamily
    start: int
    stop: int

    def __post_init__(self):
        if self.start < 1 or self.stop < self.start:
            raise InputError(f"invalid block span {self.start}..{self.stop}")

    @property
    def span(self) -> range:
        return range(self.start, self.stop + 1)

    @property
    def length(self) -> int:
        return self.stop - self.start + 1

    def positive_roots(self, rank: int) -> list[Weight]:
        positives, _ = classical_roots(self.family, self.length)
        return [self._placed(root, rank) for root in positives]

    def simple_roots(self, rank: int) -> list[Weight]:
        _, simples = classical_roots(self.family, self.length)
        return [self._placed(root, rank) for root in simples]

    def _placed(self, root: Tuple[int, ...], rank: int) -> Weight:
        return Weight.from_terms(rank, {self.start + i: c for i, c in enumerate(root) if c})


# smallest ranks handed to CartanType
_SYMPY_MIN_RANK = {RootFamily.A: 1, RootFamily.B: 3, RootFamily.C: 3, RootFamily.D: 3}

RootTuples = Tuple[Tuple[int, ...], ...]


@lru_cache(maxsize=None)
def classical_roots(family: RootFamily, length: int) -> Tuple[RootTuples, RootTuples]:
    """
    (positive roots, simple roots) of A_{length−1}, B_length, C_length or D_length
    on `length` coordinates, read from sympy.liealgebras. Ranks below the sympy
    minimum are the subsystem of a larger one supported on its last `length`
    coordinates (B₁ = {ε}, C₁ = {2ε}, D₁ = ∅, D₂ = {ε₁±ε₂}).
    """
    family = RootFamily(family)
    if length < 1:
        raise InputError(f"a root block needs at least one coordinate, got {length}")
    extra = 1 if family is RootFamily.A else 0
    sympy_rank = max(length - extra, _SYMPY_MIN_RANK[family])
    cartan = CartanType(f"{family.value}{sympy_rank}")
    drop = sympy_rank + extra - length

    def restrict(roots) -> RootTuples:
        kept = []
        for root in roots:
            coords = [int(c) for c in root]
            if not any(coords[:drop]):
                kept.append(tuple(coords[drop:]))
        return tuple(kept)

    positives = restrict(cartan.positive_roots().values())
    simples = restrict(cartan.simple_root(i) for i in range(1, sympy_rank + 1))
    logger.debug("%s%d: %d positive roots, %d simple roots", family.value, length, len(positives), len(simples))
    return positives, simples


@dataclass(frozen=True)
class KRootData:
    """
    Δ⁺(𝔨,𝔱) as a product of classical blocks on disjoint coordinate spans.
    positive_roots and simple_roots are derived at construction.
    """

    rank: int
    blocks: Tuple[BlockDescriptor, ...]
    positive_roots: Tuple[Weight, ...] = field(init=False, compare=False, repr=False)
    simple_roots: Tuple[Weight, ...] = field(init=False, compare=False, repr=False)
    # sparse forms: nonzero (0-based coordinate, coefficient) pairs per positive root,
    # and for each coordinate the positive roots whose support contains it
    positive_terms: Tuple[Tuple[Tuple[int, int], ...], ...] = field(init=False, compare=False, repr=False)
    touching: Tuple[Tuple[int, ...], ...] = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        seen: set[int] = set()
        for block in self.blocks:
            if block.stop > self.rank:
                raise InputError(f"block {block} exceeds coordinate rank {self.rank}")
            if seen.intersection(block.span):
                raise InputError(f"block spans overlap at {block}")
            seen.update(block.span)
        positives = tuple(r for b in self.blocks for r in b.positive_roots(self.rank))
        simples = tuple(r for b in self.blocks for r in b.simple_roots(self.rank))
        object.__setattr__(self, "positive_roots", positives)
        object.__setattr__(self, "simple_roots", simples)
        terms = tuple(_terms(r) for r in positives)
        touching: list[list[int]] = [[] for _ in range(self.rank)]
        for idx, support in enumerate(terms):
            for i, _ in support:
                touching[i].append(idx)
        object.__setattr__(self, "positive_terms", terms)
        object.__setattr__(self, "touching", tuple(tuple(t) for t in touching))

    def roots_meeting(self, lam: Weight) -> set[int]:
        """Indices of positive roots sharing a coordinate with the support of lam."""
        found: set[int] = set()
        for i, c in enumerate(lam.coords):
            if c:
                found.update(self.touching[i])
        return found

    def pair_root(self, lam: Weight, idx: int) -> int:
        coords = lam.coords
        return sum(coords[i] * c for i, c in self.positive_terms[idx])

    @property
    def dimension(self) -> int:
        return len(self.positive_roots)

    def all_roots(self) -> Tuple[Weight, ...]:
        return self.positive_roots + tuple(-r for r in self.positive_roots)


# ---------- Signed permutations (elements of W₁^θ) ----------
@dataclass(frozen=True)
class SignedPermutation:
    """
    w given through its inverse: w⁻¹(ε_i) = signs[i-1]·ε_{perm[i-1]}.
    perm holds 1-based images.
    """

    perm: Tuple[int, ...]
    signs: Tuple[int, ...]

    def __post_init__(self):
        perm, signs = tuple(self.perm), tuple(self.signs)
        if sorted(perm) != list(range(1, len(perm) + 1)):
            raise InputError(f"perm {perm} is not a bijection of 1..{len(perm)}")
        if len(signs) != len(perm) or any(s not in (1, -1) for s in signs):
            raise InputError(f"signs {signs} must be ±1, one per coordinate")
        object.__setattr__(self, "perm", perm)
        object.__setattr__(self, "signs", signs)

    @classmethod
    def identity(cls, rank: int) -> "SignedPermutation":
        return cls(tuple(range(1, rank + 1)), (1,) * rank)

    @property
    def rank(self) -> int:
        return len(self.perm)

    def apply_inverse(self, mu: Weight) -> Weight:
        if mu.rank != self.rank:
            raise InputError(f"weight rank {mu.rank} does not match permutation rank {self.rank}")
        out = [0] * self.rank
        for i, c in enumerate(mu.coords):
            if c:
                out[self.perm[i] - 1] += self.signs[i] * c
        return Weight(tuple(out))

    def apply(self, mu: Weight) -> Weight:
        if mu.rank != self.rank:
            raise InputError(f"weight rank {mu.rank} does not match permutation rank {self.rank}")
        return Weight(tuple(self.signs[i] * mu.coords[self.perm[i] - 1] for i in range(self.rank)))

    def inverse(self) -> "SignedPermutation":
        perm = [0] * self.rank
        signs = [1] * self.rank
        for i, (target, sign) in enumerate(zip(self.perm, self.signs), start=1):
            perm[target - 1] = i
            signs[target - 1] = sign
        return SignedPermutation(tuple(perm), tuple(signs))


# ---------- Operations ----------
def pair(u: Weight, v: Weight) -> int:
    _check_rank(u, v)
    return sum(a * b for a, b in zip(u.coords, v.coords))


def reflect(v: Weight, beta: Weight) -> Weight:
    """s_β(v) = v − 2(v,β)/(β,β)·β, kept integral."""
    if beta.is_zero():
        raise InputError("cannot reflect in the zero weight")
    num, den = 2 * pair(v, beta), pair(beta, beta)
    factor, rest = divmod(num, den)
    if rest:
        raise InputError(f"reflection of {v} in {beta} leaves the integral lattice")
    return v - beta.scaled(factor) if factor else v


def weyl_orbit(lam: Weight, simple_roots: Sequence[Weight]) -> FrozenSet[Weight]:
    """Closure of {λ} under the simple reflections."""
    for beta in simple_roots:
        _check_rank(lam, beta)
    reflections = [(beta, _terms(beta), pair(beta, beta)) for beta in simple_roots]
    seen = {lam}
    queue = deque([lam])
    while queue:
        current = queue.popleft()
        coords = current.coords
        for beta, support, norm in reflections:
            num = 2 * sum(coords[i] * c for i, c in support)
            if not num:
                continue
            factor, rest = divmod(num, norm)
            if rest:
                raise InputError(f"reflection of {current} in {beta} leaves the integral lattice")
            image = current - beta.scaled(factor)
            if image not in seen:
                seen.add(image)
                queue.append(image)
    return frozenset(seen)


def is_dominant(lam: Weight, k: KRootData) -> bool:
    _check_rank(lam, Weight.zero(k.rank))
    return all(k.pair_root(lam, idx) >= 0 for idx in k.roots_meeting(lam))


def weight_index(lam: Weight, k: KRootData) -> int:
    """Number of positive roots pairing negatively with λ."""
    _check_rank(lam, Weight.zero(k.rank))
    return sum(1 for idx in k.roots_meeting(lam) if k.pair_root(lam, idx) < 0)


def weight_index_bfs(lam: Weight, k: KRootData) -> int:
    """Length of a descent to the dominant chamber through simple reflections."""
    limit = k.dimension
    steps = 0
    current = lam
    while True:
        beta = next((b for b in k.simple_roots if pair(current, b) < 0), None)
        if beta is None:
            return steps
        current = reflect(current, beta)
        steps += 1
        if steps > limit:
            raise ConsistencyError(
                f"descent from {lam} did not reach the dominant chamber in {limit} steps",
                {"weight": lam.as_list(), "limit": limit},
            )


def is_positive_restricted(mu: Weight) -> bool:
    for c in mu.coords:
        if c:
            return c > 0
    raise InputError("the zero weight has no sign")


def apply_inverse(w: SignedPermutation, mu: Weight) -> Weight:
    return w.apply_inverse(mu)


def simple_coordinates(mu: Weight, family: RootFamily | str, rank: int) -> Tuple[int, ...]:
    """
    Coefficients n_d of μ = Σ n_d ψ_d in the simple roots of B_rank, C_rank or D_rank,
    solved exactly over the rationals. Raises InputError when μ is not in the root lattice.
    """
    family = RootFamily(family)
    if mu.rank != rank:
        raise InputError(f"weight rank {mu.rank} does not match ambient rank {rank}")
    if family is RootFamily.A:
        raise InputError(f"simple coordinates are implemented for B, C, D only, got {family.value}")
    if family is RootFamily.D and rank < 2:
        raise InputError("ambient D needs rank ≥ 2")
    _, simples = classical_roots(family, rank)
    basis = Matrix([list(root) for root in simples]).T
    coeffs = basis.LUsolve(Matrix(mu.coords))
    if not all(c.is_integer for c in coeffs):
        raise InputError(f"{mu} is not in the root lattice of {family.value}{rank}")
    return tuple(int(c) for c in coeffs)


def orbit_index_table(orbit: Iterable[Weight], k: KRootData) -> Dict[Weight, int]:
    """weight_index(−μ) for every μ in an orbit; the quantity the engine minimizes."""
    return {mu: weight_index(-mu, k) for mu in orbit}
