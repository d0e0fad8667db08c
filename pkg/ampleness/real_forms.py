# ampleness/real_forms.py
"""
Catalog of the classical real forms: compact root data 𝔨, highest weights of
the noncompact part 𝔰, the Hermitian split, ambient root counts, and the
base-cycle parameters W₁^θ realized as signed permutations.

Usage:
    case = RealFormCase.of("su", p=3, q=4)
    model = build_model(case)
    for cycle in enumerate_cycles(case):
        w = cycle_weyl(case, cycle)
"""
import logging
from dataclasses import dataclass, field, replace
from enum import Enum
from functools import lru_cache
from typing import Dict, Iterator, List, Tuple

from ampleness.errors import ConsistencyError, InputError
from ampleness.utils import all_subsets, check_subset, complement, format_subset, subsets_of_size
from ampleness.weight_core import (
    BlockDescriptor,
    KRootData,
    RootFamily,
    SignedPermutation,
    Weight,
    is_dominant,
    orbit_index_table,
    weyl_orbit,
)

logger = logging.getLogger("flagcav.real_forms")


class CaseFamily(str, Enum):
    SL_REAL = "sl-real"
    SU = "su"
    SP_REAL = "sp-real"
    SO_ODD_ODD = "so-odd-odd"
    SO_EVEN_ODD = "so-even-odd"
    SO_EVEN_EVEN = "so-even-even"
    SP_QUAT = "sp-quat"
    SL_QUAT = "sl-quat"


PARAM_NAMES: Dict[CaseFamily, Tuple[str, ...]] = {
    CaseFamily.SL_REAL: ("m",),
    CaseFamily.SU: ("p", "q"),
    CaseFamily.SP_REAL: ("r",),
    CaseFamily.SO_ODD_ODD: ("p", "q"),
    CaseFamily.SO_EVEN_ODD: ("p", "q"),
    CaseFamily.SO_EVEN_EVEN: ("p", "q"),
    CaseFamily.SP_QUAT: ("p", "q"),
    CaseFamily.SL_QUAT: ("m",),
}

FAMILY_ORDER = {family: pos for pos, family in enumerate(CaseFamily)}

SO_EVEN_FAMILIES = {CaseFamily.SO_EVEN_ODD, CaseFamily.SO_EVEN_EVEN}


class Branch(str, Enum):
    S = "s"
    PLUS = "plus"
    MINUS = "minus"


# ---------- Cases ----------
@dataclass(frozen=True)
class RealFormCase:
    family: CaseFamily
    params: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "family", CaseFamily(self.family))
        object.__setattr__(self, "params", tuple(int(v) for v in self.params))
        names = PARAM_NAMES[self.family]
        if len(self.params) != len(names):
            raise InputError(f"{self.family.value} takes parameters {', '.join(names)}")
        _validate_row(self)

    @classmethod
    def of(cls, token: str | CaseFamily, **params: int | None) -> "RealFormCase":
        try:
            family = CaseFamily(token)
        except ValueError:
            tokens = ", ".join(f.value for f in CaseFamily)
            raise InputError(f"unknown case {token!r}; expected one of: {tokens}") from None
        values = []
        for name in PARAM_NAMES[family]:
            value = params.get(name)
            if value is None:
                raise InputError(f"{family.value} requires --{name}")
            values.append(value)
        return cls(family, tuple(values))

    def param(self, name: str) -> int:
        return self.params[PARAM_NAMES[self.family].index(name)]

    @property
    def p(self) -> int:
        return self.param("p")

    @property
    def q(self) -> int:
        return self.param("q")

    def params_dict(self) -> Dict[str, int]:
        return dict(zip(PARAM_NAMES[self.family], self.params))

    @property
    def coord_rank(self) -> int:
        if self.family is CaseFamily.SL_REAL:
            return self.params[0] // 2
        if self.family in (CaseFamily.SP_REAL, CaseFamily.SL_QUAT):
            return self.params[0]
        return self.p + self.q

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...]]:
        return FAMILY_ORDER[self.family], self.params

    @property
    def label(self) -> str:
        f = self.family
        if f is CaseFamily.SL_REAL:
            return f"sl({self.params[0]},ℝ)"
        if f is CaseFamily.SL_QUAT:
            return f"sl({self.params[0]},ℍ)"
        if f is CaseFamily.SP_REAL:
            return f"sp({self.params[0]},ℝ)"
        p, q = self.params
        if f is CaseFamily.SU:
            return f"su({p},{q})"
        if f is CaseFamily.SP_QUAT:
            return f"sp({p},{q})"
        if f is CaseFamily.SO_ODD_ODD:
            return f"so({2 * p + 1},{2 * q + 1})"
        if f is CaseFamily.SO_EVEN_ODD:
            return f"so({2 * p},{2 * q + 1})"
        return f"so({2 * p},{2 * q})"

    def __str__(self) -> str:
        return self.label


def _validate_row(case: RealFormCase) -> None:
    f, v = case.family, case.params
    rules = {
        CaseFamily.SL_REAL: (lambda: v[0] >= 2, "sl(m,ℝ) requires m ≥ 2"),
        CaseFamily.SU: (lambda: v[0] >= 1 and v[1] >= 1, "su(p,q) requires p ≥ 1 and q ≥ 1"),
        CaseFamily.SP_REAL: (lambda: v[0] >= 1, "sp(r,ℝ) requires r ≥ 1"),
        CaseFamily.SO_ODD_ODD: (
            lambda: 0 <= v[0] <= v[1] and v[1] >= 1,
            "so(2p+1,2q+1) requires 0 ≤ p ≤ q and q ≥ 1",
        ),
        CaseFamily.SO_EVEN_ODD: (
            lambda: v[0] >= 1 and v[1] >= 0,
            "so(2p,2q+1) requires p ≥ 1 and q ≥ 0",
        ),
        CaseFamily.SO_EVEN_EVEN: (
            lambda: v[0] >= 1 and v[1] >= 1,
            "so(2p,2q) requires p ≥ 1 and q ≥ 1",
        ),
        CaseFamily.SP_QUAT: (lambda: 1 <= v[0] <= v[1], "sp(p,q) requires 1 ≤ p ≤ q"),
        CaseFamily.SL_QUAT: (lambda: v[0] >= 2, "sl(m,ℍ) requires m ≥ 2"),
    }
    check, message = rules[f]
    if not check():
        raise InputError(f"{message}; got {case.params_dict()}")


# ---------- Cycle parameters ----------
@dataclass(frozen=True)
class CycleParam:
    """
    A base cycle: the sorted subset 𝐣 plus the so-even flags.
    For sl(2r,ℝ) the flip cycle is stored as subset (r,).
    """

    subset: Tuple[int, ...] = ()
    primed: bool = False
    sign_variant: bool = False

    def __post_init__(self):
        object.__setattr__(self, "subset", tuple(sorted(self.subset)))

    @classmethod
    def from_signed_list(cls, values: List[int], primed: bool = False, sign_variant: bool = False) -> "CycleParam":
        """[2, -3] is the (j,−k) variant of {2,3}; only the last entry may be negative."""
        if any(v < 0 for v in values[:-1]):
            raise InputError(f"only the last cycle entry may carry a sign, got {values}")
        if values and values[-1] < 0:
            sign_variant = True
        return cls(tuple(abs(v) for v in values), primed=primed, sign_variant=sign_variant)

    def as_signed_list(self) -> List[int]:
        items = list(self.subset)
        if self.sign_variant and items:
            items[-1] = -items[-1]
        return items

    @property
    def sort_key(self) -> Tuple[int, Tuple[int, ...], bool, bool]:
        return len(self.subset), self.subset, self.primed, self.sign_variant

    @property
    def label(self) -> str:
        text = format_subset(self.as_signed_list())
        return text + "'" if self.primed else text


def validate_cycle(case: RealFormCase, cycle: CycleParam) -> None:
    f = case.family
    if cycle.primed and f not in SO_EVEN_FAMILIES:
        raise InputError(f"primed cycles exist only for so(2p,·); {case.label} has none")
    if cycle.sign_variant and not (f in SO_EVEN_FAMILIES and case.p in (1, 2)):
        raise InputError("sign variants exist only for so(2,·) and so(4,·)")
    if f is CaseFamily.SL_REAL:
        m = case.params[0]
        allowed = [()] if m % 2 else [(), (m // 2,)]
        if cycle.subset not in allowed:
            raise InputError(f"{case.label} cycles are {[list(a) for a in allowed]}, got {list(cycle.subset)}")
    elif f is CaseFamily.SL_QUAT or (f is CaseFamily.SO_ODD_ODD and case.p == 0):
        if cycle.subset:
            raise InputError(f"{case.label} has only the empty cycle")
    elif f is CaseFamily.SP_REAL:
        check_subset(cycle.subset, case.coord_rank)
    else:
        check_subset(cycle.subset, case.coord_rank, size=case.p)


# ---------- Models ----------
AMBIENT = {
    CaseFamily.SL_REAL: RootFamily.A,
    CaseFamily.SU: RootFamily.A,
    CaseFamily.SP_REAL: RootFamily.C,
    CaseFamily.SO_ODD_ODD: RootFamily.D,
    CaseFamily.SO_EVEN_ODD: RootFamily.B,
    CaseFamily.SO_EVEN_EVEN: RootFamily.D,
    CaseFamily.SP_QUAT: RootFamily.C,
    CaseFamily.SL_QUAT: RootFamily.A,
}


def ambient_positive_count(family: RootFamily, rank: int) -> int:
    if family is RootFamily.A:
        return rank * (rank + 1) // 2
    if family in (RootFamily.B, RootFamily.C):
        return rank * rank
    return rank * (rank - 1)


@dataclass(frozen=True)
class CaseModel:
    case: RealFormCase
    k_roots: KRootData
    lambdas: Tuple[Tuple[Weight, Branch], ...]
    hermitian: bool
    ambient_family: RootFamily
    ambient_rank: int
    degenerate: bool = False
    # per branch: (μ, weight_index(−μ)) over the Weyl orbit of λ, sorted by μ
    orbits: Tuple[Tuple[Branch, Tuple[Tuple[Weight, int], ...]], ...] = field(default=(), repr=False)

    @property
    def coord_rank(self) -> int:
        return self.k_roots.rank

    @property
    def dim_cycle(self) -> int:
        return self.k_roots.dimension

    @property
    def ambient_positive_count(self) -> int:
        return ambient_positive_count(self.ambient_family, self.ambient_rank)

    @property
    def codim(self) -> int:
        return self.ambient_positive_count - self.dim_cycle


def _blocks_and_lambdas(case: RealFormCase):
    f, n = case.family, case.coord_rank
    A, B, C, D = RootFamily.A, RootFamily.B, RootFamily.C, RootFamily.D
    def e(terms: Dict[int, int]) -> Weight:
        return Weight.from_terms(n, terms)

    if f is CaseFamily.SL_REAL:
        m = case.params[0]
        return [BlockDescriptor(B if m % 2 else D, 1, n)], [(e({1: 2}), Branch.S)], m - 1
    if f is CaseFamily.SL_QUAT:
        m = case.params[0]
        return [BlockDescriptor(C, 1, n)], [(e({1: 2}), Branch.S)], 2 * m - 1
    if f is CaseFamily.SP_REAL:
        return (
            [BlockDescriptor(A, 1, n)],
            [(e({1: 2}), Branch.PLUS), (e({n: -2}), Branch.MINUS)],
            n,
        )

    p, q = case.p, case.q
    if f is CaseFamily.SU:
        blocks = [BlockDescriptor(A, 1, p), BlockDescriptor(A, p + 1, n)]
        return blocks, [(e({1: 1, n: -1}), Branch.PLUS), (e({p + 1: 1, p: -1}), Branch.MINUS)], n - 1
    if f is CaseFamily.SP_QUAT:
        blocks = [BlockDescriptor(C, 1, p), BlockDescriptor(C, p + 1, n)]
        return blocks, [(e({1: 1, p + 1: 1}), Branch.S)], n
    if f is CaseFamily.SO_ODD_ODD:
        if p == 0:
            return [BlockDescriptor(B, 1, n)], [(e({1: 1}), Branch.S)], n + 1
        blocks = [BlockDescriptor(B, 1, p), BlockDescriptor(B, p + 1, n)]
        return blocks, [(e({1: 1, p + 1: 1}), Branch.S)], n + 1

    second = B if f is CaseFamily.SO_EVEN_ODD else D
    blocks = [BlockDescriptor(D, 1, p)]
    if q:
        blocks.append(BlockDescriptor(second, p + 1, n))
    if (p, q) == (1, 0):
        # so(2,1): 𝔨 = so(2) acts on 𝔰 by ±ε₁
        return blocks, [(e({1: 1}), Branch.PLUS), (e({1: -1}), Branch.MINUS)], n
    if p == 1:
        return blocks, [(e({1: 1, 2: 1}), Branch.PLUS), (e({2: 1, 1: -1}), Branch.MINUS)], n
    if f is CaseFamily.SO_EVEN_EVEN and q == 1:
        # so(2p,2): the D₁ factor fixes ε_{p+1}, so 𝔰 splits into ±ε_{p+1} parts
        return blocks, [(e({1: 1, p + 1: 1}), Branch.PLUS), (e({1: 1, p + 1: -1}), Branch.MINUS)], n
    if q == 0:
        return blocks, [(e({1: 1}), Branch.S)], n
    return blocks, [(e({1: 1, p + 1: 1}), Branch.S)], n


def _is_point_cycle(case: RealFormCase) -> bool:
    """sl(2,ℝ) and so(2,1): 𝔨 has no roots and the flag domain is the disc."""
    if case.family is CaseFamily.SL_REAL:
        return case.params[0] == 2
    return case.family is CaseFamily.SO_EVEN_ODD and case.params == (1, 0)


@lru_cache(maxsize=None)
def build_model(case: RealFormCase) -> CaseModel:
    blocks, lambdas, ambient_rank = _blocks_and_lambdas(case)
    k = KRootData(case.coord_rank, tuple(blocks))
    for lam, branch in lambdas:
        if not is_dominant(lam, k):
            raise ConsistencyError(f"{branch.value}-weight {lam} of {case.label} is not 𝔨-dominant")
    orbits = []
    for lam, branch in lambdas:
        table = orbit_index_table(weyl_orbit(lam, k.simple_roots), k)
        orbits.append((branch, tuple(sorted(table.items()))))
    model = CaseModel(
        case=case,
        k_roots=k,
        lambdas=tuple(lambdas),
        hermitian=len(lambdas) == 2,
        ambient_family=AMBIENT[case.family],
        ambient_rank=ambient_rank,
        degenerate=_is_point_cycle(case),
        orbits=tuple(orbits),
    )
    logger.debug("built %s: dim_cycle=%d, orbit sizes=%s", case.label, model.dim_cycle,
                 [len(o) for _, o in model.orbits])
    return model


# ---------- W₁^θ ----------
def enumerate_cycles(case: RealFormCase) -> List[CycleParam]:
    f, n = case.family, case.coord_rank
    if f is CaseFamily.SL_REAL:
        m = case.params[0]
        return [CycleParam()] if m % 2 else [CycleParam(), CycleParam((n,))]
    if f is CaseFamily.SL_QUAT or (f is CaseFamily.SO_ODD_ODD and case.p == 0):
        return [CycleParam()]
    if f is CaseFamily.SP_REAL:
        return [CycleParam(s) for s in all_subsets(n)]
    subsets = list(subsets_of_size(n, case.p))
    if f in SO_EVEN_FAMILIES:
        return [CycleParam(s, primed=flag) for s in subsets for flag in (False, True)]
    return [CycleParam(s) for s in subsets]


def cycle_weyl(case: RealFormCase, cycle: CycleParam) -> SignedPermutation:
    validate_cycle(case, cycle)
    f, n = case.family, case.coord_rank
    if f in (CaseFamily.SL_REAL, CaseFamily.SL_QUAT) or (f is CaseFamily.SO_ODD_ODD and case.p == 0):
        signs = [1] * n
        if cycle.subset:
            signs[cycle.subset[0] - 1] = -1
        return SignedPermutation(tuple(range(1, n + 1)), tuple(signs))

    j = cycle.subset + complement(cycle.subset, n)
    if f is CaseFamily.SP_REAL:
        p = len(cycle.subset)
        perm = [j[i - 1] if i <= p else j[n + p - i] for i in range(1, n + 1)]
        signs = [1 if i <= p else -1 for i in range(1, n + 1)]
        return SignedPermutation(tuple(perm), tuple(signs))

    signs = [1] * n
    if f in SO_EVEN_FAMILIES:
        p = case.p
        if cycle.primed:
            signs[p - 1] = -1
            if f is CaseFamily.SO_EVEN_EVEN:
                signs[n - 1] = -1
        if cycle.sign_variant:
            signs[p - 1] *= -1
    return SignedPermutation(j, tuple(signs))


# ---------- Sweep bounds ----------
@dataclass(frozen=True)
class SweepBounds:
    pq_max: int = 7
    sp_real_max: int = 8
    sl_real_max: int = 12
    sl_quat_max: int = 6
    hook_max: int = 10
    oracle_rank_max: int = 8
    period_max_dim: int = 16

    @classmethod
    def from_max_rank(cls, max_rank: int) -> "SweepBounds":
        if max_rank < 1:
            raise InputError(f"--max-rank must be ≥ 1, got {max_rank}")
        return cls(
            pq_max=max_rank,
            sp_real_max=max_rank + 1,
            sl_real_max=max(3, 2 * max_rank - 2),
            sl_quat_max=max(2, max_rank - 1),
            hook_max=max_rank + 3,
            oracle_rank_max=max_rank + 1,
            period_max_dim=2 * max_rank + 2,
        )

    def oracle_cases(self) -> List["RealFormCase"]:
        """Every case of coordinate rank ≤ oracle_rank_max, for the index cross-check."""
        rank = self.oracle_rank_max
        wide = replace(self, pq_max=rank, sp_real_max=rank, sl_real_max=2 * rank + 1, sl_quat_max=rank)
        return cases_within(wide, max_coord_rank=rank)


def cases_within(bounds: SweepBounds, max_coord_rank: int | None = None) -> List[RealFormCase]:
    """Every valid case inside the bounds, in catalog order."""

    def candidates() -> Iterator[RealFormCase]:
        for m in range(2, bounds.sl_real_max + 1):
            yield RealFormCase(CaseFamily.SL_REAL, (m,))
        for family in (CaseFamily.SU, CaseFamily.SO_ODD_ODD, CaseFamily.SO_EVEN_ODD,
                       CaseFamily.SO_EVEN_EVEN, CaseFamily.SP_QUAT):
            for total in range(1, bounds.pq_max + 1):
                for p in range(0, total + 1):
                    try:
                        yield RealFormCase(family, (p, total - p))
                    except InputError:
                        continue
        for r in range(1, bounds.sp_real_max + 1):
            yield RealFormCase(CaseFamily.SP_REAL, (r,))
        for m in range(2, bounds.sl_quat_max + 1):
            yield RealFormCase(CaseFamily.SL_QUAT, (m,))

    found = [c for c in candidates() if max_coord_rank is None or c.coord_rank <= max_coord_rank]
    return sorted(found, key=lambda c: c.sort_key)
