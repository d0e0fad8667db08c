# ampleness/period_domains.py
"""
Period domains as flag domains.

Hodge numbers h^{r,n−r} of a polarized Hodge structure of weight n fix the
group (Sp(m,ℝ) for n odd, SO(m_e,m_o) for n even), the reference cycle 𝐣
and the parabolic marking. The closed value is min{h_o, h_e} for n odd and
the so(2p,ℓ) hook rows for n even; the engine value on the derived case has
to agree with it.

Usage:
    hodge = HodgeNumbers.parse(4, "1,2,3")
    model = derive(hodge)           # so(4,5), 𝐣 = {2,3}
    period_report(hodge).ind        # -> 2
"""
import logging
import random
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from ampleness.closed_forms import hook_data, present_min
from ampleness.errors import ConsistencyError, InputError
from ampleness.real_forms import AMBIENT, CaseFamily, CycleParam, RealFormCase, build_model, cycle_weyl
from ampleness.snow_engine import AmplenessReport, Discrepancy, ampleness_report
from ampleness.utils import parse_int_list, run_jobs
from ampleness.weight_core import simple_coordinates

logger = logging.getLogger("flagcav.period_domains")


# ---------- Hodge data ----------
@dataclass(frozen=True)
class HodgeNumbers:
    """h[r] = h^{r,n−r} for r = 0..n."""

    weight: int
    h: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "h", tuple(int(v) for v in self.h))
        n = self.weight
        if n < 1:
            raise InputError(f"Hodge weight must be ≥ 1, got {n}")
        if len(self.h) != n + 1:
            raise InputError(f"weight {n} needs {n + 1} Hodge numbers, got {len(self.h)}")
        if any(v < 0 for v in self.h):
            raise InputError(f"Hodge numbers must be nonnegative, got {list(self.h)}")
        if any(self.h[r] != self.h[n - r] for r in range(n + 1)):
            raise InputError(f"Hodge numbers must satisfy h^(r,s) = h^(s,r), got {list(self.h)}")
        if self.total < 2 or sum(1 for v in self.h if v) < 2:
            raise InputError(f"Hodge numbers {self.half} describe a point, not a period domain")

    @classmethod
    def parse(cls, weight: int, text: str | Sequence[int]) -> "HodgeNumbers":
        """Half list h^{n,0}, h^{n−1,1}, …, h^{⌈n/2⌉,⌊n/2⌋}; the symmetric tail is implied."""
        values = parse_int_list(text) if isinstance(text, str) else list(text)
        expected = weight // 2 + 1
        if weight < 1:
            raise InputError(f"Hodge weight must be ≥ 1, got {weight}")
        if len(values) != expected:
            raise InputError(f"weight {weight} takes {expected} Hodge numbers h^(n,0)..h^(⌈n/2⌉,⌊n/2⌋), "
                             f"got {len(values)}")
        h = [0] * (weight + 1)
        for offset, value in enumerate(values):
            r = weight - offset
            h[r] = value
            h[weight - r] = value
        return cls(weight, tuple(h))

    @property
    def k(self) -> int:
        return self.weight // 2

    @property
    def half(self) -> List[int]:
        return [self.h[r] for r in range(self.weight, (self.weight - 1) // 2, -1)]

    @property
    def total(self) -> int:
        return sum(self.h)

    def f(self, r: int) -> int:
        """f^r = h^{n,0} + … + h^{r,n−r}."""
        return sum(self.h[max(r, 0):])


# ---------- Derived model ----------
@dataclass(frozen=True)
class PeriodModel:
    hodge: HodgeNumbers
    case: RealFormCase
    cycle: Tuple[int, ...]
    marked: Tuple[int, ...]
    m_e: int
    m_o: int
    h_o: int = 0
    h_e: int = 0
    p: int = 0
    q: int = 0
    ell: int = 0

    @property
    def odd(self) -> bool:
        return self.hodge.weight % 2 == 1

    @property
    def f_values(self) -> Dict[int, int]:
        return {r: self.hodge.f(r) for r in range(self.hodge.weight, -1, -1)}


def _block_positions(hodge: HodgeNumbers, parity: int) -> Tuple[int, ...]:
    """Positions f^{r+1}+1 .. f^r of the blocks V^{r,n−r}, r ≥ k+1, with r ≡ parity (mod 2)."""
    n, k = hodge.weight, hodge.k
    positions: List[int] = []
    for r in range(n, k, -1):
        if r % 2 == parity:
            positions.extend(range(hodge.f(r + 1) + 1, hodge.f(r) + 1))
    return tuple(sorted(positions))


def derive(hodge: HodgeNumbers) -> PeriodModel:
    n, k, h = hodge.weight, hodge.k, hodge.h
    m_e = sum(h[r] for r in range(0, n + 1, 2))
    m_o = sum(h[r] for r in range(1, n + 1, 2))
    marked = tuple(sorted({hodge.f(r) for r in range(k + 1, n + 1)} - {0}))

    if n % 2:
        m = hodge.f(k + 1)
        h_o = sum(h[r] for r in range(k + 1, n + 1) if r % 2)
        h_e = m - h_o
        # k odd: the even-r blocks carry 𝐣; k even: the odd-r blocks
        cycle = _block_positions(hodge, 0 if k % 2 else 1)
        case = RealFormCase(CaseFamily.SP_REAL, (m,))
        return PeriodModel(hodge, case, cycle, marked, m_e, m_o, h_o=h_o, h_e=h_e)

    if k % 2:
        big, ell = m_e, m_o
    else:
        big, ell = m_o, m_e
    p, q = big // 2, ell // 2
    family = CaseFamily.SO_EVEN_ODD if ell % 2 else CaseFamily.SO_EVEN_EVEN
    label = f"so({2 * p},{ell})"
    if p == 0 or ell == 0:
        raise InputError(f"Hodge numbers {hodge.half} give the compact group {label}, which has no flag domain "
                         "(needs p ≥ 1 and ℓ ≥ 1)")
    case = RealFormCase(family, (p, q))
    cycle = _block_positions(hodge, 0 if k % 2 else 1)
    if len(cycle) != p or p + q != hodge.f(k + 1) + h[k] // 2:
        raise ConsistencyError(f"derived cycle {list(cycle)} does not fit {label}",
                               {"p": p, "q": q, "cycle": list(cycle)})
    return PeriodModel(hodge, case, cycle, marked, m_e, m_o, p=p, q=q, ell=ell)


def theorem2_eval(model: PeriodModel) -> int:
    if model.odd:
        return min(model.h_o, model.h_e)
    p, q = model.p, model.q
    if q == 0:
        return p - 1
    hook = hook_data(model.cycle, p, q)
    if model.ell % 2:
        return present_min(hook, hook.i_plus - 1, hook.i_minus)
    return present_min(hook, hook.i_plus - 1, hook.i_minus - 1)


def cycle_dim_GQ(model: PeriodModel) -> int:
    """
    Dimension of the base cycle in G/Q: the 𝔨-roots α (both signs) whose
    pullback w⁻¹α has a negative coefficient sum over the marked simple roots.
    """
    case = model.case
    ambient = AMBIENT[case.family]
    rank = case.coord_rank
    w = cycle_weyl(case, CycleParam(model.cycle))
    k_roots = build_model(case).k_roots
    count = 0
    for alpha in k_roots.all_roots():
        coeffs = simple_coordinates(w.apply_inverse(alpha), ambient, rank)
        if sum(coeffs[d - 1] for d in model.marked) < 0:
            count += 1
    return count


# ---------- Reports ----------
class PeriodReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    weight: int
    hodge: List[int]
    f: Dict[int, int]
    group: str
    case: str
    params: Dict[str, int]
    p: Optional[int] = None
    q: Optional[int] = None
    ell: Optional[int] = None
    m_e: int
    m_o: int
    h_o: Optional[int] = None
    h_e: Optional[int] = None
    cycle: List[int]
    marked: List[int]
    ind: int
    theorem2: int
    dim_cycle: int
    codim: int
    ampleness: int
    concavity_degree: int
    extremal_count: int
    witness: Optional[List[int]] = None
    cycle_dim_gq: Optional[int] = None


def _engine_ind(model: PeriodModel) -> AmplenessReport:
    """Engine report on the derived case; plain and primed so-even cycles must agree."""
    report = ampleness_report(model.case, CycleParam(model.cycle))
    if model.case.family in (CaseFamily.SO_EVEN_ODD, CaseFamily.SO_EVEN_EVEN):
        primed = ampleness_report(model.case, CycleParam(model.cycle, primed=True))
        if primed.ind != report.ind:
            raise ConsistencyError(
                f"plain and primed cycles of {model.case.label} disagree: {report.ind} vs {primed.ind}",
                {"hodge": model.hodge.half, "plain": report.ind, "primed": primed.ind},
            )
    return report


def period_report(hodge: HodgeNumbers, with_dim: bool = False) -> PeriodReport:
    model = derive(hodge)
    report = _engine_ind(model)
    expected = theorem2_eval(model)
    if expected != report.ind:
        raise ConsistencyError(
            f"period domain {hodge.half} (weight {hodge.weight}): closed value {expected}, engine {report.ind}",
            {"hodge": hodge.half, "theorem2": expected, "engine": report.ind},
        )
    odd = model.odd
    return PeriodReport(
        weight=hodge.weight,
        hodge=hodge.half,
        f=model.f_values,
        group=model.case.label,
        case=model.case.family.value,
        params=model.case.params_dict(),
        p=None if odd else model.p,
        q=None if odd else model.q,
        ell=None if odd else model.ell,
        m_e=model.m_e,
        m_o=model.m_o,
        h_o=model.h_o if odd else None,
        h_e=model.h_e if odd else None,
        cycle=list(model.cycle),
        marked=list(model.marked),
        ind=report.ind,
        theorem2=expected,
        dim_cycle=report.dim_cycle,
        codim=report.codim,
        ampleness=report.ampleness,
        concavity_degree=report.concavity_degree,
        extremal_count=report.extremal_count,
        witness=report.witness,
        cycle_dim_gq=cycle_dim_GQ(model) if with_dim else None,
    )


# ---------- Sweep ----------
def _half_lists(weight: int, max_dim: int) -> List[Tuple[int, ...]]:
    """Every half list of the given weight whose full Hodge vector sums to at most max_dim."""
    size = weight // 2 + 1
    middle = weight % 2 == 0
    found = []
    for values in product(range(max_dim + 1), repeat=size):
        total = 2 * sum(values)
        if middle:
            total -= values[-1]
        if total <= max_dim:
            found.append(values)
    return found


def hodge_inputs(max_dim: int, draws: int = 200, seed: int = 0, exhaustive_weight: int = 4,
                 random_weight: int = 6) -> List[HodgeNumbers]:
    """
    Exhaustive Hodge data for weights 1..exhaustive_weight, then `draws` random ones of weight
    up to random_weight, all with total dimension ≤ max_dim. Point-like data are dropped.
    """
    inputs: List[HodgeNumbers] = []
    for weight in range(1, exhaustive_weight + 1):
        for values in _half_lists(weight, max_dim):
            try:
                inputs.append(HodgeNumbers.parse(weight, values))
            except InputError:
                continue
    rng = random.Random(seed)
    attempts = 0
    drawn = 0
    while drawn < draws and attempts < 50 * max(draws, 1):
        attempts += 1
        weight = rng.randint(1, random_weight)
        size = weight // 2 + 1
        values = [rng.randint(0, max(1, max_dim // 2)) for _ in range(size)]
        try:
            hodge = HodgeNumbers.parse(weight, values)
        except InputError:
            continue
        if hodge.total <= max_dim:
            inputs.append(hodge)
            drawn += 1
    return inputs


def _period_job(hodge: HodgeNumbers) -> Tuple[bool, Optional[Discrepancy]]:
    """(skipped, discrepancy) for one Hodge input."""
    try:
        model = derive(hodge)
    except InputError as exc:
        logger.debug("skipping %s: %s", hodge.half, exc)
        return True, None
    label = f"weight {hodge.weight} {hodge.half}"
    try:
        report = _engine_ind(model)
    except ConsistencyError as exc:
        return False, Discrepancy(check="period-primed", case=label, cycle=list(model.cycle),
                                  detail=str(exc))
    expected = theorem2_eval(model)
    if expected != report.ind:
        return False, Discrepancy(check="period", case=label, cycle=list(model.cycle),
                                  expected=expected, actual=report.ind, detail=model.case.label)
    return False, None


def period_sweep(max_dim: int, draws: int = 200, seed: int = 0, parallel: int | None = 1,
                 progress: bool = False) -> Tuple[int, int, List[Discrepancy]]:
    """Closed value against the engine on every Hodge input. Returns (checked, skipped, discrepancies)."""
    inputs = hodge_inputs(max_dim, draws=draws, seed=seed)
    results = run_jobs(_period_job, inputs, parallel, desc="period domains", progress=progress)
    skipped = sum(1 for was_skipped, _ in results if was_skipped)
    found = [d for _, d in results if d is not None]
    checked = len(inputs) - skipped
    logger.info("period sweep: %d checked, %d skipped, %d discrepancies", checked, skipped, len(found))
    return checked, skipped, found
