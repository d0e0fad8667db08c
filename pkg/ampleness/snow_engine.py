# ampleness/snow_engine.py
"""
General ampleness pipeline for base cycles of flag domains.

For a cycle w the extremal weights of the normal-bundle fiber are the orbit
points μ of each noncompact highest weight with w⁻¹μ positive; the index of
the fiber is the minimum of ind(−μ) over them, and

    a        = dim C − ind
    codim    = #Δ⁺(ambient) − dim C
    concavity degree = codim + a + 1

This module is the reference every closed form is checked against.
"""
import logging
from typing import Dict, FrozenSet, List, NamedTuple, Optional, Sequence, Tuple

from pydantic import BaseModel, ConfigDict

from ampleness.errors import ConsistencyError, InputError
from ampleness.real_forms import (
    Branch,
    CaseModel,
    CycleParam,
    RealFormCase,
    build_model,
    cycle_weyl,
    enumerate_cycles,
)
from ampleness.utils import run_jobs
from ampleness.weight_core import (
    SignedPermutation,
    Weight,
    apply_inverse,
    is_positive_restricted,
    weight_index,
    weight_index_bfs,
)

logger = logging.getLogger("flagcav.snow_engine")


# ---------- Report models ----------
class AmplenessReport(BaseModel):
    model_config = ConfigDict(frozen=True)

    case: str
    label: str
    params: Dict[str, int]
    cycle: List[int]
    primed: bool = False
    ind: int
    dim_cycle: int
    codim: int
    ampleness: int
    concavity_degree: int
    extremal_count: int
    branch_used: str
    witness: Optional[List[int]] = None


class Discrepancy(BaseModel):
    """One disagreement found by a verification sweep."""

    check: str
    case: str
    cycle: List[int] = []
    primed: bool = False
    expected: Optional[int] = None
    actual: Optional[int] = None
    detail: str = ""


class CaseSummary(BaseModel):
    label: str
    cycles: int
    min_ind: int
    max_ind: int
    pseudoconvex: int
    uniform: bool


class _Minimum(NamedTuple):
    ind: int
    witness: Optional[Weight]
    branch_used: str
    extremal_count: int


# ---------- Pipeline ----------
def extremal_weights(model: CaseModel, w: SignedPermutation) -> FrozenSet[Tuple[Weight, Branch]]:
    if w.rank != model.coord_rank:
        raise InputError(f"cycle rank {w.rank} does not match {model.case.label} rank {model.coord_rank}")
    found = set()
    for branch, table in model.orbits:
        for mu, _ in table:
            if is_positive_restricted(apply_inverse(w, mu)):
                found.add((mu, branch))
    if not found and not model.degenerate:
        raise ConsistencyError(
            f"no extremal weight survives for {model.case.label}",
            {"perm": list(w.perm), "signs": list(w.signs)},
        )
    return frozenset(found)


def _minimum(model: CaseModel, w: SignedPermutation) -> _Minimum:
    if model.degenerate:
        # sl(2,ℝ) and so(2,1): the cycle is a point, nothing to bound
        return _Minimum(0, None, "none", 0)
    extremal = extremal_weights(model, w)
    lookup = {branch: dict(table) for branch, table in model.orbits}
    best: Optional[int] = None
    witness: Optional[Weight] = None
    branches: set[str] = set()
    for mu, branch in sorted(extremal):
        value = lookup[branch][mu]
        if best is None or value < best:
            best, witness, branches = value, mu, {branch.value}
        elif value == best:
            branches.add(branch.value)
    used = "both" if len(branches) > 1 else branches.pop()
    return _Minimum(best, witness, used, len(extremal))


def index_of_extremal(model: CaseModel, w: SignedPermutation) -> Tuple[int, Optional[Weight]]:
    """(ind, witness): the minimum of ind(−μ) over the extremal set and a μ attaining it."""
    result = _minimum(model, w)
    return result.ind, result.witness


def ampleness_report(case: RealFormCase, cycle: CycleParam) -> AmplenessReport:
    model = build_model(case)
    result = _minimum(model, cycle_weyl(case, cycle))
    ampleness = model.dim_cycle - result.ind
    if not 0 <= result.ind <= model.dim_cycle:
        raise ConsistencyError(
            f"ind {result.ind} outside [0, {model.dim_cycle}] for {case.label} {cycle.label}",
            {"ind": result.ind, "dim_cycle": model.dim_cycle},
        )
    return AmplenessReport(
        case=case.family.value,
        label=case.label,
        params=case.params_dict(),
        cycle=cycle.as_signed_list(),
        primed=cycle.primed,
        ind=result.ind,
        dim_cycle=model.dim_cycle,
        codim=model.codim,
        ampleness=ampleness,
        concavity_degree=model.codim + ampleness + 1,
        extremal_count=result.extremal_count,
        branch_used=result.branch_used,
        witness=result.witness.as_list() if result.witness is not None else None,
    )


# ---------- Sweeps ----------
def _report_job(job: Tuple[RealFormCase, CycleParam]) -> AmplenessReport:
    case, cycle = job
    return ampleness_report(case, cycle)


def case_jobs(cases: Sequence[RealFormCase]) -> List[Tuple[RealFormCase, CycleParam]]:
    jobs = [(case, cycle) for case in cases for cycle in enumerate_cycles(case)]
    return sorted(jobs, key=lambda job: (job[0].sort_key, job[1].sort_key))


def sweep(cases: Sequence[RealFormCase], parallel: int | None = 1, progress: bool = False) -> List[AmplenessReport]:
    """One report per cycle of every case, ordered by (case, cycle) at any parallelism."""
    jobs = case_jobs(cases)
    logger.info("engine sweep over %d cases, %d cycles", len(cases), len(jobs))
    return run_jobs(_report_job, jobs, parallel, desc="engine", progress=progress)


def summarize(reports: Sequence[AmplenessReport]) -> CaseSummary:
    if not reports:
        raise InputError("cannot summarize an empty report list")
    values = [r.ind for r in reports]
    return CaseSummary(
        label=reports[0].label,
        cycles=len(reports),
        min_ind=min(values),
        max_ind=max(values),
        pseudoconvex=sum(1 for v in values if v == 0),
        uniform=len(set(values)) == 1,
    )


def compare_sweeps(left: RealFormCase, right: RealFormCase) -> List[Discrepancy]:
    """Cycle-by-cycle ind comparison of two isomorphic presentations."""
    left_reports = sweep([left])
    right_reports = sweep([right])
    if len(left_reports) != len(right_reports):
        return [Discrepancy(
            check="isomorphism",
            case=f"{left.label} vs {right.label}",
            expected=len(left_reports),
            actual=len(right_reports),
            detail="cycle counts differ",
        )]
    return [
        Discrepancy(check="isomorphism", case=f"{left.label} vs {right.label}", cycle=a.cycle,
                    expected=a.ind, actual=b.ind, detail=f"{right.label} cycle {b.cycle}")
        for a, b in zip(left_reports, right_reports)
        if a.ind != b.ind
    ]


def _oracle_job(case: RealFormCase) -> Tuple[int, List[Discrepancy]]:
    model = build_model(case)
    checked = 0
    found = []
    for _, table in model.orbits:
        for mu, _ in table:
            for weight in (mu, -mu):
                counted = weight_index(weight, model.k_roots)
                descended = weight_index_bfs(weight, model.k_roots)
                checked += 1
                if counted != descended:
                    found.append(Discrepancy(
                        check="index-oracle",
                        case=case.label,
                        expected=descended,
                        actual=counted,
                        detail=f"weight {weight}",
                    ))
    return checked, found


def index_oracle_sweep(cases: Sequence[RealFormCase], parallel: int | None = 1,
                       progress: bool = False) -> Tuple[int, List[Discrepancy]]:
    """Counting index against simple-reflection descent on every orbit point and its negative."""
    results = run_jobs(_oracle_job, list(cases), parallel, desc="index oracle", progress=progress)
    checked = sum(n for n, _ in results)
    found = [d for _, ds in results for d in ds]
    logger.info("index oracle: %d weights, %d discrepancies", checked, len(found))
    return checked, found
