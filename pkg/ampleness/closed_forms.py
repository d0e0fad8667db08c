# ampleness/closed_forms.py
"""
Hook-length combinatorics of a cycle 𝐣 ⊂ {1..p+q} and the closed-form value
of dim C − a for every classical case.

Order 𝐣 as j_1 < ... < j_p and its complement as j_{p+1} < ... < j_{p+q}:

    h⁺ = min{ b−a : a ≤ p < b, j_a < j_b }   (0 if there is no such pair)
    h⁻ = max{ b−a : a ≤ p < b, j_a > j_b }   (0 if there is no such pair)
    I⁺ = h⁺ − 1 + p
    I⁻ = (p+q) − h⁻ − 1 + q

A branch only enters a minimum when its pair set is nonempty.
"""
import logging
from dataclasses import dataclass
from typing import Callable, List, Optional, Tuple

from ampleness.errors import ConsistencyError, InputError
from ampleness.real_forms import (
    CaseFamily,
    CycleParam,
    RealFormCase,
    SO_EVEN_FAMILIES,
    SweepBounds,
    cases_within,
    validate_cycle,
)
from ampleness.snow_engine import Discrepancy, ampleness_report, case_jobs, sweep
from ampleness.utils import check_subset, complement, subsets_of_size

logger = logging.getLogger("flagcav.closed_forms")


# ---------- Hook data ----------
@dataclass(frozen=True)
class HookData:
    p: int
    q: int
    subset: Tuple[int, ...]
    h_plus: int
    h_minus: int

    @property
    def i_plus(self) -> int:
        return self.h_plus - 1 + self.p

    @property
    def i_minus(self) -> int:
        return (self.p + self.q) - self.h_minus - 1 + self.q

    @property
    def plus_present(self) -> bool:
        return self.h_plus > 0

    @property
    def minus_present(self) -> bool:
        return self.h_minus > 0


def _labels(subset, p: int, q: int) -> Tuple[int, ...]:
    if p < 1 or q < 1:
        raise InputError(f"hook data need p ≥ 1 and q ≥ 1, got p={p}, q={q}")
    chosen = check_subset(subset, p + q, size=p)
    return chosen + complement(chosen, p + q)


def hook_data(subset, p: int, q: int) -> HookData:
    j = _labels(subset, p, q)
    plus, minus = [], []
    for a in range(1, p + 1):
        for b in range(p + 1, p + q + 1):
            (plus if j[a - 1] < j[b - 1] else minus).append(b - a)
    return HookData(p, q, j[:p], min(plus, default=0), max(minus, default=0))


@dataclass(frozen=True)
class YoungBox:
    column: int
    row: int
    column_label: int
    row_label: int
    hook: int
    colored: bool


def young_grid(subset, p: int, q: int) -> List[List[YoungBox]]:
    """
    The q×p rectangle, top row first. Columns carry j_1..j_p, rows carry
    j_{p+q} (top) down to j_{p+1} (bottom). Hook = arm + leg + 1.
    """
    j = _labels(subset, p, q)
    rows = []
    for height, b in enumerate(range(p + q, p, -1)):
        row = []
        for a in range(1, p + 1):
            arm = p - a
            leg = q - 1 - height
            row.append(YoungBox(a, b, j[a - 1], j[b - 1], arm + leg + 1, j[a - 1] < j[b - 1]))
        rows.append(row)
    return rows


def hook_data_young(subset, p: int, q: int) -> Tuple[int, int]:
    """(min hook over colored boxes, max hook over uncolored boxes), 0 when a kind is absent."""
    boxes = [box for row in young_grid(subset, p, q) for box in row]
    colored = [box.hook for box in boxes if box.colored]
    plain = [box.hook for box in boxes if not box.colored]
    return min(colored, default=0), max(plain, default=0)


# ---------- Closed forms ----------
def present_min(hook: HookData, plus_value: int, minus_value: int) -> int:
    values = []
    if hook.plus_present:
        values.append(plus_value)
    if hook.minus_present:
        values.append(minus_value)
    if not values:
        raise ConsistencyError(f"cycle {list(hook.subset)} has neither hook branch", {"p": hook.p, "q": hook.q})
    return min(values)


def theorem1_eval(case: RealFormCase, cycle: CycleParam) -> int:
    validate_cycle(case, cycle)
    f = case.family
    if f is CaseFamily.SL_REAL:
        return (case.params[0] - 1) // 2
    if f is CaseFamily.SL_QUAT:
        return case.params[0]
    if f is CaseFamily.SP_REAL:
        size = len(cycle.subset)
        return min(size, case.params[0] - size)

    p, q = case.p, case.q
    if f is CaseFamily.SO_ODD_ODD and p == 0:
        return q
    if f is CaseFamily.SO_EVEN_ODD and q == 0:
        return p - 1

    hook = hook_data(cycle.subset, p, q)
    if f is CaseFamily.SU:
        return present_min(hook, hook.h_plus - 1, (p + q) - hook.h_minus - 1)
    if f in (CaseFamily.SO_ODD_ODD, CaseFamily.SP_QUAT):
        return present_min(hook, hook.i_plus, hook.i_minus)

    # so(2p, ·)
    if p == 1:
        j = cycle.subset[0]
        return j - 1 if f is CaseFamily.SO_EVEN_ODD else min(j - 1, q - 1)
    if p == 2:
        j, k = cycle.subset
        if k <= q + 1:
            return j + 1 if j + 1 != k else j
    if f is CaseFamily.SO_EVEN_ODD:
        return present_min(hook, hook.i_plus - 1, hook.i_minus)
    return present_min(hook, hook.i_plus - 1, hook.i_minus - 1)


def su_complement(case: RealFormCase, cycle: CycleParam) -> Tuple[RealFormCase, CycleParam]:
    """su(p,q) with 𝐣  ↔  su(q,p) with the complement of 𝐣; both carry the same value."""
    if case.family is not CaseFamily.SU:
        raise InputError(f"complement pairing is defined for su(p,q) only, got {case.label}")
    p, q = case.params
    return RealFormCase(CaseFamily.SU, (q, p)), CycleParam(complement(cycle.subset, p + q))


# ---------- Verification ----------
Evaluator = Callable[[RealFormCase, CycleParam], int]


def verify_sweep(bounds: SweepBounds, parallel: int | None = 1, evaluator: Optional[Evaluator] = None,
                 progress: bool = False) -> Tuple[int, List[Discrepancy]]:
    """
    Compare the closed form with the engine on every cycle inside bounds.
    Also checks that plain and primed so(2p,·) cycles agree and that the
    (j,−k) sign variants of so(2,·)/so(4,·) give the closed-form value.
    Returns (instances checked, discrepancies).
    """
    evaluate = evaluator or theorem1_eval
    cases = cases_within(bounds)
    jobs = case_jobs(cases)
    reports = sweep(cases, parallel=parallel, progress=progress)
    found: List[Discrepancy] = []
    plain_values = {}
    for (case, cycle), report in zip(jobs, reports):
        expected = evaluate(case, cycle)
        if expected != report.ind:
            found.append(Discrepancy(check="theorem1", case=case.label, cycle=report.cycle,
                                     primed=cycle.primed, expected=expected, actual=report.ind,
                                     detail=f"witness {report.witness}"))
        if case.family in SO_EVEN_FAMILIES:
            key = (case, cycle.subset)
            if not cycle.primed:
                plain_values[key] = report.ind
            elif plain_values.get(key) != report.ind:
                found.append(Discrepancy(check="primed", case=case.label, cycle=report.cycle, primed=True,
                                         expected=plain_values.get(key), actual=report.ind))

    variants = [
        (case, CycleParam(cycle.subset, primed=cycle.primed, sign_variant=True))
        for case, cycle in jobs
        if case.family in SO_EVEN_FAMILIES and case.p in (1, 2)
    ]
    for case, cycle in variants:
        report = ampleness_report(case, cycle)
        expected = evaluate(case, cycle)
        if expected != report.ind:
            found.append(Discrepancy(check="sign-variant", case=case.label, cycle=report.cycle,
                                     primed=cycle.primed, expected=expected, actual=report.ind))

    checked = len(jobs) + len(variants)
    logger.info("closed-form sweep: %d instances, %d discrepancies", checked, len(found))
    return checked, found


def young_sweep(max_total: int) -> Tuple[int, List[Discrepancy]]:
    """hook_data against the Young-diagram reading for every 𝐣 with p+q ≤ max_total."""
    checked = 0
    found = []
    for total in range(2, max_total + 1):
        for p in range(1, total):
            q = total - p
            for subset in subsets_of_size(total, p):
                hook = hook_data(subset, p, q)
                young = hook_data_young(subset, p, q)
                checked += 1
                if (hook.h_plus, hook.h_minus) != young:
                    found.append(Discrepancy(check="young", case=f"p={p},q={q}", cycle=list(subset),
                                             detail=f"hook {(hook.h_plus, hook.h_minus)} vs young {young}"))
    logger.info("young sweep: %d subsets, %d discrepancies", checked, len(found))
    return checked, found
