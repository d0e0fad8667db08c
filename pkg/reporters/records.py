# reporters/records.py
"""
Flat records written by the CLI. Field names of OutputRecord are part of the
JSON contract: case, params, cycle, primed, ind, dim_cycle, codim, ampleness,
concavity_degree, method, extremal_count, witness.
"""
from enum import Enum
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, computed_field

from ampleness.closed_forms import HookData
from ampleness.period_domains import PeriodReport
from ampleness.real_forms import CaseModel, CycleParam
from ampleness.snow_engine import AmplenessReport, CaseSummary, Discrepancy


class Method(str, Enum):
    ENGINE = "engine"
    CLOSED = "closed"
    BOTH = "both"


class OutputRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    case: str
    params: Dict[str, int]
    cycle: List[int]
    primed: bool = False
    ind: int
    dim_cycle: int
    codim: int
    ampleness: int
    concavity_degree: int
    method: Method
    extremal_count: Optional[int] = None
    witness: Optional[List[int]] = None

    @classmethod
    def from_report(cls, report: AmplenessReport, method: Method = Method.ENGINE) -> "OutputRecord":
        return cls(
            case=report.case,
            params=report.params,
            cycle=report.cycle,
            primed=report.primed,
            ind=report.ind,
            dim_cycle=report.dim_cycle,
            codim=report.codim,
            ampleness=report.ampleness,
            concavity_degree=report.concavity_degree,
            method=method,
            extremal_count=report.extremal_count,
            witness=report.witness,
        )

    @classmethod
    def from_closed(cls, model: CaseModel, cycle: CycleParam, ind: int) -> "OutputRecord":
        """Record of a closed-form value; the dimensions come from the case model."""
        ampleness = model.dim_cycle - ind
        return cls(
            case=model.case.family.value,
            params=model.case.params_dict(),
            cycle=cycle.as_signed_list(),
            primed=cycle.primed,
            ind=ind,
            dim_cycle=model.dim_cycle,
            codim=model.codim,
            ampleness=ampleness,
            concavity_degree=model.codim + ampleness + 1,
            method=Method.CLOSED,
        )


class Enumeration(BaseModel):
    """enumerate --summary: the rows of one case and their summary."""

    records: List[OutputRecord]
    summary: CaseSummary


class PeriodRecord(OutputRecord):
    """OutputRecord of the derived case plus the Hodge-theoretic data it came from."""

    weight: int
    hodge: List[int]
    group: str
    p: Optional[int] = None
    q: Optional[int] = None
    ell: Optional[int] = None
    m_e: int
    m_o: int
    h_o: Optional[int] = None
    h_e: Optional[int] = None
    marked: List[int]
    theorem2: int
    cycle_dim_gq: Optional[int] = None

    @classmethod
    def from_period(cls, report: PeriodReport) -> "PeriodRecord":
        return cls(
            case=report.case,
            params=report.params,
            cycle=report.cycle,
            ind=report.ind,
            dim_cycle=report.dim_cycle,
            codim=report.codim,
            ampleness=report.ampleness,
            concavity_degree=report.concavity_degree,
            method=Method.BOTH,
            extremal_count=report.extremal_count,
            witness=report.witness,
            weight=report.weight,
            hodge=report.hodge,
            group=report.group,
            p=report.p,
            q=report.q,
            ell=report.ell,
            m_e=report.m_e,
            m_o=report.m_o,
            h_o=report.h_o,
            h_e=report.h_e,
            marked=report.marked,
            theorem2=report.theorem2,
            cycle_dim_gq=report.cycle_dim_gq,
        )


class HookRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    p: int
    q: int
    j: List[int]
    h_plus: int
    h_minus: int
    i_plus: int
    i_minus: int
    diagram: str = ""

    @classmethod
    def from_hook(cls, hook: HookData, diagram: str = "") -> "HookRecord":
        return cls(p=hook.p, q=hook.q, j=list(hook.subset), h_plus=hook.h_plus, h_minus=hook.h_minus,
                   i_plus=hook.i_plus, i_minus=hook.i_minus, diagram=diagram)


# ---------- Verify ----------
class SweepCount(BaseModel):
    name: str
    checked: int
    discrepancies: int
    skipped: int = 0


class VerifySummary(BaseModel):
    max_rank: int
    parallel: int
    sweeps: List[SweepCount] = []
    discrepancies: List[Discrepancy] = []

    @computed_field
    @property
    def checked(self) -> int:
        return sum(s.checked for s in self.sweeps)

    @computed_field
    @property
    def ok(self) -> bool:
        return not self.discrepancies

    def add(self, name: str, checked: int, found: List[Discrepancy], skipped: int = 0) -> None:
        self.sweeps.append(SweepCount(name=name, checked=checked, discrepancies=len(found), skipped=skipped))
        self.discrepancies.extend(found)
