# ampleness/__init__.py
"""
Concavity and ampleness of base cycles in flag domains.
Import like:
  from ampleness import RealFormCase, CycleParam, ampleness_report, theorem1_eval
"""
from .errors import ConsistencyError, FlagcavError, InputError
from .real_forms import CaseFamily, CycleParam, RealFormCase, SweepBounds, build_model, enumerate_cycles
from .snow_engine import AmplenessReport, Discrepancy, ampleness_report, sweep
from .closed_forms import hook_data, theorem1_eval
from .period_domains import HodgeNumbers, PeriodReport, derive, period_report, theorem2_eval

__all__ = [
    "ConsistencyError",
    "FlagcavError",
    "InputError",
    "CaseFamily",
    "CycleParam",
    "RealFormCase",
    "SweepBounds",
    "build_model",
    "enumerate_cycles",
    "AmplenessReport",
    "Discrepancy",
    "ampleness_report",
    "sweep",
    "hook_data",
    "theorem1_eval",
    "HodgeNumbers",
    "PeriodReport",
    "derive",
    "period_report",
    "theorem2_eval",
]
