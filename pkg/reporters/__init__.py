# reporters/__init__.py
"""
Output records and their renderings (JSON, rich table, CSV, Young diagram text).
Import like:
  from reporters import OutputRecord, emit, render_young
"""
from .records import Enumeration, HookRecord, Method, OutputRecord, PeriodRecord, SweepCount, VerifySummary
from .render import OutputFormat, emit, records_frame, render_csv, render_json, render_table, render_young

__all__ = [
    "Enumeration",
    "HookRecord",
    "Method",
    "OutputRecord",
    "PeriodRecord",
    "SweepCount",
    "VerifySummary",
    "OutputFormat",
    "emit",
    "records_frame",
    "render_csv",
    "render_json",
    "render_table",
    "render_young",
]
