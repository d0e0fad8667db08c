# main.py
"""
flagcav command line.

Usage:
    python main.py ampleness su --p 3 --q 4 --cycle 2,3,5
    python main.py enumerate sp-real --r 3 --format csv
    python main.py period --weight 3 --hodge 1,101
    python main.py hook --p 3 --q 4 --j 2,5,6
    python main.py verify --max-rank 4 --parallel 2

Exit codes: 0 success, 2 input error, 3 internal consistency failure.
"""
import logging
from contextlib import contextmanager
from typing import Iterator, Optional

import typer
from rich.console import Console
from rich.logging import RichHandler
from rich.markup import escape

from ampleness.closed_forms import hook_data, theorem1_eval, verify_sweep, young_sweep
from ampleness.errors import ConsistencyError, FlagcavError
from ampleness.period_domains import HodgeNumbers, period_report, period_sweep
from ampleness.real_forms import CaseFamily, CycleParam, RealFormCase, SweepBounds, build_model
from ampleness.snow_engine import ampleness_report, compare_sweeps, index_oracle_sweep, summarize, sweep
from ampleness.utils import parse_int_list, resolve_parallel
from config.settings import load_settings, settings
from reporters import (
    Enumeration,
    HookRecord,
    Method,
    OutputFormat,
    OutputRecord,
    PeriodRecord,
    VerifySummary,
    emit,
    render_table,
    render_young,
)

# ---------- Consoles & logging ----------
console = Console()
err_console = Console(stderr=True)
logger = logging.getLogger("flagcav")

app = typer.Typer(add_completion=False, help="Ampleness and concavity of base cycles in flag domains.")


def configure_logging(level: str) -> None:
    logging.basicConfig(
        level=level.upper(),
        format="%(name)s: %(message)s",
        handlers=[RichHandler(console=err_console, show_path=False, rich_tracebacks=False)],
        force=True,
    )


@app.callback()
def main(log_level: Optional[str] = typer.Option(None, "--log-level", help="debug, info, warning, error")):
    configure_logging(log_level or settings.LOG_LEVEL)


@contextmanager
def command_errors() -> Iterator[None]:
    """Map library errors onto exit codes 2 and 3."""
    try:
        yield
    except FlagcavError as exc:
        err_console.print(f"[bold red]error:[/bold red] {escape(str(exc))}")
        raise typer.Exit(exc.exit_code)
    except typer.Exit:
        raise
    except Exception as exc:
        logger.exception("unexpected failure")
        err_console.print(f"[bold red]internal error:[/bold red] {escape(str(exc))}")
        raise typer.Exit(ConsistencyError.exit_code)


# ---------- Shared options ----------
P_OPT = typer.Option(None, "--p", help="p of su/so/sp(p,q)")
Q_OPT = typer.Option(None, "--q", help="q of su/so/sp(p,q)")
M_OPT = typer.Option(None, "--m", help="m of sl(m,ℝ) / sl(m,ℍ)")
R_OPT = typer.Option(None, "--r", help="r of sp(r,ℝ)")
FORMAT_OPT = typer.Option(OutputFormat.TABLE, "--format", help="json, table or csv")


def _case(token: str, p, q, m, r) -> RealFormCase:
    return RealFormCase.of(token, p=p, q=q, m=m, r=r)


# ---------- ampleness ----------
@app.command("ampleness")
def cmd_ampleness(
    case: str = typer.Argument(..., help=", ".join(f.value for f in CaseFamily)),
    p: Optional[int] = P_OPT,
    q: Optional[int] = Q_OPT,
    m: Optional[int] = M_OPT,
    r: Optional[int] = R_OPT,
    cycle: Optional[str] = typer.Option(None, "--cycle", help="sorted 𝐣, e.g. 2,3,5; 2,-3 is a sign variant"),
    primed: bool = typer.Option(False, "--primed", help="primed so(2p,·) cycle"),
    sign_variant: bool = typer.Option(False, "--sign-variant", help="(j,−k) variant of so(2,·)/so(4,·)"),
    method: Method = typer.Option(Method.ENGINE, "--method", help="engine, closed or both"),
    fmt: OutputFormat = FORMAT_OPT,
):
    """dim C − a and the concavity degree of one base cycle."""
    with command_errors():
        real_form = _case(case, p, q, m, r)
        base = CycleParam.from_signed_list(parse_int_list(cycle), primed=primed, sign_variant=sign_variant)
        if method is Method.CLOSED:
            record = OutputRecord.from_closed(build_model(real_form), base, theorem1_eval(real_form, base))
        else:
            report = ampleness_report(real_form, base)
            if method is Method.BOTH:
                closed = theorem1_eval(real_form, base)
                if closed != report.ind:
                    raise ConsistencyError(
                        f"{real_form.label} {base.label}: closed form {closed}, engine {report.ind}",
                        {"closed": closed, "engine": report.ind},
                    )
            record = OutputRecord.from_report(report, method)
        emit(record, fmt, console, title=real_form.label)


# ---------- enumerate ----------
@app.command("enumerate")
def cmd_enumerate(
    case: str = typer.Argument(..., help=", ".join(f.value for f in CaseFamily)),
    p: Optional[int] = P_OPT,
    q: Optional[int] = Q_OPT,
    m: Optional[int] = M_OPT,
    r: Optional[int] = R_OPT,
    summary: bool = typer.Option(False, "--summary", help="append min/max ind and pseudoconvex count"),
    fmt: OutputFormat = FORMAT_OPT,
):
    """One record per base cycle of a case, in lexicographic order."""
    with command_errors():
        real_form = _case(case, p, q, m, r)
        reports = sweep([real_form])
        records = [OutputRecord.from_report(report) for report in reports]
        if not summary:
            emit(records, fmt, console, title=real_form.label)
            return
        result = Enumeration(records=records, summary=summarize(reports))
        if fmt is OutputFormat.JSON:
            emit(result, fmt, console)
        else:
            emit(records, fmt, console, title=real_form.label)
            emit([result.summary], fmt, console, title="summary")


# ---------- period ----------
@app.command("period")
def cmd_period(
    weight: int = typer.Option(..., "--weight", help="weight n of the Hodge structure"),
    hodge: str = typer.Option(..., "--hodge", help="h^(n,0),h^(n-1,1),…,h^(⌈n/2⌉,⌊n/2⌋)"),
    dim: bool = typer.Option(False, "--dim", help="also compute the cycle dimension in G/Q"),
    fmt: OutputFormat = FORMAT_OPT,
):
    """Period domain: derived group and cycle, closed value and engine value."""
    with command_errors():
        report = period_report(HodgeNumbers.parse(weight, hodge), with_dim=dim)
        emit(PeriodRecord.from_period(report), fmt, console, title=f"period domain, weight {weight}")


# ---------- hook ----------
@app.command("hook")
def cmd_hook(
    p: int = typer.Option(..., "--p"),
    q: int = typer.Option(..., "--q"),
    j: str = typer.Option(..., "--j", help="sorted 𝐣 ⊂ {1..p+q} of size p"),
    fmt: OutputFormat = FORMAT_OPT,
):
    """h±, I± and the labeled Young diagram of 𝐣."""
    with command_errors():
        subset = parse_int_list(j)
        hook = hook_data(subset, p, q)
        diagram = render_young(subset, p, q)
        record = HookRecord.from_hook(hook, diagram)
        if fmt is OutputFormat.TABLE:
            console.print(render_table([record.model_copy(update={"diagram": ""})], title=f"p={p}, q={q}"))
            console.out(diagram, highlight=False)
        else:
            emit(record, fmt, console)


# ---------- verify ----------
@app.command("verify")
def cmd_verify(
    max_rank: Optional[int] = typer.Option(None, "--max-rank", help="sweep bound (default FLAGCAV_MAX_RANK)"),
    parallel: Optional[int] = typer.Option(None, "--parallel", help="worker processes (default: all cores)"),
    quiet: bool = typer.Option(False, "--quiet", help="no progress bars"),
    fmt: OutputFormat = FORMAT_OPT,
):
    """Closed forms, index oracle, Young hooks, isomorphisms and period domains against the engine."""
    with command_errors():
        current = load_settings()
        rank = max_rank if max_rank is not None else current.FLAGCAV_MAX_RANK
        workers = resolve_parallel(parallel if parallel is not None else current.FLAGCAV_PARALLEL)
        bounds = SweepBounds.from_max_rank(rank)
        progress = not quiet
        logger.info("verify: max rank %d, %d workers, bounds %s", rank, workers, bounds)

        result = VerifySummary(max_rank=rank, parallel=workers)
        checked, found = verify_sweep(bounds, parallel=workers, progress=progress)
        result.add("closed-forms", checked, found)
        checked, found = index_oracle_sweep(bounds.oracle_cases(), parallel=workers, progress=progress)
        result.add("index-oracle", checked, found)
        checked, found = young_sweep(bounds.hook_max)
        result.add("young-hooks", checked, found)

        pairs = [(RealFormCase(CaseFamily.SL_REAL, (4,)), RealFormCase(CaseFamily.SO_ODD_ODD, (1, 1)))]
        pairs += [
            (RealFormCase(CaseFamily.SP_QUAT, (a, b)), RealFormCase(CaseFamily.SO_ODD_ODD, (a, b)))
            for b in range(1, min(6, rank))
            for a in range(1, min(b, min(6, rank) - b) + 1)
        ]
        found = [d for left, right in pairs for d in compare_sweeps(left, right)]
        result.add("isomorphisms", len(pairs), found)

        checked, skipped, found = period_sweep(bounds.period_max_dim, draws=current.PERIOD_RANDOM_DRAWS,
                                               seed=current.RANDOM_SEED, parallel=workers, progress=progress)
        result.add("period-domains", checked, found, skipped=skipped)

        if fmt is OutputFormat.JSON:
            emit(result, fmt, console)
        else:
            emit(result.sweeps, fmt, console, title=f"verify (max rank {rank})")
            if result.discrepancies:
                err_console.print(render_table(result.discrepancies, title="discrepancies"))
        if not result.ok:
            raise ConsistencyError(f"{len(result.discrepancies)} discrepancies over {result.checked} checks")


if __name__ == "__main__":
    app()
