# ampleness/utils.py
import os
import re
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations
from typing import Callable, Iterable, Iterator, List, Sequence, Tuple, TypeVar

from tqdm import tqdm

from ampleness.errors import InputError

T = TypeVar("T")
R = TypeVar("R")

INT_LIST_REGEX = re.compile(r"^\s*-?\d+(\s*,\s*-?\d+)*\s*$")


def parse_int_list(text: str | None) -> List[int]:
    """Parse "2,5,6" into [2, 5, 6]. Empty or None gives []."""
    if text is None or not text.strip():
        return []
    if not INT_LIST_REGEX.match(text):
        raise InputError(f"expected a comma-separated integer list, got {text!r}")
    return [int(tok) for tok in text.split(",")]


def complement(subset: Iterable[int], n: int) -> Tuple[int, ...]:
    """Sorted complement of subset inside {1..n}."""
    taken = set(subset)
    return tuple(i for i in range(1, n + 1) if i not in taken)


def subsets_of_size(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """All size-k subsets of {1..n} in lexicographic order."""
    return combinations(range(1, n + 1), k)


def all_subsets(n: int) -> Iterator[Tuple[int, ...]]:
    """All subsets of {1..n}, by size then lexicographically."""
    for k in range(n + 1):
        yield from subsets_of_size(n, k)


def check_subset(subset: Iterable[int], n: int, size: int | None = None) -> Tuple[int, ...]:
    """Validate a subset of {1..n} (optionally of a fixed size) and return it sorted."""
    items = tuple(subset)
    ordered = tuple(sorted(set(items)))
    if len(ordered) != len(items):
        raise InputError(f"cycle entries must be distinct, got {list(items)}")
    if ordered and (ordered[0] < 1 or ordered[-1] > n):
        raise InputError(f"cycle entries must lie in 1..{n}, got {list(items)}")
    if size is not None and len(ordered) != size:
        raise InputError(f"cycle must have exactly {size} entries, got {len(ordered)}")
    return ordered


def format_subset(subset: Iterable[int]) -> str:
    items = list(subset)
    return "{" + ",".join(str(i) for i in items) + "}" if items else "∅"


# ---------- Job execution ----------
def resolve_parallel(parallel: int | None) -> int:
    return max(1, parallel or os.cpu_count() or 1)


def run_jobs(func: Callable[[T], R], jobs: Sequence[T], parallel: int | None = 1,
             desc: str = "jobs", progress: bool = False) -> List[R]:
    """
    Map func over jobs, inline for parallel=1 and on a process pool otherwise.
    Results keep the order of jobs at every parallelism level.
    """
    workers = resolve_parallel(parallel)
    if workers == 1 or len(jobs) < 2:
        return [func(job) for job in tqdm(jobs, desc=desc, disable=not progress, leave=False)]
    chunksize = max(1, len(jobs) // (workers * 8))
    with ProcessPoolExecutor(max_workers=workers) as pool:
        mapped = pool.map(func, jobs, chunksize=chunksize)
        return list(tqdm(mapped, total=len(jobs), desc=desc, disable=not progress, leave=False))
