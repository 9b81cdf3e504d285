"""
Prime-range scanner.

The range [p_lo, bound] is cut into fixed-width integer chunks. Each worker
sieves its own chunk and tests every (d, p) pair; only exceptional and excluded
pairs come back. Results are merged by sorting on (d, p), so the output does
not depend on the worker count or on completion order.
"""
import itertools
import math
import multiprocessing as mp
import time
from dataclasses import dataclass
from typing import Dict, Iterable, List, Literal, NamedTuple, Optional, Sequence, Tuple

from loguru import logger
from pydantic import BaseModel, ConfigDict, Field, ValidationError, field_validator, model_validator
from tqdm import tqdm

from src.arith.factor import factorize
from src.arith.sieve import primes_in_range
from src.config.configs import (
    QPRAT_CHUNK_WIDTH,
    QPRAT_CROSS_VALIDATE_CAP,
    QPRAT_JOBS,
    QPRAT_MAX_PRIME,
)
from src.criteria.fibmod import is_fibonacci_wieferich
from src.criteria.unitresidue import is_wieferich_base_unit
from src.field.quadfield import QuadraticField, field_invariants, is_fundamental_discriminant
from src.scanner.reference import published_row
from src.utlis.errors import ConfigurationError, EquivalenceViolationError
from src.verdict.decide import CriteriaReport, Exclusion, Mode, Verdict, decide

OutputFormat = Literal["human", "csv", "json"]


class ScanRecord(BaseModel):
    model_config = ConfigDict(frozen=True)

    d: int
    p: int
    verdict: Verdict
    fibonacci_wieferich: Optional[bool] = None
    wieferich_unit: Optional[bool] = None
    period_equal: Optional[bool] = None
    williams_nonzero: Optional[bool] = None
    excluded_reasons: List[Exclusion] = []
    elapsed_ns: int = Field(default=0, ge=0)

    @classmethod
    def from_report(cls, report: CriteriaReport, elapsed_ns: int = 0) -> "ScanRecord":
        return cls(
            d=report.d,
            p=report.p,
            verdict=report.verdict,
            fibonacci_wieferich=report.fibonacci_wieferich,
            wieferich_unit=report.wieferich_unit,
            period_equal=report.period_equal,
            williams_nonzero=report.williams_nonzero,
            excluded_reasons=report.excluded,
            elapsed_ns=elapsed_ns,
        )


class ScanConfig(BaseModel):
    model_config = ConfigDict(frozen=True)

    discriminants: List[int]
    bound: int
    p_lo: int = 3
    mode: Mode = Mode.FAST
    jobs: int = QPRAT_JOBS
    output_format: OutputFormat = "human"
    output_path: Optional[str] = None
    # lift the CrossValidate cap
    force: bool = False
    # record per-pair wall time; off by default so output stays reproducible
    timings: bool = False
    progress: bool = False

    @field_validator("discriminants")
    @classmethod
    def _fundamental(cls, ds: List[int]) -> List[int]:
        bad = [d for d in ds if not is_fundamental_discriminant(d)]
        if bad:
            raise ValueError(f"not fundamental discriminants: {bad}")
        return sorted(set(ds))

    @field_validator("jobs")
    @classmethod
    def _positive_jobs(cls, jobs: int) -> int:
        if jobs < 1:
            raise ValueError(f"worker count must be >= 1, got {jobs}")
        return jobs

    @model_validator(mode="after")
    def _prime_range(self):
        if self.bound < 3:
            raise ValueError(f"bound must be >= 3, got {self.bound}")
        if self.bound > QPRAT_MAX_PRIME:
            raise ValueError(f"bound must be <= {QPRAT_MAX_PRIME}, got {self.bound}")
        if self.p_lo < 3 or self.p_lo > self.bound:
            raise ValueError(f"prime range [{self.p_lo}, {self.bound}] must satisfy 3 <= from <= bound")
        return self

    @classmethod
    def build(cls, **kwargs) -> "ScanConfig":
        """Construct and validate, surfacing every problem as a ConfigurationError."""
        try:
            return cls(**kwargs)
        except ValidationError as e:
            messages = "; ".join(err["msg"] for err in e.errors())
            logger.error("Invalid scan configuration: {}", messages)
            raise ConfigurationError(messages) from e

    @property
    def cross_validate_cap(self) -> int:
        return QPRAT_MAX_PRIME if self.force else QPRAT_CROSS_VALIDATE_CAP


class ScanResult(BaseModel):
    model_config = ConfigDict(frozen=True)

    config: ScanConfig
    exceptional: List[ScanRecord]
    excluded: List[ScanRecord]
    elapsed_s: float


class TableRow(BaseModel):
    model_config = ConfigDict(frozen=True)

    d: int
    primes: List[int]
    excluded: List[int] = []
    published: Optional[List[int]] = None

    @property
    def match(self) -> Optional[bool]:
        # published rows are not always sorted, compare as sets
        if self.published is None:
            return None
        return set(self.primes) == set(self.published)


class _Chunk(NamedTuple):
    lo: int
    hi: int


@dataclass(frozen=True)
class _WorkerState:
    fields: Tuple[QuadraticField, ...]
    mode: Mode
    cap: int
    timings: bool


# per-process state, set by the pool initializer
_STATE: Optional[_WorkerState] = None


def _init_worker(state: _WorkerState) -> None:
    global _STATE
    _STATE = state


def _confirm(field: QuadraticField, p: int, report: CriteriaReport, cap: int) -> CriteriaReport:
    """Re-check a Fast-mode positive with independent criteria before it is emitted."""
    if report.fibonacci_wieferich is None or report.period_equal is not None:
        # decided by the unit criterion alone, or already cross-validated
        return report
    if p <= cap:
        return decide(field, p, Mode.CROSS_VALIDATE)
    checked = report.model_copy(update={"wieferich_unit": is_wieferich_base_unit(field, p).is_wieferich})
    if not checked.is_consistent():
        logger.error("criteria disagree for d={} p={}: {}", field.d, p, checked.model_dump(mode="json"))
        raise EquivalenceViolationError(f"criteria disagree for d={field.d}, p={p}", checked)
    return checked


def _evaluate(field: QuadraticField, p: int, state: _WorkerState) -> Optional[ScanRecord]:
    start = time.perf_counter_ns()
    full = state.mode is Mode.CROSS_VALIDATE and p <= state.cap
    if full or field.d % p == 0 or field.unit.v % p == 0 or field.h % p == 0:
        report = decide(field, p, Mode.CROSS_VALIDATE if full else Mode.FAST)
    elif not is_fibonacci_wieferich(field, p):
        return None
    else:
        report = decide(field, p, Mode.FAST)

    if report.verdict is Verdict.P_RATIONAL:
        return None
    if report.verdict is Verdict.NOT_P_RATIONAL:
        report = _confirm(field, p, report, state.cap)
    elapsed = time.perf_counter_ns() - start if state.timings else 0
    return ScanRecord.from_report(report, elapsed)


def _scan_chunk(chunk: _Chunk) -> List[ScanRecord]:
    state = _STATE
    out = []
    for p in primes_in_range(chunk.lo, chunk.hi):
        for field in state.fields:
            record = _evaluate(field, p, state)
            if record is not None:
                out.append(record)
    logger.debug("chunk [{}, {}] done: {} record(s)", chunk.lo, chunk.hi, len(out))
    return out


def _partition(lo: int, hi: int, width: int) -> List[_Chunk]:
    return [_Chunk(start, min(start + width - 1, hi)) for start in range(lo, hi + 1, width)]


def _context():
    # fork shares the worker state copy-on-write where the platform has it
    try:
        return mp.get_context("fork")
    except ValueError:
        return mp.get_context()


def run_scan(config: ScanConfig) -> ScanResult:
    """Scan every configured discriminant over [p_lo, bound]; exceptional and excluded pairs, sorted."""
    fields = tuple(field_invariants(d) for d in config.discriminants)
    state = _WorkerState(fields, config.mode, config.cross_validate_cap, config.timings)
    chunks = _partition(config.p_lo, config.bound, QPRAT_CHUNK_WIDTH)
    jobs = min(config.jobs, len(chunks))

    if config.mode is Mode.CROSS_VALIDATE and config.bound > state.cap:
        logger.warning(
            "CrossValidate capped at p <= {}; larger primes use Fast mode with confirmed positives (--force lifts the cap)",
            state.cap,
        )
    logger.info(
        "Scanning {} discriminant(s) over [{}, {}]: {} chunk(s), {} worker(s), mode={}",
        len(fields),
        config.p_lo,
        config.bound,
        len(chunks),
        jobs,
        config.mode.value,
    )

    start = time.perf_counter()
    records: List[ScanRecord] = []
    with tqdm(total=len(chunks), desc="scan", unit="chunk", disable=not config.progress) as bar:
        if jobs == 1:
            _init_worker(state)
            for chunk in chunks:
                records.extend(_scan_chunk(chunk))
                bar.update()
        else:
            with _context().Pool(processes=jobs, initializer=_init_worker, initargs=(state,)) as pool:
                for part in pool.imap_unordered(_scan_chunk, chunks):
                    records.extend(part)
                    bar.update()
    elapsed = time.perf_counter() - start

    records.sort(key=lambda r: (r.d, r.p))
    exceptional = [r for r in records if r.verdict is Verdict.NOT_P_RATIONAL]
    excluded = [r for r in records if r.verdict is Verdict.EXCLUDED]
    for r in excluded:
        logger.warning("d={} p={} excluded: {}", r.d, r.p, ", ".join(e.value for e in r.excluded_reasons))
    logger.success(
        "Scan finished in {:.2f}s: {} exceptional, {} excluded", elapsed, len(exceptional), len(excluded)
    )
    return ScanResult(config=config, exceptional=exceptional, excluded=excluded, elapsed_s=elapsed)


def scan(config: ScanConfig) -> List[ScanRecord]:
    """Exceptional primes only (verdict NotPRational), ascending in (d, p)."""
    return run_scan(config).exceptional


def fundamental_discriminants(lo: int, hi: int) -> List[int]:
    return [d for d in range(max(lo, 5), hi + 1) if is_fundamental_discriminant(d)]


def table_rows(result: ScanResult) -> List[TableRow]:
    bound = result.config.bound
    exceptional: Dict[int, List[int]] = {d: [] for d in result.config.discriminants}
    excluded: Dict[int, List[int]] = {d: [] for d in result.config.discriminants}
    for r in result.exceptional:
        exceptional[r.d].append(r.p)
    for r in result.excluded:
        excluded[r.d].append(r.p)

    rows = []
    for d in result.config.discriminants:
        published = published_row(d, bound)
        rows.append(
            TableRow(
                d=d,
                primes=exceptional[d],
                excluded=excluded[d],
                published=None if published is None else list(published),
            )
        )
    return rows


def reproduce_table(
    d_max: int,
    bound: int,
    jobs: int = QPRAT_JOBS,
    mode: Mode = Mode.FAST,
    force: bool = False,
    progress: bool = False,
) -> List[TableRow]:
    """One row per fundamental discriminant <= d_max, all scanned in a single pass."""
    ds = fundamental_discriminants(5, d_max)
    if not ds:
        return []
    config = ScanConfig.build(discriminants=ds, bound=bound, jobs=jobs, mode=mode, force=force, progress=progress)
    return table_rows(run_scan(config))


def multi_scan(
    ds: Sequence[int],
    p_lo: int,
    p_hi: int,
    jobs: int = QPRAT_JOBS,
    progress: bool = False,
) -> List[Tuple[int, List[int]]]:
    """(p, failing discriminants) for every prime in [p_lo, p_hi] at which some field is not p-rational."""
    if not ds:
        return []
    config = ScanConfig.build(discriminants=list(ds), p_lo=max(p_lo, 3), bound=p_hi, jobs=jobs, progress=progress)
    result = run_scan(config)
    by_prime = sorted(result.exceptional, key=lambda r: (r.p, r.d))
    return [(p, [r.d for r in group]) for p, group in itertools.groupby(by_prime, key=lambda r: r.p)]


def _squarefree_kernel(n: int) -> int:
    return math.prod(q for q, e in factorize(n) if e % 2)


def real_subfield_discriminants(generators: Iterable[int]) -> List[int]:
    """Discriminants of Q(sqrt n) for n the squarefree part of every non-empty product of generators."""
    gens = list(generators)
    out = set()
    for size in range(1, len(gens) + 1):
        for subset in itertools.combinations(gens, size):
            n = _squarefree_kernel(math.prod(subset))
            if n > 1:
                out.add(n if n % 4 == 1 else 4 * n)
    return sorted(out)
