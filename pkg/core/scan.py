"""
FidelityEq - Scan Jobs
Haar-random pair scans: the inequality F^AB <= F^A and agreement between
the numeric and four-condition verdicts.
"""

import uuid
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from datetime import datetime
from enum import Enum
from typing import Any, Dict, List, Optional, Tuple

from .config import get_config
from .constants import DEFAULT_TOL, GAP_FLOOR
from .exceptions import DimensionMismatch, InvalidParams, logger
from .batch import evaluate_block, sample_pair_block
from .conditions import analyze_pair
from .generator import haar_sample
from .utils import check_tolerance, split_into_batches


# ===================================================================
# RECORDS
# ===================================================================

@dataclass(frozen=True)
class ScanRecord:
    seed: int
    dim_b: int
    lam: float
    f_global: float
    f_local: float
    gap: float
    verdict_numeric: bool
    verdict_conditions: bool

    @property
    def violation(self) -> bool:
        return self.gap < GAP_FLOOR

    @property
    def disagreement(self) -> bool:
        return self.verdict_numeric != self.verdict_conditions

    def to_row(self) -> Tuple[Any, ...]:
        """Values in CSV_COLUMNS order"""
        return (
            self.seed,
            self.dim_b,
            self.lam,
            self.f_global,
            self.f_local,
            self.gap,
            self.verdict_numeric,
            self.verdict_conditions,
        )


@dataclass(frozen=True)
class ScanSummary:
    samples: int
    dim_b: int
    seed: int
    min_gap: float
    max_gap: float
    equality_hits: int
    disagreements: int
    violations: int

    @property
    def passed(self) -> bool:
        return self.violations == 0 and self.disagreements == 0

    def to_dict(self) -> Dict[str, Any]:
        return {
            "samples": self.samples,
            "dimB": self.dim_b,
            "seed": self.seed,
            "minGap": self.min_gap,
            "maxGap": self.max_gap,
            "equalityHits": self.equality_hits,
            "disagreements": self.disagreements,
            "violations": self.violations,
        }


def scan_pair(dim_b: int, pair_seed: int, tol: float = DEFAULT_TOL) -> ScanRecord:
    """psi and phi are streams 0 and 1 of pair_seed"""
    psi = haar_sample(dim_b, pair_seed, index=0)
    phi = haar_sample(dim_b, pair_seed, index=1)
    analysis = analyze_pair(psi, phi, tol)
    return ScanRecord(
        seed=int(pair_seed),
        dim_b=int(dim_b),
        lam=float(analysis.lam),
        f_global=float(analysis.fidelities.f_global),
        f_local=float(analysis.fidelities.f_local),
        gap=float(analysis.fidelities.gap),
        verdict_numeric=bool(analysis.verdict_numeric),
        verdict_conditions=bool(analysis.report.verdict),
    )


def scan_block(dim_b: int, seed: int, start: int, stop: int, tol: float = DEFAULT_TOL) -> List[ScanRecord]:
    """
    Pairs seed + start .. seed + stop - 1 evaluated as one numpy block.
    Pairs the block flags as needing care go through scan_pair.
    """
    block = sample_pair_block(dim_b, seed, start, stop)
    evaluation = evaluate_block(block, tol)
    gaps = evaluation.gap

    records = []
    for i, pair_seed in enumerate(block.seeds):
        if evaluation.needs_exact[i]:
            records.append(scan_pair(dim_b, pair_seed, tol))
            continue
        records.append(ScanRecord(
            seed=pair_seed,
            dim_b=block.dim_b,
            lam=float(evaluation.lam[i]),
            f_global=float(evaluation.f_global[i]),
            f_local=float(evaluation.f_local[i]),
            gap=float(gaps[i]),
            verdict_numeric=bool(evaluation.verdict_numeric[i]),
            verdict_conditions=bool(evaluation.verdict_conditions[i]),
        ))
    return records


def _run_batch(task: Tuple[int, int, float, int, int]) -> List[ScanRecord]:
    """Worker entry point; module level so the process pool can pickle it"""
    dim_b, seed, tol, start, stop = task
    return scan_block(dim_b, seed, start, stop, tol)


# ===================================================================
# JOB
# ===================================================================

class JobStatus(str, Enum):
    PENDING = "pending"
    RUNNING = "running"
    COMPLETED = "completed"
    FAILED = "failed"


class ScanJob:
    """Tek scan işi. Batch'ler sırayla toplanır, worker sayısından bağımsız"""

    def __init__(
        self,
        dim_b: int,
        samples: int,
        seed: int,
        tol: float = DEFAULT_TOL,
        workers: Optional[int] = None,
        batch_size: Optional[int] = None,
    ):
        if int(dim_b) != dim_b or dim_b < 2:
            raise DimensionMismatch(f"dimB must be an integer >= 2, got {dim_b}")
        if int(samples) != samples or samples < 1:
            raise InvalidParams(f"samples must be >= 1, got {samples}")

        config = get_config()
        self.id = uuid.uuid4().hex[:8]
        self.dim_b = int(dim_b)
        self.samples = int(samples)
        self.seed = int(seed)
        self.tol = check_tolerance(tol)
        self.workers = max(1, workers if workers is not None else config.scan_workers)
        self.batch_size = max(1, batch_size if batch_size is not None else config.scan_batch_size)

        self.status = JobStatus.PENDING
        self.progress: float = 0.0
        self.records: List[ScanRecord] = []
        self.error: Optional[str] = None
        self.created_at = datetime.now()
        self.completed_at: Optional[datetime] = None

    def _tasks(self) -> List[Tuple[int, int, float, int, int]]:
        return [
            (self.dim_b, self.seed, self.tol, batch.start, batch.stop)
            for batch in split_into_batches(self.samples, self.batch_size)
        ]

    def _collect(self, batch: List[ScanRecord]) -> None:
        for record in batch:
            if record.violation:
                logger.warning(
                    f"[Job {self.id}] Inequality violated: seed={record.seed} "
                    f"fGlobal={record.f_global!r} fLocal={record.f_local!r} gap={record.gap:.3e}"
                )
            if record.disagreement:
                logger.warning(
                    f"[Job {self.id}] Verdicts disagree: seed={record.seed} gap={record.gap:.3e} "
                    f"numeric={record.verdict_numeric} conditions={record.verdict_conditions}"
                )
        self.records.extend(batch)
        self.progress = len(self.records) / self.samples

    def run(self) -> List[ScanRecord]:
        self.status = JobStatus.RUNNING
        tasks = self._tasks()
        logger.info(
            f"[Job {self.id}] Scanning {self.samples} pairs, dimB={self.dim_b}, seed={self.seed}, "
            f"{len(tasks)} batches, {self.workers} workers"
        )
        try:
            if self.workers > 1 and len(tasks) > 1:
                with ProcessPoolExecutor(max_workers=self.workers) as pool:
                    for batch in pool.map(_run_batch, tasks):
                        self._collect(batch)
            else:
                for task in tasks:
                    self._collect(_run_batch(task))
        except Exception as e:
            self.status = JobStatus.FAILED
            self.error = str(e)
            logger.error(f"[Job {self.id}] Failed: {e}")
            raise

        self.status = JobStatus.COMPLETED
        self.completed_at = datetime.now()
        elapsed = (self.completed_at - self.created_at).total_seconds()
        logger.info(f"[Job {self.id}] Completed in {elapsed:.2f}s")
        return self.records

    def summary(self) -> ScanSummary:
        gaps = [r.gap for r in self.records]
        return ScanSummary(
            samples=len(self.records),
            dim_b=self.dim_b,
            seed=self.seed,
            min_gap=min(gaps) if gaps else 0.0,
            max_gap=max(gaps) if gaps else 0.0,
            equality_hits=sum(1 for r in self.records if r.verdict_numeric),
            disagreements=sum(1 for r in self.records if r.disagreement),
            violations=sum(1 for r in self.records if r.violation),
        )


def run_scan(
    dim_b: int,
    samples: int,
    seed: int,
    tol: float = DEFAULT_TOL,
    workers: Optional[int] = None,
    batch_size: Optional[int] = None,
) -> Tuple[List[ScanRecord], ScanSummary]:
    job = ScanJob(dim_b, samples, seed, tol, workers=workers, batch_size=batch_size)
    records = job.run()
    return records, job.summary()
