"""Wall-clock comparison of the two power-sum expansion routes.

Each repetition rebuilds the full symbolic-rank chi polynomial from
scratch (fresh memo tables, no result caching), so the numbers reflect
cold-start cost of the chosen method rather than cache luck.  Timings are
taken inside the worker with perf_counter; when a timeout is given, runs
execute in a child process that can be killed cleanly.
"""

from __future__ import annotations

import json
import multiprocessing
import platform
import statistics
import time
from dataclasses import dataclass, field

from .algebra import Polynomial
from .eulerchi import METHODS, build_chi_polynomial
from .symmfun import PowerSumCache

DEFAULT_MATRIX_CUTOFF = 16


@dataclass
class MethodTiming:
    method: str
    seconds: list = field(default_factory=list)
    terms: int | None = None
    timed_out: bool = False
    note: str | None = None

    @property
    def median_seconds(self) -> float | None:
        if not self.seconds:
            return None
        return statistics.median(self.seconds)


@dataclass
class BenchReport:
    dim: int
    repetitions: int
    timeout: float | None
    machine: str
    timings: list = field(default_factory=list)
    agreement: bool | None = None

    def to_json(self) -> str:
        return json.dumps(
            {
                "dim": self.dim,
                "repetitions": self.repetitions,
                "timeout": self.timeout,
                "machine": self.machine,
                "methods": [
                    {
                        "method": t.method,
                        "seconds": t.seconds,
                        "median_seconds": t.median_seconds,
                        "terms": t.terms,
                        "timed_out": t.timed_out,
                        "note": t.note,
                    }
                    for t in self.timings
                ],
                "agreement": self.agreement,
            }
        )

    def to_text(self) -> str:
        lines = [
            f"chi power-sum benchmark: dim={self.dim}, symbolic rank, "
            f"{self.repetitions} repetition(s)"
        ]
        for t in self.timings:
            if t.note and not t.seconds:
                lines.append(f"  {t.method:<10} {t.note}")
                continue
            runs = ", ".join(f"{s:.4f}" for s in t.seconds)
            med = f"{t.median_seconds:.4f}s" if t.median_seconds is not None else "-"
            extra = " (timed out)" if t.timed_out else ""
            lines.append(
                f"  {t.method:<10} median {med}  runs [{runs}]  terms {t.terms}{extra}"
            )
        if self.agreement is None:
            lines.append("agreement: not comparable (fewer than two finished methods)")
        elif self.agreement:
            lines.append("agreement: methods produced identical polynomials")
        else:
            lines.append("agreement: RESULTS DIFFER")
        lines.append(f"machine: {self.machine}")
        return "\n".join(lines)


def _build_once(dim: int, method: str):
    cache = PowerSumCache()
    start = time.perf_counter()
    poly = build_chi_polynomial(None, dim, method, cache)
    return time.perf_counter() - start, poly


def _bench_worker(conn, dim: int, method: str):
    elapsed, poly = _build_once(dim, method)
    conn.send((elapsed, poly.to_json()))
    conn.close()


def _build_once_with_timeout(dim: int, method: str, timeout: float):
    ctx = multiprocessing.get_context()
    parent, child = ctx.Pipe(duplex=False)
    proc = ctx.Process(target=_bench_worker, args=(child, dim, method))
    proc.start()
    child.close()
    try:
        if parent.poll(timeout):
            elapsed, payload = parent.recv()
            proc.join()
            return elapsed, Polynomial.from_json(payload)
        proc.terminate()
        proc.join()
        return None, None
    finally:
        parent.close()


def run_bench(
    dim: int,
    methods=METHODS,
    repetitions: int = 3,
    timeout: float | None = None,
    matrix_cutoff: int = DEFAULT_MATRIX_CUTOFF,
) -> BenchReport:
    """Time the requested methods building the chi polynomial at dim.

    The matrix route grows several-fold in cost with each dimension, so
    it is skipped (with a note) above matrix_cutoff unless the caller
    raises the cutoff explicitly.
    """
    if repetitions < 1:
        raise ValueError(f"repetitions must be positive, got {repetitions}")
    for m in methods:
        if m not in METHODS:
            raise ValueError(f"unknown method {m!r}, expected one of {METHODS}")
    machine = (
        f"{platform.platform()} "
        f"{platform.python_implementation()} {platform.python_version()}"
    )
    report = BenchReport(dim, repetitions, timeout, machine)
    results: dict[str, Polynomial] = {}
    for method in methods:
        timing = MethodTiming(method)
        report.timings.append(timing)
        if method == "matrix" and dim > matrix_cutoff:
            timing.note = (
                f"skipped: dim {dim} above matrix cutoff {matrix_cutoff} "
                f"(cost grows several-fold per dimension; raise the cutoff to force)"
            )
            continue
        for _ in range(repetitions):
            if timeout is None:
                elapsed, poly = _build_once(dim, method)
            else:
                elapsed, poly = _build_once_with_timeout(dim, method, timeout)
            if elapsed is None:
                timing.timed_out = True
                timing.note = f"timed out after {timeout}s"
                break
            timing.seconds.append(elapsed)
            timing.terms = len(poly)
            if method in results and results[method] != poly:
                report.agreement = False
            results[method] = poly
    finished = list(results.values())
    if report.agreement is None and len(finished) >= 2:
        first = finished[0]
        report.agreement = all(p == first for p in finished[1:])
    return report
