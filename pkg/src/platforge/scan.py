"""Scaling scan of the homological dilatation over the family tilde(b_g)."""

from __future__ import annotations

import csv
import io
import json
import math
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

from . import __version__
from .braids import family_b, tilde
from .errors import DomainError
from .representations import burau_at_minus_one
from .spectral import spectral_radius

SCHEMA_VERSION = "platforge.scan/1"
CSV_COLUMNS = ("g", "lambda_hom", "g_log_lambda", "millis")
DIGITS = 12


@dataclass(frozen=True)
class ScanRow:
    g: int
    lambda_hom: float
    g_log_lambda: float
    millis: Optional[float] = None
    # lambda_hom bounds the true dilatation from below; equality is not established
    lower_bound: bool = True

    def csv_fields(self) -> list[str]:
        return [
            str(self.g),
            f"{self.lambda_hom:.{DIGITS}f}",
            f"{self.g_log_lambda:.{DIGITS}f}",
            "" if self.millis is None else f"{self.millis:.1f}",
        ]


@dataclass
class ScalingReport:
    rows: list[ScanRow]
    config: dict = field(default_factory=dict)

    def window(self) -> tuple[float, float]:
        vals = [r.g_log_lambda for r in self.rows]
        return min(vals), max(vals)

    def ratio(self) -> float:
        lo, hi = self.window()
        return hi / lo

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(CSV_COLUMNS)
        for r in self.rows:
            w.writerow(r.csv_fields())
        return buf.getvalue()

    def to_json(self) -> str:
        lo, hi = self.window()
        payload = {
            "schema": SCHEMA_VERSION,
            "version": __version__,
            "config": self.config,
            "window": [round(lo, DIGITS), round(hi, DIGITS)],
            "rows": [
                {
                    "g": r.g,
                    "lambda_hom": round(r.lambda_hom, DIGITS),
                    "g_log_lambda": round(r.g_log_lambda, DIGITS),
                    "millis": r.millis,
                    "lower_bound": r.lower_bound,
                }
                for r in self.rows
            ],
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"


def scan_row(g: int, timing: bool = False) -> ScanRow:
    start = time.perf_counter()
    bound = spectral_radius(burau_at_minus_one(tilde(family_b(g))))
    lam = max(1.0, bound.value)
    millis = (time.perf_counter() - start) * 1000 if timing else None
    return ScanRow(g, lam, g * math.log(lam), millis)


def _row_task(args):
    return scan_row(*args)


def scaling_scan(g_min: int, g_max: int, jobs: int = 1, timing: bool = False) -> ScalingReport:
    """One row per genus in [g_min, g_max], sorted by g whatever the execution order."""
    if not (isinstance(g_min, int) and isinstance(g_max, int)):
        raise DomainError("genus bounds must be integers")
    if g_min < 2:
        raise DomainError(f"the scan starts at g >= 2, got g_min = {g_min}")
    if g_max < g_min:
        raise DomainError(f"g_max ({g_max}) must be >= g_min ({g_min})")
    tasks = [(g, timing) for g in range(g_min, g_max + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            rows = list(pool.map(_row_task, tasks))
    else:
        rows = [_row_task(t) for t in tasks]
    rows.sort(key=lambda r: r.g)
    config = {"g_min": g_min, "g_max": g_max, "jobs": jobs, "timing": timing}
    return ScalingReport(rows, config)


__all__ = ["ScalingReport", "ScanRow", "scaling_scan"]
