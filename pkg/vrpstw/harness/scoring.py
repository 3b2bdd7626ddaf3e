"""
Score tables from persisted RunRecords.

For every instance a reference front is built from the archives of all
successful runs of all algorithms. Each run is then scored with d1 and d2
against that reference, and the per-(instance, algorithm) means are
tabulated. The best mean per instance and metric is flagged; an
(instance, algorithm) pair with no usable record shows up as a blank row
rather than an error.

Outputs:
    scores.csv       long table, one row per (instance, algorithm)
    runs.csv         one row per run
    d1.csv, d2.csv   wide tables, best value marked with a trailing †
    evaluations.csv  wide table of mean evaluation counts
"""

from __future__ import annotations

import logging
import math
from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass
from pathlib import Path

import pandas as pd

from vrpstw.engine.run_record import RunRecord
from vrpstw.errors import InputError
from vrpstw.harness.campaign import ALGORITHMS
from vrpstw.metrics.fronts import Front
from vrpstw.metrics.quality import average_and_worst, build_reference

logger = logging.getLogger(__name__)

BEST_MARK = "†"
SCORE_COLUMNS = [
    "instance",
    "algorithm",
    "mean_d1",
    "mean_d2",
    "mean_evaluations",
    "best_d1_flag",
    "best_d2_flag",
]


@dataclass(frozen=True)
class ScoreTables:
    runs: pd.DataFrame
    scores: pd.DataFrame

    def wide(self, column: str, mark_best: str | None = None) -> pd.DataFrame:
        """One row per instance, one column per algorithm."""
        table = self.scores.pivot(index="instance", columns="algorithm", values=column)
        table = table.reindex(columns=_algorithm_order(self.scores["algorithm"]))
        flags = None
        if mark_best is not None:
            flags = self.scores.pivot(
                index="instance", columns="algorithm", values=mark_best
            ).reindex(columns=table.columns)

        def cell(instance: str, algorithm: str) -> str:
            value = table.at[instance, algorithm]
            if pd.isna(value):
                return ""
            text = f"{value:.4f}" if column != "mean_evaluations" else f"{value:.1f}"
            if flags is not None and flags.at[instance, algorithm] == 1:
                text += BEST_MARK
            return text

        rendered = pd.DataFrame(
            [[cell(i, a) for a in table.columns] for i in table.index],
            index=table.index,
            columns=table.columns,
        )
        rendered.columns.name = None
        return rendered

    def write(self, out: Path) -> list[Path]:
        out.mkdir(parents=True, exist_ok=True)
        written = {
            "scores.csv": self.scores,
            "runs.csv": self.runs,
        }
        paths: list[Path] = []
        for name, frame in written.items():
            path = out / name
            frame.to_csv(path, index=False)
            paths.append(path)
        for name, column, flag in (
            ("d1.csv", "mean_d1", "best_d1_flag"),
            ("d2.csv", "mean_d2", "best_d2_flag"),
            ("evaluations.csv", "mean_evaluations", None),
        ):
            path = out / name
            self.wide(column, flag).to_csv(path)
            paths.append(path)
        return paths


def _algorithm_order(names: Sequence[str] | pd.Series) -> list[str]:
    present = list(dict.fromkeys(names))
    known = [name for name in ALGORITHMS if name in present]
    return known + sorted(name for name in present if name not in ALGORITHMS)


def load_records(root: Path) -> list[RunRecord]:
    """Every RunRecord file below root, in sorted path order."""
    paths = sorted(path for path in root.rglob("*.json") if path.is_file())
    return [RunRecord.read(path) for path in paths]


def score_runs(records: Sequence[RunRecord]) -> pd.DataFrame:
    """One row per run: instance, algorithm, seed, d1, d2, evaluations."""
    by_instance: dict[str, list[RunRecord]] = defaultdict(list)
    for record in records:
        by_instance[record.instance].append(record)

    rows: list[dict[str, object]] = []
    for instance in sorted(by_instance):
        usable = [r for r in by_instance[instance] if r.ok and r.archive]
        reference = (
            build_reference(Front.from_record(r) for r in usable) if usable else None
        )
        if reference is None:
            logger.warning("No usable runs for %s; its scores stay blank", instance)
        for record in by_instance[instance]:
            d1 = d2 = evaluations = math.nan
            if reference is not None and record.ok and record.archive:
                d1, d2 = average_and_worst(Front.from_record(record), reference)
                evaluations = float(record.evaluations)
            rows.append(
                {
                    "instance": instance,
                    "algorithm": record.algorithm,
                    "seed": record.seed,
                    "d1": d1,
                    "d2": d2,
                    "evaluations": evaluations,
                    "error": record.error or "",
                }
            )
    return pd.DataFrame(
        rows,
        columns=["instance", "algorithm", "seed", "d1", "d2", "evaluations", "error"],
    )


def summarize(
    runs: pd.DataFrame, algorithms: Sequence[str] | None = None
) -> pd.DataFrame:
    """
    Per-(instance, algorithm) means over runs, over the full grid of
    instances and algorithms, with best-per-instance flags.
    """
    algorithm_names = list(algorithms or _algorithm_order(runs["algorithm"]))
    grid = pd.MultiIndex.from_product(
        [sorted(runs["instance"].unique()), algorithm_names],
        names=["instance", "algorithm"],
    )
    means = (
        runs.groupby(["instance", "algorithm"])
        .agg(
            mean_d1=("d1", "mean"),
            mean_d2=("d2", "mean"),
            mean_evaluations=("evaluations", "mean"),
        )
        .reindex(grid)
        .reset_index()
    )
    # the mean of d1 may round above the mean of d2 when the two coincide
    means["mean_d1"] = means["mean_d1"].where(
        means["mean_d1"] <= means["mean_d2"], means["mean_d2"]
    )
    for metric in ("d1", "d2"):
        column = f"mean_{metric}"
        best = means.groupby("instance")[column].transform("min")
        means[f"best_{metric}_flag"] = (
            (means[column] == best) & means[column].notna()
        ).astype(int)
    return means[SCORE_COLUMNS]


def score_records(
    records: Sequence[RunRecord], algorithms: Sequence[str] | None = None
) -> ScoreTables:
    runs = score_runs(records)
    return ScoreTables(runs=runs, scores=summarize(runs, algorithms))


def best_share(
    scores: pd.DataFrame,
    algorithm: str,
    instances: Sequence[str],
    metric: str = "d1",
) -> float:
    """
    Fraction of the given instances on which the algorithm holds the best
    mean for the metric. Ties count for every tied algorithm.

    Raises:
        InputError: if the algorithm has no row for any of the instances.
    """
    rows = scores[
        (scores["algorithm"] == algorithm) & scores["instance"].isin(list(instances))
    ]
    if rows.empty:
        raise InputError(f"No scores for {algorithm} on {sorted(instances)}")
    return float(rows[f"best_{metric}_flag"].mean())
