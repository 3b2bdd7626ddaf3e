"""
Seeded experiment campaigns.

A campaign runs every (instance, algorithm, run index) combination once,
with a seed derived from the base seed, and writes one RunRecord file per
run under <out>/runs/<instance>/<algorithm>/. Runs may execute in a
process pool; records are collected and written in task order, so the
output never depends on scheduling.

Campaign files are YAML mappings:

    instances: [instances/]        # files or directories of .vrp files
    algorithms: [MOLSD, UOBX+2EX]
    runs: 10
    base_seed: 7
    out: results
    workers: 4
    ga:
      pop_size: 500
      stagnation_limit: 10000
      p_mut: 0.1
      max_iterations: null
"""

from __future__ import annotations

import logging
from collections.abc import Iterator, Mapping, Sequence
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

import yaml

from vrpstw.engine.event_bus import EventBus
from vrpstw.engine.genetic import GaConfig, ga_run
from vrpstw.engine.molsd import ALGORITHM as MOLSD
from vrpstw.engine.molsd import molsd_run
from vrpstw.engine.run_record import RunRecord
from vrpstw.errors import ConfigError
from vrpstw.harness.generation import INSTANCE_SUFFIX
from vrpstw.harness.seeds import derive_seed
from vrpstw.instances.io import load_instance
from vrpstw.model.instance import Instance

logger = logging.getLogger(__name__)

MUTATION_VARIANT = "UOBX+2EX"
ALGORITHMS = (MOLSD, "PMX", "OBX", "UOBX", MUTATION_VARIANT)
ALIASES = {
    "UOBX^2EX": MUTATION_VARIANT,
    "UOBX∧2EX": MUTATION_VARIANT,
    "UOBX_2EX": MUTATION_VARIANT,
}
DEFAULT_P_MUT = 0.1

CAMPAIGN_KEYS = {"instances", "algorithms", "runs", "base_seed", "out", "workers", "ga"}
GA_KEYS = {"pop_size", "stagnation_limit", "p_mut", "max_iterations"}


def canonical_algorithm(name: str) -> str:
    """Resolve an algorithm name or alias, case-insensitively."""
    upper = name.strip().upper()
    upper = ALIASES.get(upper, upper)
    if upper not in ALGORITHMS:
        raise ConfigError(
            f"Unknown algorithm {name!r}; choose from {', '.join(ALGORITHMS)}"
        )
    return upper


@dataclass(frozen=True)
class GaSettings:
    """GA parameters shared by every GA variant of a campaign."""

    pop_size: int = 500
    stagnation_limit: int = 10_000
    p_mut: float = DEFAULT_P_MUT
    max_iterations: int | None = None

    def config_for(self, algorithm: str) -> GaConfig:
        """
        GaConfig of one GA variant. Only the mutation variant uses p_mut;
        the crossover-only variants run without mutation.
        """
        if algorithm == MUTATION_VARIANT:
            crossover, p_mut = "UOBX", self.p_mut
        else:
            crossover, p_mut = algorithm, 0.0
        return GaConfig(
            crossover=crossover,
            pop_size=self.pop_size,
            p_mut=p_mut,
            stagnation_limit=self.stagnation_limit,
            max_iterations=self.max_iterations,
        )


@dataclass(frozen=True)
class Campaign:
    instances: tuple[Path, ...]
    algorithms: tuple[str, ...]
    runs: int = 100
    base_seed: int = 0
    out: Path = Path("results")
    workers: int = 1
    ga: GaSettings = field(default_factory=GaSettings)

    def __post_init__(self) -> None:
        if not self.instances:
            raise ConfigError("A campaign needs at least one instance path")
        if not self.algorithms:
            raise ConfigError("A campaign needs at least one algorithm")
        if self.runs < 1:
            raise ConfigError(f"runs must be >= 1, got {self.runs}")
        if self.workers < 1:
            raise ConfigError(f"workers must be >= 1, got {self.workers}")
        resolved = tuple(
            dict.fromkeys(canonical_algorithm(name) for name in self.algorithms)
        )
        object.__setattr__(self, "algorithms", resolved)
        # every GA variant must build a valid GaConfig
        for algorithm in resolved:
            if algorithm != MOLSD:
                self.ga.config_for(algorithm)


@dataclass(frozen=True)
class RunTask:
    """Everything a worker process needs for one run."""

    instance: Instance
    algorithm: str
    index: int
    seed: int
    ga: GaSettings
    path: Path


# ---------------------------------------------------------------------
# configuration
# ---------------------------------------------------------------------


def load_campaign_file(path: Path) -> dict[str, Any]:
    """
    Load a campaign YAML file into a plain mapping.

    Raises:
        ConfigError: if the file is not a mapping or has unknown keys.
    """
    try:
        with path.open("r", encoding="utf-8") as fh:
            data = yaml.safe_load(fh)
    except yaml.YAMLError as exc:
        raise ConfigError(f"Invalid YAML in {path}: {exc}") from None
    except UnicodeDecodeError as exc:
        raise ConfigError(f"{path} is not UTF-8 text: {exc.reason}") from None

    if data is None:
        data = {}
    if not isinstance(data, dict):
        raise ConfigError("Campaign file must be a YAML mapping (dict)")
    unknown = set(data) - CAMPAIGN_KEYS
    if unknown:
        raise ConfigError(f"Unknown campaign keys: {sorted(unknown)}")
    ga = data.get("ga") or {}
    if not isinstance(ga, dict):
        raise ConfigError("'ga' must be a mapping")
    unknown = set(ga) - GA_KEYS
    if unknown:
        raise ConfigError(f"Unknown ga keys: {sorted(unknown)}")
    return data


def _as_list(value: Any, key: str) -> list[Any]:
    if isinstance(value, str | Path):
        return [value]
    if not isinstance(value, list):
        raise ConfigError(f"'{key}' must be a list")
    return value


def _as_int(value: Any, key: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(f"'{key}' must be an integer, got {value!r}")
    return value


def build_campaign(settings: Mapping[str, Any]) -> Campaign:
    """Build a Campaign from a merged mapping of file values and CLI flags."""
    ga_block = dict(settings.get("ga") or {})
    ga_defaults = GaSettings()
    max_iterations = ga_block.get("max_iterations")
    p_mut = ga_block.get("p_mut", ga_defaults.p_mut)
    if isinstance(p_mut, bool) or not isinstance(p_mut, int | float):
        raise ConfigError(f"'p_mut' must be a number, got {p_mut!r}")
    ga = GaSettings(
        pop_size=_as_int(ga_block.get("pop_size", ga_defaults.pop_size), "pop_size"),
        stagnation_limit=_as_int(
            ga_block.get("stagnation_limit", ga_defaults.stagnation_limit),
            "stagnation_limit",
        ),
        p_mut=float(p_mut),
        max_iterations=(
            None
            if max_iterations is None
            else _as_int(max_iterations, "max_iterations")
        ),
    )
    return Campaign(
        instances=tuple(
            Path(item) for item in _as_list(settings.get("instances", []), "instances")
        ),
        algorithms=tuple(
            str(item)
            for item in _as_list(
                settings.get("algorithms", list(ALGORITHMS)), "algorithms"
            )
        ),
        runs=_as_int(settings.get("runs", 100), "runs"),
        base_seed=_as_int(settings.get("base_seed", 0), "base_seed"),
        out=Path(settings.get("out", "results")),
        workers=_as_int(settings.get("workers", 1), "workers"),
        ga=ga,
    )


def instance_files(paths: Sequence[Path]) -> list[Path]:
    """Expand directories to their sorted instance files."""
    files: list[Path] = []
    for path in paths:
        if path.is_dir():
            files.extend(sorted(path.glob(f"*{INSTANCE_SUFFIX}")))
        else:
            files.append(path)
    return files


def load_instances(paths: Sequence[Path]) -> list[Instance]:
    """
    Load every instance of the campaign.

    Raises:
        ConfigError: if no instance file is found or two files share a name.
        ParseError: for a malformed instance file.
    """
    files = instance_files(paths)
    if not files:
        raise ConfigError("No instance files found")
    instances = [load_instance(path) for path in files]
    names = [instance.name for instance in instances]
    duplicates = sorted({name for name in names if names.count(name) > 1})
    if duplicates:
        raise ConfigError(f"Instance names must be unique: {duplicates}")
    return instances


# ---------------------------------------------------------------------
# execution
# ---------------------------------------------------------------------


def record_path(out: Path, instance: str, algorithm: str, index: int) -> Path:
    return out / "runs" / instance / algorithm / f"run_{index:03d}.json"


def plan_runs(campaign: Campaign, instances: Sequence[Instance]) -> list[RunTask]:
    """All runs of a campaign in instance, algorithm, index order."""
    return [
        RunTask(
            instance=instance,
            algorithm=algorithm,
            index=index,
            seed=derive_seed(campaign.base_seed, instance.name, algorithm, index),
            ga=campaign.ga,
            path=record_path(campaign.out, instance.name, algorithm, index),
        )
        for instance in instances
        for algorithm in campaign.algorithms
        for index in range(campaign.runs)
    ]


def solve(
    instance: Instance,
    algorithm: str,
    seed: int,
    ga: GaSettings,
    event_bus: EventBus | None = None,
) -> RunRecord:
    """Run one solver to termination."""
    if algorithm == MOLSD:
        return molsd_run(instance, seed, event_bus)
    return ga_run(instance, ga.config_for(algorithm), seed, event_bus)


def execute_run(task: RunTask) -> RunRecord:
    """
    Execute one task. A failing solver yields a record carrying the error
    instead of raising.
    """
    try:
        return solve(task.instance, task.algorithm, task.seed, task.ga)
    except Exception as exc:
        logger.warning(
            "Run %s/%s/%d failed: %s",
            task.instance.name,
            task.algorithm,
            task.index,
            exc,
        )
        config: dict[str, Any] = {}
        if task.algorithm != MOLSD:
            config = task.ga.config_for(task.algorithm).to_dict()
        return RunRecord(
            instance=task.instance.name,
            algorithm=task.algorithm,
            seed=task.seed,
            config=config,
            error=f"{type(exc).__name__}: {exc}",
        )


def _results(campaign: Campaign, tasks: Sequence[RunTask]) -> Iterator[RunRecord]:
    """Records in task order, yielded as soon as each one is ready."""
    if campaign.workers == 1:
        yield from map(execute_run, tasks)
        return
    with ProcessPoolExecutor(max_workers=campaign.workers) as pool:
        yield from pool.map(execute_run, tasks)


def run_campaign(
    campaign: Campaign, instances: Sequence[Instance] | None = None
) -> list[RunRecord]:
    """
    Execute a campaign and write its RunRecords. Each record is written as
    soon as its run finishes, so an interrupted campaign keeps every run
    completed before the interruption.

    Raises:
        ConfigError / ParseError: if the instances cannot be loaded.
        OSError: if an instance cannot be read or a record cannot be written.
    """
    if instances is None:
        instances = load_instances(campaign.instances)
    tasks = plan_runs(campaign, instances)
    logger.info(
        "Campaign: %d instances x %d algorithms x %d runs = %d runs on %d worker(s)",
        len(instances),
        len(campaign.algorithms),
        campaign.runs,
        len(tasks),
        campaign.workers,
    )

    records: list[RunRecord] = []
    for task, record in zip(tasks, _results(campaign, tasks), strict=True):
        record.write(task.path)
        logger.debug("Wrote %s", task.path)
        records.append(record)
    failed = sum(1 for record in records if not record.ok)
    logger.info("Campaign done: %d records written, %d failed", len(records), failed)
    return records
