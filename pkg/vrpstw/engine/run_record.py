"""
RunRecord: the persisted outcome of one solver run.

Records are written as indented JSON with sorted keys. Everything except
`wall_time` is a pure function of the instance, the algorithm
configuration and the seed, so two runs with the same inputs produce
byte-identical files once wall_time is dropped.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any

from vrpstw.engine.encoding import Chromosome, format_chromosome, parse_chromosome
from vrpstw.engine.pareto import Archive
from vrpstw.errors import ParseError
from vrpstw.model.evaluation import ObjectiveVector


@dataclass(frozen=True, order=True)
class ArchiveRecord:
    """One archive member as persisted: objective vector plus gene string."""

    objectives: ObjectiveVector
    chromosome: Chromosome


@dataclass(frozen=True)
class RunRecord:
    instance: str
    algorithm: str
    seed: int
    config: dict[str, Any] = field(default_factory=dict)
    evaluations: int = 0
    iterations: int = 0
    wall_time: float = 0.0
    archive: tuple[ArchiveRecord, ...] = ()
    error: str | None = None

    @classmethod
    def from_archive(
        cls,
        archive: Archive,
        *,
        instance: str,
        algorithm: str,
        seed: int,
        config: dict[str, Any],
        evaluations: int,
        iterations: int,
        wall_time: float,
    ) -> RunRecord:
        members = sorted(
            ArchiveRecord(entry.objectives, entry.chromosome) for entry in archive
        )
        return cls(
            instance=instance,
            algorithm=algorithm,
            seed=seed,
            config=dict(config),
            evaluations=evaluations,
            iterations=iterations,
            wall_time=wall_time,
            archive=tuple(members),
        )

    @property
    def ok(self) -> bool:
        return self.error is None

    @property
    def front(self) -> list[ObjectiveVector]:
        return [member.objectives for member in self.archive]

    @property
    def evaluations_per_second(self) -> float:
        if self.wall_time <= 0:
            return 0.0
        return self.evaluations / self.wall_time

    def to_dict(self) -> dict[str, Any]:
        return {
            "instance": self.instance,
            "algorithm": self.algorithm,
            "seed": self.seed,
            "config": self.config,
            "evaluations": self.evaluations,
            "iterations": self.iterations,
            "wall_time": self.wall_time,
            "error": self.error,
            "archive": [
                {
                    "objectives": list(member.objectives),
                    "chromosome": format_chromosome(member.chromosome),
                }
                for member in self.archive
            ],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True) + "\n"

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> RunRecord:
        try:
            archive = tuple(
                ArchiveRecord(
                    ObjectiveVector(
                        float(item["objectives"][0]),
                        int(item["objectives"][1]),
                        float(item["objectives"][2]),
                        int(item["objectives"][3]),
                    ),
                    parse_chromosome(item["chromosome"]),
                )
                for item in data.get("archive", [])
            )
            return cls(
                instance=str(data["instance"]),
                algorithm=str(data["algorithm"]),
                seed=int(data["seed"]),
                config=dict(data.get("config", {})),
                evaluations=int(data["evaluations"]),
                iterations=int(data["iterations"]),
                wall_time=float(data.get("wall_time", 0.0)),
                archive=archive,
                error=data.get("error"),
            )
        except (KeyError, IndexError, TypeError, ValueError) as exc:
            raise ParseError(f"malformed run record: {exc}") from None

    @classmethod
    def from_json(cls, text: str) -> RunRecord:
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise ParseError(exc.msg, line=exc.lineno) from None
        if not isinstance(data, dict):
            raise ParseError("run record must be a JSON object")
        return cls.from_dict(data)

    def write(self, path: Path) -> None:
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(self.to_json(), encoding="utf-8")

    @classmethod
    def read(cls, path: Path) -> RunRecord:
        try:
            text = path.read_text(encoding="utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"{path} is not UTF-8 text: {exc.reason}") from None
        return cls.from_json(text)
